#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "qrep/quandle.hpp"

using namespace qrep;

TEST_CASE("permutations") {
  Permutation const a({1, 2, 0});
  Permutation const b({1, 0, 2});
  CHECK((a * b).images() == std::vector<element_index>{2, 1, 0});
  CHECK(a.order() == 3);
  CHECK(b.order() == 2);
  CHECK(a * a.inverse() == Permutation::identity(3));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidInput);
}

TEST_CASE("permutation groups") {
  PermGroup const s3(3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  PermGroup const c3(3, {Permutation({1, 2, 0})});
  CHECK(c3.order() == 3);
  CHECK(c3.is_abelian());
  CHECK(c3.contains(Permutation({2, 0, 1})));
  CHECK_FALSE(c3.contains(Permutation({1, 0, 2})));
}

TEST_CASE("axiom violations are reported in order") {
  CHECK_FALSE(check_quandle_axioms({{0, 1}, {0, 1}}).has_value());

  auto v = check_quandle_axioms({{1, 1}, {0, 1}});
  REQUIRE(v);
  CHECK(v->axiom == QuandleAxiom::Idempotence);
  CHECK(v->describe() == "IdempotenceViolation(0)");

  v = check_quandle_axioms({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  REQUIRE(v);
  CHECK(v->axiom == QuandleAxiom::LeftInvertibility);

  v = check_quandle_axioms({{0, 5}, {0, 1}});
  REQUIRE(v);
  CHECK(v->axiom == QuandleAxiom::Range);

  // Idempotent with bijective rows but not self-distributive.
  OperationTable const bad{{0, 1, 2}, {2, 1, 0}, {1, 0, 2}};
  v = check_quandle_axioms(bad);
  REQUIRE(v);
  CHECK(v->axiom == QuandleAxiom::Distributivity);
  REQUIRE(v->witness.size() == 3);
  auto const i = v->witness[0], j = v->witness[1], l = v->witness[2];
  CHECK(bad[i][bad[j][l]] != bad[bad[i][j]][bad[i][l]]);
  CHECK_THROWS_AS(Quandle(bad), QuandleAxiomViolation);
}

TEST_CASE("trivial quandles") {
  for (std::size_t k = 1; k <= 5; ++k) {
    auto const q = trivial_quandle(k);
    CHECK(q.is_trivial());
    CHECK(orbits(q).size() == k);
    CHECK(inner_group(q).order() == 1);
  }
}

TEST_CASE("conjugation quandle of S3") {
  auto const q = conjugation_quandle(fixture::s3_multiplication());
  CHECK(q.size() == 6);
  auto const orbs = orbits(q);
  REQUIRE(orbs.size() == 3);
  std::vector<std::size_t> sizes;
  for (auto const& o : orbs) {
    sizes.push_back(o.size());
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  // Inn(Conj(S3)) = S3 / Z(S3) = S3.
  CHECK(inner_group(q).order() == 6);
  CHECK_FALSE(inner_group(q).is_abelian());
}

TEST_CASE("conjugation quandle rejects non-groups") {
  OperationTable const not_assoc{{0, 1, 2}, {1, 0, 0}, {2, 2, 0}};
  CHECK_THROWS_AS(conjugation_quandle(not_assoc), NotAGroup);
  CHECK_THROWS_AS(conjugation_quandle({{0, 0}, {0, 1}}), NotAGroup);
  // Z/2 with identity 1 is a group; its conjugation quandle is trivial.
  CHECK(conjugation_quandle({{1, 0}, {0, 1}}).is_trivial());
}

TEST_CASE("dihedral quandles") {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto const q = fixture::dihedral(n);
    CHECK(orbits(q).size() == (n % 2 ? 1u : 2u));
  }
}

TEST_CASE("orbits are invariant under relabelling") {
  std::mt19937_64 rng(2);
  auto const      q = conjugation_quandle(fixture::s3_multiplication());
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<element_index> sigma(q.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    auto const r = fixture::relabel(q, sigma);
    CHECK(inner_group(r).order() == inner_group(q).order());
    auto const a = orbit_indices(q);
    auto const b = orbit_indices(r);
    for (element_index x = 0; x < q.size(); ++x) {
      for (element_index y = 0; y < q.size(); ++y) {
        CHECK((a[x] == a[y]) == (b[sigma[x]] == b[sigma[y]]));
      }
    }
  }
}
