#include <catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qrep/qnm.hpp"
#include "qrep/reptheory.hpp"

using namespace qrep;

namespace {

  CycloRep rho22(Cyclo lambda = 1, Cyclo beta = 1) {
    return rho_alb({2, 2}, {2, 1, std::move(lambda), std::move(beta)});
  }

  std::vector<element_index> all(Quandle const& q) {
    std::vector<element_index> v(q.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

}  // namespace

TEST_CASE("representation validation") {
  auto const q = build_qnm(2, 2);
  CycloMatrix const a{{1, 0}, {0, -1}};
  CycloMatrix const b{{0, 1}, {1, 0}};
  CHECK_NOTHROW(validate_rep(q, std::vector<CycloMatrix>{a, -a, b, -b}));
  CHECK_THROWS_AS(validate_rep(q, std::vector<CycloMatrix>{a, a, b, b}), RelationViolation);
  CHECK_THROWS_AS(validate_rep(q, std::vector<CycloMatrix>{a, -a, b, CycloMatrix(2, 2)}),
                  NotInvertible);
  CHECK_THROWS_AS(validate_rep(q, std::vector<CycloMatrix>{a, -a, b}), DimensionMismatch);
}

TEST_CASE("characters") {
  auto const q   = build_qnm(2, 2);
  auto const chi = character_from_orbit_values<Cyclo>(q, {Cyclo(2), Cyclo(-1)});
  CHECK(chi(1) == Cyclo(2));
  CHECK(chi(3) == Cyclo(-1));
  CHECK_NOTHROW(validate_rep(q, character_rep(q, chi).images()));
  CHECK_THROWS_AS(character_from_orbit_values<Cyclo>(q, {Cyclo(1), Cyclo(0)}), ZeroValue);
  CHECK_THROWS_AS(character_from_orbit_values<Cyclo>(q, {Cyclo(1)}), DimensionMismatch);
  CHECK_THROWS_AS(
      character_from_element_values<Cyclo>(q, {Cyclo(1), Cyclo(2), Cyclo(3), Cyclo(3)}),
      NotConstantOnOrbit);
  // A function that is not orbit-constant violates the relation in dimension 1.
  CHECK_THROWS_AS(validate_rep(q, std::vector<CycloMatrix>{CycloMatrix{{1}}, CycloMatrix{{2}},
                                                            CycloMatrix{{1}}, CycloMatrix{{1}}}),
                  RelationViolation);
}

TEST_CASE("permutation representations are completely reducible") {
  auto const q = conjugation_quandle(fixture::s3_multiplication());
  auto const rep = permutation_rep(q, all(q));
  CHECK(is_completely_reducible(rep));
  CHECK_NOTHROW(validate_rep(q, rep.images()));
  auto const orbs = orbits(q);
  auto const sub  = permutation_rep(q, orbs[1]);
  CHECK(sub.dim() == orbs[1].size());
  CHECK_THROWS_AS(permutation_rep(q, {orbs[1].front()}), NotOrbitClosed);
}

TEST_CASE("unipotent representation") {
  auto const q   = trivial_quandle(2);
  auto const rep = fixture::unipotent(q);
  auto const cr  = complete_reducibility(rep);
  CHECK_FALSE(cr.completely_reducible);
  REQUIRE(cr.witness);
  CHECK(rep.image(*cr.witness) == CycloMatrix{{1, 1}, {0, 1}});
  CHECK_FALSE(is_irreducible(rep));
  CHECK_THROWS_AS(decompose(rep), NotCompletelyReducible);
  CHECK_THROWS_AS(decompose(embed(rep)), NotCompletelyReducible);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(rho22()));
  CHECK(is_irreducible(embed(rho22())));
  auto const q = build_qnm(2, 2);
  CHECK_FALSE(is_irreducible(permutation_rep(q, all(q))));
  CHECK(is_irreducible(character_rep(q, trivial_character<Cyclo>(q))));
}

TEST_CASE("unitarization") {
  auto const g = unitarize(rho22());
  CHECK(g == Cyclo(8) * CycloMatrix::identity(2));

  auto const z8  = Cyclo::root_of_unity(8, 1);
  auto const rep = rho22(z8, z8 * z8 * z8);
  auto const g2  = unitarize(rep);
  CHECK(is_unitary(rep, g2));
  CHECK(is_hermitian(g2));
  CHECK(is_positive_definite(g2));

  // A non-unitary but unitarizable conjugate.
  CycloMatrix const t{{1, 2}, {0, 1}};
  auto const conj = conjugate(rep, t);
  CHECK_FALSE(is_unitary(conj, CycloMatrix::identity(2)));
  auto const g3 = unitarize(conj);
  CHECK(is_unitary(conj, g3));
  CHECK(is_positive_definite(g3));

  auto const uni = unitarize(rep, {ExponentMode::InnOrder, 100000});
  CHECK(is_unitary(rep, uni));

  CHECK_FALSE(is_unitarizable(rho22(Cyclo(2))));
  CHECK_THROWS_AS(unitarize(rho22(Cyclo(2))), NotUnitarizable);
  auto const q = build_qnm(2, 2);
  CHECK_THROWS_AS(unitarize(permutation_rep(q, all(q))), NotIrreducible);
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(CycloMatrix{{2, 1}, {1, 2}}));
  CHECK_FALSE(is_positive_definite(CycloMatrix{{1, 2}, {2, 1}}));
  CHECK_FALSE(is_positive_definite(CycloMatrix{{1, 1}, {0, 1}}));
}

TEST_CASE("determinant characters") {
  auto const i   = Cyclo::root_of_unity(4, 1);
  auto const chi = det_character(rho22());
  CHECK(chi.orbit_values == std::vector<Cyclo>{-i, -i});
  auto const tw = twist(rho22(), chi);
  for (auto const& m : tw.images()) {
    CHECK(determinant(m) == Cyclo(1));
  }

  // det = 4 on Q_{2,2} with lambda = -4: 4^(1/2) is rational.
  auto const exact = det_character(rho22(Cyclo(-4)));
  auto const tw4 = twist(rho22(Cyclo(-4)), exact);
  for (auto const& m : tw4.images()) {
    CHECK(determinant(m) == Cyclo(1));
  }

  // det = -2: sqrt(2) is not representable exactly.
  CHECK_THROWS_AS(det_character(rho22(Cyclo(2))), NotExactlyRepresentable);
  auto const rep    = embed(rho22(Cyclo(2)));
  auto const approx = det_character(rep);
  auto const twa = twist(rep, approx);
  for (auto const& m : twa.images()) {
    CHECK(std::abs(determinant(m).value() - 1.0) < 1e-9);
  }
}

TEST_CASE("determinant character uses the principal branch") {
  auto const q   = trivial_quandle(1);
  auto const z3  = Cyclo::root_of_unity(3, 1);
  // det = z3^2 = exp(4 pi i / 3); principal square root exp(2 pi i / 3) = z3.
  auto const rep = validate_rep(q, std::vector<CycloMatrix>{CycloMatrix{{z3, 0}, {0, z3}}});
  auto const chi = det_character(rep);
  CHECK(chi(0) == z3.inverse());
  auto const achi = det_character(embed(rep));
  CHECK(achi(0) == embed(z3.inverse()));
  // In dimension 1 the root is the determinant itself.
  auto const neg = validate_rep(q, std::vector<CycloMatrix>{CycloMatrix{{-1}}});
  CHECK(det_character(neg)(0) == Cyclo(-1));
  // det = -1 in dimension 2: root exp(i pi / 2) = i.
  auto const flip = validate_rep(q, std::vector<CycloMatrix>{CycloMatrix{{1, 0}, {0, -1}}});
  CHECK(det_character(flip)(0) == Cyclo::root_of_unity(4, 1).inverse());
}

TEST_CASE("equivalence") {
  auto const a = rho22(Cyclo(1), Cyclo(1));
  auto const b = rho22(Cyclo(1), Cyclo(-1));
  auto const c = rho22(Cyclo(-1), Cyclo(1));
  auto const ab = are_equivalent(a, b);
  CHECK(ab.equivalent);
  REQUIRE(ab.witness);
  CHECK_FALSE(determinant(*ab.witness).is_zero());
  for (element_index x = 0; x < 4; ++x) {
    CHECK(*ab.witness * a.image(x) == b.image(x) * *ab.witness);
  }
  CHECK_FALSE(are_equivalent(a, c).equivalent);

  // Reducible: chi1 + chi2 vs chi2 + chi1 vs chi1 + chi1.
  auto const q  = build_qnm(2, 2);
  auto const c1 = character_rep(q, character_from_orbit_values<Cyclo>(q, {Cyclo(1), Cyclo(-1)}));
  auto const c2 = character_rep(q, character_from_orbit_values<Cyclo>(q, {Cyclo(-1), Cyclo(1)}));
  CHECK(are_equivalent(direct_sum(c1, c2), direct_sum(c2, c1)).equivalent);
  CHECK_FALSE(are_equivalent(direct_sum(c1, c2), direct_sum(c1, c1)).equivalent);
  CycloMatrix const t{{1, 1, 0}, {0, 1, 2}, {1, 0, 1}};
  auto const big = direct_sum(a, c1);
  CHECK(are_equivalent(big, conjugate(big, t)).equivalent);
  CHECK_FALSE(are_equivalent(a, c1).equivalent);
  CHECK_THROWS_AS(are_equivalent(a, rho_alb({2, 4}, {2, 1, Cyclo(1), Cyclo(1)})),
                  QuandleMismatch);
}

TEST_CASE("equivalence sampling limit") {
  auto const q  = trivial_quandle(1);
  auto const id = validate_rep(q, std::vector<CycloMatrix>{CycloMatrix::identity(4)});
  // Commutant of the identity is 16-dimensional; 5^16 samples exceed the limit.
  CHECK_THROWS_AS(are_equivalent(id, id, 1000), ResourceLimit);
  // Same characteristic polynomial, but the intertwiners from I to a
  // unipotent are singular; the grid is small enough to exhaust.
  auto const i2 = validate_rep(q, std::vector<CycloMatrix>{CycloMatrix::identity(2)});
  auto const u  = validate_rep(q, std::vector<CycloMatrix>{CycloMatrix{{1, 1}, {0, 1}}});
  CHECK_FALSE(are_equivalent(i2, u).equivalent);
}

TEST_CASE("decomposition of the regular permutation representation of Q_{2,2}") {
  auto const q   = build_qnm(2, 2);
  auto const rep = permutation_rep(q, all(q));
  for (std::uint64_t seed : {0u, 1u, 17u}) {
    auto const dec = decompose(rep, seed);
    REQUIRE(dec.blocks.size() == 4);
    std::multiset<std::pair<long, long>> found;
    for (auto const& b : dec.blocks) {
      REQUIRE(b.images.front().rows() == 1);
      auto const xv = b.images[0](0, 0).value();
      auto const yv = b.images[2](0, 0).value();
      CHECK(std::abs(std::abs(xv.real()) - 1) < 1e-9);
      CHECK(std::abs(xv.imag()) < 1e-9);
      found.insert({std::lround(xv.real()), std::lround(yv.real())});
    }
    std::multiset<std::pair<long, long>> const expected{{1, 1}, {1, 1}, {1, -1}, {-1, 1}};
    CHECK(found == expected);
  }
  auto const oracle_chars = oracle::sign_vector_characters(rep.images());
  std::multiset<std::pair<long, long>> from_oracle;
  for (auto const& c : oracle_chars) {
    from_oracle.insert({c[0], c[2]});
  }
  CHECK(from_oracle == std::multiset<std::pair<long, long>>{{1, 1}, {1, 1}, {1, -1}, {-1, 1}});
}

TEST_CASE("decomposition of conjugated direct sums") {
  std::mt19937_64 rng(4);
  auto const z8 = Cyclo::root_of_unity(8, 1);
  auto const q  = build_qnm(2, 2);
  auto const c  = character_rep(q, character_from_orbit_values<Cyclo>(q, {z8, Cyclo(-1)}));
  auto const sum = direct_sum(direct_sum(rho22(Cyclo(1), z8), c), rho22(Cyclo(-1), Cyclo(1)));
  CycloMatrix t(5, 5);
  std::uniform_int_distribution<long> coef(-2, 2);
  do {
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        t(i, j) = Cyclo(coef(rng));
      }
    }
  } while (determinant(t).is_zero());
  auto const rep = conjugate(sum, t);
  auto const dec = decompose(rep, 3);
  std::multiset<std::size_t> dims;
  for (auto const& b : dec.blocks) {
    dims.insert(b.images.front().rows());
    CHECK(is_irreducible(ApproxRep(q, b.images)));
  }
  CHECK(dims == std::multiset<std::size_t>{1, 2, 2});
  CHECK(commutant_dimension(embed(rep)) == 3);
}

TEST_CASE("decomposition with isotypic multiplicity") {
  auto const q   = build_qnm(2, 2);
  auto const rep = direct_sum(rho22(), rho22(Cyclo(1), Cyclo(-1)));
  CHECK(commutant_dimension(embed(rep)) == 4);
  auto const dec = decompose(rep, 8);
  REQUIRE(dec.blocks.size() == 2);
  for (auto const& b : dec.blocks) {
    CHECK(b.images.front().rows() == 2);
  }
}
