#include <catch_amalgamated.hpp>

#include "qrep/envgroup.hpp"
#include "qrep/qnm.hpp"
#include "qrep/reptheory.hpp"

using namespace qrep;

namespace {

  std::vector<Cyclo> roots(int n) {
    std::vector<Cyclo> out;
    for (int t = 0; t < n; ++t) {
      out.push_back(Cyclo::root_of_unity(n, t));
    }
    return out;
  }

}  // namespace

TEST_CASE("Q_{n,m} tables") {
  auto const q = build_qnm(2, 2);
  QnmParams const p{2, 2};
  CHECK(q(p.x(0), p.y(0)) == p.y(1));
  CHECK(q(p.x(1), p.y(1)) == p.y(0));
  CHECK(q(p.y(0), p.x(0)) == p.x(1));
  CHECK(q(p.x(0), p.x(1)) == p.x(1));
  CHECK(q(p.y(1), p.y(0)) == p.y(0));
  CHECK(q.label(0) == "x1");
  CHECK(q.label(3) == "y2");
  CHECK(build_qnm(1, 1).is_trivial());
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 5; ++m) {
      auto const r = build_qnm(n, m);
      CHECK_FALSE(check_quandle_axioms(r.table()).has_value());
      auto const orbs = orbits(r);
      if (n > 1 || m > 1) {
        CHECK(orbs.size() == 2);
      }
    }
  }
  CHECK_THROWS_AS(build_qnm(0, 2), InvalidInput);
}

TEST_CASE("rho for alpha = -1, lambda = beta = 1") {
  auto const rep = rho_alb({2, 2}, {2, 1, Cyclo(1), Cyclo(1)});
  CHECK(rep.image(0) == CycloMatrix{{1, 0}, {0, -1}});
  CHECK(rep.image(2) == CycloMatrix{{0, 1}, {1, 0}});
  CHECK(rep.image(1) == Cyclo(-1) * rep.image(0));
  CHECK(rep.image(3) == Cyclo(-1) * rep.image(2));
  auto const a = rep.image(0);
  auto const b = rep.image(2);
  CHECK(b * a * inverse(b) * inverse(a) == Cyclo(-1) * CycloMatrix::identity(2));
  CHECK_NOTHROW(verify_structure({2, 2}, {2, 1, Cyclo(1), Cyclo(1)}, rep));
}

TEST_CASE("cyclic matrix cubes to lambda") {
  auto const z3  = Cyclo::root_of_unity(3, 1);
  IrrepParams const ip{3, 1, Cyclo(1), z3};
  auto const rep = rho_alb({3, 3}, ip);
  CHECK(power(rep.image(3), 3) == CycloMatrix::identity(3));
  CHECK_NOTHROW(verify_structure({3, 3}, ip, rep));
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(rho_alb({2, 2}, {3, 1, Cyclo(1), Cyclo(1)}), InvalidParams);
  CHECK_THROWS_AS(rho_alb({4, 4}, {4, 2, Cyclo(1), Cyclo(1)}), InvalidParams);
  CHECK_THROWS_AS(rho_alb({2, 2}, {2, 1, Cyclo(0), Cyclo(1)}), InvalidParams);
  CHECK_THROWS_AS(rho_alb({2, 3}, {2, 1, Cyclo(1), Cyclo(1)}), InvalidParams);
  CHECK_THROWS_AS(rho_alb({2, 2}, {1, 1, Cyclo(1), Cyclo(1)}), InvalidParams);
}

TEST_CASE("corrupted representations fail the structure check") {
  IrrepParams const ip{2, 1, Cyclo(1), Cyclo(1)};
  auto const        rep = rho_alb({2, 2}, ip);
  auto              images = rep.images();
  images[2](0, 1) = Cyclo(3);
  images[3](0, 1) = Cyclo(-3);
  CycloRep const corner(rep.quandle(), images);
  try {
    verify_structure({2, 2}, ip, corner);
    FAIL("expected a structure violation");
  } catch (StructureViolation const& e) {
    CHECK(e.clause == 2);
  }
  auto swapped = rep.images();
  std::swap(swapped[0], swapped[1]);
  try {
    verify_structure({2, 2}, ip, CycloRep(rep.quandle(), swapped));
    FAIL("expected a structure violation");
  } catch (StructureViolation const& e) {
    CHECK(e.clause == 3);
  }
}

TEST_CASE("property sweep over small Q_{n,m}") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t m = 2; m <= 4; ++m) {
      auto const cls = classify_irreducibles(n, m);
      for (auto const& fam : cls.families) {
        for (int k : fam.alpha_exponents) {
          for (auto const& lambda : {Cyclo(1), Cyclo::root_of_unity(4, 1), Cyclo(2)}) {
            for (auto const& beta : {Cyclo(1), Cyclo::root_of_unity(3, 1), Cyclo(Rational(1, 2))}) {
              IrrepParams const ip{fam.d, k, lambda, beta};
              auto const        rep = rho_alb({n, m}, ip);
              CHECK(is_irreducible(rep));
              CHECK_NOTHROW(verify_structure({n, m}, ip, rep));
              bool const unit = lambda.norm_sq() == Cyclo(1) && beta.norm_sq() == Cyclo(1);
              CHECK(is_unitarizable(rep) == unit);
              // rho(y1)^n rho(x1) rho(y1)^-n = alpha^n rho(x1) = rho(x1).
              Word w(n, Letter{static_cast<element_index>(n), 1});
              auto const c = word_image(rep, w);
              CHECK(c * rep.image(0) * inverse(c) == rep.image(0));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("classification") {
  CHECK(classify_irreducibles(1, 5).families.empty());
  auto const c22 = classify_irreducibles(2, 2);
  REQUIRE(c22.families.size() == 1);
  CHECK(c22.families[0].d == 2);
  CHECK(c22.families[0].alpha_exponents == std::vector<int>{1});
  auto const c46 = classify_irreducibles(4, 6);
  REQUIRE(c46.families.size() == 1);
  CHECK(c46.families[0].d == 2);
  auto const c1212 = classify_irreducibles(12, 12);
  std::vector<int> ds;
  for (auto const& f : c1212.families) {
    ds.push_back(f.d);
    CHECK(f.alpha_exponents.size() == static_cast<std::size_t>(totient(f.d)));
  }
  CHECK(ds == std::vector<int>{2, 3, 4, 6, 12});
  CHECK(c22.character_parameters == 2);
}

TEST_CASE("equivalence rule") {
  CHECK(qnm_equivalent({2, 1, Cyclo(1), Cyclo(1)}, {2, 1, Cyclo(1), Cyclo(-1)}));
  CHECK_FALSE(qnm_equivalent({2, 1, Cyclo(1), Cyclo(1)}, {2, 1, Cyclo(-1), Cyclo(1)}));
  CHECK(qnm_equivalent({3, 2, Cyclo(2), Cyclo(5)}, {3, 2, Cyclo(2), Cyclo(5)}));
  CHECK_FALSE(qnm_equivalent({3, 1, Cyclo(1), Cyclo(1)}, {3, 2, Cyclo(1), Cyclo(1)}));
  CHECK_THROWS_AS(qnm_equivalent({2, 2, Cyclo(1), Cyclo(1)}, {2, 1, Cyclo(1), Cyclo(1)}),
                  InvalidParams);
}

TEST_CASE("equivalence rule agrees with intertwiners on Q_{2,4}") {
  std::vector<IrrepParams> grid;
  for (auto const& lambda : {Cyclo(1), Cyclo(-1)}) {
    for (auto const& beta : roots(4)) {
      grid.push_back({2, 1, lambda, beta});
    }
  }
  for (auto const& a : grid) {
    for (auto const& b : grid) {
      CHECK(qnm_equivalent(a, b)
            == are_equivalent(rho_alb({2, 4}, a), rho_alb({2, 4}, b)).equivalent);
    }
  }
}
