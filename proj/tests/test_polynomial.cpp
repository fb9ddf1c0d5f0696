#include <catch_amalgamated.hpp>

#include "qrep/polynomial.hpp"

using namespace qrep;

namespace {

  CycloPolynomial poly(std::vector<long> c) {
    std::vector<Cyclo> v(c.begin(), c.end());
    return CycloPolynomial(v);
  }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto const p = poly({-1, 0, 1});  // X^2 - 1
  auto const q = poly({-1, 1});     // X - 1
  auto const [quot, rem] = p.divmod(q);
  CHECK(quot == poly({1, 1}));
  CHECK(rem.is_zero());
  CHECK(gcd(p, poly({1, 1})) == poly({1, 1}));
  CHECK(gcd(poly({1, 0, 1}), poly({-1, 1})).degree() == 0);
  CHECK(p.derivative() == poly({0, 2}));
  CHECK(CycloPolynomial().degree() == -1);
  CHECK((q * q) == poly({1, -2, 1}));
}

TEST_CASE("minimal polynomials") {
  CycloMatrix const u{{1, 1}, {0, 1}};
  CHECK(minimal_polynomial(u) == poly({1, -2, 1}));
  CHECK_FALSE(is_diagonalizable(u));

  CycloMatrix const s{{0, 1}, {1, 0}};
  CHECK(minimal_polynomial(s) == poly({-1, 0, 1}));
  CHECK(is_diagonalizable(s));

  CHECK(minimal_polynomial(CycloMatrix::identity(3)) == poly({-1, 1}));

  // Rotation by 120 degrees: X^2 + X + 1, diagonalizable over C only.
  CycloMatrix const r{{0, -1}, {1, -1}};
  CHECK(minimal_polynomial(r) == poly({1, 1, 1}));
  CHECK(is_diagonalizable(r));

  // Jordan block of size 2 plus a separate eigenvalue.
  CycloMatrix const j{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}};
  CHECK(minimal_polynomial(j) == poly({-12, 16, -7, 1}));
  CHECK_FALSE(is_diagonalizable(j));
}

TEST_CASE("minimal polynomial annihilates and divides the characteristic polynomial") {
  auto const z8 = Cyclo::root_of_unity(8, 1);
  std::vector<CycloMatrix> const samples{
      CycloMatrix{{z8, 1}, {0, z8}},
      CycloMatrix{{0, 0, 2}, {1, 0, 0}, {0, 1, 0}},
      CycloMatrix{{1, 2, 3}, {0, 1, 4}, {0, 0, 1}},
      CycloMatrix{{z8, 0, 0}, {0, -z8, 0}, {0, 0, z8}},
  };
  for (auto const& m : samples) {
    auto const mp = minimal_polynomial(m);
    auto const cp = characteristic_polynomial(m);
    CHECK(mp(m).is_zero());
    CHECK(cp(m).is_zero());
    CHECK(cp.degree() == static_cast<long>(m.rows()));
    CHECK(cp.divmod(mp).second.is_zero());
  }
}

TEST_CASE("characteristic polynomial") {
  CycloMatrix const m{{1, 2}, {3, 4}};
  CHECK(characteristic_polynomial(m) == poly({-2, -5, 1}));
}
