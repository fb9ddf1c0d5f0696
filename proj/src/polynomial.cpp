#include "qrep/polynomial.hpp"

namespace qrep {

  CycloPolynomial minimal_polynomial(CycloMatrix const& m) {
    if (!m.is_square()) {
      throw NonSquare();
    }
    std::size_t const n = m.rows();
    // Each stored echelon row r_j = sum_i comb[j][i] * vec(m^i).
    EchelonBasis<Cyclo>             echelon(n * n);
    std::vector<std::vector<Cyclo>> comb;

    CycloMatrix power = CycloMatrix::identity(n);
    for (std::size_t k = 0;; ++k) {
      auto [residual, used] = echelon.reduce(vectorize(power));
      // residual = vec(m^k) - sum_j used[j] * r_j
      std::vector<Cyclo> expr(k + 1, Cyclo(0));
      expr[k] = Cyclo(1);
      for (std::size_t j = 0; j < used.size(); ++j) {
        if (used[j].is_zero()) {
          continue;
        }
        for (std::size_t i = 0; i < comb[j].size(); ++i) {
          if (!comb[j][i].is_zero()) {
            expr[i] -= used[j] * comb[j][i];
          }
        }
      }
      Cyclo pivot;
      if (!echelon.insert_reduced(std::move(residual), 0.0, &pivot)) {
        // expr(m) = 0 and expr is monic of degree k.
        return CycloPolynomial(std::move(expr));
      }
      Cyclo const inv = pivot.inverse();
      for (auto& x : expr) {
        if (!x.is_zero()) {
          x *= inv;
        }
      }
      comb.push_back(std::move(expr));
      power = power * m;
    }
  }

  CycloPolynomial characteristic_polynomial(CycloMatrix const& m) {
    if (!m.is_square()) {
      throw NonSquare();
    }
    std::size_t const  n = m.rows();
    std::vector<Cyclo> c(n + 1, Cyclo(0));
    c[n]                 = Cyclo(1);
    CycloMatrix acc(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
      acc = m * acc;
      for (std::size_t i = 0; i < n; ++i) {
        acc(i, i) += c[n - k + 1];
      }
      c[n - k] = -(m * acc).trace() / Cyclo(static_cast<long>(k));
    }
    return CycloPolynomial(std::move(c));
  }

  // The minimal polynomial is squarefree iff it divides the squarefree part
  // of the characteristic polynomial, i.e. iff that part annihilates m.
  bool is_diagonalizable(CycloMatrix const& m) {
    auto const cp      = characteristic_polynomial(m);
    auto const radical = cp.divmod(gcd(cp, cp.derivative())).first;
    return radical(m).is_zero();
  }

}  // namespace qrep
