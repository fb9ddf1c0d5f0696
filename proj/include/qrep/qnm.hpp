#ifndef QREP_QNM_HPP_
#define QREP_QNM_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "qrep/error.hpp"
#include "qrep/quandle.hpp"
#include "qrep/representation.hpp"
#include "qrep/scalar.hpp"

namespace qrep {

  // Q_{n,m} on {x1..xn, y1..ym}: core indices 0..n-1 are the x's, n..n+m-1 the
  // y's.  x_i |> y_j = y_(j+1), y_i |> x_j = x_(j+1), and each half acts
  // trivially on itself.
  struct QnmParams {
    std::size_t n = 1;
    std::size_t m = 1;

    element_index x(std::size_t i) const {
      return static_cast<element_index>(i);
    }
    element_index y(std::size_t j) const {
      return static_cast<element_index>(n + j);
    }
  };

  // alpha = zeta_d^k, primitive.
  struct IrrepParams {
    int   d = 2;
    int   k = 1;
    Cyclo lambda{1};
    Cyclo beta{1};

    Cyclo alpha() const {
      return Cyclo::root_of_unity(d, k);
    }
  };

  class InvalidParams : public Error {
   public:
    using Error::Error;
  };

  class StructureViolation : public Error {
   public:
    StructureViolation(int clause, std::string witness)
        : Error("StructureViolation(" + std::to_string(clause) + "): " + witness),
          clause(clause) {}
    int clause;
  };

  Quandle build_qnm(std::size_t n, std::size_t m);
  inline Quandle build_qnm(QnmParams const& p) {
    return build_qnm(p.n, p.m);
  }

  // Throws InvalidParams unless d > 1 divides gcd(n, m), gcd(k, d) = 1 and
  // lambda, beta are nonzero.
  void check_params(QnmParams const& p, IrrepParams const& ip);

  // rho(x1) = diag(beta, beta/alpha, ..., beta/alpha^(d-1)); rho(y1) sends
  // e_i to e_(i+1) and e_d to lambda e_1.  rho(x_i) = alpha^(i-1) rho(x1) and
  // rho(y_j) = alpha^(1-j) rho(y1).
  CycloRep rho_alb(QnmParams const& p, IrrepParams const& ip);

  // Throws StructureViolation with clause 1 (alpha-commutation), 2
  // (rho(y1)^d = lambda I) or 3 (the y1-orbit of e_1 is an eigenbasis of
  // rho(x1) with eigenvalues beta / alpha^i).
  void verify_structure(QnmParams const& p, IrrepParams const& ip, CycloRep const& rep);

  struct IrrepFamily {
    int              d = 1;
    std::vector<int> alpha_exponents;  // k with alpha = zeta_d^k primitive
  };

  struct QnmClassification {
    std::size_t n = 1;
    std::size_t m = 1;
    // d = 1: characters, one free nonzero value on each of the two orbits.
    // In dimension 1, rho(y_(j+1)) = rho(x_i) rho(y_j) rho(x_i)^-1 = rho(y_j),
    // so every 1-dimensional representation is constant on orbits.
    std::size_t                 character_parameters = 2;
    std::vector<IrrepFamily>    families;  // d > 1, d | gcd(n, m)
  };

  QnmClassification classify_irreducibles(std::size_t n, std::size_t m);

  // alpha = alpha', lambda = lambda', beta = beta' alpha^i for some 0 <= i < d.
  bool qnm_equivalent(IrrepParams const& a, IrrepParams const& b);

}  // namespace qrep

#endif  // QREP_QNM_HPP_
