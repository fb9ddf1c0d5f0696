#ifndef QREP_POLYNOMIAL_HPP_
#define QREP_POLYNOMIAL_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qrep/error.hpp"
#include "qrep/matrix.hpp"

namespace qrep {

  // Univariate polynomial, coefficients lowest degree first.  The zero
  // polynomial has no coefficients; otherwise the leading one is nonzero.
  template <typename S>
  class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<S> coeffs) : _c(std::move(coeffs)) {
      trim();
    }

    static Polynomial monomial(std::size_t degree, S c = S(1)) {
      std::vector<S> v(degree + 1, S(0));
      v[degree] = std::move(c);
      return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept {
      return _c.empty();
    }
    // -1 for the zero polynomial.
    long degree() const noexcept {
      return static_cast<long>(_c.size()) - 1;
    }
    std::vector<S> const& coeffs() const noexcept {
      return _c;
    }
    S const& leading() const {
      return _c.back();
    }
    S coeff(std::size_t i) const {
      return i < _c.size() ? _c[i] : S(0);
    }

    Polynomial monic() const {
      if (is_zero()) {
        return *this;
      }
      S const        inv = leading().inverse();
      std::vector<S> c   = _c;
      for (auto& x : c) {
        x *= inv;
      }
      return Polynomial(std::move(c));
    }

    Polynomial derivative() const {
      if (_c.size() <= 1) {
        return Polynomial();
      }
      std::vector<S> c(_c.size() - 1);
      for (std::size_t i = 1; i < _c.size(); ++i) {
        c[i - 1] = _c[i] * S(static_cast<long>(i));
      }
      return Polynomial(std::move(c));
    }

    friend Polynomial operator+(Polynomial const& a, Polynomial const& b) {
      std::vector<S> c(std::max(a._c.size(), b._c.size()), S(0));
      for (std::size_t i = 0; i < a._c.size(); ++i) {
        c[i] += a._c[i];
      }
      for (std::size_t i = 0; i < b._c.size(); ++i) {
        c[i] += b._c[i];
      }
      return Polynomial(std::move(c));
    }

    friend Polynomial operator-(Polynomial const& a, Polynomial const& b) {
      std::vector<S> c(std::max(a._c.size(), b._c.size()), S(0));
      for (std::size_t i = 0; i < a._c.size(); ++i) {
        c[i] += a._c[i];
      }
      for (std::size_t i = 0; i < b._c.size(); ++i) {
        c[i] -= b._c[i];
      }
      return Polynomial(std::move(c));
    }

    friend Polynomial operator*(Polynomial const& a, Polynomial const& b) {
      if (a.is_zero() || b.is_zero()) {
        return Polynomial();
      }
      std::vector<S> c(a._c.size() + b._c.size() - 1, S(0));
      for (std::size_t i = 0; i < a._c.size(); ++i) {
        if (qrep::is_zero(a._c[i])) {
          continue;
        }
        for (std::size_t j = 0; j < b._c.size(); ++j) {
          c[i + j] += a._c[i] * b._c[j];
        }
      }
      return Polynomial(std::move(c));
    }

    friend bool operator==(Polynomial const& a, Polynomial const& b) {
      return a._c == b._c;
    }

    // (quotient, remainder)
    std::pair<Polynomial, Polynomial> divmod(Polynomial const& d) const {
      if (d.is_zero()) {
        throw DivisionByZero();
      }
      if (degree() < d.degree()) {
        return {Polynomial(), *this};
      }
      std::vector<S>    r   = _c;
      std::size_t const dd  = d._c.size() - 1;
      S const           inv = d.leading().inverse();
      std::vector<S>    q(r.size() - dd, S(0));
      for (std::size_t i = r.size(); i-- > dd;) {
        if (qrep::is_zero(r[i])) {
          continue;
        }
        S const f   = r[i] * inv;
        q[i - dd]   = f;
        for (std::size_t j = 0; j <= dd; ++j) {
          if (!qrep::is_zero(d._c[j])) {
            r[i - dd + j] -= f * d._c[j];
          }
        }
        r[i] = S(0);
      }
      r.resize(dd);
      return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    // Evaluate at a square matrix (Horner).
    Matrix<S> operator()(Matrix<S> const& m) const {
      if (!m.is_square()) {
        throw NonSquare();
      }
      Matrix<S> acc(m.rows(), m.cols());
      for (std::size_t i = _c.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t k = 0; k < m.rows(); ++k) {
          acc(k, k) += _c[i];
        }
      }
      return acc;
    }

    S operator()(S const& x) const {
      S acc(0);
      for (std::size_t i = _c.size(); i-- > 0;) {
        acc = acc * x + _c[i];
      }
      return acc;
    }

    std::string to_string() const {
      if (is_zero()) {
        return "0";
      }
      std::string s;
      for (std::size_t i = _c.size(); i-- > 0;) {
        if (qrep::is_zero(_c[i])) {
          continue;
        }
        if (!s.empty()) {
          s += " + ";
        }
        s += "(" + _c[i].to_string() + ")";
        if (i > 0) {
          s += i == 1 ? "*X" : "*X^" + std::to_string(i);
        }
      }
      return s;
    }

   private:
    void trim() {
      while (!_c.empty() && qrep::is_zero(_c.back())) {
        _c.pop_back();
      }
    }

    std::vector<S> _c;
  };

  // Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
  template <typename S>
  Polynomial<S> gcd(Polynomial<S> a, Polynomial<S> b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a      = std::move(b);
      b      = std::move(r);
    }
    return a.monic();
  }

  using CycloPolynomial = Polynomial<Cyclo>;

  // Monic generator of the annihilating ideal of m, found as the first linear
  // dependence among I, m, m^2, ...
  CycloPolynomial minimal_polynomial(CycloMatrix const& m);

  // Characteristic polynomial det(X I - m) by Faddeev-LeVerrier.
  CycloPolynomial characteristic_polynomial(CycloMatrix const& m);

  // True iff the minimal polynomial is squarefree, i.e. gcd(P, P') = 1.  In
  // characteristic zero this does not depend on the field extension, so the
  // answer is valid over the complex numbers.
  bool is_diagonalizable(CycloMatrix const& m);

}  // namespace qrep

#endif  // QREP_POLYNOMIAL_HPP_
