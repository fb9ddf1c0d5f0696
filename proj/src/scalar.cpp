#include "qrep/scalar.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qrep/error.hpp"

namespace qrep {

  int totient(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) {
          n /= p;
        }
        result -= result / p;
      }
    }
    if (n > 1) {
      result -= result / n;
    }
    return result;
  }

  namespace {
    // Exact division of integer polynomials, divisor monic.
    std::vector<long> divide_monic(std::vector<long> num,
                                   std::vector<long> const& den) {
      std::size_t const dn = den.size() - 1;
      std::vector<long> quot(num.size() - dn, 0);
      for (std::size_t i = num.size(); i-- > dn;) {
        long const c = num[i];
        quot[i - dn] = c;
        if (c != 0) {
          for (std::size_t j = 0; j <= dn; ++j) {
            num[i - dn + j] -= c * den[j];
          }
        }
      }
      return quot;
    }

    std::mutex                           phi_mutex;
    std::map<int, std::vector<long>>     phi_cache;

    std::vector<long> compute_cyclotomic(int n) {
      // x^n - 1 divided by Phi_d for every proper divisor d of n.
      std::vector<long> poly(n + 1, 0);
      poly[0] = -1;
      poly[n] = 1;
      for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
          poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
        }
      }
      return poly;
    }

    // Reduce a polynomial in z (any length) modulo Phi_N; result has length
    // phi(N).
    std::vector<Rational> reduce_mod_phi(int n, std::vector<Rational> poly) {
      std::vector<long> const& phi = cyclotomic_polynomial(n);
      std::size_t const        deg = phi.size() - 1;
      if (poly.size() > static_cast<std::size_t>(n)) {
        // z^n = 1
        for (std::size_t i = n; i < poly.size(); ++i) {
          if (sgn(poly[i]) != 0) {
            poly[i % n] += poly[i];
          }
        }
        poly.resize(n);
      }
      for (std::size_t i = poly.size(); i-- > deg;) {
        if (sgn(poly[i]) == 0) {
          continue;
        }
        Rational const c = poly[i];
        for (std::size_t j = 0; j < deg; ++j) {
          if (phi[j] != 0) {
            poly[i - deg + j] -= c * phi[j];
          }
        }
      }
      poly.resize(deg);
      return poly;
    }

    // poly has length n (exponents already reduced mod n); on return it has
    // length phi(n).
    void reduce_mod_phi_integer(int n, std::vector<Integer>& poly) {
      std::vector<long> const& phi = cyclotomic_polynomial(n);
      std::size_t const        deg = phi.size() - 1;
      for (std::size_t i = poly.size(); i-- > deg;) {
        if (sgn(poly[i]) == 0) {
          continue;
        }
        Integer const c = poly[i];
        for (std::size_t j = 0; j < deg; ++j) {
          if (phi[j] > 0) {
            mpz_submul_ui(poly[i - deg + j].get_mpz_t(), c.get_mpz_t(),
                          static_cast<unsigned long>(phi[j]));
          } else if (phi[j] < 0) {
            mpz_addmul_ui(poly[i - deg + j].get_mpz_t(), c.get_mpz_t(),
                          static_cast<unsigned long>(-phi[j]));
          }
        }
      }
      poly.resize(deg);
    }

    // coeffs = out / den with den the lcm of the denominators.
    std::vector<Integer> scaled_numerators(std::vector<Rational> const& coeffs, Integer& den) {
      den = 1;
      for (auto const& c : coeffs) {
        if (sgn(c) != 0) {
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        }
      }
      std::vector<Integer> out(coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) != 0) {
          out[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
        }
      }
      return out;
    }

    std::atomic<double> tolerance{1e-9};
  }  // namespace

  std::vector<long> const& cyclotomic_polynomial(int n) {
    if (n < 1) {
      throw InvalidInput("cyclotomic polynomial index must be positive");
    }
    {
      std::lock_guard<std::mutex> lock(phi_mutex);
      auto it = phi_cache.find(n);
      if (it != phi_cache.end()) {
        return it->second;
      }
    }
    std::vector<long> poly;
    if (n == 1) {
      poly = {-1, 1};
    } else {
      poly = compute_cyclotomic(n);
    }
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_cache.emplace(n, std::move(poly)).first->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclo
  ////////////////////////////////////////////////////////////////////////

  Cyclo::Cyclo(int conductor, std::vector<Rational> coeffs)
      : _conductor(conductor) {
    if (conductor < 1) {
      throw InvalidInput("conductor must be positive");
    }
    for (auto& c : coeffs) {
      c.canonicalize();
    }
    _coeffs = reduce_mod_phi(conductor, std::move(coeffs));
    normalize();
  }

  Cyclo::Cyclo(int conductor, std::vector<Rational> reduced, bool)
      : _conductor(conductor), _coeffs(std::move(reduced)) {
    normalize();
  }

  void Cyclo::normalize() {
    if (_conductor == 1) {
      return;
    }
    for (std::size_t i = 1; i < _coeffs.size(); ++i) {
      if (sgn(_coeffs[i]) != 0) {
        return;
      }
    }
    _coeffs.resize(1);
    _conductor = 1;
  }

  Cyclo Cyclo::root_of_unity(int n, long k) {
    if (n < 1) {
      throw InvalidInput("root of unity order must be positive");
    }
    long const e = ((k % n) + n) % n;
    std::vector<Rational> poly(e + 1);
    poly[e] = 1;
    return Cyclo(n, std::move(poly));
  }

  bool Cyclo::is_zero() const {
    return _conductor == 1 && sgn(_coeffs[0]) == 0;
  }

  Cyclo Cyclo::lift(int conductor) const {
    if (conductor == _conductor) {
      return *this;
    }
    if (conductor % _conductor != 0) {
      throw InvalidInput("lift target must be a multiple of the conductor");
    }
    int const             step = conductor / _conductor;
    std::vector<Rational> poly(static_cast<std::size_t>(step)
                                   * (_coeffs.size() - 1)
                               + 1);
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      poly[i * step] = _coeffs[i];
    }
    Cyclo result;
    result._conductor = conductor;
    result._coeffs    = reduce_mod_phi(conductor, std::move(poly));
    return result;  // deliberately not normalized
  }

  Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r._coeffs) {
      c = -c;
    }
    return r;
  }

  Cyclo& Cyclo::operator+=(Cyclo const& other) {
    if (other.is_rational()) {
      _coeffs[0] += other._coeffs[0];
      normalize();
      return *this;
    }
    if (_conductor == other._conductor) {
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        _coeffs[i] += other._coeffs[i];
      }
      normalize();
      return *this;
    }
    int const L = std::lcm(_conductor, other._conductor);
    Cyclo     a = lift(L);
    Cyclo     b = other.lift(L);
    for (std::size_t i = 0; i < a._coeffs.size(); ++i) {
      a._coeffs[i] += b._coeffs[i];
    }
    a.normalize();
    return *this = std::move(a);
  }

  Cyclo& Cyclo::operator-=(Cyclo const& other) {
    return *this += -other;
  }

  Cyclo& Cyclo::operator*=(Cyclo const& other) {
    if (other.is_rational()) {
      if (sgn(other._coeffs[0]) == 0) {
        return *this = Cyclo();
      }
      for (auto& c : _coeffs) {
        c *= other._coeffs[0];
      }
      return *this;
    }
    if (is_rational()) {
      Rational const q = _coeffs[0];
      *this            = other;
      for (auto& c : _coeffs) {
        c *= q;
      }
      normalize();
      return *this;
    }
    // Integer arithmetic over a common denominator; exponents land directly
    // in Q(z_L) so neither factor needs lifting.
    int const         L  = std::lcm(_conductor, other._conductor);
    std::size_t const sa = static_cast<std::size_t>(L / _conductor);
    std::size_t const sb = static_cast<std::size_t>(L / other._conductor);
    Integer           da, db;
    auto const        ia = scaled_numerators(_coeffs, da);
    auto const        ib = scaled_numerators(other._coeffs, db);
    std::vector<Integer> prod(static_cast<std::size_t>(L));
    for (std::size_t i = 0; i < ia.size(); ++i) {
      if (sgn(ia[i]) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < ib.size(); ++j) {
        if (sgn(ib[j]) != 0) {
          auto& slot = prod[(i * sa + j * sb) % static_cast<std::size_t>(L)];
          mpz_addmul(slot.get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
        }
      }
    }
    reduce_mod_phi_integer(L, prod);
    Integer const         den = da * db;
    std::vector<Rational> coeffs(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) {
      if (sgn(prod[i]) != 0) {
        coeffs[i] = Rational(prod[i], den);
        coeffs[i].canonicalize();
      }
    }
    return *this = Cyclo(L, std::move(coeffs), true);
  }

  Cyclo& Cyclo::operator/=(Cyclo const& other) {
    return *this *= other.inverse();
  }

  bool operator==(Cyclo const& a, Cyclo const& b) {
    if (a._conductor == b._conductor) {
      return a._coeffs == b._coeffs;
    }
    if (a.is_rational() != b.is_rational()) {
      // Normalized values: a rational never equals an irrational element.
      return false;
    }
    int const L = std::lcm(a._conductor, b._conductor);
    return a.lift(L)._coeffs == b.lift(L)._coeffs;
  }

  Cyclo Cyclo::inverse() const {
    if (is_zero()) {
      throw DivisionByZero();
    }
    if (is_rational()) {
      return Cyclo(Rational(1) / _coeffs[0]);
    }
    // Solve (multiplication by this) * s = e_0 in the power basis.
    std::size_t const n = _coeffs.size();
    // Augmented n x (n+1) system; column j = this * z^j.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> poly(n + j);
      for (std::size_t i = 0; i < n; ++i) {
        poly[i + j] = _coeffs[i];
      }
      auto col = reduce_mod_phi(_conductor, std::move(poly));
      for (std::size_t i = 0; i < n; ++i) {
        a[i][j] = std::move(col[i]);
      }
    }
    a[0][n] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && sgn(a[p][c]) == 0) {
        ++p;
      }
      // The multiplication map of a nonzero field element is invertible.
      std::swap(a[c], a[p]);
      Rational const inv = Rational(1) / a[c][c];
      for (std::size_t k = c; k <= n; ++k) {
        a[c][k] *= inv;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || sgn(a[r][c]) == 0) {
          continue;
        }
        Rational const f = a[r][c];
        for (std::size_t k = c; k <= n; ++k) {
          if (sgn(a[c][k]) != 0) {
            a[r][k] -= f * a[c][k];
          }
        }
      }
    }
    std::vector<Rational> s(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = std::move(a[i][n]);
    }
    return Cyclo(_conductor, std::move(s), true);
  }

  Cyclo Cyclo::galois(long e) const {
    if (is_rational()) {
      return *this;
    }
    long const            n = _conductor;
    std::vector<Rational> poly(n);
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      long const idx = (((static_cast<long>(i) * e) % n) + n) % n;
      poly[idx] += _coeffs[i];
    }
    return Cyclo(_conductor, std::move(poly));
  }

  Cyclo Cyclo::conj() const {
    return galois(_conductor - 1);
  }

  Cyclo Cyclo::norm_sq() const {
    return *this * conj();
  }

  std::complex<double> Cyclo::embed() const {
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      if (sgn(_coeffs[i]) == 0) {
        continue;
      }
      double const theta = 2.0 * std::numbers::pi * static_cast<double>(i)
                            / _conductor;
      sum += _coeffs[i].get_d() * std::polar(1.0, theta);
    }
    return sum;
  }

  std::size_t Cyclo::height() const {
    std::size_t h = 0;
    for (auto const& c : _coeffs) {
      if (sgn(c) != 0) {
        h += mpz_sizeinbase(c.get_num_mpz_t(), 2)
             + mpz_sizeinbase(c.get_den_mpz_t(), 2);
      }
    }
    return h;
  }

  std::string Cyclo::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream out;
    bool               first = true;
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      Rational const& c = _coeffs[i];
      if (sgn(c) == 0) {
        continue;
      }
      if (!first) {
        out << (sgn(c) > 0 ? " + " : " - ");
      } else if (sgn(c) < 0) {
        out << "-";
      }
      Rational const a = abs(c);
      if (i == 0) {
        out << a.get_str();
      } else {
        if (a != 1) {
          out << a.get_str() << "*";
        }
        out << "z" << _conductor;
        if (i > 1) {
          out << "^" << i;
        }
      }
      first = false;
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Approx
  ////////////////////////////////////////////////////////////////////////

  double approx_tolerance() noexcept {
    return tolerance.load(std::memory_order_relaxed);
  }

  void set_approx_tolerance(double eps) {
    if (!(eps > 0.0)) {
      throw InvalidInput("tolerance must be positive");
    }
    tolerance.store(eps, std::memory_order_relaxed);
  }

  bool Approx::is_zero() const noexcept {
    double const eps = approx_tolerance();
    return std::abs(_v.real()) <= eps && std::abs(_v.imag()) <= eps;
  }

  Approx& Approx::operator/=(Approx const& o) {
    if (o._v == std::complex<double>(0.0, 0.0)) {
      throw DivisionByZero();
    }
    _v /= o._v;
    return *this;
  }

  bool operator==(Approx const& a, Approx const& b) noexcept {
    double const scale = std::max({1.0, a.abs(), b.abs()});
    double const eps   = approx_tolerance() * scale;
    return std::abs(a.re() - b.re()) <= eps && std::abs(a.im() - b.im()) <= eps;
  }

  Approx Approx::inverse() const {
    if (_v == std::complex<double>(0.0, 0.0)) {
      throw DivisionByZero();
    }
    return Approx(1.0 / _v);
  }

  std::string Approx::to_string() const {
    std::ostringstream out;
    out.precision(12);
    out << _v.real() << (_v.imag() < 0 ? " - " : " + ") << std::abs(_v.imag())
        << "i";
    return out.str();
  }

}  // namespace qrep
