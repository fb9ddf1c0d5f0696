#ifndef QREP_SCALAR_HPP_
#define QREP_SCALAR_HPP_

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qrep {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  // Euler's totient, i.e. the degree of the N-th cyclotomic polynomial.
  int totient(int n);

  // Integer coefficients of the N-th cyclotomic polynomial, lowest degree
  // first.  Results are cached; the reference stays valid for the program's
  // lifetime.
  std::vector<long> const& cyclotomic_polynomial(int n);

  ////////////////////////////////////////////////////////////////////////
  // Cyclo
  ////////////////////////////////////////////////////////////////////////

  // An element sum_i c_i z^i of Q(z), z = exp(2 pi i / N), stored in the
  // power basis 1, z, ..., z^(phi(N)-1), i.e. reduced modulo Phi_N.  Values
  // whose non-constant coefficients vanish are stored at conductor 1, so
  // rationals never carry a larger field around.
  class Cyclo {
   public:
    Cyclo() : _conductor(1), _coeffs(1) {}
    Cyclo(long v) : _conductor(1), _coeffs{Rational(v)} {}  // NOLINT
    Cyclo(Rational q) : _conductor(1), _coeffs{std::move(q)} {  // NOLINT
      _coeffs[0].canonicalize();
    }

    // coeffs may have any length; it is reduced modulo x^N - 1 and Phi_N.
    Cyclo(int conductor, std::vector<Rational> coeffs);

    static Cyclo root_of_unity(int n, long k);

    int conductor() const noexcept {
      return _conductor;
    }

    std::vector<Rational> const& coeffs() const noexcept {
      return _coeffs;
    }

    bool is_zero() const;
    bool is_rational() const noexcept {
      return _conductor == 1;
    }
    // Only meaningful when is_rational().
    Rational const& rational_part() const noexcept {
      return _coeffs[0];
    }

    // The same value expressed at a conductor that is a multiple of ours.
    Cyclo lift(int conductor) const;

    Cyclo operator-() const;
    Cyclo& operator+=(Cyclo const& other);
    Cyclo& operator-=(Cyclo const& other);
    Cyclo& operator*=(Cyclo const& other);
    Cyclo& operator/=(Cyclo const& other);

    friend Cyclo operator+(Cyclo a, Cyclo const& b) {
      return a += b;
    }
    friend Cyclo operator-(Cyclo a, Cyclo const& b) {
      return a -= b;
    }
    friend Cyclo operator*(Cyclo a, Cyclo const& b) {
      return a *= b;
    }
    friend Cyclo operator/(Cyclo a, Cyclo const& b) {
      return a /= b;
    }

    friend bool operator==(Cyclo const& a, Cyclo const& b);

    Cyclo inverse() const;
    // Complex conjugation z -> z^(N-1).
    Cyclo conj() const;
    // Galois automorphism z -> z^a, gcd(a, N) = 1.
    Cyclo galois(long a) const;
    Cyclo norm_sq() const;

    std::complex<double> embed() const;

    // Sum of the bit sizes of all numerators and denominators; used to pick
    // cheap pivots.
    std::size_t height() const;

    std::string to_string() const;

   private:
    Cyclo(int conductor, std::vector<Rational> reduced, bool);
    void normalize();

    int                   _conductor;
    std::vector<Rational> _coeffs;
  };

  inline Cyclo cyclo_root_of_unity(int n, long k) {
    return Cyclo::root_of_unity(n, k);
  }

  ////////////////////////////////////////////////////////////////////////
  // Approx
  ////////////////////////////////////////////////////////////////////////

  // Global tolerance of the floating point backend, default 1e-9.
  double approx_tolerance() noexcept;
  void   set_approx_tolerance(double eps);

  class Approx {
   public:
    Approx() = default;
    Approx(double re, double im = 0.0) : _v(re, im) {}  // NOLINT
    Approx(std::complex<double> v) : _v(v) {}           // NOLINT

    std::complex<double> value() const noexcept {
      return _v;
    }
    double re() const noexcept {
      return _v.real();
    }
    double im() const noexcept {
      return _v.imag();
    }
    double abs() const noexcept {
      return std::abs(_v);
    }

    bool is_zero() const noexcept;

    Approx operator-() const {
      return Approx(-_v);
    }
    Approx& operator+=(Approx const& o) {
      _v += o._v;
      return *this;
    }
    Approx& operator-=(Approx const& o) {
      _v -= o._v;
      return *this;
    }
    Approx& operator*=(Approx const& o) {
      _v *= o._v;
      return *this;
    }
    Approx& operator/=(Approx const& o);

    friend Approx operator+(Approx a, Approx const& b) {
      return a += b;
    }
    friend Approx operator-(Approx a, Approx const& b) {
      return a -= b;
    }
    friend Approx operator*(Approx a, Approx const& b) {
      return a *= b;
    }
    friend Approx operator/(Approx a, Approx const& b) {
      return a /= b;
    }

    // |a - b| <= eps * max(1, |a|, |b|) in each component.
    friend bool operator==(Approx const& a, Approx const& b) noexcept;

    Approx inverse() const;
    Approx conj() const {
      return Approx(std::conj(_v));
    }
    Approx norm_sq() const {
      return Approx(std::norm(_v));
    }

    std::string to_string() const;

   private:
    std::complex<double> _v{0.0, 0.0};
  };

  inline Approx embed(Cyclo const& z) {
    return Approx(z.embed());
  }
  inline Approx embed(Approx const& z) {
    return z;
  }

  ////////////////////////////////////////////////////////////////////////
  // Uniform scalar interface used by the templated linear algebra
  ////////////////////////////////////////////////////////////////////////

  template <typename S>
  struct scalar_traits;

  template <>
  struct scalar_traits<Cyclo> {
    static constexpr bool        exact   = true;
    static constexpr char const* backend = "cyclo";
  };

  template <>
  struct scalar_traits<Approx> {
    static constexpr bool        exact   = false;
    static constexpr char const* backend = "approx";
  };

  inline bool is_zero(Cyclo const& z) {
    return z.is_zero();
  }
  inline bool is_zero(Approx const& z) {
    return z.is_zero();
  }
  inline Cyclo conj(Cyclo const& z) {
    return z.conj();
  }
  inline Approx conj(Approx const& z) {
    return z.conj();
  }
  inline double magnitude(Cyclo const& z) {
    return std::abs(z.embed());
  }
  inline double magnitude(Approx const& z) {
    return z.abs();
  }

  // Lower is a better pivot.
  inline double pivot_cost(Cyclo const& z) {
    return static_cast<double>(z.height());
  }
  inline double pivot_cost(Approx const& z) {
    return -z.abs();
  }

  // Zero test relative to a magnitude scale.  Exact scalars ignore the scale.
  inline bool negligible(Cyclo const& z, double) {
    return z.is_zero();
  }
  inline bool negligible(Approx const& z, double scale) {
    return z.abs() <= approx_tolerance() * (scale > 0 ? scale : 1.0);
  }

}  // namespace qrep

#endif  // QREP_SCALAR_HPP_
