#ifndef QREP_MATRIX_HPP_
#define QREP_MATRIX_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qrep/error.hpp"
#include "qrep/scalar.hpp"

namespace qrep {

  // Dense row-major matrix over one of the scalar backends.
  template <typename S>
  class Matrix {
   public:
    using scalar_type = S;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, S(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
        : _rows(rows), _cols(cols), _data(std::move(entries)) {
      if (_data.size() != rows * cols) {
        throw DimensionMismatch("entry count does not match matrix shape");
      }
    }
    Matrix(std::initializer_list<std::initializer_list<S>> rows) {
      _rows = rows.size();
      _cols = _rows == 0 ? 0 : rows.begin()->size();
      for (auto const& r : rows) {
        if (r.size() != _cols) {
          throw DimensionMismatch("ragged matrix literal");
        }
        _data.insert(_data.end(), r.begin(), r.end());
      }
    }

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = S(1);
      }
      return m;
    }

    static Matrix diagonal(std::vector<S> const& diag) {
      Matrix m(diag.size(), diag.size());
      for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }

    S& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    S const& operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    std::span<S const> row(std::size_t r) const {
      return {_data.data() + r * _cols, _cols};
    }
    std::vector<S> const& entries() const noexcept {
      return _data;
    }

    std::vector<S> column(std::size_t c) const {
      std::vector<S> v;
      v.reserve(_rows);
      for (std::size_t r = 0; r < _rows; ++r) {
        v.push_back((*this)(r, c));
      }
      return v;
    }

    bool is_zero() const {
      return std::all_of(
          _data.begin(), _data.end(), [](S const& s) { return qrep::is_zero(s); });
    }

    Matrix& operator+=(Matrix const& o) {
      check_same_shape(o);
      for (std::size_t i = 0; i < _data.size(); ++i) {
        _data[i] += o._data[i];
      }
      return *this;
    }
    Matrix& operator-=(Matrix const& o) {
      check_same_shape(o);
      for (std::size_t i = 0; i < _data.size(); ++i) {
        _data[i] -= o._data[i];
      }
      return *this;
    }
    Matrix& operator*=(S const& s) {
      for (auto& x : _data) {
        x *= s;
      }
      return *this;
    }

    friend Matrix operator+(Matrix a, Matrix const& b) {
      return a += b;
    }
    Matrix operator-() const {
      Matrix m = *this;
      for (auto& x : m._data) {
        x = -x;
      }
      return m;
    }
    friend Matrix operator-(Matrix a, Matrix const& b) {
      return a -= b;
    }
    friend Matrix operator*(S const& s, Matrix a) {
      return a *= s;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      if (a._cols != b._rows) {
        throw DimensionMismatch("matrix product shape mismatch");
      }
      Matrix c(a._rows, b._cols);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          S const& aik = a(i, k);
          if (qrep::is_zero(aik)) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            S const& bkj = b(k, j);
            if (!qrep::is_zero(bkj)) {
              c(i, j) += aik * bkj;
            }
          }
        }
      }
      return c;
    }

    friend std::vector<S> operator*(Matrix const& a, std::vector<S> const& v) {
      if (a._cols != v.size()) {
        throw DimensionMismatch("matrix-vector shape mismatch");
      }
      std::vector<S> out(a._rows, S(0));
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          if (!qrep::is_zero(a(i, k)) && !qrep::is_zero(v[k])) {
            out[i] += a(i, k) * v[k];
          }
        }
      }
      return out;
    }

    friend bool operator==(Matrix const& a, Matrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

    Matrix transpose() const {
      Matrix t(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    // Conjugate transpose.
    Matrix adjoint() const {
      Matrix t(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          t(j, i) = qrep::conj((*this)(i, j));
        }
      }
      return t;
    }

    S trace() const {
      S t(0);
      for (std::size_t i = 0; i < std::min(_rows, _cols); ++i) {
        t += (*this)(i, i);
      }
      return t;
    }

   private:
    void check_same_shape(Matrix const& o) const {
      if (_rows != o._rows || _cols != o._cols) {
        throw DimensionMismatch("matrix shapes differ");
      }
    }

    std::size_t    _rows = 0;
    std::size_t    _cols = 0;
    std::vector<S> _data;
  };

  using CycloMatrix  = Matrix<Cyclo>;
  using ApproxMatrix = Matrix<Approx>;

  template <typename S>
  double max_magnitude(std::span<S const> xs) {
    double m = 0.0;
    for (auto const& x : xs) {
      m = std::max(m, magnitude(x));
    }
    return m;
  }

  template <typename S>
  double max_magnitude(Matrix<S> const& m) {
    return max_magnitude(std::span<S const>(m.entries()));
  }

  inline ApproxMatrix embed(CycloMatrix const& m) {
    std::vector<Approx> e;
    e.reserve(m.entries().size());
    for (auto const& z : m.entries()) {
      e.push_back(embed(z));
    }
    return ApproxMatrix(m.rows(), m.cols(), std::move(e));
  }
  inline ApproxMatrix embed(ApproxMatrix const& m) {
    return m;
  }

  template <typename S>
  Matrix<S> direct_sum(Matrix<S> const& a, Matrix<S> const& b) {
    Matrix<S> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        m(i, j) = a(i, j);
      }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        m(a.rows() + i, a.cols() + j) = b(i, j);
      }
    }
    return m;
  }

  // Flattens row-major.
  template <typename S>
  std::vector<S> vectorize(Matrix<S> const& m) {
    return m.entries();
  }

  template <typename S>
  Matrix<S> power(Matrix<S> const& m, unsigned long e) {
    if (!m.is_square()) {
      throw NonSquare();
    }
    Matrix<S> result = Matrix<S>::identity(m.rows());
    Matrix<S> base   = m;
    while (e > 0) {
      if (e & 1) {
        result = result * base;
      }
      e >>= 1;
      if (e > 0) {
        base = base * base;
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Row reduction
  ////////////////////////////////////////////////////////////////////////

  template <typename S>
  struct RowReduction {
    std::size_t                 rank = 0;
    std::vector<std::size_t>    pivot_cols;
    Matrix<S>                   reduced;
    std::vector<std::vector<S>> nullspace;
  };

  // Reduced row echelon form.  Exact scalars pick the pivot of least height
  // in each column, approximate ones the pivot of largest modulus, with
  // entries below eps * max|m| treated as zero.
  template <typename S>
  RowReduction<S> row_reduce(Matrix<S> m) {
    std::size_t const rows  = m.rows();
    std::size_t const cols  = m.cols();
    double const      scale = scalar_traits<S>::exact ? 0.0 : max_magnitude(m);

    RowReduction<S> out;
    std::size_t     r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t best      = rows;
      double      best_cost = 0.0;
      for (std::size_t i = r; i < rows; ++i) {
        if (negligible(m(i, c), scale)) {
          continue;
        }
        double const cost = pivot_cost(m(i, c));
        if (best == rows || cost < best_cost) {
          best      = i;
          best_cost = cost;
        }
      }
      if (best == rows) {
        if constexpr (!scalar_traits<S>::exact) {
          for (std::size_t i = r; i < rows; ++i) {
            m(i, c) = S(0);
          }
        }
        continue;
      }
      if (best != r) {
        for (std::size_t j = 0; j < cols; ++j) {
          std::swap(m(r, j), m(best, j));
        }
      }
      S const inv = m(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(m(r, j))) {
          m(r, j) *= inv;
        }
      }
      m(r, c) = S(1);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r) {
          continue;
        }
        if (negligible(m(i, c), scale)) {
          if constexpr (!scalar_traits<S>::exact) {
            m(i, c) = S(0);
          }
          continue;
        }
        S const f = m(i, c);
        for (std::size_t j = c; j < cols; ++j) {
          if (!is_zero(m(r, j))) {
            m(i, j) -= f * m(r, j);
          }
        }
        m(i, c) = S(0);
      }
      out.pivot_cols.push_back(c);
      ++r;
    }
    if constexpr (!scalar_traits<S>::exact) {
      for (std::size_t i = r; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          m(i, j) = S(0);
        }
      }
    }
    out.rank = r;

    std::vector<bool> is_pivot(cols, false);
    for (auto c : out.pivot_cols) {
      is_pivot[c] = true;
    }
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) {
        continue;
      }
      std::vector<S> v(cols, S(0));
      v[f] = S(1);
      for (std::size_t i = 0; i < out.pivot_cols.size(); ++i) {
        if (!is_zero(m(i, f))) {
          v[out.pivot_cols[i]] = -m(i, f);
        }
      }
      out.nullspace.push_back(std::move(v));
    }
    out.reduced = std::move(m);
    return out;
  }

  template <typename S>
  std::size_t rank(Matrix<S> const& m) {
    return row_reduce(m).rank;
  }

  template <typename S>
  S determinant(Matrix<S> m) {
    if (!m.is_square()) {
      throw NonSquare();
    }
    std::size_t const n     = m.rows();
    double const      scale = scalar_traits<S>::exact ? 0.0 : max_magnitude(m);
    S                 det(1);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t best      = n;
      double      best_cost = 0.0;
      for (std::size_t i = c; i < n; ++i) {
        if (negligible(m(i, c), scale)) {
          continue;
        }
        double const cost = pivot_cost(m(i, c));
        if (best == n || cost < best_cost) {
          best      = i;
          best_cost = cost;
        }
      }
      if (best == n) {
        return S(0);
      }
      if (best != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(c, j), m(best, j));
        }
        det = -det;
      }
      det *= m(c, c);
      S const inv = m(c, c).inverse();
      for (std::size_t i = c + 1; i < n; ++i) {
        if (is_zero(m(i, c))) {
          continue;
        }
        S const f = m(i, c) * inv;
        for (std::size_t j = c + 1; j < n; ++j) {
          if (!is_zero(m(c, j))) {
            m(i, j) -= f * m(c, j);
          }
        }
      }
    }
    return det;
  }

  template <typename S>
  Matrix<S> inverse(Matrix<S> const& m) {
    if (!m.is_square()) {
      throw NonSquare();
    }
    std::size_t const n = m.rows();
    Matrix<S>         aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = m(i, j);
      }
      aug(i, n + i) = S(1);
    }
    auto rr = row_reduce(std::move(aug));
    if (rr.pivot_cols.size() < n || rr.pivot_cols[n - 1] != n - 1) {
      throw DivisionByZero();
    }
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        inv(i, j) = rr.reduced(i, n + j);
      }
    }
    return inv;
  }

  ////////////////////////////////////////////////////////////////////////
  // Incremental independence testing
  ////////////////////////////////////////////////////////////////////////

  // Keeps a set of vectors in echelon form so that membership of the span can
  // be tested one vector at a time.
  template <typename S>
  class EchelonBasis {
   public:
    explicit EchelonBasis(std::size_t length) : _length(length) {}

    std::size_t size() const noexcept {
      return _rows.size();
    }
    std::size_t length() const noexcept {
      return _length;
    }

    // Residual of v after elimination against the stored rows, together with
    // the coefficients used: v = sum coeff[i] * row[i] + residual.
    std::pair<std::vector<S>, std::vector<S>> reduce(std::vector<S> v) const {
      std::vector<S> coeff(_rows.size(), S(0));
      for (std::size_t i = 0; i < _rows.size(); ++i) {
        S const f = v[_pivots[i]];
        if (is_zero(f)) {
          continue;
        }
        coeff[i] = f;
        auto const& row = _rows[i];
        for (std::size_t j = 0; j < _length; ++j) {
          if (!is_zero(row[j])) {
            v[j] -= f * row[j];
          }
        }
        v[_pivots[i]] = S(0);
      }
      return {std::move(v), std::move(coeff)};
    }

    // False if v already lies in the span.  Stored rows have pivot entry 1.
    bool insert(std::vector<S> v) {
      double const scale = scale_of(v);
      return insert_reduced(reduce(std::move(v)).first, scale);
    }

    // For callers that already reduced v; scale is the magnitude reference
    // for approximate zero tests.
    bool insert_reduced(std::vector<S> residual, double scale, S* pivot_value = nullptr) {
      std::size_t p = _length;
      double      best = 0.0;
      for (std::size_t j = 0; j < _length; ++j) {
        if (negligible(residual[j], scale)) {
          continue;
        }
        if constexpr (scalar_traits<S>::exact) {
          p = j;
          break;
        } else {
          if (magnitude(residual[j]) > best) {
            best = magnitude(residual[j]);
            p    = j;
          }
        }
      }
      if (p == _length) {
        return false;
      }
      S const pv  = residual[p];
      S const inv = pv.inverse();
      for (auto& x : residual) {
        if (!is_zero(x)) {
          x *= inv;
        }
      }
      residual[p] = S(1);
      if (pivot_value != nullptr) {
        *pivot_value = pv;
      }
      _rows.push_back(std::move(residual));
      _pivots.push_back(p);
      return true;
    }

    static double scale_of(std::vector<S> const& v) {
      if constexpr (scalar_traits<S>::exact) {
        return 0.0;
      } else {
        return max_magnitude(std::span<S const>(v));
      }
    }

   private:
    std::size_t                 _length;
    std::vector<std::vector<S>> _rows;
    std::vector<std::size_t>    _pivots;
  };

  ////////////////////////////////////////////////////////////////////////
  // Algebra closure (Burnside) and intertwiners
  ////////////////////////////////////////////////////////////////////////

  template <typename S>
  struct AlgebraClosure {
    std::size_t            dimension = 0;
    std::vector<Matrix<S>> basis;
  };

  // Basis of the unital associative algebra generated by gens.  Dimension d^2
  // means the generators act irreducibly on the d-dimensional space.
  template <typename S>
  AlgebraClosure<S> algebra_closure(std::vector<Matrix<S>> const& gens,
                                    std::size_t                   dim) {
    for (auto const& g : gens) {
      if (g.rows() != dim || g.cols() != dim) {
        throw DimensionMismatch("algebra generators must all be d x d");
      }
    }
    AlgebraClosure<S> out;
    EchelonBasis<S>   echelon(dim * dim);
    std::vector<std::size_t> worklist;

    auto try_add = [&](Matrix<S> m) {
      if constexpr (!scalar_traits<S>::exact) {
        // keep magnitudes comparable so the relative tolerance is meaningful
        double const s = max_magnitude(m);
        if (s > 0) {
          m *= S(1.0 / s);
        }
      }
      if (echelon.insert(vectorize(m))) {
        out.basis.push_back(std::move(m));
        worklist.push_back(out.basis.size() - 1);
      }
    };

    try_add(Matrix<S>::identity(dim));
    while (!worklist.empty() && out.basis.size() < dim * dim) {
      std::size_t const i = worklist.back();
      worklist.pop_back();
      for (auto const& g : gens) {
        try_add(g * out.basis[i]);
        try_add(out.basis[i] * g);
      }
    }
    out.dimension = out.basis.size();
    return out;
  }

  template <typename S>
  AlgebraClosure<S> algebra_closure(std::vector<Matrix<S>> const& gens) {
    if (gens.empty()) {
      throw DimensionMismatch("algebra_closure needs at least one generator");
    }
    return algebra_closure(gens, gens.front().rows());
  }

  // Basis of { T (e x d) : T * a[i] = b[i] * T for all i }.
  template <typename S>
  std::vector<Matrix<S>> solve_intertwiners(std::vector<Matrix<S>> const& a,
                                            std::vector<Matrix<S>> const& b) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("intertwiner lists differ in length");
    }
    if (a.empty()) {
      throw DimensionMismatch("intertwiner lists are empty");
    }
    std::size_t const d = a.front().rows();
    std::size_t const e = b.front().rows();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].rows() != d || a[i].cols() != d || b[i].rows() != e
          || b[i].cols() != e) {
        throw DimensionMismatch("intertwiner inputs have inconsistent shapes");
      }
    }
    std::size_t const unknowns = e * d;
    Matrix<S>         system(a.size() * unknowns, unknowns);
    std::size_t       row = 0;
    // Unknown (r, c) of T sits at column r * d + c.
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t r = 0; r < e; ++r) {
        for (std::size_t c = 0; c < d; ++c, ++row) {
          for (std::size_t k = 0; k < d; ++k) {
            if (!is_zero(a[i](k, c))) {
              system(row, r * d + k) += a[i](k, c);
            }
          }
          for (std::size_t k = 0; k < e; ++k) {
            if (!is_zero(b[i](r, k))) {
              system(row, k * d + c) -= b[i](r, k);
            }
          }
        }
      }
    }
    auto                   rr = row_reduce(std::move(system));
    std::vector<Matrix<S>> out;
    out.reserve(rr.nullspace.size());
    for (auto& v : rr.nullspace) {
      out.emplace_back(e, d, std::move(v));
    }
    return out;
  }

  template <typename S>
  std::string to_string(Matrix<S> const& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      s += i == 0 ? "[" : ", [";
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j > 0) {
          s += ", ";
        }
        s += m(i, j).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

}  // namespace qrep

#endif  // QREP_MATRIX_HPP_
