#include "qrep/reptheory.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace qrep {

  CycloRep permutation_rep(Quandle const& q, std::vector<element_index> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) {
      throw InvalidInput("permutation representation needs a nonempty subset");
    }
    std::vector<std::size_t> pos(q.size(), q.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] >= q.size()) {
        throw InvalidInput("subset element out of range");
      }
      pos[subset[i]] = i;
    }
    for (element_index x = 0; x < q.size(); ++x) {
      for (auto y : subset) {
        if (pos[q(x, y)] == q.size()) {
          throw NotOrbitClosed(q(x, y));
        }
      }
    }
    std::vector<CycloMatrix> images;
    for (element_index x = 0; x < q.size(); ++x) {
      CycloMatrix m(subset.size(), subset.size());
      for (std::size_t i = 0; i < subset.size(); ++i) {
        m(pos[q(x, subset[i])], i) = Cyclo(1);
      }
      images.push_back(std::move(m));
    }
    return CycloRep(q, std::move(images));
  }

  CompleteReducibility complete_reducibility(CycloRep const& rep) {
    CompleteReducibility out;
    for (element_index x = 0; x < rep.quandle().size(); ++x) {
      if (!is_diagonalizable(rep.image(x))) {
        out.completely_reducible = false;
        out.witness              = x;
        return out;
      }
    }
    return out;
  }

  namespace {

    using CMatrix = Eigen::MatrixXcd;

    CMatrix to_eigen(ApproxMatrix const& m) {
      CMatrix e(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          e(i, j) = m(i, j).value();
        }
      }
      return e;
    }

    ApproxMatrix from_eigen(CMatrix const& e) {
      ApproxMatrix m(e.rows(), e.cols());
      for (Eigen::Index i = 0; i < e.rows(); ++i) {
        for (Eigen::Index j = 0; j < e.cols(); ++j) {
          m(i, j) = Approx(e(i, j));
        }
      }
      return m;
    }

    CMatrix orthonormalize(CMatrix const& v) {
      Eigen::HouseholderQR<CMatrix> qr(v);
      return qr.householderQ() * CMatrix::Identity(v.rows(), v.cols());
    }

    std::vector<ApproxMatrix> restrict_to(std::vector<CMatrix> const& images,
                                          CMatrix const&              basis) {
      std::vector<ApproxMatrix> out;
      for (auto const& a : images) {
        out.push_back(from_eigen(basis.adjoint() * a * basis));
      }
      return out;
    }

    struct Splitter {
      std::vector<CMatrix>            images;
      std::mt19937_64                 rng;
      std::vector<DecompositionBlock> blocks;

      static constexpr int attempts = 8;

      // basis: orthonormal columns spanning an invariant subspace.
      void split(CMatrix const& basis) {
        auto const restricted = restrict_to(images, basis);
        auto const commutant  = solve_intertwiners(restricted, restricted);
        if (commutant.empty()) {
          throw ToleranceFailure("numerical commutant is empty");
        }
        if (commutant.size() == 1) {
          blocks.push_back({from_eigen(basis), restricted});
          return;
        }
        Eigen::Index const k = basis.cols();
        std::normal_distribution<double> normal;
        bool                             separated_once = false;
        for (int attempt = 0; attempt < attempts; ++attempt) {
          CMatrix c = CMatrix::Zero(k, k);
          for (auto const& b : commutant) {
            c += std::complex<double>(normal(rng), normal(rng)) * to_eigen(b);
          }
          c /= c.norm();
          Eigen::ComplexEigenSolver<CMatrix> es(c, false);
          if (es.info() != Eigen::Success) {
            continue;
          }
          auto const& ev = es.eigenvalues();
          // cluster eigenvalues
          double const              cluster_tol = 1e-6;
          std::vector<std::complex<double>> centers;
          std::vector<Eigen::Index>         counts;
          for (Eigen::Index i = 0; i < k; ++i) {
            bool placed = false;
            for (std::size_t j = 0; j < centers.size(); ++j) {
              if (std::abs(ev(i) - centers[j]) <= cluster_tol) {
                ++counts[j];
                placed = true;
                break;
              }
            }
            if (!placed) {
              centers.push_back(ev(i));
              counts.push_back(1);
            }
          }
          if (centers.size() == 1) {
            // A non-scalar commutant element with one eigenvalue is not
            // semisimple; a random element of a semisimple commutant of
            // dimension > 1 always has at least two.
            continue;
          }
          double min_gap = std::numeric_limits<double>::infinity();
          for (std::size_t a = 0; a < centers.size(); ++a) {
            for (std::size_t b = a + 1; b < centers.size(); ++b) {
              min_gap = std::min(min_gap, std::abs(centers[a] - centers[b]));
            }
          }
          if (min_gap < 1e3 * cluster_tol) {
            continue;
          }
          separated_once = true;
          std::vector<CMatrix> spaces;
          bool                 diagonalizable = true;
          for (std::size_t j = 0; j < centers.size(); ++j) {
            CMatrix shifted = c - centers[j] * CMatrix::Identity(k, k);
            Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
            // singular values are sorted decreasingly; the eigenspace is
            // spanned by the last counts[j] right singular vectors
            CMatrix w = svd.matrixV().rightCols(counts[j]);
            if ((shifted * w).norm() > 1e-6) {
              diagonalizable = false;
              break;
            }
            spaces.push_back(w);
          }
          if (!diagonalizable) {
            throw NotCompletelyReducible("commutant element is not diagonalizable");
          }
          for (auto const& w : spaces) {
            split(orthonormalize(basis * w));
          }
          return;
        }
        if (!separated_once) {
          throw NotCompletelyReducible(
              "commutant of dimension " + std::to_string(commutant.size())
              + " has no element with separated eigenvalues");
        }
        throw ToleranceFailure("eigenvalue separation below tolerance");
      }
    };

    // det = q * (root of unity) with q > 0 rational; returns (q, L, j) with
    // det = q * z_L^j, 0 <= j < L.
    struct PolarForm {
      Rational modulus;
      int      order;
      long     exponent;
    };

    std::optional<Rational> rational_root(Rational const& q, unsigned long n) {
      if (sgn(q) <= 0) {
        return std::nullopt;
      }
      Integer num, den;
      if (mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), n) == 0
          || mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), n) == 0) {
        return std::nullopt;
      }
      Rational r(num, den);
      r.canonicalize();
      return r;
    }

    std::optional<PolarForm> polar_form(Cyclo const& z) {
      Cyclo const ns = z.norm_sq();
      if (!ns.is_rational()) {
        return std::nullopt;
      }
      auto const q = rational_root(ns.rational_part(), 2);
      if (!q) {
        return std::nullopt;
      }
      Cyclo const u = z / Cyclo(*q);
      int const   L = std::lcm(2, u.conductor());
      for (long j = 0; j < L; ++j) {
        if (Cyclo::root_of_unity(L, j) == u) {
          return PolarForm{*q, L, j};
        }
      }
      return std::nullopt;
    }

  }  // namespace

  bool is_positive_definite(ApproxMatrix const& g) {
    if (!g.is_square()) {
      return false;
    }
    CMatrix const e = to_eigen(g);
    if (!e.isApprox(e.adjoint())) {
      return false;
    }
    Eigen::LLT<CMatrix> llt(e);
    return llt.info() == Eigen::Success;
  }

  Character<Cyclo> det_character(CycloRep const& rep) {
    auto const&       q    = rep.quandle();
    auto const        orbs = orbits(q);
    std::size_t const d    = rep.dim();
    std::vector<Cyclo> values;
    for (auto const& orb : orbs) {
      Cyclo const det = determinant(rep.image(orb.front()));
      for (auto x : orb) {
        if (!(determinant(rep.image(x)) == det)) {
          throw NotConstantOnOrbit(orb.front(), x);
        }
      }
      auto const pf = polar_form(det);
      if (!pf) {
        throw NotExactlyRepresentable(orb.front());
      }
      auto const r = rational_root(pf->modulus, d);
      if (!r) {
        throw NotExactlyRepresentable(orb.front());
      }
      // det^(1/d) = q^(1/d) * exp(2 pi i j / (L d))
      Cyclo const root =
          Cyclo(*r) * Cyclo::root_of_unity(pf->order * static_cast<int>(d), pf->exponent);
      values.push_back(root.inverse());
    }
    return character_from_orbit_values(q, std::move(values));
  }

  Character<Approx> det_character(ApproxRep const& rep) {
    auto const&         q    = rep.quandle();
    auto const          orbs = orbits(q);
    double const        d    = static_cast<double>(rep.dim());
    std::vector<Approx> values;
    for (auto const& orb : orbs) {
      Approx const det = determinant(rep.image(orb.front()));
      for (auto x : orb) {
        if (!(determinant(rep.image(x)) == det)) {
          throw NotConstantOnOrbit(orb.front(), x);
        }
      }
      double theta = std::arg(det.value());
      if (theta < 0) {
        theta += 2 * std::numbers::pi;
      }
      auto const root = std::polar(std::pow(det.abs(), 1.0 / d), theta / d);
      values.push_back(Approx(1.0 / root));
    }
    return character_from_orbit_values(q, std::move(values));
  }

  Equivalence are_equivalent(CycloRep const& a, CycloRep const& b, std::size_t max_samples) {
    if (!(a.quandle() == b.quandle())) {
      throw QuandleMismatch();
    }
    Equivalence out;
    if (a.dim() != b.dim()) {
      return out;
    }
    auto const basis = solve_intertwiners(a.images(), b.images());
    if (basis.empty()) {
      return out;
    }
    if (is_irreducible(a) && is_irreducible(b)) {
      // A nonzero intertwiner between irreducibles is invertible.
      out.equivalent = true;
      out.witness    = basis.front();
      return out;
    }
    for (element_index x = 0; x < a.quandle().size(); ++x) {
      if (!(characteristic_polynomial(a.image(x))
            == characteristic_polynomial(b.image(x)))) {
        return out;
      }
    }
    std::size_t const d = a.dim();
    std::size_t const r = basis.size();
    // det(sum c_i T_i) has degree <= d in each c_i, so it vanishes on
    // {0..d}^r only if it is identically zero.
    double const points = std::pow(static_cast<double>(d + 1), static_cast<double>(r));
    if (points > static_cast<double>(max_samples)) {
      throw ResourceLimit("equivalence test needs " + std::to_string(points)
                          + " determinant samples");
    }
    std::vector<std::size_t> c(r, 0);
    // start from (1, 1, ..., 1), which is usually invertible already
    std::fill(c.begin(), c.end(), 1);
    auto const total = static_cast<std::size_t>(points);
    for (std::size_t n = 0; n < total; ++n) {
      CycloMatrix t(d, d);
      for (std::size_t i = 0; i < r; ++i) {
        if (c[i] != 0) {
          t += Cyclo(static_cast<long>(c[i])) * basis[i];
        }
      }
      if (!determinant(t).is_zero()) {
        out.equivalent = true;
        out.witness    = std::move(t);
        return out;
      }
      for (std::size_t i = 0; i < r; ++i) {
        c[i] = (c[i] + 1) % (d + 1);
        if (c[i] != 1) {
          break;
        }
      }
    }
    return out;
  }

  std::size_t commutant_dimension(ApproxRep const& rep) {
    return solve_intertwiners(rep.images(), rep.images()).size();
  }

  Decomposition decompose(ApproxRep const& rep, std::uint64_t seed) {
    Splitter s;
    s.rng.seed(seed);
    for (auto const& m : rep.images()) {
      s.images.push_back(to_eigen(m));
    }
    Eigen::Index const d = static_cast<Eigen::Index>(rep.dim());
    s.split(CMatrix::Identity(d, d));

    // The blocks must be complementary and block-diagonalise every image.
    CMatrix      p(d, d);
    Eigen::Index col = 0;
    for (auto const& b : s.blocks) {
      CMatrix const e = to_eigen(b.basis);
      p.middleCols(col, e.cols()) = e;
      col += e.cols();
    }
    if (col != d) {
      throw NotCompletelyReducible("blocks do not span the space");
    }
    Eigen::FullPivLU<CMatrix> lu(p);
    if (!lu.isInvertible()) {
      throw ToleranceFailure("block bases are not complementary");
    }
    CMatrix const pinv = lu.inverse();
    double const  eps  = std::max(approx_tolerance(), 1e-9);
    for (auto const& a : s.images) {
      CMatrix const  conj  = pinv * a * p;
      double const   scale = std::max(1.0, a.norm());
      Eigen::Index   off   = 0;
      for (auto const& b : s.blocks) {
        Eigen::Index const k = static_cast<Eigen::Index>(b.basis.cols());
        double const outside = conj.middleCols(off, k).norm()
                               - conj.block(off, off, k, k).norm();
        if (std::abs(outside) > 1e3 * eps * scale) {
          throw ToleranceFailure("blocks are not invariant within tolerance");
        }
        off += k;
      }
    }
    Decomposition out;
    out.seed   = seed;
    out.blocks = std::move(s.blocks);
    return out;
  }

  Decomposition decompose(CycloRep const& rep, std::uint64_t seed) {
    auto const cr = complete_reducibility(rep);
    if (!cr.completely_reducible) {
      throw NotCompletelyReducible("image of element " + std::to_string(*cr.witness)
                                   + " is not diagonalizable");
    }
    return decompose(embed(rep), seed);
  }

}  // namespace qrep
