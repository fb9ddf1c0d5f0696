#ifndef QREP_REPTHEORY_HPP_
#define QREP_REPTHEORY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrep/envgroup.hpp"
#include "qrep/matrix.hpp"
#include "qrep/polynomial.hpp"
#include "qrep/quandle.hpp"
#include "qrep/representation.hpp"

namespace qrep {

  class NotIrreducible : public Error {
   public:
    NotIrreducible() : Error("NotIrreducible") {}
  };

  class NotUnitarizable : public Error {
   public:
    explicit NotUnitarizable(element_index x)
        : Error("NotUnitarizable: |det rho(" + std::to_string(x) + ")| != 1"), element(x) {}
    element_index element;
  };

  class NotCompletelyReducible : public Error {
   public:
    explicit NotCompletelyReducible(std::string what) : Error("NotCompletelyReducible: " + what) {}
  };

  class ToleranceFailure : public Error {
   public:
    using Error::Error;
  };

  class NotExactlyRepresentable : public Error {
   public:
    explicit NotExactlyRepresentable(element_index x)
        : Error("NotExactlyRepresentable: det rho(" + std::to_string(x)
                + ") has no exact principal root"),
          element(x) {}
    element_index element;
  };

  class NotOrbitClosed : public Error {
   public:
    explicit NotOrbitClosed(element_index x)
        : Error("NotOrbitClosed(" + std::to_string(x) + ")"), element(x) {}
    element_index element;
  };

  class ZeroValue : public Error {
   public:
    explicit ZeroValue(std::size_t orbit)
        : Error("ZeroValue: character value of orbit " + std::to_string(orbit) + " is 0") {}
  };

  class NotConstantOnOrbit : public Error {
   public:
    NotConstantOnOrbit(element_index a, element_index b)
        : Error("NotConstantOnOrbit(" + std::to_string(a) + ", " + std::to_string(b) + ")"),
          a(a),
          b(b) {}
    element_index a, b;
  };

  class QuandleMismatch : public Error {
   public:
    QuandleMismatch() : Error("QuandleMismatch: representations of different quandles") {}
  };

  ////////////////////////////////////////////////////////////////////////
  // Characters
  ////////////////////////////////////////////////////////////////////////

  // A quandle character: one nonzero value per Inn(Q)-orbit.
  template <typename S>
  struct Character {
    std::vector<std::size_t> orbit_of;
    std::vector<S>           orbit_values;

    S const& operator()(element_index x) const {
      return orbit_values[orbit_of[x]];
    }
  };

  template <typename S>
  Character<S> character_from_orbit_values(Quandle const& q, std::vector<S> values) {
    Character<S> chi{orbit_indices(q), std::move(values)};
    std::size_t const n = orbits(q).size();
    if (chi.orbit_values.size() != n) {
      throw DimensionMismatch("need one character value per orbit (" + std::to_string(n)
                              + ")");
    }
    for (std::size_t o = 0; o < n; ++o) {
      if (is_zero(chi.orbit_values[o])) {
        throw ZeroValue(o);
      }
    }
    return chi;
  }

  // Per-element values; rejected unless constant on every orbit.
  template <typename S>
  Character<S> character_from_element_values(Quandle const& q, std::vector<S> const& values) {
    if (values.size() != q.size()) {
      throw DimensionMismatch("need one character value per element");
    }
    auto const     orbs = orbits(q);
    std::vector<S> per_orbit;
    for (auto const& orb : orbs) {
      for (auto x : orb) {
        if (!(values[x] == values[orb.front()])) {
          throw NotConstantOnOrbit(orb.front(), x);
        }
      }
      per_orbit.push_back(values[orb.front()]);
    }
    return character_from_orbit_values(q, std::move(per_orbit));
  }

  template <typename S>
  Character<S> trivial_character(Quandle const& q) {
    return character_from_orbit_values(q, std::vector<S>(orbits(q).size(), S(1)));
  }

  // The 1-dimensional representation x -> chi(x).
  template <typename S>
  Representation<S> character_rep(Quandle const& q, Character<S> const& chi) {
    std::vector<Matrix<S>> images;
    for (element_index x = 0; x < q.size(); ++x) {
      images.push_back(Matrix<S>(1, 1, {chi(x)}));
    }
    return Representation<S>(q, std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  // rho_R(x) permutes the basis {e_y : y in R} by e_y -> e_(x |> y).  R must be
  // a union of orbits; the basis follows the sorted order of R.
  CycloRep permutation_rep(Quandle const& q, std::vector<element_index> subset);

  // x -> chi(x) rho(x)
  template <typename S>
  Representation<S> twist(Representation<S> const& rep, Character<S> const& chi) {
    if (chi.orbit_of.size() != rep.quandle().size()) {
      throw DimensionMismatch("character and representation quandles differ");
    }
    std::vector<Matrix<S>> images;
    for (element_index x = 0; x < rep.quandle().size(); ++x) {
      images.push_back(chi(x) * rep.image(x));
    }
    return Representation<S>(rep.quandle(), std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Decisions
  ////////////////////////////////////////////////////////////////////////

  // Burnside: the images generate the full d x d matrix algebra.
  template <typename S>
  bool is_irreducible(Representation<S> const& rep) {
    std::size_t const d = rep.dim();
    return algebra_closure(rep.images(), d).dimension == d * d;
  }

  struct CompleteReducibility {
    bool                         completely_reducible = true;
    std::optional<element_index> witness;  // an element with non-diagonalizable image
  };

  // Completely reducible iff every image is diagonalizable.
  CompleteReducibility complete_reducibility(CycloRep const& rep);

  inline bool is_completely_reducible(CycloRep const& rep) {
    return complete_reducibility(rep).completely_reducible;
  }

  template <typename S>
  bool is_unitary(Representation<S> const& rep, Matrix<S> const& gram) {
    if (gram.rows() != rep.dim() || gram.cols() != rep.dim()) {
      throw DimensionMismatch("Gram matrix dimension differs from representation");
    }
    for (auto const& m : rep.images()) {
      if (!(m.adjoint() * gram * m == gram)) {
        return false;
      }
    }
    return true;
  }

  // G* = G
  template <typename S>
  bool is_hermitian(Matrix<S> const& g) {
    return g.is_square() && g.adjoint() == g;
  }

  // Numerical Cholesky on the complex embedding.
  bool is_positive_definite(ApproxMatrix const& g);
  inline bool is_positive_definite(CycloMatrix const& g) {
    return is_positive_definite(embed(g));
  }

  // For irreducible reps: unitarizable iff |det rho(x)| = 1 for every x.
  // Throws NotIrreducible.
  template <typename S>
  bool is_unitarizable(Representation<S> const& rep) {
    if (!is_irreducible(rep)) {
      throw NotIrreducible();
    }
    for (auto const& m : rep.images()) {
      if (!(determinant(m).norm_sq() == S(1))) {
        return false;
      }
    }
    return true;
  }

  struct UnitarizeOptions {
    ExponentMode exponents  = ExponentMode::PerGenerator;
    std::size_t  max_cosets = 100000;
  };

  // Invariant Gram matrix sum_h M_h* M_h over the section images M_h of the
  // finite quotient H.  The sum is returned unnormalised.  Throws
  // NotIrreducible, NotUnitarizable or CosetLimitExceeded.
  template <typename S>
  Matrix<S> unitarize(Representation<S> const& rep, UnitarizeOptions const& opts = {}) {
    if (!is_irreducible(rep)) {
      throw NotIrreducible();
    }
    for (element_index x = 0; x < rep.quandle().size(); ++x) {
      if (!(determinant(rep.image(x)).norm_sq() == S(1))) {
        throw NotUnitarizable(x);
      }
    }
    auto const h =
        coset_enumerate(rep.quandle(), central_exponents(rep.quandle(), opts.exponents),
                        opts.max_cosets);
    Matrix<S> gram(rep.dim(), rep.dim());
    for (auto const& m : section_images(rep, h)) {
      gram += m.adjoint() * m;
    }
    if (!is_unitary(rep, gram)) {
      throw Error("averaged form is not invariant");
    }
    return gram;
  }

  // chi(x) = 1 / det(rho(x))^(1/d) with the principal branch, argument in
  // [0, 2 pi).  The exact version needs each det to be q * (root of unity)
  // with q^(1/d) rational and throws NotExactlyRepresentable otherwise.
  Character<Cyclo>  det_character(CycloRep const& rep);
  Character<Approx> det_character(ApproxRep const& rep);

  struct Equivalence {
    bool                       equivalent = false;
    std::optional<CycloMatrix> witness;  // T with T rho_A(x) = rho_B(x) T, invertible
  };

  // Exact equivalence.  Two irreducibles are equivalent iff a nonzero
  // intertwiner exists; otherwise det(sum c_i T_i) over the intertwiner basis
  // is sampled on the grid {0..d}^r, which decides whether the space holds an
  // invertible element.  Throws QuandleMismatch, or ResourceLimit when the
  // grid exceeds max_samples points.
  Equivalence are_equivalent(CycloRep const& a, CycloRep const& b,
                             std::size_t max_samples = 1000000);

  ////////////////////////////////////////////////////////////////////////
  // Numerical decomposition
  ////////////////////////////////////////////////////////////////////////

  struct DecompositionBlock {
    ApproxMatrix              basis;   // d x k, columns span the block
    std::vector<ApproxMatrix> images;  // k x k restricted images, per element
  };

  struct Decomposition {
    std::uint64_t                   seed = 0;
    std::vector<DecompositionBlock> blocks;
  };

  // Splits along eigenspaces of random elements of the commutant until every
  // block has a 1-dimensional commutant.  Throws NotCompletelyReducible or
  // ToleranceFailure.
  Decomposition decompose(ApproxRep const& rep, std::uint64_t seed = 0);
  // Checks complete reducibility exactly first, then works on the embedding.
  Decomposition decompose(CycloRep const& rep, std::uint64_t seed = 0);

  // Dimension of the commutant of the images, computed numerically.
  std::size_t commutant_dimension(ApproxRep const& rep);

}  // namespace qrep

#endif  // QREP_REPTHEORY_HPP_
