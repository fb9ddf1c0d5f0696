#ifndef QREP_REPRESENTATION_HPP_
#define QREP_REPRESENTATION_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qrep/error.hpp"
#include "qrep/matrix.hpp"
#include "qrep/quandle.hpp"
#include "qrep/scalar.hpp"

namespace qrep {

  class NotInvertible : public Error {
   public:
    explicit NotInvertible(element_index x)
        : Error("NotInvertible(" + std::to_string(x) + ")"), element(x) {}
    element_index element;
  };

  class RelationViolation : public Error {
   public:
    RelationViolation(element_index x, element_index y)
        : Error("RelationViolation(" + std::to_string(x) + ", " + std::to_string(y)
                + ")"),
          x(x),
          y(y) {}
    element_index x, y;
  };

  // A quandle together with one d x d matrix per element.  Construct through
  // validate_rep unless the relation rho(x |> y) = rho(x) rho(y) rho(x)^-1 is
  // known to hold.
  template <typename S>
  class Representation {
   public:
    using scalar_type = S;

    Representation(Quandle q, std::vector<Matrix<S>> images)
        : _quandle(std::move(q)), _images(std::move(images)) {
      if (_images.size() != _quandle.size()) {
        throw DimensionMismatch("need exactly one image per quandle element");
      }
      _dim = _images.front().rows();
      for (auto const& m : _images) {
        if (m.rows() != _dim || m.cols() != _dim) {
          throw DimensionMismatch("images must be square of equal dimension");
        }
      }
      if (_dim == 0) {
        throw DimensionMismatch("representation dimension must be positive");
      }
    }

    Quandle const& quandle() const noexcept {
      return _quandle;
    }
    std::size_t dim() const noexcept {
      return _dim;
    }
    Matrix<S> const& image(element_index x) const {
      return _images[x];
    }
    std::vector<Matrix<S>> const& images() const noexcept {
      return _images;
    }

   private:
    Quandle                _quandle;
    std::vector<Matrix<S>> _images;
    std::size_t            _dim = 0;
  };

  using CycloRep  = Representation<Cyclo>;
  using ApproxRep = Representation<Approx>;

  // Throws NotInvertible(x), RelationViolation(x, y) or DimensionMismatch.
  template <typename S>
  Representation<S> validate_rep(Quandle q, std::vector<Matrix<S>> images) {
    Representation<S> rep(std::move(q), std::move(images));
    auto const&       Q = rep.quandle();
    for (element_index x = 0; x < Q.size(); ++x) {
      if (negligible(determinant(rep.image(x)), 0.0)) {
        throw NotInvertible(x);
      }
    }
    // rho(x |> y) rho(x) = rho(x) rho(y) avoids inverting anything.
    for (element_index x = 0; x < Q.size(); ++x) {
      for (element_index y = 0; y < Q.size(); ++y) {
        if (rep.image(Q(x, y)) * rep.image(x) != rep.image(x) * rep.image(y)) {
          throw RelationViolation(x, y);
        }
      }
    }
    return rep;
  }

  inline ApproxRep embed(CycloRep const& rep) {
    std::vector<ApproxMatrix> images;
    for (auto const& m : rep.images()) {
      images.push_back(embed(m));
    }
    return ApproxRep(rep.quandle(), std::move(images));
  }

  template <typename S>
  Representation<S> direct_sum(Representation<S> const& a, Representation<S> const& b) {
    if (!(a.quandle() == b.quandle())) {
      throw InvalidInput("direct sum of representations of different quandles");
    }
    std::vector<Matrix<S>> images;
    for (element_index x = 0; x < a.quandle().size(); ++x) {
      images.push_back(direct_sum(a.image(x), b.image(x)));
    }
    return Representation<S>(a.quandle(), std::move(images));
  }

  // x -> t^-1 rho(x) t
  template <typename S>
  Representation<S> conjugate(Representation<S> const& rep, Matrix<S> const& t) {
    Matrix<S> const        tinv = inverse(t);
    std::vector<Matrix<S>> images;
    for (auto const& m : rep.images()) {
      images.push_back(tinv * m * t);
    }
    return Representation<S>(rep.quandle(), std::move(images));
  }

}  // namespace qrep

#endif  // QREP_REPRESENTATION_HPP_
