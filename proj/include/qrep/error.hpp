#ifndef QREP_ERROR_HPP_
#define QREP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qrep {

  // Base of every exception the library throws.  The CLI maps these onto its
  // exit codes, so resource failures have their own branch below.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  class NonSquare : public Error {
   public:
    NonSquare() : Error("matrix is not square") {}
  };

  class NotAGroup : public Error {
   public:
    using Error::Error;
  };

  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  // Raised when a computation would exceed a configured resource bound.
  class ResourceLimit : public Error {
   public:
    using Error::Error;
  };

  class CosetLimitExceeded : public ResourceLimit {
   public:
    explicit CosetLimitExceeded(std::size_t limit)
        : ResourceLimit("coset limit exceeded (max_cosets = "
                        + std::to_string(limit) + ")"),
          _limit(limit) {}

    std::size_t limit() const noexcept {
      return _limit;
    }

   private:
    std::size_t _limit;
  };

}  // namespace qrep

#endif  // QREP_ERROR_HPP_
