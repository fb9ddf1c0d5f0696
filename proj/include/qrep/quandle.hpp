#ifndef QREP_QUANDLE_HPP_
#define QREP_QUANDLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrep/error.hpp"

namespace qrep {

  using element_index = std::uint32_t;
  using OperationTable = std::vector<std::vector<element_index>>;

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<element_index> images);

    static Permutation identity(std::size_t n);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    element_index operator[](std::size_t i) const {
      return _images[i];
    }
    std::vector<element_index> const& images() const noexcept {
      return _images;
    }

    bool is_identity() const;
    Permutation inverse() const;
    std::size_t order() const;

    // (a * b)(i) = a(b(i)), i.e. b is applied first.
    friend Permutation operator*(Permutation const& a, Permutation const& b);
    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<element_index> _images;
  };

  // All elements of the group generated by gens, found by breadth-first
  // closure.  Intended for small groups; the whole element list is stored.
  class PermGroup {
   public:
    PermGroup(std::size_t degree, std::vector<Permutation> generators);

    std::vector<Permutation> const& generators() const noexcept {
      return _gens;
    }
    std::vector<Permutation> const& elements() const noexcept {
      return _elements;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    std::vector<std::size_t> const& generator_orders() const noexcept {
      return _gen_orders;
    }
    bool contains(Permutation const& p) const;
    bool is_abelian() const;

   private:
    std::vector<Permutation> _gens;
    std::vector<Permutation> _elements;  // sorted
    std::vector<std::size_t> _gen_orders;
  };

  ////////////////////////////////////////////////////////////////////////
  // Quandles
  ////////////////////////////////////////////////////////////////////////

  enum class QuandleAxiom { Range, Idempotence, LeftInvertibility, Distributivity };

  struct AxiomViolation {
    QuandleAxiom               axiom;
    std::vector<element_index> witness;  // (i), (i), (i, j, l)
    std::string                describe() const;
  };

  class QuandleAxiomViolation : public Error {
   public:
    explicit QuandleAxiomViolation(AxiomViolation v)
        : Error(v.describe()), _violation(std::move(v)) {}
    AxiomViolation const& violation() const noexcept {
      return _violation;
    }

   private:
    AxiomViolation _violation;
  };

  // First violated axiom of a k x k table, if any.  Axioms are checked in the
  // order range, idempotence, left invertibility, self-distributivity.
  std::optional<AxiomViolation> check_quandle_axioms(OperationTable const& table);

  // A finite quandle as its operation table: (*this)(i, j) = i |> j.
  class Quandle {
   public:
    // Throws QuandleAxiomViolation.
    explicit Quandle(OperationTable table, std::vector<std::string> labels = {});

    std::size_t size() const noexcept {
      return _table.size();
    }
    element_index operator()(element_index x, element_index y) const {
      return _table[x][y];
    }
    OperationTable const& table() const noexcept {
      return _table;
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string label(element_index x) const;

    // y -> x |> y
    Permutation const& left_translation(element_index x) const {
      return _translations[x];
    }
    // True iff x |> y = y for all x, y.
    bool is_trivial() const;

    friend bool operator==(Quandle const& a, Quandle const& b) {
      return a._table == b._table;
    }

   private:
    OperationTable           _table;
    std::vector<std::string> _labels;
    std::vector<Permutation> _translations;
  };

  Quandle validate_quandle(OperationTable table, std::vector<std::string> labels = {});

  Quandle trivial_quandle(std::size_t k);

  // Conj(G) from a group multiplication table mult[a][b] = a*b.  Throws
  // NotAGroup with a witness when the table is not a group.
  Quandle conjugation_quandle(OperationTable const& mult);

  PermGroup inner_group(Quandle const& q);

  // Inn(Q)-orbits, each sorted, ordered by least element.
  std::vector<std::vector<element_index>> orbits(Quandle const& q);

  // orbit_of[x] = index into orbits(q).
  std::vector<std::size_t> orbit_indices(Quandle const& q);

}  // namespace qrep

#endif  // QREP_QUANDLE_HPP_
