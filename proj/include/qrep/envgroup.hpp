#ifndef QREP_ENVGROUP_HPP_
#define QREP_ENVGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrep/matrix.hpp"
#include "qrep/quandle.hpp"
#include "qrep/representation.hpp"

namespace qrep {

  // The enveloping group G(Q) = < x in Q | x y x^-1 = x |> y > is infinite;
  // everything here works with its abelianisation or with the finite quotient
  // H = G(Q) / <x^(e_x)>, where the e_x are chosen so that x^(e_x) is central.

  struct AbelianizationData {
    std::size_t              rank = 0;
    std::vector<std::size_t> orbit_of;
  };

  // G(Q)^ab is free abelian on the orbits; each generator maps to its orbit.
  AbelianizationData abelianization(Quandle const& q);

  enum class ExponentMode {
    PerGenerator,  // e_x = ord(L_x)
    InnOrder       // e_x = |Inn(Q)| for every x
  };

  using ExponentVector = std::vector<std::size_t>;

  ExponentVector central_exponents(Quandle const& q,
                                   ExponentMode   mode = ExponentMode::PerGenerator);

  struct Letter {
    element_index generator;
    int           exponent;  // +1 or -1

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  using Word = std::vector<Letter>;

  // Signed 1-based encoding used in JSON: x_g^(+1) -> g + 1, x_g^(-1) -> -(g + 1).
  int    encode_letter(Letter l);
  Letter decode_letter(int code);

  // Complete coset table of the trivial subgroup in H, i.e. the right regular
  // action of H.  Coset 0 is the identity; cosets are numbered in the
  // breadth-first order of the Schreier tree, whose paths are the section
  // words.
  class FiniteQuotient {
   public:
    FiniteQuotient(std::size_t                        generators,
                   std::vector<std::vector<std::uint32_t>> table);

    std::size_t order() const noexcept {
      return _table.size();
    }
    std::size_t generators() const noexcept {
      return _generators;
    }
    static constexpr std::size_t identity() noexcept {
      return 0;
    }

    // Column 2g is generator g, column 2g + 1 its inverse.
    std::vector<std::vector<std::uint32_t>> const& table() const noexcept {
      return _table;
    }

    std::size_t act(std::size_t coset, Letter l) const {
      return _table[coset][2 * l.generator + (l.exponent < 0 ? 1 : 0)];
    }
    std::size_t trace(std::size_t coset, Word const& w) const;
    // Product of the group elements labelled a and b.
    std::size_t multiply(std::size_t a, std::size_t b) const {
      return trace(a, _sections[b]);
    }

    Word const& section(std::size_t coset) const {
      return _sections[coset];
    }
    std::vector<Word> const& sections() const noexcept {
      return _sections;
    }
    // Schreier tree edge into a non-identity coset: parent * letter = coset.
    std::size_t tree_parent(std::size_t coset) const {
      return _parent[coset];
    }

    // All generator actions commute, i.e. H is abelian.
    bool is_abelian() const;

    // Every relator closes at every coset.
    bool satisfies(std::vector<Word> const& relators) const;

   private:
    std::size_t                             _generators;
    std::vector<std::vector<std::uint32_t>> _table;
    std::vector<Word>                       _sections;
    std::vector<std::size_t>                _parent;
  };

  // x y x^-1 (x |> y)^-1 for x != y, followed by x^(e_x) for every x.
  std::vector<Word> quotient_relators(Quandle const& q, ExponentVector const& e);

  // HLT coset enumeration with union-find coincidence handling.  Throws
  // CosetLimitExceeded once more than max_cosets cosets have been defined.
  FiniteQuotient coset_enumerate(Quandle const&        q,
                                 ExponentVector const& e,
                                 std::size_t           max_cosets = 100000);

  // Image of a word under the induced group representation of G(Q).
  template <typename S>
  Matrix<S> word_image(Representation<S> const& rep, Word const& w) {
    Matrix<S> m = Matrix<S>::identity(rep.dim());
    for (auto const& l : w) {
      if (l.generator >= rep.quandle().size()) {
        throw InvalidInput("word letter out of range");
      }
      m = m
          * (l.exponent > 0 ? rep.image(l.generator) : inverse(rep.image(l.generator)));
    }
    return m;
  }

  // x -> the permutation matrix of c -> c x^-1 on H.
  CycloRep regular_rep(Quandle const& q, FiniteQuotient const& h);

  // Images of every section word, computed along the Schreier tree.
  template <typename S>
  std::vector<Matrix<S>> section_images(Representation<S> const& rep,
                                        FiniteQuotient const&    h) {
    std::vector<Matrix<S>> inv;
    for (auto const& m : rep.images()) {
      inv.push_back(inverse(m));
    }
    std::vector<Matrix<S>> out(h.order());
    out[0] = Matrix<S>::identity(rep.dim());
    for (std::size_t c = 1; c < h.order(); ++c) {
      Letter const l = h.section(c).back();
      out[c]         = out[h.tree_parent(c)]
               * (l.exponent > 0 ? rep.image(l.generator) : inv[l.generator]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Is G(Q) abelian?
  ////////////////////////////////////////////////////////////////////////

  enum class AbelianVerdict { NonAbelian, AbelianCertified, Undetermined };

  struct NonAbelianWitness {
    enum class Kind { InnerGroup, Quotient, Irreducible, QuotientIrreducible } kind;
    // InnerGroup/Quotient: two generators whose images do not commute.
    // Irreducible: index of the supplied representation.
    // QuotientIrreducible: a block of the regular representation of H.
    std::size_t               a = 0;
    std::size_t               b = 0;
    std::size_t               dimension = 0;
    std::vector<ApproxMatrix> images;  // QuotientIrreducible only
  };

  struct AbelianReport {
    AbelianVerdict                 verdict = AbelianVerdict::Undetermined;
    std::vector<NonAbelianWitness> witnesses;
    bool                           inner_group_abelian = true;
    std::optional<bool>            quotient_abelian;
    std::optional<std::size_t>     quotient_order;
  };

  // Sound one-sided decision: NonAbelian whenever Inn(Q) or H is nonabelian
  // or one of the supplied representations is irreducible of dimension > 1;
  // AbelianCertified only for trivial quandles.  A coset limit leaves the
  // quotient fields empty instead of failing.  When H is nonabelian and has
  // at most regular_limit elements, an irreducible block of dimension > 1 is
  // split off its regular representation.
  AbelianReport enveloping_abelian_report(Quandle const&               q,
                                          std::vector<CycloRep> const& candidates = {},
                                          ExponentMode mode = ExponentMode::PerGenerator,
                                          std::size_t  max_cosets = 100000,
                                          std::size_t  regular_limit = 32);

  std::string to_string(AbelianVerdict v);

}  // namespace qrep

#endif  // QREP_ENVGROUP_HPP_
