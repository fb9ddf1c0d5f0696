#include "qrep/envgroup.hpp"

#include "qrep/reptheory.hpp"

#include <deque>
#include <numeric>

namespace qrep {

  AbelianizationData abelianization(Quandle const& q) {
    AbelianizationData out;
    out.orbit_of = orbit_indices(q);
    out.rank     = orbits(q).size();
    return out;
  }

  ExponentVector central_exponents(Quandle const& q, ExponentMode mode) {
    PermGroup const inn = inner_group(q);
    if (mode == ExponentMode::InnOrder) {
      return ExponentVector(q.size(), inn.order());
    }
    return inn.generator_orders();
  }

  int encode_letter(Letter l) {
    int const g = static_cast<int>(l.generator) + 1;
    return l.exponent < 0 ? -g : g;
  }

  Letter decode_letter(int code) {
    if (code == 0) {
      throw InvalidInput("letter code 0 is not valid");
    }
    return code > 0 ? Letter{static_cast<element_index>(code - 1), 1}
                    : Letter{static_cast<element_index>(-code - 1), -1};
  }

  std::vector<Word> quotient_relators(Quandle const& q, ExponentVector const& e) {
    if (e.size() != q.size()) {
      throw DimensionMismatch("exponent vector length differs from quandle size");
    }
    std::vector<Word> rels;
    for (element_index x = 0; x < q.size(); ++x) {
      for (element_index y = 0; y < q.size(); ++y) {
        if (x != y) {
          rels.push_back({{x, 1}, {y, 1}, {x, -1}, {q(x, y), -1}});
        }
      }
    }
    for (element_index x = 0; x < q.size(); ++x) {
      if (e[x] == 0) {
        throw InvalidInput("exponents must be positive");
      }
      rels.emplace_back(e[x], Letter{x, 1});
    }
    return rels;
  }

  namespace {

    constexpr std::int64_t undefined = -1;

    class CosetEnumerator {
     public:
      CosetEnumerator(std::size_t generators, std::size_t max_cosets)
          : _cols(2 * generators), _max(max_cosets) {
        new_coset();
      }

      void run(std::vector<std::vector<std::size_t>> const& relators) {
        for (std::size_t c = 0; c < _parent.size(); ++c) {
          for (auto const& r : relators) {
            if (!live(c)) {
              break;
            }
            scan_and_fill(c, r);
          }
          if (!live(c)) {
            continue;
          }
          for (std::size_t col = 0; col < _cols; ++col) {
            if (at(c, col) == undefined) {
              define(c, col);
            }
          }
        }
      }

      // Renumbers the live cosets breadth-first from coset 0.
      FiniteQuotient finish() {
        std::vector<std::int64_t> label(_parent.size(), undefined);
        std::vector<std::size_t>  order{0};
        label[0] = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (std::size_t col = 0; col < _cols; ++col) {
            auto const t = static_cast<std::size_t>(at(order[i], col));
            if (label[t] == undefined) {
              label[t] = static_cast<std::int64_t>(order.size());
              order.push_back(t);
            }
          }
        }
        std::vector<std::vector<std::uint32_t>> table(order.size(),
                                                      std::vector<std::uint32_t>(_cols));
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (std::size_t col = 0; col < _cols; ++col) {
            table[i][col] = static_cast<std::uint32_t>(label[at(order[i], col)]);
          }
        }
        return FiniteQuotient(_cols / 2, std::move(table));
      }

     private:
      static std::size_t inv(std::size_t col) {
        return col ^ 1U;
      }

      std::int64_t& at(std::size_t c, std::size_t col) {
        return _tab[c * _cols + col];
      }

      bool live(std::size_t c) const {
        return _parent[c] == c;
      }

      std::size_t new_coset() {
        if (_parent.size() >= _max) {
          throw CosetLimitExceeded(_max);
        }
        std::size_t const c = _parent.size();
        _parent.push_back(c);
        _tab.resize(_tab.size() + _cols, undefined);
        return c;
      }

      void define(std::size_t c, std::size_t col) {
        std::size_t const n = new_coset();
        at(c, col)          = static_cast<std::int64_t>(n);
        at(n, inv(col))     = static_cast<std::int64_t>(c);
      }

      std::size_t find(std::size_t c) {
        std::size_t r = c;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[c] != r) {
          std::size_t const next = _parent[c];
          _parent[c]             = r;
          c                      = next;
        }
        return r;
      }

      void merge(std::size_t k, std::size_t l) {
        k = find(k);
        l = find(l);
        if (k == l) {
          return;
        }
        if (k > l) {
          std::swap(k, l);
        }
        _parent[l] = k;
        _queue.push_back(l);
      }

      void coincidence(std::size_t a, std::size_t b) {
        merge(a, b);
        while (!_queue.empty()) {
          std::size_t const g = _queue.front();
          _queue.pop_front();
          for (std::size_t col = 0; col < _cols; ++col) {
            std::int64_t const d = at(g, col);
            if (d == undefined) {
              continue;
            }
            at(static_cast<std::size_t>(d), inv(col)) = undefined;
            std::size_t const mu = find(g);
            std::size_t const nu = find(static_cast<std::size_t>(d));
            if (at(mu, col) != undefined) {
              merge(nu, static_cast<std::size_t>(at(mu, col)));
            } else if (at(nu, inv(col)) != undefined) {
              merge(mu, static_cast<std::size_t>(at(nu, inv(col))));
            } else {
              at(mu, col)      = static_cast<std::int64_t>(nu);
              at(nu, inv(col)) = static_cast<std::int64_t>(mu);
            }
          }
        }
      }

      void scan_and_fill(std::size_t c, std::vector<std::size_t> const& rel) {
        if (rel.empty()) {
          return;
        }
        std::size_t f = c, b = c;
        long        i = 0;
        long        j = static_cast<long>(rel.size()) - 1;
        while (true) {
          while (i <= j && at(f, rel[i]) != undefined) {
            f = static_cast<std::size_t>(at(f, rel[i]));
            ++i;
          }
          if (i > j) {
            if (f != c) {
              coincidence(f, c);
            }
            return;
          }
          while (j >= i && at(b, inv(rel[j])) != undefined) {
            b = static_cast<std::size_t>(at(b, inv(rel[j])));
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            at(f, rel[i])      = static_cast<std::int64_t>(b);
            at(b, inv(rel[i])) = static_cast<std::int64_t>(f);
            return;
          }
          define(f, rel[i]);
        }
      }

      std::size_t               _cols;
      std::size_t               _max;
      std::vector<std::int64_t> _tab;
      std::vector<std::size_t>  _parent;
      std::deque<std::size_t>   _queue;
    };

    std::size_t column(Letter l) {
      return 2 * static_cast<std::size_t>(l.generator) + (l.exponent < 0 ? 1 : 0);
    }

  }  // namespace

  FiniteQuotient::FiniteQuotient(std::size_t                             generators,
                                 std::vector<std::vector<std::uint32_t>> table)
      : _generators(generators), _table(std::move(table)) {
    std::size_t const n = _table.size();
    _sections.assign(n, Word{});
    _parent.assign(n, 0);
    std::vector<bool>        seen(n, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t const c = queue[i];
      for (std::size_t col = 0; col < 2 * _generators; ++col) {
        std::size_t const t = _table[c][col];
        if (!seen[t]) {
          seen[t]      = true;
          _parent[t]   = c;
          _sections[t] = _sections[c];
          _sections[t].push_back(
              Letter{static_cast<element_index>(col / 2), col % 2 == 0 ? 1 : -1});
          queue.push_back(t);
        }
      }
    }
    if (queue.size() != n) {
      throw InvalidInput("coset table is not transitive");
    }
  }

  std::size_t FiniteQuotient::trace(std::size_t coset, Word const& w) const {
    for (auto const& l : w) {
      coset = act(coset, l);
    }
    return coset;
  }

  bool FiniteQuotient::is_abelian() const {
    // The action is regular, so testing at the identity coset suffices.
    for (std::size_t a = 0; a < _generators; ++a) {
      for (std::size_t b = a + 1; b < _generators; ++b) {
        std::size_t const ab = _table[_table[0][2 * a]][2 * b];
        std::size_t const ba = _table[_table[0][2 * b]][2 * a];
        if (ab != ba) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteQuotient::satisfies(std::vector<Word> const& relators) const {
    for (std::size_t c = 0; c < order(); ++c) {
      for (auto const& r : relators) {
        if (trace(c, r) != c) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteQuotient coset_enumerate(Quandle const&        q,
                                 ExponentVector const& e,
                                 std::size_t           max_cosets) {
    auto const& rels = quotient_relators(q, e);
    for (element_index x = 0; x < q.size(); ++x) {
      Permutation p = Permutation::identity(q.size());
      for (std::size_t k = 0; k < e[x]; ++k) {
        p = q.left_translation(x) * p;
      }
      if (!p.is_identity()) {
        throw InvalidInput("exponent of element " + std::to_string(x)
                           + " does not kill its left translation");
      }
    }
    std::vector<std::vector<std::size_t>> coded;
    for (auto const& r : rels) {
      std::vector<std::size_t> v;
      for (auto const& l : r) {
        v.push_back(column(l));
      }
      coded.push_back(std::move(v));
    }
    CosetEnumerator tc(q.size(), max_cosets);
    tc.run(coded);
    FiniteQuotient h = tc.finish();
    if (!h.satisfies(rels)) {
      throw Error("coset enumeration produced a table that violates a relator");
    }
    return h;
  }

  CycloRep regular_rep(Quandle const& q, FiniteQuotient const& h) {
    if (h.generators() != q.size()) {
      throw DimensionMismatch("quotient and quandle have different generators");
    }
    std::vector<CycloMatrix> images;
    for (element_index x = 0; x < q.size(); ++x) {
      CycloMatrix m(h.order(), h.order());
      for (std::size_t c = 0; c < h.order(); ++c) {
        m(h.act(c, {x, -1}), c) = Cyclo(1);
      }
      images.push_back(std::move(m));
    }
    return CycloRep(q, std::move(images));
  }

  AbelianReport enveloping_abelian_report(Quandle const&               q,
                                          std::vector<CycloRep> const& candidates,
                                          ExponentMode                 mode,
                                          std::size_t                  max_cosets,
                                          std::size_t                  regular_limit) {
    AbelianReport report;
    if (q.is_trivial()) {
      report.verdict = AbelianVerdict::AbelianCertified;
    }
    for (element_index a = 0; a < q.size(); ++a) {
      for (element_index b = a + 1; b < q.size(); ++b) {
        auto const& la = q.left_translation(a);
        auto const& lb = q.left_translation(b);
        if (la * lb != lb * la) {
          if (report.inner_group_abelian) {
            report.witnesses.push_back({NonAbelianWitness::Kind::InnerGroup, a, b, 0});
          }
          report.inner_group_abelian = false;
        }
      }
    }
    try {
      FiniteQuotient const h = coset_enumerate(q, central_exponents(q, mode), max_cosets);
      report.quotient_order  = h.order();
      report.quotient_abelian = h.is_abelian();
      if (!*report.quotient_abelian) {
        for (std::size_t a = 0; a < q.size(); ++a) {
          for (std::size_t b = a + 1; b < q.size(); ++b) {
            if (h.act(h.act(0, {static_cast<element_index>(a), 1}),
                      {static_cast<element_index>(b), 1})
                != h.act(h.act(0, {static_cast<element_index>(b), 1}),
                         {static_cast<element_index>(a), 1})) {
              report.witnesses.push_back({NonAbelianWitness::Kind::Quotient, a, b, 0});
              a = q.size();
              break;
            }
          }
        }
        if (h.order() <= regular_limit) {
          for (auto& block : decompose(regular_rep(q, h)).blocks) {
            std::size_t const d = block.images.front().rows();
            if (d > 1 && is_irreducible(ApproxRep(q, block.images))) {
              report.witnesses.push_back(
                  {NonAbelianWitness::Kind::QuotientIrreducible, 0, 0, d, std::move(block.images)});
              break;
            }
          }
        }
      }
    } catch (CosetLimitExceeded const&) {
      // leave the quotient fields empty
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      auto const& rep = candidates[i];
      if (!(rep.quandle() == q)) {
        throw InvalidInput("candidate representation belongs to a different quandle");
      }
      std::size_t const d = rep.dim();
      if (d > 1 && algebra_closure(rep.images(), d).dimension == d * d) {
        report.witnesses.push_back({NonAbelianWitness::Kind::Irreducible, i, 0, d});
      }
    }
    if (!report.witnesses.empty()) {
      report.verdict = AbelianVerdict::NonAbelian;
    }
    return report;
  }

  std::string to_string(AbelianVerdict v) {
    switch (v) {
      case AbelianVerdict::NonAbelian:
        return "NonAbelian";
      case AbelianVerdict::AbelianCertified:
        return "AbelianCertified";
      case AbelianVerdict::Undetermined:
        return "Undetermined";
    }
    return "Undetermined";
  }

}  // namespace qrep
