#include "qrep/quandle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace qrep {

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<element_index> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (auto i : _images) {
      if (i >= _images.size() || seen[i]) {
        throw InvalidInput("not a permutation");
      }
      seen[i] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<element_index> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::inverse() const {
    std::vector<element_index> inv(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      inv[_images[i]] = static_cast<element_index>(i);
    }
    Permutation p;
    p._images = std::move(inv);
    return p;
  }

  std::size_t Permutation::order() const {
    std::size_t       result = 1;
    std::vector<bool> seen(_images.size(), false);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = _images[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  Permutation operator*(Permutation const& a, Permutation const& b) {
    if (a.degree() != b.degree()) {
      throw DimensionMismatch("permutation degrees differ");
    }
    std::vector<element_index> v(a.degree());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = a._images[b._images[i]];
    }
    Permutation p;
    p._images = std::move(v);
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // PermGroup
  ////////////////////////////////////////////////////////////////////////

  PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
      : _gens(std::move(generators)) {
    for (auto const& g : _gens) {
      if (g.degree() != degree) {
        throw DimensionMismatch("generator degree mismatch");
      }
      _gen_orders.push_back(g.order());
    }
    std::set<Permutation>   seen{Permutation::identity(degree)};
    std::deque<Permutation> queue{Permutation::identity(degree)};
    while (!queue.empty()) {
      Permutation p = std::move(queue.front());
      queue.pop_front();
      for (auto const& g : _gens) {
        Permutation q = g * p;
        if (seen.insert(q).second) {
          queue.push_back(std::move(q));
        }
      }
    }
    _elements.assign(seen.begin(), seen.end());
  }

  bool PermGroup::contains(Permutation const& p) const {
    return std::binary_search(_elements.begin(), _elements.end(), p);
  }

  bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < _gens.size(); ++i) {
      for (std::size_t j = i + 1; j < _gens.size(); ++j) {
        if (_gens[i] * _gens[j] != _gens[j] * _gens[i]) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quandle axioms
  ////////////////////////////////////////////////////////////////////////

  std::string AxiomViolation::describe() const {
    auto list = [this] {
      std::string s;
      for (std::size_t i = 0; i < witness.size(); ++i) {
        s += (i == 0 ? "" : ", ") + std::to_string(witness[i]);
      }
      return s;
    };
    switch (axiom) {
      case QuandleAxiom::Range:
        return "table entry out of range or table not square at row " + list();
      case QuandleAxiom::Idempotence:
        return "IdempotenceViolation(" + list() + ")";
      case QuandleAxiom::LeftInvertibility:
        return "NonBijectiveTranslation(" + list() + ")";
      case QuandleAxiom::Distributivity:
        return "DistributivityViolation(" + list() + ")";
    }
    return "unknown violation";
  }

  std::optional<AxiomViolation> check_quandle_axioms(OperationTable const& t) {
    std::size_t const k = t.size();
    if (k == 0) {
      return AxiomViolation{QuandleAxiom::Range, {}};
    }
    for (element_index i = 0; i < k; ++i) {
      if (t[i].size() != k
          || std::any_of(t[i].begin(), t[i].end(), [k](auto v) { return v >= k; })) {
        return AxiomViolation{QuandleAxiom::Range, {i}};
      }
    }
    for (element_index i = 0; i < k; ++i) {
      if (t[i][i] != i) {
        return AxiomViolation{QuandleAxiom::Idempotence, {i}};
      }
    }
    for (element_index i = 0; i < k; ++i) {
      std::vector<bool> hit(k, false);
      for (auto v : t[i]) {
        if (hit[v]) {
          return AxiomViolation{QuandleAxiom::LeftInvertibility, {i}};
        }
        hit[v] = true;
      }
    }
    for (element_index i = 0; i < k; ++i) {
      for (element_index j = 0; j < k; ++j) {
        for (element_index l = 0; l < k; ++l) {
          if (t[i][t[j][l]] != t[t[i][j]][t[i][l]]) {
            return AxiomViolation{QuandleAxiom::Distributivity, {i, j, l}};
          }
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quandle
  ////////////////////////////////////////////////////////////////////////

  Quandle::Quandle(OperationTable table, std::vector<std::string> labels)
      : _table(std::move(table)), _labels(std::move(labels)) {
    if (auto v = check_quandle_axioms(_table)) {
      throw QuandleAxiomViolation(std::move(*v));
    }
    if (!_labels.empty() && _labels.size() != _table.size()) {
      throw InvalidInput("label count does not match quandle size");
    }
    _translations.reserve(_table.size());
    for (auto const& row : _table) {
      _translations.emplace_back(row);
    }
  }

  std::string Quandle::label(element_index x) const {
    return _labels.empty() ? std::to_string(x) : _labels[x];
  }

  bool Quandle::is_trivial() const {
    return std::all_of(_translations.begin(),
                       _translations.end(),
                       [](Permutation const& p) { return p.is_identity(); });
  }

  Quandle validate_quandle(OperationTable table, std::vector<std::string> labels) {
    return Quandle(std::move(table), std::move(labels));
  }

  Quandle trivial_quandle(std::size_t k) {
    OperationTable t(k);
    for (auto& row : t) {
      row.resize(k);
      std::iota(row.begin(), row.end(), 0);
    }
    return Quandle(std::move(t));
  }

  Quandle conjugation_quandle(OperationTable const& mult) {
    std::size_t const n = mult.size();
    if (n == 0) {
      throw NotAGroup("empty multiplication table");
    }
    for (auto const& row : mult) {
      if (row.size() != n
          || std::any_of(row.begin(), row.end(), [n](auto v) { return v >= n; })) {
        throw NotAGroup("multiplication table is not n x n with entries in range");
      }
    }
    // identity
    std::optional<element_index> e;
    for (element_index a = 0; a < n && !e; ++a) {
      bool ok = true;
      for (element_index b = 0; b < n && ok; ++b) {
        ok = mult[a][b] == b && mult[b][a] == b;
      }
      if (ok) {
        e = a;
      }
    }
    if (!e) {
      throw NotAGroup("no identity element");
    }
    std::vector<element_index> inv(n);
    for (element_index a = 0; a < n; ++a) {
      auto it = std::find(mult[a].begin(), mult[a].end(), *e);
      if (it == mult[a].end() || mult[it - mult[a].begin()][a] != *e) {
        throw NotAGroup("element " + std::to_string(a) + " has no inverse");
      }
      inv[a] = static_cast<element_index>(it - mult[a].begin());
    }
    for (element_index a = 0; a < n; ++a) {
      for (element_index b = 0; b < n; ++b) {
        for (element_index c = 0; c < n; ++c) {
          if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
            throw NotAGroup("associativity fails at (" + std::to_string(a) + ", "
                            + std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    OperationTable t(n, std::vector<element_index>(n));
    for (element_index a = 0; a < n; ++a) {
      for (element_index b = 0; b < n; ++b) {
        t[a][b] = mult[mult[a][b]][inv[a]];
      }
    }
    return Quandle(std::move(t));
  }

  PermGroup inner_group(Quandle const& q) {
    std::vector<Permutation> gens;
    gens.reserve(q.size());
    for (element_index x = 0; x < q.size(); ++x) {
      gens.push_back(q.left_translation(x));
    }
    return PermGroup(q.size(), std::move(gens));
  }

  std::vector<std::vector<element_index>> orbits(Quandle const& q) {
    std::size_t const        k = q.size();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (element_index i = 0; i < k; ++i) {
      for (element_index j = 0; j < k; ++j) {
        auto a = find(j), b = find(q(i, j));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::vector<std::vector<element_index>> out;
    std::vector<std::size_t>                slot(k, k);
    for (element_index x = 0; x < k; ++x) {
      auto r = find(x);
      if (slot[r] == k) {
        slot[r] = out.size();
        out.emplace_back();
      }
      out[slot[r]].push_back(x);
    }
    return out;
  }

  std::vector<std::size_t> orbit_indices(Quandle const& q) {
    std::vector<std::size_t> idx(q.size());
    auto const               orbs = orbits(q);
    for (std::size_t o = 0; o < orbs.size(); ++o) {
      for (auto x : orbs[o]) {
        idx[x] = o;
      }
    }
    return idx;
  }

}  // namespace qrep
