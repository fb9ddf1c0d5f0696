#ifndef QREP_TESTS_FIXTURES_HPP_
#define QREP_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "qrep/quandle.hpp"
#include "qrep/representation.hpp"

namespace fixture {

  // Multiplication table of S_3, elements in lexicographic order of their
  // one-line notation; (a * b)(i) = a(b(i)).
  inline qrep::OperationTable s3_multiplication() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3>              p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    qrep::OperationTable t(6, std::vector<qrep::element_index>(6));
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) {
          c[i] = perms[a][perms[b][i]];
        }
        t[a][b] = static_cast<qrep::element_index>(
            std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return t;
  }

  // x |> y = 2x - y mod n
  inline qrep::Quandle dihedral(std::size_t n) {
    qrep::OperationTable t(n, std::vector<qrep::element_index>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = static_cast<qrep::element_index>((2 * x + n - y) % n);
      }
    }
    return qrep::Quandle(t);
  }

  // Every image equal to [[1, 1], [0, 1]].
  inline qrep::CycloRep unipotent(qrep::Quandle const& q) {
    qrep::CycloMatrix const u{{1, 1}, {0, 1}};
    return qrep::validate_rep(q, std::vector<qrep::CycloMatrix>(q.size(), u));
  }

  // Relabel the elements of q by the permutation sigma.
  inline qrep::Quandle relabel(qrep::Quandle const& q, std::vector<qrep::element_index> const& sigma) {
    qrep::OperationTable t(q.size(), std::vector<qrep::element_index>(q.size()));
    for (qrep::element_index x = 0; x < q.size(); ++x) {
      for (qrep::element_index y = 0; y < q.size(); ++y) {
        t[sigma[x]][sigma[y]] = sigma[q(x, y)];
      }
    }
    return qrep::Quandle(t);
  }

}  // namespace fixture

#endif  // QREP_TESTS_FIXTURES_HPP_
