#include "qrep/qnm.hpp"

#include <numeric>

#include "qrep/matrix.hpp"

namespace qrep {

  Quandle build_qnm(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) {
      throw InvalidInput("Q_{n,m} needs n, m >= 1");
    }
    QnmParams const p{n, m};
    std::size_t const k = n + m;
    OperationTable    t(k, std::vector<element_index>(k));
    for (std::size_t a = 0; a < k; ++a) {
      bool const a_is_x = a < n;
      for (std::size_t b = 0; b < k; ++b) {
        bool const b_is_x = b < n;
        if (a_is_x == b_is_x) {
          t[a][b] = static_cast<element_index>(b);
        } else if (b_is_x) {
          t[a][b] = p.x((b + 1) % n);
        } else {
          t[a][b] = p.y((b - n + 1) % m);
        }
      }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) {
      labels.push_back("x" + std::to_string(i));
    }
    for (std::size_t j = 1; j <= m; ++j) {
      labels.push_back("y" + std::to_string(j));
    }
    return Quandle(std::move(t), std::move(labels));
  }

  void check_params(QnmParams const& p, IrrepParams const& ip) {
    auto const g = std::gcd(p.n, p.m);
    if (ip.d <= 1 || g % static_cast<std::size_t>(ip.d) != 0) {
      throw InvalidParams("d = " + std::to_string(ip.d) + " must be > 1 and divide gcd(n, m) = "
                          + std::to_string(g));
    }
    if (std::gcd(ip.k, ip.d) != 1) {
      throw InvalidParams("zeta_" + std::to_string(ip.d) + "^" + std::to_string(ip.k)
                          + " is not primitive");
    }
    if (ip.lambda.is_zero() || ip.beta.is_zero()) {
      throw InvalidParams("lambda and beta must be nonzero");
    }
  }

  namespace {

    CycloMatrix diagonal_part(IrrepParams const& ip) {
      std::vector<Cyclo> diag;
      for (int i = 0; i < ip.d; ++i) {
        diag.push_back(ip.beta * Cyclo::root_of_unity(ip.d, -static_cast<long>(ip.k) * i));
      }
      return CycloMatrix::diagonal(diag);
    }

    CycloMatrix cyclic_part(IrrepParams const& ip) {
      auto const  d = static_cast<std::size_t>(ip.d);
      CycloMatrix b(d, d);
      for (std::size_t i = 0; i + 1 < d; ++i) {
        b(i + 1, i) = Cyclo(1);
      }
      b(0, d - 1) = ip.lambda;
      return b;
    }

  }  // namespace

  CycloRep rho_alb(QnmParams const& p, IrrepParams const& ip) {
    check_params(p, ip);
    CycloMatrix const a = diagonal_part(ip);
    CycloMatrix const b = cyclic_part(ip);
    std::vector<CycloMatrix> images;
    for (std::size_t i = 0; i < p.n; ++i) {
      images.push_back(Cyclo::root_of_unity(ip.d, static_cast<long>(ip.k) * i) * a);
    }
    for (std::size_t j = 0; j < p.m; ++j) {
      images.push_back(Cyclo::root_of_unity(ip.d, -static_cast<long>(ip.k) * j) * b);
    }
    return validate_rep(build_qnm(p), std::move(images));
  }

  void verify_structure(QnmParams const& p, IrrepParams const& ip, CycloRep const& rep) {
    check_params(p, ip);
    if (rep.dim() != static_cast<std::size_t>(ip.d) || rep.quandle().size() != p.n + p.m) {
      throw DimensionMismatch("representation does not match the parameters");
    }
    Cyclo const        alpha = ip.alpha();
    CycloMatrix const& a     = rep.image(p.x(0));
    CycloMatrix const& b     = rep.image(p.y(0));
    if (!(b * a == alpha * (a * b))) {
      throw StructureViolation(1, "rho(y1) rho(x1) != alpha rho(x1) rho(y1)");
    }
    auto const d = rep.dim();
    if (!(power(b, d) == ip.lambda * CycloMatrix::identity(d))) {
      throw StructureViolation(2, "rho(y1)^d != lambda I");
    }
    std::vector<Cyclo> v(d);
    v[0] = Cyclo(1);
    CycloMatrix family(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      auto const av       = a * v;
      Cyclo const eig     = ip.beta * Cyclo::root_of_unity(ip.d, -static_cast<long>(ip.k) * i);
      for (std::size_t r = 0; r < d; ++r) {
        if (!(av[r] == eig * v[r])) {
          throw StructureViolation(3, "rho(y1)^" + std::to_string(i)
                                          + " e1 is not a beta/alpha^i eigenvector");
        }
        family(r, i) = v[r];
      }
      v = b * v;
    }
    if (rank(family) != d) {
      throw StructureViolation(3, "rho(y1)^i e1 are linearly dependent");
    }
  }

  QnmClassification classify_irreducibles(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) {
      throw InvalidInput("Q_{n,m} needs n, m >= 1");
    }
    QnmClassification out{n, m};
    auto const g = std::gcd(n, m);
    for (std::size_t d = 2; d <= g; ++d) {
      if (g % d != 0) {
        continue;
      }
      IrrepFamily f;
      f.d = static_cast<int>(d);
      for (int k = 1; k < f.d; ++k) {
        if (std::gcd(k, f.d) == 1) {
          f.alpha_exponents.push_back(k);
        }
      }
      out.families.push_back(std::move(f));
    }
    return out;
  }

  bool qnm_equivalent(IrrepParams const& a, IrrepParams const& b) {
    for (auto const* ip : {&a, &b}) {
      if (ip->d <= 1 || std::gcd(ip->k, ip->d) != 1 || ip->lambda.is_zero()
          || ip->beta.is_zero()) {
        throw InvalidParams("invalid irreducible parameters");
      }
    }
    if (a.d != b.d || !(a.alpha() == b.alpha()) || !(a.lambda == b.lambda)) {
      return false;
    }
    Cyclo const alpha = a.alpha();
    Cyclo       shifted = b.beta;
    for (int i = 0; i < a.d; ++i) {
      if (a.beta == shifted) {
        return true;
      }
      shifted = shifted * alpha;
    }
    return false;
  }

}  // namespace qrep
