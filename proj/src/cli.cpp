#include "qrep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qrep/envgroup.hpp"
#include "qrep/qnm.hpp"
#include "qrep/reptheory.hpp"

namespace qrep::cli {

  namespace {

    using json_io::json;

    struct Settings {
      std::string   backend    = "exact";
      std::string   exponents  = "per-gen";
      std::size_t   max_cosets = 100000;
      std::uint64_t seed       = 0;
      double        tolerance  = 1e-9;
    };

    json read_json(std::string const& path) {
      std::stringstream buf;
      if (path == "-") {
        buf << std::cin.rdbuf();
      } else {
        std::ifstream in(path);
        if (!in) {
          throw InvalidInput("cannot open " + path);
        }
        buf << in.rdbuf();
      }
      try {
        return json::parse(buf.str());
      } catch (json::parse_error const& e) {
        throw InvalidInput(path + ": " + e.what());
      }
    }

    ExponentMode exponent_mode(Settings const& s) {
      if (s.exponents == "per-gen") {
        return ExponentMode::PerGenerator;
      }
      if (s.exponents == "inn-order") {
        return ExponentMode::InnOrder;
      }
      throw InvalidInput("--exponents must be per-gen or inn-order");
    }

    bool exact(Settings const& s, json const& doc) {
      if (s.backend == "approx") {
        return false;
      }
      if (s.backend != "exact") {
        throw InvalidInput("--backend must be exact or approx");
      }
      if (json_io::backend_of(doc) == "approx") {
        throw InvalidInput("approximate entries need --backend approx");
      }
      return true;
    }

    CommandResult decided(bool yes, json report, std::string summary) {
      return {yes ? Success : Negative, std::move(report), std::move(summary)};
    }

    json matrices(std::vector<ApproxMatrix> const& ms) {
      json out = json::array();
      for (auto const& m : ms) {
        out.push_back(json_io::to_json(m));
      }
      return out;
    }

    // Dispatch a representation document to the chosen backend.
    template <typename F>
    CommandResult with_rep(Settings const& s, std::string const& path, F&& f) {
      json const doc = read_json(path);
      if (exact(s, doc)) {
        return f(json_io::rep_from_json<Cyclo>(doc));
      }
      return f(json_io::rep_from_json<Approx>(doc));
    }

    ////////////////////////////////////////////////////////////////////
    // quandle
    ////////////////////////////////////////////////////////////////////

    CommandResult quandle_validate(std::string const& path) {
      json const doc = read_json(path);
      if (!doc.contains("table")) {
        throw InvalidInput("quandle JSON needs a table");
      }
      OperationTable table;
      try {
        table = doc.at("table").get<OperationTable>();
      } catch (json::exception const&) {
        throw InvalidInput("quandle table must be a matrix of nonnegative integers");
      }
      if (auto v = check_quandle_axioms(table)) {
        return decided(false, json{{"valid", false}, {"violation", v->describe()},
                                   {"witness", v->witness}},
                       "invalid: " + v->describe());
      }
      json_io::quandle_from_json(doc);
      return decided(true, json{{"valid", true}, {"size", table.size()}}, "valid");
    }

    CommandResult quandle_info(std::string const& path) {
      Quandle const q    = json_io::quandle_from_json(read_json(path));
      auto const    inn  = inner_group(q);
      auto const    orbs = orbits(q);
      json          report{{"size", q.size()},
                           {"trivial", q.is_trivial()},
                           {"orbits", orbs},
                           {"inner_group_order", inn.order()},
                           {"inner_group_abelian", inn.is_abelian()},
                           {"translation_orders", inn.generator_orders()}};
      if (!q.labels().empty()) {
        report["labels"] = q.labels();
      }
      return {Success, std::move(report),
              std::to_string(q.size()) + " elements, " + std::to_string(orbs.size())
                  + " orbits, |Inn| = " + std::to_string(inn.order())};
    }

    ////////////////////////////////////////////////////////////////////
    // rep
    ////////////////////////////////////////////////////////////////////

    CommandResult rep_validate(Settings const& s, std::string const& path) {
      try {
        return with_rep(s, path, [](auto const& rep) {
          return decided(true, json{{"valid", true}, {"dim", rep.dim()}}, "valid");
        });
      } catch (NotInvertible const& e) {
        return decided(false, json{{"valid", false}, {"violation", e.what()},
                                   {"witness", {e.element}}},
                       e.what());
      } catch (RelationViolation const& e) {
        return decided(false, json{{"valid", false}, {"violation", e.what()},
                                   {"witness", {e.x, e.y}}},
                       e.what());
      }
    }

    CommandResult rep_irreducible(Settings const& s, std::string const& path) {
      return with_rep(s, path, [](auto const& rep) {
        auto const closure = algebra_closure(rep.images(), rep.dim());
        bool const irr     = closure.dimension == rep.dim() * rep.dim();
        return decided(irr,
                       json{{"irreducible", irr},
                            {"dim", rep.dim()},
                            {"algebra_dimension", closure.dimension}},
                       irr ? "irreducible" : "reducible");
      });
    }

    CommandResult rep_reducible(Settings const& s, std::string const& path) {
      json const doc = read_json(path);
      if (!exact(s, doc)) {
        throw InvalidInput("complete reducibility is decided on the exact backend only");
      }
      auto const rep = json_io::rep_from_json<Cyclo>(doc);
      auto const cr  = complete_reducibility(rep);
      json       report{{"completely_reducible", cr.completely_reducible}};
      if (cr.witness) {
        auto const& m = rep.image(*cr.witness);
        report["witness"] = {{"element", *cr.witness},
                             {"matrix", json_io::to_json(m)},
                             {"minimal_polynomial", minimal_polynomial(m).to_string()}};
        return decided(false, std::move(report),
                       "not completely reducible: rho(" + std::to_string(*cr.witness)
                           + ") is not diagonalizable");
      }
      return decided(true, std::move(report), "completely reducible");
    }

    CommandResult rep_decompose(Settings const& s, std::string const& path) {
      return with_rep(s, path, [&](auto const& rep) {
        Decomposition const dec = decompose(rep, s.seed);
        json                blocks = json::array();
        for (auto const& b : dec.blocks) {
          blocks.push_back(json{{"dim", b.images.front().rows()},
                                {"basis", json_io::to_json(b.basis)},
                                {"images", matrices(b.images)}});
        }
        return CommandResult{Success,
                             json{{"seed", dec.seed}, {"blocks", std::move(blocks)}},
                             std::to_string(dec.blocks.size()) + " irreducible blocks"};
      });
    }

    CommandResult rep_unitary(Settings const& s, std::string const& path,
                              std::string const& gram_path) {
      json const gdoc = read_json(gram_path);
      return with_rep(s, path, [&](auto const& rep) {
        using S      = typename std::decay_t<decltype(rep)>::scalar_type;
        auto const g = json_io::matrix_from_json<S>(gdoc);
        bool const u = is_hermitian(g) && is_positive_definite(g) && is_unitary(rep, g);
        return decided(u, json{{"unitary", u}}, u ? "unitary" : "not unitary");
      });
    }

    CommandResult rep_unitarizable(Settings const& s, std::string const& path) {
      return with_rep(s, path, [](auto const& rep) {
        bool const u = is_unitarizable(rep);
        json       dets = json::array();
        for (auto const& m : rep.images()) {
          dets.push_back(json_io::to_json(determinant(m).norm_sq()));
        }
        return decided(u, json{{"unitarizable", u}, {"det_norm_sq", std::move(dets)}},
                       u ? "unitarizable" : "not unitarizable");
      });
    }

    CommandResult rep_unitarize(Settings const& s, std::string const& path) {
      UnitarizeOptions const opts{exponent_mode(s), s.max_cosets};
      return with_rep(s, path, [&](auto const& rep) {
        try {
          auto const g = unitarize(rep, opts);
          return CommandResult{Success, json_io::to_json(g), "invariant Gram matrix"};
        } catch (NotUnitarizable const& e) {
          return decided(false, json{{"unitarizable", false}, {"witness", e.element}},
                         e.what());
        }
      });
    }

    CommandResult rep_det_character(Settings const& s, std::string const& path) {
      json const doc = read_json(path);
      if (exact(s, doc)) {
        auto const rep = json_io::rep_from_json<Cyclo>(doc);
        try {
          auto chi = det_character(rep);
          return {Success, json{{"backend", "cyclo"}, {"character", json_io::to_json(chi)}},
                  "exact determinant character"};
        } catch (NotExactlyRepresentable const&) {
          auto chi = det_character(embed(rep));
          return {Success, json{{"backend", "approx"}, {"character", json_io::to_json(chi)}},
                  "determinant character (approximate: no exact root)"};
        }
      }
      auto const chi = det_character(json_io::rep_from_json<Approx>(doc));
      return {Success, json{{"backend", "approx"}, {"character", json_io::to_json(chi)}},
              "approximate determinant character"};
    }

    CommandResult rep_twist(Settings const& s, std::string const& path,
                            std::string const& char_path) {
      json const cdoc = read_json(char_path);
      json const& c   = cdoc.contains("character") ? cdoc.at("character") : cdoc;
      return with_rep(s, path, [&](auto const& rep) {
        using S        = typename std::decay_t<decltype(rep)>::scalar_type;
        auto const chi = json_io::character_from_json<S>(rep.quandle(), c);
        return CommandResult{Success, json_io::to_json(twist(rep, chi)), "twisted"};
      });
    }

    CommandResult rep_equiv(Settings const& s, std::string const& a_path,
                            std::string const& b_path) {
      json const a = read_json(a_path);
      json const b = read_json(b_path);
      if (!exact(s, a) || !exact(s, b)) {
        throw InvalidInput("equivalence is decided on the exact backend only");
      }
      auto const eq = are_equivalent(json_io::rep_from_json<Cyclo>(a),
                                     json_io::rep_from_json<Cyclo>(b));
      json report{{"equivalent", eq.equivalent}};
      if (eq.witness) {
        report["witness"] = json_io::to_json(*eq.witness);
      }
      return decided(eq.equivalent, std::move(report),
                     eq.equivalent ? "equivalent" : "not equivalent");
    }

    ////////////////////////////////////////////////////////////////////
    // envgroup
    ////////////////////////////////////////////////////////////////////

    CommandResult env_abelianization(std::string const& path) {
      Quandle const q  = json_io::quandle_from_json(read_json(path));
      auto const    ab = abelianization(q);
      return {Success, json{{"rank", ab.rank}, {"orbit_of", ab.orbit_of}},
              "G(Q)^ab = Z^" + std::to_string(ab.rank)};
    }

    CommandResult env_quotient(Settings const& s, std::string const& path) {
      Quandle const q = json_io::quandle_from_json(read_json(path));
      auto const    e = central_exponents(q, exponent_mode(s));
      auto const    h = coset_enumerate(q, e, s.max_cosets);
      json          report = json_io::to_json(h);
      report["exponents"]  = e;
      report["abelian"]    = h.is_abelian();
      std::size_t longest  = 0;
      for (auto const& w : h.sections()) {
        longest = std::max(longest, w.size());
      }
      return {Success, std::move(report),
              "|H| = " + std::to_string(h.order()) + (h.is_abelian() ? ", abelian" : ", nonabelian")
                  + ", longest section word " + std::to_string(longest)};
    }

    CommandResult env_abelian_report(Settings const& s, std::string const& path,
                                     std::vector<std::string> const& rep_paths) {
      Quandle const         q = json_io::quandle_from_json(read_json(path));
      std::vector<CycloRep> reps;
      for (auto const& p : rep_paths) {
        reps.push_back(json_io::rep_from_json<Cyclo>(read_json(p)));
        if (!(reps.back().quandle() == q)) {
          throw QuandleMismatch();
        }
      }
      auto const r = enveloping_abelian_report(q, reps, exponent_mode(s), s.max_cosets);
      json       witnesses = json::array();
      for (auto const& w : r.witnesses) {
        switch (w.kind) {
          case NonAbelianWitness::Kind::InnerGroup:
            witnesses.push_back({{"kind", "inner_group"}, {"generators", {w.a, w.b}}});
            break;
          case NonAbelianWitness::Kind::Quotient:
            witnesses.push_back({{"kind", "quotient"}, {"generators", {w.a, w.b}}});
            break;
          case NonAbelianWitness::Kind::Irreducible:
            witnesses.push_back(
                {{"kind", "irreducible"}, {"representation", w.a}, {"dim", w.dimension}});
            break;
          case NonAbelianWitness::Kind::QuotientIrreducible:
            witnesses.push_back({{"kind", "quotient_irreducible"},
                                 {"dim", w.dimension},
                                 {"images", matrices(w.images)}});
            break;
        }
      }
      json report{{"verdict", to_string(r.verdict)},
                  {"witnesses", std::move(witnesses)},
                  {"inner_group_abelian", r.inner_group_abelian}};
      report["quotient_abelian"] =
          r.quotient_abelian ? json(*r.quotient_abelian) : json(nullptr);
      report["quotient_order"] = r.quotient_order ? json(*r.quotient_order) : json(nullptr);
      return decided(r.verdict != AbelianVerdict::Undetermined, std::move(report),
                     to_string(r.verdict));
    }

    ////////////////////////////////////////////////////////////////////
    // qnm
    ////////////////////////////////////////////////////////////////////

    IrrepParams irrep_params(int d, int k, std::string const& lambda, std::string const& beta) {
      return {d, k, json_io::parse_cyclo(lambda), json_io::parse_cyclo(beta)};
    }

    CommandResult qnm_build(std::size_t n, std::size_t m) {
      Quandle const q = build_qnm(n, m);
      return {Success, json_io::to_json(q),
              "Q_{" + std::to_string(n) + "," + std::to_string(m) + "}"};
    }

    CommandResult qnm_rep(std::size_t n, std::size_t m, IrrepParams const& ip) {
      QnmParams const p{n, m};
      auto const      rep = rho_alb(p, ip);
      verify_structure(p, ip, rep);
      return {Success, json_io::to_json(rep),
              "rho of dimension " + std::to_string(ip.d)};
    }

    CommandResult qnm_classify(std::size_t n, std::size_t m) {
      auto const c = classify_irreducibles(n, m);
      json       families = json::array();
      families.push_back({{"dim", 1},
                          {"kind", "character"},
                          {"parameters", "one nonzero value on the x orbit and one on the y orbit"}});
      for (auto const& f : c.families) {
        json alphas = json::array();
        for (int k : f.alpha_exponents) {
          alphas.push_back({{"k", k}, {"alpha", json_io::to_json(Cyclo::root_of_unity(f.d, k))}});
        }
        families.push_back({{"dim", f.d},
                            {"kind", "rho_alpha_lambda_beta"},
                            {"alphas", std::move(alphas)},
                            {"parameters", "lambda, beta nonzero; beta ~ beta * alpha^i"}});
      }
      return {Success, json{{"n", n}, {"m", m}, {"families", std::move(families)}},
              std::to_string(c.families.size()) + " families of dimension > 1"};
    }

    CommandResult qnm_equiv(IrrepParams const& a, IrrepParams const& b) {
      bool const eq = qnm_equivalent(a, b);
      return decided(eq, json{{"equivalent", eq}}, eq ? "equivalent" : "not equivalent");
    }

  }  // namespace

  CommandResult run(std::vector<std::string> const& args) {
    Settings s;
    CLI::App app{"quandle representation toolkit", "qrep"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--backend", s.backend, "exact or approx")
        ->check(CLI::IsMember({"exact", "approx"}));
    app.add_option("--exponents", s.exponents, "per-gen or inn-order")
        ->check(CLI::IsMember({"per-gen", "inn-order"}));
    app.add_option("--max-cosets", s.max_cosets);
    app.add_option("--seed", s.seed);
    app.add_option("--tolerance", s.tolerance)->check(CLI::PositiveNumber);

    std::function<CommandResult()> action;
    std::string                    file, second;
    std::vector<std::string>       extra;
    std::size_t                    n = 0, m = 0;
    int                            d = 0, k = 0, d2 = 0, k2 = 0;
    std::string                    lambda, beta, lambda2, beta2;

    auto leaf = [&](CLI::App* parent, std::string const& name, int files,
                    std::function<CommandResult()> f) {
      auto* sub = parent->add_subcommand(name);
      if (files >= 1) {
        sub->add_option("file", file)->required();
      }
      if (files >= 2) {
        sub->add_option("second", second)->required();
      }
      sub->callback([&action, f] { action = f; });
      return sub;
    };

    auto* qa = app.add_subcommand("quandle");
    qa->require_subcommand(1);
    leaf(qa, "validate", 1, [&] { return quandle_validate(file); });
    leaf(qa, "info", 1, [&] { return quandle_info(file); });

    auto* ra = app.add_subcommand("rep");
    ra->require_subcommand(1);
    leaf(ra, "validate", 1, [&] { return rep_validate(s, file); });
    leaf(ra, "irreducible", 1, [&] { return rep_irreducible(s, file); });
    leaf(ra, "reducible", 1, [&] { return rep_reducible(s, file); });
    leaf(ra, "decompose", 1, [&] { return rep_decompose(s, file); });
    leaf(ra, "unitary", 2, [&] { return rep_unitary(s, file, second); });
    leaf(ra, "unitarizable", 1, [&] { return rep_unitarizable(s, file); });
    leaf(ra, "unitarize", 1, [&] { return rep_unitarize(s, file); });
    leaf(ra, "det-character", 1, [&] { return rep_det_character(s, file); });
    leaf(ra, "twist", 2, [&] { return rep_twist(s, file, second); });
    leaf(ra, "equiv", 2, [&] { return rep_equiv(s, file, second); });

    auto* ea = app.add_subcommand("envgroup");
    ea->require_subcommand(1);
    leaf(ea, "abelianization", 1, [&] { return env_abelianization(file); });
    leaf(ea, "quotient", 1, [&] { return env_quotient(s, file); });
    leaf(ea, "abelian-report", 1, [&] { return env_abelian_report(s, file, extra); })
        ->add_option("--rep", extra, "candidate representation files");

    auto* na = app.add_subcommand("qnm");
    na->require_subcommand(1);
    auto* nb = leaf(na, "build", 0, [&] { return qnm_build(n, m); });
    nb->add_option("n", n)->required()->check(CLI::PositiveNumber);
    nb->add_option("m", m)->required()->check(CLI::PositiveNumber);
    auto* nr = leaf(na, "rep", 0,
                    [&] { return qnm_rep(n, m, irrep_params(d, k, lambda, beta)); });
    nr->add_option("n", n)->required()->check(CLI::PositiveNumber);
    nr->add_option("m", m)->required()->check(CLI::PositiveNumber);
    nr->add_option("d", d)->required();
    nr->add_option("k", k)->required();
    nr->add_option("lambda", lambda)->required();
    nr->add_option("beta", beta)->required();
    auto* nc = leaf(na, "classify", 0, [&] { return qnm_classify(n, m); });
    nc->add_option("n", n)->required()->check(CLI::PositiveNumber);
    nc->add_option("m", m)->required()->check(CLI::PositiveNumber);
    auto* ne = leaf(na, "equiv", 0, [&] {
      return qnm_equiv(irrep_params(d, k, lambda, beta), irrep_params(d2, k2, lambda2, beta2));
    });
    ne->add_option("d", d)->required();
    ne->add_option("k", k)->required();
    ne->add_option("lambda", lambda)->required();
    ne->add_option("beta", beta)->required();
    ne->add_option("d2", d2)->required();
    ne->add_option("k2", k2)->required();
    ne->add_option("lambda2", lambda2)->required();
    ne->add_option("beta2", beta2)->required();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      return {Success, json{{"usage", app.help()}}, "usage"};
    } catch (CLI::ParseError const& e) {
      return {InputError, json{{"error", "usage"}, {"message", e.what()}},
              std::string("usage error: ") + e.what()};
    }
    if (!action) {
      return {InputError, json{{"error", "usage"}, {"message", "no command"}}, "no command"};
    }

    double const saved_tolerance = approx_tolerance();
    set_approx_tolerance(s.tolerance);
    CommandResult result;
    auto fail = [](int code, std::string const& kind, std::string const& what) {
      return CommandResult{code, json{{"error", kind}, {"message", what}}, kind + ": " + what};
    };
    try {
      result = action();
    } catch (ResourceLimit const& e) {
      result = fail(ResourceError, "resource_limit", e.what());
    } catch (Error const& e) {
      result = fail(InputError, "input", e.what());
    } catch (json::exception const& e) {
      result = fail(InputError, "json", e.what());
    } catch (std::exception const& e) {
      result = fail(InputError, "input", e.what());
    }
    set_approx_tolerance(saved_tolerance);
    return result;
  }

}  // namespace qrep::cli
