#include <catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "qrep/cli.hpp"
#include "qrep/json_io.hpp"
#include "qrep/qnm.hpp"

using namespace qrep;
using json_io::json;

namespace {

  class Workdir {
   public:
    Workdir() {
      _dir = std::filesystem::temp_directory_path()
             / ("qrep_cli_" + std::to_string(::getpid()));
      std::filesystem::create_directories(_dir);
    }
    ~Workdir() {
      std::filesystem::remove_all(_dir);
    }
    std::string write(std::string const& name, json const& j) const {
      auto const path = _dir / name;
      std::ofstream(path) << j.dump();
      return path.string();
    }
    std::string write_text(std::string const& name, std::string const& text) const {
      auto const path = _dir / name;
      std::ofstream(path) << text;
      return path.string();
    }

   private:
    std::filesystem::path _dir;
  };

  cli::CommandResult run(std::vector<std::string> args) {
    return cli::run(args);
  }

}  // namespace

TEST_CASE("scalar literals") {
  auto const z8 = Cyclo::root_of_unity(8, 1);
  CHECK(json_io::parse_cyclo("2") == Cyclo(2));
  CHECK(json_io::parse_cyclo("-1/3") == Cyclo(Rational(-1, 3)));
  CHECK(json_io::parse_cyclo("zeta8^3") == Cyclo::root_of_unity(8, 3));
  CHECK(json_io::parse_cyclo("2*zeta8^3") == Cyclo(2) * Cyclo::root_of_unity(8, 3));
  CHECK(json_io::parse_cyclo("-zeta3") == -Cyclo::root_of_unity(3, 1));
  CHECK(json_io::parse_cyclo("zeta8^-1") == z8.inverse());
  CHECK(json_io::parse_cyclo("1/2 + 3*z8^2") == Cyclo(Rational(1, 2)) + Cyclo(3) * z8 * z8);
  for (auto bad : {"", "z", "2*", "1/0", "3x", "zeta0"}) {
    CHECK_THROWS_AS(json_io::parse_cyclo(bad), InvalidInput);
  }
  CHECK(json_io::parse_approx("c:1.5:-2") == Approx(1.5, -2));
  CHECK(json_io::parse_approx("zeta4") == Approx(0, 1));
  CHECK_THROWS_AS(json_io::parse_approx("c:1"), InvalidInput);
}

TEST_CASE("scalar and matrix round trips") {
  auto const z = Cyclo(Rational(3, 7)) + Cyclo(-2) * Cyclo::root_of_unity(12, 5);
  CHECK(json_io::cyclo_from_json(json_io::to_json(z)) == z);
  CHECK(json_io::approx_from_json(json_io::to_json(Approx(0.25, -1))) == Approx(0.25, -1));
  CycloMatrix const m{{z, 1}, {0, Cyclo::root_of_unity(5, 2)}};
  auto const        j = json_io::to_json(m);
  CHECK(j.at("backend") == "cyclo");
  CHECK(json_io::matrix_from_json<Cyclo>(j) == m);
  CHECK(json_io::matrix_from_json<Approx>(j) == embed(m));
  CHECK_THROWS_AS(json_io::matrix_from_json<Cyclo>(json_io::to_json(embed(m))), InvalidInput);
}

TEST_CASE("quandle and representation round trips") {
  auto const q = build_qnm(2, 3);
  CHECK(json_io::quandle_from_json(json_io::to_json(q)) == q);
  auto const rep  = rho_alb({2, 2}, {2, 1, Cyclo::root_of_unity(8, 1), Cyclo(1)});
  auto const back = json_io::rep_from_json<Cyclo>(json_io::to_json(rep));
  CHECK(back.images() == rep.images());
  auto bad = json_io::to_json(rep);
  bad["images"]["0"] = json_io::to_json(CycloMatrix::identity(2));
  CHECK_THROWS_AS(json_io::rep_from_json<Cyclo>(bad), RelationViolation);
  CHECK_THROWS_AS(json_io::quandle_from_json(json{{"table", {{1, 1}, {0, 1}}}}),
                  QuandleAxiomViolation);
}

TEST_CASE("cli exit codes") {
  Workdir w;
  auto const q22 = w.write("q22.json", json_io::to_json(build_qnm(2, 2)));
  auto r         = run({"quandle", "validate", q22});
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("valid") == true);

  auto const bad = w.write("bad.json", json{{"size", 2}, {"table", {{1, 1}, {0, 1}}}});
  r              = run({"quandle", "validate", bad});
  CHECK(r.exit_code == 1);
  CHECK(r.report.at("violation") == "IdempotenceViolation(0)");

  auto const uni = w.write("unipotent.json", json_io::to_json(fixture::unipotent(trivial_quandle(2))));
  r              = run({"rep", "reducible", uni});
  CHECK(r.exit_code == 1);
  CHECK(r.report.at("witness").at("element") == 0);

  CHECK(run({"quandle", "validate", w.write_text("junk.json", "{not json")}).exit_code == 2);
  CHECK(run({"quandle", "validate", "/nonexistent/file.json"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"qnm", "rep", "2", "2", "3", "1", "1", "1"}).exit_code == 2);

  auto const q44 = w.write("q44.json", json_io::to_json(build_qnm(4, 4)));
  CHECK(run({"envgroup", "quotient", q44, "--max-cosets", "10"}).exit_code == 3);
}

TEST_CASE("cli pipelines") {
  Workdir w;
  auto r = run({"qnm", "classify", "2", "2"});
  REQUIRE(r.exit_code == 0);
  auto const& fams = r.report.at("families");
  REQUIRE(fams.size() == 2);
  CHECK(fams[1].at("dim") == 2);
  CHECK(json_io::cyclo_from_json(fams[1].at("alphas")[0].at("alpha")) == Cyclo(-1));

  r = run({"qnm", "rep", "2", "2", "2", "1", "1", "1"});
  REQUIRE(r.exit_code == 0);
  auto const rep = w.write("rho.json", r.report);

  CHECK(run({"rep", "validate", rep}).exit_code == 0);
  CHECK(run({"rep", "irreducible", rep}).exit_code == 0);
  CHECK(run({"rep", "reducible", rep}).exit_code == 0);
  CHECK(run({"rep", "unitarizable", rep}).exit_code == 0);

  r = run({"rep", "unitarize", rep});
  REQUIRE(r.exit_code == 0);
  CHECK(json_io::matrix_from_json<Cyclo>(r.report) == Cyclo(8) * CycloMatrix::identity(2));
  auto const gram = w.write("gram.json", r.report);
  CHECK(run({"rep", "unitary", rep, gram}).exit_code == 0);
  CHECK(run({"rep", "unitary", rep, w.write("neg.json", json_io::to_json(
                                                 Cyclo(-1) * CycloMatrix::identity(2)))})
            .exit_code == 1);

  r = run({"rep", "det-character", rep});
  REQUIRE(r.exit_code == 0);
  CHECK(r.report.at("backend") == "cyclo");
  auto const chi = w.write("chi.json", r.report);
  r              = run({"rep", "twist", rep, chi});
  REQUIRE(r.exit_code == 0);
  auto const twisted = json_io::rep_from_json<Cyclo>(r.report);
  for (auto const& m : twisted.images()) {
    CHECK(determinant(m) == Cyclo(1));
  }

  auto const other = w.write("other.json", run({"qnm", "rep", "2", "2", "2", "1", "1", "-1"}).report);
  CHECK(run({"rep", "equiv", rep, other}).exit_code == 0);
  auto const far = w.write("far.json", run({"qnm", "rep", "2", "2", "2", "1", "-1", "1"}).report);
  CHECK(run({"rep", "equiv", rep, far}).exit_code == 1);
  CHECK(run({"qnm", "equiv", "2", "1", "1", "1", "2", "1", "1", "-1"}).exit_code == 0);
  CHECK(run({"qnm", "equiv", "2", "1", "1", "1", "2", "1", "-1", "1"}).exit_code == 1);

  auto const q22 = w.write("q22.json", run({"qnm", "build", "2", "2"}).report);
  r              = run({"envgroup", "abelian-report", q22, "--rep", rep});
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("verdict") == "NonAbelian");
  r = run({"envgroup", "quotient", q22});
  CHECK(r.report.at("order") == 8);
  r = run({"envgroup", "quotient", q22, "--exponents", "inn-order"});
  CHECK(r.exit_code == 0);
  CHECK(run({"envgroup", "abelianization", q22}).report.at("rank") == 2);

  auto const perm = w.write("perm.json", json_io::to_json(permutation_rep(build_qnm(2, 2), {0, 1, 2, 3})));
  r = run({"rep", "decompose", perm, "--seed", "5"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.report.at("blocks").size() == 4);
  CHECK(run({"rep", "decompose", perm, "--seed", "5"}).report.dump() == r.report.dump());
  CHECK(run({"rep", "irreducible", perm, "--backend", "approx"}).exit_code == 1);

  auto const lam2 = w.write("lam2.json", run({"qnm", "rep", "2", "2", "2", "1", "2", "1"}).report);
  CHECK(run({"rep", "unitarizable", lam2}).exit_code == 1);
  r = run({"rep", "det-character", lam2});
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("backend") == "approx");
}
