#ifndef QREP_JSON_IO_HPP_
#define QREP_JSON_IO_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

#include "qrep/envgroup.hpp"
#include "qrep/matrix.hpp"
#include "qrep/quandle.hpp"
#include "qrep/representation.hpp"
#include "qrep/reptheory.hpp"
#include "qrep/scalar.hpp"

namespace qrep::json_io {

  using json = nlohmann::ordered_json;

  // Scalars.  Cyclo: {"N": n, "coeffs": [["num", "den"], ...]} in the power
  // basis.  Approx: {"re": x, "im": y}.
  json  to_json(Cyclo const& z);
  json  to_json(Approx const& z);
  Cyclo cyclo_from_json(json const& j);
  // Accepts either encoding; Cyclo values are embedded.
  Approx approx_from_json(json const& j);

  // Literals such as "2", "-1/3", "zeta8^3", "2*zeta8^3", "-zeta3",
  // "1/2 + 3*z8^2".
  Cyclo parse_cyclo(std::string_view text);
  // "c:re:im", or anything parse_cyclo accepts.
  Approx parse_approx(std::string_view text);

  template <typename S>
  S scalar_from_json(json const& j);
  template <>
  inline Cyclo scalar_from_json<Cyclo>(json const& j) {
    return cyclo_from_json(j);
  }
  template <>
  inline Approx scalar_from_json<Approx>(json const& j) {
    return approx_from_json(j);
  }

  // {"rows": r, "cols": c, "backend": "cyclo"|"approx", "entries": [...]},
  // entries in row-major order.
  template <typename S>
  json to_json(Matrix<S> const& m) {
    json entries = json::array();
    for (auto const& e : m.entries()) {
      entries.push_back(to_json(e));
    }
    return json{{"rows", m.rows()},
                {"cols", m.cols()},
                {"backend", scalar_traits<S>::backend},
                {"entries", std::move(entries)}};
  }

  template <typename S>
  Matrix<S> matrix_from_json(json const& j) {
    auto const rows = j.at("rows").get<std::size_t>();
    auto const cols = j.at("cols").get<std::size_t>();
    if constexpr (scalar_traits<S>::exact) {
      if (j.value("backend", std::string("cyclo")) != "cyclo") {
        throw InvalidInput("approximate matrix where an exact one is required");
      }
    }
    std::vector<S> entries;
    for (auto const& e : j.at("entries")) {
      entries.push_back(scalar_from_json<S>(e));
    }
    return Matrix<S>(rows, cols, std::move(entries));
  }

  std::string backend_of(json const& matrix_or_rep);

  // {"size": k, "table": [[...]], "labels": [...]}
  json    to_json(Quandle const& q);
  Quandle quandle_from_json(json const& j);

  // {"quandle": {...}, "dim": d, "images": {"0": Matrix, ...}}
  template <typename S>
  json to_json(Representation<S> const& rep) {
    json images = json::object();
    for (element_index x = 0; x < rep.quandle().size(); ++x) {
      images[std::to_string(x)] = to_json(rep.image(x));
    }
    return json{{"quandle", to_json(rep.quandle())},
                {"dim", rep.dim()},
                {"images", std::move(images)}};
  }

  // Validates the quandle and the representation relations.
  template <typename S>
  Representation<S> rep_from_json(json const& j) {
    Quandle                q = quandle_from_json(j.at("quandle"));
    std::vector<Matrix<S>> images;
    auto const&            img = j.at("images");
    for (element_index x = 0; x < q.size(); ++x) {
      auto const key = std::to_string(x);
      if (!img.contains(key)) {
        throw InvalidInput("missing image for element " + key);
      }
      images.push_back(matrix_from_json<S>(img.at(key)));
    }
    if (img.size() != q.size()) {
      throw InvalidInput("images keyed by unknown elements");
    }
    auto rep = validate_rep(std::move(q), std::move(images));
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != rep.dim()) {
      throw DimensionMismatch("declared dim does not match the images");
    }
    return rep;
  }

  // {"order": n, "table": [...], "sections": [[signed ints], ...]}
  json to_json(FiniteQuotient const& h);

  // {"orbit_of": [...], "orbit_values": [scalar, ...]}
  template <typename S>
  json to_json(Character<S> const& chi) {
    json values = json::array();
    for (auto const& v : chi.orbit_values) {
      values.push_back(to_json(v));
    }
    return json{{"orbit_of", chi.orbit_of}, {"orbit_values", std::move(values)}};
  }

  template <typename S>
  Character<S> character_from_json(Quandle const& q, json const& j) {
    std::vector<S> values;
    for (auto const& v : j.at("orbit_values")) {
      values.push_back(scalar_from_json<S>(v));
    }
    auto chi = character_from_orbit_values(q, std::move(values));
    if (j.contains("orbit_of") && j.at("orbit_of").get<std::vector<std::size_t>>() != chi.orbit_of) {
      throw InvalidInput("orbit_of does not match the quandle's orbits");
    }
    return chi;
  }

}  // namespace qrep::json_io

#endif  // QREP_JSON_IO_HPP_
