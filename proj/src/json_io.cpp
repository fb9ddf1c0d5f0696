#include "qrep/json_io.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace qrep::json_io {

  json to_json(Cyclo const& z) {
    json coeffs = json::array();
    for (auto const& c : z.coeffs()) {
      coeffs.push_back(json::array({c.get_num().get_str(), c.get_den().get_str()}));
    }
    return json{{"N", z.conductor()}, {"coeffs", std::move(coeffs)}};
  }

  json to_json(Approx const& z) {
    return json{{"re", z.re()}, {"im", z.im()}};
  }

  namespace {

    Rational rational_from_json(json const& c) {
      try {
        if (c.is_number_integer()) {
          return Rational(c.get<long>());
        }
        if (c.is_string()) {
          Rational q(c.get<std::string>());
          q.canonicalize();
          return q;
        }
        if (c.is_array() && c.size() == 2) {
          Integer num(c[0].is_string() ? c[0].get<std::string>() : std::to_string(c[0].get<long>()));
          Integer den(c[1].is_string() ? c[1].get<std::string>() : std::to_string(c[1].get<long>()));
          if (den == 0) {
            throw InvalidInput("zero denominator");
          }
          Rational q(num, den);
          q.canonicalize();
          return q;
        }
      } catch (std::invalid_argument const&) {
      }
      throw InvalidInput("malformed rational: " + c.dump());
    }

  }  // namespace

  Cyclo cyclo_from_json(json const& j) {
    if (j.is_string()) {
      return parse_cyclo(j.get<std::string>());
    }
    if (j.is_number_integer()) {
      return Cyclo(j.get<long>());
    }
    if (!j.is_object() || !j.contains("N") || !j.contains("coeffs")) {
      throw InvalidInput("malformed exact scalar: " + j.dump());
    }
    int const N = j.at("N").get<int>();
    if (N < 1) {
      throw InvalidInput("conductor must be positive");
    }
    std::vector<Rational> coeffs;
    for (auto const& c : j.at("coeffs")) {
      coeffs.push_back(rational_from_json(c));
    }
    return Cyclo(N, std::move(coeffs));
  }

  Approx approx_from_json(json const& j) {
    if (j.is_number()) {
      return Approx(j.get<double>());
    }
    if (j.is_string()) {
      return parse_approx(j.get<std::string>());
    }
    if (j.is_object() && j.contains("re")) {
      return Approx(j.at("re").get<double>(), j.value("im", 0.0));
    }
    return embed(cyclo_from_json(j));
  }

  namespace {

    struct Cursor {
      std::string_view s;
      std::size_t      pos = 0;

      bool done() const {
        return pos >= s.size();
      }
      char peek() const {
        return done() ? '\0' : s[pos];
      }
      [[noreturn]] void fail() const {
        throw InvalidInput("cannot parse scalar literal '" + std::string(s) + "'");
      }
      Integer integer() {
        std::size_t const start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
          ++pos;
        }
        if (start == pos) {
          fail();
        }
        return Integer(std::string(s.substr(start, pos - start)));
      }
      long small() {
        Integer const v = integer();
        if (!v.fits_slong_p()) {
          fail();
        }
        return v.get_si();
      }
      bool eat(std::string_view t) {
        if (s.substr(pos, t.size()) == t) {
          pos += t.size();
          return true;
        }
        return false;
      }
    };

    // [coef][*](zeta|z)N[^k]  or  coef
    Cyclo term(Cursor& c) {
      Rational coef(1);
      bool     have_coef = false;
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        Integer num = c.integer();
        Integer den(1);
        if (c.eat("/")) {
          den = c.integer();
          if (den == 0) {
            throw InvalidInput("zero denominator in literal");
          }
        }
        coef = Rational(num, den);
        coef.canonicalize();
        have_coef = true;
        if (!c.eat("*")) {
          return Cyclo(coef);
        }
      }
      if (c.eat("zeta") || c.eat("z")) {
        long const N = c.small();
        long       k = 1;
        if (c.eat("^")) {
          bool const neg = c.eat("-");
          k              = c.small();
          if (neg) {
            k = -k;
          }
        }
        if (N < 1 || N > 1000000) {
          c.fail();
        }
        return Cyclo(coef) * Cyclo::root_of_unity(static_cast<int>(N), k);
      }
      if (have_coef) {
        c.fail();
      }
      c.fail();
    }

  }  // namespace

  Cyclo parse_cyclo(std::string_view text) {
    std::string compact;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) {
        compact.push_back(ch);
      }
    }
    Cursor c{compact};
    if (c.done()) {
      c.fail();
    }
    Cyclo sum;
    bool  first = true;
    while (!c.done()) {
      bool neg = false;
      if (c.eat("-")) {
        neg = true;
      } else if (!c.eat("+") && !first) {
        c.fail();
      }
      Cyclo t = term(c);
      sum     = neg ? sum - t : sum + t;
      first   = false;
    }
    return sum;
  }

  Approx parse_approx(std::string_view text) {
    if (text.starts_with("c:")) {
      auto const rest = text.substr(2);
      auto const sep  = rest.find(':');
      if (sep == std::string_view::npos) {
        throw InvalidInput("complex literal must be c:re:im");
      }
      auto number = [&](std::string_view part) {
        try {
          std::size_t used = 0;
          double      v    = std::stod(std::string(part), &used);
          if (used != part.size()) {
            throw InvalidInput("bad number '" + std::string(part) + "'");
          }
          return v;
        } catch (std::logic_error const&) {
          throw InvalidInput("bad number '" + std::string(part) + "'");
        }
      };
      return Approx(number(rest.substr(0, sep)), number(rest.substr(sep + 1)));
    }
    return embed(parse_cyclo(text));
  }

  std::string backend_of(json const& j) {
    if (j.contains("images")) {
      for (auto const& [key, m] : j.at("images").items()) {
        if (m.value("backend", std::string("cyclo")) == "approx") {
          return "approx";
        }
      }
      return "cyclo";
    }
    return j.value("backend", std::string("cyclo"));
  }

  json to_json(Quandle const& q) {
    json j{{"size", q.size()}, {"table", q.table()}};
    if (!q.labels().empty()) {
      j["labels"] = q.labels();
    }
    return j;
  }

  Quandle quandle_from_json(json const& j) {
    if (!j.is_object() || !j.contains("table")) {
      throw InvalidInput("quandle JSON needs a table");
    }
    OperationTable t;
    try {
      t = j.at("table").get<OperationTable>();
    } catch (json::exception const&) {
      throw InvalidInput("quandle table must be a matrix of nonnegative integers");
    }
    if (j.contains("size") && j.at("size").get<std::size_t>() != t.size()) {
      throw InvalidInput("declared size does not match the table");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
      if (labels.size() != t.size()) {
        throw InvalidInput("need one label per element");
      }
    }
    return validate_quandle(std::move(t), std::move(labels));
  }

  json to_json(FiniteQuotient const& h) {
    json sections = json::array();
    for (auto const& w : h.sections()) {
      json word = json::array();
      for (auto const& l : w) {
        word.push_back(encode_letter(l));
      }
      sections.push_back(std::move(word));
    }
    return json{{"order", h.order()},
                {"generators", h.generators()},
                {"table", h.table()},
                {"sections", std::move(sections)}};
  }

}  // namespace qrep::json_io
