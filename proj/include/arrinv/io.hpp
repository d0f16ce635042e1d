#pragma once

// Arrangement file formats and report serialization.
//
// Text format: `#` starts a comment anywhere; the first content line is
// `dim <n>`; every further content line is one hyperplane written as n
// whitespace-separated rational tokens, `=`, and one rational token.
// JSON format: {"dimension": n, "hyperplanes": [{"coeffs": [...],
// "rhs": "..."}], "name": optional}.  Rationals travel as strings (or exact
// JSON integers), never floats.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "arrinv/arrangement.hpp"
#include "arrinv/errors.hpp"
#include "arrinv/invariants.hpp"
#include "arrinv/rational.hpp"

namespace arrinv {

struct RawHyperplane {
  std::vector<Rational> coeffs;
  Rational rhs;
};

// An arrangement as read from (or written to) a file, before
// canonicalization and distinctness checks.
struct ArrangementInput {
  std::string name;  // optional
  std::size_t dimension = 0;
  std::vector<RawHyperplane> hyperplanes;
};

inline Arrangement to_arrangement(const ArrangementInput& in) {
  std::vector<std::pair<std::vector<Rational>, Rational>> raw;
  raw.reserve(in.hyperplanes.size());
  for (const auto& h : in.hyperplanes) raw.emplace_back(h.coeffs, h.rhs);
  return Arrangement::build(in.dimension, raw);
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

inline Rational parse_rational_token(const std::string& tok, std::size_t line_no,
                                     const std::string& field) {
  try {
    return Rational::from_string(tok);
  } catch (const std::exception&) {
    throw ParseError(line_no, "bad rational token '" + tok + "' in " + field);
  }
}

}  // namespace detail

inline ArrangementInput parse_arrangement_text(std::istream& in) {
  ArrangementInput out;
  bool have_dim = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    if (!have_dim) {
      if (tokens.size() != 2 || tokens[0] != "dim")
        throw ParseError(line_no, "expected header 'dim <n>'");
      const std::string& t = tokens[1];
      if (t.empty() || t.size() > 6 || t.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line_no, "bad dimension '" + t + "'");
      out.dimension = static_cast<std::size_t>(std::stoull(t));
      have_dim = true;
      continue;
    }

    if (tokens.size() != out.dimension + 2)
      throw ParseError(line_no, "expected " + std::to_string(out.dimension) +
                                    " coefficients, '=', and one right-hand side (got " +
                                    std::to_string(tokens.size()) + " tokens)");
    if (tokens[out.dimension] != "=")
      throw ParseError(line_no, "expected '=' in field " + std::to_string(out.dimension + 1) +
                                    ", got '" + tokens[out.dimension] + "'");
    RawHyperplane h;
    h.coeffs.reserve(out.dimension);
    for (std::size_t j = 0; j < out.dimension; ++j)
      h.coeffs.push_back(detail::parse_rational_token(
          tokens[j], line_no, "coefficient " + std::to_string(j + 1)));
    h.rhs = detail::parse_rational_token(tokens[out.dimension + 1], line_no, "right-hand side");
    out.hyperplanes.push_back(std::move(h));
  }
  if (!have_dim) throw ParseError(0, "missing 'dim <n>' header");
  return out;
}

inline ArrangementInput parse_arrangement_text(const std::string& text) {
  std::istringstream is(text);
  return parse_arrangement_text(is);
}

namespace detail {

inline Rational rational_from_json(const nlohmann::json& v, const std::string& field) {
  if (v.is_string()) {
    try {
      return Rational::from_string(v.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(0, "bad rational '" + v.get<std::string>() + "' in " + field);
    }
  }
  if (v.is_number_integer() || v.is_number_unsigned())
    return Rational(parse_bigint(v.dump()));
  throw ParseError(0, field + " must be a rational string such as \"3/2\" (floats are rejected)");
}

}  // namespace detail

inline ArrangementInput parse_arrangement_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "top-level JSON value must be an object");
  if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
    throw ParseError(0, "'dimension' must be a nonnegative integer");

  ArrangementInput out;
  out.dimension = j["dimension"].get<std::size_t>();
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError(0, "'name' must be a string");
    out.name = j["name"].get<std::string>();
  }
  if (j.contains("hyperplanes")) {
    if (!j["hyperplanes"].is_array()) throw ParseError(0, "'hyperplanes' must be an array");
    std::size_t idx = 0;
    for (const auto& entry : j["hyperplanes"]) {
      const std::string where = "hyperplane " + std::to_string(idx);
      if (!entry.is_object() || !entry.contains("coeffs") || !entry.contains("rhs"))
        throw ParseError(0, where + " must be an object with 'coeffs' and 'rhs'");
      if (!entry["coeffs"].is_array() || entry["coeffs"].size() != out.dimension)
        throw ParseError(0, where + ": 'coeffs' must list exactly " +
                                std::to_string(out.dimension) + " entries");
      RawHyperplane h;
      for (const auto& c : entry["coeffs"])
        h.coeffs.push_back(detail::rational_from_json(c, where + " coefficient"));
      h.rhs = detail::rational_from_json(entry["rhs"], where + " rhs");
      out.hyperplanes.push_back(std::move(h));
      ++idx;
    }
  }
  return out;
}

// Dispatch on extension: *.json is JSON, everything else is the text format.
inline ArrangementInput load_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return parse_arrangement_json(buf.str());
  return parse_arrangement_text(buf.str());
}

inline std::string format_arrangement_text(const ArrangementInput& in) {
  std::ostringstream os;
  if (!in.name.empty()) os << "# " << in.name << "\n";
  os << "dim " << in.dimension << "\n";
  for (const auto& h : in.hyperplanes) {
    for (const auto& c : h.coeffs) os << c << ' ';
    os << "= " << h.rhs << "\n";
  }
  return os.str();
}

namespace detail {

inline nlohmann::ordered_json hyperplane_to_json(const std::vector<Rational>& coeffs,
                                                 const Rational& rhs) {
  nlohmann::ordered_json h;
  h["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : coeffs) h["coeffs"].push_back(c.to_string());
  h["rhs"] = rhs.to_string();
  return h;
}

// Exact-at-any-size integer serialization: a JSON number when it fits in
// int64, a decimal string otherwise.
inline nlohmann::ordered_json big_to_json(const BigInt& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.str();
}

}  // namespace detail

inline std::string format_arrangement_json(const ArrangementInput& in) {
  nlohmann::ordered_json j;
  if (!in.name.empty()) j["name"] = in.name;
  j["dimension"] = in.dimension;
  j["hyperplanes"] = nlohmann::ordered_json::array();
  for (const auto& h : in.hyperplanes)
    j["hyperplanes"].push_back(detail::hyperplane_to_json(h.coeffs, h.rhs));
  return j.dump(2) + "\n";
}

// Recursion tree serialization, truncated (in the output only) below
// `depth_left` levels.
inline nlohmann::ordered_json trace_to_json(const RecursionTrace& t, std::size_t depth_left = 64) {
  nlohmann::ordered_json j;
  j["hyperplanes"] = t.hyperplane_count;
  j["dim"] = t.ambient_dim;
  j["length"] = detail::big_to_json(t.length);
  if (t.deleted) {
    if (depth_left == 0) {
      j["truncated"] = true;
    } else {
      j["deleted"] = trace_to_json(*t.deleted, depth_left - 1);
      j["restricted"] = trace_to_json(*t.restricted, depth_left - 1);
    }
  }
  return j;
}

inline void trace_to_text(std::ostream& os, const RecursionTrace& t, const std::string& label,
                          std::size_t indent, std::size_t depth_left = 64) {
  os << std::string(indent, ' ') << label << "|A|=" << t.hyperplane_count
     << " dim=" << t.ambient_dim << " length=" << t.length.str() << "\n";
  if (!t.deleted) return;
  if (depth_left == 0) {
    os << std::string(indent + 2, ' ') << "... (truncated)\n";
    return;
  }
  trace_to_text(os, *t.deleted, "deleted: ", indent + 2, depth_left - 1);
  trace_to_text(os, *t.restricted, "restricted: ", indent + 2, depth_left - 1);
}

// The full analysis report.  The JSON and text renderings carry exactly the
// same numeric content.
inline nlohmann::ordered_json report_to_json(const std::string& name, const Arrangement& a,
                                             const InvariantReport& r,
                                             const RecursionTrace* trace = nullptr) {
  nlohmann::ordered_json j;
  if (!name.empty()) j["name"] = name;
  j["dimension"] = a.ambient_dim();
  j["hyperplanes"] = nlohmann::ordered_json::array();
  for (const auto& h : a.hyperplanes())
    j["hyperplanes"].push_back(detail::hyperplane_to_json(h.normal(), h.offset()));

  j["poincare"] = nlohmann::ordered_json::array();
  for (const auto& c : r.poincare.coefficients()) j["poincare"].push_back(c.str());
  j["length"] = detail::big_to_json(r.length);
  j["mult"] = detail::big_to_json(r.mult);
  j["length_recursive"] = detail::big_to_json(r.length_recursive);

  j["flats"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.poset.size(); ++i) {
    const Flat& f = r.poset.flat(i);
    nlohmann::ordered_json fj;
    fj["codim"] = f.codim();
    fj["mobius"] = r.poset.mobius(i).str();
    fj["equations"] = nlohmann::ordered_json::array();
    const Matrix& m = f.system.matrix();
    for (std::size_t row = 0; row < m.rows(); ++row) {
      std::vector<Rational> coeffs;
      for (std::size_t col = 0; col + 1 < m.cols(); ++col) coeffs.push_back(m(row, col));
      fj["equations"].push_back(detail::hyperplane_to_json(coeffs, m(row, m.cols() - 1)));
    }
    j["flats"].push_back(std::move(fj));
  }

  j["checks"] = {{"length_equals_mult", r.length == r.mult},
                 {"routes_agree", r.length == r.length_recursive}};
  if (trace) j["trace"] = trace_to_json(*trace);
  return j;
}

inline std::string report_to_text(const std::string& name, const Arrangement& a,
                                  const InvariantReport& r,
                                  const RecursionTrace* trace = nullptr) {
  std::ostringstream os;
  if (!name.empty()) os << "name: " << name << "\n";
  os << "dimension: " << a.ambient_dim() << "\n";
  os << "hyperplanes (" << a.size() << "):\n";
  for (std::size_t i = 0; i < a.size(); ++i)
    os << "  [" << i << "] " << a.hyperplane(i).to_string() << "\n";

  os << "flats (" << r.poset.size() << "):\n";
  for (std::size_t i = 0; i < r.poset.size(); ++i) {
    const Flat& f = r.poset.flat(i);
    os << "  [" << i << "] codim " << f.codim() << "  mu " << r.poset.mobius(i).str() << "  {";
    const Matrix& m = f.system.matrix();
    for (std::size_t row = 0; row < m.rows(); ++row) {
      os << (row ? "; " : "");
      for (std::size_t col = 0; col + 1 < m.cols(); ++col) os << m(row, col) << ' ';
      os << "= " << m(row, m.cols() - 1);
    }
    os << "}\n";
  }

  os << "poincare:";
  for (const auto& c : r.poincare.coefficients()) os << ' ' << c.str();
  os << "   (" << r.poincare.to_string() << ")\n";
  os << "length: " << r.length.str() << "\n";
  os << "mult: " << r.mult.str() << "\n";
  os << "length_recursive: " << r.length_recursive.str() << "\n";
  os << "checks: length_equals_mult=" << (r.length == r.mult ? "true" : "false")
     << " routes_agree=" << (r.length == r.length_recursive ? "true" : "false") << "\n";
  if (trace) {
    os << "trace:\n";
    trace_to_text(os, *trace, "", 2);
  }
  return os.str();
}

}  // namespace arrinv
