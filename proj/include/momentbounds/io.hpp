#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "momentbounds/errors.hpp"
#include "momentbounds/matrix.hpp"
#include "momentbounds/moments.hpp"
#include "momentbounds/polynomial.hpp"
#include "momentbounds/report.hpp"
#include "momentbounds/sample.hpp"
#include "momentbounds/span.hpp"
#include "momentbounds/spread.hpp"

namespace momentbounds::io {

using json = nlohmann::ordered_json;

namespace detail {

inline double as_number(const json& j, const char* what) {
  if (!j.is_number()) {
    throw ParseError(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

inline std::vector<double> as_number_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_number(v, what));
  return out;
}

inline std::vector<double> split_csv_numbers(const std::string& text,
                                             const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(tok, &pos);
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": bad number '" + tok + "'");
    }
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing

/// {"points":[...], "weights":[...]?, "interval":[m,M]?}
inline Sample sample_from_json(const json& j, bool renormalize = false) {
  if (!j.is_object() || !j.contains("points")) {
    throw ParseError("sample JSON needs a \"points\" array");
  }
  auto points = detail::as_number_list(j.at("points"), "points");
  std::vector<double> weights;
  if (j.contains("weights") && !j.at("weights").is_null()) {
    weights = detail::as_number_list(j.at("weights"), "weights");
  }
  try {
    if (j.contains("interval") && !j.at("interval").is_null()) {
      auto iv = detail::as_number_list(j.at("interval"), "interval");
      if (iv.size() != 2) throw ParseError("interval must be [m, M]");
      return Sample(std::move(points), std::move(weights),
                    Interval{iv[0], iv[1]}, renormalize);
    }
    return Sample(std::move(points), std::move(weights), renormalize);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid sample: ") + e.what());
  }
}

/// Two columns "x,weight" (weight optional), one point per line. Lines
/// starting with '#' and a leading "x,weight" header are skipped.
inline Sample sample_from_csv(std::istream& in, bool renormalize = false) {
  std::vector<double> points, weights;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (first && line.find_first_not_of("xweight, \t\r") == std::string::npos) {
      first = false;
      continue;  // header row
    }
    first = false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto nums = detail::split_csv_numbers(line, "csv row");
    if (nums.empty() || nums.size() > 2) {
      throw ParseError("csv rows must be 'x' or 'x,weight'");
    }
    points.push_back(nums[0]);
    if (nums.size() == 2) weights.push_back(nums[1]);
  }
  if (!weights.empty() && weights.size() != points.size()) {
    throw ParseError("csv weight column must be present on every row or none");
  }
  try {
    return Sample(std::move(points), std::move(weights), renormalize);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid sample: ") + e.what());
  }
}

/// {"dim":n, "entries":[[re | [re,im], ...], ...]}; bare reals allowed.
inline SquareMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) {
    throw ParseError("matrix JSON needs an \"entries\" array of rows");
  }
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.empty()) {
    throw ParseError("matrix entries must be a non-empty array of rows");
  }
  const std::size_t dim = j.contains("dim")
                              ? j.at("dim").get<std::size_t>()
                              : rows.size();
  if (rows.size() != dim) throw ParseError("matrix row count does not match dim");
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim) {
      throw ParseError("matrix rows must all have length dim");
    }
    for (const auto& e : row) {
      if (e.is_number()) {
        entries.emplace_back(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        entries.emplace_back(detail::as_number(e[0], "entry re"),
                             detail::as_number(e[1], "entry im"));
      } else {
        throw ParseError("matrix entries must be re or [re, im]");
      }
    }
  }
  try {
    return SquareMatrix(dim, std::move(entries));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid matrix: ") + e.what());
  }
}

/// Semicolon-separated rows of comma-separated reals: "3,2,1;2,0,2;1,2,3".
inline SquareMatrix matrix_from_inline(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    rows.push_back(detail::split_csv_numbers(row, "matrix row"));
  }
  if (rows.empty()) throw ParseError("empty inline matrix");
  const std::size_t dim = rows.size();
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) {
      throw ParseError("inline matrix must be square (rows of equal length)");
    }
    for (double v : r) entries.emplace_back(v, 0.0);
  }
  try {
    return SquareMatrix(dim, std::move(entries));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid matrix: ") + e.what());
  }
}

/// {"coefficients":[1, a1, ..., an]} in descending powers.
inline Polynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coefficients")) {
    throw ParseError("polynomial JSON needs a \"coefficients\" array");
  }
  try {
    return Polynomial(
        detail::as_number_list(j.at("coefficients"), "coefficients"));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid polynomial: ") + e.what());
  }
}

/// Comma-separated descending coefficients: "1,80,1500,5000,3750,0.2".
inline Polynomial polynomial_from_inline(const std::string& text) {
  try {
    return Polynomial(detail::split_csv_numbers(text, "coefficients"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid polynomial: ") + e.what());
  }
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

// ---------------------------------------------------------------------------
// Serialization

inline json to_json(const BoundReport& r) {
  json j;
  j["name"] = r.name;
  j["direction"] = std::string(to_string(r.direction));
  j["lhs"] = std::isnan(r.lhs) ? json(nullptr) : json(r.lhs);
  j["rhs"] = std::isnan(r.rhs) ? json(nullptr) : json(r.rhs);
  j["slack"] = std::isnan(r.slack) ? json(nullptr) : json(r.slack);
  j["applicable"] = r.applicable;
  j["note"] = r.note.empty() ? json(nullptr) : json(r.note);
  return j;
}

inline json to_json(const SpreadEstimate& e) {
  json j;
  j["name"] = e.name;
  j["value"] = e.value;
  j["direction"] = std::string(to_string(e.direction));
  j["functional"] = e.functional ? json(e.functional->label()) : json(nullptr);
  j["r"] = e.parameter ? json(*e.parameter) : json(nullptr);
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

inline json to_json(const SpanBound& b) {
  json j;
  j["name"] = b.name;
  j["value"] = b.value;
  j["direction"] = std::string(to_string(b.direction));
  j["applicable"] = b.applicable;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

inline json to_json(const MomentSet& m) {
  json j;
  j["mean"] = m.mean();
  j["n"] = m.n();
  json central = json::object();
  json raw = json::object();
  for (int r = 1; r <= m.max_order(); ++r) {
    central[std::to_string(r)] = m.central(r);
    raw[std::to_string(r)] = m.raw(r);
  }
  j["central"] = std::move(central);
  j["raw"] = std::move(raw);
  return j;
}

inline json to_json(const ShapeStats& s) {
  json j;
  j["skewness"] = s.skewness;
  j["kurtosis"] = s.kurtosis;
  j["studentized_range"] = s.studentized_range;
  j["std_dev"] = s.std_dev;
  return j;
}

}  // namespace momentbounds::io
