#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "harmap/detail/numeric.hpp"
#include "harmap/harmonic_map.hpp"

namespace harmap {

/// Parse or validation failure with 1-based line/column when known.
struct MappingParseError : std::runtime_error {
  MappingParseError(std::string msg, int line_ = 0, int col_ = 0)
      : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
  int line = 0;
  int col = 0;
};

struct MappingSpec {
  HarmonicMap map;
  std::optional<double> expected_C;
  std::optional<double> expected_alpha;
  std::optional<double> expected_K;
};

namespace detail {

inline std::pair<int, int> line_col_of_byte(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline std::vector<cplx> coeff_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw MappingParseError(std::string("missing required field '") + key + "'");
  const auto& arr = j.at(key);
  if (!arr.is_array() || arr.empty())
    throw MappingParseError(std::string("field '") + key + "' must be a non-empty array");
  std::vector<cplx> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      throw MappingParseError(std::string("entries of '") + key + "' must be [re, im] number pairs");
    const double re = item[0].get<double>();
    const double im = item[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw MappingParseError(std::string("non-finite coefficient in '") + key + "'");
    out.emplace_back(re, im);
  }
  return out;
}

inline std::optional<double> expected_field(const nlohmann::json& j, const char* key,
                                            bool allow_inf) {
  if (!j.contains(key)) return {};
  const auto& v = j.at(key);
  if (allow_inf && v.is_string()) {
    if (v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    throw MappingParseError(std::string("expected.") + key + ": only the string \"inf\" is allowed");
  }
  if (!v.is_number()) throw MappingParseError(std::string("expected.") + key + " must be a number");
  return v.get<double>();
}

}  // namespace detail

/// Mapping document: {"label": str, "h": [[re,im],...], "g": [[re,im],...],
/// "expected": {"C": num, "alpha": num, "K": num | "inf"}}; label and
/// expected are optional, index 0 is the constant coefficient.
inline MappingSpec parse_mapping_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_col_of_byte(text, e.byte > 0 ? e.byte - 1 : 0);
    throw MappingParseError(std::string("JSON parse error: ") + e.what(), line, col);
  } catch (const nlohmann::json::exception& e) {
    // e.g. out_of_range on number overflow; no byte position is available
    throw MappingParseError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw MappingParseError("document root must be an object");
  std::string label;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw MappingParseError("field 'label' must be a string");
    label = j.at("label").get<std::string>();
  }
  std::vector<cplx> hc = detail::coeff_array(j, "h");
  std::vector<cplx> gc = detail::coeff_array(j, "g");
  MappingSpec spec{
      [&] {
        try {
          return HarmonicMap(ComplexSeries(std::move(hc)), ComplexSeries(std::move(gc)), label);
        } catch (const std::invalid_argument& e) {
          throw MappingParseError(e.what());
        }
      }(),
      {},
      {},
      {}};
  if (j.contains("expected")) {
    const auto& ex = j.at("expected");
    if (!ex.is_object()) throw MappingParseError("field 'expected' must be an object");
    spec.expected_C = detail::expected_field(ex, "C", false);
    spec.expected_alpha = detail::expected_field(ex, "alpha", false);
    spec.expected_K = detail::expected_field(ex, "K", true);
  }
  return spec;
}

inline MappingSpec load_mapping_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MappingParseError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_mapping_text(ss.str());
}

inline std::string mapping_to_json(const HarmonicMap& map,
                                   std::optional<double> expected_C = {},
                                   std::optional<double> expected_alpha = {},
                                   std::optional<double> expected_K = {}) {
  nlohmann::json j;
  j["label"] = map.label();
  auto dump = [](std::span<const cplx> cs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const cplx& c : cs) arr.push_back({c.real(), c.imag()});
    return arr;
  };
  j["h"] = dump(map.h().coeffs());
  j["g"] = dump(map.g().coeffs());
  if (expected_C || expected_alpha || expected_K) {
    nlohmann::json ex = nlohmann::json::object();
    if (expected_C) ex["C"] = *expected_C;
    if (expected_alpha) ex["alpha"] = *expected_alpha;
    if (expected_K) {
      if (std::isinf(*expected_K))
        ex["K"] = "inf";
      else
        ex["K"] = *expected_K;
    }
    j["expected"] = ex;
  }
  return j.dump(2) + "\n";
}

}  // namespace harmap
