#pragma once

#include "burau/burau.hpp"
#include "burau/laurent.hpp"
#include "burau/tensor.hpp"

#include "json.hpp"

#include <string>

namespace burau {

using nlohmann::json;

inline json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long long>());
}

/// {"var": "t", "terms": [{"exp": e, "coef": c}, ...]}, ascending exponents.
inline json to_json(const LaurentPoly& p, const std::string& var = "t") {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", integer_to_json(c)}});
  return {{"var", var}, {"terms", terms}};
}

inline LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& term : j.at("terms")) p.add_term(term.at("exp").get<int>(), integer_from_json(term.at("coef")));
  return p;
}

inline json to_json(const LaurentMatrix& m, const std::string& var = "t") {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j), var));
    rows.push_back(row);
  }
  return rows;
}

inline json to_json(const TensorOperator& op) { return to_json(op.matrix()); }

/// {"prefix": "1 2", "body": [[{"f1 f2^-1": c, ...}, ...], ...]}
inline json to_json(const FactoredBurauMatrix& m) {
  json body = json::array();
  for (std::size_t i = 0; i < m.body.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.body.cols(); ++j) {
      json entry = json::object();
      for (const auto& [w, c] : m.body(i, j).terms()) entry[w.to_string()] = integer_to_json(c);
      row.push_back(entry);
    }
    body.push_back(row);
  }
  return {{"prefix", m.prefix.to_string()}, {"strands", m.strands()}, {"body", body}};
}

inline std::string matrix_to_text(const LaurentMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
    out += " ]\n";
  }
  return out;
}

}  // namespace burau
