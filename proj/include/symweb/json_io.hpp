#pragma once

// JSON output forms. Polynomials are lists of [half_exponent, coefficient]
// pairs in descending exponent order; coefficients that fit in 64 bits are
// numbers, larger ones decimal strings. Every top-level document carries
// "schema": 1.

#include "matrix.hpp"

#include <json.hpp>

namespace symweb {

inline nlohmann::json json_of(const LaurentHalf& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [n, c] : p.terms()) {
    nlohmann::json pair = nlohmann::json::array();
    pair.push_back(n);
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      pair.push_back(static_cast<long long>(c));
    else
      pair.push_back(c.str());
    arr.push_back(std::move(pair));
  }
  return arr;
}

inline nlohmann::json json_of(const LaurentFrac& f) {
  if (f.is_polynomial()) return json_of(f.num());
  return nlohmann::json{{"num", json_of(f.num())}, {"den", json_of(f.den())}};
}

inline nlohmann::json json_of(const WebObject& obj) {
  nlohmann::json arr = nlohmann::json::array();
  for (int k : obj.labels) arr.push_back(k);
  return arr;
}

inline nlohmann::json json_of(const IntertwinerMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [rc, v] : m.entries())
    entries.push_back(nlohmann::json::array({rc.first, rc.second, json_of(v)}));
  return nlohmann::json{
      {"domain", json_of(m.domain())},
      {"codomain", json_of(m.codomain())},
      {"basis", "per-strand indices 0..k, mixed radix, first strand most significant"},
      {"rows", m.rows()},
      {"cols", m.cols()},
      {"entries", std::move(entries)}};
}

}  // namespace symweb
