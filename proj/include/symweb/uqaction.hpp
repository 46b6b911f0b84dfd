#pragma once

// Matrices of the quantum sl2 generators E, F, K on a tensor product of
// symmetric powers, via the iterated coproduct: E acts at one factor with K to
// its right, F acts at one factor with K^{-1} to its left. Used to verify
// that evaluated webs commute with the quantum group action.

#include "matrix.hpp"

namespace symweb {

namespace detail {
// K-eigenvalue exponent (whole q units) of the basis vector js on obj.
inline int k_weight(const WebObject& obj, const std::vector<int>& js) {
  int e = 0;
  for (size_t t = 0; t < obj.size(); ++t) e += obj.labels[t] - 2 * js[t];
  return e;
}
}  // namespace detail

inline IntertwinerMatrix uq_k(const WebObject& obj, int power = 1) {
  IntertwinerMatrix m(obj, obj);
  const long d = obj.dimension();
  for (long i = 0; i < d; ++i) {
    const auto js = decode_index(obj, i);
    m.set(i, i, LaurentFrac(LaurentHalf::q_power(power * detail::k_weight(obj, js))));
  }
  return m;
}

// E x_j = [j] x_{j-1} on one factor, with K on the factors to the right.
inline IntertwinerMatrix uq_e(const WebObject& obj) {
  IntertwinerMatrix m(obj, obj);
  const long d = obj.dimension();
  for (long col = 0; col < d; ++col) {
    const auto js = decode_index(obj, col);
    for (size_t t = 0; t < obj.size(); ++t) {
      if (js[t] == 0) continue;
      auto row_js = js;
      row_js[t] -= 1;
      int tail = 0;
      for (size_t u = t + 1; u < obj.size(); ++u) tail += obj.labels[u] - 2 * js[u];
      LaurentHalf v = qint(js[t]);
      v.shift(2 * tail);
      m.add_to(encode_index(obj, row_js), col, LaurentFrac(std::move(v)));
    }
  }
  return m;
}

// F x_j = [k-j] x_{j+1} on one factor, with K^{-1} on the factors to the left.
inline IntertwinerMatrix uq_f(const WebObject& obj) {
  IntertwinerMatrix m(obj, obj);
  const long d = obj.dimension();
  for (long col = 0; col < d; ++col) {
    const auto js = decode_index(obj, col);
    for (size_t t = 0; t < obj.size(); ++t) {
      if (js[t] == obj.labels[t]) continue;
      auto row_js = js;
      row_js[t] += 1;
      int head = 0;
      for (size_t u = 0; u < t; ++u) head += obj.labels[u] - 2 * js[u];
      LaurentHalf v = qint(obj.labels[t] - js[t]);
      v.shift(-2 * head);
      m.add_to(encode_index(obj, row_js), col, LaurentFrac(std::move(v)));
    }
  }
  return m;
}

}  // namespace symweb
