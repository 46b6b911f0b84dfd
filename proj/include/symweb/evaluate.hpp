#pragma once

// Evaluation of web morphisms as intertwiner matrices. Each generator has a
// closed-form matrix on the symmetric-power bases; a word is evaluated by
// pushing basis columns through its slices one at a time, so the full
// Kronecker product of ambient identities is never materialised.

#include "matrix.hpp"

#include <mutex>

namespace symweb {

namespace detail {

inline IntertwinerMatrix build_gen_matrix(const Generator& g) {
  const WebObject dom = g.domain();
  const WebObject cod = g.codomain();
  IntertwinerMatrix m(dom, cod);
  switch (g.kind) {
    case GenKind::Identity:
      return IntertwinerMatrix::identity(dom);
    case GenKind::Merge: {
      // x_i (x) x_j  |->  q^{i(l-j)} x_{i+j}
      const int k = g.k, l = g.l;
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= l; ++j) {
          m.set(i + j, encode_index(dom, {i, j}),
                LaurentFrac(LaurentHalf::q_power(i * (l - j))));
        }
      return m;
    }
    case GenKind::Split: {
      // x_t |-> sum over i+j = t of
      //   q^{i(l-j) + i(k-i) + j(l-j) - t(n-t)} [t choose i][n-t choose k-i] x_i (x) x_j
      const int k = g.k, l = g.l, n = g.k + g.l;
      for (int t = 0; t <= n; ++t)
        for (int i = std::max(0, t - l); i <= std::min(k, t); ++i) {
          const int j = t - i;
          LaurentHalf v = qbinom(t, i) * qbinom(n - t, k - i);
          v.shift(2 * (i * (l - j) + i * (k - i) + j * (l - j) - t * (n - t)));
          m.set(encode_index(cod, {i, j}), t, LaurentFrac(std::move(v)));
        }
      return m;
    }
    case GenKind::Cap: {
      // x_i (x) x_{k-i}  |->  (-1)^{k-i} q^{(k-i) - i(k-i)} [i]! [k-i]!
      const int k = g.k;
      for (int i = 0; i <= k; ++i) {
        LaurentHalf v = qfact(i) * qfact(k - i);
        v.shift(2 * ((k - i) - i * (k - i)), (k - i) % 2 == 0 ? 1 : -1);
        m.set(0, encode_index(dom, {i, k - i}), LaurentFrac(std::move(v)));
      }
      return m;
    }
    case GenKind::Cup: {
      // 1 |-> sum_i (-1)^i q^{i(k-i) - i} [k choose i] / [k]!  x_i (x) x_{k-i}
      const int k = g.k;
      const LaurentHalf kfact = qfact(k);
      for (int i = 0; i <= k; ++i) {
        LaurentHalf num = qbinom(k, i);
        num.shift(2 * (i * (k - i) - i), i % 2 == 0 ? 1 : -1);
        m.set(encode_index(cod, {i, k - i}), 0, LaurentFrac(std::move(num), kfact));
      }
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

// Column-major view of a generator matrix: per domain index, the list of
// (codomain index, value).
struct GenColumns {
  WebObject dom;
  WebObject cod;
  std::vector<std::vector<std::pair<long, LaurentFrac>>> cols;
};

inline const GenColumns& gen_columns(const Generator& g) {
  static std::map<Generator, GenColumns> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  IntertwinerMatrix m = build_gen_matrix(g);
  GenColumns gc;
  gc.dom = m.domain();
  gc.cod = m.codomain();
  gc.cols.resize(static_cast<size_t>(m.cols()));
  for (const auto& [rc, v] : m.entries()) gc.cols[static_cast<size_t>(rc.second)].push_back({rc.first, v});
  return cache.emplace(g, std::move(gc)).first->second;
}

}  // namespace detail

// The matrix of a single generator on its own boundary objects.
inline IntertwinerMatrix gen_matrix(const Generator& g) { return detail::build_gen_matrix(g); }

// Sparse vector over basis indices of one object.
using StateVector = std::map<long, LaurentFrac>;

namespace detail {

inline StateVector apply_slice(const Slice& s, const StateVector& state) {
  const GenColumns& gc = gen_columns(s.gen);
  const int ar = static_cast<int>(gc.dom.size());
  const size_t ncod = gc.cod.size();
  StateVector out;
  // Strides for splicing flat indices without building digit vectors per term.
  long right_radix = 1;
  for (size_t t = s.pos + ar; t < s.dom.size(); ++t) right_radix *= s.dom.labels[t] + 1;
  long gen_radix = 1;
  for (size_t t = 0; t < static_cast<size_t>(ar); ++t) gen_radix *= gc.dom.labels[t] + 1;
  long out_right_radix = 1;
  for (size_t t = s.pos + ncod; t < s.cod.size(); ++t) out_right_radix *= s.cod.labels[t] + 1;
  long out_gen_radix = 1;
  for (size_t t = 0; t < ncod; ++t) out_gen_radix *= gc.cod.labels[t] + 1;
  for (const auto& [flat, c] : state) {
    const long right = flat % right_radix;
    const long mid = (flat / right_radix) % gen_radix;
    const long left = flat / (right_radix * gen_radix);
    for (const auto& [genrow, v] : gc.cols[static_cast<size_t>(mid)]) {
      const long outflat = (left * out_gen_radix + genrow) * out_right_radix + right;
      auto [it, inserted] = out.try_emplace(outflat, LaurentFrac());
      it->second += c * v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

}  // namespace detail

inline IntertwinerMatrix eval(const WebWord& w) {
  if (w.dom.is_zero() || w.cod.is_zero())
    throw std::invalid_argument("eval: word with zero-object boundary");
  IntertwinerMatrix m(w.dom, w.cod);
  const long d = w.dom.dimension();
  for (long col = 0; col < d; ++col) {
    StateVector state{{col, LaurentFrac(1)}};
    for (const Slice& s : w.slices) {
      state = detail::apply_slice(s, state);
      if (state.empty()) break;
    }
    for (const auto& [row, v] : state) m.add_to(row, col, v);
  }
  return m;
}

inline IntertwinerMatrix eval(const WebMorphism& u) {
  if (u.domain().is_zero() || u.codomain().is_zero())
    throw std::invalid_argument("eval: morphism with zero-object boundary");
  IntertwinerMatrix m(u.domain(), u.codomain());
  for (const auto& [w, c] : u.terms()) m += eval(w).scaled(c);
  return m;
}

// Value of a closed morphism (empty boundaries): the single matrix entry,
// which must reduce to an honest Laurent polynomial.
inline LaurentHalf eval_closed(const WebMorphism& u) {
  if (!u.domain().is_empty() || !u.codomain().is_empty())
    throw std::invalid_argument("eval_closed: boundaries are not empty");
  return eval(u).get(0, 0).require_polynomial("closed evaluation");
}

}  // namespace symweb
