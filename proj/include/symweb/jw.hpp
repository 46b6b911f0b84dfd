#pragma once

// The symmetrising projector on k thin strands, in two independent forms: the
// two-vertex word (explode after assemble, divided by [k]!) and the classical
// one-strand-at-a-time recursion. Both evaluate to the same idempotent.

#include "evaluate.hpp"
#include "tl.hpp"

namespace symweb {

// (1/[k]!) explode(k) after assemble(k): a single word on k thin strands.
inline WebMorphism jw_word(int k) {
  if (k < 1) throw std::invalid_argument("jw_word: k must be positive");
  WebMorphism m = compose(explode(k), assemble(k));
  return m.scaled(LaurentFrac::inverse_of(qfact(k)));
}

// The hook at strands i, i+1 (1-based) on n thin strands, as a web word.
inline WebMorphism thin_hook(int n, int i) {
  if (i < 1 || i + 1 > n) throw std::invalid_argument("thin_hook: index out of range");
  WebWord w = WebWord::identity(WebObject::of(std::vector<int>(n, 1)));
  w.append(i - 1, Generator::cap(1));
  w.append(i - 1, Generator::cup(1));
  return WebMorphism::of_word(std::move(w));
}

// Wenzl's recursion: P_1 = id and
// P_k = P_{k-1} (x) id + ([k-1]/[k]) (P_{k-1} (x) id) hook_{k-1} (P_{k-1} (x) id).
inline WebMorphism jw_recursive(int k) {
  if (k < 1) throw std::invalid_argument("jw_recursive: k must be positive");
  if (k == 1) return WebMorphism::identity(WebObject::of({1}));
  const WebMorphism p = tensor(jw_recursive(k - 1), WebMorphism::identity(WebObject::of({1})));
  const WebMorphism hook = thin_hook(k, k - 1);
  const LaurentFrac c(qint(k - 1), qint(k));
  return p + compose(p, compose(hook, p)).scaled(c);
}

namespace detail {
// m (x) id on one extra thin strand; flat indices extend as i -> 2 i + b.
inline IntertwinerMatrix extend_by_thin(const IntertwinerMatrix& m) {
  std::vector<int> dl = m.domain().labels, cl = m.codomain().labels;
  dl.push_back(1);
  cl.push_back(1);
  IntertwinerMatrix r(WebObject::of(dl), WebObject::of(cl));
  for (const auto& [rc, v] : m.entries())
    for (int b = 0; b <= 1; ++b) r.set(2 * rc.first + b, 2 * rc.second + b, v);
  return r;
}
}  // namespace detail

// The recursion evaluated functorially: tensor and composition become matrix
// operations, so the exponential word expansion of jw_recursive is avoided.
inline IntertwinerMatrix jw_wenzl_matrix(int k) {
  if (k < 1) throw std::invalid_argument("jw_wenzl_matrix: k must be positive");
  IntertwinerMatrix m = IntertwinerMatrix::identity(WebObject::of({1}));
  for (int j = 2; j <= k; ++j) {
    const IntertwinerMatrix a = detail::extend_by_thin(m);
    const IntertwinerMatrix h = eval(thin_hook(j, j - 1));
    m = a + (a * (h * a)).scaled(LaurentFrac(qint(j - 1), qint(j)));
  }
  return m;
}

// Memoised matrix of the projector.
inline const IntertwinerMatrix& jw_matrix(int k) {
  static std::map<int, IntertwinerMatrix> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  return cache.emplace(k, eval(jw_word(k))).first->second;
}

struct JwReport {
  bool idempotent = false;
  bool cap_kill = false;
  bool recursion_match = false;
  bool ok() const { return idempotent && cap_kill && recursion_match; }
};

inline JwReport verify_jw(int k) {
  JwReport rep;
  const IntertwinerMatrix& m = jw_matrix(k);
  rep.idempotent = (m * m) == m;
  rep.cap_kill = true;
  const WebObject thin = WebObject::of(std::vector<int>(k, 1));
  for (int i = 1; i + 1 <= k && rep.cap_kill; ++i) {
    WebWord capw = WebWord::identity(thin);
    capw.append(i - 1, Generator::cap(1));
    const IntertwinerMatrix cap = eval(capw);
    if (!(cap * m).is_zero()) rep.cap_kill = false;
    WebWord cupw = WebWord::identity(capw.cod);
    cupw.append(i - 1, Generator::cup(1));
    const IntertwinerMatrix cup = eval(cupw);
    if (!(m * cup).is_zero()) rep.cap_kill = false;
  }
  rep.recursion_match = jw_wenzl_matrix(k) == m;
  return rep;
}

}  // namespace symweb
