#pragma once

// Temperley-Lieb diagrams: planar matchings between points on two horizontal
// boundary lines, composed with loop value -[2], and their embedding as webs
// on thin strands.

#include "web.hpp"

#include <random>

namespace symweb {

// Bottom points are 0..bottom-1 left to right, top points are
// bottom..bottom+top-1 left to right. `mate` is the fixed-point-free pairing.
struct TLDiagram {
  int bottom = 0;
  int top = 0;
  std::vector<int> mate;

  static TLDiagram identity(int n) {
    TLDiagram d;
    d.bottom = d.top = n;
    d.mate.resize(2 * n);
    for (int i = 0; i < n; ++i) {
      d.mate[i] = n + i;
      d.mate[n + i] = i;
    }
    return d;
  }

  // The hook generator on n strands: bottom strands i, i+1 (1-based i) turn
  // back into each other, as do the matching top strands.
  static TLDiagram hook(int n, int i) {
    if (i < 1 || i + 1 > n) throw std::invalid_argument("hook index out of range");
    TLDiagram d = identity(n);
    d.mate[i - 1] = i;
    d.mate[i] = i - 1;
    d.mate[n + i - 1] = n + i;
    d.mate[n + i] = n + i - 1;
    return d;
  }

  int total_points() const { return bottom + top; }

  bool valid() const {
    const int n = total_points();
    if (static_cast<int>(mate.size()) != n || n % 2 != 0) return false;
    for (int p = 0; p < n; ++p)
      if (mate[p] < 0 || mate[p] >= n || mate[p] == p || mate[mate[p]] != p) return false;
    // Planarity: walk the boundary circle (bottom left to right, then top
    // right to left); arcs must nest like balanced parentheses.
    std::vector<int> order;
    for (int p = 0; p < bottom; ++p) order.push_back(p);
    for (int p = top - 1; p >= 0; --p) order.push_back(bottom + p);
    std::vector<int> stack;
    for (int p : order) {
      if (!stack.empty() && mate[stack.back()] == p)
        stack.pop_back();
      else
        stack.push_back(p);
    }
    return stack.empty();
  }

  friend bool operator==(const TLDiagram& a, const TLDiagram& b) {
    return a.bottom == b.bottom && a.top == b.top && a.mate == b.mate;
  }
  friend bool operator!=(const TLDiagram& a, const TLDiagram& b) { return !(a == b); }
  friend bool operator<(const TLDiagram& a, const TLDiagram& b) {
    if (a.bottom != b.bottom) return a.bottom < b.bottom;
    if (a.top != b.top) return a.top < b.top;
    return a.mate < b.mate;
  }

  std::string str() const {
    std::string s = "TL(" + std::to_string(bottom) + "->" + std::to_string(top) + ":";
    for (int p = 0; p < total_points(); ++p)
      if (mate[p] > p) s += " " + std::to_string(p) + "-" + std::to_string(mate[p]);
    return s + ")";
  }
};

// Stack upper on lower; returns the glued diagram and the number of closed
// loops produced in the middle.
inline std::pair<TLDiagram, int> tl_compose(const TLDiagram& upper, const TLDiagram& lower) {
  if (lower.top != upper.bottom) throw std::invalid_argument("tl_compose: boundary mismatch");
  const int b = lower.bottom, m = lower.top, t = upper.top;
  // Unified ids: bottom 0..b-1, top b..b+t-1, middle b+t..b+t+m-1.
  const auto lower_id = [&](int p) { return p < b ? p : b + t + (p - b); };
  const auto upper_id = [&](int p) { return p < m ? b + t + p : b + (p - m); };
  //  adjacency: boundary ids have one link, middle ids have two.
  std::vector<std::vector<int>> adj(b + t + m);
  for (int p = 0; p < lower.total_points(); ++p)
    if (lower.mate[p] > p) {
      const int u = lower_id(p), v = lower_id(lower.mate[p]);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  for (int p = 0; p < upper.total_points(); ++p)
    if (upper.mate[p] > p) {
      const int u = upper_id(p), v = upper_id(upper.mate[p]);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  TLDiagram out;
  out.bottom = b;
  out.top = t;
  out.mate.assign(b + t, -1);
  std::vector<char> visited(b + t + m, 0);
  for (int start = 0; start < b + t; ++start) {
    if (visited[start]) continue;
    visited[start] = 1;
    int prev = start, cur = adj[start][0];
    while (cur >= b + t) {
      visited[cur] = 1;
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    visited[cur] = 1;
    out.mate[start] = cur;
    out.mate[cur] = start;
  }
  int loops = 0;
  for (int start = b + t; start < b + t + m; ++start) {
    if (visited[start]) continue;
    ++loops;
    int prev = start, cur = adj[start][0];
    visited[start] = 1;
    while (cur != start) {
      visited[cur] = 1;
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
  }
  return {out, loops};
}

// Formal combinations of diagrams with fraction coefficients.
struct TLLinear {
  int bottom = 0;
  int top = 0;
  std::map<TLDiagram, LaurentFrac> terms;

  static TLLinear of(TLDiagram d, LaurentFrac coeff = LaurentFrac(1)) {
    TLLinear t;
    t.bottom = d.bottom;
    t.top = d.top;
    if (!coeff.is_zero()) t.terms[std::move(d)] = std::move(coeff);
    return t;
  }
  static TLLinear identity(int n) { return of(TLDiagram::identity(n)); }

  TLLinear& add_term(const TLDiagram& d, const LaurentFrac& coeff) {
    if (coeff.is_zero()) return *this;
    if (d.bottom != bottom || d.top != top)
      throw std::invalid_argument("TL sum boundary mismatch");
    auto it = terms.find(d);
    if (it == terms.end()) {
      terms[d] = coeff;
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
    return *this;
  }
  TLLinear scaled(const LaurentFrac& c) const {
    TLLinear r;
    r.bottom = bottom;
    r.top = top;
    if (c.is_zero()) return r;
    for (const auto& [d, v] : terms) r.terms[d] = v * c;
    return r;
  }
  friend TLLinear operator+(TLLinear a, const TLLinear& b) {
    for (const auto& [d, v] : b.terms) a.add_term(d, v);
    return a;
  }
};

// Bilinear composition; each middle loop contributes a factor -[2].
inline TLLinear tl_compose(const TLLinear& upper, const TLLinear& lower) {
  TLLinear r;
  r.bottom = lower.bottom;
  r.top = upper.top;
  const LaurentFrac delta(-qint(2));
  for (const auto& [dl, cl] : lower.terms)
    for (const auto& [du, cu] : upper.terms) {
      auto [d, loops] = tl_compose(du, dl);
      LaurentFrac c = cl * cu;
      for (int t = 0; t < loops; ++t) c *= delta;
      r.add_term(d, c);
    }
  return r;
}

// Embed a diagram as a web word on thin strands: turn-backs become caps read
// innermost first, then cups in the mirrored order.
inline WebMorphism tl_embed(const TLDiagram& d) {
  if (!d.valid()) throw std::invalid_argument("tl_embed: invalid diagram");
  const WebObject dom = d.bottom == 0 ? WebObject::empty()
                                      : WebObject::of(std::vector<int>(d.bottom, 1));
  WebWord w = WebWord::identity(dom);
  std::vector<int> pts;
  for (int p = 0; p < d.bottom; ++p) pts.push_back(p);
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t r = 0; r + 1 < pts.size(); ++r) {
      if (d.mate[pts[r]] == pts[r + 1]) {
        w.append(static_cast<int>(r), Generator::cap(1));
        pts.erase(pts.begin() + r, pts.begin() + r + 2);
        progress = true;
        break;
      }
    }
  }
  std::vector<int> tops;
  for (int p = 0; p < d.top; ++p) tops.push_back(d.bottom + p);
  std::vector<std::pair<int, Generator>> cup_slices;
  progress = true;
  while (progress) {
    progress = false;
    for (size_t r = 0; r + 1 < tops.size(); ++r) {
      if (d.mate[tops[r]] == tops[r + 1]) {
        cup_slices.push_back({static_cast<int>(r), Generator::cup(1)});
        tops.erase(tops.begin() + r, tops.begin() + r + 2);
        progress = true;
        break;
      }
    }
  }
  for (auto it = cup_slices.rbegin(); it != cup_slices.rend(); ++it) w.append(it->first, it->second);
  return WebMorphism::of_word(std::move(w));
}

inline WebMorphism tl_embed(const TLLinear& t) {
  const WebObject dom =
      t.bottom == 0 ? WebObject::empty() : WebObject::of(std::vector<int>(t.bottom, 1));
  const WebObject cod =
      t.top == 0 ? WebObject::empty() : WebObject::of(std::vector<int>(t.top, 1));
  WebMorphism m = WebMorphism::zero(dom, cod);
  for (const auto& [d, c] : t.terms) m += tl_embed(d).scaled(c);
  return m;
}

// Random planar matching between `bottom` and `top` points (not uniform over
// all diagrams, but supported on all of them).
inline TLDiagram random_tl(int bottom, int top, std::mt19937& rng) {
  if ((bottom + top) % 2 != 0 || bottom < 0 || top < 0)
    throw std::invalid_argument("random_tl: point counts must have even total");
  // Boundary circle order as in TLDiagram::valid.
  std::vector<int> order;
  for (int p = 0; p < bottom; ++p) order.push_back(p);
  for (int p = top - 1; p >= 0; --p) order.push_back(bottom + p);
  std::vector<int> mate(bottom + top, -1);
  const std::function<void(int, int)> match = [&](int lo, int hi) {
    if (lo >= hi) return;
    const int span = hi - lo + 1;
    std::uniform_int_distribution<int> pick(0, span / 2 - 1);
    const int partner = lo + 2 * pick(rng) + 1;
    mate[order[lo]] = order[partner];
    mate[order[partner]] = order[lo];
    match(lo + 1, partner - 1);
    match(partner + 1, hi);
  };
  match(0, bottom + top - 1);
  TLDiagram d;
  d.bottom = bottom;
  d.top = top;
  d.mate = std::move(mate);
  return d;
}

}  // namespace symweb
