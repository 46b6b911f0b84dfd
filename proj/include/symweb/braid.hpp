#pragma once

// Crossings of coloured strands expanded into ladder webs, braid words, trace
// closures and the coloured Jones invariant with its normalisation modes.

#include "evaluate.hpp"

#include <mutex>

namespace symweb {

struct CrossingExpansion {
  int k = 0;      // left colour
  int l = 0;      // right colour
  int sign = +1;  // +1 positive crossing, -1 its inverse
  struct Term {
    int j1 = 0;  // power of the downward ladder (applied first)
    int j2 = 0;  // power of the upward ladder (applied second)
    LaurentHalf coeff;
  };
  std::vector<Term> terms;
};

// The crossing of colours (k, l) as a sum of one-column ladder words:
//   sum over j1 - j2 = k - l of
//     (-1)^{k+j1} q^{(-2k - kl + 2 j1)/2} E-ladder^{(j2)} after F-ladder^{(j1)}
// for a positive crossing; the inverse negates each q-exponent.
inline const CrossingExpansion& crossing_expansion(int k, int l, int sign) {
  if (k < 1 || l < 1) throw std::invalid_argument("crossing colours must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
  static std::map<std::tuple<int, int, int>, CrossingExpansion> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(k, l, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  CrossingExpansion ex;
  ex.k = k;
  ex.l = l;
  ex.sign = sign;
  for (int j1 = std::max(0, k - l); j1 <= k; ++j1) {
    const int j2 = j1 - (k - l);
    CrossingExpansion::Term t;
    t.j1 = j1;
    t.j2 = j2;
    const int half_exp = sign * (-2 * k - k * l + 2 * j1);
    t.coeff = LaurentHalf::monomial(half_exp, (k + j1) % 2 == 0 ? 1 : -1);
    ex.terms.push_back(std::move(t));
  }
  return cache.emplace(key, std::move(ex)).first->second;
}

// The crossing embedded at strands i, i+1 (1-based) of an m-strand colour
// vector: swaps the two colours.
inline WebMorphism crossing_at(int m, int i, int sign, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != m || i < 1 || i + 1 > m)
    throw std::invalid_argument("crossing_at: bad strand index");
  const int k = colors[i - 1], l = colors[i];
  const CrossingExpansion& ex = crossing_expansion(k, l, sign);
  std::vector<int> swapped = colors;
  std::swap(swapped[i - 1], swapped[i]);
  WebMorphism acc = WebMorphism::zero(detail::object_of_weight(colors),
                                      detail::object_of_weight(swapped));
  for (const auto& t : ex.terms) {
    std::vector<int> mid = colors;
    mid[i - 1] -= t.j1;
    mid[i] += t.j1;
    WebMorphism w = compose(e_ladder(m, i, t.j2, mid), f_ladder(m, i, t.j1, colors));
    acc += w.scaled(LaurentFrac(t.coeff));
  }
  return acc;
}

inline WebMorphism crossing(int k, int l, int sign) { return crossing_at(2, 1, sign, {k, l}); }

// Positive braiding operator at strands i, i+1 of a weight; the braid-group
// property tests act through these.
inline WebMorphism lusztig_T(int m, int i, const std::vector<int>& weight) {
  return crossing_at(m, i, +1, weight);
}

struct ColoredBraidWord {
  int strands = 0;
  std::vector<int> colors;                    // colours at the bottom, left to right
  std::vector<std::pair<int, int>> letters;   // (generator index 1..strands-1, sign)

  // Word syntax: whitespace-separated tokens s<i> (positive) and S<i>
  // (inverse), e.g. "s1 S2 s1 S2".
  static ColoredBraidWord parse(std::vector<int> colors, std::string_view word) {
    ColoredBraidWord b;
    b.strands = static_cast<int>(colors.size());
    if (b.strands < 1) throw parse_error("braid needs at least one strand", 1, 1);
    for (int c : colors)
      if (c < 1) throw parse_error("strand colours must be positive", 1, 1);
    b.colors = std::move(colors);
    size_t i = 0;
    while (i < word.size()) {
      if (word[i] == ' ' || word[i] == '\t' || word[i] == '\n') {
        ++i;
        continue;
      }
      const int col = static_cast<int>(i) + 1;
      const char c = word[i];
      if (c != 's' && c != 'S') throw parse_error("expected braid letter 's<i>' or 'S<i>'", 1, col);
      ++i;
      if (i >= word.size() || !std::isdigit(static_cast<unsigned char>(word[i])))
        throw parse_error("expected strand index after braid letter", 1, col);
      int idx = 0;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i])))
        idx = idx * 10 + (word[i++] - '0');
      if (idx < 1 || idx + 1 > b.strands)
        throw parse_error("braid letter index out of range: " + std::to_string(idx), 1, col);
      b.letters.push_back({idx, c == 's' ? +1 : -1});
    }
    return b;
  }

  // Final position of the strand that starts at each bottom position.
  std::vector<int> permutation() const {
    std::vector<int> pos(strands);
    for (int p = 0; p < strands; ++p) pos[p] = p;
    for (const auto& [i, sign] : letters) {
      for (int p = 0; p < strands; ++p) {
        if (pos[p] == i - 1)
          pos[p] = i;
        else if (pos[p] == i)
          pos[p] = i - 1;
      }
    }
    return pos;
  }

  int writhe() const {
    int w = 0;
    for (const auto& [i, sign] : letters) w += sign;
    return w;
  }

  // Colours read at the top, left to right.
  std::vector<int> top_colors() const {
    std::vector<int> cur = colors;
    for (const auto& [i, sign] : letters) std::swap(cur[i - 1], cur[i]);
    return cur;
  }

  bool closable() const { return top_colors() == colors; }
};

inline WebMorphism braid_to_morphism(const ColoredBraidWord& b) {
  std::vector<int> cur = b.colors;
  WebMorphism m = WebMorphism::identity(detail::object_of_weight(cur));
  for (const auto& [i, sign] : b.letters) {
    m = compose(crossing_at(b.strands, i, sign, cur), m);
    std::swap(cur[i - 1], cur[i]);
  }
  return m;
}

// Close an endomorphism off to the right: nested cups below, the morphism
// tensored with the reversed identity, nested caps above.
inline LaurentHalf trace_closure(const WebMorphism& u) {
  if (u.domain().is_zero() || u.domain() != u.codomain())
    throw std::invalid_argument("trace_closure: needs matching non-zero boundaries");
  if (u.domain().is_empty()) return eval_closed(u);
  const std::vector<int>& c = u.domain().labels;
  const int m = static_cast<int>(c.size());
  WebWord cups = WebWord::identity(WebObject::empty());
  for (int t = 0; t < m; ++t) cups.append(t, Generator::cup(c[t]));
  std::vector<int> rev(c.rbegin(), c.rend());
  WebMorphism mid = tensor(u, WebMorphism::identity(WebObject::of(rev)));
  WebWord caps = WebWord::identity(cups.cod);
  for (int t = m - 1; t >= 0; --t) caps.append(t, Generator::cap(c[t]));
  WebMorphism closed = compose(WebMorphism::of_word(caps),
                               compose(mid, WebMorphism::of_word(cups)));
  return eval_closed(closed);
}

enum class NormalizationMode { framed, paper, self_writhe };

// Framing correction for one positive crossing of colour c, as a monomial:
// -(q to the (c^2 + 2c)/2). Inverse crossings contribute the inverse.
inline LaurentHalf framing_factor(int c, int sign) {
  return LaurentHalf::monomial(-sign * (c * c + 2 * c), -1);
}

// The coloured Jones value of the closure of a coloured braid word.
//   framed:      the bare closure, no correction.
//   paper:       one factor per equal-colour crossing (mixed-colour crossings
//                pass through unchanged).
//   self_writhe: one factor per self-crossing of each closure component,
//                i.e. the per-component writhe correction.
inline LaurentHalf colored_jones(const ColoredBraidWord& b, NormalizationMode mode) {
  if (!b.closable())
    throw std::invalid_argument("braid closure mismatches colours; not a coloured link");
  LaurentHalf value = trace_closure(braid_to_morphism(b));
  if (mode == NormalizationMode::framed) return value;
  if (mode == NormalizationMode::paper) {
    std::vector<int> cur = b.colors;
    for (const auto& [i, sign] : b.letters) {
      if (cur[i - 1] == cur[i]) value *= framing_factor(cur[i - 1], sign);
      std::swap(cur[i - 1], cur[i]);
    }
    return value;
  }
  // self_writhe: strands are identified with their starting positions; the
  // closure joins top position p back to bottom position p, so components are
  // the cycles of the final-position map.
  const std::vector<int> perm = b.permutation();
  std::vector<int> comp(b.strands, -1);
  int ncomp = 0;
  for (int s = 0; s < b.strands; ++s) {
    if (comp[s] != -1) continue;
    int cur = s;
    while (comp[cur] == -1) {
      comp[cur] = ncomp;
      cur = perm[cur];
    }
    ++ncomp;
  }
  std::vector<int> selfw(ncomp, 0);
  std::vector<int> ids(b.strands);
  for (int p = 0; p < b.strands; ++p) ids[p] = p;
  for (const auto& [i, sign] : b.letters) {
    const int a = ids[i - 1], c2 = ids[i];
    if (comp[a] == comp[c2]) selfw[comp[a]] += sign;
    std::swap(ids[i - 1], ids[i]);
  }
  for (int s = 0; s < b.strands; ++s) {
    // One correction per component; apply at the component's smallest strand.
    bool smallest = true;
    for (int t = 0; t < s; ++t)
      if (comp[t] == comp[s]) smallest = false;
    if (!smallest) continue;
    const int w = selfw[comp[s]];
    const int c = b.colors[s];
    value *= LaurentHalf::monomial(-w * (c * c + 2 * c), w % 2 == 0 ? 1 : -1);
  }
  return value;
}

}  // namespace symweb
