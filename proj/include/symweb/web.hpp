#pragma once

// Web morphisms for the symmetric calculus: boundary objects are tuples of
// positive strand labels, a word is a vertical stack of elementary slices
// (cap, cup, merge, split at one position), and a morphism is a formal linear
// combination of words with fraction coefficients. Words read bottom to top:
// compose(v, u) stacks v on top of u.

#include "fraction.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>

namespace symweb {

struct WebObject {
  std::vector<int> labels;
  // The absorbing zero object. It is not a tuple; it appears as the boundary
  // of zero morphisms produced by out-of-range ladder labels.
  bool zero = false;

  static WebObject empty() { return WebObject{}; }
  static WebObject zero_object() {
    WebObject o;
    o.zero = true;
    return o;
  }
  static WebObject of(std::initializer_list<int> ls) { return of(std::vector<int>(ls)); }
  static WebObject of(std::vector<int> ls) {
    for (int k : ls)
      if (k <= 0) throw std::invalid_argument("object labels must be positive");
    WebObject o;
    o.labels = std::move(ls);
    return o;
  }

  bool is_zero() const { return zero; }
  bool is_empty() const { return !zero && labels.empty(); }
  size_t size() const { return labels.size(); }
  int total() const { return std::accumulate(labels.begin(), labels.end(), 0); }

  // Dimension of the underlying tensor product of symmetric powers.
  long dimension() const {
    if (zero) return 0;
    long d = 1;
    for (int k : labels) d *= k + 1;
    return d;
  }

  WebObject tensored(const WebObject& o) const {
    if (zero || o.zero) return zero_object();
    WebObject r = *this;
    r.labels.insert(r.labels.end(), o.labels.begin(), o.labels.end());
    return r;
  }

  friend bool operator==(const WebObject& a, const WebObject& b) {
    return a.zero == b.zero && a.labels == b.labels;
  }
  friend bool operator!=(const WebObject& a, const WebObject& b) { return !(a == b); }
  friend bool operator<(const WebObject& a, const WebObject& b) {
    if (a.zero != b.zero) return b.zero;
    return a.labels < b.labels;
  }

  std::string str() const {
    if (zero) return "0";
    std::string s = "(";
    for (size_t i = 0; i < labels.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(labels[i]);
    }
    return s + ")";
  }
};

enum class GenKind { Identity, Cap, Cup, Merge, Split };

struct Generator {
  GenKind kind = GenKind::Identity;
  int k = 1;
  int l = 0;  // second label, used by Merge and Split

  static Generator identity(int k) { return make(GenKind::Identity, k, 0); }
  static Generator cap(int k) { return make(GenKind::Cap, k, 0); }
  static Generator cup(int k) { return make(GenKind::Cup, k, 0); }
  static Generator merge(int k, int l) { return make(GenKind::Merge, k, l); }
  static Generator split(int k, int l) { return make(GenKind::Split, k, l); }

  WebObject domain() const {
    switch (kind) {
      case GenKind::Identity: return WebObject::of({k});
      case GenKind::Cap: return WebObject::of({k, k});
      case GenKind::Cup: return WebObject::empty();
      case GenKind::Merge: return WebObject::of({k, l});
      case GenKind::Split: return WebObject::of({k + l});
    }
    throw std::logic_error("unreachable");
  }
  WebObject codomain() const {
    switch (kind) {
      case GenKind::Identity: return WebObject::of({k});
      case GenKind::Cap: return WebObject::empty();
      case GenKind::Cup: return WebObject::of({k, k});
      case GenKind::Merge: return WebObject::of({k + l});
      case GenKind::Split: return WebObject::of({k, l});
    }
    throw std::logic_error("unreachable");
  }
  int domain_arity() const { return static_cast<int>(domain().size()); }
  int codomain_arity() const { return static_cast<int>(codomain().size()); }

  std::string str() const {
    switch (kind) {
      case GenKind::Identity: return "id(" + std::to_string(k) + ")";
      case GenKind::Cap: return "cap(" + std::to_string(k) + ")";
      case GenKind::Cup: return "cup(" + std::to_string(k) + ")";
      case GenKind::Merge: return "m(" + std::to_string(k) + "," + std::to_string(l) + ")";
      case GenKind::Split: return "s(" + std::to_string(k) + "," + std::to_string(l) + ")";
    }
    throw std::logic_error("unreachable");
  }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.kind == b.kind && a.k == b.k && a.l == b.l;
  }
  friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
  friend bool operator<(const Generator& a, const Generator& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.k != b.k) return a.k < b.k;
    return a.l < b.l;
  }

 private:
  static Generator make(GenKind kind, int k, int l) {
    if (k <= 0 || (l < 0) || ((kind == GenKind::Merge || kind == GenKind::Split) && l <= 0))
      throw std::invalid_argument("generator labels must be positive");
    Generator g;
    g.kind = kind;
    g.k = k;
    g.l = l;
    return g;
  }
};

// One level of a word: a single generator applied at position `pos` (0-based
// strand index), identity on every other strand. The ambient boundary objects
// are stored explicitly.
struct Slice {
  Generator gen;
  int pos = 0;
  WebObject dom;
  WebObject cod;

  static Slice applied(const WebObject& dom, int pos, const Generator& gen) {
    if (dom.is_zero()) throw std::invalid_argument("slice on the zero object");
    const WebObject gd = gen.domain();
    const size_t ar = gd.size();
    if (pos < 0 || static_cast<size_t>(pos) + ar > dom.size() ||
        static_cast<size_t>(pos) > dom.size())
      throw std::invalid_argument("slice position out of range");
    for (size_t t = 0; t < ar; ++t)
      if (dom.labels[pos + t] != gd.labels[t])
        throw std::invalid_argument("slice labels do not match: " + gen.str() + " at " +
                                    std::to_string(pos) + " on " + dom.str());
    Slice s;
    s.gen = gen;
    s.pos = pos;
    s.dom = dom;
    s.cod.labels.assign(dom.labels.begin(), dom.labels.begin() + pos);
    const WebObject gc = gen.codomain();
    s.cod.labels.insert(s.cod.labels.end(), gc.labels.begin(), gc.labels.end());
    s.cod.labels.insert(s.cod.labels.end(), dom.labels.begin() + pos + ar, dom.labels.end());
    return s;
  }

  friend bool operator==(const Slice& a, const Slice& b) {
    return a.gen == b.gen && a.pos == b.pos && a.dom == b.dom;
  }
  friend bool operator<(const Slice& a, const Slice& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    if (a.pos != b.pos) return a.pos < b.pos;
    return a.dom < b.dom;
  }
};

struct WebWord {
  WebObject dom;
  WebObject cod;
  std::vector<Slice> slices;

  static WebWord identity(const WebObject& obj) {
    if (obj.is_zero()) throw std::invalid_argument("identity word on the zero object");
    WebWord w;
    w.dom = obj;
    w.cod = obj;
    return w;
  }
  static WebWord of_generator(const Generator& gen) {
    WebWord w = identity(gen.domain());
    w.append(0, gen);
    return w;
  }

  WebWord& append(int pos, const Generator& gen) {
    Slice s = Slice::applied(cod, pos, gen);
    cod = s.cod;
    slices.push_back(std::move(s));
    return *this;
  }

  friend bool operator==(const WebWord& a, const WebWord& b) {
    return a.dom == b.dom && a.cod == b.cod && a.slices == b.slices;
  }
  friend bool operator<(const WebWord& a, const WebWord& b) {
    if (a.dom != b.dom) return a.dom < b.dom;
    if (a.cod != b.cod) return a.cod < b.cod;
    return a.slices < b.slices;
  }

  std::string str() const {
    if (slices.empty()) return "id" + dom.str();
    std::string s;
    for (size_t i = 0; i < slices.size(); ++i) {
      if (i) s += " ; ";
      s += slices[i].gen.str() + "@" + std::to_string(slices[i].pos);
    }
    return s + " : " + dom.str() + " -> " + cod.str();
  }
};

// Stack upper on top of lower; boundaries must already agree.
inline WebWord stack_words(const WebWord& upper, const WebWord& lower) {
  if (lower.cod != upper.dom) throw std::invalid_argument("stack_words: boundary mismatch");
  WebWord w;
  w.dom = lower.dom;
  w.cod = upper.cod;
  w.slices = lower.slices;
  w.slices.insert(w.slices.end(), upper.slices.begin(), upper.slices.end());
  return w;
}

// Horizontal juxtaposition, left factor first.
inline WebWord tensor_words(const WebWord& a, const WebWord& b) {
  WebWord w;
  w.dom = a.dom.tensored(b.dom);
  w.cod = a.cod.tensored(b.cod);
  for (const Slice& s : a.slices) {
    Slice t = s;
    t.dom = s.dom.tensored(b.dom);
    t.cod = s.cod.tensored(b.dom);
    w.slices.push_back(std::move(t));
  }
  const int offset = static_cast<int>(a.cod.size());
  for (const Slice& s : b.slices) {
    Slice t = s;
    t.pos += offset;
    t.dom = a.cod.tensored(s.dom);
    t.cod = a.cod.tensored(s.cod);
    w.slices.push_back(std::move(t));
  }
  return w;
}

class WebMorphism {
 public:
  using TermMap = std::map<WebWord, LaurentFrac>;

  WebMorphism() = default;

  static WebMorphism zero(WebObject dom, WebObject cod) {
    WebMorphism m;
    m.dom_ = std::move(dom);
    m.cod_ = std::move(cod);
    return m;
  }
  static WebMorphism of_word(WebWord w, LaurentFrac coeff = LaurentFrac(1)) {
    WebMorphism m;
    m.dom_ = w.dom;
    m.cod_ = w.cod;
    if (!coeff.is_zero()) m.terms_[std::move(w)] = std::move(coeff);
    return m;
  }
  static WebMorphism identity(const WebObject& obj) { return of_word(WebWord::identity(obj)); }
  static WebMorphism of_generator(const Generator& gen) { return of_word(WebWord::of_generator(gen)); }

  const WebObject& domain() const { return dom_; }
  const WebObject& codomain() const { return cod_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  WebMorphism& add_term(const WebWord& w, const LaurentFrac& coeff) {
    if (coeff.is_zero()) return *this;
    if (w.dom != dom_ || w.cod != cod_)
      throw std::invalid_argument("add_term: word boundary mismatch");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_[w] = coeff;
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  // Formal sums require equal boundaries, except that a zero morphism is
  // boundary-flexible and disappears into the other summand.
  WebMorphism& operator+=(const WebMorphism& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (dom_ != o.dom_ || cod_ != o.cod_)
      throw std::invalid_argument("sum of morphisms with different boundaries: " + dom_.str() +
                                  "->" + cod_.str() + " vs " + o.dom_.str() + "->" + o.cod_.str());
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  friend WebMorphism operator+(WebMorphism a, const WebMorphism& b) { return a += b; }
  WebMorphism& operator-=(const WebMorphism& o) { return *this += o.scaled(LaurentFrac(-1)); }
  friend WebMorphism operator-(WebMorphism a, const WebMorphism& b) { return a -= b; }

  WebMorphism scaled(const LaurentFrac& c) const {
    WebMorphism r = zero(dom_, cod_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) {
      LaurentFrac cv = v * c;
      if (!cv.is_zero()) r.terms_[w] = std::move(cv);
    }
    return r;
  }

  // Syntactic equality of the term maps.
  friend bool operator==(const WebMorphism& a, const WebMorphism& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const WebMorphism& a, const WebMorphism& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0 : " + dom_.str() + " -> " + cod_.str();
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) s += "  +  ";
      first = false;
      s += "[" + c.str() + "] * (" + w.str() + ")";
    }
    return s;
  }

 private:
  WebObject dom_;
  WebObject cod_;
  TermMap terms_;
};

// v after u (v stacked on top). A boundary mismatch composes to the zero
// morphism rather than an error; this is what makes out-of-range ladder
// summands vanish silently.
inline WebMorphism compose(const WebMorphism& v, const WebMorphism& u) {
  if (u.codomain() != v.domain() || u.domain().is_zero() || v.codomain().is_zero())
    return WebMorphism::zero(u.domain(), v.codomain());
  WebMorphism r = WebMorphism::zero(u.domain(), v.codomain());
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) r.add_term(stack_words(wv, wu), cu * cv);
  return r;
}

inline WebMorphism tensor(const WebMorphism& a, const WebMorphism& b) {
  if (a.domain().is_zero() || b.domain().is_zero() || a.codomain().is_zero() ||
      b.codomain().is_zero())
    return WebMorphism::zero(WebObject::zero_object(), WebObject::zero_object());
  WebMorphism r = WebMorphism::zero(a.domain().tensored(b.domain()),
                                    a.codomain().tensored(b.codomain()));
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add_term(tensor_words(wa, wb), ca * cb);
  return r;
}

namespace detail {
// Weight vector to object: zero labels are dropped (those strands do not
// exist); any negative label means the whole weight is out of range.
inline bool weight_ok(const std::vector<int>& w) {
  return std::all_of(w.begin(), w.end(), [](int k) { return k >= 0; });
}
inline WebObject object_of_weight(const std::vector<int>& w) {
  std::vector<int> labels;
  for (int k : w)
    if (k > 0) labels.push_back(k);
  return labels.empty() ? WebObject::empty() : WebObject::of(labels);
}
// Strand position of weight index i after zero labels are dropped.
inline int strand_position(const std::vector<int>& w, int i) {
  int p = 0;
  for (int t = 0; t < i; ++t)
    if (w[t] > 0) ++p;
  return p;
}
}  // namespace detail

// Divided-power ladder F^{(j)} between strands i and i+1 (1-based) of an
// m-strand weight: split j off strand i, merge it into strand i+1. Moves the
// weight (.., k_i, k_{i+1}, ..) to (.., k_i - j, k_{i+1} + j, ..). Out-of-range
// results give the zero morphism; zero-label pieces degenerate to identities.
inline WebMorphism f_ladder(int m, int i, int j, const std::vector<int>& weight) {
  if (static_cast<int>(weight.size()) != m || i < 1 || i + 1 > m)
    throw std::invalid_argument("f_ladder: bad strand index");
  if (j < 0 || !detail::weight_ok(weight))
    return WebMorphism::zero(detail::weight_ok(weight) ? detail::object_of_weight(weight)
                                                       : WebObject::zero_object(),
                             WebObject::zero_object());
  const int k = weight[i - 1], l = weight[i];
  std::vector<int> target = weight;
  target[i - 1] = k - j;
  target[i] = l + j;
  if (k - j < 0) return WebMorphism::zero(detail::object_of_weight(weight), WebObject::zero_object());
  if (j == 0) return WebMorphism::identity(detail::object_of_weight(weight));
  WebWord w = WebWord::identity(detail::object_of_weight(weight));
  const int p = detail::strand_position(weight, i - 1);
  // Split strand i as (k-j, j); skip when nothing is left on the near side.
  if (k - j > 0) w.append(p, Generator::split(k - j, j));
  // The j-labelled edge now sits immediately left of strand i+1.
  const int pj = p + (k - j > 0 ? 1 : 0);
  if (l > 0)
    w.append(pj, Generator::merge(j, l));
  return WebMorphism::of_word(std::move(w));
}

// Divided-power ladder E^{(j)}: the mirror of f_ladder, moving weight from
// strand i+1 to strand i.
inline WebMorphism e_ladder(int m, int i, int j, const std::vector<int>& weight) {
  if (static_cast<int>(weight.size()) != m || i < 1 || i + 1 > m)
    throw std::invalid_argument("e_ladder: bad strand index");
  if (j < 0 || !detail::weight_ok(weight))
    return WebMorphism::zero(detail::weight_ok(weight) ? detail::object_of_weight(weight)
                                                       : WebObject::zero_object(),
                             WebObject::zero_object());
  const int k = weight[i - 1], l = weight[i];
  if (l - j < 0) return WebMorphism::zero(detail::object_of_weight(weight), WebObject::zero_object());
  if (j == 0) return WebMorphism::identity(detail::object_of_weight(weight));
  WebWord w = WebWord::identity(detail::object_of_weight(weight));
  const int p = detail::strand_position(weight, i - 1);
  const int pnext = p + (weight[i - 1] > 0 ? 1 : 0);
  // Split strand i+1 as (j, l-j); the j-labelled edge lands next to strand i.
  if (l - j > 0) w.append(pnext, Generator::split(j, l - j));
  if (k > 0)
    w.append(p, Generator::merge(k, j));
  return WebMorphism::of_word(std::move(w));
}

// Full unzip of a thick strand into single strands, peeling one strand at a
// time from the left.
inline WebMorphism explode(int k) {
  if (k <= 0) throw std::invalid_argument("explode: thickness must be positive");
  WebWord w = WebWord::identity(WebObject::of({k}));
  for (int t = 0; t + 1 < k; ++t) w.append(t, Generator::split(1, k - 1 - t));
  return WebMorphism::of_word(std::move(w));
}

// Merge k single strands back into one thick strand; the mirror of explode.
inline WebMorphism assemble(int k) {
  if (k <= 0) throw std::invalid_argument("assemble: thickness must be positive");
  WebWord w = WebWord::identity(WebObject::of(std::vector<int>(k, 1)));
  for (int t = k - 2; t >= 0; --t) w.append(t, Generator::merge(1, k - 1 - t));
  return WebMorphism::of_word(std::move(w));
}

}  // namespace symweb
