#pragma once

// Sparse matrices of exact fractions carrying intertwiners between tensor
// products of symmetric powers. A strand of label k contributes the basis
// x_0, ..., x_k of the k-th symmetric power (x_j has j doubled letters); a
// tuple is indexed by the mixed-radix flat index with the first strand most
// significant.

#include "web.hpp"

namespace symweb {

inline long object_dimension(const WebObject& obj) { return obj.dimension(); }

inline std::vector<int> decode_index(const WebObject& obj, long index) {
  if (obj.is_zero()) throw std::invalid_argument("decode_index on the zero object");
  std::vector<int> js(obj.size());
  for (size_t t = obj.size(); t-- > 0;) {
    const int radix = obj.labels[t] + 1;
    js[t] = static_cast<int>(index % radix);
    index /= radix;
  }
  if (index != 0) throw std::invalid_argument("decode_index: index out of range");
  return js;
}

inline long encode_index(const WebObject& obj, const std::vector<int>& js) {
  if (obj.is_zero()) throw std::invalid_argument("encode_index on the zero object");
  if (js.size() != obj.size()) throw std::invalid_argument("encode_index: wrong length");
  long index = 0;
  for (size_t t = 0; t < obj.size(); ++t) {
    if (js[t] < 0 || js[t] > obj.labels[t]) throw std::invalid_argument("encode_index: out of range");
    index = index * (obj.labels[t] + 1) + js[t];
  }
  return index;
}

class IntertwinerMatrix {
 public:
  using EntryMap = std::map<std::pair<long, long>, LaurentFrac>;  // (row, col)

  IntertwinerMatrix() = default;
  IntertwinerMatrix(WebObject dom, WebObject cod) : dom_(std::move(dom)), cod_(std::move(cod)) {}

  static IntertwinerMatrix zero(WebObject dom, WebObject cod) {
    return IntertwinerMatrix(std::move(dom), std::move(cod));
  }
  static IntertwinerMatrix identity(const WebObject& obj) {
    IntertwinerMatrix m(obj, obj);
    const long d = obj.dimension();
    for (long i = 0; i < d; ++i) m.entries_[{i, i}] = LaurentFrac(1);
    return m;
  }

  const WebObject& domain() const { return dom_; }
  const WebObject& codomain() const { return cod_; }
  long rows() const { return cod_.dimension(); }
  long cols() const { return dom_.dimension(); }
  const EntryMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  LaurentFrac get(long row, long col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? LaurentFrac() : it->second;
  }
  void set(long row, long col, LaurentFrac v) {
    if (row < 0 || row >= rows() || col < 0 || col >= cols())
      throw std::invalid_argument("matrix entry out of range");
    if (v.is_zero())
      entries_.erase({row, col});
    else
      entries_[{row, col}] = std::move(v);
  }
  void add_to(long row, long col, const LaurentFrac& v) {
    if (v.is_zero()) return;
    auto it = entries_.find({row, col});
    if (it == entries_.end()) {
      set(row, col, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  IntertwinerMatrix& operator+=(const IntertwinerMatrix& o) {
    if (dom_ != o.dom_ || cod_ != o.cod_)
      throw std::invalid_argument("matrix sum boundary mismatch");
    for (const auto& [rc, v] : o.entries_) add_to(rc.first, rc.second, v);
    return *this;
  }
  friend IntertwinerMatrix operator+(IntertwinerMatrix a, const IntertwinerMatrix& b) {
    return a += b;
  }
  IntertwinerMatrix scaled(const LaurentFrac& c) const {
    IntertwinerMatrix r(dom_, cod_);
    if (c.is_zero()) return r;
    for (const auto& [rc, v] : entries_) {
      LaurentFrac cv = v * c;
      if (!cv.is_zero()) r.entries_[rc] = std::move(cv);
    }
    return r;
  }

  // Matrix composition a * b = a after b.
  friend IntertwinerMatrix operator*(const IntertwinerMatrix& a, const IntertwinerMatrix& b) {
    if (b.cod_ != a.dom_) throw std::invalid_argument("matrix product boundary mismatch");
    IntertwinerMatrix r(b.dom_, a.cod_);
    // Group b by column for cache-friendly sparse accumulation.
    std::map<long, std::vector<std::pair<long, const LaurentFrac*>>> bcols;
    for (const auto& [rc, v] : b.entries_) bcols[rc.second].push_back({rc.first, &v});
    std::map<long, std::vector<std::pair<long, const LaurentFrac*>>> acols;
    for (const auto& [rc, v] : a.entries_) acols[rc.second].push_back({rc.first, &v});
    for (const auto& [col, bvals] : bcols) {
      std::map<long, LaurentFrac> acc;
      for (const auto& [mid, bv] : bvals) {
        auto it = acols.find(mid);
        if (it == acols.end()) continue;
        for (const auto& [row, av] : it->second) {
          auto [slot, inserted] = acc.try_emplace(row, LaurentFrac());
          slot->second += (*av) * (*bv);
        }
      }
      for (auto& [row, v] : acc)
        if (!v.is_zero()) r.entries_[{row, col}] = std::move(v);
    }
    return r;
  }

  // Exact semantic equality, entry by entry.
  friend bool operator==(const IntertwinerMatrix& a, const IntertwinerMatrix& b) {
    if (a.dom_ != b.dom_ || a.cod_ != b.cod_) return false;
    for (const auto& [rc, v] : a.entries_)
      if (b.get(rc.first, rc.second) != v) return false;
    for (const auto& [rc, v] : b.entries_)
      if (a.entries_.find(rc) == a.entries_.end() && !v.is_zero()) return false;
    return true;
  }
  friend bool operator!=(const IntertwinerMatrix& a, const IntertwinerMatrix& b) {
    return !(a == b);
  }

  bool is_polynomial() const {
    for (const auto& [rc, v] : entries_)
      if (!v.is_polynomial()) return false;
    return true;
  }

  LaurentFrac trace() const {
    if (dom_ != cod_) throw std::invalid_argument("trace of a non-endomorphism");
    LaurentFrac t;
    for (const auto& [rc, v] : entries_)
      if (rc.first == rc.second) t += v;
    return t;
  }

  std::string str() const {
    std::string s = dom_.str() + " -> " + cod_.str();
    if (entries_.empty()) return s + " : 0";
    for (const auto& [rc, v] : entries_)
      s += "\n  [" + std::to_string(rc.first) + "," + std::to_string(rc.second) + "] = " + v.str();
    return s;
  }

 private:
  WebObject dom_;
  WebObject cod_;
  EntryMap entries_;
};

}  // namespace symweb
