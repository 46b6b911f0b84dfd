#pragma once

// A small expression language for webs:
//   expr   := term ('+' term)*
//   term   := scalar* factor (';' factor)*
//   factor := primary ('x' primary)*
//   primary:= atom | '(' expr ')'
//   atom   := id(k) | cap(k) | cup(k) | m(k,l) | s(k,l)
//   scalar := [k] | q^n | q^{n/2} | integer
// Tensor 'x' binds tighter than composition ';', which binds tighter than
// '+'. 'a ; b' stacks a on top of b (b is applied first).

#include "web.hpp"

#include <memory>

namespace symweb {

struct ScalarLit {
  enum class Kind { QInt, QPow, Int };
  Kind kind = Kind::Int;
  int arg = 0;   // QInt: the bracket entry; QPow: exponent in half units
  BigInt value;  // Int only

  LaurentHalf poly() const {
    switch (kind) {
      case Kind::QInt: return qint(arg);
      case Kind::QPow: return LaurentHalf::monomial(arg);
      case Kind::Int: return LaurentHalf(value);
    }
    throw std::logic_error("unreachable");
  }
  std::string str() const {
    switch (kind) {
      case Kind::QInt: return "[" + std::to_string(arg) + "]";
      case Kind::QPow:
        if (arg % 2 == 0) return "q^" + std::to_string(arg / 2);
        return "q^{" + std::to_string(arg) + "/2}";
      case Kind::Int: return value.str();
    }
    throw std::logic_error("unreachable");
  }
};

struct WebExpr {
  struct Primary {
    std::optional<Generator> atom;
    std::shared_ptr<WebExpr> sub;  // parenthesised subexpression
  };
  struct Factor {
    std::vector<Primary> tensors;
  };
  struct Term {
    std::vector<ScalarLit> scalars;
    std::vector<Factor> chain;  // composed left over right: chain[0] on top
  };
  std::vector<Term> terms;
};

namespace detail {

class WebParser {
 public:
  explicit WebParser(std::string_view src) : src_(src) {}

  WebExpr parse() {
    WebExpr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, line_, static_cast<int>(pos_ - line_start_) + 1);
  }
  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n')) {
      if (src_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
      ++pos_;
    }
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  int parse_int(bool allow_negative) {
    skip_ws();
    bool neg = false;
    if (allow_negative && pos_ < src_.size() && src_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected an integer");
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      v = v * 10 + (src_[pos_++] - '0');
    return static_cast<int>(neg ? -v : v);
  }
  std::string parse_word() {
    skip_ws();
    std::string w;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
      w += src_[pos_++];
    return w;
  }

  WebExpr parse_expr() {
    WebExpr e;
    e.terms.push_back(parse_term());
    while (eat('+')) e.terms.push_back(parse_term());
    return e;
  }

  WebExpr::Term parse_term() {
    WebExpr::Term t;
    while (true) {
      skip_ws();
      if (pos_ >= src_.size()) break;
      const char c = src_[pos_];
      if (c == '[') {
        ++pos_;
        const int a = parse_int(false);
        if (!eat(']')) fail("expected ']'");
        t.scalars.push_back({ScalarLit::Kind::QInt, a, 0});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '-' && pos_ + 1 < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        bool neg = c == '-';
        if (neg) ++pos_;
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          digits += src_[pos_++];
        BigInt v(digits);
        if (neg) v = -v;
        t.scalars.push_back({ScalarLit::Kind::Int, 0, std::move(v)});
        continue;
      }
      if (c == 'q' && !std::isalpha(static_cast<unsigned char>(
                           pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0'))) {
        ++pos_;
        int half = 2;
        if (eat('^')) {
          const bool braced = eat('{');
          const int e = parse_int(true);
          bool half_denominator = false;
          if (pos_ + 1 < src_.size() && src_[pos_] == '/' && src_[pos_ + 1] == '2') {
            half_denominator = true;
            pos_ += 2;
          }
          if (braced && !eat('}')) fail("expected '}'");
          half = half_denominator ? e : 2 * e;
        }
        t.scalars.push_back({ScalarLit::Kind::QPow, half, 0});
        continue;
      }
      break;
    }
    t.chain.push_back(parse_factor());
    while (eat(';')) t.chain.push_back(parse_factor());
    return t;
  }

  WebExpr::Factor parse_factor() {
    WebExpr::Factor f;
    f.tensors.push_back(parse_primary());
    while (true) {
      skip_ws();
      // A lone 'x' is the tensor operator; atoms never start with it.
      if (pos_ < src_.size() && src_[pos_] == 'x' &&
          (pos_ + 1 == src_.size() || !std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])))) {
        ++pos_;
        f.tensors.push_back(parse_primary());
        continue;
      }
      break;
    }
    return f;
  }

  WebExpr::Primary parse_primary() {
    skip_ws();
    WebExpr::Primary p;
    if (peek() == '(') {
      eat('(');
      p.sub = std::make_shared<WebExpr>(parse_expr());
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    const std::string name = parse_word();
    if (name.empty()) fail("expected a generator or '('");
    if (!eat('(')) fail("expected '(' after '" + name + "'");
    const int k = parse_int(false);
    int l = 0;
    bool has_l = false;
    if (eat(',')) {
      l = parse_int(false);
      has_l = true;
    }
    if (!eat(')')) fail("expected ')'");
    if (name == "id" && !has_l)
      p.atom = Generator::identity(k);
    else if (name == "cap" && !has_l)
      p.atom = Generator::cap(k);
    else if (name == "cup" && !has_l)
      p.atom = Generator::cup(k);
    else if (name == "m" && has_l)
      p.atom = Generator::merge(k, l);
    else if (name == "s" && has_l)
      p.atom = Generator::split(k, l);
    else
      fail("unknown generator '" + name + "'");
    return p;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  size_t line_start_ = 0;
};

}  // namespace detail

inline WebExpr parse_web(std::string_view src) { return detail::WebParser(src).parse(); }

inline std::string print_web(const WebExpr& e) {
  std::string out;
  for (size_t t = 0; t < e.terms.size(); ++t) {
    if (t) out += " + ";
    const WebExpr::Term& term = e.terms[t];
    for (const ScalarLit& s : term.scalars) out += s.str() + " ";
    for (size_t f = 0; f < term.chain.size(); ++f) {
      if (f) out += " ; ";
      const WebExpr::Factor& factor = term.chain[f];
      for (size_t p = 0; p < factor.tensors.size(); ++p) {
        if (p) out += " x ";
        const WebExpr::Primary& prim = factor.tensors[p];
        if (prim.atom)
          out += prim.atom->str();
        else
          out += "(" + print_web(*prim.sub) + ")";
      }
    }
  }
  return out;
}

struct ElaborationResult {
  WebMorphism morphism;
  std::vector<std::string> warnings;
};

namespace detail {

inline WebMorphism elaborate_expr(const WebExpr& e, std::vector<std::string>& warnings);

inline WebMorphism elaborate_primary(const WebExpr::Primary& p, std::vector<std::string>& warnings) {
  if (p.atom) {
    // id(k) elaborates to the empty word, not to a one-slice word.
    if (p.atom->kind == GenKind::Identity) return WebMorphism::identity(p.atom->domain());
    return WebMorphism::of_generator(*p.atom);
  }
  return elaborate_expr(*p.sub, warnings);
}

inline WebMorphism elaborate_expr(const WebExpr& e, std::vector<std::string>& warnings) {
  std::optional<WebMorphism> sum;
  for (const WebExpr::Term& term : e.terms) {
    LaurentHalf scalar(1);
    for (const ScalarLit& s : term.scalars) scalar *= s.poly();
    std::optional<WebMorphism> chain;
    for (auto f = term.chain.rbegin(); f != term.chain.rend(); ++f) {
      WebMorphism factor = elaborate_primary(f->tensors[0], warnings);
      for (size_t p = 1; p < f->tensors.size(); ++p)
        factor = tensor(factor, elaborate_primary(f->tensors[p], warnings));
      if (!chain) {
        chain = std::move(factor);
      } else {
        if (chain->codomain() != factor.domain())
          warnings.push_back("composition boundary mismatch: " + chain->codomain().str() +
                             " composed into " + factor.domain().str() +
                             "; the term is the zero morphism");
        chain = compose(factor, *chain);
      }
    }
    WebMorphism value = chain->scaled(LaurentFrac(scalar));
    if (!sum) {
      sum = std::move(value);
    } else {
      *sum += value;  // mismatched boundaries throw std::invalid_argument
    }
  }
  return *sum;
}

}  // namespace detail

inline ElaborationResult elaborate(const WebExpr& e) {
  ElaborationResult r;
  r.morphism = detail::elaborate_expr(e, r.warnings);
  return r;
}

inline ElaborationResult elaborate(std::string_view src) { return elaborate(parse_web(src)); }

}  // namespace symweb
