#pragma once

// Exact Laurent polynomials in q^{1/2} with arbitrary-precision integer
// coefficients, plus quantum integers, factorials and binomials. Exponents are
// stored in half-integer units: stored exponent n stands for q^{n/2}.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symweb {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when an exact polynomial division leaves a remainder in a place where
// the calculus guarantees divisibility. Reaching it means an internal bug, and
// the CLI maps it to exit code 3.
struct exact_division_error : std::runtime_error {
  explicit exact_division_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
  int line = 1;
  int column = 1;
  parse_error(const std::string& what, int line_, int column_)
      : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

class LaurentHalf {
 public:
  // Descending exponent order; convenient for printing and leading-term access.
  using TermMap = std::map<int, BigInt, std::greater<int>>;

  LaurentHalf() = default;
  LaurentHalf(long value) {
    if (value != 0) terms_[0] = value;
  }
  LaurentHalf(BigInt value) {
    if (value != 0) terms_[0] = std::move(value);
  }

  // q^{half_exp/2} scaled by coeff.
  static LaurentHalf monomial(int half_exp, BigInt coeff = 1) {
    LaurentHalf r;
    if (coeff != 0) r.terms_[half_exp] = std::move(coeff);
    return r;
  }
  // q^n in whole units of q.
  static LaurentHalf q_power(int exp) { return monomial(2 * exp); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
  }
  // True when every exponent is an even number of half-units, i.e. the value
  // lies in the subring of Laurent polynomials in q.
  bool is_integral() const {
    for (const auto& [n, c] : terms_)
      if (n % 2 != 0) return false;
    return true;
  }

  int max_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int min_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  const BigInt& leading_coeff() const {
    static const BigInt zero = 0;
    return terms_.empty() ? zero : terms_.begin()->second;
  }
  BigInt coeff(int half_exp) const {
    auto it = terms_.find(half_exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  LaurentHalf& operator+=(const LaurentHalf& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, c);
    return *this;
  }
  LaurentHalf& operator-=(const LaurentHalf& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, -c);
    return *this;
  }
  friend LaurentHalf operator+(LaurentHalf a, const LaurentHalf& b) { return a += b; }
  friend LaurentHalf operator-(LaurentHalf a, const LaurentHalf& b) { return a -= b; }
  LaurentHalf operator-() const {
    LaurentHalf r;
    for (const auto& [n, c] : terms_) r.terms_[n] = -c;
    return r;
  }
  friend LaurentHalf operator*(const LaurentHalf& a, const LaurentHalf& b) {
    LaurentHalf r;
    for (const auto& [na, ca] : a.terms_)
      for (const auto& [nb, cb] : b.terms_) r.add_term(na + nb, ca * cb);
    return r;
  }
  LaurentHalf& operator*=(const LaurentHalf& o) { return *this = *this * o; }
  LaurentHalf& scale(const BigInt& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [n, v] : terms_) v *= c;
    return *this;
  }
  // Multiply by the monomial coeff * q^{half_exp/2} in place.
  LaurentHalf& shift(int half_exp, const BigInt& coeff = 1) {
    TermMap shifted;
    for (auto& [n, v] : terms_) {
      BigInt c = v * coeff;
      if (c != 0) shifted[n + half_exp] = std::move(c);
    }
    terms_ = std::move(shifted);
    return *this;
  }

  friend bool operator==(const LaurentHalf& a, const LaurentHalf& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentHalf& a, const LaurentHalf& b) { return !(a == b); }
  friend bool operator<(const LaurentHalf& a, const LaurentHalf& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const auto& x, const auto& y) {
          if (x.first != y.first) return x.first < y.first;
          return x.second < y.second;
        });
  }

  // The involution q ↦ q^{-1}.
  LaurentHalf barred() const {
    LaurentHalf r;
    for (const auto& [n, c] : terms_) r.terms_[-n] = c;
    return r;
  }

  // Exact division in Z[q^{±1/2}]; nullopt when the divisor does not divide
  // this value in the ring.
  std::optional<LaurentHalf> divide_exact(const LaurentHalf& den) const {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (is_zero()) return LaurentHalf();
    // Shift both operands so they become ordinary polynomials with nonzero
    // constant term; monomials are units, so divisibility is unaffected.
    const int result_shift = min_exp() - den.min_exp();
    LaurentHalf rem = *this;
    rem.shift(-min_exp());
    LaurentHalf d = den;
    d.shift(-den.min_exp());
    const int ddeg = d.max_exp();
    const BigInt& dlead = d.leading_coeff();
    LaurentHalf quot;
    while (!rem.is_zero()) {
      const int rdeg = rem.max_exp();
      if (rdeg < ddeg) return std::nullopt;
      if (rem.leading_coeff() % dlead != 0) return std::nullopt;
      BigInt c = rem.leading_coeff() / dlead;
      const int e = rdeg - ddeg;
      quot.add_term(e, c);
      LaurentHalf t = d;
      t.shift(e, c);
      rem -= t;
    }
    quot.shift(result_shift);
    return quot;
  }

  // Text form, descending exponents: `-q - q^-1`, `2*q^2 + 1`, `q^3/2`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : terms_) {
      const bool neg = c < 0;
      BigInt a = neg ? BigInt(-c) : c;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      if (n == 0) {
        os << a.str();
        continue;
      }
      if (a != 1) os << a.str() << "*";
      if (n % 2 == 0) {
        const int e = n / 2;
        if (e == 1)
          os << "q";
        else
          os << "q^" << e;
      } else {
        os << "q^" << n << "/2";
      }
    }
    return os.str();
  }

  static LaurentHalf parse(std::string_view src);

 private:
  void add_term(int n, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(n);
    if (it == terms_.end()) {
      terms_[n] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

// Quantum integer [a] = q^{a-1} + q^{a-3} + ... + q^{-a+1}; [0] = 0 because
// the closed formula gives an empty sum. Negative input is rejected; callers
// spell out |a| and the sign where a signed value occurs.
inline LaurentHalf qint(int a) {
  if (a < 0) throw std::invalid_argument("qint: negative argument " + std::to_string(a));
  LaurentHalf r;
  for (int e = a - 1; e >= -a + 1; e -= 2) r += LaurentHalf::q_power(e);
  return r;
}

namespace detail {
// [a] extended by [-a] = -[a]; used by qbinom, whose upper argument may go
// negative in the square-switch coefficients.
inline LaurentHalf qint_signed(int a) { return a >= 0 ? qint(a) : -qint(-a); }
}  // namespace detail

// [b]! = [1][2]...[b]; the empty product for b = 0.
inline LaurentHalf qfact(int b) {
  if (b < 0) throw std::invalid_argument("qfact: negative argument " + std::to_string(b));
  LaurentHalf r(1);
  for (int t = 1; t <= b; ++t) r *= qint(t);
  return r;
}

// Quantum binomial [a][a-1]...[a-b+1] / [b]!; always a Laurent polynomial.
inline LaurentHalf qbinom(int a, int b) {
  if (b < 0) throw std::invalid_argument("qbinom: negative lower argument " + std::to_string(b));
  LaurentHalf num(1);
  for (int t = 0; t < b; ++t) num *= detail::qint_signed(a - t);
  auto q = num.divide_exact(qfact(b));
  if (!q)
    throw exact_division_error("qbinom(" + std::to_string(a) + "," + std::to_string(b) +
                               "): numerator not divisible by [b]!");
  return *q;
}

inline LaurentHalf bar(const LaurentHalf& a) { return a.barred(); }

inline LaurentHalf LaurentHalf::parse(std::string_view src) {
  LaurentHalf result;
  size_t i = 0;
  const auto col = [&] { return static_cast<int>(i) + 1; };
  const auto skip_ws = [&] {
    while (i < src.size() && (src[i] == ' ' || src[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == src.size()) throw parse_error("empty polynomial", 1, col());
  bool first = true;
  while (true) {
    skip_ws();
    int sign = 1;
    if (i < src.size() && (src[i] == '+' || src[i] == '-')) {
      if (first && src[i] == '+')
        throw parse_error("unexpected leading '+'", 1, col());
      sign = src[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw parse_error("expected '+' or '-' between terms", 1, col());
    }
    first = false;
    BigInt coeff = 1;
    bool saw_number = false;
    if (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
      std::string digits;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) digits += src[i++];
      coeff = BigInt(digits);
      saw_number = true;
      skip_ws();
      if (i < src.size() && src[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    int half_exp = 0;
    bool saw_q = false;
    if (i < src.size() && src[i] == 'q') {
      saw_q = true;
      ++i;
      if (i < src.size() && src[i] == '^') {
        ++i;
        bool braced = false;
        if (i < src.size() && src[i] == '{') {
          braced = true;
          ++i;
        }
        int esign = 1;
        if (i < src.size() && src[i] == '-') {
          esign = -1;
          ++i;
        }
        if (i == src.size() || !std::isdigit(static_cast<unsigned char>(src[i])))
          throw parse_error("expected exponent after '^'", 1, col());
        long e = 0;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
          e = e * 10 + (src[i++] - '0');
        bool half = false;
        if (i + 1 < src.size() && src[i] == '/' && src[i + 1] == '2') {
          half = true;
          i += 2;
        }
        if (braced) {
          if (i == src.size() || src[i] != '}') throw parse_error("expected '}'", 1, col());
          ++i;
        }
        half_exp = static_cast<int>(esign * (half ? e : 2 * e));
      } else {
        half_exp = 2;
      }
    }
    if (!saw_number && !saw_q) throw parse_error("expected a term", 1, col());
    if (sign < 0) coeff = -coeff;
    result += LaurentHalf::monomial(half_exp, coeff);
    skip_ws();
    if (i == src.size()) break;
  }
  return result;
}

}  // namespace symweb
