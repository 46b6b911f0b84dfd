#pragma once

// Exact fractions of Laurent polynomials in q^{1/2}. Morphism coefficients and
// intertwiner matrix entries live here: intermediate values (thick cups,
// projector entries) can have genuine denominators, while every closed
// evaluation reduces back to a polynomial. Reduction is opportunistic exact
// division; equality is cross-multiplied and never needs a gcd.

#include "laurent.hpp"

namespace symweb {

class LaurentFrac {
 public:
  LaurentFrac() : num_(), den_(1) {}
  LaurentFrac(long value) : num_(value), den_(1) {}
  LaurentFrac(BigInt value) : num_(std::move(value)), den_(1) {}
  LaurentFrac(LaurentHalf value) : num_(std::move(value)), den_(1) {}
  LaurentFrac(LaurentHalf num, LaurentHalf den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("fraction with zero denominator");
    normalize();
  }

  static LaurentFrac inverse_of(LaurentHalf den) { return LaurentFrac(LaurentHalf(1), std::move(den)); }

  const LaurentHalf& num() const { return num_; }
  const LaurentHalf& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  // The polynomial value; throws when the denominator failed to cancel.
  LaurentHalf require_polynomial(const char* context = "value") const {
    if (!den_.is_one())
      throw exact_division_error(std::string(context) + " did not reduce to a polynomial: (" +
                                 num_.str() + ") / (" + den_.str() + ")");
    return num_;
  }

  friend LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b) {
    if (a.den_ == b.den_) return LaurentFrac(a.num_ + b.num_, a.den_);
    return LaurentFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b) {
    if (a.den_ == b.den_) return LaurentFrac(a.num_ - b.num_, a.den_);
    return LaurentFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b) {
    return LaurentFrac(a.num_ * b.num_, a.den_ * b.den_);
  }
  LaurentFrac operator-() const {
    LaurentFrac r = *this;
    r.num_ = -r.num_;
    return r;
  }
  LaurentFrac& operator+=(const LaurentFrac& o) { return *this = *this + o; }
  LaurentFrac& operator-=(const LaurentFrac& o) { return *this = *this - o; }
  LaurentFrac& operator*=(const LaurentFrac& o) { return *this = *this * o; }

  friend bool operator==(const LaurentFrac& a, const LaurentFrac& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const LaurentFrac& a, const LaurentFrac& b) { return !(a == b); }

  LaurentFrac barred() const {
    if (den_.is_one()) return LaurentFrac(num_.barred());
    return LaurentFrac(num_.barred(), den_.barred());
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentHalf(1);
      return;
    }
    // Pull the denominator to a canonical unit multiple: nonzero constant
    // term, positive leading coefficient.
    if (den_.min_exp() != 0) {
      num_.shift(-den_.min_exp());
      den_.shift(-den_.min_exp());
    }
    if (den_.leading_coeff() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_.is_one()) return;
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = LaurentHalf(1);
    }
  }

  LaurentHalf num_;
  LaurentHalf den_;
};

inline LaurentFrac bar(const LaurentFrac& a) { return a.barred(); }

}  // namespace symweb
