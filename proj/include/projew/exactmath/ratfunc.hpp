#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "projew/errors.hpp"
#include "projew/exactmath/mpoly.hpp"

namespace projew::exactmath {

// Element of the coefficient field Q(x, y), kept in canonical form:
// gcd(num, den) = 1 with the denominator an integer-primitive polynomial of
// positive leading coefficient (so polynomials have denominator 1).
class RatFunc {
 public:
  RatFunc() : num_(), den_(MPoly::constant(1)) {}
  RatFunc(MPoly num) : num_(std::move(num)), den_(MPoly::constant(1)) {
    normalize_den_only();
  }
  RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }
  RatFunc(const BigRational& c, VarNames vars = {})
      : num_(MPoly::constant(c, vars)), den_(MPoly::constant(1, vars)) {}
  RatFunc(long c, VarNames vars = {})
      : num_(MPoly::constant(c, vars)), den_(MPoly::constant(1, vars)) {}

  static RatFunc variable(int axis, VarNames vars = {}) {
    return RatFunc(MPoly::variable(axis, std::move(vars)));
  }

  // Trusted constructor for callers that have already reduced num/den to
  // canonical form (coprime, denominator integer-primitive with positive
  // leading coefficient). Skips the gcd pass.
  static RatFunc from_canonical_parts(MPoly num, MPoly den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = r.num_.is_zero() ? MPoly::constant(1, den.vars()) : std::move(den);
    return r;
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const VarNames& vars() const {
    return num_.is_constant() ? den_.vars() : num_.vars();
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  BigRational constant_value() const {
    return num_.constant_value() / den_.constant_value();
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero())
      throw DivideByZeroError("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc pow(unsigned e) const {
    RatFunc r(1, vars());
    RatFunc base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1u) r = r * base;
      if (e > 1) base = base * base;
    }
    return r;
  }

  // d(n/d) = (n'd - nd')/d^2
  RatFunc diff(int axis) const {
    return RatFunc(num_.diff(axis) * den_ - num_ * den_.diff(axis),
                   den_ * den_);
  }
  RatFunc diff(std::string_view var) const {
    int axis = num_.is_constant() ? den_.axis_of(var) : num_.axis_of(var);
    return diff(axis);
  }

  BigRational eval(const BigRational& px, const BigRational& py) const {
    BigRational d = den_.eval(px, py);
    if (exactmath::is_zero(d))
      throw PoleError(den_.to_string(), exactmath::to_string(px),
                      exactmath::to_string(py));
    return num_.eval(px, py) / d;
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  // Canonical form makes componentwise comparison agree with the defining
  // cross-multiplication equality a*d == c*b.
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void canonicalize() {
    if (den_.is_zero())
      throw DivideByZeroError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = MPoly::constant(1, den_.vars());
      return;
    }
    MPoly g = MPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divided_exactly_by(g);
      den_ = den_.divided_exactly_by(g);
    }
    normalize_den_only();
  }

  // Scale so the denominator is integer-primitive with positive leading
  // coefficient.
  void normalize_den_only() {
    BigRational c = den_.content();
    if (c == 1) return;
    den_ *= 1 / c;
    num_ *= 1 / c;
  }

  MPoly num_;
  MPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace projew::exactmath
