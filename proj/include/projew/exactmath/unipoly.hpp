#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "projew/errors.hpp"
#include "projew/exactmath/ratfunc.hpp"

namespace projew::exactmath {

// Univariate polynomial in an abstract indeterminate, with coefficients in
// an exact ring T (BigRational at a point, RatFunc symbolically). Stored
// ascending: coeff(k) multiplies the k-th power. Leading coefficient is
// nonzero unless the polynomial is zero.
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> ascending) : c_(std::move(ascending)) {
    trim();
  }
  static UniPoly from_descending(std::vector<T> descending) {
    std::reverse(descending.begin(), descending.end());
    return UniPoly(std::move(descending));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T{}; }
  const std::vector<T>& ascending() const { return c_; }
  std::vector<T> descending() const {
    return {c_.rbegin(), c_.rend()};
  }

  T eval(const T& t) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T{});
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T{});
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T{});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const T& s, const UniPoly& p) {
    std::vector<T> r = p.c_;
    for (auto& v : r) v = s * v;
    return UniPoly(std::move(r));
  }

  // Multiplication by the k-th power of the indeterminate.
  UniPoly times_power(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> r(c_.size() + k, T{});
    std::copy(c_.begin(), c_.end(), r.begin() + static_cast<long>(k));
    return UniPoly(std::move(r));
  }

  // Deterministic rendering, highest degree first.
  std::string to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const T& c = c_[static_cast<std::size_t>(k)];
      if (exactmath::is_zero(c)) continue;
      auto [negative, mag] = coeff_string(c);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      bool unit = (mag == "1");
      if (!unit || k == 0) out += mag;
      if (k > 0) {
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

 private:
  static std::pair<bool, std::string> coeff_string(const BigRational& c) {
    return {sgn(c) < 0, exactmath::to_string(abs(c))};
  }
  static std::pair<bool, std::string> coeff_string(const RatFunc& c) {
    if (c.is_constant()) {
      BigRational v = c.constant_value();
      return {sgn(v) < 0, exactmath::to_string(abs(v))};
    }
    return {false, "(" + c.to_string() + ")"};
  }

  void trim() {
    while (!c_.empty() && exactmath::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

}  // namespace projew::exactmath
