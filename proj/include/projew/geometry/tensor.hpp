#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "projew/errors.hpp"
#include "projew/exactmath/ratfunc.hpp"

namespace projew::geometry {

using exactmath::BigRational;
using exactmath::RatFunc;
using exactmath::VarNames;

// Fixed volume-form convention: eps_12 = +1 = eps^12, so that
// eps^{ab} eps_{ab} = 2 and eps^{ac} eps_{bc} = delta^a_b. The same numeric
// array serves both index positions.
inline constexpr int kEps[2][2] = {{0, 1}, {-1, 0}};

// Tensor field on the 2-dimensional chart with r contravariant and s
// covariant slots. Components are stored in a flat array indexed base-2 with
// the contravariant indices first (most significant), then the covariant
// indices in their defined order.
class TensorField {
 public:
  TensorField(int r, int s, VarNames vars = {})
      : r_(r), s_(s), vars_(std::move(vars)),
        c_(static_cast<std::size_t>(1) << (r + s)) {}

  static TensorField scalar(RatFunc value) {
    TensorField t(0, 0, value.vars());
    t.c_[0] = std::move(value);
    return t;
  }

  int contravariant_rank() const { return r_; }
  int covariant_rank() const { return s_; }
  int rank() const { return r_ + s_; }
  const VarNames& vars() const { return vars_; }

  RatFunc& at(std::span<const int> idx) { return c_[flat(idx)]; }
  const RatFunc& at(std::span<const int> idx) const { return c_[flat(idx)]; }
  RatFunc& at(std::initializer_list<int> idx) {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  const RatFunc& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  bool is_zero() const {
    for (const RatFunc& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const TensorField& a, const TensorField& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.c_ == b.c_;
  }

 private:
  std::size_t flat(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != rank())
      throw DomainError("tensor index count does not match valence");
    std::size_t f = 0;
    for (int v : idx) {
      if (v != 0 && v != 1) throw DomainError("tensor index out of range");
      f = (f << 1) | static_cast<std::size_t>(v);
    }
    return f;
  }

  int r_;
  int s_;
  VarNames vars_;
  std::vector<RatFunc> c_;
};

// v^a = eps^{ab} v_b
inline TensorField raise_index(const TensorField& v) {
  if (v.contravariant_rank() != 0 || v.covariant_rank() != 1)
    throw DomainError("raise_index expects a covector");
  TensorField up(1, 0, v.vars());
  for (int a = 0; a < 2; ++a) {
    RatFunc acc(0, v.vars());
    for (int b = 0; b < 2; ++b)
      if (kEps[a][b] != 0)
        acc += RatFunc(kEps[a][b], v.vars()) * v.at({b});
    up.at({a}) = acc;
  }
  return up;
}

// v_b = v^a eps_{ab}
inline TensorField lower_index(const TensorField& v) {
  if (v.contravariant_rank() != 1 || v.covariant_rank() != 0)
    throw DomainError("lower_index expects a vector");
  TensorField lo(0, 1, v.vars());
  for (int b = 0; b < 2; ++b) {
    RatFunc acc(0, v.vars());
    for (int a = 0; a < 2; ++a)
      if (kEps[a][b] != 0)
        acc += v.at({a}) * RatFunc(kEps[a][b], v.vars());
    lo.at({b}) = acc;
  }
  return lo;
}

}  // namespace projew::geometry
