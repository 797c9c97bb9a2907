#pragma once

#include <array>
#include <utility>

#include "projew/errors.hpp"
#include "projew/exactmath/ratfunc.hpp"
#include "projew/geometry/tensor.hpp"

namespace projew::geometry {

// Torsion-free affine connection on the chart, held through its coefficients
// Pi^c_ab = Pi^c_ba. The epsilon-compatible representative of a projective
// class is the trace-free one: Pi^d_ad = 0.
class ChartConnection {
 public:
  explicit ChartConnection(VarNames vars = {}) : vars_(std::move(vars)) {
    for (auto& e : pi_) e = RatFunc(0, vars_);
  }

  const VarNames& vars() const { return vars_; }

  const RatFunc& pi(int c, int a, int b) const { return pi_[index(c, a, b)]; }

  // Writes both symmetric slots (a,b) and (b,a).
  void set_pi(int c, int a, int b, RatFunc value) {
    pi_[index(c, b, a)] = value;
    pi_[index(c, a, b)] = std::move(value);
  }

  // Pi^d_{a d}
  RatFunc trace(int a) const { return pi(0, a, 0) + pi(1, a, 1); }

  bool is_normalized() const {
    return trace(0).is_zero() && trace(1).is_zero();
  }

  friend bool operator==(const ChartConnection& l, const ChartConnection& r) {
    return l.pi_ == r.pi_;
  }

 private:
  static std::size_t index(int c, int a, int b) {
    if ((c | a | b) & ~1)
      throw DomainError("connection index out of range");
    return static_cast<std::size_t>(c * 4 + a * 2 + b);
  }

  VarNames vars_;
  std::array<RatFunc, 8> pi_;
};

// Projective change of representative by a 1-form: the connection
// coefficients move by Pi^c_ab -> Pi^c_ab + delta^c_a Ups_b + delta^c_b Ups_a.
inline ChartConnection shift_connection(const ChartConnection& conn,
                                        const TensorField& upsilon) {
  if (upsilon.contravariant_rank() != 0 || upsilon.covariant_rank() != 1)
    throw DomainError("shift_connection expects a covector");
  ChartConnection out = conn;
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = a; b < 2; ++b) {
        RatFunc v = conn.pi(c, a, b);
        if (c == a) v += upsilon.at({b});
        if (c == b) v += upsilon.at({a});
        out.set_pi(c, a, b, std::move(v));
      }
  return out;
}

// The unique epsilon-compatible representative: shift by
// Ups_a = -(1/3) Pi^d_ad, after which both traces vanish and the volume form
// is parallel. Idempotent.
inline ChartConnection normalize_connection(const ChartConnection& conn) {
  TensorField ups(0, 1, conn.vars());
  const RatFunc third(exactmath::make_rational(-1, 3), conn.vars());
  for (int a = 0; a < 2; ++a) ups.at({a}) = third * conn.trace(a);
  return shift_connection(conn, ups);
}

}  // namespace projew::geometry
