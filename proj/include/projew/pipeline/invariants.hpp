#pragma once

#include <utility>

#include "projew/exactmath/ratfunc.hpp"
#include "projew/geometry/connection.hpp"
#include "projew/geometry/curvature.hpp"
#include "projew/geometry/tensor.hpp"

namespace projew::pipeline {

using exactmath::BigRational;
using exactmath::RatFunc;
using exactmath::VarNames;
using geometry::ChartConnection;
using geometry::TensorField;

inline RatFunc frac(long num, long den, const VarNames& vars) {
  return RatFunc(exactmath::make_rational(num, den), vars);
}

// v^a d_a f for a scalar f.
inline RatFunc vector_dot_grad(const TensorField& vup, const RatFunc& f) {
  return vup.at({0}) * f.diff(0) + vup.at({1}) * f.diff(1);
}

// D_a v^a
inline RatFunc divergence(const TensorField& vup,
                          const ChartConnection& conn) {
  TensorField d = geometry::covariant_derivative(vup, conn);
  return d.at({0, 0}) + d.at({1, 1});
}

// The derived projective invariants of a structure, all computed on the
// epsilon-compatible representative:
//
//   phi = 2 D_a Y^a
//   W^a = Y^b D_b Y^a - (2 phi / 3) Y^a
//   rho = Y_a W^a
//   ell = 5 phi^2 / 12 + 3 P_ac Y^a Y^c - (Y^a D_a phi) / 2
struct InvariantBundle {
  ChartConnection conn;  // normalized representative the fields belong to
  TensorField P;         // (0,2)
  TensorField Y;         // Y_a
  TensorField Yup;       // Y^a
  RatFunc phi;
  TensorField Wup;       // W^a
  TensorField W;         // W_a
  RatFunc rho;
  RatFunc ell;
};

inline InvariantBundle invariant_bundle(const ChartConnection& input) {
  ChartConnection conn = geometry::normalize_connection(input);
  const VarNames& vars = conn.vars();
  TensorField p = geometry::rho_tensor(geometry::ricci(geometry::curvature(conn)));
  auto [y, yup] = geometry::cotton_york(p, conn);

  TensorField dyup = geometry::covariant_derivative(yup, conn);
  RatFunc phi = frac(2, 1, vars) * (dyup.at({0, 0}) + dyup.at({1, 1}));

  TensorField wup(1, 0, vars);
  const RatFunc two_thirds_phi = frac(2, 3, vars) * phi;
  for (int a = 0; a < 2; ++a) {
    RatFunc acc(0, vars);
    for (int b = 0; b < 2; ++b) acc += yup.at({b}) * dyup.at({a, b});
    wup.at({a}) = acc - two_thirds_phi * yup.at({a});
  }
  TensorField w = geometry::lower_index(wup);

  RatFunc rho = y.at({0}) * wup.at({0}) + y.at({1}) * wup.at({1});

  RatFunc pyy(0, vars);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) pyy += p.at({a, c}) * yup.at({a}) * yup.at({c});
  RatFunc ell = frac(5, 12, vars) * phi * phi + frac(3, 1, vars) * pyy -
                frac(1, 2, vars) * vector_dot_grad(yup, phi);

  return InvariantBundle{std::move(conn), std::move(p),    std::move(y),
                         std::move(yup),  std::move(phi),  std::move(wup),
                         std::move(w),    std::move(rho),  std::move(ell)};
}

enum class Branch { Flat, Generic, Special };

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Flat: return "flat";
    case Branch::Special: return "special";
    case Branch::Generic: return "generic";
  }
  return "unknown";
}

// Flat iff Y vanishes identically; among non-flat structures the symbolic
// identity rho = 0 selects the special branch. Generic results are valid off
// the vanishing locus of rho.
inline Branch branch(const InvariantBundle& b) {
  if (b.Y.is_zero()) return Branch::Flat;
  if (b.rho.is_zero()) return Branch::Special;
  return Branch::Generic;
}

}  // namespace projew::pipeline
