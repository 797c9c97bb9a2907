#pragma once

#include <utility>

#include "projew/errors.hpp"
#include "projew/exactmath/rational.hpp"
#include "projew/exactmath/ratfunc.hpp"
#include "projew/pipeline/invariants.hpp"

namespace projew::pipeline {

// Coefficient list of the three polynomial constraints; T is RatFunc for
// symbolic work and BigRational after point evaluation.
template <class T>
struct Coeffs9 {
  T a1, a2, a3, b1, b2, b3, c1, c2, c3;
};

using GenericCoeffs = Coeffs9<RatFunc>;

inline Coeffs9<BigRational> eval_at(const GenericCoeffs& c,
                                    const BigRational& px,
                                    const BigRational& py) {
  return {c.a1.eval(px, py), c.a2.eval(px, py), c.a3.eval(px, py),
          c.b1.eval(px, py), c.b2.eval(px, py), c.b3.eval(px, py),
          c.c1.eval(px, py), c.c2.eval(px, py), c.c3.eval(px, py)};
}

// The nine invariant coefficients of the generic branch (rho not identically
// zero). All denominators divide a power of rho.
inline GenericCoeffs generic_coeffs(const InvariantBundle& b,
                                    const ChartConnection& connection) {
  if (b.rho.is_zero())
    throw DomainError("generic_coeffs requires rho not identically zero");
  const ChartConnection conn = geometry::normalize_connection(connection);
  const VarNames& vars = conn.vars();

  const TensorField dyup = geometry::covariant_derivative(b.Yup, conn);
  const TensorField dwup = geometry::covariant_derivative(b.Wup, conn);
  const TensorField dy = geometry::covariant_derivative(b.Y, conn);
  const TensorField dw = geometry::covariant_derivative(b.W, conn);

  const RatFunc div_w = dwup.at({0, 0}) + dwup.at({1, 1});
  const RatFunc y_drho = vector_dot_grad(b.Yup, b.rho);
  const RatFunc w_drho = vector_dot_grad(b.Wup, b.rho);
  const RatFunc y_dphi = vector_dot_grad(b.Yup, b.phi);
  const RatFunc w_dphi = vector_dot_grad(b.Wup, b.phi);
  const RatFunc y_dell = vector_dot_grad(b.Yup, b.ell);
  const RatFunc w_dell = vector_dot_grad(b.Wup, b.ell);

  // contractions u^e v^d (D_e t_d) for the needed (u, v, t) combinations
  auto contract2 = [](const TensorField& u, const TensorField& v,
                      const TensorField& dt) {
    RatFunc acc(0, u.vars());
    for (int e = 0; e < 2; ++e)
      for (int d = 0; d < 2; ++d) acc += u.at({e}) * v.at({d}) * dt.at({e, d});
    return acc;
  };
  const RatFunc we_yd_DeWd = contract2(b.Wup, b.Yup, dw);  // W^e Y^d D_e W_d
  const RatFunc we_wa_DeWa = contract2(b.Wup, b.Wup, dw);  // W^e W^a D_e W_a
  const RatFunc we_ya_DeYa = contract2(b.Wup, b.Yup, dy);  // W^e Y^a D_e Y_a
  const RatFunc we_wd_DeYd = contract2(b.Wup, b.Wup, dy);  // W^e W^d D_e Y_d
  const RatFunc ya_ye_DaWe = contract2(b.Yup, b.Yup, dw);  // Y^a Y^e D_a W_e
  const RatFunc ya_we_DaWe = contract2(b.Yup, b.Wup, dw);  // Y^a W^e D_a W_e
  const RatFunc we_yd_DdWe = ya_we_DaWe;                   // relabeled

  RatFunc pww(0, vars), pwy(0, vars);
  for (int a = 0; a < 2; ++a)
    for (int e = 0; e < 2; ++e) {
      pww += b.P.at({e, a}) * b.Wup.at({e}) * b.Wup.at({a});
      pwy += b.P.at({a, e}) * b.Wup.at({e}) * b.Yup.at({a});
    }

  const RatFunc& rho = b.rho;
  const RatFunc& phi = b.phi;
  const RatFunc& ell = b.ell;

  Coeffs9<RatFunc> k;
  k.a1 = frac(15, 1, vars) * (y_drho / rho - frac(5, 2, vars) * phi);
  k.a2 = -(frac(3, 1, vars) * w_drho / rho + frac(6, 1, vars) * ell -
           frac(3, 1, vars) * div_w);
  k.a3 = w_dphi / frac(2, 1, vars) + phi * div_w / frac(2, 1, vars) + y_dell +
         phi * ell / frac(2, 1, vars) -
         phi * w_drho / (frac(2, 1, vars) * rho) - ell * y_drho / rho;
  k.b1 = frac(-5, 1, vars) * we_yd_DeWd / rho + frac(50, 3, vars) * ell;
  k.b2 = we_wa_DeWa / rho;
  k.b3 = phi * we_wa_DeWa / (frac(6, 1, vars) * rho) + pww +
         ell * ell / frac(9, 1, vars) +
         ell * we_yd_DeWd / (frac(3, 1, vars) * rho) + w_dell / frac(3, 1, vars);
  k.c1 = frac(-5, 2, vars) * (we_ya_DeYa + ya_ye_DaWe) / rho -
         frac(25, 6, vars) * phi;
  k.c2 = frac(2, 3, vars) * ell +
         (we_wd_DeYd + we_yd_DdWe) / (frac(2, 1, vars) * rho);
  k.c3 = -w_dphi / frac(12, 1, vars) +
         phi * we_wd_DeYd / (frac(12, 1, vars) * rho) +
         ell * we_ya_DeYa / (frac(6, 1, vars) * rho) + pwy +
         y_dell / frac(6, 1, vars) +
         phi * ya_we_DaWe / (frac(12, 1, vars) * rho) -
         ell * phi / frac(18, 1, vars) +
         ell * ya_ye_DaWe / (frac(6, 1, vars) * rho);
  return k;
}

// rho = 0 branch: W^a = f Y^a everywhere, and the single obstruction is
// built from f, h = ell + f phi / 2, and the derived quantities k, m.
struct SpecialBranch {
  RatFunc f;
  RatFunc h;
  RatFunc k;
  RatFunc m;
  RatFunc obstruction;
};

inline SpecialBranch special_branch(const InvariantBundle& b,
                                    const ChartConnection& connection) {
  if (b.Y.is_zero())
    throw DomainError("special_branch requires Y not identically zero");
  // redundant with rho = Y_a W^a = 0, but catches transcription bugs
  if (!(b.Yup.at({0}) * b.Wup.at({1}) - b.Yup.at({1}) * b.Wup.at({0}))
           .is_zero())
    throw DomainError(
        "internal consistency failure: W is not proportional to Y although "
        "rho = 0");
  if (!(geometry::normalize_connection(connection) == b.conn))
    throw DomainError(
        "special_branch: connection does not match the bundle's normalized "
        "representative");
  const VarNames& vars = b.conn.vars();

  SpecialBranch s;
  s.f = b.Yup.at({0}).is_zero() ? b.Wup.at({1}) / b.Yup.at({1})
                                : b.Wup.at({0}) / b.Yup.at({0});
  s.h = b.ell + s.f * b.phi / frac(2, 1, vars);
  const RatFunc y_df = vector_dot_grad(b.Yup, s.f);
  const RatFunc y_dh = vector_dot_grad(b.Yup, s.h);
  s.k = frac(3, 1, vars) * b.phi * s.f - frac(3, 1, vars) * y_df +
        frac(12, 1, vars) * s.h + frac(18, 5, vars) * s.f * s.f;
  s.m = frac(6, 5, vars) * s.h * s.f - y_dh + frac(2, 1, vars) * b.phi * s.h;
  const RatFunc y_dm = vector_dot_grad(b.Yup, s.m);
  const RatFunc y_dk = vector_dot_grad(b.Yup, s.k);
  s.obstruction =
      s.k * y_dm - s.m * (y_dk + s.k * b.phi - frac(6, 1, vars) * s.m);
  return s;
}

// Solves the two linear constraints for alpha when rho does not vanish:
//
//   alpha_a = (phi/2 + 3 F^2) W_a / (3 rho) - (15 F^4 - ell) Y_a / (3 rho)
inline TensorField reconstruct_alpha(const InvariantBundle& b,
                                     const RatFunc& f_cand) {
  if (b.rho.is_zero())
    throw DomainError("reconstruct_alpha requires rho not identically zero");
  const VarNames& vars = b.conn.vars();
  const RatFunc f2 = f_cand * f_cand;
  const RatFunc f4 = f2 * f2;
  const RatFunc inv3rho = RatFunc(1, vars) / (frac(3, 1, vars) * b.rho);
  const RatFunc cw = (b.phi / frac(2, 1, vars) + frac(3, 1, vars) * f2) * inv3rho;
  const RatFunc cy = (frac(15, 1, vars) * f4 - b.ell) * inv3rho;
  TensorField alpha(0, 1, vars);
  for (int a = 0; a < 2; ++a)
    alpha.at({a}) = cw * b.W.at({a}) - cy * b.Y.at({a});
  return alpha;
}

// Residual of the pEW equation for the connection exactly as given:
// D_(a alpha_b) + alpha_a alpha_b + P_(ab). Zero iff alpha solves the
// equation for this representative.
inline TensorField pew_residual(const ChartConnection& conn,
                                const TensorField& alpha) {
  if (alpha.contravariant_rank() != 0 || alpha.covariant_rank() != 1)
    throw DomainError("pew_residual expects a covector field");
  const VarNames& vars = conn.vars();
  const TensorField da = geometry::covariant_derivative(alpha, conn);
  const TensorField ric = geometry::ricci(geometry::curvature(conn));
  const RatFunc half = frac(1, 2, vars);
  TensorField res(0, 2, vars);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      // P_(ac) equals the symmetrized Ricci for any torsion-free connection
      res.at({a, c}) = half * (da.at({a, c}) + da.at({c, a})) +
                       alpha.at({a}) * alpha.at({c}) +
                       half * (ric.at({a, c}) + ric.at({c, a}));
  return res;
}

}  // namespace projew::pipeline
