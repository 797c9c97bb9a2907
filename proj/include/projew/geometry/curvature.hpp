#pragma once

#include <utility>
#include <vector>

#include "projew/errors.hpp"
#include "projew/exactmath/rational.hpp"
#include "projew/geometry/connection.hpp"
#include "projew/geometry/tensor.hpp"

namespace projew::geometry {

// Covariant derivative of an arbitrary tensor field; the result has valence
// (r, s+1) with the new covariant index first among the covariant slots:
//
//   (DT)^{u...}_{a l...} = d_a T^{u...}_{l...}
//                          + sum_k Pi^{u_k}_{a e} T^{...e...}_{l...}
//                          - sum_k Pi^{e}_{a l_k} T^{u...}_{...e...}
inline TensorField covariant_derivative(const TensorField& t,
                                        const ChartConnection& conn) {
  const int r = t.contravariant_rank();
  const int s = t.covariant_rank();
  TensorField out(r, s + 1, t.vars());
  std::vector<int> idx(static_cast<std::size_t>(r + s), 0);
  std::vector<int> out_idx(static_cast<std::size_t>(r + s + 1), 0);
  const std::size_t count = static_cast<std::size_t>(1) << (r + s);
  for (std::size_t flat = 0; flat < count; ++flat) {
    for (int k = 0; k < r + s; ++k)
      idx[static_cast<std::size_t>(k)] =
          static_cast<int>((flat >> (r + s - 1 - k)) & 1);
    for (int a = 0; a < 2; ++a) {
      // output layout: uppers, then a, then lowers
      for (int k = 0; k < r; ++k) out_idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k)];
      out_idx[static_cast<std::size_t>(r)] = a;
      for (int k = 0; k < s; ++k)
        out_idx[static_cast<std::size_t>(r + 1 + k)] = idx[static_cast<std::size_t>(r + k)];

      RatFunc val = t.at(idx).diff(a);
      std::vector<int> probe = idx;
      for (int k = 0; k < r; ++k) {
        const int uk = idx[static_cast<std::size_t>(k)];
        for (int e = 0; e < 2; ++e) {
          probe[static_cast<std::size_t>(k)] = e;
          val += conn.pi(uk, a, e) * t.at(probe);
        }
        probe[static_cast<std::size_t>(k)] = uk;
      }
      for (int k = 0; k < s; ++k) {
        const int lk = idx[static_cast<std::size_t>(r + k)];
        for (int e = 0; e < 2; ++e) {
          probe[static_cast<std::size_t>(r + k)] = e;
          val -= conn.pi(e, a, lk) * t.at(probe);
        }
        probe[static_cast<std::size_t>(r + k)] = lk;
      }
      out.at(out_idx) = std::move(val);
    }
  }
  return out;
}

// Curvature of the connection, valence (1,3) stored as at({c, a, b, d}) =
// R_ab^c_d with the convention (D_a D_b - D_b D_a) V^c = R_ab^c_d V^d:
//
//   R_ab^c_d = d_a Pi^c_bd - d_b Pi^c_ad + Pi^c_ae Pi^e_bd - Pi^c_be Pi^e_ad
inline TensorField curvature(const ChartConnection& conn) {
  TensorField curv(1, 3, conn.vars());
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) {
          RatFunc val = conn.pi(c, b, d).diff(a) - conn.pi(c, a, d).diff(b);
          for (int e = 0; e < 2; ++e)
            val += conn.pi(c, a, e) * conn.pi(e, b, d) -
                   conn.pi(c, b, e) * conn.pi(e, a, d);
          curv.at({c, a, b, d}) = std::move(val);
        }
  return curv;
}

// Ricci contraction R_ab = R_ca^c_b (upper slot against the first covariant
// slot).
inline TensorField ricci(const TensorField& curv) {
  if (curv.contravariant_rank() != 1 || curv.covariant_rank() != 3)
    throw DomainError("ricci expects a valence (1,3) curvature tensor");
  TensorField ric(0, 2, curv.vars());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      RatFunc acc(0, curv.vars());
      for (int c = 0; c < 2; ++c) acc += curv.at({c, c, a, b});
      ric.at({a, b}) = std::move(acc);
    }
  return ric;
}

// Projective rho tensor in 2 dimensions, P_ab = (2/3) R_ab + (1/3) R_ba.
// For an epsilon-compatible connection the result is symmetric; asymmetry
// signals an unnormalized input and is rejected.
inline TensorField rho_tensor(const TensorField& ric) {
  if (ric.contravariant_rank() != 0 || ric.covariant_rank() != 2)
    throw DomainError("rho_tensor expects a valence (0,2) tensor");
  const RatFunc two_thirds(exactmath::make_rational(2, 3), ric.vars());
  const RatFunc one_third(exactmath::make_rational(1, 3), ric.vars());
  TensorField p(0, 2, ric.vars());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      p.at({a, b}) = two_thirds * ric.at({a, b}) + one_third * ric.at({b, a});
  if (!(p.at({0, 1}) == p.at({1, 0})))
    throw DomainError(
        "projective rho tensor is not symmetric; the input connection is not "
        "epsilon-compatible");
  return p;
}

// Cotton-York pieces: Y_abc = D_a P_bc - D_b P_ac, dualized to the covector
// Y_a = eps^{bc} Y_bca and raised to Y^a = eps^{ab} Y_b. Returns (Y_a, Y^a).
inline std::pair<TensorField, TensorField> cotton_york(
    const TensorField& p, const ChartConnection& conn) {
  if (p.contravariant_rank() != 0 || p.covariant_rank() != 2)
    throw DomainError("cotton_york expects a valence (0,2) tensor");
  if (!(p.at({0, 1}) == p.at({1, 0})))
    throw DomainError("cotton_york expects a symmetric rho tensor");
  if (!conn.is_normalized())
    throw DomainError("cotton_york expects an epsilon-compatible connection");
  TensorField dp = covariant_derivative(p, conn);  // at({a,b,c}) = D_a P_bc
  TensorField y(0, 1, p.vars());
  for (int a = 0; a < 2; ++a) {
    RatFunc acc(0, p.vars());
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        if (kEps[b][c] == 0) continue;
        RatFunc ybca = dp.at({b, c, a}) - dp.at({c, b, a});
        acc += RatFunc(kEps[b][c], p.vars()) * ybca;
      }
    y.at({a}) = std::move(acc);
  }
  TensorField yup = raise_index(y);
  return {std::move(y), std::move(yup)};
}

}  // namespace projew::geometry
