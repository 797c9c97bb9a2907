#pragma once

#include <cstddef>
#include <vector>

#include "projew/exactmath/linalg.hpp"
#include "projew/exactmath/unipoly.hpp"
#include "projew/pipeline/branches.hpp"

namespace projew::obstruction {

using exactmath::BigRational;
using exactmath::RatFunc;
using exactmath::SquareMatrix;
using exactmath::UniPoly;
using pipeline::Coeffs9;

template <class T>
struct PTripleOf {
  UniPoly<T> P1, P2, P3;  // degrees 6, 8, 6 in t
};

template <class T>
struct QTripleOf {
  UniPoly<T> Q1, Q2, Q3;  // degrees 4, 3, 4 in X = t^2
};

template <class T>
struct ResultantTripleOf {
  T Q12, Q23, Q13;
};

using PTriple = PTripleOf<RatFunc>;
using QTriple = QTripleOf<RatFunc>;
using ResultantTriple = ResultantTripleOf<RatFunc>;

namespace detail {

template <class T>
T rat(long num, long den = 1) {
  return T(exactmath::make_rational(num, den));
}

inline BigRational det_dispatch(const SquareMatrix<BigRational>& m,
                                std::size_t /*max_terms*/) {
  return exactmath::det_exact(m);
}
inline RatFunc det_dispatch(const SquareMatrix<RatFunc>& m,
                            std::size_t max_terms) {
  return exactmath::det_exact(m, max_terms);
}

// Fills `rows` shifted copies of a coefficient row into a width-n band,
// starting at `first_row`.
template <class T>
void fill_band(SquareMatrix<T>& m, std::size_t first_row, std::size_t rows,
               const std::vector<T>& coeffs) {
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      m.at(first_row + r, r + j) = coeffs[j];
}

}  // namespace detail

//   P1(t) = -90 t^6 + a1 t^4 + a2 t^2 - 9 rho t + a3
//   P2(t) = -275 t^8 + b1 t^4 + 20 rho t^3 + b2 t^2 + b3
//   P3(t) = -40 t^6 + c1 t^4 + c2 t^2 + rho t + c3
template <class T>
PTripleOf<T> p_polynomials(const Coeffs9<T>& k, const T& rho) {
  using detail::rat;
  PTripleOf<T> p;
  p.P1 = UniPoly<T>({k.a3, rat<T>(-9) * rho, k.a2, T{}, k.a1, T{}, rat<T>(-90)});
  p.P2 = UniPoly<T>({k.b3, T{}, k.b2, rat<T>(20) * rho, k.b1, T{}, T{}, T{},
                     rat<T>(-275)});
  p.P3 = UniPoly<T>({k.c3, rho, k.c2, T{}, k.c1, T{}, rat<T>(-40)});
  return p;
}

// Even-part combinations eliminating the odd terms:
//
//   Q1(X) = 525 X^4 - 20 c1 X^3 + (b1 - 20 c2) X^2 + (b2 - 20 c3) X + b3
//   Q2(X) = 450 X^3 - (9 c1 + a1) X^2 - (9 c2 + a2) X - (9 c3 + a3)
//   Q3(X) = 475 X^4 - 20/9 a1 X^3 - (20/9 a2 + b1) X^2 - (20/9 a3 + b2) X - b3
//
// so that Q1(t^2) = -20 t^2 P3 + P2, Q2(t^2) = -9 P3 - P1 and
// Q3(t^2) = -20/9 t^2 P1 - P2 hold identically.
template <class T>
QTripleOf<T> q_polynomials(const Coeffs9<T>& k) {
  using detail::rat;
  const T twenty = rat<T>(20);
  const T nine = rat<T>(9);
  const T t209 = rat<T>(20, 9);
  QTripleOf<T> q;
  q.Q1 = UniPoly<T>({k.b3, k.b2 - twenty * k.c3, k.b1 - twenty * k.c2,
                     T{} - twenty * k.c1, rat<T>(525)});
  q.Q2 = UniPoly<T>({T{} - (nine * k.c3 + k.a3), T{} - (nine * k.c2 + k.a2),
                     T{} - (nine * k.c1 + k.a1), rat<T>(450)});
  q.Q3 = UniPoly<T>({T{} - k.b3, T{} - (t209 * k.a3 + k.b2),
                     T{} - (t209 * k.a2 + k.b1), T{} - t209 * k.a1,
                     rat<T>(475)});
  return q;
}

// The three obstruction matrices with the fixed row layout: Q12 is 7x7 with
// three shifted rows of Q1's coefficients over four of Q2's; Q23 is 7x7 with
// four rows of Q2 over three of Q3; Q13 is 8x8 with four rows of Q1 over
// four of Q3.
template <class T>
SquareMatrix<T> obstruction_matrix_q12(const QTripleOf<T>& q) {
  SquareMatrix<T> m(7);
  detail::fill_band(m, 0, 3, q.Q1.descending());
  detail::fill_band(m, 3, 4, q.Q2.descending());
  return m;
}

template <class T>
SquareMatrix<T> obstruction_matrix_q23(const QTripleOf<T>& q) {
  SquareMatrix<T> m(7);
  detail::fill_band(m, 0, 4, q.Q2.descending());
  detail::fill_band(m, 4, 3, q.Q3.descending());
  return m;
}

template <class T>
SquareMatrix<T> obstruction_matrix_q13(const QTripleOf<T>& q) {
  SquareMatrix<T> m(8);
  detail::fill_band(m, 0, 4, q.Q1.descending());
  detail::fill_band(m, 4, 4, q.Q3.descending());
  return m;
}

template <class T>
ResultantTripleOf<T> q_resultants(const QTripleOf<T>& q,
                                  std::size_t max_terms = 0) {
  return {detail::det_dispatch(obstruction_matrix_q12(q), max_terms),
          detail::det_dispatch(obstruction_matrix_q23(q), max_terms),
          detail::det_dispatch(obstruction_matrix_q13(q), max_terms)};
}

}  // namespace projew::obstruction
