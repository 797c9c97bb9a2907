#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "projew/errors.hpp"
#include "projew/exactmath/mpoly.hpp"
#include "projew/exactmath/ratfunc.hpp"
#include "projew/exactmath/unipoly.hpp"

namespace projew::exactmath {

template <class T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, T{}) {}

  std::size_t size() const { return n_; }
  T& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<T> a_;
};

// Cofactor expansion along the first row. Exponential; serves as the
// structural-zero-pivot fallback and stays practical for the 7x7/8x8
// resultant matrices.
template <class T>
T det_cofactor(const SquareMatrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  if (n == 1) return m.at(0, 0);
  T acc{};
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m.at(0, j))) continue;
    SquareMatrix<T> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, jj++) = m.at(i, k);
      }
    }
    T term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0) {
      acc = acc + term;
    } else {
      acc = acc - term;
    }
  }
  return acc;
}

namespace detail {

// Fraction-free Bareiss elimination over an exact ring; `divide` must
// perform the (guaranteed exact) division by the previous pivot. Falls back
// to cofactor expansion if a column has no usable pivot.
template <class T, class Divide, class Guard>
T det_bareiss(SquareMatrix<T> m, Divide divide, Guard guard) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  bool negate = false;
  T prev{};  // previous pivot; the k = 0 step divides by 1 and skips it
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m.at(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(m.at(pivot, k))) ++pivot;
      if (pivot == n) return det_cofactor(m);  // structurally singular column
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m.at(k, j), m.at(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        if (k == 0) {
          m.at(i, j) = std::move(num);
        } else {
          m.at(i, j) = divide(std::move(num), prev);
        }
        guard(m.at(i, j));
      }
      m.at(i, k) = T{};
    }
    prev = m.at(k, k);
  }
  T det = m.at(n - 1, n - 1);
  if (negate) det = T{} - det;
  return det;
}

inline void check_budget(const MPoly& p, std::size_t max_terms) {
  if (max_terms != 0 && p.term_count() > max_terms)
    throw BudgetError(p.term_count(), max_terms);
}

}  // namespace detail

// Exact determinant of a rational matrix (the point-evaluated case).
inline BigRational det_exact(const SquareMatrix<BigRational>& m) {
  return detail::det_bareiss(
      m, [](BigRational n, const BigRational& d) { return n / d; },
      [](const BigRational&) {});
}

// Exact determinant over Q(x, y). Denominators are cleared row by row so
// the elimination runs fraction-free over polynomials; `max_terms` (0 =
// unlimited) bounds intermediate symbolic growth.
inline RatFunc det_exact(const SquareMatrix<RatFunc>& m,
                         std::size_t max_terms = 0) {
  const std::size_t n = m.size();
  SquareMatrix<MPoly> cleared(n);
  std::vector<MPoly> row_dens;
  row_dens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly row_den = MPoly::constant(1);
    for (std::size_t j = 0; j < n; ++j)
      row_den = MPoly::lcm(row_den, m.at(i, j).den());
    for (std::size_t j = 0; j < n; ++j) {
      const RatFunc& e = m.at(i, j);
      cleared.at(i, j) = e.num() * row_den.divided_exactly_by(e.den());
      detail::check_budget(cleared.at(i, j), max_terms);
    }
    row_dens.push_back(std::move(row_den));
  }
  MPoly det = detail::det_bareiss(
      std::move(cleared),
      [](MPoly num, const MPoly& d) { return num.divided_exactly_by(d); },
      [max_terms](const MPoly& p) { detail::check_budget(p, max_terms); });
  // Reduce against one row denominator at a time; each gcd then involves one
  // small polynomial instead of the full product.
  MPoly reduced_den = MPoly::constant(1);
  for (MPoly& d : row_dens) {
    MPoly g = MPoly::gcd(det, d);
    if (g.degree() > 0) {
      det = det.divided_exactly_by(g);
      d = d.divided_exactly_by(g);
    }
    reduced_den = reduced_den * d;
  }
  BigRational c = reduced_den.content();
  if (c != 1 && !reduced_den.is_zero()) {
    reduced_den *= 1 / c;
    det *= 1 / c;
  }
  return RatFunc::from_canonical_parts(std::move(det), std::move(reduced_den));
}

// Standard Sylvester matrix of P (degree m) and Q (degree n): the first n
// rows carry shifted copies of P's coefficients, the last m rows shifted
// copies of Q's.
template <class T>
SquareMatrix<T> sylvester_matrix(const UniPoly<T>& p, const UniPoly<T>& q) {
  const int dp = p.degree();
  const int dq = q.degree();
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  SquareMatrix<T> m(n);
  const std::vector<T> pc = p.descending();
  const std::vector<T> qc = q.descending();
  for (int r = 0; r < dq; ++r)
    for (std::size_t j = 0; j < pc.size(); ++j)
      m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r) + j) =
          pc[j];
  for (int r = 0; r < dp; ++r)
    for (std::size_t j = 0; j < qc.size(); ++j)
      m.at(static_cast<std::size_t>(dq + r), static_cast<std::size_t>(r) + j) =
          qc[j];
  return m;
}

// Resultant as the Sylvester determinant. For degree-0 inputs the usual
// convention Res(c, Q) = c^deg(Q) applies.
template <class T>
T sylvester_resultant(const UniPoly<T>& p, const UniPoly<T>& q) {
  if (p.is_zero() || q.is_zero())
    throw DomainError("resultant of the zero polynomial");
  if (p.degree() == 0) {
    T acc{1};
    for (int i = 0; i < q.degree(); ++i) acc = acc * p.coeff(0);
    return acc;
  }
  if (q.degree() == 0) {
    T acc{1};
    for (int i = 0; i < p.degree(); ++i) acc = acc * q.coeff(0);
    return acc;
  }
  return det_exact(sylvester_matrix(p, q));
}

}  // namespace projew::exactmath
