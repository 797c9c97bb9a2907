#pragma once

// Shared generators and independent oracles for the test suites. The
// oracles here deliberately reimplement functionality (cofactor-free
// permanent-style determinant, univariate Euclid) so they share no code
// with the library paths they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "projew/projew.hpp"

namespace testsupport {

using projew::exactmath::BigInt;
using projew::exactmath::BigRational;
using projew::exactmath::MPoly;
using projew::exactmath::RatFunc;
using projew::exactmath::SquareMatrix;
using projew::exactmath::UniPoly;
using projew::exactmath::VarNames;
using projew::geometry::ChartConnection;
using projew::geometry::TensorField;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  BigRational rational(long max_abs = 9, long max_den = 7) {
    return projew::exactmath::make_rational(uniform(-max_abs, max_abs),
                                            uniform(1, max_den));
  }

  BigRational nonzero_rational(long max_abs = 9, long max_den = 7) {
    for (;;) {
      BigRational r = rational(max_abs, max_den);
      if (sgn(r) != 0) return r;
    }
  }

  MPoly poly(int max_deg = 2, int terms = 3, VarNames vars = {}) {
    MPoly p(vars);
    for (int t = 0; t < terms; ++t) {
      int i = static_cast<int>(uniform(0, max_deg));
      int j = static_cast<int>(uniform(0, max_deg - i));
      MPoly mono = MPoly::variable(0, vars).pow(static_cast<unsigned>(i)) *
                   MPoly::variable(1, vars).pow(static_cast<unsigned>(j));
      p += mono * rational(5, 3);
    }
    return p;
  }

  MPoly nonzero_poly(int max_deg = 2, int terms = 3, VarNames vars = {}) {
    for (;;) {
      MPoly p = poly(max_deg, terms, vars);
      if (!p.is_zero()) return p;
    }
  }

  RatFunc ratfunc(int max_deg = 2, int terms = 2) {
    return RatFunc(poly(max_deg, terms), nonzero_poly(max_deg, terms));
  }

  TensorField covector(int max_deg = 2, int terms = 2, VarNames vars = {}) {
    TensorField t(0, 1, vars);
    t.at({0}) = RatFunc(poly(max_deg, terms, vars));
    t.at({1}) = RatFunc(poly(max_deg, terms, vars));
    return t;
  }

  // Random torsion-free connection with polynomial entries.
  ChartConnection connection(int max_deg = 2, int terms = 2,
                             VarNames vars = {}) {
    ChartConnection conn(vars);
    for (int c = 0; c < 2; ++c)
      for (int a = 0; a < 2; ++a)
        for (int b = a; b < 2; ++b)
          conn.set_pi(c, a, b, RatFunc(poly(max_deg, terms, vars)));
    return conn;
  }

  // Random epsilon-compatible (trace-free) connection.
  ChartConnection normalized_connection(int max_deg = 2, int terms = 2) {
    return projew::geometry::normalize_connection(connection(max_deg, terms));
  }

 private:
  std::mt19937_64 gen_;
};

// Independent determinant oracle: Leibniz sum over all permutations.
template <class T>
T leibniz_det(const SquareMatrix<T>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  T acc{};
  do {
    // sign of the permutation by counting inversions
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T prod = m.at(0, perm[0]);
    for (std::size_t i = 1; i < n; ++i) prod = prod * m.at(i, perm[i]);
    if (inversions % 2 == 0) {
      acc = acc + prod;
    } else {
      acc = acc - prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Independent univariate gcd over Q by the plain Euclidean algorithm.
// Polynomials are coefficient vectors, ascending; returns the (monic) gcd.
inline std::vector<BigRational> euclid_gcd(std::vector<BigRational> a,
                                           std::vector<BigRational> b) {
  auto trim = [](std::vector<BigRational>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      BigRational q = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] -= q * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  trim(a);
  if (!a.empty()) {
    BigRational lead = a.back();
    for (BigRational& c : a) c /= lead;
  }
  return a;
}

inline BigRational q(const std::string& text) {
  return projew::exactmath::rational_from_string(text);
}

inline RatFunc expr(const std::string& text, VarNames vars = {}) {
  return projew::exprparse::parse_expr(text, vars);
}

// Random syntactically valid expression source, for round-trip fuzzing.
inline std::string random_expr_source(Rng& rng, int depth = 3) {
  switch (depth <= 0 ? rng.uniform(0, 2) : rng.uniform(0, 6)) {
    case 0:
      return std::to_string(rng.uniform(0, 99));
    case 1:
      return "x";
    case 2:
      return "y";
    case 3:
      return "(" + random_expr_source(rng, depth - 1) + " + " +
             random_expr_source(rng, depth - 1) + ")";
    case 4:
      return "(" + random_expr_source(rng, depth - 1) + " - " +
             random_expr_source(rng, depth - 1) + ")";
    case 5:
      return random_expr_source(rng, depth - 1) + "*(" +
             random_expr_source(rng, depth - 1) + ")";
    default:
      return "-(" + random_expr_source(rng, depth - 1) + ")^" +
             std::to_string(rng.uniform(0, 3));
  }
}

}  // namespace testsupport
