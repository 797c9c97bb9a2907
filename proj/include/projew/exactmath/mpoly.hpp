#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projew/errors.hpp"
#include "projew/exactmath/rational.hpp"

namespace projew::exactmath {

// The two chart variable names. Constant polynomials are variable-agnostic,
// so arithmetic only requires matching names between two non-constant
// operands.
struct VarNames {
  std::string first = "x";
  std::string second = "y";

  friend bool operator==(const VarNames&, const VarNames&) = default;
};

struct Monomial {
  unsigned ex = 0;
  unsigned ey = 0;

  unsigned total() const { return ex + ey; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order with x ranked above y, descending, so that a
// map's first entry is the leading term.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.ex > b.ex;
  }
};

// Sparse polynomial in the two chart variables over BigRational. Canonical
// form: no zero coefficients stored, terms ordered graded-lex.
class MPoly {
 public:
  using TermMap = std::map<Monomial, BigRational, GrlexDescending>;

  MPoly() = default;
  explicit MPoly(VarNames vars) : vars_(std::move(vars)) {}

  static MPoly constant(BigRational c, VarNames vars = {}) {
    MPoly p(std::move(vars));
    p.add_term({0, 0}, std::move(c));
    return p;
  }
  static MPoly constant(long c, VarNames vars = {}) {
    return constant(BigRational(c), std::move(vars));
  }
  static MPoly variable(int axis, VarNames vars = {}) {
    check_axis(axis);
    MPoly p(std::move(vars));
    p.add_term({axis == 0 ? 1u : 0u, axis == 0 ? 0u : 1u}, BigRational(1));
    return p;
  }

  const VarNames& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
  }
  BigRational constant_value() const {
    if (is_zero()) return BigRational(0);
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.begin()->second;
  }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    return is_zero() ? -1 : static_cast<int>(terms_.begin()->first.total());
  }
  int degree_in(int axis) const {
    check_axis(axis);
    int d = -1;
    for (const auto& [m, c] : terms_)
      d = std::max(d, static_cast<int>(axis == 0 ? m.ex : m.ey));
    return d;
  }

  Monomial leading_monomial() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading term");
    return terms_.begin()->first;
  }
  const BigRational& leading_coeff() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading term");
    return terms_.begin()->second;
  }

  int axis_of(std::string_view var) const {
    if (var == vars_.first) return 0;
    if (var == vars_.second) return 1;
    throw DomainError("unknown variable '" + std::string(var) + "'");
  }

  MPoly& operator+=(const MPoly& o) {
    if (this == &o) return *this *= BigRational(2);
    adopt_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    if (this == &o) {
      terms_.clear();
      return *this;
    }
    adopt_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MPoly& operator*=(const BigRational& s) {
    if (exactmath::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) {
    MPoly r(a.vars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(merged_vars(a, b));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term({ma.ex + mb.ex, ma.ey + mb.ey}, ca * cb);
    return r;
  }
  friend MPoly operator*(MPoly a, const BigRational& s) { return a *= s; }
  friend MPoly operator*(const BigRational& s, MPoly a) { return a *= s; }

  MPoly pow(unsigned e) const {
    MPoly r = constant(1, vars_);
    MPoly base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1u) r = r * base;
      if (e > 1) base = base * base;
    }
    return r;
  }

  // Formal partial derivative along axis 0 (first variable) or 1.
  MPoly diff(int axis) const {
    check_axis(axis);
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
      unsigned e = axis == 0 ? m.ex : m.ey;
      if (e == 0) continue;
      Monomial n = axis == 0 ? Monomial{m.ex - 1, m.ey}
                             : Monomial{m.ex, m.ey - 1};
      r.add_term(n, c * BigRational(static_cast<long>(e)));
    }
    return r;
  }
  MPoly diff(std::string_view var) const { return diff(axis_of(var)); }

  BigRational eval(const BigRational& px, const BigRational& py) const {
    BigRational acc(0);
    // powers computed incrementally per term batch; degrees stay small
    for (const auto& [m, c] : terms_)
      acc += c * pow_rat(px, m.ex) * pow_rat(py, m.ey);
    return acc;
  }

  // Writes *this = content() * primitive_part(), where the primitive part
  // has coprime integer coefficients and positive leading coefficient, and
  // the (signed) content absorbs the rest. content(0) = 0.
  BigRational content() const {
    if (is_zero()) return BigRational(0);
    BigInt den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : terms_)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              c.get_den().get_mpz_t());
    for (const auto& [m, c] : terms_) {
      BigInt scaled = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              scaled.get_mpz_t());
    }
    BigRational content = make_rational(num_gcd, den_lcm);
    if (sgn(leading_coeff()) < 0) content = -content;
    return content;
  }
  MPoly primitive_part() const {
    if (is_zero()) return *this;
    BigRational inv = 1 / content();
    MPoly r = *this;
    r *= inv;
    return r;
  }

  // Exact polynomial division; throws DomainError when the division leaves
  // a remainder.
  MPoly divided_exactly_by(const MPoly& d) const {
    if (d.is_zero()) throw DivideByZeroError("polynomial division by zero");
    MPoly q(merged_vars(*this, d));
    MPoly r = *this;
    const Monomial dm = d.leading_monomial();
    const BigRational& dc = d.leading_coeff();
    while (!r.is_zero()) {
      const Monomial rm = r.leading_monomial();
      if (rm.ex < dm.ex || rm.ey < dm.ey)
        throw DomainError("polynomial division is not exact");
      Monomial qm{rm.ex - dm.ex, rm.ey - dm.ey};
      BigRational qc = r.leading_coeff() / dc;
      q.add_term(qm, qc);
      r -= shifted_scaled(d, qm, qc);
    }
    return q;
  }

  // GCD over Q[x,y], content-free: the result is primitive with positive
  // leading coefficient (so gcd of nonzero constants is 1), computed with a
  // primitive-part pseudo-remainder sequence. gcd(0, p) = normalized p.
  static MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) return MPoly(merged_vars(a, b));
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    return gcd_primitive(a.primitive_part(), b.primitive_part());
  }

  static MPoly lcm(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly(merged_vars(a, b));
    return (a * b).divided_exactly_by(gcd(a, b)).primitive_part();
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      BigRational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) out << '-';
        first = false;
      } else {
        out << (sgn(c) < 0 ? " - " : " + ");
      }
      bool need_coeff = (mag != 1) || (m == Monomial{0, 0});
      bool need_star = false;
      if (need_coeff) {
        out << mag.get_str();
        need_star = true;
      }
      append_power(out, vars_.first, m.ex, need_star);
      append_power(out, vars_.second, m.ey, need_star);
    }
    return out.str();
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  static void check_axis(int axis) {
    if (axis != 0 && axis != 1) throw DomainError("variable axis must be 0 or 1");
  }

  static void append_power(std::ostringstream& out, const std::string& name,
                           unsigned e, bool& need_star) {
    if (e == 0) return;
    if (need_star) out << '*';
    out << name;
    if (e > 1) out << '^' << e;
    need_star = true;
  }

  static BigRational pow_rat(const BigRational& base, unsigned e) {
    BigRational r(1);
    BigRational b = base;
    for (; e > 0; e >>= 1) {
      if (e & 1u) r *= b;
      if (e > 1) b *= b;
    }
    return r;
  }

  static MPoly shifted_scaled(const MPoly& p, Monomial shift,
                              const BigRational& scale) {
    MPoly r(p.vars_);
    for (const auto& [m, c] : p.terms_)
      r.terms_.emplace(Monomial{m.ex + shift.ex, m.ey + shift.ey}, c * scale);
    return r;
  }

  static VarNames merged_vars(const MPoly& a, const MPoly& b) {
    if (a.is_constant()) return b.vars_;
    if (b.is_constant()) return a.vars_;
    if (!(a.vars_ == b.vars_))
      throw DomainError("mixed variable sets: (" + a.vars_.first + "," +
                        a.vars_.second + ") vs (" + b.vars_.first + "," +
                        b.vars_.second + ")");
    return a.vars_;
  }

  void adopt_vars(const MPoly& o) { vars_ = merged_vars(*this, o); }

  void add_term(Monomial m, BigRational c) {
    if (exactmath::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (exactmath::is_zero(it->second)) terms_.erase(it);
    }
  }

  // --- gcd machinery -------------------------------------------------

  // Coefficient of v^k when *this is read as a polynomial in axis v; the
  // result only involves the other variable.
  MPoly coeff_in(int v, unsigned k) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
      unsigned e = v == 0 ? m.ex : m.ey;
      if (e != k) continue;
      r.add_term(v == 0 ? Monomial{0, m.ey} : Monomial{m.ex, 0}, c);
    }
    return r;
  }

  MPoly times_axis_power(int v, unsigned k) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_)
      r.terms_.emplace(
          v == 0 ? Monomial{m.ex + k, m.ey} : Monomial{m.ex, m.ey + k}, c);
    return r;
  }

  // Content with respect to axis v: gcd of the coefficient polynomials.
  MPoly content_in(int v) const {
    MPoly g(vars_);
    for (int k = 0; k <= degree_in(v); ++k) {
      MPoly c = coeff_in(v, static_cast<unsigned>(k));
      if (!c.is_zero()) g = gcd(g, c);
      if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
  }

  // Pseudo-remainder of a by b in axis v, up to a factor lc(b)^k that the
  // caller strips by taking primitive parts.
  static MPoly pseudo_rem(MPoly a, const MPoly& b, int v) {
    const int db = b.degree_in(v);
    const MPoly lb = b.coeff_in(v, static_cast<unsigned>(db));
    while (!a.is_zero() && a.degree_in(v) >= db) {
      const int da = a.degree_in(v);
      MPoly la = a.coeff_in(v, static_cast<unsigned>(da));
      a = lb * a - (la * b).times_axis_power(v, static_cast<unsigned>(da - db));
    }
    return a;
  }

  // Primitive part with respect to axis v: strips the gcd of the coefficient
  // polynomials, then normalizes the integer content and sign.
  static MPoly primitive_in(const MPoly& p, int v) {
    if (p.is_zero()) return p;
    return p.divided_exactly_by(p.content_in(v)).primitive_part();
  }

  // Both arguments integer-primitive and nonzero.
  static MPoly gcd_primitive(const MPoly& a, const MPoly& b) {
    if (a.is_constant() || b.is_constant())
      return constant(1, merged_vars(a, b));
    const int v = (a.degree_in(1) > 0 || b.degree_in(1) > 0) ? 1 : 0;
    MPoly ca = a.content_in(v);
    MPoly cb = b.content_in(v);
    MPoly cont_gcd = gcd(ca, cb);
    MPoly pa = a.divided_exactly_by(ca).primitive_part();
    MPoly pb = b.divided_exactly_by(cb).primitive_part();
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
      MPoly r = pseudo_rem(pa, pb, v);
      pa = std::move(pb);
      pb = primitive_in(r, v);
    }
    return (cont_gcd * pa).primitive_part();
  }

  VarNames vars_{};
  TermMap terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

}  // namespace projew::exactmath
