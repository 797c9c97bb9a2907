#pragma once

#include <json.hpp>

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "projew/obstruction/resultants.hpp"
#include "projew/pipeline/branches.hpp"
#include "projew/pipeline/invariants.hpp"

namespace projew::obstruction {

using exactmath::VarNames;
using pipeline::Branch;
using pipeline::InvariantBundle;

inline constexpr std::size_t kDefaultMaxTerms = 100000;

struct GenericPayload {
  std::array<std::pair<std::string, std::string>, 9> coefficients;
  std::array<std::vector<std::string>, 3> p_coeffs;  // descending
  std::array<std::vector<std::string>, 3> q_coeffs;  // descending
  std::array<std::string, 3> p_display;              // P1(t), P2(t), P3(t)
  std::array<std::string, 3> q_display;              // Q1(X), Q2(X), Q3(X)
  bool determinants_computed = false;
  std::string Q12, Q23, Q13;
  bool any_det_nonzero = false;
};

struct SpecialPayload {
  std::string f, h, k, m;
  std::string quartic;    // 15 F^4 - 3 f F^2 - h = 0, diagnostic
  std::string quadratic;  // k F^2 + m = 0, diagnostic
  std::string obstruction;
  std::optional<std::string> obstruction_at_point;
  bool obstruction_nonzero = false;
};

struct ObstructionReport {
  std::string name;
  VarNames vars;
  Branch branch = Branch::Flat;
  std::string rho, phi, ell;
  std::array<std::string, 2> Y, W;
  std::optional<std::array<std::string, 2>> point;
  std::optional<GenericPayload> generic;
  std::optional<SpecialPayload> special;
  std::string note;
  std::string verdict;

  std::string to_text() const {
    std::ostringstream out;
    out << "structure: " << (name.empty() ? "(unnamed)" : name) << "\n";
    out << "variables: " << vars.first << " " << vars.second << "\n";
    out << "branch: " << pipeline::branch_name(branch) << "\n";
    if (point)
      out << "point: (" << (*point)[0] << ", " << (*point)[1] << ")\n";
    out << "rho = " << rho << "\n";
    out << "phi = " << phi << "\n";
    out << "ell = " << ell << "\n";
    out << "Y = (" << Y[0] << ", " << Y[1] << ")\n";
    out << "W = (" << W[0] << ", " << W[1] << ")\n";
    if (generic) {
      out << "coefficients:\n";
      for (const auto& [key, value] : generic->coefficients)
        out << "  " << key << " = " << value << "\n";
      for (int i = 0; i < 3; ++i)
        out << "P" << i + 1 << "(t) = " << generic->p_display[static_cast<std::size_t>(i)] << "\n";
      for (int i = 0; i < 3; ++i)
        out << "Q" << i + 1 << "(X) = " << generic->q_display[static_cast<std::size_t>(i)] << "\n";
      if (generic->determinants_computed) {
        out << "Q12 = " << generic->Q12 << "\n";
        out << "Q23 = " << generic->Q23 << "\n";
        out << "Q13 = " << generic->Q13 << "\n";
      }
    }
    if (special) {
      out << "f = " << special->f << "\n";
      out << "h = " << special->h << "\n";
      out << "k = " << special->k << "\n";
      out << "m = " << special->m << "\n";
      out << "constraint (quartic in F): " << special->quartic << " = 0\n";
      out << "constraint (quadratic in F): " << special->quadratic << " = 0\n";
      out << "obstruction = " << special->obstruction << "\n";
      if (special->obstruction_at_point)
        out << "obstruction at point = " << *special->obstruction_at_point
            << "\n";
    }
    if (!note.empty()) out << "note: " << note << "\n";
    if (!verdict.empty()) out << "verdict: " << verdict << "\n";
    return out.str();
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["variables"] = {vars.first, vars.second};
    j["branch"] = pipeline::branch_name(branch);
    if (point) j["point"] = {(*point)[0], (*point)[1]};
    j["invariants"] = {{"rho", rho},
                       {"phi", phi},
                       {"ell", ell},
                       {"Y", {Y[0], Y[1]}},
                       {"W", {W[0], W[1]}}};
    if (generic) {
      nlohmann::ordered_json g;
      nlohmann::ordered_json coeffs;
      for (const auto& [key, value] : generic->coefficients)
        coeffs[key] = value;
      g["coefficients"] = std::move(coeffs);
      g["P1"] = generic->p_coeffs[0];
      g["P2"] = generic->p_coeffs[1];
      g["P3"] = generic->p_coeffs[2];
      g["Q1"] = generic->q_coeffs[0];
      g["Q2"] = generic->q_coeffs[1];
      g["Q3"] = generic->q_coeffs[2];
      if (generic->determinants_computed)
        g["determinants"] = {{"Q12", generic->Q12},
                             {"Q23", generic->Q23},
                             {"Q13", generic->Q13}};
      j["generic"] = std::move(g);
    }
    if (special) {
      nlohmann::ordered_json s;
      s["f"] = special->f;
      s["h"] = special->h;
      s["k"] = special->k;
      s["m"] = special->m;
      s["quartic"] = special->quartic;
      s["quadratic"] = special->quadratic;
      s["obstruction"] = special->obstruction;
      if (special->obstruction_at_point)
        s["obstruction_at_point"] = *special->obstruction_at_point;
      j["special"] = std::move(s);
    }
    if (!note.empty()) j["note"] = note;
    j["verdict"] = verdict;
    return j;
  }
};

struct ReportOptions {
  std::string name;
  std::optional<std::pair<BigRational, BigRational>> at;
  bool symbolic_determinants = false;
  std::size_t max_terms = kDefaultMaxTerms;
  bool include_obstructions = true;
};

namespace detail {

inline std::string value_or_expr(
    const RatFunc& f,
    const std::optional<std::pair<BigRational, BigRational>>& at) {
  if (at) return exactmath::to_string(f.eval(at->first, at->second));
  return f.to_string();
}

template <class T>
std::vector<std::string> coeff_strings(const UniPoly<T>& p);

inline std::vector<std::string> coeff_strings(const UniPoly<BigRational>& p) {
  std::vector<std::string> out;
  for (const BigRational& c : p.descending())
    out.push_back(exactmath::to_string(c));
  return out;
}
inline std::vector<std::string> coeff_strings(const UniPoly<RatFunc>& p) {
  std::vector<std::string> out;
  for (const RatFunc& c : p.descending()) out.push_back(c.to_string());
  return out;
}

template <class T>
void fill_generic_polys(GenericPayload& g, const Coeffs9<T>& k, const T& rho,
                        const char* const (&names)[9]) {
  const T* values[9] = {&k.a1, &k.a2, &k.a3, &k.b1, &k.b2,
                        &k.b3, &k.c1, &k.c2, &k.c3};
  for (std::size_t i = 0; i < 9; ++i) {
    if constexpr (std::is_same_v<T, RatFunc>)
      g.coefficients[i] = {names[i], values[i]->to_string()};
    else
      g.coefficients[i] = {names[i], exactmath::to_string(*values[i])};
  }
  PTripleOf<T> p = p_polynomials(k, rho);
  QTripleOf<T> q = q_polynomials(k);
  g.p_coeffs = {coeff_strings(p.P1), coeff_strings(p.P2), coeff_strings(p.P3)};
  g.q_coeffs = {coeff_strings(q.Q1), coeff_strings(q.Q2), coeff_strings(q.Q3)};
  g.p_display = {p.P1.to_string("t"), p.P2.to_string("t"), p.P3.to_string("t")};
  g.q_display = {q.Q1.to_string("X"), q.Q2.to_string("X"), q.Q3.to_string("X")};
}

}  // namespace detail

// Assembles the obstruction verdict. Nonvanishing obstructions preclude
// local pEW solutions; vanishing ones decide nothing (necessary conditions
// only), and the verdict never claims existence.
inline ObstructionReport verdict(const InvariantBundle& bundle,
                                 const ReportOptions& opts) {
  static const char* const kCoeffNames[9] = {"a1", "a2", "a3", "b1", "b2",
                                             "b3", "c1", "c2", "c3"};
  ObstructionReport rep;
  rep.name = opts.name;
  rep.vars = bundle.conn.vars();
  rep.branch = pipeline::branch(bundle);
  rep.rho = detail::value_or_expr(bundle.rho, opts.at);
  rep.phi = detail::value_or_expr(bundle.phi, opts.at);
  rep.ell = detail::value_or_expr(bundle.ell, opts.at);
  for (int a = 0; a < 2; ++a) {
    rep.Y[static_cast<std::size_t>(a)] =
        detail::value_or_expr(bundle.Y.at({a}), opts.at);
    rep.W[static_cast<std::size_t>(a)] =
        detail::value_or_expr(bundle.Wup.at({a}), opts.at);
  }
  if (opts.at)
    rep.point = {exactmath::to_string(opts.at->first),
                 exactmath::to_string(opts.at->second)};

  if (!opts.include_obstructions) {
    if (rep.branch == Branch::Flat)
      rep.verdict = "projectively flat; F = 0 forced";
    return rep;
  }

  switch (rep.branch) {
    case Branch::Flat: {
      rep.note =
          "Y vanishes identically, so every obstruction is zero and the pEW "
          "equation reduces to the projective Ricci-flat equation";
      rep.verdict = "projectively flat; F = 0 forced";
      break;
    }
    case Branch::Generic: {
      GenericPayload g;
      pipeline::GenericCoeffs coeffs =
          pipeline::generic_coeffs(bundle, bundle.conn);
      bool on_rho_locus = false;
      if (opts.at) {
        Coeffs9<BigRational> at_coeffs =
            pipeline::eval_at(coeffs, opts.at->first, opts.at->second);
        BigRational rho_at = bundle.rho.eval(opts.at->first, opts.at->second);
        on_rho_locus = exactmath::is_zero(rho_at);
        detail::fill_generic_polys(g, at_coeffs, rho_at, kCoeffNames);
        ResultantTripleOf<BigRational> res =
            q_resultants(q_polynomials(at_coeffs));
        g.determinants_computed = true;
        g.Q12 = exactmath::to_string(res.Q12);
        g.Q23 = exactmath::to_string(res.Q23);
        g.Q13 = exactmath::to_string(res.Q13);
        g.any_det_nonzero = !exactmath::is_zero(res.Q12) ||
                            !exactmath::is_zero(res.Q23) ||
                            !exactmath::is_zero(res.Q13);
        rep.note = on_rho_locus
                       ? "the evaluation point lies on the vanishing locus of "
                         "rho, where the generic-branch constraints do not "
                         "apply; determinant values are reported without a "
                         "verdict"
                       : "determinants evaluated exactly at the given point";
      } else {
        detail::fill_generic_polys(g, coeffs, bundle.rho, kCoeffNames);
        rep.note =
            "generic-branch results hold off the vanishing locus of rho: " +
            bundle.rho.num().to_string() + " = 0";
        if (opts.symbolic_determinants) {
          ResultantTriple res = q_resultants(q_polynomials(coeffs),
                                             opts.max_terms);
          g.determinants_computed = true;
          g.Q12 = res.Q12.to_string();
          g.Q23 = res.Q23.to_string();
          g.Q13 = res.Q13.to_string();
          g.any_det_nonzero = !res.Q12.is_zero() || !res.Q23.is_zero() ||
                              !res.Q13.is_zero();
        }
      }
      if (on_rho_locus) {
        rep.verdict =
            "rho vanishes at the evaluation point; no verdict is asserted "
            "there";
      } else if (g.determinants_computed) {
        rep.verdict = g.any_det_nonzero
                          ? "no local pEW solution"
                          : "all obstruction determinants vanish; existence "
                            "undecided (necessary conditions only)";
      } else {
        rep.verdict =
            "obstruction determinants not evaluated (symbolic determinants "
            "can be very large); pass --at X Y or --symbolic";
      }
      rep.generic = std::move(g);
      break;
    }
    case Branch::Special: {
      pipeline::SpecialBranch s = pipeline::special_branch(bundle, bundle.conn);
      SpecialPayload p;
      p.f = s.f.to_string();
      p.h = s.h.to_string();
      p.k = s.k.to_string();
      p.m = s.m.to_string();
      const VarNames& vars = bundle.conn.vars();
      UniPoly<RatFunc> quartic(
          {RatFunc(0, vars) - s.h, RatFunc(0, vars),
           pipeline::frac(-3, 1, vars) * s.f, RatFunc(0, vars),
           RatFunc(15, vars)});
      UniPoly<RatFunc> quadratic({s.m, RatFunc(0, vars), s.k});
      p.quartic = quartic.to_string("F");
      p.quadratic = quadratic.to_string("F");
      p.obstruction = s.obstruction.to_string();
      p.obstruction_nonzero = !s.obstruction.is_zero();
      bool nonzero_here = p.obstruction_nonzero;
      if (opts.at) {
        BigRational v = s.obstruction.eval(opts.at->first, opts.at->second);
        p.obstruction_at_point = exactmath::to_string(v);
        nonzero_here = !exactmath::is_zero(v);
      }
      rep.note =
          "rho = 0 identically; the single obstruction must vanish wherever "
          "a pEW solution exists";
      rep.verdict = nonzero_here
                        ? "no local pEW solution"
                        : "obstruction vanishes here; existence undecided "
                          "(necessary conditions only)";
      rep.special = std::move(p);
      break;
    }
  }
  return rep;
}

}  // namespace projew::obstruction
