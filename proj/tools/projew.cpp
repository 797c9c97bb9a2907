// projew: decide whether local obstructions to a projective surface
// admitting a connection with skew-symmetric Ricci tensor vanish.
//
// Exit codes: 0 computed (the verdict lives in the report), 1 check-solution
// residual nonzero, 2 input/parse error, 3 pole at the evaluation point,
// 4 symbolic term budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "projew/projew.hpp"

namespace {

using projew::BudgetError;
using projew::DomainError;
using projew::ParseError;
using projew::PoleError;
using projew::exactmath::BigRational;
using projew::exactmath::RatFunc;
using projew::geometry::ChartConnection;
using projew::geometry::TensorField;
using projew::pipeline::InvariantBundle;

constexpr int kExitOk = 0;
constexpr int kExitResidualNonzero = 1;
constexpr int kExitParse = 2;
constexpr int kExitPole = 3;
constexpr int kExitBudget = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open structure file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedStructure {
  projew::exprparse::StructureDoc doc;
  ChartConnection conn;
  std::string display_name;
};

LoadedStructure load_structure(const std::string& path) {
  LoadedStructure s{projew::exprparse::parse_structure_doc(read_file(path)),
                    ChartConnection{}, ""};
  s.conn = projew::exprparse::to_connection(s.doc);
  s.display_name = s.doc.name.empty() ? path : s.doc.name;
  return s;
}

std::optional<std::pair<BigRational, BigRational>> parse_point(
    const std::vector<std::string>& at) {
  if (at.empty()) return std::nullopt;
  return std::make_pair(projew::exactmath::rational_from_string(at[0]),
                        projew::exactmath::rational_from_string(at[1]));
}

void emit(const projew::obstruction::ObstructionReport& rep,
          const std::string& format) {
  if (format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
}

int run_invariants(const std::string& file,
                   const std::vector<std::string>& at,
                   const std::string& format) {
  LoadedStructure s = load_structure(file);
  InvariantBundle bundle = projew::pipeline::invariant_bundle(s.conn);
  projew::obstruction::ReportOptions opts;
  opts.name = s.display_name;
  opts.at = parse_point(at);
  opts.include_obstructions = false;
  emit(projew::obstruction::verdict(bundle, opts), format);
  return kExitOk;
}

int run_obstruction(const std::string& file,
                    const std::vector<std::string>& at, bool symbolic,
                    std::size_t max_terms, const std::string& format) {
  LoadedStructure s = load_structure(file);
  InvariantBundle bundle = projew::pipeline::invariant_bundle(s.conn);
  projew::obstruction::ReportOptions opts;
  opts.name = s.display_name;
  opts.at = parse_point(at);
  opts.symbolic_determinants = symbolic;
  opts.max_terms = max_terms;
  emit(projew::obstruction::verdict(bundle, opts), format);
  return kExitOk;
}

int run_check_solution(const std::string& file,
                       const std::vector<std::string>& alpha,
                       const std::string& format) {
  LoadedStructure s = load_structure(file);
  TensorField a(0, 1, s.doc.vars);
  a.at({0}) = projew::exprparse::parse_expr(alpha[0], s.doc.vars);
  a.at({1}) = projew::exprparse::parse_expr(alpha[1], s.doc.vars);
  TensorField res = projew::pipeline::pew_residual(s.conn, a);
  const RatFunc& r11 = res.at({0, 0});
  const RatFunc& r12 = res.at({0, 1});
  const RatFunc& r22 = res.at({1, 1});
  bool solves = r11.is_zero() && r12.is_zero() && r22.is_zero();
  if (format == "json") {
    nlohmann::ordered_json j;
    j["name"] = s.display_name;
    j["alpha"] = {alpha[0], alpha[1]};
    j["residual"] = {r11.to_string(), r12.to_string(), r22.to_string()};
    j["is_solution"] = solves;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "structure: " << s.display_name << "\n";
    std::cout << "residual_11 = " << r11.to_string() << "\n";
    std::cout << "residual_12 = " << r12.to_string() << "\n";
    std::cout << "residual_22 = " << r22.to_string() << "\n";
    std::cout << "solution: " << (solves ? "yes" : "no") << "\n";
  }
  return solves ? kExitOk : kExitResidualNonzero;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact obstruction computations for projective surfaces admitting "
      "skew-symmetric Ricci tensor"};
  app.require_subcommand(1);
  std::string format = "text";

  std::string inv_file;
  std::vector<std::string> inv_at;
  CLI::App* inv = app.add_subcommand(
      "invariants", "Print the projective invariants rho, phi, ell, Y, W");
  inv->add_option("file", inv_file, "structure file (JSON)")->required();
  inv->add_option("--at", inv_at,
                  "evaluate at a point given by two rational literals")
      ->expected(2);
  inv->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string obs_file;
  std::vector<std::string> obs_at;
  bool obs_symbolic = false;
  std::size_t obs_max_terms = projew::obstruction::kDefaultMaxTerms;
  CLI::App* obs = app.add_subcommand(
      "obstruction", "Compute the obstruction polynomials and determinants");
  obs->add_option("file", obs_file, "structure file (JSON)")->required();
  obs->add_option("--at", obs_at,
                  "evaluate at a point given by two rational literals")
      ->expected(2);
  obs->add_flag("--symbolic", obs_symbolic,
                "compute full symbolic determinants (can be very large)");
  obs->add_option("--max-terms", obs_max_terms,
                  "term budget for symbolic determinants (0 = unlimited)");
  obs->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string chk_file;
  std::vector<std::string> chk_alpha;
  CLI::App* chk = app.add_subcommand(
      "check-solution", "Evaluate the pEW residual for a candidate alpha");
  chk->add_option("file", chk_file, "structure file (JSON)")->required();
  chk->add_option("--alpha", chk_alpha, "the two components of alpha")
      ->expected(2)
      ->required();
  chk->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return run_invariants(inv_file, inv_at, format);
    if (obs->parsed())
      return run_obstruction(obs_file, obs_at, obs_symbolic, obs_max_terms,
                             format);
    if (chk->parsed()) return run_check_solution(chk_file, chk_alpha, format);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPole;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "hint: evaluate at a point with --at, or raise --max-terms\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
