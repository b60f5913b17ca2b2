// Command-line surface: identity checking, expression evaluation, scope
// tables and tribrace expansions over either model.
//
// Exit codes: 0 success / all identities hold, 1 identity failure,
// 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "preop/context.hpp"
#include "preop/expr.hpp"
#include "preop/suite.hpp"

namespace {

using namespace preop;

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw ConfigError("malformed JSON in '" + path + "': " + ex.what());
  }
  return j;
}

std::vector<int> parse_degrees(const std::string& text, std::size_t expected) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw ConfigError("bad degree '" + part + "' in '" + text + "'");
    }
  }
  if (out.size() != expected)
    throw ConfigError("expected " + std::to_string(expected) + " comma-separated degrees, got '" +
                      text + "'");
  return out;
}

std::string element_text(const FreeElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + t.str();
  }
  return out;
}

std::string element_text(const EndoElement& e) { return to_json(e).dump(); }

int run_check(const std::string& identity, const std::vector<std::string>& models, int dim,
              const std::string& ring_spec, int max_degree, int trials, std::uint64_t seed,
              const std::string& report_path, const std::string& mutation_name) {
  SuiteConfig cfg;
  if (identity != "all") cfg.identities = {find_identity(identity).name};
  cfg.models.clear();
  for (const auto& m : models)
    cfg.models.push_back(m == "free" ? ModelChoice::free_trees : ModelChoice::endo);
  cfg.dim = dim;
  cfg.ring = Ring::parse(ring_spec);
  cfg.max_degree = max_degree;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.mutation = mutation_from_string(mutation_name);

  const auto reports = run_suite(cfg);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write report file '" + report_path + "'");
    write_reports(reports, out);
  }
  print_summary(reports, std::cout);
  return all_hold(reports) ? 0 : 1;
}

int run_eval(const std::string& context_path, const std::string& expr_text,
             const std::string& out_path) {
  const Context ctx = context_from_json(load_json_file(context_path));
  const Expr e = parse(expr_text);
  const Json result = std::visit(
      [&](const auto& c) { return to_json(eval(e, c.model, c.bindings, c.mu)); }, ctx);
  if (out_path.empty()) {
    std::cout << result.dump() << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file '" + out_path + "'");
    out << result.dump() << "\n";
  }
  return 0;
}

int run_scope(const std::string& degrees_text) {
  const auto degrees = parse_degrees(degrees_text, 3);
  const auto s = scope_decompose(degrees[0], degrees[1], degrees[2]);
  std::cout << "scope of (h o_i f) o_j g at degrees (" << degrees[0] << "," << degrees[1] << ","
            << degrees[2] << "): 0 <= i <= " << ddeg(degrees[0]) << ", 0 <= j <= "
            << ddeg(degrees[1]) + ddeg(degrees[0]) << "\n";
  const auto dump = [](const char* label, const std::vector<Cell>& cells) {
    std::cout << label << " (" << cells.size() << "):";
    for (const Cell& c : cells) std::cout << " " << to_string(c);
    std::cout << "\n";
  };
  dump("B", s.b);
  dump("A", s.a);
  dump("G", s.g);
  std::cout << "total " << s.b.size() + s.a.size() + s.g.size() << " cells: " << s.b.size()
            << " in B, " << s.a.size() << " in A, " << s.g.size() << " in G\n";
  return 0;
}

template <class ModelCtx>
int print_tri_table(const ModelCtx& ctx, const std::vector<std::string>& vars) {
  const auto& model = ctx.model;
  const auto lookup = [&](const std::string& name) {
    const auto it = ctx.bindings.find(name);
    if (it == ctx.bindings.end()) throw ConfigError("variable '" + name + "' not bound in context");
    return it->second;
  };
  const auto h = lookup(vars[0]);
  const auto f = lookup(vars[1]);
  const auto g = lookup(vars[2]);
  const int dh = model.degree(h);
  const int df = model.degree(f);
  const int dg = model.degree(g);
  const auto cells = cells_g(dh, df, dg);
  std::cout << "tribraces {" << vars[0] << "," << vars[1] << "," << vars[2] << "} at degrees ("
            << dh << "," << df << "," << dg << "): " << cells.size() << " cell(s)\n";
  auto total = model.zero(dh + df + dg - 2 < 0 ? 0 : dh + df + dg - 2);
  for (const Cell& c : cells) {
    const int parity = (c.i * ddeg(df) + c.j * ddeg(dg)) % 2;
    const auto term = model.compose(model.compose(h, c.i, f), c.j, g);
    std::cout << " " << to_string(c) << "  twist " << (parity ? "-1" : "+1") << "  ("
              << vars[0] << " o_" << c.i << " " << vars[1] << ") o_" << c.j << " " << vars[2]
              << " = " << element_text(term) << "\n";
    total = model.add(total, term);
  }
  std::cout << "total: " << element_text(total) << "\n";
  return 0;
}

int run_table_tri(const std::string& context_path, const std::string& vars_text) {
  const Context ctx = context_from_json(load_json_file(context_path));
  std::vector<std::string> vars;
  std::stringstream ss(vars_text);
  std::string part;
  while (std::getline(ss, part, ',')) vars.push_back(part);
  if (vars.size() != 3) throw ConfigError("--vars expects three comma-separated names");
  return std::visit([&](const auto& c) { return print_tri_table(c, vars); }, ctx);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pre-operad calculus: two models, derived operators, identity suite"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "run identity checks and report");
  std::string identity = "all";
  std::vector<std::string> models = {"free", "endo"};
  int dim = 2;
  std::string ring_spec = "z";
  int max_degree = 3;
  int trials = 200;
  std::uint64_t seed = 1;
  std::string report_path;
  std::string mutation_name = "none";
  check->add_option("--identity", identity, "identity name or 'all'")->capture_default_str();
  check->add_option("--model", models, "free|endo (repeatable; default: both)")
      ->check(CLI::IsMember({"free", "endo"}));
  check->add_option("--dim", dim, "endo model dimension (1..3)")->capture_default_str();
  check->add_option("--ring", ring_spec, "z or zmod:P")->capture_default_str();
  check->add_option("--max-degree", max_degree, "degree cap per input slot")->capture_default_str();
  check->add_option("--trials", trials, "random trials per endo report")->capture_default_str();
  check->add_option("--seed", seed, "master seed")->capture_default_str();
  check->add_option("--report", report_path, "write JSON-lines reports to this path");
  check->add_option("--mutation", mutation_name,
                    "arm a deliberate sign bug (test fixture): none, drop_compose_twist, "
                    "shift_compose_twist, cup_index_shift, devtri_drop_sign, swap_bg_rule_signs")
      ->capture_default_str();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a DSL expression in a context");
  std::string context_path;
  std::string expr_text;
  std::string out_path;
  eval_cmd->add_option("--context", context_path, "context JSON file")->required();
  eval_cmd->add_option("expr", expr_text, "expression, e.g. \"cup(f, g)\"")->required();
  eval_cmd->add_option("--out", out_path, "write the element JSON here instead of stdout");

  // scope
  auto* scope_cmd = app.add_subcommand("scope", "print the B/A/G cell table");
  std::string degrees_text;
  scope_cmd->add_option("--degrees", degrees_text, "H,F,G")->required();

  // table tri
  auto* table_cmd = app.add_subcommand("table", "term-by-term expansions");
  auto* tri_cmd = table_cmd->add_subcommand("tri", "tribraces expansion with twist signs");
  std::string tri_context;
  std::string tri_vars;
  tri_cmd->add_option("--context", tri_context, "context JSON file")->required();
  tri_cmd->add_option("--vars", tri_vars, "h,f,g binding names")->required();
  table_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*check)
      return run_check(identity, models, dim, ring_spec, max_degree, trials, seed, report_path,
                       mutation_name);
    if (*eval_cmd) return run_eval(context_path, expr_text, out_path);
    if (*scope_cmd) return run_scope(degrees_text);
    if (*tri_cmd) return run_table_tri(tri_context, tri_vars);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
