#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lc/catalog.hpp"
#include "lc/composer.hpp"
#include "lc/formula.hpp"
#include "lc/geometry.hpp"
#include "lc/report_json.hpp"
#include "lc/text.hpp"
#include "lc/version.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string render_assignment(const lc::Assignment& a) {
  std::string out;
  for (const auto& [name, value] : a) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += value ? 'T' : 'F';
  }
  return out;
}

void print_parse_error(const lc::ParseError& err, std::string_view input) {
  std::cerr << "parse error: " << err.what() << " at bytes " << err.span().begin << ".."
            << err.span().end << "\n";
  std::cerr << "  " << input << "\n";
  std::cerr << "  " << std::string(err.span().begin, ' ') << "^\n";
  if (!err.expected().empty()) {
    std::cerr << "  expected:";
    for (const auto& tok : err.expected()) std::cerr << ' ' << tok;
    std::cerr << "\n";
  }
}

lc::Formula parse_or_die(const std::string& text) {
  try {
    return lc::parse(text);
  } catch (const lc::ParseError& err) {
    print_parse_error(err, text);
    std::exit(kExitUsage);
  }
}

lc::ImplicationStructure implication_or_die(const std::string& text) {
  return lc::ImplicationStructure::from_formula(parse_or_die(text));
}

int run_check(const std::string& text, bool taut, bool sat, bool table) {
  const lc::Formula f = parse_or_die(text);
  if (table) {
    const auto report = lc::truth_table(f);
    for (const auto& name : report.atom_order) std::cout << name << ' ';
    std::cout << "| value\n";
    for (std::size_t row = 0; row < report.row_count(); ++row) {
      const auto a = report.assignment_for_row(row);
      for (const auto& name : report.atom_order) std::cout << (a.at(name) ? 'T' : 'F') << ' ';
      std::cout << "| " << (report.row_values[row] ? 'T' : 'F') << "\n";
    }
    std::cout << lc::to_string(report.classification) << "\n";
    return kExitTrue;
  }
  if (taut) {
    const auto witness = lc::find_falsifying(f);
    if (!witness) {
      std::cout << "tautology\n";
      return kExitTrue;
    }
    std::cout << "not a tautology; falsified by: " << render_assignment(*witness) << "\n";
    return kExitFalse;
  }
  // sat
  const auto witness = lc::find_falsifying(lc::Formula::negation(f));
  if (witness) {
    std::cout << "satisfiable; witness: " << render_assignment(*witness) << "\n";
    return kExitTrue;
  }
  std::cout << "unsatisfiable\n";
  return kExitFalse;
}

int run_compose(const std::string& lhs, const std::string& rhs, bool allow_empty_context) {
  const auto g1 = implication_or_die(lhs);
  const auto g2 = implication_or_die(rhs);
  const auto composed = lc::compose(g1, g2, allow_empty_context);
  std::cout << composed.str() << "\n";
  std::cout << "verdict: tautological-equivalence with the conjunction of the inputs\n";
  return kExitTrue;
}

int run_invert(const std::string& text) {
  const auto src = implication_or_die(text);
  for (const auto& candidate : lc::invert_all(src)) {
    const auto verdict = lc::classify(src, candidate.structure);
    std::cout << candidate.structure.str() << "  [" << lc::to_string(verdict.relation) << "]\n";
  }
  return kExitTrue;
}

int run_conditionalize(const std::string& text, const std::string& keep) {
  const auto src = implication_or_die(text);
  const auto out = lc::conditionalize(src, parse_or_die(keep));
  std::cout << out.str() << "\n";
  std::cout << "verdict: " << lc::to_string(lc::classify(src, out).relation) << "\n";
  return kExitTrue;
}

int run_homogenize(const std::string& text) {
  const auto src = implication_or_die(text);
  const auto out = lc::homogenize(src);
  std::cout << out.str() << "\n";
  std::cout << "verdict: " << lc::to_string(lc::classify(src, out).relation) << "\n";
  return kExitTrue;
}

nlohmann::json catalog_group_json(lc::catalog::Group g) {
  const auto s = lc::catalog::schema(g);
  const auto set = lc::catalog::derive_set(g);
  nlohmann::json statements = nlohmann::json::object();
  for (const auto& [atom, text] : s.statements) statements[std::string(1, atom)] = text;
  nlohmann::json problems = nlohmann::json::array();
  for (const auto* problem : set.all()) {
    problems.push_back({
        {"name", problem->name},
        {"tag", problem->tag ? nlohmann::json(*problem->tag) : nlohmann::json(nullptr)},
        {"formula", problem->structure.str()},
    });
  }
  return {
      {"group", lc::geo::to_string(g)},
      {"context", s.context},
      {"statements", statements},
      {"problems", problems},
  };
}

int run_catalog(const std::string& group_arg, bool as_json) {
  std::vector<lc::catalog::Group> groups;
  if (group_arg.empty()) {
    groups = {lc::geo::Group::I, lc::geo::Group::II, lc::geo::Group::III, lc::geo::Group::IV};
  } else {
    groups = {lc::catalog::parse_group(group_arg)};
  }
  if (as_json) {
    nlohmann::json doc{{"schema_version", 1}, {"groups", nlohmann::json::array()}};
    for (auto g : groups) doc["groups"].push_back(catalog_group_json(g));
    std::cout << doc.dump(2) << "\n";
    return kExitTrue;
  }
  for (auto g : groups) {
    const auto s = lc::catalog::schema(g);
    const auto set = lc::catalog::derive_set(g);
    std::cout << "group " << lc::geo::to_string(g) << "\n";
    std::cout << "  t: " << s.context << "\n";
    for (const auto& [atom, text] : s.statements) {
      std::cout << "  " << atom << ": " << text << "\n";
    }
    for (const auto* problem : set.all()) {
      std::cout << "  " << problem->name;
      if (problem->tag) std::cout << " (" << *problem->tag << ")";
      std::cout << ": " << problem->structure.str() << "\n";
    }
  }
  return kExitTrue;
}

int run_verify(const std::string& target, std::uint64_t samples, std::uint64_t seed,
               double tol_verify, double tol_solve, const std::string& report_path, bool as_json) {
  lc::geo::SamplerConfig cfg;
  cfg.seed = seed;
  cfg.sample_count = samples;
  cfg.tol_verify = tol_verify;
  cfg.tol_solve = tol_solve;
  cfg.validate();

  const auto started = std::chrono::steady_clock::now();
  lc::catalog::BatteryResult result = target == "capstone"
                                          ? lc::catalog::verify_capstone(cfg)
                                          : lc::catalog::verify_group(
                                                lc::catalog::parse_group(target), cfg);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

  lc::report::RunManifest manifest;
  manifest.subcommand = "verify";
  manifest.target = target;
  manifest.seed = cfg.seed;
  manifest.samples = cfg.sample_count;
  manifest.tol_solve = cfg.tol_solve;
  manifest.tol_verify = cfg.tol_verify;
  manifest.threads = lc::geo::effective_thread_count();
  manifest.version = std::string(lc::kVersion);
  manifest.duration_seconds = elapsed.count();

  const auto doc = lc::report::report_document(manifest, result);
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) {
      std::cerr << "error: cannot write report to '" << report_path << "'\n";
      return kExitUsage;
    }
    file << doc.dump(2) << "\n";
  }
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << lc::report::render_text(doc);
  }
  return result.all_met ? kExitTrue : kExitFalse;
}

int run_render(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  nlohmann::json doc;
  try {
    file >> doc;
    std::cout << lc::report::render_text(doc);
  } catch (const std::exception& err) {
    std::cerr << "error: invalid report document: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compose implications with a shared context, derive inverse and homogenized "
               "problems, and verify the built-in triangle problem groups numerically"};
  app.set_version_flag("--version", std::string(lc::kVersion));
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Decide a formula by exhaustive truth table");
  std::string check_formula;
  bool check_taut = false, check_sat = false, check_table = false;
  check->add_option("formula", check_formula, "Formula text")->required();
  auto* f_taut = check->add_flag("--taut", check_taut, "Test for tautology");
  auto* f_sat = check->add_flag("--sat", check_sat, "Test for satisfiability");
  auto* f_table = check->add_flag("--table", check_table, "Print the full truth table");
  f_taut->excludes(f_sat, f_table);
  f_sat->excludes(f_table);

  auto* compose_cmd = app.add_subcommand("compose", "Compose two generating implications");
  std::string compose_lhs, compose_rhs;
  bool allow_empty_context = false;
  compose_cmd->add_option("first", compose_lhs, "First implication")->required();
  compose_cmd->add_option("second", compose_rhs, "Second implication")->required();
  compose_cmd->add_flag("--allow-empty-context", allow_empty_context,
                        "Permit composition without a shared premise context");

  auto* invert_cmd = app.add_subcommand("invert", "Enumerate all inverse candidates");
  std::string invert_formula;
  invert_cmd->add_option("formula", invert_formula, "Implication text")->required();

  auto* cond_cmd = app.add_subcommand(
      "conditionalize", "Move the negation of one disjunct into the premise");
  std::string cond_formula, cond_keep;
  cond_cmd->add_option("formula", cond_formula, "Implication with a binary disjunction conclusion")
      ->required();
  cond_cmd->add_option("--keep", cond_keep, "Disjunct to keep as the conclusion")->required();

  auto* homog_cmd = app.add_subcommand(
      "homogenize", "Rewrite the conclusion p | q as p ^ (~p & q)");
  std::string homog_formula;
  homog_cmd->add_option("formula", homog_formula, "Implication with a binary disjunction conclusion")
      ->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Show the built-in problem groups");
  std::string catalog_group;
  bool catalog_json = false;
  catalog_cmd->add_option("--group", catalog_group, "Restrict to one group (I..IV)");
  catalog_cmd->add_flag("--json", catalog_json, "Emit the catalog as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Run a group battery or the capstone check");
  std::string verify_target, verify_report;
  std::uint64_t verify_samples = 10000;
  std::uint64_t verify_seed = 42;
  double verify_tol = 1e-9;
  double verify_tol_solve = 1e-12;
  bool verify_json = false;
  verify_cmd->add_option("target", verify_target, "Group id (I..IV) or 'capstone'")->required();
  verify_cmd->add_option("--samples", verify_samples, "Samples per run");
  verify_cmd->add_option("--seed", verify_seed, "Random seed");
  verify_cmd->add_option("--tol", verify_tol, "Verification tolerance");
  verify_cmd->add_option("--tol-solve", verify_tol_solve, "Slice-solver tolerance");
  verify_cmd->add_option("--report", verify_report, "Write the JSON report to this file");
  verify_cmd->add_flag("--json", verify_json, "Print the JSON report instead of text");

  auto* render_cmd = app.add_subcommand("render", "Render a JSON report document as text");
  std::string render_path;
  render_cmd->add_option("report", render_path, "Path to a report JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      if (!check_taut && !check_sat && !check_table) {
        std::cerr << "error: choose one of --taut, --sat, --table\n";
        return kExitUsage;
      }
      return run_check(check_formula, check_taut, check_sat, check_table);
    }
    if (compose_cmd->parsed()) return run_compose(compose_lhs, compose_rhs, allow_empty_context);
    if (invert_cmd->parsed()) return run_invert(invert_formula);
    if (cond_cmd->parsed()) return run_conditionalize(cond_formula, cond_keep);
    if (homog_cmd->parsed()) return run_homogenize(homog_formula);
    if (catalog_cmd->parsed()) return run_catalog(catalog_group, catalog_json);
    if (verify_cmd->parsed()) {
      return run_verify(verify_target, verify_samples, verify_seed, verify_tol, verify_tol_solve,
                        verify_report, verify_json);
    }
    if (render_cmd->parsed()) return run_render(render_path);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const lc::geo::BudgetError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBudget;
  } catch (const lc::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kExitUsage;
  }
}
