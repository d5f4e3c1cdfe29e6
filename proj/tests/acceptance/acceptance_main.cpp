// Acceptance suite: runs every release criterion at full scale and prints one
// pass/fail line per criterion. Exit code 0 iff all criteria pass.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lc/catalog.hpp"
#include "lc/composer.hpp"
#include "lc/formula.hpp"
#include "lc/geometry.hpp"
#include "lc/report_json.hpp"
#include "lc/text.hpp"
#include "support/random_formulas.hpp"

namespace {

using namespace lc;
namespace cat = lc::catalog;

struct Criterion {
  std::string name;
  std::function<void(std::ostringstream&)> run;  // throws on failure
};

geo::SamplerConfig full_cfg(std::uint64_t seed) {
  geo::SamplerConfig cfg;
  cfg.seed = seed;
  cfg.sample_count = 10000;
  cfg.tol_solve = 1e-12;
  cfg.tol_verify = 1e-9;
  return cfg;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

const std::vector<geo::Group> kGroups{geo::Group::I, geo::Group::II, geo::Group::III,
                                      geo::Group::IV};

// --- criterion 1: exact propositional suite ---------------------------------

void criterion_propositional(std::ostringstream& detail) {
  const auto start = std::chrono::steady_clock::now();

  require(is_tautology(parse("((t & p -> r) & (t & q -> r)) <-> (t & (p | q) -> r)")),
          "composition equivalence is not a tautology");
  require(is_tautology(parse("(t & r -> p | q) <-> (t & r -> p ^ ~p & q)")),
          "homogenization equivalence is not a tautology");
  require(are_equivalent(parse("t & r & ~q -> p"), parse("t & r -> p | q")),
          "conditional form keeping p is not equivalent to the inverse");
  require(are_equivalent(parse("t & r & ~p -> q"), parse("t & r -> p | q")),
          "conditional form keeping q is not equivalent to the inverse");

  const auto composed = ImplicationStructure::from_formula(parse("t & (p | q) -> r"));
  const auto inverse = ImplicationStructure::from_formula(parse("t & r -> p | q"));
  const auto verdict = classify(composed, inverse);
  require(verdict.relation == Relation::Independent,
          "composed/inverse pair is not classified independent");

  // The documented witnesses falsify their directions (checked by eval), and
  // so do the classifier's own enumeration-first witnesses.
  const Formula forward = Formula::implication(composed.to_formula(), inverse.to_formula());
  const Formula backward = Formula::implication(inverse.to_formula(), composed.to_formula());
  const Assignment stated_forward{{"t", true}, {"r", true}, {"p", false}, {"q", false}};
  const Assignment stated_backward{{"t", true}, {"p", true}, {"q", false}, {"r", false}};
  require(!eval(forward, stated_forward), "stated forward witness does not falsify");
  require(!eval(backward, stated_backward), "stated backward witness does not falsify");
  require(verdict.forward_witness && !eval(forward, *verdict.forward_witness),
          "classifier forward witness does not falsify");
  require(verdict.backward_witness && !eval(backward, *verdict.backward_witness),
          "classifier backward witness does not falsify");

  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  require(elapsed.count() < 1.0, "propositional suite exceeded 1 s");
  detail << "exact checks in " << elapsed.count() << " s";
}

// --- criterion 2: generating-problem oracles ---------------------------------

void criterion_generating(std::ostringstream& detail) {
  const auto start = std::chrono::steady_clock::now();
  const Formula r = Formula::atom("r");
  double worst = 0.0;
  for (geo::Group g : kGroups) {
    for (geo::AtomId premise : {geo::AtomId::P, geo::AtomId::Q}) {
      const auto report = geo::check_implication(g, {premise}, r, full_cfg(42));
      require(report.verdict == geo::Verdict::NotFalsified,
              std::string("generating run falsified for group ") + geo::to_string(g));
      require(report.max_conclusion_residual < 1e-9,
              std::string("conclusion residual above tolerance for group ") + geo::to_string(g));
      worst = std::max(worst, report.max_conclusion_residual);
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  require(elapsed.count() < 60.0, "generating oracles exceeded 60 s");
  detail << "8 runs x 10000 samples, max residual " << worst << ", " << elapsed.count() << " s";
}

// --- criterion 3: inverse oracles and disjunct necessity ---------------------

void criterion_inverse(std::ostringstream& detail) {
  const Formula disjunction = parse("p | q");
  double worst_solve = 0.0;
  for (geo::Group g : kGroups) {
    const auto report = geo::check_implication(g, {geo::AtomId::R}, disjunction, full_cfg(42));
    require(report.verdict == geo::Verdict::NotFalsified,
            std::string("inverse slice falsified p | q for group ") + geo::to_string(g));
    require(report.max_atom_residuals.at("r") < 1e-12,
            std::string("slice residual above solver tolerance for group ") + geo::to_string(g));
    worst_solve = std::max(worst_solve, report.max_atom_residuals.at("r"));

    const auto cfg = full_cfg(42);
    const auto to_p = geo::find_counterexample(g, parse("r -> p"), cfg);
    require(to_p.has_value(),
            std::string("no counterexample to r -> p in group ") + geo::to_string(g));
    require(to_p->residuals.at("p") > cfg.tol_verify * 10,
            "r -> p witness is not robustly non-isosceles");
    const auto to_q = geo::find_counterexample(g, parse("r -> q"), cfg);
    require(to_q.has_value(),
            std::string("no counterexample to r -> q in group ") + geo::to_string(g));
    require(to_q->residuals.at("q") > cfg.tol_verify * 10,
            "r -> q witness is not robustly off the angle target");
  }
  detail << "4 slices x 10000 samples, max slice residual " << worst_solve
         << "; both disjunct necessities witnessed per group";
}

// --- criterion 4: homogenization agreement -----------------------------------

void criterion_homogenization(std::ostringstream& detail) {
  const Formula agreement = parse("(p | q) <-> (p ^ ~p & q)");
  std::uint64_t counted = 0;
  for (geo::Group g : kGroups) {
    // Same seed as criterion 3, hence the same slice triangles.
    const auto report = geo::check_implication(g, {geo::AtomId::R}, agreement, full_cfg(42));
    require(report.verdict == geo::Verdict::NotFalsified,
            std::string("pointwise homogenization mismatch in group ") + geo::to_string(g));
    counted += report.samples_accepted;
  }
  detail << counted << " slice samples agree pointwise";
}

// --- criterion 5: capstone ----------------------------------------------------

void criterion_capstone(std::ostringstream& detail) {
  const auto result = cat::verify_capstone(full_cfg(7));
  for (const auto& item : result.items) {
    require(item.met, "capstone item failed: " + item.name);
  }
  require(result.all_met, "capstone battery failed");
  std::uint64_t accepted = 0;
  for (const auto& item : result.items) accepted += item.report.samples_accepted;
  detail << "both directions and both dispatches on 10000-sample slices (accepted " << accepted
         << " in total)";
}

// --- criterion 6: derivation fidelity ----------------------------------------

void criterion_derivation(std::ostringstream& detail) {
  struct Golden {
    const char* name;
    const char* formula;
  };
  const std::vector<Golden> golden{
      {"generating_p", "t & p -> r"},
      {"generating_q", "t & q -> r"},
      {"composed", "t & (p | q) -> r"},
      {"inverse", "t & r -> p | q"},
      {"conditional_p", "t & r & ~q -> p"},
      {"conditional_q", "t & r & ~p -> q"},
      {"homogenized", "t & r -> p ^ ~p & q"},
  };
  for (geo::Group g : kGroups) {
    const auto set = cat::derive_set(g);
    const auto problems = set.all();
    require(problems.size() == golden.size(), "unexpected derived problem count");
    for (std::size_t i = 0; i < golden.size(); ++i) {
      require(problems[i]->name == golden[i].name, "unexpected derived problem order");
      const Formula expected = normalize(parse(golden[i].formula));
      const Formula actual = normalize(problems[i]->structure.to_formula());
      require(actual == expected, std::string("derived formula mismatch for ") + golden[i].name +
                                      " in group " + geo::to_string(g));
    }
  }
  detail << "all 4 groups match the golden transcriptions structurally";
}

// --- criterion 7: property suites ---------------------------------------------

void criterion_properties(std::ostringstream& detail) {
  // Parser round-trip on 10^4 random canonical formulas.
  {
    RngStream rng(2718, 0);
    for (int i = 0; i < 10000; ++i) {
      const Formula f = lc::testing::random_formula(rng, 4, /*canonical=*/true);
      require(parse(print(f)) == f, "parser round-trip failed for: " + print(f));
    }
  }
  // Normalization soundness on 10^4 random formula/assignment pairs.
  {
    RngStream rng(3141, 0);
    for (int i = 0; i < 10000; ++i) {
      const Formula f = lc::testing::random_formula(rng, 4, /*canonical=*/false);
      const Assignment a = lc::testing::random_assignment(rng, f);
      require(eval(normalize(f), a) == eval(f, a), "normalize changed evaluation of: " + print(f));
    }
  }
  // Similarity invariance of residuals to 1e-10.
  {
    geo::SamplerConfig cfg;
    for (int i = 0; i < 250; ++i) {
      RngStream stream(1618, i);
      const geo::Triangle t = geo::sample_triangle(cfg, stream);
      const double angle = stream.next_in(0.0, 2 * 3.141592653589793);
      const double scale = std::exp(stream.next_in(std::log(0.1), std::log(10.0)));
      const geo::Point shift{stream.next_in(-5.0, 5.0), stream.next_in(-5.0, 5.0)};
      const double ca = std::cos(angle), sa = std::sin(angle);
      auto map = [&](geo::Point p) {
        return geo::Point{scale * (ca * p.x - sa * p.y) + shift.x,
                          scale * (sa * p.x + ca * p.y) + shift.y};
      };
      const geo::Triangle u(map(t.a()), map(t.b()), map(t.c()));
      for (geo::Group g : kGroups) {
        const auto dpt = geo::construct(g, t);
        const auto dpu = geo::construct(g, u);
        for (geo::AtomId atom : {geo::AtomId::P, geo::AtomId::Q, geo::AtomId::R}) {
          const double rt = geo::predicate(g, atom, t, dpt, 1e-9).residual;
          const double ru = geo::predicate(g, atom, u, dpu, 1e-9).residual;
          require(std::abs(rt - ru) <= 1e-10, "similarity transform changed a residual");
        }
      }
    }
  }
  // Bit-identical reports for equal seeds, independent of threading.
  {
    geo::SamplerConfig cfg;
    cfg.seed = 1001;
    cfg.sample_count = 500;
    const auto once = cat::verify_group(geo::Group::II, cfg);
    const auto again = cat::verify_group(geo::Group::II, cfg);
    setenv("LOGIC_COMPOSER_THREADS", "3", 1);
    const auto single_threaded = cat::verify_group(geo::Group::II, cfg);
    unsetenv("LOGIC_COMPOSER_THREADS");
    report::RunManifest manifest;  // fixed manifest so only run content varies
    manifest.subcommand = "verify";
    manifest.target = "II";
    manifest.seed = cfg.seed;
    manifest.samples = cfg.sample_count;
    manifest.tol_solve = cfg.tol_solve;
    manifest.tol_verify = cfg.tol_verify;
    manifest.threads = 1;
    manifest.version = "test";
    const std::string a = report::report_document(manifest, once).dump();
    const std::string b = report::report_document(manifest, again).dump();
    const std::string c = report::report_document(manifest, single_threaded).dump();
    require(a == b, "repeated runs differ");
    require(a == c, "thread count changed the report");
  }
  detail << "round-trip 10^4, normalize 10^4, similarity 250x4 groups, bit-identical reports";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"criterion 1: propositional suite", criterion_propositional},
      {"criterion 2: generating-problem oracles", criterion_generating},
      {"criterion 3: inverse oracles and disjunct necessity", criterion_inverse},
      {"criterion 4: homogenization agreement", criterion_homogenization},
      {"criterion 5: capstone biconditional", criterion_capstone},
      {"criterion 6: derivation fidelity", criterion_derivation},
      {"criterion 7: property suites", criterion_properties},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    try {
      criterion.run(detail);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      std::cout << "[PASS] " << criterion.name << " (" << elapsed.count() << " s)";
      if (!detail.str().empty()) std::cout << " -- " << detail.str();
      std::cout << "\n";
    } catch (const std::exception& err) {
      ++failed;
      std::cout << "[FAIL] " << criterion.name << " -- " << err.what() << "\n";
    }
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
