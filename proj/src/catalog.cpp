#include "lc/catalog.hpp"

#include <array>

#include "lc/text.hpp"

namespace lc::catalog {

using geo::AtomId;

Group parse_group(std::string_view text) {
  if (text == "I" || text == "1") return Group::I;
  if (text == "II" || text == "2") return Group::II;
  if (text == "III" || text == "3") return Group::III;
  if (text == "IV" || text == "4") return Group::IV;
  throw UnknownGroupError("unknown group '" + std::string(text) + "' (expected I, II, III or IV)");
}

ProblemSchema schema(Group g) {
  ProblemSchema s;
  s.group = g;
  switch (g) {
    case Group::I:
      s.context = "AD is the median from A to the midpoint D of BC in triangle ABC";
      s.statements['p'] = "AC = AB";
      s.statements['q'] = "angle BAC = 90 deg";
      s.statements['r'] = "angle DAC + angle ABC = 90 deg";
      break;
    case Group::II:
      s.context =
          "AA1 and BB1 are the internal bisectors of angles CAB and CBA of triangle ABC, "
          "meeting at J";
      s.statements['p'] = "AC = BC";
      s.statements['q'] = "angle ACB = 60 deg";
      s.statements['r'] = "JA1 = JB1";
      break;
    case Group::III:
      s.context =
          "CH is the altitude and CM the median from C in triangle ABC, labeled so that "
          "angle CAB >= angle CBA";
      s.statements['p'] = "AC = BC";
      s.statements['q'] = "angle ACB = 90 deg";
      s.statements['r'] = "angle ACM = angle BCH";
      break;
    case Group::IV:
      s.context = "F, D, E are the midpoints of sides BC, CA, AB of triangle ABC";
      s.statements['p'] = "AC = BC";
      s.statements['q'] = "angle ACB = 60 deg";
      s.statements['r'] = "the circumcenter G of triangle FDE lies on the bisector of angle ACB";
      break;
  }
  return s;
}

std::vector<const DerivedProblem*> DerivedProblemSet::all() const {
  return {&generating_p, &generating_q, &composed, &inverse,
          &conditional_p, &conditional_q, &homogenized};
}

namespace {

struct GroupTags {
  const char* generating_p;
  const char* generating_q;
  const char* inverse;
  const char* conditional_p;  // nullptr when the source states no such problem
  const char* conditional_q;
  const char* homogenized;
};

GroupTags tags_for(Group g) {
  switch (g) {
    case Group::I: return {"4.1", "4.2", "4.3", "4.4", "4.5", "4.6"};
    case Group::II: return {"4.7", "4.8", "4.9", "4.11", "4.10", "4.12"};
    case Group::III: return {"4.13", "4.14", "4.15", nullptr, nullptr, "4.16"};
    case Group::IV: return {"4.18", "4.19", "4.20", "4.22", "4.21", "4.23"};
  }
  throw UnknownGroupError("unknown group id");
}

std::optional<std::string> opt_tag(const char* tag) {
  if (tag == nullptr) return std::nullopt;
  return std::string(tag);
}

}  // namespace

DerivedProblemSet derive_set(Group g) {
  const GroupTags tags = tags_for(g);
  const Formula t = Formula::atom("t");
  const Formula p = Formula::atom("p");
  const Formula q = Formula::atom("q");
  const Formula r = Formula::atom("r");

  ImplicationStructure gen_p(Formula::conjunction({t, p}), r);
  ImplicationStructure gen_q(Formula::conjunction({t, q}), r);
  ImplicationStructure composed = compose(gen_p, gen_q);

  // The inverse of interest exchanges the whole disjunctive branch with the
  // conclusion: t & r -> p | q.
  const Formula branch = normalize(Formula::disjunction({p, q}));
  std::optional<ImplicationStructure> inverse;
  for (const InverseCandidate& candidate : invert_all(composed)) {
    if (candidate.structure.conclusion() == branch) {
      inverse = candidate.structure;
      break;
    }
  }
  if (!inverse) throw Error("internal: inverse enumeration lost the disjunctive branch");

  return DerivedProblemSet{
      g,
      {"generating_p", opt_tag(tags.generating_p), gen_p},
      {"generating_q", opt_tag(tags.generating_q), gen_q},
      {"composed", std::nullopt, composed},  // stated only implicitly by the source
      {"inverse", opt_tag(tags.inverse), *inverse},
      {"conditional_p", opt_tag(tags.conditional_p), conditionalize(*inverse, p)},
      {"conditional_q", opt_tag(tags.conditional_q), conditionalize(*inverse, q)},
      {"homogenized", opt_tag(tags.homogenized), homogenize(*inverse)},
  };
}

CapstoneSpec capstone_spec() { return {}; }

const char* to_string(Expectation e) {
  return e == Expectation::NotFalsified ? "not-falsified" : "falsified";
}

namespace {

bool expectation_met(Expectation expected, const geo::VerificationReport& report) {
  const bool falsified = report.verdict == geo::Verdict::Falsified;
  return expected == Expectation::Falsified ? falsified : !falsified;
}

BatteryItem make_item(std::string name, std::optional<std::string> tag, Expectation expected,
                      geo::VerificationReport report) {
  BatteryItem item{std::move(name), std::move(tag), expected, std::move(report), false};
  item.met = expectation_met(item.expected, item.report);
  return item;
}

/// Wraps a counterexample search as a report: the claim is expected to be
/// falsified by some slice triangle.
geo::VerificationReport counterexample_report(Group g, const Formula& claim,
                                              const geo::SamplerConfig& cfg) {
  geo::VerificationReport report;
  report.group = geo::to_string(g);
  report.hypothesis = "t & r";
  report.conclusion = print(claim);
  report.samples_attempted = cfg.sample_count;
  auto hit = geo::find_counterexample(g, claim, cfg);
  if (hit) {
    report.failure_count = 1;
    report.failures.push_back(*hit);
    report.verdict = geo::Verdict::Falsified;
    for (const auto& [name, res] : hit->residuals) report.max_atom_residuals[name] = res;
  } else {
    report.verdict = geo::Verdict::NotFalsified;
  }
  return report;
}

}  // namespace

BatteryResult verify_group(Group g, const geo::SamplerConfig& cfg) {
  const DerivedProblemSet set = derive_set(g);
  const Formula r = Formula::atom("r");
  const Formula p_or_q = parse("p | q");
  const Formula agreement = parse("(p | q) <-> (p ^ ~p & q)");

  BatteryResult result;
  result.group = geo::to_string(g);
  result.items.push_back(make_item(
      "generating_p", set.generating_p.tag, Expectation::NotFalsified,
      geo::check_implication(g, {AtomId::P}, r, cfg)));
  result.items.push_back(make_item(
      "generating_q", set.generating_q.tag, Expectation::NotFalsified,
      geo::check_implication(g, {AtomId::Q}, r, cfg)));
  result.items.push_back(make_item(
      "inverse", set.inverse.tag, Expectation::NotFalsified,
      geo::check_implication(g, {AtomId::R}, p_or_q, cfg)));
  result.items.push_back(make_item(
      "counterexample_r_implies_p", std::nullopt, Expectation::Falsified,
      counterexample_report(g, parse("r -> p"), cfg)));
  result.items.push_back(make_item(
      "counterexample_r_implies_q", std::nullopt, Expectation::Falsified,
      counterexample_report(g, parse("r -> q"), cfg)));
  result.items.push_back(make_item(
      "homogenized_agreement", set.homogenized.tag, Expectation::NotFalsified,
      geo::check_implication(g, {AtomId::R}, agreement, cfg)));

  result.all_met = true;
  for (const BatteryItem& item : result.items) result.all_met = result.all_met && item.met;
  return result;
}

BatteryResult verify_capstone(const geo::SamplerConfig& cfg) {
  const CapstoneSpec spec = capstone_spec();
  const Formula r = Formula::atom("r");
  const Formula p_or_q = parse("p | q");

  BatteryResult result;
  result.group = "capstone";

  auto relabel = [](geo::VerificationReport report, Group slice, Group eval_side,
                    const std::string& conclusion_text) {
    report.group = "capstone";
    report.hypothesis = std::string("group ") + geo::to_string(slice) + ": t & r";
    report.conclusion = conclusion_text;
    (void)eval_side;
    return report;
  };

  result.items.push_back(make_item(
      "forward", std::nullopt, Expectation::NotFalsified,
      relabel(geo::check_slice_implication(spec.left_group, spec.right_group, r, cfg),
              spec.left_group, spec.right_group,
              std::string("group ") + geo::to_string(spec.right_group) + ": r")));
  result.items.push_back(make_item(
      "forward_dispatch", std::nullopt, Expectation::NotFalsified,
      relabel(geo::check_slice_implication(spec.left_group, spec.left_group, p_or_q, cfg),
              spec.left_group, spec.left_group, "p | q")));
  result.items.push_back(make_item(
      "backward", std::nullopt, Expectation::NotFalsified,
      relabel(geo::check_slice_implication(spec.right_group, spec.left_group, r, cfg),
              spec.right_group, spec.left_group,
              std::string("group ") + geo::to_string(spec.left_group) + ": r")));
  result.items.push_back(make_item(
      "backward_dispatch", std::nullopt, Expectation::NotFalsified,
      relabel(geo::check_slice_implication(spec.right_group, spec.right_group, p_or_q, cfg),
              spec.right_group, spec.right_group, "p | q")));

  result.all_met = true;
  for (const BatteryItem& item : result.items) result.all_met = result.all_met && item.met;
  return result;
}

}  // namespace lc::catalog
