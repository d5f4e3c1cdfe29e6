#include "lc/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>

#include "lc/text.hpp"

namespace lc::geo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Point kBaseA{0.0, 0.0};
constexpr Point kBaseB{1.0, 0.0};
constexpr std::uint64_t kRejectionBudget = 10000;
constexpr int kSolveAttempts = 32;
constexpr int kEndpointDrawBudget = 256;
constexpr double kPointEps = 1e-13;

Point lerp(Point a, Point b, double u) {
  return {(1.0 - u) * a.x + u * b.x, (1.0 - u) * a.y + u * b.y};
}

Point normalized(Point v) {
  double n = norm(v);
  if (n < kPointEps) throw GeometryError("cannot normalize a near-zero vector");
  return {v.x / n, v.y / n};
}

/// Unit direction of the internal bisector of the angle at C.
Point internal_bisector_dir(const Triangle& t) {
  Point ua = normalized(t.a() - t.c());
  Point ub = normalized(t.b() - t.c());
  return normalized(ua + ub);
}

}  // namespace

double angle_at(Point p, Point q, Point r) {
  Point u = p - q;
  Point v = r - q;
  double nu = norm(u);
  double nv = norm(v);
  if (nu < kPointEps || nv < kPointEps) {
    throw GeometryError("angle vertex coincides with a ray endpoint");
  }
  double c = std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
  return std::acos(c);
}

Triangle::Triangle(Point a, Point b, Point c, double ab, double bc, double ca)
    : a_(a), b_(b), c_(c), ab_(ab), bc_(bc), ca_(ca) {}

std::optional<Triangle> Triangle::try_make(Point a, Point b, Point c,
                                           const DegeneracyBounds& bounds) {
  const double ab = distance(a, b);
  const double bc = distance(b, c);
  const double ca = distance(c, a);
  const double perimeter = ab + bc + ca;
  if (perimeter < kPointEps) return std::nullopt;
  const double area2 = std::abs(cross(b - a, c - a));
  if (area2 / (perimeter * perimeter) < bounds.min_area_ratio) return std::nullopt;
  Triangle t(a, b, c, ab, bc, ca);
  if (t.angle_at_a() < bounds.min_angle || t.angle_at_b() < bounds.min_angle ||
      t.angle_at_c() < bounds.min_angle) {
    return std::nullopt;
  }
  return t;
}

Triangle::Triangle(Point a, Point b, Point c, const DegeneracyBounds& bounds) : Triangle(a, b, c, 0, 0, 0) {
  auto made = try_make(a, b, c, bounds);
  if (!made) throw GeometryError("degenerate triangle");
  *this = *made;
}

Triangle Triangle::swapped_ab() const { return Triangle(b_, a_, c_, ab_, ca_, bc_); }

Point circumcenter(Point p, Point q, Point r) {
  const Point bp = q - p;
  const Point cp = r - p;
  const double d = 2.0 * cross(bp, cp);
  const double scale = dot(bp, bp) + dot(cp, cp);
  if (std::abs(d) < kPointEps * scale) {
    throw GeometryError("circumcenter of near-collinear points");
  }
  const double b2 = dot(bp, bp);
  const double c2 = dot(cp, cp);
  const double ux = (cp.y * b2 - bp.y * c2) / d;
  const double uy = (bp.x * c2 - cp.x * b2) / d;
  return {p.x + ux, p.y + uy};
}

const char* to_string(Group g) {
  switch (g) {
    case Group::I: return "I";
    case Group::II: return "II";
    case Group::III: return "III";
    case Group::IV: return "IV";
  }
  return "?";
}

char to_char(AtomId a) {
  switch (a) {
    case AtomId::P: return 'p';
    case AtomId::Q: return 'q';
    case AtomId::R: return 'r';
  }
  return '?';
}

const char* to_string(Verdict v) {
  return v == Verdict::NotFalsified ? "not-falsified" : "falsified";
}

DerivedPoints construct(Group g, const Triangle& t) {
  DerivedPoints dp;
  dp.group = g;
  switch (g) {
    case Group::I:
      dp.median_foot = midpoint(t.b(), t.c());
      break;
    case Group::II: {
      const double a = t.length_bc();
      const double b = t.length_ca();
      const double c = t.length_ab();
      // Internal bisector feet divide the opposite side in the ratio of the
      // adjacent sides.
      dp.bisector_foot_a = (1.0 / (b + c)) * (b * t.b() + c * t.c());
      dp.bisector_foot_b = (1.0 / (a + c)) * (a * t.a() + c * t.c());
      dp.incenter = (1.0 / (a + b + c)) * (a * t.a() + b * t.b() + c * t.c());
      break;
    }
    case Group::III: {
      const Point u = normalized(t.b() - t.a());
      dp.altitude_foot = t.a() + dot(t.c() - t.a(), u) * u;
      dp.midpoint_ab = midpoint(t.a(), t.b());
      break;
    }
    case Group::IV:
      dp.side_mid_bc = midpoint(t.b(), t.c());
      dp.side_mid_ca = midpoint(t.c(), t.a());
      dp.side_mid_ab = midpoint(t.a(), t.b());
      dp.medial_circumcenter = circumcenter(*dp.side_mid_bc, *dp.side_mid_ca, *dp.side_mid_ab);
      break;
  }
  return dp;
}

namespace {

double conclusion_residual_signed(Group g, const Triangle& t, const DerivedPoints& dp) {
  switch (g) {
    case Group::I:
      return angle_at(*dp.median_foot, t.a(), t.c()) + t.angle_at_b() - kPi / 2.0;
    case Group::II:
      return (distance(*dp.incenter, *dp.bisector_foot_a) -
              distance(*dp.incenter, *dp.bisector_foot_b)) /
             t.perimeter();
    case Group::III: {
      // Labeling convention: compare angle ACM with angle BCH only after
      // relabeling so that the angle at A is the larger one.
      const bool swap = t.angle_at_a() < t.angle_at_b();
      const Point& first = swap ? t.b() : t.a();
      const Point& second = swap ? t.a() : t.b();
      return angle_at(first, t.c(), *dp.midpoint_ab) - angle_at(second, t.c(), *dp.altitude_foot);
    }
    case Group::IV: {
      // Perpendicular distance from the medial circumcenter to the internal
      // bisector line of the angle at C, signed by side.
      const Point u = internal_bisector_dir(t);
      return cross(u, *dp.medial_circumcenter - t.c()) / t.perimeter();
    }
  }
  throw GeometryError("unknown group");
}

}  // namespace

double signed_conclusion_residual(Group g, const Triangle& t, const DerivedPoints& dp) {
  if (dp.group != g) throw GeometryError("derived points were built for a different group");
  return conclusion_residual_signed(g, t, dp);
}

PredicateResult predicate(Group g, AtomId atom, const Triangle& t, const DerivedPoints& dp,
                          double tol) {
  if (dp.group != g) throw GeometryError("derived points were built for a different group");
  double residual = 0.0;
  switch (atom) {
    case AtomId::P:
      residual = g == Group::I
                     ? std::abs(t.length_ca() - t.length_ab()) / t.perimeter()
                     : std::abs(t.length_ca() - t.length_bc()) / t.perimeter();
      break;
    case AtomId::Q: {
      const double angle = g == Group::I ? t.angle_at_a() : t.angle_at_c();
      const double target = (g == Group::I || g == Group::III) ? kPi / 2.0 : kPi / 3.0;
      residual = std::abs(angle - target);
      break;
    }
    case AtomId::R:
      residual = std::abs(conclusion_residual_signed(g, t, dp));
      break;
  }
  return {residual < tol, residual};
}

void SamplerConfig::validate() const {
  if (sample_count < 1) throw ConfigError("sample_count must be at least 1");
  if (!(tol_solve > 0.0) || !(tol_verify > 0.0)) throw ConfigError("tolerances must be positive");
  if (!(tol_solve < tol_verify)) throw ConfigError("tol_solve must be smaller than tol_verify");
  if (!(bounds.min_area_ratio > 0.0) || !(bounds.min_angle > 0.0)) {
    throw ConfigError("degeneracy bounds must be positive");
  }
}

Triangle sample_triangle(const SamplerConfig& cfg, RngStream& stream) {
  for (std::uint64_t tries = 0; tries < kRejectionBudget; ++tries) {
    const Point c{stream.next_in(-1.0, 2.0), stream.next_in(0.0, 2.0)};
    if (auto t = Triangle::try_make(kBaseA, kBaseB, c, cfg.bounds)) return *t;
  }
  throw BudgetError("triangle sampler exhausted its rejection budget");
}

namespace {

Triangle sample_p_family(Group g, const SamplerConfig& cfg, RngStream& stream) {
  for (std::uint64_t tries = 0; tries < kRejectionBudget; ++tries) {
    Point c;
    if (g == Group::I) {
      // AC = AB = 1: apex on the unit circle around A.
      const double theta = stream.next_in(0.15, kPi - 0.15);
      c = {std::cos(theta), std::sin(theta)};
    } else {
      // AC = BC: apex on the perpendicular bisector of AB.
      c = {0.5, stream.next_in(0.08, 2.0)};
    }
    if (auto t = Triangle::try_make(kBaseA, kBaseB, c, cfg.bounds)) return *t;
  }
  throw BudgetError("isosceles family sampler exhausted its rejection budget");
}

Triangle sample_q_family(Group g, const SamplerConfig& cfg, RngStream& stream) {
  for (std::uint64_t tries = 0; tries < kRejectionBudget; ++tries) {
    Point c;
    if (g == Group::I) {
      // Right angle at A.
      c = {0.0, stream.next_in(0.08, 2.5)};
    } else {
      // Fixed angle at C: choose the angle at A, fix the angle sum.
      const double gamma = g == Group::III ? kPi / 2.0 : kPi / 3.0;
      const double alpha = stream.next_in(0.1, kPi - gamma - 0.1);
      const double beta = kPi - gamma - alpha;
      const double side_ca = std::sin(beta) / std::sin(gamma);  // law of sines, AB = 1
      c = {side_ca * std::cos(alpha), side_ca * std::sin(alpha)};
    }
    if (auto t = Triangle::try_make(kBaseA, kBaseB, c, cfg.bounds)) return *t;
  }
  throw BudgetError("fixed-angle family sampler exhausted its rejection budget");
}

Triangle fixed_pq_triangle(Group g, const SamplerConfig& cfg) {
  // Both p and q pin the shape up to similarity; use the canonical pose.
  Point c;
  switch (g) {
    case Group::I: c = {0.0, 1.0}; break;                        // right isosceles at A
    case Group::II:
    case Group::IV: c = {0.5, std::sqrt(3.0) / 2.0}; break;      // equilateral
    case Group::III: c = {0.5, 0.5}; break;                      // right isosceles at C
  }
  return Triangle(kBaseA, kBaseB, c, cfg.bounds);
}

}  // namespace

double bisect_to_zero(const std::function<double(double)>& f, double f0, double f1, double tol) {
  if (std::abs(f0) < tol) return 0.0;
  if (std::abs(f1) < tol) return 1.0;
  if ((f0 > 0.0) == (f1 > 0.0)) {
    throw BudgetError("bisection endpoints do not bracket a sign change");
  }
  double lo = 0.0;
  double hi = 1.0;
  const bool lo_positive = f0 > 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // interval exhausted in double precision
    const double fm = f(mid);
    if (std::abs(fm) < tol) return mid;
    if ((fm > 0.0) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw BudgetError("bisection failed to reach the requested tolerance");
}

namespace {

/// Sign function used for chord bracketing on the conclusion manifold. For
/// groups I, II and IV this is the signed conclusion residual itself. Group
/// III's residual is even across the isosceles branch (the labeling
/// convention mirrors the triangle), so no chord would bracket that branch by
/// sign; the product of the two branch coordinates is used instead. The
/// stopping criterion is always the actual conclusion residual.
double slice_sign(Group g, const Triangle& t, const DerivedPoints& dp) {
  if (g == Group::III) {
    return (t.angle_at_a() - t.angle_at_b()) * (t.angle_at_c() - kPi / 2.0);
  }
  return conclusion_residual_signed(g, t, dp);
}

struct SliceProbe {
  double sign = 0.0;
  double residual = 0.0;
};

}  // namespace

Triangle solve_on_slice(Group g, const SamplerConfig& cfg, RngStream& stream) {
  auto probe = [&](Point c) -> std::optional<SliceProbe> {
    auto t = Triangle::try_make(kBaseA, kBaseB, c, cfg.bounds);
    if (!t) return std::nullopt;
    const auto dp = construct(g, *t);
    return SliceProbe{slice_sign(g, *t, dp),
                      std::abs(conclusion_residual_signed(g, *t, dp))};
  };
  auto draw_apex = [&]() -> Point {
    return {stream.next_in(-1.0, 2.0), stream.next_in(0.0, 2.0)};
  };

  for (int attempt = 0; attempt < kSolveAttempts; ++attempt) {
    std::optional<std::pair<Point, SliceProbe>> first;
    for (int d = 0; d < kEndpointDrawBudget && !first; ++d) {
      const Point c = draw_apex();
      if (auto s = probe(c)) first = {c, *s};
    }
    if (!first) continue;
    if (first->second.residual < cfg.tol_solve) {
      return Triangle(kBaseA, kBaseB, first->first, cfg.bounds);
    }
    std::optional<std::pair<Point, SliceProbe>> second;
    for (int d = 0; d < kEndpointDrawBudget && !second; ++d) {
      const Point c = draw_apex();
      const auto s = probe(c);
      if (!s) continue;
      if (s->residual < cfg.tol_solve) return Triangle(kBaseA, kBaseB, c, cfg.bounds);
      if ((s->sign > 0.0) != (first->second.sign > 0.0)) second = {c, *s};
    }
    if (!second) continue;

    // Bisect the chord on the bracketing sign until the conclusion residual
    // meets the solver tolerance.
    const Point c0 = first->first;
    const Point c1 = second->first;
    const bool lo_positive = first->second.sign > 0.0;
    double lo = 0.0;
    double hi = 1.0;
    bool solved = false;
    Point result{};
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const Point c = lerp(c0, c1, mid);
      const auto s = probe(c);
      if (!s) break;  // degenerate interior point; retry with fresh endpoints
      if (s->residual < cfg.tol_solve) {
        solved = true;
        result = c;
        break;
      }
      if ((s->sign > 0.0) == lo_positive) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (solved) return Triangle(kBaseA, kBaseB, result, cfg.bounds);
  }
  throw BudgetError(std::string("slice solver found no sign change for group ") + to_string(g));
}

unsigned effective_thread_count() {
  // Default: hardware concurrency, at most 8 workers. LOGIC_COMPOSER_THREADS
  // sets the worker ceiling explicitly (clamped to [1, 64]).
  if (const char* env = std::getenv("LOGIC_COMPOSER_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<unsigned>(std::min<long>(value, 64));
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::min(hw, 8u);
}

namespace {

/// Runs fn(i) for i in [0, n) across worker threads. Results must be written
/// to per-index slots; any exceptions are rethrown in index order, so the
/// outcome does not depend on scheduling.
void parallel_indices(std::uint64_t n, const std::function<void(std::uint64_t)>& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(effective_thread_count(), n));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
}

const std::vector<std::string>& atom_names() {
  static const std::vector<std::string> names{"p", "q", "r"};
  return names;
}

std::map<std::string, double> all_residuals(Group g, const Triangle& t) {
  const DerivedPoints dp = construct(g, t);
  std::map<std::string, double> out;
  out["p"] = predicate(g, AtomId::P, t, dp, 1.0).residual;
  out["q"] = predicate(g, AtomId::Q, t, dp, 1.0).residual;
  out["r"] = predicate(g, AtomId::R, t, dp, 1.0).residual;
  return out;
}

void require_pqr_formula(const Formula& f, const char* what) {
  for (const auto& name : atoms(f)) {
    if (name != "p" && name != "q" && name != "r") {
      throw ConfigError(std::string(what) + " must range over atoms p, q, r; found '" + name +
                        "'");
    }
  }
}

Triangle generate_premise_sample(Group g, const std::set<AtomId>& premise,
                                 const SamplerConfig& cfg, RngStream& stream) {
  if (premise.count(AtomId::R)) return solve_on_slice(g, cfg, stream);
  const bool has_p = premise.count(AtomId::P) > 0;
  const bool has_q = premise.count(AtomId::Q) > 0;
  if (has_p && has_q) return fixed_pq_triangle(g, cfg);
  if (has_p) return sample_p_family(g, cfg, stream);
  if (has_q) return sample_q_family(g, cfg, stream);
  return sample_triangle(cfg, stream);
}

/// Residual of the witnesses that make a true formula true: how far from
/// exact equality the supporting atoms sit. Only meaningful when eval(f) is
/// true under the assignment.
double witness_residual(const Formula& f, const Assignment& asg,
                        const std::map<std::string, double>& residuals) {
  switch (f.kind()) {
    case Kind::Atom:
      return residuals.at(f.name());
    case Kind::Not:
      return 0.0;
    case Kind::And: {
      double worst = 0.0;
      for (const Formula& part : f.parts()) {
        worst = std::max(worst, witness_residual(part, asg, residuals));
      }
      return worst;
    }
    case Kind::Or: {
      double best = std::numeric_limits<double>::infinity();
      for (const Formula& part : f.parts()) {
        if (eval(part, asg)) best = std::min(best, witness_residual(part, asg, residuals));
      }
      return std::isfinite(best) ? best : 0.0;
    }
    case Kind::Xor:
      return eval(f.lhs(), asg) ? witness_residual(f.lhs(), asg, residuals)
                                : witness_residual(f.rhs(), asg, residuals);
    case Kind::Implies:
      return eval(f.lhs(), asg) ? witness_residual(f.rhs(), asg, residuals) : 0.0;
    case Kind::Iff:
      if (eval(f.lhs(), asg)) {
        return std::max(witness_residual(f.lhs(), asg, residuals),
                        witness_residual(f.rhs(), asg, residuals));
      }
      return 0.0;
  }
  return 0.0;
}

struct SampleEval {
  enum class Status { PremiseRejected, NearThreshold, Pass, Fail };
  Status status = Status::PremiseRejected;
  double witness = 0.0;
  std::map<std::string, double> residuals;
  Point a, b, c;
};

std::string hypothesis_text(const std::set<AtomId>& premise) {
  std::string out = "t";
  for (AtomId atom : {AtomId::P, AtomId::Q, AtomId::R}) {
    if (premise.count(atom)) {
      out += " & ";
      out += to_char(atom);
    }
  }
  return out;
}

VerificationReport run_check(Group sample_group, Group eval_group,
                             const std::set<AtomId>& premise, const Formula& conclusion,
                             const SamplerConfig& cfg) {
  cfg.validate();
  require_pqr_formula(conclusion, "conclusion");
  const auto conclusion_atoms = atoms(conclusion);
  const double band_lo = cfg.tol_verify / 10.0;
  const double band_hi = cfg.tol_verify * 10.0;

  std::vector<SampleEval> evals(cfg.sample_count);
  parallel_indices(cfg.sample_count, [&](std::uint64_t i) {
    RngStream stream(cfg.seed, i);
    const Triangle t = generate_premise_sample(sample_group, premise, cfg, stream);
    SampleEval ev;
    ev.a = t.a();
    ev.b = t.b();
    ev.c = t.c();

    const DerivedPoints dp = construct(sample_group, t);
    for (AtomId atom : premise) {
      if (!predicate(sample_group, atom, t, dp, cfg.tol_verify).holds) {
        ev.status = SampleEval::Status::PremiseRejected;
        evals[i] = std::move(ev);
        return;
      }
    }

    ev.residuals = all_residuals(eval_group, t);
    for (const auto& name : conclusion_atoms) {
      const double res = ev.residuals.at(name);
      if (res >= band_lo && res <= band_hi) {
        ev.status = SampleEval::Status::NearThreshold;
        evals[i] = std::move(ev);
        return;
      }
    }

    Assignment asg;
    for (const auto& name : atom_names()) asg[name] = ev.residuals.at(name) < cfg.tol_verify;
    if (eval(conclusion, asg)) {
      ev.status = SampleEval::Status::Pass;
      ev.witness = witness_residual(conclusion, asg, ev.residuals);
    } else {
      ev.status = SampleEval::Status::Fail;
    }
    evals[i] = std::move(ev);
  });

  VerificationReport report;
  report.group = to_string(sample_group);
  report.hypothesis = hypothesis_text(premise);
  report.conclusion = print(conclusion);
  report.samples_attempted = cfg.sample_count;
  for (const SampleEval& ev : evals) {
    switch (ev.status) {
      case SampleEval::Status::PremiseRejected:
        ++report.premise_rejected;
        break;
      case SampleEval::Status::NearThreshold:
        ++report.near_threshold;
        break;
      case SampleEval::Status::Pass:
      case SampleEval::Status::Fail:
        ++report.samples_accepted;
        for (const auto& [name, res] : ev.residuals) {
          auto [it, inserted] = report.max_atom_residuals.try_emplace(name, res);
          if (!inserted) it->second = std::max(it->second, res);
        }
        if (ev.status == SampleEval::Status::Pass) {
          report.max_conclusion_residual = std::max(report.max_conclusion_residual, ev.witness);
        } else {
          ++report.failure_count;
          if (report.failures.size() < kMaxStoredFailures) {
            report.failures.push_back({ev.a, ev.b, ev.c, ev.residuals});
          }
        }
        break;
    }
  }
  report.verdict = report.failure_count == 0 ? Verdict::NotFalsified : Verdict::Falsified;
  return report;
}

}  // namespace

VerificationReport check_implication(Group g, const std::set<AtomId>& premise,
                                     const Formula& conclusion, const SamplerConfig& cfg) {
  return run_check(g, g, premise, conclusion, cfg);
}

VerificationReport check_slice_implication(Group slice_group, Group conclusion_group,
                                           const Formula& conclusion, const SamplerConfig& cfg) {
  return run_check(slice_group, conclusion_group, {AtomId::R}, conclusion, cfg);
}

std::optional<FailureCase> find_counterexample(Group g, const Formula& claim,
                                               const SamplerConfig& cfg) {
  cfg.validate();
  require_pqr_formula(claim, "claim");
  const auto claim_atoms = atoms(claim);
  const double band_lo = cfg.tol_verify / 10.0;
  const double band_hi = cfg.tol_verify * 10.0;
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
    RngStream stream(cfg.seed, i);
    const Triangle t = solve_on_slice(g, cfg, stream);
    const auto residuals = all_residuals(g, t);
    bool ambiguous = false;
    for (const auto& name : claim_atoms) {
      const double res = residuals.at(name);
      if (res >= band_lo && res <= band_hi) {
        ambiguous = true;
        break;
      }
    }
    if (ambiguous) continue;
    Assignment asg;
    for (const auto& name : atom_names()) asg[name] = residuals.at(name) < cfg.tol_verify;
    if (!eval(claim, asg)) {
      return FailureCase{t.a(), t.b(), t.c(), residuals};
    }
  }
  return std::nullopt;
}

}  // namespace lc::geo
