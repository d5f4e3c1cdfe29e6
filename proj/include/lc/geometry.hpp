#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lc/formula.hpp"
#include "lc/rng.hpp"

namespace lc::geo {

/// Degenerate configuration (collapsed triangle, coincident points, ...).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A sampling or solving budget was exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

/// Unsigned angle at vertex q of the path p-q-r, in (0, pi). The cosine is
/// clamped to [-1, 1] before acos.
double angle_at(Point p, Point q, Point r);

struct DegeneracyBounds {
  double min_area_ratio = 1e-6;  // |twice signed area| / perimeter^2
  double min_angle = 1e-3;       // radians
};

/// Three labeled planar points, guaranteed nondegenerate on construction.
class Triangle {
 public:
  Triangle(Point a, Point b, Point c, const DegeneracyBounds& bounds = {});

  static std::optional<Triangle> try_make(Point a, Point b, Point c,
                                          const DegeneracyBounds& bounds = {});

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  const Point& c() const { return c_; }

  double length_ab() const { return ab_; }
  double length_bc() const { return bc_; }
  double length_ca() const { return ca_; }
  double perimeter() const { return ab_ + bc_ + ca_; }

  double angle_at_a() const { return angle_at(b_, a_, c_); }
  double angle_at_b() const { return angle_at(a_, b_, c_); }
  double angle_at_c() const { return angle_at(a_, c_, b_); }

  /// Same triangle with labels A and B exchanged.
  Triangle swapped_ab() const;

 private:
  Triangle(Point a, Point b, Point c, double ab, double bc, double ca);

  Point a_, b_, c_;
  double ab_, bc_, ca_;
};

/// Circumcenter of the triangle p-q-r.
Point circumcenter(Point p, Point q, Point r);

enum class Group { I = 1, II = 2, III = 3, IV = 4 };
enum class AtomId { P, Q, R };

const char* to_string(Group g);
char to_char(AtomId a);

struct DerivedPoints {
  Group group = Group::I;
  // Group I
  std::optional<Point> median_foot;  // midpoint of BC
  // Group II
  std::optional<Point> bisector_foot_a;  // internal bisector from A, on BC
  std::optional<Point> bisector_foot_b;  // internal bisector from B, on AC
  std::optional<Point> incenter;
  // Group III
  std::optional<Point> altitude_foot;  // from C onto line AB
  std::optional<Point> midpoint_ab;
  // Group IV
  std::optional<Point> side_mid_bc;
  std::optional<Point> side_mid_ca;
  std::optional<Point> side_mid_ab;
  std::optional<Point> medial_circumcenter;
};

/// Derived points used by the given group's statements.
DerivedPoints construct(Group g, const Triangle& t);

/// holds is residual < tol. Residuals are scale-normalized: angle residuals
/// in radians, length residuals divided by the perimeter.
struct PredicateResult {
  bool holds = false;
  double residual = 0.0;
};

/// Evaluates one of the group's statements p/q/r on a triangle.
PredicateResult predicate(Group g, AtomId atom, const Triangle& t, const DerivedPoints& dp,
                          double tol);

/// Signed variant of the group's conclusion residual r, used for root
/// bracketing along one-parameter triangle families.
double signed_conclusion_residual(Group g, const Triangle& t, const DerivedPoints& dp);

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::uint64_t sample_count = 10000;
  double tol_solve = 1e-12;
  double tol_verify = 1e-9;
  DegeneracyBounds bounds{};

  void validate() const;
};

/// Canonical-pose sample: A=(0,0), B=(1,0), C uniform in the box
/// [-1,2] x (0,2], rejected until the degeneracy bounds hold. Deterministic
/// per stream.
Triangle sample_triangle(const SamplerConfig& cfg, RngStream& stream);

/// A triangle on the group's t-and-r slice: the signed conclusion residual is
/// bisected below tol_solve along random chords between apexes of opposite
/// sign.
Triangle solve_on_slice(Group g, const SamplerConfig& cfg, RngStream& stream);

/// Root of f on [0,1] given f(0), f(1) of opposite sign; bisects until
/// |f| < tol. Exposed for direct testing of the no-sign-change error path.
double bisect_to_zero(const std::function<double(double)>& f, double f0, double f1, double tol);

struct FailureCase {
  Point a, b, c;                           // the witness triangle
  std::map<std::string, double> residuals; // per-atom residuals at the witness
};

enum class Verdict { NotFalsified, Falsified };

const char* to_string(Verdict v);

/// Outcome of one Monte-Carlo implication run. Deterministic for equal
/// configs regardless of thread count.
struct VerificationReport {
  std::string group;
  std::string hypothesis;
  std::string conclusion;
  std::uint64_t samples_attempted = 0;
  std::uint64_t samples_accepted = 0;
  std::uint64_t premise_rejected = 0;
  /// Samples whose conclusion-atom residual fell inside the ambiguity band
  /// [tol_verify/10, tol_verify*10]; excluded from pass/fail counting.
  std::uint64_t near_threshold = 0;
  double max_conclusion_residual = 0.0;
  std::map<std::string, double> max_atom_residuals;
  std::uint64_t failure_count = 0;
  std::vector<FailureCase> failures;  // stored witnesses, capped
  Verdict verdict = Verdict::NotFalsified;
};

inline constexpr std::size_t kMaxStoredFailures = 8;

/// Monte-Carlo check of (t and premise atoms) -> conclusion over the group's
/// statements. Premise-satisfying triangles are generated constructively for
/// p/q and by slice solving for r; conclusion atoms are booleanized at
/// tol_verify with the near-threshold band excluded.
VerificationReport check_implication(Group g, const std::set<AtomId>& premise,
                                     const Formula& conclusion, const SamplerConfig& cfg);

/// Same as check_implication with premise {r} of slice_group, but the
/// conclusion atoms are bound to conclusion_group's statements. Used for the
/// cross-group capstone runs.
VerificationReport check_slice_implication(Group slice_group, Group conclusion_group,
                                           const Formula& conclusion, const SamplerConfig& cfg);

/// Searches the t-and-r slice for a triangle that robustly falsifies the
/// claim (every claim atom outside the ambiguity band). Returns the first hit
/// in sample-index order, or nullopt once the budget is spent.
std::optional<FailureCase> find_counterexample(Group g, const Formula& claim,
                                               const SamplerConfig& cfg);

/// Number of worker threads Monte-Carlo runs will use (hardware concurrency
/// capped by the LOGIC_COMPOSER_THREADS environment variable).
unsigned effective_thread_count();

}  // namespace lc::geo
