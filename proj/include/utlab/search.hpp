#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "utlab/classes.hpp"
#include "utlab/functionals.hpp"
#include "utlab/rational.hpp"
#include "utlab/schwarz.hpp"

namespace utlab {

/// Maximize |functional(f^{-1})| over a parametrized class. The search space
/// is (r0, th0, r1, th1, r2, th2) with gamma_k = r_k e^{i th_k}, r_k in [0, 1].
struct SearchProblem {
  ClassId cls = ClassId::R;
  FunctionalId functional = FunctionalId::TS22;
  int starts = 64;
  int max_iters = 2000;
  std::uint64_t seed = 0;
  /// Stagnation tolerance on the spread of objective values in the simplex.
  double tol = 1e-10;
  /// Additional starting points, run after the seeded starts.
  std::vector<SchurParams> extra_starts;
  /// Worker threads; the result does not depend on it.
  unsigned threads = 1;
};

/// Throws ValidationError unless cls is R/Starlike/Convex, functional is
/// TS22/TS23/TS32 and the budget fields are positive.
void validate(const SearchProblem& problem);

struct SearchResult {
  double best_value = 0.0;
  SchurParams argmax{};
  std::int64_t evaluations = 0;
  /// best_value minus the exact bound.
  double gap = 0.0;
  std::vector<double> per_start_bests;
  /// Largest objective value seen at any evaluation of any start.
  double max_observed = 0.0;
  /// The start that produced best_value stagnated within its budget.
  bool converged = false;
};

struct BoundRecord {
  ClassId cls;
  FunctionalId functional;
  Rational exact_bound;
  /// Earlier published (incorrect or non-sharp) claim for the same quantity.
  std::optional<double> prior_claim;
  std::string source;
  std::string witness;
};

/// Sharp bounds on |functional(f^{-1})|: the three searched functionals for
/// R, Starlike and Convex (with the prior claims they correct) plus the class
/// S symmetric bounds.
const std::vector<BoundRecord>& bound_table();
std::optional<Rational> exact_bound(ClassId cls, FunctionalId functional);

/// |functional| at inverse_map(cls, schur_to_coeffs(g)).
double objective(const SearchProblem& problem, const SchurParams& g);

/// Deterministic multistart Nelder-Mead. Start k is seeded from (seed, k).
SearchResult maximize(const SearchProblem& problem);

/// Largest grid point count grid_search will evaluate.
inline constexpr std::int64_t kGridBudget = 100'000'000;

struct GridResult {
  double value = 0.0;
  SchurParams argmax{};
  std::int64_t evaluations = 0;
};

/// Exhaustive product grid: radii j/n (j = 0..n) and angles 2 pi j / n
/// (j = 0..n-1) per gamma. Grids for n and any multiple of n are nested.
/// Throws ValidationError for resolution < 4 and BudgetError past kGridBudget.
GridResult grid_search(const SearchProblem& problem, int resolution);
double grid_oracle(const SearchProblem& problem, int resolution);

enum class Verdict { Violated, NotSharp, Consistent };

std::string_view to_string(Verdict verdict);

/// Relative margin by which the numeric maximum must undercut a prior claim
/// before the claim is called non-sharp.
inline constexpr double kNotSharpMargin = 1e-4;
/// Absolute excess over a prior claim that counts as a violation.
inline constexpr double kViolationMargin = 1e-6;

struct RefutationSettings {
  int starts = 64;
  int max_iters = 2000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct RefutationRow {
  BoundRecord record;
  SearchResult search;
  /// Best catalog witness value for the cell (0 when the class has none).
  double witness_value = 0.0;
  std::string witness_label;
  Verdict verdict = Verdict::Consistent;
};

/// Judges every prior claim in bound_table() against a fresh search and the
/// catalog witnesses.
std::vector<RefutationRow> refutation_report(const RefutationSettings& settings = {});

/// VIOLATED if observed > claim + kViolationMargin, NOT_SHARP if
/// observed < claim (1 - kNotSharpMargin), CONSISTENT otherwise.
Verdict judge(double observed, double claim);

}  // namespace utlab
