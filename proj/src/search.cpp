#include "utlab/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

#include "utlab/errors.hpp"

namespace utlab {

namespace {

constexpr int kDim = 6;
using Point = std::array<double, kDim>;

SchurParams to_params(const Point& x) {
  auto gamma = [&](int k) { return std::polar(std::clamp(x[2 * k], 0.0, 1.0), x[2 * k + 1]); };
  return {gamma(0), gamma(1), gamma(2)};
}

Point to_point(const SchurParams& g) {
  auto put = [](Complex z, double& r, double& th) {
    r = std::min(std::abs(z), 1.0);
    th = std::arg(z);
  };
  Point x{};
  put(g.gamma0, x[0], x[1]);
  put(g.gamma1, x[2], x[3]);
  put(g.gamma2, x[4], x[5]);
  return x;
}

struct LocalOutcome {
  double best = 0.0;
  Point x{};
  std::int64_t evaluations = 0;
  double max_observed = 0.0;
  bool converged = false;
};

/// Nelder-Mead on -objective. When the simplex stagnates it is rebuilt around
/// the incumbent with a smaller step; a rebuild that gains less than tol ends
/// the run as converged.
LocalOutcome nelder_mead(const SearchProblem& problem, const Point& start) {
  LocalOutcome out;
  auto value = [&](const Point& x) {
    const double v = objective(problem, to_params(x));
    ++out.evaluations;
    out.max_observed = std::max(out.max_observed, v);
    return -v;
  };

  struct Vertex {
    Point x;
    double h;
  };
  std::array<Vertex, kDim + 1> simplex;

  auto build = [&](const Point& base, double scale) {
    simplex[0] = {base, value(base)};
    for (int i = 0; i < kDim; ++i) {
      Point x = base;
      if (i % 2 == 0) {
        const double step = 0.2 * scale;
        x[i] += x[i] > 0.5 ? -step : step;
      } else {
        x[i] += 0.5 * scale;
      }
      simplex[i + 1] = {x, value(x)};
    }
  };

  double scale = 1.0;
  build(start, scale);
  double last_plateau = std::numeric_limits<double>::infinity();

  for (int iter = 0; iter < problem.max_iters; ++iter) {
    std::sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) { return a.h < b.h; });
    if (simplex.back().h - simplex.front().h <= problem.tol) {
      if (last_plateau - simplex.front().h <= problem.tol) {
        out.converged = true;
        break;
      }
      last_plateau = simplex.front().h;
      scale *= 0.1;
      build(simplex.front().x, scale);
      continue;
    }

    Point centroid{};
    for (int i = 0; i < kDim; ++i) {
      for (int d = 0; d < kDim; ++d) centroid[d] += simplex[i].x[d] / kDim;
    }
    auto along = [&](double t) {
      Point p;
      for (int d = 0; d < kDim; ++d) p[d] = centroid[d] + t * (simplex.back().x[d] - centroid[d]);
      return p;
    };

    const Point reflected = along(-1.0);
    const double h_reflected = value(reflected);
    if (h_reflected < simplex.front().h) {
      const Point expanded = along(-2.0);
      const double h_expanded = value(expanded);
      simplex.back() = h_expanded < h_reflected ? Vertex{expanded, h_expanded} : Vertex{reflected, h_reflected};
    } else if (h_reflected < simplex[kDim - 1].h) {
      simplex.back() = {reflected, h_reflected};
    } else {
      const bool outside = h_reflected < simplex.back().h;
      const Point contracted = along(outside ? -0.5 : 0.5);
      const double h_contracted = value(contracted);
      if (h_contracted < std::min(h_reflected, simplex.back().h)) {
        simplex.back() = {contracted, h_contracted};
      } else {
        for (int i = 1; i <= kDim; ++i) {
          for (int d = 0; d < kDim; ++d) {
            simplex[i].x[d] = simplex[0].x[d] + 0.5 * (simplex[i].x[d] - simplex[0].x[d]);
          }
          simplex[i].h = value(simplex[i].x);
        }
      }
    }
  }

  const auto best = std::min_element(simplex.begin(), simplex.end(),
                                     [](const Vertex& a, const Vertex& b) { return a.h < b.h; });
  out.best = -best->h;
  out.x = best->x;
  return out;
}

/// Runs task(i) for i in [0, count) on up to `threads` workers.
template <class Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
}

}  // namespace

void validate(const SearchProblem& problem) {
  if (problem.cls == ClassId::S) throw ValidationError("search: class S cannot be searched");
  if (problem.functional != FunctionalId::TS22 && problem.functional != FunctionalId::TS23 &&
      problem.functional != FunctionalId::TS32) {
    throw ValidationError("search: functional must be TS22, TS23 or TS32");
  }
  if (problem.starts < 1 && problem.extra_starts.empty()) throw ValidationError("search: starts must be >= 1");
  if (problem.max_iters < 1) throw ValidationError("search: max_iters must be >= 1");
  if (!(problem.tol > 0.0)) throw ValidationError("search: tol must be positive");
}

const std::vector<BoundRecord>& bound_table() {
  using F = FunctionalId;
  static const std::vector<BoundRecord> table = {
      {ClassId::S, F::TS22, Rational(29), std::nullopt, "|A2|^2 + |A3|^2 with |A2| <= 2, |A3| <= 5", "f2"},
      {ClassId::S, F::TS23, Rational(221), std::nullopt, "|A3|^2 + |A4|^2 with |A3| <= 5, |A4| <= 14", "f2"},
      {ClassId::S, F::TS31, Rational(24), std::nullopt, "TS31 is invariant under inversion", "f2"},
      {ClassId::R, F::TS22, Rational(25, 9), 7.22, "|A2|^2 + |A3|^2", "bounded-turning"},
      {ClassId::R, F::TS23, Rational(233, 36), 168.694, "|A3|^2 + |A4|^2", "bounded-turning"},
      {ClassId::R, F::TS32, Rational(817, 108), 64.79, "(|A2| + |A4|) * 43/18", "bounded-turning"},
      {ClassId::Starlike, F::TS22, Rational(29), 51.0, "|A2|^2 + |A3|^2", "f2"},
      {ClassId::Starlike, F::TS23, Rational(221), 116.33, "|A3|^2 + |A4|^2", "f2"},
      {ClassId::Starlike, F::TS32, Rational(416), 650.56, "(|A2| + |A4|) * 26", "f2"},
      {ClassId::Convex, F::TS22, Rational(2), 2.7, "|A2|^2 + |A3|^2", "convex"},
      {ClassId::Convex, F::TS23, Rational(2), 10.27, "|A3|^2 + |A4|^2", "convex"},
      {ClassId::Convex, F::TS32, Rational(4), 7.24, "(|A2| + |A4|) * 2", "convex"},
  };
  return table;
}

std::optional<Rational> exact_bound(ClassId cls, FunctionalId functional) {
  for (const auto& rec : bound_table()) {
    if (rec.cls == cls && rec.functional == functional) return rec.exact_bound;
  }
  return std::nullopt;
}

double objective(const SearchProblem& problem, const SchurParams& g) {
  return std::abs(evaluate(problem.functional, inverse_map(problem.cls, schur_to_coeffs(g))));
}

SearchResult maximize(const SearchProblem& problem) {
  validate(problem);
  std::vector<Point> starts;
  for (int k = 0; k < problem.starts; ++k) {
    starts.push_back(to_point(sample_param(problem.seed, static_cast<std::uint64_t>(k))));
  }
  for (const auto& g : problem.extra_starts) starts.push_back(to_point(g));

  std::vector<LocalOutcome> outcomes(starts.size());
  parallel_for(starts.size(), problem.threads, [&](std::size_t i) { outcomes[i] = nelder_mead(problem, starts[i]); });

  SearchResult result;
  std::size_t best = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    result.per_start_bests.push_back(o.best);
    result.evaluations += o.evaluations;
    result.max_observed = std::max(result.max_observed, o.max_observed);
    if (o.best > outcomes[best].best) best = i;
  }
  result.best_value = outcomes[best].best;
  result.argmax = to_params(outcomes[best].x);
  result.converged = outcomes[best].converged;
  if (const auto bound = exact_bound(problem.cls, problem.functional)) result.gap = result.best_value - bound->value();
  return result;
}

GridResult grid_search(const SearchProblem& problem, int resolution) {
  validate(problem);
  if (resolution < 4) throw ValidationError("grid: resolution must be >= 4");
  const std::int64_t per_gamma = static_cast<std::int64_t>(resolution + 1) * resolution;
  if (per_gamma > kGridBudget / per_gamma / per_gamma) {
    throw BudgetError("grid: resolution " + std::to_string(resolution) + " exceeds the evaluation budget");
  }

  std::vector<Complex> nodes;
  nodes.reserve(static_cast<std::size_t>(per_gamma));
  for (int j = 0; j <= resolution; ++j) {
    const double r = static_cast<double>(j) / resolution;
    for (int t = 0; t < resolution; ++t) {
      nodes.push_back(std::polar(r, 2.0 * std::numbers::pi * t / resolution));
    }
  }

  const std::size_t n = nodes.size();
  struct Slice {
    double value = -1.0;
    std::size_t j1 = 0, j2 = 0;
  };
  std::vector<Slice> slices(n);
  parallel_for(n, problem.threads, [&](std::size_t i0) {
    Slice s;
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      for (std::size_t i2 = 0; i2 < n; ++i2) {
        const double v = objective(problem, {nodes[i0], nodes[i1], nodes[i2]});
        if (v > s.value) s = {v, i1, i2};
      }
    }
    slices[i0] = s;
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (slices[i].value > slices[best].value) best = i;
  }
  return {slices[best].value, {nodes[best], nodes[slices[best].j1], nodes[slices[best].j2]},
          per_gamma * per_gamma * per_gamma};
}

double grid_oracle(const SearchProblem& problem, int resolution) { return grid_search(problem, resolution).value; }

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Violated: return "VIOLATED";
    case Verdict::NotSharp: return "NOT_SHARP";
    case Verdict::Consistent: return "CONSISTENT";
  }
  return "?";
}

Verdict judge(double observed, double claim) {
  if (observed > claim + kViolationMargin) return Verdict::Violated;
  if (observed < claim * (1.0 - kNotSharpMargin)) return Verdict::NotSharp;
  return Verdict::Consistent;
}

std::vector<RefutationRow> refutation_report(const RefutationSettings& settings) {
  std::vector<RefutationRow> rows;
  for (const auto& rec : bound_table()) {
    if (!rec.prior_claim) continue;
    SearchProblem problem;
    problem.cls = rec.cls;
    problem.functional = rec.functional;
    problem.starts = settings.starts;
    problem.max_iters = settings.max_iters;
    problem.seed = settings.seed;
    problem.threads = settings.threads;

    RefutationRow row;
    row.record = rec;
    row.search = maximize(problem);
    for (const auto& entry : extremal_catalog()) {
      if (entry.cls != rec.cls) continue;
      const double v = bound_quantity(rec.functional, evaluate(rec.functional, entry.inverse));
      if (row.witness_label.empty() || v > row.witness_value) {
        row.witness_value = v;
        row.witness_label = entry.label;
      }
    }
    row.verdict = judge(std::max(row.search.best_value, row.witness_value), *rec.prior_claim);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace utlab
