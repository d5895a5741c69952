#include <gtest/gtest.h>

#include "utlab/errors.hpp"
#include "utlab/search.hpp"

namespace utlab {
namespace {

const Complex kI{0.0, 1.0};

SearchProblem problem(ClassId cls, FunctionalId fn, std::uint64_t seed = 0) {
  SearchProblem p;
  p.cls = cls;
  p.functional = fn;
  p.seed = seed;
  return p;
}

double relative_gap(const SearchResult& r, ClassId cls, FunctionalId fn) {
  return std::abs(r.best_value - exact_bound(cls, fn)->value()) / exact_bound(cls, fn)->value();
}

TEST(Objective, Examples) {
  const SchurParams rot{kI, 0.0, 0.0};
  EXPECT_NEAR(objective(problem(ClassId::R, FunctionalId::TS22), rot), 25.0 / 9.0, 1e-14);
  EXPECT_NEAR(objective(problem(ClassId::Convex, FunctionalId::TS32), rot), 4.0, 1e-14);
  for (ClassId cls : {ClassId::R, ClassId::Starlike, ClassId::Convex}) {
    for (FunctionalId fn : {FunctionalId::TS22, FunctionalId::TS23, FunctionalId::TS32}) {
      EXPECT_EQ(objective(problem(cls, fn), {0.0, 0.0, 0.0}), 0.0);
    }
  }
}

TEST(Validate, RejectsInvalidProblems) {
  EXPECT_THROW(maximize(problem(ClassId::S, FunctionalId::TS22)), ValidationError);
  EXPECT_THROW(maximize(problem(ClassId::R, FunctionalId::T31)), ValidationError);
  EXPECT_THROW(maximize(problem(ClassId::R, FunctionalId::TS31)), ValidationError);
  auto p = problem(ClassId::R, FunctionalId::TS22);
  p.starts = 0;
  EXPECT_THROW(maximize(p), ValidationError);
  p.starts = 4;
  p.max_iters = 0;
  EXPECT_THROW(maximize(p), ValidationError);
}

TEST(BoundTable, ExactValues) {
  using F = FunctionalId;
  EXPECT_EQ(*exact_bound(ClassId::R, F::TS22), Rational(25, 9));
  EXPECT_EQ(*exact_bound(ClassId::R, F::TS23), Rational(233, 36));
  EXPECT_EQ(*exact_bound(ClassId::R, F::TS32), Rational(817, 108));
  EXPECT_EQ(*exact_bound(ClassId::Starlike, F::TS22), Rational(29));
  EXPECT_EQ(*exact_bound(ClassId::Starlike, F::TS23), Rational(221));
  EXPECT_EQ(*exact_bound(ClassId::Starlike, F::TS32), Rational(416));
  EXPECT_EQ(*exact_bound(ClassId::Convex, F::TS22), Rational(2));
  EXPECT_EQ(*exact_bound(ClassId::Convex, F::TS23), Rational(2));
  EXPECT_EQ(*exact_bound(ClassId::Convex, F::TS32), Rational(4));
  EXPECT_EQ(*exact_bound(ClassId::S, F::TS31), Rational(24));
  EXPECT_FALSE(exact_bound(ClassId::R, F::T21).has_value());
}

TEST(Maximize, BoundedTurningTs32) {
  const auto r = maximize(problem(ClassId::R, FunctionalId::TS32, 42));
  EXPECT_LE(relative_gap(r, ClassId::R, FunctionalId::TS32), 1e-4);
  EXPECT_LE(r.max_observed, 817.0 / 108.0 + 1e-9);
  EXPECT_EQ(r.per_start_bests.size(), 64u);
  EXPECT_EQ(r.best_value, *std::max_element(r.per_start_bests.begin(), r.per_start_bests.end()));
  EXPECT_TRUE(r.converged);
}

TEST(Maximize, StarlikeTs23) {
  const auto r = maximize(problem(ClassId::Starlike, FunctionalId::TS23));
  EXPECT_LE(relative_gap(r, ClassId::Starlike, FunctionalId::TS23), 1e-4);
  EXPECT_LE(r.max_observed, 221.0 + 1e-9);
}

TEST(Maximize, ConvexTs22) {
  const auto r = maximize(problem(ClassId::Convex, FunctionalId::TS22));
  EXPECT_LE(relative_gap(r, ClassId::Convex, FunctionalId::TS22), 1e-4);
  EXPECT_LE(r.max_observed, 2.0 + 1e-9);
}

TEST(Maximize, IndependentOfThreadCount) {
  auto p = problem(ClassId::Starlike, FunctionalId::TS32, 5);
  p.starts = 24;
  const auto serial = maximize(p);
  p.threads = 4;
  const auto parallel = maximize(p);
  EXPECT_EQ(serial.best_value, parallel.best_value);
  EXPECT_EQ(serial.evaluations, parallel.evaluations);
  EXPECT_EQ(serial.per_start_bests, parallel.per_start_bests);
  EXPECT_EQ(serial.argmax.gamma0, parallel.argmax.gamma0);
}

TEST(Maximize, SeedChangesStarts) {
  auto p = problem(ClassId::R, FunctionalId::TS23, 1);
  p.starts = 4;
  const auto a = maximize(p);
  p.seed = 2;
  const auto b = maximize(p);
  EXPECT_NE(a.evaluations, b.evaluations);
}

TEST(Maximize, TinyBudgetIsFlaggedNotThrown) {
  auto p = problem(ClassId::R, FunctionalId::TS32, 3);
  p.starts = 2;
  p.max_iters = 3;
  const auto r = maximize(p);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.best_value, 0.0);
}

TEST(GridOracle, ConvexTs22Resolution8) {
  const double v = grid_oracle(problem(ClassId::Convex, FunctionalId::TS22), 8);
  EXPECT_LE(v, 2.0 + 1e-12);
  EXPECT_GE(v, 1.8);
}

TEST(GridOracle, NondecreasingUnderRefinement) {
  for (ClassId cls : {ClassId::R, ClassId::Starlike, ClassId::Convex}) {
    // Resolution 6 does not contain gamma0 = i, so the coarse value is
    // strictly below the bound and refinement is visible.
    const auto p = problem(cls, FunctionalId::TS32);
    EXPECT_LE(grid_oracle(p, 6), grid_oracle(p, 12));
    EXPECT_LE(grid_oracle(p, 5), grid_oracle(p, 10));
  }
}

TEST(GridOracle, BoundedTurningTs22Resolution12) {
  const double v = grid_oracle(problem(ClassId::R, FunctionalId::TS22), 12);
  EXPECT_NEAR(v, 25.0 / 9.0, 0.05 * 25.0 / 9.0);
  EXPECT_LE(v, 25.0 / 9.0 + 1e-12);
}

TEST(GridOracle, GuardsAndValidation) {
  const auto p = problem(ClassId::R, FunctionalId::TS22);
  EXPECT_THROW(grid_oracle(p, 3), ValidationError);
  EXPECT_THROW(grid_oracle(p, 22), BudgetError);
  EXPECT_THROW(grid_oracle(problem(ClassId::S, FunctionalId::TS22), 4), ValidationError);
}

TEST(GridOracle, NeverAboveSeededMaximize) {
  auto p = problem(ClassId::Convex, FunctionalId::TS23);
  p.threads = 4;
  const auto grid = grid_search(p, 10);
  p.starts = 8;
  p.extra_starts.push_back(grid.argmax);
  EXPECT_LE(grid.value, maximize(p).best_value + 1e-9);
}

TEST(Judge, Verdicts) {
  EXPECT_EQ(judge(221.0, 116.33), Verdict::Violated);
  EXPECT_EQ(judge(25.0 / 9.0, 7.22), Verdict::NotSharp);
  EXPECT_EQ(judge(24.0, 24.0), Verdict::Consistent);
  EXPECT_EQ(judge(24.0 - 1e-7, 24.0), Verdict::Consistent);
  EXPECT_EQ(to_string(Verdict::NotSharp), "NOT_SHARP");
}

TEST(RefutationReport, NineRowsWithExpectedVerdicts) {
  RefutationSettings settings;
  settings.threads = 4;
  const auto rows = refutation_report(settings);
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& row : rows) {
    const bool violated = row.record.cls == ClassId::Starlike && row.record.functional == FunctionalId::TS23;
    EXPECT_EQ(row.verdict, violated ? Verdict::Violated : Verdict::NotSharp)
        << to_string(row.record.cls) << " " << to_string(row.record.functional);
    if (violated) {
      EXPECT_EQ(row.witness_label, "f2");
      EXPECT_NEAR(row.witness_value, 221.0, 1e-12);
    }
  }
}

}  // namespace
}  // namespace utlab
