#include <doctest.h>

#include "gamedec/rng.hpp"
#include "gamedec/solver.hpp"
#include "golden.hpp"

using namespace gamedec;

namespace {

BimatrixGame duplicate_weakened_row(const BimatrixGame& g, int src, int pos, long slack) {
  std::vector<std::vector<Rational>> a(static_cast<size_t>(g.rows()));
  std::vector<std::vector<Rational>> b(a.size());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      a[static_cast<size_t>(i)].push_back(g.a(i, j));
      b[static_cast<size_t>(i)].push_back(g.b(i, j));
    }
  std::vector<Rational> ra, rb;
  for (int j = 0; j < g.cols(); ++j) {
    ra.push_back(g.a(src, j) - Rational(slack));
    rb.push_back(g.b(src, j));
  }
  a.insert(a.begin() + pos, std::move(ra));
  b.insert(b.begin() + pos, std::move(rb));
  return BimatrixGame::from_rows(a, b);
}

}  // namespace

TEST_CASE("solve on the 12x12 worked product") {
  const auto g = product(golden::example_a(), golden::example_b());
  const auto [eq, report] = solve(g, false);
  CHECK(is_nash(g, eq.x, eq.y));
  CHECK(report.s == 144);
  CHECK(report.node_counts.product == 1);
  CHECK(report.node_counts.sum == 0);
  CHECK(report.node_counts.leaf == 2);
  CHECK(report.leaf_sizes == std::vector<long>{9, 16});
  CHECK(report.lambda == 16);
}

TEST_CASE("solve on matching pennies built as a sum") {
  const auto g = sum(golden::one_by_one(0, 0), golden::one_by_one(0, 0), Rational(1));
  const auto [eq, report] = solve(g, false);
  CHECK(eq.x == MixedStrategy::uniform(2));
  CHECK(eq.y == MixedStrategy::uniform(2));
  CHECK(report.lambda == 1);
  CHECK(report.node_counts.sum == 1);
  CHECK(report.node_counts.leaf == 2);
}

TEST_CASE("solve without decomposition is the base-solver baseline") {
  const auto g = product(golden::matching_pennies(), golden::matching_pennies());
  SolveOptions options;
  options.decompose = false;
  const auto [eq, report] = solve(g, options);
  CHECK(is_nash(g, eq.x, eq.y));
  CHECK(report.lambda == g.size());
  CHECK(report.node_counts.leaf == 1);
  CHECK(report.node_counts.product == 0);
  CHECK(report.leaf_sizes == std::vector<long>{16});
}

TEST_CASE("solve handles nested structure with elimination") {
  Rng rng(41);
  for (int it = 0; it < 15; ++it) {
    const auto a = golden::random_game(rng, 2, 2, 0, 9);
    const auto b = golden::random_game(rng, static_cast<int>(rng.range(1, 2)),
                                       static_cast<int>(rng.range(1, 2)), 0, 9);
    // the co-factor needs zero corner payoffs (so factor extraction does not
    // shift the sum), must not be dominance-solvable to one cell, and the
    // corner cell itself has to survive elimination
    auto c = golden::random_game(rng, 2, 2, 0, 9);
    const auto usable = [](const BimatrixGame& g2) {
      if (!g2.a(0, 0).is_zero() || !g2.b(0, 0).is_zero()) return false;
      const auto [fix, rec] = eliminate_dominated(g2);
      return fix.size() >= 2 && rec.surviving_rows.front() == 0 &&
             rec.surviving_cols.front() == 0;
    };
    while (!usable(c)) {
      c = golden::random_game(rng, 2, 2, 0, 9);
      std::vector<Rational> ca, cb;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          ca.push_back(i == 0 && j == 0 ? Rational(0) : c.a(i, j));
          cb.push_back(i == 0 && j == 0 ? Rational(0) : c.b(i, j));
        }
      c = BimatrixGame(2, 2, std::move(ca), std::move(cb));
    }
    auto g = product(sum(a, b, Rational(10)), c);
    g = duplicate_weakened_row(g, static_cast<int>(rng.below(g.rows())),
                               static_cast<int>(rng.below(g.rows() + 1)),
                               rng.range(1, 3));
    const auto [eq, report] = solve(g, true);
    CHECK(is_nash(g, eq.x, eq.y));
    CHECK(report.node_counts.elim >= 1);
    CHECK(report.lambda <= 4);
  }
}

TEST_CASE("reported lambda matches an independent decomposition") {
  Rng rng(42);
  for (const bool eliminate : {false, true}) {
    const auto a = golden::random_game(rng, 2, 3, 0, 9);
    const auto b = golden::random_game(rng, 2, 2, 0, 9);
    const auto g = sum(product(a, b), golden::random_game(rng, 2, 2, 0, 9), Rational(40));
    const auto [eq, report] = solve(g, eliminate);
    CHECK(is_nash(g, eq.x, eq.y));
    const auto tree = decompose_tree(g, eliminate);
    CHECK(report.leaf_sizes == tree.leaf_sizes());
    CHECK(report.lambda == tree.leaf_sizes().back());
    CHECK(report.node_counts.leaf == static_cast<long>(tree.leaf_sizes().size()));
  }
}

TEST_CASE("detection order does not change solvability or leaf multisets") {
  Rng rng(43);
  for (int it = 0; it < 10; ++it) {
    const auto a = golden::random_game(rng, 2, 2, 0, 6);
    const auto b = golden::random_game(rng, 1, 2, 0, 6);
    const auto g = product(sum(a, b, Rational(7)), golden::random_game(rng, 2, 1, 0, 6));
    SolveOptions sum_first;
    SolveOptions product_first;
    product_first.order = DetectOrder::product_first;
    sum_first.eliminate = product_first.eliminate = false;
    const auto [e1, r1] = solve(g, sum_first);
    const auto [e2, r2] = solve(g, product_first);
    CHECK(is_nash(g, e1.x, e1.y));
    CHECK(is_nash(g, e2.x, e2.y));
    CHECK(r1.leaf_sizes == r2.leaf_sizes);
    CHECK(r1.lambda == r2.lambda);
  }
}

TEST_CASE("elimination never increases lambda") {
  Rng rng(44);
  for (int it = 0; it < 10; ++it) {
    const auto a = golden::random_game(rng, 2, 2, 0, 9);
    const auto b = golden::random_game(rng, 2, 2, 0, 9);
    auto g = sum(a, b, Rational(10));
    g = duplicate_weakened_row(g, 1, 2, 2);
    const auto [eq_plain, rep_plain] = solve(sum(a, b, Rational(10)), true);
    const auto [eq_wrapped, rep_wrapped] = solve(g, true);
    CHECK(is_nash(g, eq_wrapped.x, eq_wrapped.y));
    CHECK(rep_wrapped.lambda <= rep_plain.lambda);
  }
}

TEST_CASE("thread count changes nothing but timings") {
  Rng rng(45);
  const auto a = golden::random_game(rng, 2, 2, 0, 9);
  const auto b = golden::random_game(rng, 2, 3, 0, 9);
  const auto c = golden::random_game(rng, 3, 2, 0, 9);
  const auto g = sum(product(a, b), c, Rational(60));
  SolveOptions serial;
  SolveOptions parallel;
  parallel.threads = 4;
  const auto [e1, r1] = solve(g, serial);
  const auto [e2, r2] = solve(g, parallel);
  CHECK(e1 == e2);
  CHECK(r1.lambda == r2.lambda);
  CHECK(r1.leaf_sizes == r2.leaf_sizes);
  CHECK(r1.node_counts.sum == r2.node_counts.sum);
  CHECK(r1.node_counts.product == r2.node_counts.product);
  CHECK(r1.node_counts.elim == r2.node_counts.elim);
  CHECK(r1.node_counts.leaf == r2.node_counts.leaf);
}

TEST_CASE("solve output is deterministic") {
  Rng rng(46);
  const auto g = sum(golden::random_game(rng, 2, 2, 0, 9),
                     golden::random_game(rng, 2, 2, 0, 9), Rational(10));
  const auto [e1, r1] = solve(g, true);
  const auto [e2, r2] = solve(g, true);
  CHECK(e1 == e2);
  CHECK(r1.leaf_sizes == r2.leaf_sizes);
}
