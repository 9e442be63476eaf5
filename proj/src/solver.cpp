#include "gamedec/solver.hpp"

#include <atomic>
#include <chrono>
#include <future>

#include "gamedec/errors.hpp"

namespace gamedec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct LiftContext {
  std::atomic<long long> base_solve_ns{0};
  int parallel_depth = 0;
};

struct Solved {
  Equilibrium eq;
  BimatrixGame game;
};

// Bottom-up: rebuild each node's game while lifting, so every lift can be
// re-verified against the game it claims to solve.
Solved solve_tree(const DecompositionTree& tree, LiftContext& ctx, int depth) {
  return std::visit(
      [&](const auto& v) -> Solved {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DecompositionTree::Leaf>) {
          const auto t0 = Clock::now();
          Equilibrium eq = solve_base(v.game);
          ctx.base_solve_ns.fetch_add(
              std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0)
                  .count(),
              std::memory_order_relaxed);
          if (!is_nash(v.game, eq.x, eq.y))
            throw invariant_error("base solver returned a non-equilibrium");
          return Solved{std::move(eq), v.game};
        } else if constexpr (std::is_same_v<T, DecompositionTree::Elim>) {
          Solved child = solve_tree(*v.child, ctx, depth + 1);
          BimatrixGame game = reinsert_eliminated(child.game, v.record);
          Equilibrium eq = lift_elimination(child.eq, v.record);
          if (!is_nash(game, eq.x, eq.y))
            throw invariant_error("elimination lift produced a non-equilibrium");
          return Solved{std::move(eq), std::move(game)};
        } else {
          auto solve_children = [&]() -> std::pair<Solved, Solved> {
            if (depth < ctx.parallel_depth) {
              auto lf = std::async(std::launch::async,
                                   [&] { return solve_tree(*v.left, ctx, depth + 1); });
              Solved r = solve_tree(*v.right, ctx, depth + 1);
              return {lf.get(), std::move(r)};
            }
            Solved l = solve_tree(*v.left, ctx, depth + 1);
            Solved r = solve_tree(*v.right, ctx, depth + 1);
            return {std::move(l), std::move(r)};
          };
          auto [left, right] = solve_children();
          if constexpr (std::is_same_v<T, DecompositionTree::Sum>) {
            BimatrixGame game = sum(left.game, right.game, v.layout.k);
            Equilibrium eq = lift_sum(left.eq, right.eq, v.layout.k);
            if (!is_nash(game, eq.x, eq.y))
              throw invariant_error("sum lift produced a non-equilibrium");
            return Solved{std::move(eq), std::move(game)};
          } else {
            BimatrixGame game = product(left.game, right.game);
            Equilibrium eq = lift_product(left.eq, right.eq, v.layout);
            if (!is_nash(game, eq.x, eq.y))
              throw invariant_error("product lift produced a non-equilibrium");
            return Solved{std::move(eq), std::move(game)};
          }
        }
      },
      tree.node);
}

int parallel_depth_for(int threads) {
  int depth = 0;
  while ((1 << depth) < threads && depth < 8) ++depth;
  return depth;
}

}  // namespace

std::pair<Equilibrium, SolveReport> solve(const BimatrixGame& g,
                                          const SolveOptions& options) {
  SolveReport report;
  report.s = g.size();

  if (!options.decompose) {
    const auto t0 = Clock::now();
    Equilibrium eq = solve_base(g);
    report.timings.base_solve_ms = ms_since(t0);
    if (!is_nash(g, eq.x, eq.y))
      throw invariant_error("base solver returned a non-equilibrium");
    report.lambda = g.size();
    report.node_counts.leaf = 1;
    report.leaf_sizes = {g.size()};
    return {std::move(eq), std::move(report)};
  }

  const auto t0 = Clock::now();
  const DecompositionTree tree = decompose_tree(g, options.eliminate, options.order);
  report.timings.decompose_ms = ms_since(t0);
  report.node_counts = tree.counts();
  report.leaf_sizes = tree.leaf_sizes();
  report.lambda = report.leaf_sizes.back();

  LiftContext ctx;
  ctx.parallel_depth = parallel_depth_for(options.threads);
  const auto t1 = Clock::now();
  Solved solved = solve_tree(tree, ctx, 0);
  const double lift_total_ms = ms_since(t1);
  report.timings.base_solve_ms =
      static_cast<double>(ctx.base_solve_ns.load()) / 1e6;
  report.timings.lift_ms = lift_total_ms - report.timings.base_solve_ms;

  if (!(solved.game == g))
    throw invariant_error("decomposition did not recompose to the input game");
  return {std::move(solved.eq), std::move(report)};
}

}  // namespace gamedec
