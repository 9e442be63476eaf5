#pragma once

#include <utility>
#include <vector>

#include "gamedec/decompose.hpp"
#include "gamedec/equilibrium.hpp"
#include "gamedec/game.hpp"

namespace gamedec {

/// What a solve run did: input size, the fpt parameter lambda (size of the
/// largest irreducible component handed to the base solver), node counts,
/// and per-phase wall-clock durations.
struct SolveReport {
  long s = 0;
  long lambda = 0;
  DecompositionTree::Counts node_counts;
  std::vector<long> leaf_sizes;
  struct Timings {
    double decompose_ms = 0;
    double base_solve_ms = 0;
    double lift_ms = 0;
  } timings;
};

struct SolveOptions {
  bool decompose = true;
  bool eliminate = true;
  DetectOrder order = DetectOrder::sum_first;
  int threads = 1;
};

/// Divide-and-conquer solve: decompose, solve irreducible leaves with
/// solve_base, lift equilibria back up the tree. Every lift output is
/// re-verified with is_nash; a failure raises invariant_error.
std::pair<Equilibrium, SolveReport> solve(const BimatrixGame& g,
                                          const SolveOptions& options = {});

inline std::pair<Equilibrium, SolveReport> solve(const BimatrixGame& g, bool eliminate) {
  SolveOptions options;
  options.eliminate = eliminate;
  return solve(g, options);
}

}  // namespace gamedec
