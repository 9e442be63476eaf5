#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "gamedec/decompose.hpp"
#include "gamedec/game.hpp"

namespace gamedec {

struct GenConfig {
  double p_sum = 0.4;
  double p_prod = 0.4;
  double p_elim = 0.2;
  int max_height = 80;
  int leaf_max_size = 6;
  int min_strategies = 95;
  int max_strategies = 105;
  long leaf_payoff_max = 50;
  int max_elim_insertions = 3;
  std::uint64_t seed = 0;
};

/// Plan for one decomposable game: the structure tree plus every random
/// choice needed to realize payoffs, so realization is deterministic and
/// subtrees can be realized independently.
struct GenTree {
  struct Leaf {
    int n;
    int m;
    std::uint64_t payoff_seed;
    // corner payoffs pinned to zero: required of every subtree that feeds a
    // product factor, so factor extraction introduces no constant shifts
    bool zero_corner = false;
  };
  struct Sum {
    int n1;
    int m1;
    std::unique_ptr<GenTree> left;
    std::unique_ptr<GenTree> right;
  };
  struct Product {
    ProductLayout layout;
    std::unique_ptr<GenTree> left;
    std::unique_ptr<GenTree> right;
  };
  /// One planned dominated-strategy insertion: copy `source`, subtract the
  /// per-entry slack from the owner's payoffs, insert at `position`.
  /// Indices refer to the game state just before this insertion.
  struct Insertion {
    int player;
    int source;
    int position;
    std::vector<long> slacks;
  };
  struct Elim {
    std::vector<Insertion> insertions;  // all rows first, then all columns
    std::unique_ptr<GenTree> child;
  };

  std::variant<Leaf, Sum, Product, Elim> node;
  int rows = 0;  // realized dimensions of this node
  int cols = 0;

  int height() const;
  long max_leaf_size() const;
};

/// Samples a decomposition structure. Splits are drawn uniformly among the
/// admissible choices: both children must be recursively decomposable down
/// to leaves of size <= leaf_max_size within the remaining height budget.
/// A drawn kind with no admissible split falls back (product falls back to
/// sum when a dimension has no usable divisor pair).
GenTree generate_tree(const GenConfig& config);

/// Realizes payoffs bottom-up: uniform integer leaf payoffs, product/sum
/// composition with K = 1 + max payoff magnitude, planned dominated-strategy
/// insertions at elimination nodes. Deterministic per tree.
BimatrixGame realize(const GenTree& tree, const GenConfig& config);

/// Realization that also returns the matching decomposition structure.
struct RealizedGame {
  BimatrixGame game;
  DecompositionTree structure;
};
RealizedGame realize_with_structure(const GenTree& tree, const GenConfig& config);

}  // namespace gamedec
