#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "gamedec/compose.hpp"
#include "gamedec/game.hpp"

namespace gamedec {

struct SumDecomposition {
  BimatrixGame g1;
  BimatrixGame g2;
  SumLayout layout;
};

/// Recovered factors of a product. Normalized so that factor 2's payoffs at
/// cell (1,1) are zero for both players; the constants live in factor 1.
struct ProductDecomposition {
  BimatrixGame g1;
  BimatrixGame g2;
  ProductLayout layout;
};

/// One removed strategy: player 1 removes rows, player 2 removes columns.
/// index/dominator are 0-based positions in the game as it was just before
/// this removal. The removed payoff vectors are kept so the pre-elimination
/// game can be rebuilt exactly.
struct Removal {
  int player;
  int index;
  int dominator;
  std::vector<Rational> a_payoffs;
  std::vector<Rational> b_payoffs;
};

struct EliminationRecord {
  std::vector<Removal> removals;
  std::vector<int> surviving_rows;  // 0-based indices into the original game
  std::vector<int> surviving_cols;

  bool empty() const { return removals.empty(); }
};

/// Entry-access counters for the detection-cost assertions.
struct DetectStats {
  std::size_t entry_reads = 0;
  std::size_t layouts_tried = 0;
};

/// Tests whether g is a sum game and recovers the summands if so.
std::optional<SumDecomposition> detect_sum(const BimatrixGame& g,
                                           DetectStats* stats = nullptr);

/// Tests whether g is a product game and recovers normalized factors if so.
/// Layouts are tried with n1 ascending then m1 ascending; layouts with a
/// 1x1 factor are skipped so detected factors are always strictly smaller.
std::optional<ProductDecomposition> detect_product(const BimatrixGame& g,
                                                   DetectStats* stats = nullptr);

/// Iterated elimination of pure strategies strictly dominated by another
/// pure strategy. Scan order: rows ascending, then columns ascending; after
/// each removal the scan restarts.
std::pair<BimatrixGame, EliminationRecord> eliminate_dominated(const BimatrixGame& g);

/// Undoes an elimination record: reinserting removed strategies in reverse
/// order rebuilds the pre-elimination game bit-exactly.
BimatrixGame reinsert_eliminated(const BimatrixGame& reduced,
                                 const EliminationRecord& record);

enum class DetectOrder { sum_first, product_first };

/// Recursive decomposition structure. Recomposing bottom-up reproduces the
/// decomposed game exactly.
struct DecompositionTree {
  struct Leaf {
    BimatrixGame game;
  };
  struct Sum {
    SumLayout layout;
    std::unique_ptr<DecompositionTree> left;
    std::unique_ptr<DecompositionTree> right;
  };
  struct Product {
    ProductLayout layout;
    std::unique_ptr<DecompositionTree> left;
    std::unique_ptr<DecompositionTree> right;
  };
  struct Elim {
    EliminationRecord record;
    std::unique_ptr<DecompositionTree> child;
  };

  std::variant<Leaf, Sum, Product, Elim> node;

  BimatrixGame reconstruct() const;

  struct Counts {
    long sum = 0;
    long product = 0;
    long elim = 0;
    long leaf = 0;
  };
  Counts counts() const;
  std::vector<long> leaf_sizes() const;        // sorted ascending
  std::vector<const BimatrixGame*> leaves() const;
  int height() const;                          // leaf-only tree has height 0
};

/// Full decomposition: at every node run (optionally) dominance elimination,
/// then the two detections in the given order, recursing into components.
DecompositionTree decompose_tree(const BimatrixGame& g, bool eliminate,
                                 DetectOrder order = DetectOrder::sum_first);

}  // namespace gamedec
