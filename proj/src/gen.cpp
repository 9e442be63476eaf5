#include "gamedec/gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>

#include "gamedec/errors.hpp"
#include "gamedec/rng.hpp"

namespace gamedec {

namespace {

void validate(const GenConfig& c) {
  if (c.p_sum < 0 || c.p_prod < 0 || c.p_elim < 0 ||
      std::abs(c.p_sum + c.p_prod + c.p_elim - 1.0) > 1e-9)
    throw config_error("kind probabilities must be nonnegative and sum to 1");
  if (c.leaf_max_size < 1) throw config_error("leaf_max_size must be at least 1");
  if (c.min_strategies < 1) throw config_error("min_strategies must be at least 1");
  if (c.min_strategies > c.max_strategies)
    throw config_error("min_strategies exceeds max_strategies");
  if (c.max_height < 1) throw config_error("max_height must be at least 1");
  if (c.leaf_payoff_max < 0) throw config_error("leaf_payoff_max must be nonnegative");
  if (c.max_elim_insertions < 0)
    throw config_error("max_elim_insertions must be nonnegative");
}

// Decomposability oracle over shapes. A shape is viable when it can be
// split all the way down to leaves of size <= leaf_max; height_bound is a
// constructive upper bound on the tree height needed to do so.
class ShapeOracle {
 public:
  ShapeOracle(int leaf_max, int max_ins) : leaf_max_(leaf_max), max_ins_(max_ins) {}

  bool viable(int n, int m) {
    if (static_cast<long>(n) * m <= leaf_max_) return true;
    const std::uint64_t k = key(n, m);
    if (const auto it = viable_.find(k); it != viable_.end()) return it->second;
    bool ok = false;
    if (n >= 2 && m >= 2) {
      const int bn = n / 2, bm = m / 2;  // balanced split almost always works
      ok = viable(bn, bm) && viable(n - bn, m - bm);
      for (int n1 = 1; !ok && n1 < n; ++n1)
        for (int m1 = 1; !ok && m1 < m; ++m1)
          ok = viable(n1, m1) && viable(n - n1, m - m1);
    }
    if (!ok) ok = any_product_split(n, m);
    for (int e1 = 1; !ok && e1 <= std::min(max_ins_, n - 1); ++e1)
      for (int e2 = 1; !ok && e2 <= std::min(max_ins_, m - 1); ++e2)
        ok = elim_child_ok(n - e1, m - e2) && viable(n - e1, m - e2);
    viable_.emplace(k, ok);
    return ok;
  }

  // 1x1 elimination children are banned: inside a product factor they would
  // reduce to a bare constant shift, which no detector can peel off.
  static bool elim_child_ok(int cn, int cm) {
    return static_cast<long>(cn) * cm >= 2;
  }

  // Finite for every viable shape; derived from one concrete split per node.
  int height_bound(int n, int m) {
    if (static_cast<long>(n) * m <= leaf_max_) return 0;
    const std::uint64_t k = key(n, m);
    if (const auto it = hb_.find(k); it != hb_.end()) return it->second;
    hb_.emplace(k, kUnreachable);  // guard; overwritten below
    int best = kUnreachable;
    if (n >= 2 && m >= 2) {
      for (int n1 : centered(n))
        for (int m1 : centered(m))
          if (viable(n1, m1) && viable(n - n1, m - m1)) {
            best = 1 + std::max(height_bound(n1, m1), height_bound(n - n1, m - m1));
            goto done;
          }
    }
    for (int n1 = 1; n1 <= n; ++n1) {
      if (n % n1 != 0) continue;
      const int n2 = n / n1;
      for (int m1 = 1; m1 <= m; ++m1) {
        if (m % m1 != 0) continue;
        const int m2 = m / m1;
        if ((n1 == 1 && m1 == 1) || (n2 == 1 && m2 == 1)) continue;
        if (viable(n1, m1) && viable(n2, m2)) {
          best = 1 + std::max(height_bound(n1, m1), height_bound(n2, m2));
          goto done;
        }
      }
    }
    for (int e1 = 1; e1 <= std::min(max_ins_, n - 1); ++e1)
      for (int e2 = 1; e2 <= std::min(max_ins_, m - 1); ++e2)
        if (elim_child_ok(n - e1, m - e2) && viable(n - e1, m - e2)) {
          best = 1 + height_bound(n - e1, m - e2);
          goto done;
        }
  done:
    hb_[k] = best;
    return best;
  }

  bool child_fits(int n, int m, int budget) {
    return viable(n, m) && height_bound(n, m) <= budget;
  }

  static constexpr int kUnreachable = std::numeric_limits<int>::max() / 2;

 private:
  static std::uint64_t key(int n, int m) {
    return (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(m);
  }

  bool any_product_split(int n, int m) {
    for (int n1 = 1; n1 <= n; ++n1) {
      if (n % n1 != 0) continue;
      const int n2 = n / n1;
      for (int m1 = 1; m1 <= m; ++m1) {
        if (m % m1 != 0) continue;
        const int m2 = m / m1;
        if ((n1 == 1 && m1 == 1) || (n2 == 1 && m2 == 1)) continue;
        if (viable(n1, m1) && viable(n2, m2)) return true;
      }
    }
    return false;
  }

  // 1..v-1 ordered by distance from v/2: the most balanced split first.
  static std::vector<int> centered(int v) {
    std::vector<int> out;
    for (int d = 0; d < v; ++d) {
      const int down = v / 2 - d;
      if (down >= 1 && down < v) out.push_back(down);
      const int up = v / 2 + d + 1;
      if (d >= 0 && up >= 1 && up < v && up != down) out.push_back(up);
    }
    return out;
  }

  int leaf_max_;
  int max_ins_;
  std::unordered_map<std::uint64_t, bool> viable_;
  std::unordered_map<std::uint64_t, int> hb_;
};

enum class Kind { sum, product, elim };

struct Generator {
  const GenConfig& cfg;
  ShapeOracle oracle;

  explicit Generator(const GenConfig& c)
      : cfg(c), oracle(c.leaf_max_size, c.max_elim_insertions) {}

  GenTree leaf(int n, int m, Rng& rng, bool zero_corner) {
    GenTree t{GenTree::Leaf{n, m, rng.next(), zero_corner}, n, m};
    return t;
  }

  std::vector<std::pair<int, int>> sum_moves(int n, int m, int budget) {
    std::vector<std::pair<int, int>> out;
    if (n < 2 || m < 2) return out;
    for (int n1 = 1; n1 < n; ++n1)
      for (int m1 = 1; m1 < m; ++m1)
        if (oracle.child_fits(n1, m1, budget) &&
            oracle.child_fits(n - n1, m - m1, budget))
          out.emplace_back(n1, m1);
    return out;
  }

  std::vector<std::pair<int, int>> product_moves(int n, int m, int budget) {
    std::vector<std::pair<int, int>> out;
    for (int n1 = 1; n1 <= n; ++n1) {
      if (n % n1 != 0) continue;
      const int n2 = n / n1;
      for (int m1 = 1; m1 <= m; ++m1) {
        if (m % m1 != 0) continue;
        const int m2 = m / m1;
        if ((n1 == 1 && m1 == 1) || (n2 == 1 && m2 == 1)) continue;
        if (oracle.child_fits(n1, m1, budget) && oracle.child_fits(n2, m2, budget))
          out.emplace_back(n1, m1);
      }
    }
    return out;
  }

  std::vector<std::pair<int, int>> elim_moves(int n, int m, int budget) {
    std::vector<std::pair<int, int>> out;
    for (int e1 = 1; e1 <= std::min(cfg.max_elim_insertions, n - 1); ++e1)
      for (int e2 = 1; e2 <= std::min(cfg.max_elim_insertions, m - 1); ++e2)
        if (ShapeOracle::elim_child_ok(n - e1, m - e2) &&
            oracle.child_fits(n - e1, m - e2, budget))
          out.emplace_back(e1, e2);
    return out;
  }

  // zero_corner propagates the "corner payoffs must be (0,0)" obligation:
  // product factors must satisfy it so that reading factors off as payoff
  // differences reproduces the realized subgames without constant shifts
  // (a shifted sum would be undetectable). The corner of a sum is its first
  // summand's corner; the corner of a product is the sum of its factors'.
  GenTree gen_node(int n, int m, int height_left, Rng rng, bool zero_corner) {
    if (static_cast<long>(n) * m <= cfg.leaf_max_size)
      return leaf(n, m, rng, zero_corner);

    const double r = rng.unit();
    const Kind picked = r < cfg.p_sum              ? Kind::sum
                        : r < cfg.p_sum + cfg.p_prod ? Kind::product
                                                     : Kind::elim;
    Kind chain[3];
    switch (picked) {
      case Kind::sum:
        chain[0] = Kind::sum; chain[1] = Kind::product; chain[2] = Kind::elim;
        break;
      case Kind::product:
        chain[0] = Kind::product; chain[1] = Kind::sum; chain[2] = Kind::elim;
        break;
      case Kind::elim:
        chain[0] = Kind::elim; chain[1] = Kind::sum; chain[2] = Kind::product;
        break;
    }

    const int budget = height_left - 1;
    for (const Kind kind : chain) {
      if (kind == Kind::sum) {
        const auto moves = sum_moves(n, m, budget);
        if (moves.empty()) continue;
        const auto [n1, m1] = moves[rng.below(moves.size())];
        auto left =
            std::make_unique<GenTree>(gen_node(n1, m1, budget, rng.split(1), zero_corner));
        auto right = std::make_unique<GenTree>(
            gen_node(n - n1, m - m1, budget, rng.split(2), false));
        return GenTree{GenTree::Sum{n1, m1, std::move(left), std::move(right)}, n, m};
      }
      if (kind == Kind::product) {
        const auto moves = product_moves(n, m, budget);
        if (moves.empty()) continue;
        const auto [n1, m1] = moves[rng.below(moves.size())];
        const ProductLayout layout{n1, m1, n / n1, m / m1};
        auto left =
            std::make_unique<GenTree>(gen_node(n1, m1, budget, rng.split(1), zero_corner));
        auto right = std::make_unique<GenTree>(
            gen_node(layout.n2, layout.m2, budget, rng.split(2), true));
        return GenTree{
            GenTree::Product{layout, std::move(left), std::move(right)}, n, m};
      }
      const auto moves = elim_moves(n, m, budget);
      if (moves.empty()) continue;
      const auto [e1, e2] = moves[rng.below(moves.size())];
      const int cn = n - e1, cm = m - e2;
      // a pinned corner must stay the child's corner: never insert in front
      const int min_pos = zero_corner ? 1 : 0;
      std::vector<GenTree::Insertion> ins;
      ins.reserve(static_cast<size_t>(e1 + e2));
      for (int k = 0; k < e1; ++k) {
        GenTree::Insertion in;
        in.player = 1;
        in.source = static_cast<int>(rng.below(static_cast<std::uint64_t>(cn + k)));
        in.position = min_pos + static_cast<int>(rng.below(
                                    static_cast<std::uint64_t>(cn + k + 1 - min_pos)));
        for (int j = 0; j < cm; ++j) in.slacks.push_back(rng.range(1, 3));
        ins.push_back(std::move(in));
      }
      for (int k = 0; k < e2; ++k) {
        GenTree::Insertion in;
        in.player = 2;
        in.source = static_cast<int>(rng.below(static_cast<std::uint64_t>(cm + k)));
        in.position = min_pos + static_cast<int>(rng.below(
                                    static_cast<std::uint64_t>(cm + k + 1 - min_pos)));
        for (int i = 0; i < cn + e1; ++i) in.slacks.push_back(rng.range(1, 3));
        ins.push_back(std::move(in));
      }
      auto child =
          std::make_unique<GenTree>(gen_node(cn, cm, budget, rng.split(1), zero_corner));
      return GenTree{GenTree::Elim{std::move(ins), std::move(child)}, n, m};
    }
    throw invariant_error("no admissible decomposition move for a viable shape");
  }
};

// --- realization ---------------------------------------------------------

Rational max_abs_payoff(const BimatrixGame& g) {
  Rational best;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      best = std::max(best, g.a(i, j).abs());
      best = std::max(best, g.b(i, j).abs());
    }
  return best;
}

// Leaf payoffs are uniform, subject to the constraints the structure
// imposes. Inside a product factor the leaf must not be dominance-solvable
// down to a single cell (elimination would collapse the factor to a bare
// constant shift); with a pinned corner the corner cell must also survive
// elimination, or factor extraction would read a nonzero corner off the
// reduced game. Rejection keeps the draws uniform over the admissible set.
BimatrixGame realize_leaf(const GenTree::Leaf& leaf, const GenConfig& cfg,
                          bool inside_product) {
  Rng rng(leaf.payoff_seed);
  const size_t cells = static_cast<size_t>(leaf.n) * leaf.m;
  if (inside_product && cells < 2)
    throw invariant_error("1x1 leaf planned inside a product factor");

  // One-row/one-column leaves inside a product with a pinned corner: the
  // short player's own payoffs must all equal the pinned zero, or strict
  // dominance would shave the line down to one cell.
  if (inside_product && leaf.zero_corner && (leaf.n == 1 || leaf.m == 1)) {
    std::vector<Rational> a(cells), b(cells);
    if (leaf.n == 1) {
      for (size_t j = 1; j < cells; ++j)
        a[j] = Rational(rng.range(0, cfg.leaf_payoff_max));
    } else {
      for (size_t i = 1; i < cells; ++i)
        b[i] = Rational(rng.range(0, cfg.leaf_payoff_max));
    }
    return BimatrixGame(leaf.n, leaf.m, std::move(a), std::move(b));
  }

  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    std::vector<Rational> a, b;
    a.reserve(cells);
    b.reserve(cells);
    for (size_t i = 0; i < cells; ++i) a.emplace_back(rng.range(0, cfg.leaf_payoff_max));
    for (size_t i = 0; i < cells; ++i) b.emplace_back(rng.range(0, cfg.leaf_payoff_max));
    if (leaf.zero_corner) {
      a[0] = Rational(0);
      b[0] = Rational(0);
    }
    BimatrixGame g(leaf.n, leaf.m, std::move(a), std::move(b));
    if (!inside_product) return g;
    const auto [fix, rec] = eliminate_dominated(g);
    if (fix.size() < 2) continue;
    if (leaf.zero_corner &&
        (rec.surviving_rows.front() != 0 || rec.surviving_cols.front() != 0))
      continue;
    return g;
  }
  throw invariant_error("could not realize a leaf satisfying its structure constraints");
}

struct Matrices {
  std::vector<std::vector<Rational>> a;
  std::vector<std::vector<Rational>> b;
};

Matrices to_rows(const BimatrixGame& g) {
  Matrices m;
  m.a.resize(static_cast<size_t>(g.rows()));
  m.b.resize(static_cast<size_t>(g.rows()));
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      m.a[static_cast<size_t>(i)].push_back(g.a(i, j));
      m.b[static_cast<size_t>(i)].push_back(g.b(i, j));
    }
  return m;
}

void apply_insertion(Matrices& w, const GenTree::Insertion& in) {
  if (in.player == 1) {
    const size_t cols = w.a[0].size();
    if (in.slacks.size() != cols)
      throw invariant_error("row insertion slack vector has the wrong length");
    std::vector<Rational> ra(cols), rb(cols);
    for (size_t j = 0; j < cols; ++j) {
      ra[j] = w.a[static_cast<size_t>(in.source)][j] - Rational(in.slacks[j]);
      rb[j] = w.b[static_cast<size_t>(in.source)][j];
    }
    w.a.insert(w.a.begin() + in.position, std::move(ra));
    w.b.insert(w.b.begin() + in.position, std::move(rb));
  } else {
    const size_t rows = w.a.size();
    if (in.slacks.size() != rows)
      throw invariant_error("column insertion slack vector has the wrong length");
    for (size_t i = 0; i < rows; ++i) {
      const Rational va = w.a[i][static_cast<size_t>(in.source)];
      const Rational vb = w.b[i][static_cast<size_t>(in.source)] - Rational(in.slacks[i]);
      w.a[i].insert(w.a[i].begin() + in.position, va);
      w.b[i].insert(w.b[i].begin() + in.position, vb);
    }
  }
}

BimatrixGame apply_elim(const GenTree::Elim& elim, const BimatrixGame& child) {
  Matrices w = to_rows(child);
  for (const auto& in : elim.insertions) apply_insertion(w, in);
  return BimatrixGame::from_rows(w.a, w.b);
}

// Removal record that undoes the insertions: columns last-in-first-out,
// then rows. Each removal's dominator is the insertion's source, which is
// still present at removal time and still strictly dominates it.
EliminationRecord build_record(const GenTree::Elim& elim, const BimatrixGame& child,
                               const BimatrixGame& node_game) {
  const int cn = child.rows(), cm = child.cols();
  std::vector<int> row_ids(static_cast<size_t>(cn));
  std::vector<int> col_ids(static_cast<size_t>(cm));
  for (int i = 0; i < cn; ++i) row_ids[static_cast<size_t>(i)] = i;
  for (int j = 0; j < cm; ++j) col_ids[static_cast<size_t>(j)] = j;

  struct Placed {
    int player;
    int id;
    int source_id;
  };
  std::vector<Placed> placed;
  int row_seq = cn, col_seq = cm;
  for (const auto& in : elim.insertions) {
    if (in.player == 1) {
      const int src = row_ids[static_cast<size_t>(in.source)];
      row_ids.insert(row_ids.begin() + in.position, row_seq);
      placed.push_back({1, row_seq++, src});
    } else {
      const int src = col_ids[static_cast<size_t>(in.source)];
      col_ids.insert(col_ids.begin() + in.position, col_seq);
      placed.push_back({2, col_seq++, src});
    }
  }

  EliminationRecord rec;
  for (size_t i = 0; i < row_ids.size(); ++i)
    if (row_ids[i] < cn) rec.surviving_rows.push_back(static_cast<int>(i));
  for (size_t j = 0; j < col_ids.size(); ++j)
    if (col_ids[j] < cm) rec.surviving_cols.push_back(static_cast<int>(j));

  Matrices w = to_rows(node_game);
  const auto find = [](const std::vector<int>& ids, int id) {
    return static_cast<int>(std::find(ids.begin(), ids.end(), id) - ids.begin());
  };
  for (auto it = placed.rbegin(); it != placed.rend(); ++it) {
    Removal r;
    r.player = it->player;
    if (it->player == 1) {
      r.index = find(row_ids, it->id);
      r.dominator = find(row_ids, it->source_id);
      r.a_payoffs = w.a[static_cast<size_t>(r.index)];
      r.b_payoffs = w.b[static_cast<size_t>(r.index)];
      w.a.erase(w.a.begin() + r.index);
      w.b.erase(w.b.begin() + r.index);
      row_ids.erase(row_ids.begin() + r.index);
    } else {
      r.index = find(col_ids, it->id);
      r.dominator = find(col_ids, it->source_id);
      for (size_t i = 0; i < w.a.size(); ++i) {
        r.a_payoffs.push_back(w.a[i][static_cast<size_t>(r.index)]);
        r.b_payoffs.push_back(w.b[i][static_cast<size_t>(r.index)]);
        w.a[i].erase(w.a[i].begin() + r.index);
        w.b[i].erase(w.b[i].begin() + r.index);
      }
      col_ids.erase(col_ids.begin() + r.index);
    }
    rec.removals.push_back(std::move(r));
  }
  if (!(BimatrixGame::from_rows(w.a, w.b) == child))
    throw invariant_error("elimination record does not undo the planned insertions");
  return rec;
}

RealizedGame realize_node(const GenTree& t, const GenConfig& cfg, bool with_tree,
                          bool inside_product);

// inside_product marks subtrees that are (or sit inside) a product factor;
// sum nodes reset it because a sum game never has dominated strategies and
// so can never collapse, whatever its components contain.
RealizedGame realize_impl(const GenTree& t, const GenConfig& cfg, bool with_tree,
                          bool inside_product) {
  return std::visit(
      [&](const auto& v) -> RealizedGame {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GenTree::Leaf>) {
          BimatrixGame g = realize_leaf(v, cfg, inside_product);
          return RealizedGame{g, DecompositionTree{DecompositionTree::Leaf{g}}};
        } else if constexpr (std::is_same_v<T, GenTree::Sum>) {
          RealizedGame l = realize_node(*v.left, cfg, with_tree, false);
          RealizedGame r = realize_node(*v.right, cfg, with_tree, false);
          const Rational k =
              Rational(1) + std::max(max_abs_payoff(l.game), max_abs_payoff(r.game));
          BimatrixGame g = sum(l.game, r.game, k);
          DecompositionTree tree{DecompositionTree::Leaf{g}};
          if (with_tree)
            tree = DecompositionTree{DecompositionTree::Sum{
                SumLayout{v.n1, v.m1, k},
                std::make_unique<DecompositionTree>(std::move(l.structure)),
                std::make_unique<DecompositionTree>(std::move(r.structure))}};
          return RealizedGame{std::move(g), std::move(tree)};
        } else if constexpr (std::is_same_v<T, GenTree::Product>) {
          RealizedGame l = realize_node(*v.left, cfg, with_tree, true);
          RealizedGame r = realize_node(*v.right, cfg, with_tree, true);
          BimatrixGame g = product(l.game, r.game);
          DecompositionTree tree{DecompositionTree::Leaf{g}};
          if (with_tree)
            tree = DecompositionTree{DecompositionTree::Product{
                v.layout,
                std::make_unique<DecompositionTree>(std::move(l.structure)),
                std::make_unique<DecompositionTree>(std::move(r.structure))}};
          return RealizedGame{std::move(g), std::move(tree)};
        } else {
          RealizedGame c = realize_node(*v.child, cfg, with_tree, inside_product);
          BimatrixGame g = apply_elim(v, c.game);
          DecompositionTree tree{DecompositionTree::Leaf{g}};
          if (with_tree) {
            EliminationRecord rec = build_record(v, c.game, g);
            tree = DecompositionTree{DecompositionTree::Elim{
                std::move(rec),
                std::make_unique<DecompositionTree>(std::move(c.structure))}};
          }
          return RealizedGame{std::move(g), std::move(tree)};
        }
      },
      t.node);
}

RealizedGame realize_node(const GenTree& t, const GenConfig& cfg, bool with_tree,
                          bool inside_product) {
  RealizedGame out = realize_impl(t, cfg, with_tree, inside_product);
  if (out.game.rows() != t.rows || out.game.cols() != t.cols)
    throw invariant_error("realized game does not match the planned dimensions");
  return out;
}

}  // namespace

int GenTree::height() const {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Leaf>)
          return 0;
        else if constexpr (std::is_same_v<T, Elim>)
          return 1 + v.child->height();
        else
          return 1 + std::max(v.left->height(), v.right->height());
      },
      node);
}

long GenTree::max_leaf_size() const {
  return std::visit(
      [](const auto& v) -> long {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Leaf>)
          return static_cast<long>(v.n) * v.m;
        else if constexpr (std::is_same_v<T, Elim>)
          return v.child->max_leaf_size();
        else
          return std::max(v.left->max_leaf_size(), v.right->max_leaf_size());
      },
      node);
}

GenTree generate_tree(const GenConfig& config) {
  validate(config);
  Generator gen(config);
  Rng rng(config.seed);
  const int n = static_cast<int>(rng.range(config.min_strategies, config.max_strategies));
  const int m = static_cast<int>(rng.range(config.min_strategies, config.max_strategies));
  if (static_cast<long>(n) * m > config.leaf_max_size) {
    if (!gen.oracle.viable(n, m))
      throw config_error("drawn root shape " + std::to_string(n) + "x" +
                         std::to_string(m) + " cannot decompose to leaves of size <= " +
                         std::to_string(config.leaf_max_size));
    if (gen.oracle.height_bound(n, m) > config.max_height)
      throw config_error("drawn root shape " + std::to_string(n) + "x" +
                         std::to_string(m) + " needs more than max_height levels");
  }
  return gen.gen_node(n, m, config.max_height, rng.split(1), false);
}

BimatrixGame realize(const GenTree& tree, const GenConfig& config) {
  validate(config);
  return realize_node(tree, config, false, false).game;
}

RealizedGame realize_with_structure(const GenTree& tree, const GenConfig& config) {
  validate(config);
  return realize_node(tree, config, true, false);
}

}  // namespace gamedec
