#include "gamedec/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gamedec/errors.hpp"

namespace gamedec {

namespace {

std::vector<int> divisors(int v) {
  std::vector<int> out;
  for (int d = 1; d <= v; ++d)
    if (v % d == 0) out.push_back(d);
  return out;
}

}  // namespace

std::optional<SumDecomposition> detect_sum(const BimatrixGame& g, DetectStats* stats) {
  DetectStats local;
  DetectStats& st = stats ? *stats : local;
  const int n = g.rows(), m = g.cols();
  if (n < 2 || m < 2) return std::nullopt;

  const auto a = [&](int i, int j) -> const Rational& { ++st.entry_reads; return g.a(i, j); };
  const auto b = [&](int i, int j) -> const Rational& { ++st.entry_reads; return g.b(i, j); };

  // K has to sit in the top-right corner of player 1's matrix.
  const Rational k = a(0, m - 1);
  if (k.sign() <= 0) return std::nullopt;
  const Rational neg_k = -k;
  if (b(0, m - 1) != neg_k) return std::nullopt;

  // Maximal prefix of rows carrying (K, -K) in the last column fixes n1;
  // the last row fixes m1 the same way.
  int n1 = 1;
  while (n1 < n && a(n1, m - 1) == k && b(n1, m - 1) == neg_k) ++n1;
  if (n1 >= n) return std::nullopt;
  int m1 = 0;
  while (m1 < m && a(n - 1, m1) == k && b(n - 1, m1) == neg_k) ++m1;
  if (m1 < 1 || m1 >= m) return std::nullopt;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const bool diagonal = (i < n1) == (j < m1);
      if (diagonal) {
        if (a(i, j).abs() >= k || b(i, j).abs() >= k) return std::nullopt;
      } else {
        if (a(i, j) != k || b(i, j) != neg_k) return std::nullopt;
      }
    }

  const int n2 = n - n1, m2 = m - m1;
  std::vector<Rational> a1, b1, a2, b2;
  a1.reserve(static_cast<size_t>(n1) * m1);
  b1.reserve(static_cast<size_t>(n1) * m1);
  a2.reserve(static_cast<size_t>(n2) * m2);
  b2.reserve(static_cast<size_t>(n2) * m2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < m1; ++j) a1.push_back(g.a(i, j));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < m1; ++j) b1.push_back(g.b(i, j));
  for (int i = n1; i < n; ++i)
    for (int j = m1; j < m; ++j) a2.push_back(g.a(i, j));
  for (int i = n1; i < n; ++i)
    for (int j = m1; j < m; ++j) b2.push_back(g.b(i, j));

  return SumDecomposition{BimatrixGame(n1, m1, std::move(a1), std::move(b1)),
                          BimatrixGame(n2, m2, std::move(a2), std::move(b2)),
                          SumLayout{n1, m1, k}};
}

std::optional<ProductDecomposition> detect_product(const BimatrixGame& g,
                                                   DetectStats* stats) {
  DetectStats local;
  DetectStats& st = stats ? *stats : local;
  const int n = g.rows(), m = g.cols();
  const std::vector<int> row_divs = divisors(n);
  const std::vector<int> col_divs = divisors(m);

  const auto a = [&](int i, int j) -> const Rational& { ++st.entry_reads; return g.a(i, j); };
  const auto b = [&](int i, int j) -> const Rational& { ++st.entry_reads; return g.b(i, j); };

  for (int n1 : row_divs) {
    const int n2 = n / n1;
    for (int m1 : col_divs) {
      const int m2 = m / m1;
      if ((n1 == 1 && m1 == 1) || (n2 == 1 && m2 == 1)) continue;
      ++st.layouts_tried;

      // Candidate factors read off along the first row/column of blocks;
      // factor 2 is normalized so its (1,1) payoffs are zero.
      std::vector<Rational> a1(static_cast<size_t>(n1) * m1), b1(a1.size());
      std::vector<Rational> a2(static_cast<size_t>(n2) * m2), b2(a2.size());
      const Rational base_a = a(0, 0);
      const Rational base_b = b(0, 0);
      for (int i1 = 0; i1 < n1; ++i1)
        for (int j1 = 0; j1 < m1; ++j1) {
          a1[static_cast<size_t>(i1) * m1 + j1] = a(i1 * n2, j1);
          b1[static_cast<size_t>(i1) * m1 + j1] = b(i1 * n2, j1);
        }
      for (int i2 = 0; i2 < n2; ++i2)
        for (int j2 = 0; j2 < m2; ++j2) {
          a2[static_cast<size_t>(i2) * m2 + j2] = a(i2, j2 * m1) - base_a;
          b2[static_cast<size_t>(i2) * m2 + j2] = b(i2, j2 * m1) - base_b;
        }

      bool ok = true;
      for (int i1 = 0; ok && i1 < n1; ++i1)
        for (int i2 = 0; ok && i2 < n2; ++i2) {
          const int r = i1 * n2 + i2;
          for (int j2 = 0; ok && j2 < m2; ++j2)
            for (int j1 = 0; j1 < m1; ++j1) {
              const int c = j2 * m1 + j1;
              if (a(r, c) != a1[static_cast<size_t>(i1) * m1 + j1] +
                                 a2[static_cast<size_t>(i2) * m2 + j2] ||
                  b(r, c) != b1[static_cast<size_t>(i1) * m1 + j1] +
                                 b2[static_cast<size_t>(i2) * m2 + j2]) {
                ok = false;
                break;
              }
            }
        }
      if (!ok) continue;

      return ProductDecomposition{
          BimatrixGame(n1, m1, std::move(a1), std::move(b1)),
          BimatrixGame(n2, m2, std::move(a2), std::move(b2)),
          ProductLayout{n1, m1, n2, m2}};
    }
  }
  return std::nullopt;
}

std::pair<BimatrixGame, EliminationRecord> eliminate_dominated(const BimatrixGame& g) {
  std::vector<int> rows(static_cast<size_t>(g.rows()));
  std::vector<int> cols(static_cast<size_t>(g.cols()));
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);

  EliminationRecord rec;
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t di = 0; di < rows.size() && !changed; ++di)
      for (size_t dj = 0; dj < rows.size() && !changed; ++dj) {
        if (di == dj) continue;
        bool dom = true;
        for (int c : cols)
          if (!(g.a(rows[dj], c) > g.a(rows[di], c))) {
            dom = false;
            break;
          }
        if (!dom) continue;
        Removal r{1, static_cast<int>(di), static_cast<int>(dj), {}, {}};
        for (int c : cols) r.a_payoffs.push_back(g.a(rows[di], c));
        for (int c : cols) r.b_payoffs.push_back(g.b(rows[di], c));
        rec.removals.push_back(std::move(r));
        rows.erase(rows.begin() + static_cast<long>(di));
        changed = true;
      }
    if (changed) continue;
    for (size_t di = 0; di < cols.size() && !changed; ++di)
      for (size_t dj = 0; dj < cols.size() && !changed; ++dj) {
        if (di == dj) continue;
        bool dom = true;
        for (int r : rows)
          if (!(g.b(r, cols[dj]) > g.b(r, cols[di]))) {
            dom = false;
            break;
          }
        if (!dom) continue;
        Removal r{2, static_cast<int>(di), static_cast<int>(dj), {}, {}};
        for (int row : rows) r.a_payoffs.push_back(g.a(row, cols[di]));
        for (int row : rows) r.b_payoffs.push_back(g.b(row, cols[di]));
        rec.removals.push_back(std::move(r));
        cols.erase(cols.begin() + static_cast<long>(di));
        changed = true;
      }
  }

  std::vector<Rational> ra, rb;
  ra.reserve(rows.size() * cols.size());
  rb.reserve(rows.size() * cols.size());
  for (int r : rows)
    for (int c : cols) ra.push_back(g.a(r, c));
  for (int r : rows)
    for (int c : cols) rb.push_back(g.b(r, c));
  rec.surviving_rows = std::move(rows);
  rec.surviving_cols = std::move(cols);
  BimatrixGame reduced(static_cast<int>(rec.surviving_rows.size()),
                       static_cast<int>(rec.surviving_cols.size()),
                       std::move(ra), std::move(rb));
  return {std::move(reduced), std::move(rec)};
}

BimatrixGame reinsert_eliminated(const BimatrixGame& reduced,
                                 const EliminationRecord& record) {
  std::vector<std::vector<Rational>> a(static_cast<size_t>(reduced.rows()));
  std::vector<std::vector<Rational>> b(a.size());
  for (int i = 0; i < reduced.rows(); ++i)
    for (int j = 0; j < reduced.cols(); ++j) {
      a[static_cast<size_t>(i)].push_back(reduced.a(i, j));
      b[static_cast<size_t>(i)].push_back(reduced.b(i, j));
    }

  for (auto it = record.removals.rbegin(); it != record.removals.rend(); ++it) {
    const Removal& r = *it;
    if (r.player == 1) {
      const size_t want = a.empty() ? r.a_payoffs.size() : a[0].size();
      if (r.a_payoffs.size() != want || r.b_payoffs.size() != want ||
          r.index < 0 || static_cast<size_t>(r.index) > a.size())
        throw contract_error("elimination record does not fit the reduced game");
      a.insert(a.begin() + r.index, r.a_payoffs);
      b.insert(b.begin() + r.index, r.b_payoffs);
    } else if (r.player == 2) {
      if (r.a_payoffs.size() != a.size() || r.b_payoffs.size() != a.size() ||
          r.index < 0 || a.empty() || static_cast<size_t>(r.index) > a[0].size())
        throw contract_error("elimination record does not fit the reduced game");
      for (size_t i = 0; i < a.size(); ++i) {
        a[i].insert(a[i].begin() + r.index, r.a_payoffs[i]);
        b[i].insert(b[i].begin() + r.index, r.b_payoffs[i]);
      }
    } else {
      throw contract_error("elimination record names player " + std::to_string(r.player));
    }
  }
  return BimatrixGame::from_rows(a, b);
}

BimatrixGame DecompositionTree::reconstruct() const {
  return std::visit(
      [](const auto& v) -> BimatrixGame {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Leaf>) {
          return v.game;
        } else if constexpr (std::is_same_v<T, Sum>) {
          return sum(v.left->reconstruct(), v.right->reconstruct(), v.layout.k);
        } else if constexpr (std::is_same_v<T, Product>) {
          return product(v.left->reconstruct(), v.right->reconstruct());
        } else {
          return reinsert_eliminated(v.child->reconstruct(), v.record);
        }
      },
      node);
}

DecompositionTree::Counts DecompositionTree::counts() const {
  Counts c;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Leaf>) {
          c.leaf = 1;
        } else if constexpr (std::is_same_v<T, Elim>) {
          c = v.child->counts();
          ++c.elim;
        } else {
          const Counts l = v.left->counts();
          const Counts r = v.right->counts();
          c.sum = l.sum + r.sum;
          c.product = l.product + r.product;
          c.elim = l.elim + r.elim;
          c.leaf = l.leaf + r.leaf;
          if constexpr (std::is_same_v<T, Sum>)
            ++c.sum;
          else
            ++c.product;
        }
      },
      node);
  return c;
}

std::vector<const BimatrixGame*> DecompositionTree::leaves() const {
  std::vector<const BimatrixGame*> out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Leaf>) {
          out.push_back(&v.game);
        } else if constexpr (std::is_same_v<T, Elim>) {
          out = v.child->leaves();
        } else {
          out = v.left->leaves();
          const auto r = v.right->leaves();
          out.insert(out.end(), r.begin(), r.end());
        }
      },
      node);
  return out;
}

std::vector<long> DecompositionTree::leaf_sizes() const {
  std::vector<long> out;
  for (const BimatrixGame* g : leaves()) out.push_back(g->size());
  std::sort(out.begin(), out.end());
  return out;
}

int DecompositionTree::height() const {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Leaf>) {
          return 0;
        } else if constexpr (std::is_same_v<T, Elim>) {
          return 1 + v.child->height();
        } else {
          return 1 + std::max(v.left->height(), v.right->height());
        }
      },
      node);
}

DecompositionTree decompose_tree(const BimatrixGame& g, bool eliminate,
                                 DetectOrder order) {
  if (eliminate) {
    auto [reduced, record] = eliminate_dominated(g);
    if (!record.empty()) {
      auto child = std::make_unique<DecompositionTree>(
          decompose_tree(reduced, eliminate, order));
      return DecompositionTree{
          DecompositionTree::Elim{std::move(record), std::move(child)}};
    }
  }

  const auto try_sum = [&]() -> std::optional<DecompositionTree> {
    auto d = detect_sum(g);
    if (!d) return std::nullopt;
    auto left = std::make_unique<DecompositionTree>(
        decompose_tree(d->g1, eliminate, order));
    auto right = std::make_unique<DecompositionTree>(
        decompose_tree(d->g2, eliminate, order));
    return DecompositionTree{DecompositionTree::Sum{
        std::move(d->layout), std::move(left), std::move(right)}};
  };
  const auto try_product = [&]() -> std::optional<DecompositionTree> {
    auto d = detect_product(g);
    if (!d) return std::nullopt;
    auto left = std::make_unique<DecompositionTree>(
        decompose_tree(d->g1, eliminate, order));
    auto right = std::make_unique<DecompositionTree>(
        decompose_tree(d->g2, eliminate, order));
    return DecompositionTree{DecompositionTree::Product{
        d->layout, std::move(left), std::move(right)}};
  };

  std::optional<DecompositionTree> found =
      order == DetectOrder::sum_first ? try_sum() : try_product();
  if (!found) found = order == DetectOrder::sum_first ? try_product() : try_sum();
  if (found) return std::move(*found);
  return DecompositionTree{DecompositionTree::Leaf{g}};
}

}  // namespace gamedec
