#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "gamedec/decompose.hpp"
#include "gamedec/errors.hpp"
#include "gamedec/rng.hpp"
#include "golden.hpp"

using namespace gamedec;

namespace {

// Copies a random strategy of one player and weakens every own payoff by a
// small positive slack, making the copy strictly dominated.
BimatrixGame inject_dominated(const BimatrixGame& g, Rng& rng, int copies) {
  std::vector<std::vector<Rational>> a(static_cast<size_t>(g.rows()));
  std::vector<std::vector<Rational>> b(a.size());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      a[static_cast<size_t>(i)].push_back(g.a(i, j));
      b[static_cast<size_t>(i)].push_back(g.b(i, j));
    }
  for (int c = 0; c < copies; ++c) {
    if (rng.below(2) == 0) {
      const size_t src = rng.below(a.size());
      const size_t pos = rng.below(a.size() + 1);
      std::vector<Rational> ra, rb;
      for (size_t j = 0; j < a[src].size(); ++j) {
        ra.push_back(a[src][j] - Rational(rng.range(1, 3)));
        rb.push_back(b[src][j]);
      }
      a.insert(a.begin() + static_cast<long>(pos), std::move(ra));
      b.insert(b.begin() + static_cast<long>(pos), std::move(rb));
    } else {
      const size_t src = rng.below(a[0].size());
      const size_t pos = rng.below(a[0].size() + 1);
      for (size_t i = 0; i < a.size(); ++i) {
        const Rational va = a[i][src];
        const Rational vb = b[i][src] - Rational(rng.range(1, 3));
        a[i].insert(a[i].begin() + static_cast<long>(pos), va);
        b[i].insert(b[i].begin() + static_cast<long>(pos), vb);
      }
    }
  }
  return BimatrixGame::from_rows(a, b);
}

// Independent elimination with a randomized removal choice; used to check
// that iterated strict dominance is insensitive to scan order.
std::pair<std::vector<int>, std::vector<int>> eliminate_shuffled(const BimatrixGame& g,
                                                                 Rng& rng) {
  std::vector<int> rows(static_cast<size_t>(g.rows())), cols(static_cast<size_t>(g.cols()));
  for (size_t i = 0; i < rows.size(); ++i) rows[i] = static_cast<int>(i);
  for (size_t j = 0; j < cols.size(); ++j) cols[j] = static_cast<int>(j);
  for (;;) {
    std::vector<std::pair<int, size_t>> candidates;  // (player, surviving position)
    for (size_t di = 0; di < rows.size(); ++di)
      for (size_t dj = 0; dj < rows.size(); ++dj) {
        if (di == dj) continue;
        bool dom = true;
        for (int c : cols)
          if (!(g.a(rows[dj], c) > g.a(rows[di], c))) {
            dom = false;
            break;
          }
        if (dom) {
          candidates.emplace_back(1, di);
          break;
        }
      }
    for (size_t di = 0; di < cols.size(); ++di)
      for (size_t dj = 0; dj < cols.size(); ++dj) {
        if (di == dj) continue;
        bool dom = true;
        for (int r : rows)
          if (!(g.b(r, cols[dj]) > g.b(r, cols[di]))) {
            dom = false;
            break;
          }
        if (dom) {
          candidates.emplace_back(2, di);
          break;
        }
      }
    if (candidates.empty()) break;
    const auto [player, pos] = candidates[rng.below(candidates.size())];
    if (player == 1)
      rows.erase(rows.begin() + static_cast<long>(pos));
    else
      cols.erase(cols.begin() + static_cast<long>(pos));
  }
  return {rows, cols};
}

std::multiset<std::string> leaf_fingerprints(const DecompositionTree& t) {
  std::multiset<std::string> out;
  for (const BimatrixGame* g : t.leaves()) {
    std::string s = std::to_string(g->rows()) + "x" + std::to_string(g->cols()) + ":";
    for (int i = 0; i < g->rows(); ++i)
      for (int j = 0; j < g->cols(); ++j)
        s += g->a(i, j).str() + "," + g->b(i, j).str() + ";";
    out.insert(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("detect_sum inverts sum on the worked example") {
  const auto s = sum(golden::example_a(), golden::example_b(), Rational(5));
  const auto d = detect_sum(s);
  REQUIRE(d.has_value());
  CHECK(d->layout.n1 == 4);
  CHECK(d->layout.m1 == 4);
  CHECK(d->layout.k == Rational(5));
  CHECK(d->g1 == golden::example_a());
  CHECK(d->g2 == golden::example_b());
}

TEST_CASE("detect_sum rejects the worked 4x4 matrix") {
  // trace: candidate K = 4 with n1 = m1 = 1, then the block check fails at
  // A[1,2] = 2 != 4
  CHECK_FALSE(detect_sum(golden::example_a()).has_value());
  CHECK_FALSE(detect_sum(golden::example_b()).has_value());
  CHECK_FALSE(detect_sum(golden::matching_pennies()).has_value());
}

TEST_CASE("detect_sum recovers matching pennies as a sum of trivial games") {
  const auto mp = sum(golden::one_by_one(0, 0), golden::one_by_one(0, 0), Rational(1));
  const auto d = detect_sum(mp);
  REQUIRE(d.has_value());
  CHECK(d->layout.n1 == 1);
  CHECK(d->layout.m1 == 1);
  CHECK(d->layout.k == Rational(1));
  CHECK(d->g1 == golden::one_by_one(0, 0));
  CHECK(d->g2 == golden::one_by_one(0, 0));
}

TEST_CASE("detect_product inverts the printed 12x12 product exactly") {
  const auto prod = product(golden::example_a(), golden::example_b());
  const auto d = detect_product(prod);
  REQUIRE(d.has_value());
  CHECK(d->layout == ProductLayout{4, 4, 3, 3});
  // B[1,1] = 0, so the normalization constants vanish
  CHECK(d->g1 == golden::example_a());
  CHECK(d->g2 == golden::example_b());
}

TEST_CASE("detect_product normalizes factor 2 to zero at its corner") {
  const auto mp = golden::matching_pennies();
  const auto d = detect_product(product(mp, mp));
  REQUIRE(d.has_value());
  CHECK(d->layout == ProductLayout{2, 2, 2, 2});
  CHECK(d->g1 == golden::make_game({{2, 0}, {0, 2}}, {{-2, 0}, {0, -2}}));
  CHECK(d->g2 == golden::make_game({{0, -2}, {-2, 0}}, {{0, 2}, {2, 0}}));
  CHECK(product(d->g1, d->g2) == product(mp, mp));
}

TEST_CASE("detect_product rejects the worked component matrices") {
  CHECK_FALSE(detect_product(golden::example_a()).has_value());
  CHECK_FALSE(detect_product(golden::example_b()).has_value());
}

TEST_CASE("eliminate_dominated on the worked 3x3 matrix") {
  const auto g = golden::example_b();  // row 1 is (0,0,0), row 3 is (1,2,3)
  const auto [reduced, rec] = eliminate_dominated(g);
  // row 1 falls to row 3; in the zero-sum B-part, column 3 (-1,-3) then
  // falls to column 2 (0,-2)
  REQUIRE(rec.removals.size() == 2);
  CHECK(rec.removals[0].player == 1);
  CHECK(rec.removals[0].index == 0);
  CHECK(rec.removals[0].dominator == 2);  // first strict dominator is row 3
  CHECK(rec.removals[1].player == 2);
  CHECK(rec.removals[1].index == 2);
  CHECK(rec.removals[1].dominator == 1);
  CHECK(reduced.rows() == 2);
  CHECK(reduced.cols() == 2);
  CHECK(rec.surviving_rows == std::vector<int>{1, 2});
  CHECK(rec.surviving_cols == std::vector<int>{0, 1});
  CHECK(reduced == golden::zero_sum({{1, 0}, {1, 2}}));
  CHECK(reinsert_eliminated(reduced, rec) == g);
}

TEST_CASE("eliminate_dominated leaves matching pennies alone") {
  const auto [reduced, rec] = eliminate_dominated(golden::matching_pennies());
  CHECK(rec.empty());
  CHECK(reduced == golden::matching_pennies());
  CHECK(rec.surviving_rows == std::vector<int>{0, 1});
}

TEST_CASE("eliminate_dominated iterates down to a single cell") {
  const auto [reduced, rec] = eliminate_dominated(golden::pd_like());
  REQUIRE(rec.removals.size() == 2);
  CHECK(rec.removals[0].player == 1);
  CHECK(rec.removals[0].index == 0);
  CHECK(rec.removals[0].dominator == 1);
  CHECK(rec.removals[1].player == 2);
  CHECK(rec.removals[1].index == 0);
  CHECK(rec.removals[1].dominator == 1);
  CHECK(reduced == golden::one_by_one(1, 1));
}

TEST_CASE("reinsert_eliminated undoes elimination bit-exactly") {
  Rng rng(77);
  for (int it = 0; it < 60; ++it) {
    const int n = static_cast<int>(rng.range(1, 4));
    const int m = static_cast<int>(rng.range(1, 4));
    auto g = golden::random_game(rng, n, m, 0, 6);
    g = inject_dominated(g, rng, static_cast<int>(rng.range(0, 3)));
    const auto [reduced, rec] = eliminate_dominated(g);
    CHECK(reinsert_eliminated(reduced, rec) == g);
  }
}

TEST_CASE("sum round trip over random component pairs") {
  Rng rng(88);
  for (int it = 0; it < 100; ++it) {
    const auto g1 = golden::random_game(rng, static_cast<int>(rng.range(1, 3)),
                                        static_cast<int>(rng.range(1, 3)), -8, 8);
    const auto g2 = golden::random_game(rng, static_cast<int>(rng.range(1, 3)),
                                        static_cast<int>(rng.range(1, 3)), -8, 8);
    const Rational k(9 + static_cast<long>(rng.range(0, 3)));
    const auto d = detect_sum(sum(g1, g2, k));
    REQUIRE(d.has_value());
    CHECK(d->g1 == g1);
    CHECK(d->g2 == g2);
    CHECK(d->layout.k == k);
    CHECK(d->layout.n1 == g1.rows());
    CHECK(d->layout.m1 == g1.cols());
  }
}

TEST_CASE("product round trip over random component pairs") {
  Rng rng(99);
  for (int it = 0; it < 100; ++it) {
    // skip 1x1 factors: detection refuses to produce them
    int n1, m1, n2, m2;
    do {
      n1 = static_cast<int>(rng.range(1, 3));
      m1 = static_cast<int>(rng.range(1, 3));
    } while (n1 == 1 && m1 == 1);
    do {
      n2 = static_cast<int>(rng.range(1, 3));
      m2 = static_cast<int>(rng.range(1, 3));
    } while (n2 == 1 && m2 == 1);
    const auto g1 = golden::random_game(rng, n1, m1, 0, 9);
    const auto g2 = golden::random_game(rng, n2, m2, 0, 9);
    const auto compound = product(g1, g2);
    const auto d = detect_product(compound);
    REQUIRE(d.has_value());
    CHECK(product(d->g1, d->g2) == compound);
    if (d->layout == ProductLayout{n1, m1, n2, m2}) {
      // recovered factors differ from the inputs only by the normalization shift
      const Rational ca = g2.a(0, 0), cb = g2.b(0, 0);
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < m1; ++j) {
          CHECK(d->g1.a(i, j) == g1.a(i, j) + ca);
          CHECK(d->g1.b(i, j) == g1.b(i, j) + cb);
        }
      for (int i = 0; i < n2; ++i)
        for (int j = 0; j < m2; ++j) {
          CHECK(d->g2.a(i, j) == g2.a(i, j) - ca);
          CHECK(d->g2.b(i, j) == g2.b(i, j) - cb);
        }
    }
  }
}

TEST_CASE("sum and product detection are mutually exclusive") {
  Rng rng(111);
  for (int it = 0; it < 60; ++it) {
    const auto g1 = golden::random_game(rng, static_cast<int>(rng.range(1, 3)),
                                        static_cast<int>(rng.range(1, 3)), 0, 7);
    const auto g2 = golden::random_game(rng, static_cast<int>(rng.range(1, 3)),
                                        static_cast<int>(rng.range(1, 3)), 0, 7);
    const auto s = sum(g1, g2, Rational(8));
    const auto p = product(g1, g2);
    CHECK_FALSE((detect_sum(s).has_value() && detect_product(s).has_value()));
    CHECK_FALSE((detect_sum(p).has_value() && detect_product(p).has_value()));
    CHECK(detect_sum(s).has_value());
    CHECK_FALSE(detect_product(s).has_value());
  }
}

TEST_CASE("games decomposable as sums have no dominated strategies") {
  Rng rng(222);
  for (int it = 0; it < 60; ++it) {
    const auto g1 = golden::random_game(rng, static_cast<int>(rng.range(1, 3)),
                                        static_cast<int>(rng.range(1, 3)), -5, 5);
    const auto g2 = golden::random_game(rng, static_cast<int>(rng.range(1, 3)),
                                        static_cast<int>(rng.range(1, 3)), -5, 5);
    const auto s = sum(g1, g2, Rational(6));
    const auto [reduced, rec] = eliminate_dominated(s);
    CHECK(rec.empty());
    CHECK(reduced == s);
  }
}

TEST_CASE("elimination commutes with product composition") {
  Rng rng(333);
  for (int it = 0; it < 60; ++it) {
    auto g1 = golden::random_game(rng, static_cast<int>(rng.range(1, 3)),
                                  static_cast<int>(rng.range(1, 3)), 0, 6);
    auto g2 = golden::random_game(rng, static_cast<int>(rng.range(1, 3)),
                                  static_cast<int>(rng.range(1, 3)), 0, 6);
    g1 = inject_dominated(g1, rng, static_cast<int>(rng.range(0, 2)));
    g2 = inject_dominated(g2, rng, static_cast<int>(rng.range(0, 2)));

    const auto [r1, rec1] = eliminate_dominated(g1);
    const auto [r2, rec2] = eliminate_dominated(g2);
    const auto [rp, recp] = eliminate_dominated(product(g1, g2));
    CHECK(rp == product(r1, r2));

    // surviving product strategies are exactly the surviving index pairs
    std::vector<int> expect_rows, expect_cols;
    for (int i1 : rec1.surviving_rows)
      for (int i2 : rec2.surviving_rows) expect_rows.push_back(i1 * g2.rows() + i2);
    for (int j2 : rec2.surviving_cols)
      for (int j1 : rec1.surviving_cols) expect_cols.push_back(j2 * g1.cols() + j1);
    std::sort(expect_rows.begin(), expect_rows.end());
    std::sort(expect_cols.begin(), expect_cols.end());
    CHECK(recp.surviving_rows == expect_rows);
    CHECK(recp.surviving_cols == expect_cols);
  }
}

TEST_CASE("iterated elimination is scan-order independent") {
  Rng rng(444);
  for (int it = 0; it < 60; ++it) {
    auto g = golden::random_game(rng, static_cast<int>(rng.range(1, 3)),
                                 static_cast<int>(rng.range(1, 3)), 0, 5);
    g = inject_dominated(g, rng, static_cast<int>(rng.range(1, 3)));
    const auto [reduced, rec] = eliminate_dominated(g);
    for (int run = 0; run < 3; ++run) {
      const auto [rows, cols] = eliminate_shuffled(g, rng);
      CHECK(rows == rec.surviving_rows);
      CHECK(cols == rec.surviving_cols);
    }
  }
}

TEST_CASE("decompose_tree on the worked examples") {
  const auto prod = product(golden::example_a(), golden::example_b());
  const auto t = decompose_tree(prod, false);
  const auto* p = std::get_if<DecompositionTree::Product>(&t.node);
  REQUIRE(p != nullptr);
  CHECK(p->layout == ProductLayout{4, 4, 3, 3});
  CHECK(std::holds_alternative<DecompositionTree::Leaf>(p->left->node));
  CHECK(std::holds_alternative<DecompositionTree::Leaf>(p->right->node));
  CHECK(t.leaf_sizes() == std::vector<long>{9, 16});
  CHECK(t.reconstruct() == prod);

  const auto mp = sum(golden::one_by_one(0, 0), golden::one_by_one(0, 0), Rational(1));
  const auto t2 = decompose_tree(mp, false);
  const auto* s = std::get_if<DecompositionTree::Sum>(&t2.node);
  REQUIRE(s != nullptr);
  CHECK(s->layout.k == Rational(1));
  CHECK(t2.leaf_sizes() == std::vector<long>{1, 1});
  CHECK(t2.reconstruct() == mp);
}

TEST_CASE("an irreducible random 3x3 decomposes to a single leaf") {
  Rng rng(555);
  const auto g = golden::random_game(rng, 3, 3, 0, 50);
  for (const bool eliminate : {false, true}) {
    const auto t = decompose_tree(g, eliminate);
    CHECK(std::holds_alternative<DecompositionTree::Leaf>(t.node));
    CHECK(t.reconstruct() == g);
  }
}

TEST_CASE("decompose_tree handles elimination wrappers and recomposes") {
  Rng rng(666);
  for (int it = 0; it < 30; ++it) {
    const auto g1 = golden::random_game(rng, 2, 2, 0, 9);
    const auto g2 = golden::random_game(rng, static_cast<int>(rng.range(1, 2)),
                                        static_cast<int>(rng.range(1, 2)), 0, 9);
    auto g = sum(g1, g2, Rational(10));
    g = inject_dominated(g, rng, static_cast<int>(rng.range(1, 2)));
    const auto t = decompose_tree(g, true);
    CHECK(t.reconstruct() == g);
    CHECK(t.counts().elim >= 1);
    CHECK(t.counts().sum >= 1);
  }
}

TEST_CASE("leaf multiset does not depend on the detection order") {
  Rng rng(777);
  for (int it = 0; it < 25; ++it) {
    const auto a = golden::random_game(rng, 2, 2, 0, 6);
    const auto b = golden::random_game(rng, static_cast<int>(rng.range(1, 2)), 2, 0, 6);
    const auto c = golden::random_game(rng, 2, static_cast<int>(rng.range(1, 2)), 0, 6);
    const auto g = rng.below(2) == 0 ? product(sum(a, b, Rational(7)), c)
                                     : sum(product(a, c), b, Rational(50));
    const auto t1 = decompose_tree(g, false, DetectOrder::sum_first);
    const auto t2 = decompose_tree(g, false, DetectOrder::product_first);
    CHECK(leaf_fingerprints(t1) == leaf_fingerprints(t2));
    CHECK(t1.reconstruct() == g);
    CHECK(t2.reconstruct() == g);
  }
}

TEST_CASE("detection touches each entry a bounded number of times") {
  Rng rng(888);
  for (int it = 0; it < 10; ++it) {
    const auto g1 = golden::random_game(rng, 2, 3, 0, 9);
    const auto g2 = golden::random_game(rng, 3, 2, 0, 9);
    const auto s = sum(g1, g2, Rational(10));
    DetectStats st;
    detect_sum(s, &st);
    CHECK(st.entry_reads <= 4 * static_cast<size_t>(s.size()) + 8);

    const auto p = product(g1, g2);
    DetectStats stp;
    detect_product(p, &stp);
    CHECK(stp.layouts_tried >= 1);
    CHECK(stp.entry_reads <= (4 * static_cast<size_t>(p.size()) + 8) * stp.layouts_tried);
  }
  // absent answers stay linear too
  DetectStats st;
  detect_sum(golden::example_a(), &st);
  CHECK(st.entry_reads <= 4 * 16 + 8);
}
