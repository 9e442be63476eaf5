#include "gamedec/compose.hpp"

#include <string>

#include "gamedec/errors.hpp"

namespace gamedec {

namespace {

void check_layout(const ProductLayout& l) {
  if (l.n1 < 1 || l.m1 < 1 || l.n2 < 1 || l.m2 < 1)
    throw contract_error("product layout dimensions must be at least 1");
}

// First entry of either game with |entry| >= k, reported 1-based.
void check_sum_constant(const BimatrixGame& g, const Rational& k, int which) {
  const std::string tag = std::to_string(which);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      const std::string cell = "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
      if (g.a(i, j).abs() >= k)
        throw precondition_error("sum constant K = " + k.str() + " must exceed |A" + tag +
                                 cell + "| = " + g.a(i, j).abs().str());
      if (g.b(i, j).abs() >= k)
        throw precondition_error("sum constant K = " + k.str() + " must exceed |B" + tag +
                                 cell + "| = " + g.b(i, j).abs().str());
    }
}

}  // namespace

std::pair<int, int> product_index(int i1, int i2, int j1, int j2,
                                  const ProductLayout& layout) {
  check_layout(layout);
  if (i1 < 0 || i1 >= layout.n1 || i2 < 0 || i2 >= layout.n2 ||
      j1 < 0 || j1 >= layout.m1 || j2 < 0 || j2 >= layout.m2)
    throw contract_error("component index out of range for product layout");
  return {i1 * layout.n2 + i2, j2 * layout.m1 + j1};
}

std::array<int, 4> product_index_inverse(int r, int c, const ProductLayout& layout) {
  check_layout(layout);
  if (r < 0 || r >= layout.rows() || c < 0 || c >= layout.cols())
    throw contract_error("compound index out of range for product layout");
  return {r / layout.n2, r % layout.n2, c % layout.m1, c / layout.m1};
}

BimatrixGame product(const BimatrixGame& g1, const BimatrixGame& g2) {
  const ProductLayout layout{g1.rows(), g1.cols(), g2.rows(), g2.cols()};
  const int n = layout.rows(), m = layout.cols();
  std::vector<Rational> a(static_cast<size_t>(n) * m), b(static_cast<size_t>(n) * m);
  for (int i1 = 0; i1 < layout.n1; ++i1)
    for (int i2 = 0; i2 < layout.n2; ++i2) {
      const int r = i1 * layout.n2 + i2;
      for (int j1 = 0; j1 < layout.m1; ++j1)
        for (int j2 = 0; j2 < layout.m2; ++j2) {
          const int c = j2 * layout.m1 + j1;
          const size_t at = static_cast<size_t>(r) * m + c;
          a[at] = g1.a(i1, j1) + g2.a(i2, j2);
          b[at] = g1.b(i1, j1) + g2.b(i2, j2);
        }
    }
  return BimatrixGame(n, m, std::move(a), std::move(b));
}

BimatrixGame sum(const BimatrixGame& g1, const BimatrixGame& g2, const Rational& k) {
  check_sum_constant(g1, k, 1);
  check_sum_constant(g2, k, 2);
  const int n1 = g1.rows(), m1 = g1.cols();
  const int n = n1 + g2.rows(), m = m1 + g2.cols();
  std::vector<Rational> a(static_cast<size_t>(n) * m), b(static_cast<size_t>(n) * m);
  const Rational neg_k = -k;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const size_t at = static_cast<size_t>(i) * m + j;
      if (i < n1 && j < m1) {
        a[at] = g1.a(i, j);
        b[at] = g1.b(i, j);
      } else if (i >= n1 && j >= m1) {
        a[at] = g2.a(i - n1, j - m1);
        b[at] = g2.b(i - n1, j - m1);
      } else {
        a[at] = k;
        b[at] = neg_k;
      }
    }
  return BimatrixGame(n, m, std::move(a), std::move(b));
}

}  // namespace gamedec
