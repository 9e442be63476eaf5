#pragma once

#include <array>
#include <utility>

#include "gamedec/game.hpp"

namespace gamedec {

/// Shape of a product game: factor 1 is n1 x m1, factor 2 is n2 x m2,
/// the compound is (n1*n2) x (m1*m2).
struct ProductLayout {
  int n1;
  int m1;
  int n2;
  int m2;

  int rows() const { return n1 * n2; }
  int cols() const { return m1 * m2; }

  bool operator==(const ProductLayout&) const = default;
};

/// Shape of a sum game: summand 1 is n1 x m1 (top-left block), the constant
/// K fills player 1's off-diagonal blocks (-K for player 2).
struct SumLayout {
  int n1;
  int m1;
  Rational k;

  bool operator==(const SumLayout&) const = default;
};

/// Index bijection of the product construction, 0-based on both sides.
/// Rows are factor-1-major: r = i1*n2 + i2. Columns are factor-2-major:
/// c = j2*m1 + j1.
std::pair<int, int> product_index(int i1, int i2, int j1, int j2,
                                  const ProductLayout& layout);

/// Inverse of product_index: (r, c) -> (i1, i2, j1, j2).
std::array<int, 4> product_index_inverse(int r, int c, const ProductLayout& layout);

/// Product game: both components are played simultaneously, payoffs add.
BimatrixGame product(const BimatrixGame& g1, const BimatrixGame& g2);

/// Sum game: a matching-pennies choice of which component to play.
/// Requires k to strictly exceed the magnitude of every payoff in g1 and g2.
BimatrixGame sum(const BimatrixGame& g1, const BimatrixGame& g2, const Rational& k);

}  // namespace gamedec
