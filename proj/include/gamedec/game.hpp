#pragma once

#include <utility>
#include <vector>

#include "gamedec/rational.hpp"

namespace gamedec {

/// Two-player game in normal form: equal-dimension payoff matrices (A, B).
/// Player 1 picks a row of A, player 2 a column of B. Immutable once built.
class BimatrixGame {
 public:
  BimatrixGame(int rows, int cols);  // all payoffs zero
  BimatrixGame(int rows, int cols, std::vector<Rational> a, std::vector<Rational> b);
  static BimatrixGame from_rows(const std::vector<std::vector<Rational>>& a,
                                const std::vector<std::vector<Rational>>& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long size() const { return static_cast<long>(rows_) * cols_; }

  const Rational& a(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& b(int i, int j) const { return b_[static_cast<size_t>(i) * cols_ + j]; }

  /// True when every payoff has denominator 1 (computed at construction).
  bool integral() const { return integral_; }

  bool operator==(const BimatrixGame& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && b_ == o.b_;
  }

 private:
  int rows_;
  int cols_;
  bool integral_;
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

/// Probability distribution over one player's pure strategies.
/// Entries are exact rationals, nonnegative, summing to exactly 1.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<Rational> probs);
  static MixedStrategy uniform(int k);
  static MixedStrategy pure(int index, int k);

  int size() const { return static_cast<int>(p_.size()); }
  const Rational& operator[](int i) const { return p_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& probs() const { return p_; }

  bool operator==(const MixedStrategy&) const = default;

 private:
  std::vector<Rational> p_;
};

/// Strategy pair with its expected payoffs (P, Q) on the game it belongs to.
struct Equilibrium {
  MixedStrategy x;
  MixedStrategy y;
  Rational p1;
  Rational p2;

  bool operator==(const Equilibrium&) const = default;
};

/// Exact bilinear forms (x^T A y, x^T B y).
std::pair<Rational, Rational> expected_payoffs(const BimatrixGame& g,
                                               const MixedStrategy& x,
                                               const MixedStrategy& y);

/// Player 1: max_i (A y)_i. Player 2: max_j (x^T B)_j.
Rational best_response_value(const BimatrixGame& g, int player,
                             const MixedStrategy& opponent);

/// Exact Nash test, zero tolerance: no pure deviation improves either player.
bool is_nash(const BimatrixGame& g, const MixedStrategy& x, const MixedStrategy& y);

/// (A y)_i for every row i.
std::vector<Rational> row_payoffs(const BimatrixGame& g, const MixedStrategy& y);
/// (x^T B)_j for every column j.
std::vector<Rational> col_payoffs(const BimatrixGame& g, const MixedStrategy& x);

/// Bundles (x, y) with payoffs computed on g.
Equilibrium make_equilibrium(const BimatrixGame& g, MixedStrategy x, MixedStrategy y);

}  // namespace gamedec
