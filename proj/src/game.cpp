#include "gamedec/game.hpp"

#include <algorithm>
#include <string>

#include "gamedec/errors.hpp"

namespace gamedec {

namespace {

bool all_integral(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_integer(); });
}

void check_lengths(const BimatrixGame& g, const MixedStrategy& x, const MixedStrategy& y) {
  if (x.size() != g.rows())
    throw contract_error("row strategy has length " + std::to_string(x.size()) +
                         ", game has " + std::to_string(g.rows()) + " rows");
  if (y.size() != g.cols())
    throw contract_error("column strategy has length " + std::to_string(y.size()) +
                         ", game has " + std::to_string(g.cols()) + " columns");
}

// Common denominator form of a strategy: probs[j] = num[j] / den.
struct ScaledStrategy {
  std::vector<mpz_class> num;
  mpz_class den;
};

ScaledStrategy scale(const MixedStrategy& s) {
  ScaledStrategy out;
  out.den = 1;
  for (int i = 0; i < s.size(); ++i)
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), s[i].denominator_raw());
  out.num.reserve(static_cast<size_t>(s.size()));
  mpz_class factor;
  for (int i = 0; i < s.size(); ++i) {
    mpz_divexact(factor.get_mpz_t(), out.den.get_mpz_t(), s[i].denominator_raw());
    mpz_class n;
    mpz_mul(n.get_mpz_t(), factor.get_mpz_t(), s[i].numerator_raw());
    out.num.push_back(std::move(n));
  }
  return out;
}

}  // namespace

BimatrixGame::BimatrixGame(int rows, int cols)
    : rows_(rows), cols_(cols), integral_(true),
      a_(static_cast<size_t>(rows) * cols), b_(static_cast<size_t>(rows) * cols) {
  if (rows < 1 || cols < 1)
    throw contract_error("game dimensions must be at least 1x1");
}

BimatrixGame::BimatrixGame(int rows, int cols, std::vector<Rational> a, std::vector<Rational> b)
    : rows_(rows), cols_(cols), a_(std::move(a)), b_(std::move(b)) {
  if (rows < 1 || cols < 1)
    throw contract_error("game dimensions must be at least 1x1");
  const size_t want = static_cast<size_t>(rows) * cols;
  if (a_.size() != want || b_.size() != want)
    throw contract_error("payoff matrices do not match the stated dimensions");
  integral_ = all_integral(a_) && all_integral(b_);
}

BimatrixGame BimatrixGame::from_rows(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<std::vector<Rational>>& b) {
  if (a.empty() || a[0].empty() || a.size() != b.size())
    throw contract_error("payoff matrices must be nonempty and equally sized");
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(a[0].size());
  std::vector<Rational> fa, fb;
  fa.reserve(static_cast<size_t>(n) * m);
  fb.reserve(static_cast<size_t>(n) * m);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != m || static_cast<int>(b[i].size()) != m)
      throw contract_error("ragged payoff matrix");
    for (int j = 0; j < m; ++j) fa.push_back(a[i][j]);
    for (int j = 0; j < m; ++j) fb.push_back(b[i][j]);
  }
  return BimatrixGame(n, m, std::move(fa), std::move(fb));
}

MixedStrategy::MixedStrategy(std::vector<Rational> probs) : p_(std::move(probs)) {
  if (p_.empty()) throw contract_error("mixed strategy must have at least one entry");
  Rational total;
  for (const Rational& p : p_) {
    if (p.sign() < 0) throw contract_error("mixed strategy entry is negative: " + p.str());
    total += p;
  }
  if (total != Rational(1))
    throw contract_error("mixed strategy entries sum to " + total.str() + ", expected 1");
}

MixedStrategy MixedStrategy::uniform(int k) {
  if (k < 1) throw contract_error("uniform strategy needs at least one pure strategy");
  return MixedStrategy(std::vector<Rational>(static_cast<size_t>(k), Rational(1, k)));
}

MixedStrategy MixedStrategy::pure(int index, int k) {
  if (k < 1 || index < 0 || index >= k)
    throw contract_error("pure strategy index out of range");
  std::vector<Rational> p(static_cast<size_t>(k), Rational(0));
  p[static_cast<size_t>(index)] = Rational(1);
  return MixedStrategy(std::move(p));
}

std::vector<Rational> row_payoffs(const BimatrixGame& g, const MixedStrategy& y) {
  if (y.size() != g.cols())
    throw contract_error("column strategy has length " + std::to_string(y.size()) +
                         ", game has " + std::to_string(g.cols()) + " columns");
  const int n = g.rows(), m = g.cols();
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(n));
  if (g.integral()) {
    ScaledStrategy sy = scale(y);
    mpz_class acc;
    for (int i = 0; i < n; ++i) {
      acc = 0;
      for (int j = 0; j < m; ++j)
        mpz_addmul(acc.get_mpz_t(), g.a(i, j).numerator_raw(), sy.num[static_cast<size_t>(j)].get_mpz_t());
      out.emplace_back(acc, sy.den);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      Rational acc;
      for (int j = 0; j < m; ++j) acc += g.a(i, j) * y[j];
      out.push_back(std::move(acc));
    }
  }
  return out;
}

std::vector<Rational> col_payoffs(const BimatrixGame& g, const MixedStrategy& x) {
  if (x.size() != g.rows())
    throw contract_error("row strategy has length " + std::to_string(x.size()) +
                         ", game has " + std::to_string(g.rows()) + " rows");
  const int n = g.rows(), m = g.cols();
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(m));
  if (g.integral()) {
    ScaledStrategy sx = scale(x);
    mpz_class acc;
    for (int j = 0; j < m; ++j) {
      acc = 0;
      for (int i = 0; i < n; ++i)
        mpz_addmul(acc.get_mpz_t(), g.b(i, j).numerator_raw(), sx.num[static_cast<size_t>(i)].get_mpz_t());
      out.emplace_back(acc, sx.den);
    }
  } else {
    for (int j = 0; j < m; ++j) {
      Rational acc;
      for (int i = 0; i < n; ++i) acc += g.b(i, j) * x[i];
      out.push_back(std::move(acc));
    }
  }
  return out;
}

std::pair<Rational, Rational> expected_payoffs(const BimatrixGame& g,
                                               const MixedStrategy& x,
                                               const MixedStrategy& y) {
  check_lengths(g, x, y);
  const std::vector<Rational> rv = row_payoffs(g, y);
  const std::vector<Rational> cv = col_payoffs(g, x);
  Rational p, q;
  for (int i = 0; i < g.rows(); ++i) p += x[i] * rv[static_cast<size_t>(i)];
  for (int j = 0; j < g.cols(); ++j) q += y[j] * cv[static_cast<size_t>(j)];
  return {std::move(p), std::move(q)};
}

Rational best_response_value(const BimatrixGame& g, int player,
                             const MixedStrategy& opponent) {
  if (player != 1 && player != 2)
    throw contract_error("player must be 1 or 2");
  const std::vector<Rational> vals =
      player == 1 ? row_payoffs(g, opponent) : col_payoffs(g, opponent);
  return *std::max_element(vals.begin(), vals.end());
}

bool is_nash(const BimatrixGame& g, const MixedStrategy& x, const MixedStrategy& y) {
  check_lengths(g, x, y);
  const std::vector<Rational> rv = row_payoffs(g, y);
  const std::vector<Rational> cv = col_payoffs(g, x);
  Rational p, q;
  for (int i = 0; i < g.rows(); ++i) p += x[i] * rv[static_cast<size_t>(i)];
  for (int j = 0; j < g.cols(); ++j) q += y[j] * cv[static_cast<size_t>(j)];
  for (const Rational& r : rv)
    if (r > p) return false;
  for (const Rational& c : cv)
    if (c > q) return false;
  return true;
}

Equilibrium make_equilibrium(const BimatrixGame& g, MixedStrategy x, MixedStrategy y) {
  auto [p, q] = expected_payoffs(g, x, y);
  return Equilibrium{std::move(x), std::move(y), std::move(p), std::move(q)};
}

}  // namespace gamedec
