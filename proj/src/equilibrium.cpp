#include "gamedec/equilibrium.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gamedec/errors.hpp"

namespace gamedec {

namespace {

// Augmented integer matrix for an exact linear solve. Equations arrive as
// rational rows and are cleared to integers row by row.
struct LinearSystem {
  int vars = 0;
  std::vector<std::vector<mpz_class>> rows;

  void add_equation(const std::vector<Rational>& coeffs, const Rational& rhs) {
    mpz_class den = 1;
    for (const Rational& c : coeffs)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator_raw());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), rhs.denominator_raw());
    std::vector<mpz_class> row;
    row.reserve(coeffs.size() + 1);
    mpz_class factor, v;
    const auto scaled = [&](const Rational& r) {
      mpz_divexact(factor.get_mpz_t(), den.get_mpz_t(), r.denominator_raw());
      mpz_mul(v.get_mpz_t(), factor.get_mpz_t(), r.numerator_raw());
      return v;
    };
    for (const Rational& c : coeffs) row.push_back(scaled(c));
    row.push_back(scaled(rhs));
    rows.push_back(std::move(row));
  }
};

// Fraction-free (Bareiss) elimination. Consistent systems yield the
// particular solution with free variables pinned to zero; inconsistent
// systems yield nullopt. Entirely exact.
std::optional<std::vector<Rational>> solve_linear(LinearSystem sys) {
  const int r = static_cast<int>(sys.rows.size());
  const int c = sys.vars;
  std::vector<std::pair<int, int>> pivots;
  mpz_class prev = 1, t1, t2;
  int pivot_row = 0;
  for (int col = 0; col < c && pivot_row < r; ++col) {
    int p = pivot_row;
    while (p < r && sgn(sys.rows[static_cast<size_t>(p)][static_cast<size_t>(col)]) == 0) ++p;
    if (p == r) continue;
    std::swap(sys.rows[static_cast<size_t>(p)], sys.rows[static_cast<size_t>(pivot_row)]);
    const auto& prow = sys.rows[static_cast<size_t>(pivot_row)];
    for (int i = pivot_row + 1; i < r; ++i) {
      auto& irow = sys.rows[static_cast<size_t>(i)];
      for (int j = col + 1; j <= c; ++j) {
        mpz_mul(t1.get_mpz_t(), prow[static_cast<size_t>(col)].get_mpz_t(),
                irow[static_cast<size_t>(j)].get_mpz_t());
        mpz_mul(t2.get_mpz_t(), irow[static_cast<size_t>(col)].get_mpz_t(),
                prow[static_cast<size_t>(j)].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(irow[static_cast<size_t>(j)].get_mpz_t(), t1.get_mpz_t(),
                     prev.get_mpz_t());
      }
      irow[static_cast<size_t>(col)] = 0;
    }
    prev = prow[static_cast<size_t>(col)];
    pivots.emplace_back(pivot_row, col);
    ++pivot_row;
  }
  for (int i = pivot_row; i < r; ++i)
    if (sgn(sys.rows[static_cast<size_t>(i)][static_cast<size_t>(c)]) != 0)
      return std::nullopt;

  std::vector<Rational> z(static_cast<size_t>(c), Rational(0));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto [pr, pc] = *it;
    const auto& row = sys.rows[static_cast<size_t>(pr)];
    Rational acc{mpz_class(row[static_cast<size_t>(c)]), mpz_class(1)};
    for (int j = pc + 1; j < c; ++j) {
      if (sgn(row[static_cast<size_t>(j)]) == 0 || z[static_cast<size_t>(j)].is_zero())
        continue;
      acc -= Rational(mpz_class(row[static_cast<size_t>(j)]), mpz_class(1)) *
             z[static_cast<size_t>(j)];
    }
    z[static_cast<size_t>(pc)] = acc / Rational(mpz_class(row[static_cast<size_t>(pc)]),
                                                mpz_class(1));
  }
  return z;
}

bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[static_cast<size_t>(i)] < n - k + i) {
      ++comb[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> comb(static_cast<size_t>(k));
  std::iota(comb.begin(), comb.end(), 0);
  return comb;
}

// Solves the indifference-plus-normalization system for one support pair.
// Returns an equilibrium only after the full exact Nash check passes.
std::optional<Equilibrium> try_support(const BimatrixGame& g,
                                       const std::vector<int>& s1,
                                       const std::vector<int>& s2) {
  const int k1 = static_cast<int>(s1.size());
  const int k2 = static_cast<int>(s2.size());

  // Player 2's mix y over s2 must equalize player 1's payoffs across s1.
  LinearSystem ys;
  ys.vars = k2 + 1;
  {
    std::vector<Rational> coeffs(static_cast<size_t>(k2 + 1));
    for (int i : s1) {
      for (int jj = 0; jj < k2; ++jj)
        coeffs[static_cast<size_t>(jj)] = g.a(i, s2[static_cast<size_t>(jj)]);
      coeffs[static_cast<size_t>(k2)] = Rational(-1);
      ys.add_equation(coeffs, Rational(0));
    }
    for (int jj = 0; jj < k2; ++jj) coeffs[static_cast<size_t>(jj)] = Rational(1);
    coeffs[static_cast<size_t>(k2)] = Rational(0);
    ys.add_equation(coeffs, Rational(1));
  }
  auto ysol = solve_linear(std::move(ys));
  if (!ysol) return std::nullopt;
  for (int jj = 0; jj < k2; ++jj)
    if ((*ysol)[static_cast<size_t>(jj)].sign() < 0) return std::nullopt;

  // Player 1's mix x over s1 must equalize player 2's payoffs across s2.
  LinearSystem xs;
  xs.vars = k1 + 1;
  {
    std::vector<Rational> coeffs(static_cast<size_t>(k1 + 1));
    for (int j : s2) {
      for (int ii = 0; ii < k1; ++ii)
        coeffs[static_cast<size_t>(ii)] = g.b(s1[static_cast<size_t>(ii)], j);
      coeffs[static_cast<size_t>(k1)] = Rational(-1);
      xs.add_equation(coeffs, Rational(0));
    }
    for (int ii = 0; ii < k1; ++ii) coeffs[static_cast<size_t>(ii)] = Rational(1);
    coeffs[static_cast<size_t>(k1)] = Rational(0);
    xs.add_equation(coeffs, Rational(1));
  }
  auto xsol = solve_linear(std::move(xs));
  if (!xsol) return std::nullopt;
  for (int ii = 0; ii < k1; ++ii)
    if ((*xsol)[static_cast<size_t>(ii)].sign() < 0) return std::nullopt;

  std::vector<Rational> x(static_cast<size_t>(g.rows()), Rational(0));
  std::vector<Rational> y(static_cast<size_t>(g.cols()), Rational(0));
  for (int ii = 0; ii < k1; ++ii)
    x[static_cast<size_t>(s1[static_cast<size_t>(ii)])] = (*xsol)[static_cast<size_t>(ii)];
  for (int jj = 0; jj < k2; ++jj)
    y[static_cast<size_t>(s2[static_cast<size_t>(jj)])] = (*ysol)[static_cast<size_t>(jj)];

  MixedStrategy mx{std::move(x)}, my{std::move(y)};
  if (!is_nash(g, mx, my)) return std::nullopt;
  return make_equilibrium(g, std::move(mx), std::move(my));
}

}  // namespace

Equilibrium solve_base(const BimatrixGame& g) {
  const int n = g.rows(), m = g.cols();
  for (int total = 2; total <= n + m; ++total) {
    const int lo = std::max(1, total - m);
    const int hi = std::min(n, total - 1);
    for (int k1 = lo; k1 <= hi; ++k1) {
      const int k2 = total - k1;
      std::vector<int> s1 = first_combination(k1);
      do {
        std::vector<int> s2 = first_combination(k2);
        do {
          if (auto eq = try_support(g, s1, s2)) return std::move(*eq);
        } while (next_combination(s2, m));
      } while (next_combination(s1, n));
    }
  }
  throw invariant_error("support enumeration exhausted without finding an equilibrium");
}

Equilibrium lift_product(const Equilibrium& e1, const Equilibrium& e2,
                         const ProductLayout& layout) {
  if (e1.x.size() != layout.n1 || e1.y.size() != layout.m1 ||
      e2.x.size() != layout.n2 || e2.y.size() != layout.m2)
    throw contract_error("factor equilibria do not match the product layout");
  std::vector<Rational> x(static_cast<size_t>(layout.rows()));
  std::vector<Rational> y(static_cast<size_t>(layout.cols()));
  for (int i1 = 0; i1 < layout.n1; ++i1)
    for (int i2 = 0; i2 < layout.n2; ++i2)
      x[static_cast<size_t>(i1 * layout.n2 + i2)] = e1.x[i1] * e2.x[i2];
  for (int j1 = 0; j1 < layout.m1; ++j1)
    for (int j2 = 0; j2 < layout.m2; ++j2)
      y[static_cast<size_t>(j2 * layout.m1 + j1)] = e1.y[j1] * e2.y[j2];
  return Equilibrium{MixedStrategy(std::move(x)), MixedStrategy(std::move(y)),
                     e1.p1 + e2.p1, e1.p2 + e2.p2};
}

Equilibrium project_product(const Equilibrium& eq, const ProductLayout& layout,
                            int factor, const BimatrixGame& factor_game) {
  if (eq.x.size() != layout.rows() || eq.y.size() != layout.cols())
    throw contract_error("equilibrium does not match the product layout");
  if (factor != 1 && factor != 2) throw contract_error("factor must be 1 or 2");
  const int fn = factor == 1 ? layout.n1 : layout.n2;
  const int fm = factor == 1 ? layout.m1 : layout.m2;
  if (factor_game.rows() != fn || factor_game.cols() != fm)
    throw contract_error("factor game does not match the product layout");

  std::vector<Rational> x(static_cast<size_t>(fn));
  std::vector<Rational> y(static_cast<size_t>(fm));
  for (int i1 = 0; i1 < layout.n1; ++i1)
    for (int i2 = 0; i2 < layout.n2; ++i2)
      x[static_cast<size_t>(factor == 1 ? i1 : i2)] += eq.x[i1 * layout.n2 + i2];
  for (int j1 = 0; j1 < layout.m1; ++j1)
    for (int j2 = 0; j2 < layout.m2; ++j2)
      y[static_cast<size_t>(factor == 1 ? j1 : j2)] += eq.y[j2 * layout.m1 + j1];
  return make_equilibrium(factor_game, MixedStrategy(std::move(x)),
                          MixedStrategy(std::move(y)));
}

Equilibrium lift_sum(const Equilibrium& e1, const Equilibrium& e2, const Rational& k) {
  for (const Rational* p : {&e1.p1, &e1.p2, &e2.p1, &e2.p2})
    if (!(p->abs() < k))
      throw precondition_error("sum constant K = " + k.str() +
                               " must exceed component payoff magnitude " +
                               p->abs().str());
  const Rational &p1 = e1.p1, &q1 = e1.p2, &p2 = e2.p1, &q2 = e2.p2;

  // Row-block masses equalize player 2 across column blocks; player 2's
  // off-diagonal payoff is -K, hence the flipped signs relative to columns.
  const Rational row_den = k + k + q1 + q2;
  const Rational s1 = (k + q2) / row_den;
  const Rational s2 = (k + q1) / row_den;
  const Rational col_den = k + k - p1 - p2;
  const Rational t1 = (k - p2) / col_den;
  const Rational t2 = (k - p1) / col_den;

  std::vector<Rational> x;
  x.reserve(static_cast<size_t>(e1.x.size() + e2.x.size()));
  for (int i = 0; i < e1.x.size(); ++i) x.push_back(s1 * e1.x[i]);
  for (int i = 0; i < e2.x.size(); ++i) x.push_back(s2 * e2.x[i]);
  std::vector<Rational> y;
  y.reserve(static_cast<size_t>(e1.y.size() + e2.y.size()));
  for (int j = 0; j < e1.y.size(); ++j) y.push_back(t1 * e1.y[j]);
  for (int j = 0; j < e2.y.size(); ++j) y.push_back(t2 * e2.y[j]);

  const Rational cross = s1 * t2 + s2 * t1;
  const Rational p = s1 * t1 * p1 + s2 * t2 * p2 + k * cross;
  const Rational q = s1 * t1 * q1 + s2 * t2 * q2 - k * cross;
  return Equilibrium{MixedStrategy(std::move(x)), MixedStrategy(std::move(y)), p, q};
}

std::pair<Equilibrium, Equilibrium> project_sum(const Equilibrium& eq,
                                                const SumLayout& layout,
                                                const BimatrixGame& g1,
                                                const BimatrixGame& g2) {
  if (g1.rows() != layout.n1 || g1.cols() != layout.m1)
    throw contract_error("summand 1 does not match the sum layout");
  if (eq.x.size() != layout.n1 + g2.rows() || eq.y.size() != layout.m1 + g2.cols())
    throw contract_error("equilibrium does not match the sum layout");

  Rational s, t;
  for (int i = 0; i < layout.n1; ++i) s += eq.x[i];
  for (int j = 0; j < layout.m1; ++j) t += eq.y[j];
  const Rational one(1);
  if (s.is_zero() || s == one || t.is_zero() || t == one)
    throw invalid_input_error(
        "block mass is " + (s.is_zero() || s == one ? s : t).str() +
        "; the input cannot be an equilibrium of a sum game");

  const Rational s2 = one - s, t2 = one - t;
  std::vector<Rational> x1, x2, y1, y2;
  for (int i = 0; i < layout.n1; ++i) x1.push_back(eq.x[i] / s);
  for (int i = layout.n1; i < eq.x.size(); ++i) x2.push_back(eq.x[i] / s2);
  for (int j = 0; j < layout.m1; ++j) y1.push_back(eq.y[j] / t);
  for (int j = layout.m1; j < eq.y.size(); ++j) y2.push_back(eq.y[j] / t2);

  return {make_equilibrium(g1, MixedStrategy(std::move(x1)), MixedStrategy(std::move(y1))),
          make_equilibrium(g2, MixedStrategy(std::move(x2)), MixedStrategy(std::move(y2)))};
}

Equilibrium lift_elimination(const Equilibrium& eq, const EliminationRecord& record) {
  if (record.removals.empty() && record.surviving_rows.empty() &&
      record.surviving_cols.empty())
    return eq;
  if (eq.x.size() != static_cast<int>(record.surviving_rows.size()) ||
      eq.y.size() != static_cast<int>(record.surviving_cols.size()))
    throw contract_error("equilibrium does not match the elimination record");

  long row_removals = 0, col_removals = 0;
  for (const Removal& r : record.removals)
    (r.player == 1 ? row_removals : col_removals) += 1;
  const int n = static_cast<int>(record.surviving_rows.size() + row_removals);
  const int m = static_cast<int>(record.surviving_cols.size() + col_removals);

  std::vector<Rational> x(static_cast<size_t>(n), Rational(0));
  std::vector<Rational> y(static_cast<size_t>(m), Rational(0));
  for (size_t i = 0; i < record.surviving_rows.size(); ++i) {
    const int at = record.surviving_rows[i];
    if (at < 0 || at >= n) throw contract_error("surviving row index out of range");
    x[static_cast<size_t>(at)] = eq.x[static_cast<int>(i)];
  }
  for (size_t j = 0; j < record.surviving_cols.size(); ++j) {
    const int at = record.surviving_cols[j];
    if (at < 0 || at >= m) throw contract_error("surviving column index out of range");
    y[static_cast<size_t>(at)] = eq.y[static_cast<int>(j)];
  }
  return Equilibrium{MixedStrategy(std::move(x)), MixedStrategy(std::move(y)),
                     eq.p1, eq.p2};
}

}  // namespace gamedec
