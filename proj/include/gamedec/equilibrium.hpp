#pragma once

#include <utility>

#include "gamedec/decompose.hpp"
#include "gamedec/game.hpp"

namespace gamedec {

/// Exact base solver: support enumeration with fraction-free linear solves.
/// Deterministic; support pairs are tried by total size, then |S1|, then
/// lexicographically. Cost is exponential in min(n, m) - meant for small
/// irreducible games.
Equilibrium solve_base(const BimatrixGame& g);

/// Combines factor equilibria into a product-game equilibrium:
/// x[(i1,i2)] = x1[i1]*x2[i2], payoffs add.
Equilibrium lift_product(const Equilibrium& e1, const Equilibrium& e2,
                         const ProductLayout& layout);

/// Marginalizes a product-game equilibrium onto one factor; payoffs are
/// recomputed on the factor game.
Equilibrium project_product(const Equilibrium& eq, const ProductLayout& layout,
                            int factor, const BimatrixGame& factor_game);

/// Combines summand equilibria into a sum-game equilibrium. Block masses
/// come from the cross-block indifference conditions; requires k to exceed
/// the magnitude of all four component payoffs.
Equilibrium lift_sum(const Equilibrium& e1, const Equilibrium& e2, const Rational& k);

/// Splits a sum-game equilibrium into renormalized block equilibria; payoffs
/// are recomputed on the component games. Block masses of exactly 0 or 1
/// mean the input was not an equilibrium of a sum game.
std::pair<Equilibrium, Equilibrium> project_sum(const Equilibrium& eq,
                                                const SumLayout& layout,
                                                const BimatrixGame& g1,
                                                const BimatrixGame& g2);

/// Re-expands a reduced-game equilibrium by placing zeros at eliminated
/// strategies. Payoffs are unchanged.
Equilibrium lift_elimination(const Equilibrium& eq, const EliminationRecord& record);

}  // namespace gamedec
