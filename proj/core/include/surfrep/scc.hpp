#pragma once

#include "surfrep/presentation.hpp"
#include "surfrep/word.hpp"

#include <string>
#include <vector>

namespace surfrep {

/* One conjugacy-class representative of a simple closed curve, tagged with
 * the structural family it came from.
 *
 * kind values
 *   representatives:  "nonseparating", "separating" (index = prefix length
 *                     g0), "crosscap", "prefix-squares" (index = n0)
 *   genus-3 catalog:  "base", "torus", "ac", "b-inv-c", "torus-c", "square"
 *
 * k/l carry the torus slope (k = b-count, l = a-exponent sum) for
 * torus-derived catalog entries and are 0 elsewhere; eps is the attached
 * c-power for augmented entries. */
struct SccClass {
  std::string kind;
  Word word;
  bool one_sided = false;
  int k = 0, l = 0;
  int index = 0;
  int eps = 0;
};

/* Exponents [n_1..n_k] of the cutting-sequence word a^{n_1} b ... a^{n_k} b
 * of the simple (k,l)-curve on the torus: n_i = floor(i*l/k) -
 * floor((i-1)*l/k).  Entries take the two values floor(l/k), ceil(l/k) and
 * sum to l.  Requires k, l >= 1 and gcd(k,l) = 1 (throws
 * std::domain_error otherwise, since only coprime slopes are simple). */
std::vector<long long> christoffel_exponents(int k, int l);

/* The word a^{n_1} b a^{n_2} b ... a^{n_k} b over generator indices
 * a = 0, b = 1 (zero exponents drop out, so e.g. (2,1) gives "b a b"). */
Word christoffel_word(int k, int l);

/* The symmetry a -> (swap_ab ? b : a)^{a_sign}, b -> (swap_ab ? a : b)^{b_sign},
 * applied letter-wise to generator indices 0 and 1; every other generator
 * passes through.  The eight choices form the symmetry group of the torus
 * words (deck transformations of the square lattice fixing slopes up to
 * sign and reciprocal). */
Word apply_torus_symmetry(const Word& w, bool swap_ab, int a_sign, int b_sign);

/* Representatives of every isotopy class of essential simple closed curves
 * up to homeomorphism of the surface, per presentation:
 *
 *   Orientable(g):  a1; [a1,b1]...[ag0,bg0] for g0 < g
 *   Squares(n):     c1; c1^2...c_{n0}^2 for n0 < n
 *   Hybrid(g):      c; a1 (g >= 1); [a1,b1]...[ag0,bg0] for g0 <= g
 *   KleinTail(g):   a1 (g >= 1); c; [a1,b1]...[ag0,bg0] for g0 <= g   */
std::vector<SccClass> curve_representatives(const Presentation& pres);

/* The complete catalog of simple-closed-curve words on the non-orientable
 * genus-3 surface in Hybrid(1) (generators a, b, c): base words a^{+-1},
 * b^{+-1}, c^{+-1}, c^{+-2}; torus words with k <= max_k and
 * floor(l/k) <= max_n, closed under the eight torus symmetries; the
 * augmented families (ac)^eps, (b^-1 c)^eps and (torus word)c^eps for
 * eps in {+-1, +-2}; and, when include_squares is set, squares of the
 * one-sided entries (boundaries of their Mobius-band neighborhoods).
 * a^-1 c and b c are NOT simple and are excluded by construction.
 * Entries are deduplicated up to conjugacy (canonical cyclic rotation);
 * the emission order is deterministic. */
std::vector<SccClass> genus3_catalog(int max_k, int max_n, bool include_squares = true);

}  // namespace surfrep
