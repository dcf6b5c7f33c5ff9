#pragma once

#include "surfrep/presentation.hpp"
#include "surfrep/rational.hpp"
#include "surfrep/representation.hpp"
#include "surfrep/utmat.hpp"

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace surfrep {

/* Coordinate spaces of upper-triangular representations, one per
 * presentation, restricted throughout to the positive-diagonal component
 * (all x_i, z_i > 0 — the component of the trivial representation, which
 * keeps image groups torsion-free and projectivization injective).
 *
 *   U:g   Orientable(g)   coords (x_i, y_i, z_i, w_i), i = 1..g
 *                         constraint  sum_i p(x_i,y_i,z_i,w_i) = 0
 *   V:n   Squares(n)      coords (x_i, y_i), i = 1..n; in square
 *                         coordinates s_i = x_i^2, t_i = y_i(x_i + 1/x_i):
 *                         s_1...s_n = 1  and  q_n = 0
 *   VH:g  Hybrid(g)       handle blocks plus (x, y) for c, with x = 1 and
 *                         sum_i p + 2 y = 0
 *   VK:g  KleinTail(g)    handle blocks plus (x_{g+1}, y_{g+1}, z_{g+1},
 *                         w_{g+1}) for c, d, with x_{g+1} = 1 and
 *                         sum_{i<=g} p + y_{g+1}(z_{g+1}^2 + 1) = 0
 *
 * where p is commutator_entry. */
enum class SpaceKind { U, V, VH, VK };

struct Space {
  SpaceKind kind = SpaceKind::U;
  int rank = 1;  // g for U/VH/VK, n for V

  int coord_count() const;
  std::string name() const;  // "U:2", "V:3", "VH:1", "VK:1"
  static Space parse(std::string_view text);  // throws std::invalid_argument
  Presentation presentation() const;

  friend bool operator==(const Space&, const Space&) = default;
};

struct RepPoint {
  Space space;
  std::vector<Rational> coords;

  friend bool operator==(const RepPoint&, const RepPoint&) = default;
};

struct MembershipResult {
  bool ok = false;
  std::string constraint;  // name of the violated constraint when !ok
  Rational residual;       // its (nonzero) exact value
};

/* Exact constraint evaluation; a violation is a result, not an error.
 * Throws std::invalid_argument only on a coordinate-count mismatch. */
MembershipResult membership(const RepPoint& pt);

/* The representation itself: generator images per the space's coordinate
 * layout.  Requires membership(pt).ok (throws std::domain_error
 * otherwise); the resulting assignment always satisfies the relator
 * exactly. */
GenAssignment rep_of(const RepPoint& pt);

/* Deterministic sample of a point on the variety: free coordinates are
 * drawn from {p/q : |p| <= 10, 1 <= q <= 10} (positive for diagonal
 * coordinates), and the closing coordinate (y_g for U, t_n/y_n for V, y
 * for VH, y_{g+1} for VK) is solved exactly. */
RepPoint sample_point(const Space& space, unsigned long long seed);

/* The palette sample_point draws from, exposed so other samplers produce
 * the same byte-stable streams: p/q with 1 <= p, q <= 10 (positive) or
 * -10 <= p <= 10, 1 <= q <= 10 (signed), via plain modulo draws. */
Rational sample_positive_rational(std::mt19937_64& rng);
Rational sample_signed_rational(std::mt19937_64& rng);

/* -------- perturbations off the degenerate loci --------
 *
 * Each move below starts at a point whose representation kills a specific
 * curve word, moves by an exact rational step of size eps >= 0, and lands
 * back on the variety exactly, with the targeted word no longer killed.
 * Violated preconditions (wrong space, point not degenerate, no usable
 * witness coordinate) throw std::domain_error. */

/* U:g, requires (x_1, y_1) = (1, 0).  Re-inflates a_1: when z_1 = 1 the
 * point (1, eps, z_1, w_1, ...) already lies on the variety; otherwise
 * x_1 = 1 + eps and y_1 = -eps(2+eps)/(1+eps) * z_1 w_1/(1 - z_1^2). */
RepPoint perturb_kill_a1(const RepPoint& pt, const Rational& eps);

/* U:g, requires the prefix constraint sum_{i<=g0} p = 0 (the separating
 * word [a_1,b_1]...[a_g0,b_g0] is killed), 1 <= g0 < g.  Moves one witness
 * coordinate in the prefix and one in the suffix so the prefix p-sum
 * becomes -eps while the total stays 0: w_i += eps/(z_i(1 - x_i^2)) at a
 * block with x_i != 1, or y_i -= eps/(x_i(1 - z_i^2)) at one with
 * z_i != 1 (and the opposite-signed move at the suffix witness). */
RepPoint perturb_separating(const RepPoint& pt, int g0, const Rational& eps);

/* V:n, n >= 2, requires (x_1, y_1) = (1, 0).  Sets t_1 = eps and re-solves
 * t_n from q_n = 0 (linear, coefficient s_1...s_{n-1} != 0); the s
 * coordinates are untouched so the x/y conversion stays exact.  n = 1 is
 * an error: there is no separate t_n to solve (the projective plane is
 * excluded). */
RepPoint perturb_kill_c1(const RepPoint& pt, const Rational& eps);

/* V:n, 1 <= n0 < n, requires s_1...s_n0 = 1 and q_n0 = 0 (the boundary
 * word c_1^2...c_n0^2 is killed).  Moves s_1 to s_1 + eps, restores the
 * product with s_n = 1/((s_1+eps) s_2...s_{n-1}), and re-solves t_n.  The
 * (s, t) output is always exact; coordinates return to (x, y) exactly
 * when s_1 + eps is a rational square, and otherwise as doubles together
 * with the largest constraint residual they incur. */
struct PrefixSquaresResult {
  std::vector<SquareCoords> st;       // exact (s_i, t_i) for every block
  bool exact = false;
  RepPoint point;                     // filled when exact
  std::vector<double> approx_coords;  // (x_i, y_i) doubles when !exact
  double residual = 0.0;              // max |constraint| at the doubles
};

PrefixSquaresResult perturb_prefix_squares(const RepPoint& pt, int n0, const Rational& eps);

/* VH:g / VK:g, 1 <= g0 <= g, requires sum_{i<=g0} p = 0.  Same prefix
 * witness move as perturb_separating; the relation is re-closed through
 * the crosscap coordinate, y += eps/2 (VH) or
 * y_{g+1} += eps/(z_{g+1}^2 + 1) (VK). */
RepPoint perturb_hybrid_commutator(const RepPoint& pt, int g0, const Rational& eps);
RepPoint perturb_klein_commutator(const RepPoint& pt, int g0, const Rational& eps);

/* VH:g / VK:g, g >= 1, requires (x_1, y_1) = (1, 0).  Sets y_1 = eps and
 * re-closes through the crosscap coordinate:
 * y = -(1/2)(p(1,eps,z_1,w_1) + sum_{i>=2} p), respectively
 * y_{g+1} = -(p(1,eps,z_1,w_1) + sum_{i>=2} p)/(z_{g+1}^2 + 1). */
RepPoint perturb_hybrid_a1(const RepPoint& pt, const Rational& eps);
RepPoint perturb_klein_a1(const RepPoint& pt, const Rational& eps);

/* -------- regularization of degenerate zeros of p --------
 *
 * Given p(x, y, z, w) = 0 with x, z != 0, produces a sequence of solutions
 * of p = 0 converging to the input on which x_n != +-1 or z_n != +-1, so
 * the witness-based perturbations above apply.  Branches:
 *
 *   Constant: the input itself already has x != +-1 or z != +-1.
 *   VaryZ:    x, z in {+-1} and y = 0; z_n = z(1 + 1/n^2) works for any w.
 *   Radical:  x, z in {+-1} and y != 0; x_n = x(1 + 1/n^2) and z_n solves
 *             the quadratic p(x_n, y, z, w) = 0 in z:
 *                 z_n = (w(1 - x_n^2) + sigma sqrt(w^2(1 - x_n^2)^2
 *                        + 4 x_n^2 y^2)) / (-2 x_n y),
 *             with the radical sign sigma = -z sign(x) sign(y) fixed so
 *             that z_n -> z.  Terms are exact rationals whenever the
 *             discriminant is a perfect square, else doubles with the
 *             |p| residual they incur.                                   */
struct RegularizingTerm {
  bool exact = false;
  Rational x, y, z, w;                      // filled when exact
  double xd = 0, yd = 0, zd = 0, wd = 0;    // always filled
  double p_residual = 0.0;                  // |p| at the doubles, 0 if exact
};

class RegularizingSequence {
public:
  enum class Branch { Constant, VaryZ, Radical };

  /* Throws std::domain_error unless p(x,y,z,w) = 0 exactly and x, z != 0. */
  RegularizingSequence(Rational x, Rational y, Rational z, Rational w);

  Branch branch() const { return branch_; }
  RegularizingTerm term(long long n) const;  // n >= 1

private:
  Rational x_, y_, z_, w_;
  Branch branch_;
  int sigma_ = +1;
};

/* The diagonal torus representation a -> diag(x, 1/x), b -> diag(z, 1/z)
 * as the U:1 point (x, 0, z, 0); requires x, z > 0.  Faithfulness is a
 * separate question (see mult_indep). */
RepPoint torus_rep(const Rational& x, const Rational& z);

}  // namespace surfrep
