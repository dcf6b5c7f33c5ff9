#pragma once

#include "surfrep/rational.hpp"
#include "surfrep/representation.hpp"
#include "surfrep/scc.hpp"
#include "surfrep/utmat.hpp"
#include "surfrep/word.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfrep {

/* -------- multiplicative independence over the positive rationals --------
 *
 * x, z > 0 are multiplicatively independent when x^p z^q = 1 forces
 * p = q = 0; equivalently, their prime-exponent vectors span rank 2.
 * When dependent, `witness` holds a primitive (p, q) with x^p z^q = 1,
 * normalized so the first nonzero entry is positive: (1, 0) for x = 1,
 * (0, 1) for z = 1 with x != 1, and otherwise (v_z[i], -v_x[i]) / gcd at
 * any support prime (e.g. x = 2, z = 4 gives (2, -1)). */
struct MultIndepResult {
  bool independent = false;
  std::optional<std::pair<mpz_class, mpz_class>> witness;
};

MultIndepResult mult_indep(const Rational& x, const Rational& z);  // throws unless x, z > 0

/* -------- incompressibility certificates -------- */

struct CertCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // the evaluated quantity, or the reason for failure
};

struct Certificate {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<CertCheck> checks;
  bool accept = false;  // all checks passed
  std::vector<std::string> notes;
};

/* The genus-3 construction: on Hybrid(1) = <a, b, c | [a,b] c^2>, with
 * p = commutator_entry(x, y, z, w),
 *   a -> (x, y; 0, 1/x),  b -> (z, w; 0, 1/z),  c -> (1, -p/2; 0, 1),
 * so [A,B] C^2 = I identically.  Throws std::invalid_argument when
 * x = 0 or z = 0 (the matrices do not exist). */
GenAssignment genus3_assignment(const Rational& x, const Rational& y,
                                const Rational& z, const Rational& w);

/* Certifies that the genus-3 assignment above kills no simple closed
 * curve, by checking sufficient conditions:
 *   x_positive, z_positive  — the positive-diagonal component,
 *   mult_indep              — <A, B> meets the diagonal torus faithfully,
 *   p_nonzero               — c, and every odd power of it, acts freely,
 *   relation                — the defining relator maps to I.
 * Checks that cannot be evaluated after an earlier failure (mult_indep
 * and relation need x, z usable) fail with witness "not evaluated". */
Certificate certify_genus3(const Rational& x, const Rational& y,
                           const Rational& z, const Rational& w);

/* -------- kernel scan over a curve catalog -------- */

struct KernelHit {
  SccClass cls;
  UTMat image;
};

struct ScanResult {
  int scanned = 0;
  std::vector<KernelHit> identity;        // words mapped to I
  std::vector<KernelHit> minus_identity;  // words mapped to -I
  std::vector<std::string> notes;
};

/* Evaluates every class word under rep and collects kernel hits.  When
 * every generator image has positive diagonal, a note records that -I is
 * unattainable. */
ScanResult scan_kernel(const GenAssignment& rep, const std::vector<SccClass>& classes);

/* -------- the two-sided variant of the genus-3 construction --------
 *
 * Replacing c's image with C' = (1, -p/2; 0, -1) (determinant -1) makes
 * the c-side two-sided: C'^2 = I identically, and det of each word's
 * image equals the orientation character (-1)^(c-exponent sum).  The
 * defining relator no longer maps to I; its residual [A,B] is reported. */
struct TwoSidedRow {
  Word word;
  int det = +1;        // determinant of the word's image
  int character = +1;  // (-1)^(c-exponent sum)
  bool match = false;  // det == character
};

struct TwoSidedReport {
  GenAssignment assignment;
  RelationReport relation;       // of [a,b] c^2 under the variant
  bool c_square_identity = false;
  std::vector<TwoSidedRow> rows;
  bool all_match = false;
};

/* Requires certify_genus3(x, y, z, w) to accept (throws std::domain_error
 * otherwise). */
TwoSidedReport two_sided_variant(const Rational& x, const Rational& y,
                                 const Rational& z, const Rational& w,
                                 const std::vector<Word>& words);

/* -------- the Klein-bottle obstruction --------
 *
 * On KleinTail(0) = <c, d | c d c d^-1>, upper-triangular images force
 * C = +-I: with C = (x, y; 0, 1/x), the relator image is
 * (x^2, xy(z^2 + 1/x^2) + zw(1 - x^2); 0, 1/x^2), so x = +-1 and then
 * y (z^2 + 1) = 0 forces y = 0. */

/* Draws `samples` random D = (z, w) (palette draws, z > 0) and solves the
 * relator constraint for C each time; every solution is +-I. */
struct ForcedFormSample {
  Rational z, w;  // the sampled image of d
  UTMat c;        // the solved image of c
  bool pm_identity = false;
};

std::vector<ForcedFormSample> klein_forced_form(int samples, unsigned long long seed);

/* Analyzes the representation c -> c_sign * I, d -> (z, w; 0, 1/z) of
 * KleinTail(0), z > 0, c_sign in {+1, -1}: checks the relator and the
 * five short curve words c, d, cd, d^2, (cd)^2, accepting when none maps
 * to I.  Notes record projectivization caveats (e.g. c -> -I is trivial
 * in PSL(2)). */
Certificate klein_analyze(const Rational& z, const Rational& w, int c_sign);

}  // namespace surfrep
