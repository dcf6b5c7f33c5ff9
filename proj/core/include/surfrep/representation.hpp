#pragma once

#include "surfrep/presentation.hpp"
#include "surfrep/utmat.hpp"
#include "surfrep/word.hpp"

#include <vector>

namespace surfrep {

/* An assignment of an upper-triangular matrix to each generator of a fixed
 * presentation, i.e. a homomorphism from the free group on the generators.
 * Whether the surface-group relation actually holds is a separate question
 * answered by check_relation(). */
class GenAssignment {
public:
  GenAssignment(Presentation pres, std::vector<UTMat> images);

  const Presentation& presentation() const { return pres_; }
  const UTMat& image(int gen) const { return images_.at(gen); }
  const std::vector<UTMat>& images() const { return images_; }

private:
  Presentation pres_;
  std::vector<UTMat> images_;
};

/* Image of a word under the assignment; syllable exponents are applied by
 * binary exponentiation, so long powers are cheap. */
UTMat eval_word(const Word& w, const GenAssignment& rho);

/* Exponent sum of every generator in w, indexed like the presentation's
 * generator list (the image of w in the free abelianization). */
std::vector<long long> exponent_sums(const Word& w, const Presentation& pres);

/* Orientation character of the loop class of w: -1 iff w reverses
 * orientation, i.e. the parity of the total exponent of the one-sided
 * generators is odd.  Only defined on non-orientable surfaces (throws
 * std::domain_error for orientable presentations, where every loop
 * preserves orientation and the character would be trivially +1). */
int orientation_character(const Word& w, const Presentation& pres);

struct RelationReport {
  bool holds_exactly = false;     // relator image == I
  bool holds_projectively = false;  // relator image == +-I
  UTMat residual;                 // the relator image itself
};

RelationReport check_relation(const GenAssignment& rho);

}  // namespace surfrep
