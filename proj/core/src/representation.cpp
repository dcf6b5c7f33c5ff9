#include "surfrep/representation.hpp"

#include <stdexcept>

namespace surfrep {

GenAssignment::GenAssignment(Presentation pres, std::vector<UTMat> images)
    : pres_(std::move(pres)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != pres_.generator_count())
    throw std::invalid_argument("GenAssignment: expected " +
                                std::to_string(pres_.generator_count()) +
                                " generator images, got " + std::to_string(images_.size()));
}

UTMat eval_word(const Word& w, const GenAssignment& rho) {
  UTMat acc;
  for (const auto& s : w.syllables()) acc = acc * rho.image(s.gen).pow(s.exp);
  return acc;
}

std::vector<long long> exponent_sums(const Word& w, const Presentation& pres) {
  std::vector<long long> sums(pres.generator_count(), 0);
  for (const auto& s : w.syllables()) sums.at(s.gen) += s.exp;
  return sums;
}

int orientation_character(const Word& w, const Presentation& pres) {
  if (pres.is_orientable())
    throw std::domain_error("orientation_character: trivial on orientable surfaces");
  long long one_sided_total = 0;
  for (const auto& s : w.syllables())
    if (pres.one_sided_generator(s.gen)) one_sided_total += s.exp;
  return (one_sided_total % 2 == 0) ? +1 : -1;
}

RelationReport check_relation(const GenAssignment& rho) {
  RelationReport report;
  report.residual = eval_word(rho.presentation().relator(), rho);
  report.holds_exactly = report.residual.is_identity();
  report.holds_projectively =
      report.holds_exactly || report.residual.is_minus_identity();
  return report;
}

}  // namespace surfrep
