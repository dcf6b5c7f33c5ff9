#include "surfrep/certify.hpp"

#include "surfrep/factor.hpp"
#include "surfrep/repspace.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace surfrep {

namespace {

std::string witness_string(const std::pair<mpz_class, mpz_class>& pq) {
  return "(" + pq.first.get_str() + ", " + pq.second.get_str() + ")";
}

}  // namespace

MultIndepResult mult_indep(const Rational& x, const Rational& z) {
  if (x.sign() <= 0 || z.sign() <= 0)
    throw std::domain_error("mult_indep: both arguments must be > 0");

  if (x == Rational(1)) return {false, {{mpz_class(1), mpz_class(0)}}};
  if (z == Rational(1)) return {false, {{mpz_class(0), mpz_class(1)}}};

  const auto ex = rational_exponents(x);
  const auto ez = rational_exponents(z);
  std::set<mpz_class> support;
  for (const auto& [p, e] : ex) support.insert(p);
  for (const auto& [p, e] : ez) support.insert(p);

  auto exp_at = [](const std::map<mpz_class, long>& m, const mpz_class& p) -> long {
    const auto it = m.find(p);
    return it == m.end() ? 0 : it->second;
  };

  /* Rank of the 2 x |support| exponent matrix: pick the first nonzero
   * column as reference; any non-proportional column certifies rank 2. */
  long rx = 0, rz = 0;
  bool have_ref = false;
  for (const auto& p : support) {
    const long a = exp_at(ex, p), b = exp_at(ez, p);
    if (!have_ref) {
      rx = a;
      rz = b;
      have_ref = true;
      continue;
    }
    if (mpz_class(rx) * b - mpz_class(rz) * a != 0) return {true, std::nullopt};
  }

  /* Rank 1: every column is proportional to (rx, rz), so x^rz z^-rx = 1.
   * Since x != 1 and z != 1, both reference exponents are nonzero. */
  mpz_class p(rz), q(-rx);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  return {false, {{p, q}}};
}

GenAssignment genus3_assignment(const Rational& x, const Rational& y,
                                const Rational& z, const Rational& w) {
  const Rational p = commutator_entry(x, y, z, w);
  std::vector<UTMat> images;
  images.emplace_back(x, y);
  images.emplace_back(z, w);
  images.emplace_back(Rational(1), -p / Rational(2));
  return GenAssignment(Presentation::hybrid(1), std::move(images));
}

Certificate certify_genus3(const Rational& x, const Rational& y,
                           const Rational& z, const Rational& w) {
  Certificate cert;
  cert.inputs = {{"x", x.str()}, {"y", y.str()}, {"z", z.str()}, {"w", w.str()}};

  const bool x_pos = x.sign() > 0;
  const bool z_pos = z.sign() > 0;
  cert.checks.push_back({"x_positive", x_pos, x.str()});
  cert.checks.push_back({"z_positive", z_pos, z.str()});

  if (x_pos && z_pos) {
    const MultIndepResult mi = mult_indep(x, z);
    cert.checks.push_back({"mult_indep", mi.independent,
                           mi.independent ? "rank 2" : witness_string(*mi.witness)});
  } else {
    cert.checks.push_back({"mult_indep", false, "not evaluated"});
    cert.notes.push_back("diagonal entries leave the positive component; "
                         "the certificate does not apply");
  }

  const Rational p = commutator_entry(x, y, z, w);
  cert.checks.push_back({"p_nonzero", !p.is_zero(), p.str()});

  if (!x.is_zero() && !z.is_zero()) {
    const RelationReport rel = check_relation(genus3_assignment(x, y, z, w));
    cert.checks.push_back({"relation", rel.holds_exactly, rel.residual.str()});
  } else {
    cert.checks.push_back({"relation", false, "not evaluated"});
  }

  cert.accept = true;
  for (const auto& check : cert.checks) cert.accept = cert.accept && check.pass;
  if (cert.accept) {
    cert.notes.push_back("c maps to (1, " + (-p / Rational(2)).str() +
                         "; 0, 1): unipotent and nontrivial");
    cert.notes.push_back("no simple closed curve lies in the kernel");
  }
  return cert;
}

ScanResult scan_kernel(const GenAssignment& rep, const std::vector<SccClass>& classes) {
  ScanResult result;
  for (const SccClass& cls : classes) {
    const UTMat image = eval_word(cls.word, rep);
    ++result.scanned;
    if (image.is_identity()) result.identity.push_back({cls, image});
    else if (image.is_minus_identity()) result.minus_identity.push_back({cls, image});
  }
  bool positive_diagonal = true;
  for (const UTMat& m : rep.images())
    positive_diagonal = positive_diagonal && m.det() == +1 && m.upper_left().sign() > 0;
  if (positive_diagonal)
    result.notes.push_back("all generator images have positive diagonal, so no word "
                           "can map to -I");
  return result;
}

TwoSidedReport two_sided_variant(const Rational& x, const Rational& y,
                                 const Rational& z, const Rational& w,
                                 const std::vector<Word>& words) {
  if (!certify_genus3(x, y, z, w).accept)
    throw std::domain_error("two_sided_variant: the base certificate rejects this point");

  const Rational p = commutator_entry(x, y, z, w);
  std::vector<UTMat> images;
  images.emplace_back(x, y);
  images.emplace_back(z, w);
  images.emplace_back(Rational(1), -p / Rational(2), -1);

  TwoSidedReport report{GenAssignment(Presentation::hybrid(1), std::move(images)),
                        {}, false, {}, false};
  report.relation = check_relation(report.assignment);
  const UTMat c = report.assignment.image(2);
  report.c_square_identity = (c * c).is_identity();

  report.all_match = true;
  for (const Word& word : words) {
    TwoSidedRow row;
    row.word = word;
    row.det = eval_word(word, report.assignment).det();
    row.character = orientation_character(word, report.assignment.presentation());
    row.match = row.det == row.character;
    report.all_match = report.all_match && row.match;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<ForcedFormSample> klein_forced_form(int samples, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<ForcedFormSample> out;
  out.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    ForcedFormSample sample;
    sample.z = sample_positive_rational(rng);
    sample.w = sample_signed_rational(rng);
    /* c d c d^-1 = (x^2, xy(z^2 + 1/x^2) + zw(1 - x^2); 0, 1/x^2) = I
     * forces x^2 = 1; the upper entry then reads x y (z^2 + 1) = 0, and
     * z^2 + 1 > 0 forces y = 0.  Only the sign of x is free. */
    const int x_sign = (rng() % 2 == 0) ? +1 : -1;
    sample.c = UTMat(Rational(x_sign), Rational(0));
    const UTMat d(sample.z, sample.w);
    if (!cdcd_closed_form(sample.c, d).is_identity())
      throw std::logic_error("klein_forced_form: solved image fails the relator");
    sample.pm_identity = sample.c.is_identity() || sample.c.is_minus_identity();
    out.push_back(std::move(sample));
  }
  return out;
}

Certificate klein_analyze(const Rational& z, const Rational& w, int c_sign) {
  if (z.sign() <= 0) throw std::domain_error("klein_analyze: requires z > 0");
  if (c_sign != +1 && c_sign != -1)
    throw std::domain_error("klein_analyze: c_sign must be +1 or -1");

  const UTMat c(Rational(c_sign), Rational(0));
  const UTMat d(z, w);
  const Presentation pres = Presentation::klein_tail(0);
  GenAssignment rep(pres, {c, d});

  Certificate cert;
  cert.inputs = {{"z", z.str()}, {"w", w.str()}, {"c_sign", std::to_string(c_sign)}};

  const RelationReport rel = check_relation(rep);
  cert.checks.push_back({"relation", rel.holds_exactly, rel.residual.str()});

  const std::vector<std::pair<std::string, Word>> loops = {
      {"c", parse_word("c", pres)},
      {"d", parse_word("d", pres)},
      {"cd", parse_word("c d", pres)},
      {"d^2", parse_word("d^2", pres)},
      {"(cd)^2", parse_word("c d", pres).pow(2)},
  };
  for (const auto& [label, word] : loops) {
    const UTMat image = eval_word(word, rep);
    cert.checks.push_back({"loop " + label + " nontrivial", !image.is_identity(),
                           image.str()});
    if (image.is_minus_identity())
      cert.notes.push_back("loop " + label + " maps to -I: nontrivial in SL(2) but "
                           "trivial after projectivization");
  }

  cert.accept = true;
  for (const auto& check : cert.checks) cert.accept = cert.accept && check.pass;
  if (!cert.accept && c_sign == +1)
    cert.notes.push_back("upper-triangular images force c to +-I; the + sign puts c "
                         "itself in the kernel");
  return cert;
}

}  // namespace surfrep
