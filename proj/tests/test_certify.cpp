#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <surfrep/certify.hpp>
#include <surfrep/factor.hpp>
#include <surfrep/repspace.hpp>

#include <algorithm>
#include <random>

using surfrep::Certificate;
using surfrep::GenAssignment;
using surfrep::mult_indep;
using surfrep::Presentation;
using surfrep::Rational;
using surfrep::UTMat;
using surfrep::Word;

namespace {

bool check_passed(const Certificate& cert, const char* name) {
  for (const auto& c : cert.checks)
    if (c.name == name) return c.pass;
  FAIL("no check named " << name);
  return false;
}

std::string check_witness(const Certificate& cert, const char* name) {
  for (const auto& c : cert.checks)
    if (c.name == name) return c.witness;
  FAIL("no check named " << name);
  return {};
}

bool has_note_containing(const std::vector<std::string>& notes, const char* text) {
  return std::any_of(notes.begin(), notes.end(), [&](const std::string& n) {
    return n.find(text) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("factor_positive") {
  using Factors = std::vector<std::pair<mpz_class, unsigned long>>;
  CHECK(surfrep::factor_positive(1) == Factors{});
  CHECK(surfrep::factor_positive(13) == Factors{{13, 1}});
  CHECK(surfrep::factor_positive(360) == Factors{{2, 3}, {3, 2}, {5, 1}});
  CHECK(surfrep::factor_positive(mpz_class(1) << 20) == Factors{{2, 20}});
  CHECK(surfrep::factor_positive(10403) == Factors{{101, 1}, {103, 1}});
  CHECK(surfrep::factor_positive(1000003) == Factors{{1000003, 1}});

  // Beyond the trial-division bound: Pollard rho splits the semiprime.
  const mpz_class p("1000000007"), q("1000000009");
  CHECK(surfrep::factor_positive(p * q) == Factors{{p, 1}, {q, 1}});
  CHECK(surfrep::factor_positive(p * p) == Factors{{p, 2}});

  CHECK_THROWS_AS(surfrep::factor_positive(0), std::domain_error);
  CHECK_THROWS_AS(surfrep::factor_positive(-6), std::domain_error);
}

TEST_CASE("rational_exponents") {
  using Exps = std::map<mpz_class, long>;
  CHECK(surfrep::rational_exponents(Rational(8, 9)) == Exps{{2, 3}, {3, -2}});
  CHECK(surfrep::rational_exponents(Rational(1)) == Exps{});
  CHECK(surfrep::rational_exponents(Rational(6, 4)) == Exps{{2, -1}, {3, 1}});
  CHECK(surfrep::rational_exponents(Rational(10)) == Exps{{2, 1}, {5, 1}});
  CHECK_THROWS_AS(surfrep::rational_exponents(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(surfrep::rational_exponents(Rational(-2)), std::domain_error);
}

TEST_CASE("mult_indep: pinned examples") {
  auto r = mult_indep(Rational(2), Rational(4));
  CHECK(!r.independent);
  CHECK(*r.witness == std::pair<mpz_class, mpz_class>{2, -1});

  r = mult_indep(Rational(1), Rational(7));
  CHECK(*r.witness == std::pair<mpz_class, mpz_class>{1, 0});
  r = mult_indep(Rational(7), Rational(1));
  CHECK(*r.witness == std::pair<mpz_class, mpz_class>{0, 1});
  r = mult_indep(Rational(1), Rational(1));
  CHECK(*r.witness == std::pair<mpz_class, mpz_class>{1, 0});

  r = mult_indep(Rational(4), Rational(8));
  CHECK(*r.witness == std::pair<mpz_class, mpz_class>{3, -2});

  r = mult_indep(Rational(2, 3), Rational(9, 4));
  CHECK(!r.independent);
  CHECK(*r.witness == std::pair<mpz_class, mpz_class>{2, 1});

  CHECK(mult_indep(Rational(2), Rational(3)).independent);
  CHECK(mult_indep(Rational(6), Rational(12)).independent);
  CHECK(!mult_indep(Rational(2), Rational(3)).witness.has_value());

  CHECK_THROWS_AS(mult_indep(Rational(-2), Rational(3)), std::domain_error);
  CHECK_THROWS_AS(mult_indep(Rational(2), Rational(0)), std::domain_error);
}

TEST_CASE("mult_indep agrees with brute force over small exponents") {
  std::mt19937_64 rng(20260816);
  auto draw = [&rng] {
    const long num = static_cast<long>(rng() % 20) + 1;
    const long den = static_cast<long>(rng() % 20) + 1;
    return Rational(num, den);
  };
  constexpr int kBound = 20;
  for (int i = 0; i < 200; ++i) {
    const Rational x = draw(), z = draw();
    bool brute_dependent = false;
    for (int a = -kBound; a <= kBound && !brute_dependent; ++a)
      for (int b = -kBound; b <= kBound && !brute_dependent; ++b) {
        if (a == 0 && b == 0) continue;
        if (x.pow(a) * z.pow(b) == Rational(1)) brute_dependent = true;
      }
    const auto result = mult_indep(x, z);
    REQUIRE_MESSAGE(result.independent == !brute_dependent,
                    "x = " << x << ", z = " << z);
    if (!result.independent) {
      const auto [wp, wq] = *result.witness;
      CHECK(x.pow(wp.get_si()) * z.pow(wq.get_si()) == Rational(1));
      CHECK((wp != 0 || wq != 0));
      // Normalized: first nonzero entry positive.
      CHECK((wp > 0 || (wp == 0 && wq > 0)));
    }
  }
}

TEST_CASE("genus3_assignment satisfies the relator identically") {
  const GenAssignment rho = surfrep::genus3_assignment(Rational(2), Rational(1),
                                                       Rational(3), Rational(0));
  CHECK(rho.presentation() == Presentation::hybrid(1));
  CHECK(rho.image(0) == UTMat(Rational(2), Rational(1)));
  CHECK(rho.image(1) == UTMat(Rational(3), Rational(0)));
  CHECK(rho.image(2) == UTMat(Rational(1), Rational(8)));  // -p/2 with p = -16
  CHECK(check_relation(rho).holds_exactly);

  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Rational x = surfrep::sample_positive_rational(rng);
    const Rational y = surfrep::sample_signed_rational(rng);
    const Rational z = surfrep::sample_positive_rational(rng);
    const Rational w = surfrep::sample_signed_rational(rng);
    CHECK(check_relation(surfrep::genus3_assignment(x, y, z, w)).holds_exactly);
  }

  CHECK_THROWS_AS(surfrep::genus3_assignment(Rational(0), Rational(1), Rational(3), Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("certify_genus3 accepts the faithful example") {
  const Certificate cert = surfrep::certify_genus3(Rational(2), Rational(1),
                                                   Rational(3), Rational(0));
  CHECK(cert.accept);
  REQUIRE(cert.checks.size() == 5);
  CHECK(cert.checks[0].name == "x_positive");
  CHECK(cert.checks[1].name == "z_positive");
  CHECK(cert.checks[2].name == "mult_indep");
  CHECK(cert.checks[3].name == "p_nonzero");
  CHECK(cert.checks[4].name == "relation");
  for (const auto& c : cert.checks) CHECK(c.pass);
  CHECK(check_witness(cert, "mult_indep") == "rank 2");
  CHECK(check_witness(cert, "p_nonzero") == "-16");
  CHECK(cert.inputs == std::vector<std::pair<std::string, std::string>>{
                           {"x", "2"}, {"y", "1"}, {"z", "3"}, {"w", "0"}});
  CHECK(has_note_containing(cert.notes, "no simple closed curve lies in the kernel"));
  CHECK(has_note_containing(cert.notes, "c maps to (1, 8; 0, 1)"));
}

TEST_CASE("certify_genus3 rejects degenerate inputs with witnesses") {
  // p = 0: c maps to I.
  Certificate cert = surfrep::certify_genus3(Rational(2), Rational(0), Rational(3), Rational(0));
  CHECK(!cert.accept);
  CHECK(!check_passed(cert, "p_nonzero"));
  CHECK(check_witness(cert, "p_nonzero") == "0");
  CHECK(check_passed(cert, "mult_indep"));
  CHECK(check_passed(cert, "relation"));

  // x, z multiplicatively dependent: 2^2 = 4.
  cert = surfrep::certify_genus3(Rational(2), Rational(1), Rational(4), Rational(0));
  CHECK(!cert.accept);
  CHECK(!check_passed(cert, "mult_indep"));
  CHECK(check_witness(cert, "mult_indep") == "(2, -1)");

  // x = 1 is dependent all by itself.
  cert = surfrep::certify_genus3(Rational(1), Rational(5), Rational(3), Rational(2));
  CHECK(!cert.accept);
  CHECK(check_witness(cert, "mult_indep") == "(1, 0)");
  CHECK(check_passed(cert, "p_nonzero"));

  // Off the positive component: mult_indep is not applicable.
  cert = surfrep::certify_genus3(Rational(-2), Rational(1), Rational(3), Rational(0));
  CHECK(!cert.accept);
  CHECK(!check_passed(cert, "x_positive"));
  CHECK(check_witness(cert, "mult_indep") == "not evaluated");
  CHECK(has_note_containing(cert.notes, "positive component"));
  CHECK(check_passed(cert, "relation"));  // still evaluable at x = -2

  // x = 0: no matrix at all, so the relation cannot be evaluated.
  cert = surfrep::certify_genus3(Rational(0), Rational(1), Rational(3), Rational(2));
  CHECK(!cert.accept);
  CHECK(check_witness(cert, "relation") == "not evaluated");
}

TEST_CASE("scan_kernel over the genus-3 catalog") {
  const auto catalog = surfrep::genus3_catalog(6, 6, true);

  // Faithful point: nothing in the kernel.
  const auto clean = scan_kernel(surfrep::genus3_assignment(Rational(2), Rational(1),
                                                            Rational(3), Rational(0)),
                                 catalog);
  CHECK(clean.scanned == static_cast<int>(catalog.size()));
  CHECK(clean.identity.empty());
  CHECK(clean.minus_identity.empty());
  CHECK(has_note_containing(clean.notes, "positive diagonal"));

  // p = 0 kills c, and with it exactly the pure c-power entries.
  const auto hits = scan_kernel(surfrep::genus3_assignment(Rational(2), Rational(0),
                                                           Rational(3), Rational(0)),
                                catalog);
  CHECK(hits.identity.size() == 4);
  bool saw_c = false, saw_c2 = false;
  for (const auto& hit : hits.identity) {
    REQUIRE(hit.cls.word.syllables().size() == 1);
    CHECK(hit.cls.word.syllables()[0].gen == 2);
    CHECK(hit.image.is_identity());
    saw_c = saw_c || hit.cls.word == Word::generator(2, 1);
    saw_c2 = saw_c2 || hit.cls.word == Word::generator(2, 2);
  }
  CHECK(saw_c);
  CHECK(saw_c2);
  CHECK(hits.minus_identity.empty());
}

TEST_CASE("scan_kernel flags -I only when reachable") {
  // A determinant -1 image: the positive-diagonal note must not appear.
  const GenAssignment rho(Presentation::hybrid(1),
                          {UTMat(Rational(2), Rational(0)), UTMat(Rational(3), Rational(0)),
                           UTMat(Rational(1), Rational(0), -1)});
  const auto result = scan_kernel(rho, {{"base", Word::generator(2, 2), false, 0, 0, 0, 2}});
  CHECK(result.notes.empty());
  REQUIRE(result.identity.size() == 1);  // (1,0,-1)^2 = I

  // Negative diagonal reaches -I.
  const GenAssignment neg(Presentation::hybrid(1),
                          {UTMat(Rational(-1), Rational(0)), UTMat(Rational(3), Rational(0)),
                           UTMat(Rational(1), Rational(0))});
  const auto result2 = scan_kernel(neg, {{"base", Word::generator(0, 1), false, 0, 0, 0, 0}});
  REQUIRE(result2.minus_identity.size() == 1);
  CHECK(result2.identity.empty());
  CHECK(result2.notes.empty());
}

TEST_CASE("two_sided_variant matches determinants to orientation characters") {
  std::vector<Word> words;
  for (const auto& cls : surfrep::genus3_catalog(2, 2, true)) words.push_back(cls.word);

  const auto report = surfrep::two_sided_variant(Rational(2), Rational(1),
                                                 Rational(3), Rational(0), words);
  CHECK(report.c_square_identity);
  CHECK(!report.relation.holds_exactly);
  CHECK(!report.relation.holds_projectively);
  CHECK(report.relation.residual == UTMat(Rational(1), Rational(-16)));
  CHECK(report.assignment.image(2) == UTMat(Rational(1), Rational(8), -1));
  CHECK(report.all_match);
  REQUIRE(report.rows.size() == words.size());
  bool saw_odd = false, saw_even = false;
  for (const auto& row : report.rows) {
    CHECK(row.match);
    CHECK(row.det == row.character);
    saw_odd = saw_odd || row.det == -1;
    saw_even = saw_even || row.det == +1;
  }
  CHECK(saw_odd);
  CHECK(saw_even);

  CHECK_THROWS_AS(surfrep::two_sided_variant(Rational(2), Rational(0), Rational(3), Rational(0),
                                             words),
                  std::domain_error);
}

TEST_CASE("klein_forced_form squeezes c to +-I") {
  const auto samples = surfrep::klein_forced_form(100, 2026);
  REQUIRE(samples.size() == 100);
  for (const auto& s : samples) {
    CHECK(s.pm_identity);
    CHECK((s.c.is_identity() || s.c.is_minus_identity()));
    CHECK(s.z.sign() > 0);
  }
  // Deterministic for a fixed seed.
  const auto again = surfrep::klein_forced_form(100, 2026);
  for (size_t i = 0; i < samples.size(); ++i) {
    CHECK(samples[i].z == again[i].z);
    CHECK(samples[i].w == again[i].w);
  }
}

TEST_CASE("klein_analyze certificates") {
  const Certificate good = surfrep::klein_analyze(Rational(1), Rational(1), -1);
  CHECK(good.accept);
  CHECK(check_passed(good, "relation"));
  CHECK(check_passed(good, "loop c nontrivial"));
  CHECK(check_passed(good, "loop d nontrivial"));
  CHECK(check_passed(good, "loop cd nontrivial"));
  CHECK(check_passed(good, "loop d^2 nontrivial"));
  CHECK(check_passed(good, "loop (cd)^2 nontrivial"));
  CHECK(has_note_containing(good.notes, "projectivization"));
  CHECK(good.inputs == std::vector<std::pair<std::string, std::string>>{
                           {"z", "1"}, {"w", "1"}, {"c_sign", "-1"}});

  const Certificate plus = surfrep::klein_analyze(Rational(1), Rational(1), +1);
  CHECK(!plus.accept);
  CHECK(!check_passed(plus, "loop c nontrivial"));
  CHECK(has_note_containing(plus.notes, "+ sign puts c itself in the kernel"));

  const Certificate trivial_d = surfrep::klein_analyze(Rational(1), Rational(0), -1);
  CHECK(!trivial_d.accept);
  CHECK(!check_passed(trivial_d, "loop d nontrivial"));

  CHECK_THROWS_AS(surfrep::klein_analyze(Rational(0), Rational(1), -1), std::domain_error);
  CHECK_THROWS_AS(surfrep::klein_analyze(Rational(-1), Rational(1), -1), std::domain_error);
  CHECK_THROWS_AS(surfrep::klein_analyze(Rational(1), Rational(1), 0), std::domain_error);
}
