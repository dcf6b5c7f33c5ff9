#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <surfrep/representation.hpp>
#include <surfrep/repspace.hpp>

#include <random>

using surfrep::GenAssignment;
using surfrep::Presentation;
using surfrep::Rational;
using surfrep::Syllable;
using surfrep::UTMat;
using surfrep::Word;

namespace {

Word random_word(std::mt19937_64& rng, int gens, int max_syllables) {
  std::vector<Syllable> syls;
  const int n = static_cast<int>(rng() % (max_syllables + 1));
  for (int i = 0; i < n; ++i) {
    long long exp = static_cast<long long>(rng() % 4) + 1;
    if (rng() % 2) exp = -exp;
    syls.push_back({static_cast<int>(rng() % gens), exp});
  }
  return Word::from_syllables(std::move(syls));
}

GenAssignment random_assignment(std::mt19937_64& rng, const Presentation& pres) {
  std::vector<UTMat> images;
  for (int i = 0; i < pres.generator_count(); ++i) {
    const Rational x = surfrep::sample_positive_rational(rng);
    const Rational y = surfrep::sample_signed_rational(rng);
    images.push_back(UTMat(x, y, rng() % 2 ? -1 : +1));
  }
  return GenAssignment(pres, std::move(images));
}

}  // namespace

TEST_CASE("assignment validates the image count") {
  const Presentation h1 = Presentation::hybrid(1);
  CHECK_THROWS_AS(GenAssignment(h1, {UTMat(), UTMat()}), std::invalid_argument);
  CHECK_THROWS_AS(GenAssignment(h1, {UTMat(), UTMat(), UTMat(), UTMat()}), std::invalid_argument);
  const GenAssignment rho(h1, {UTMat(), UTMat(), UTMat()});
  CHECK(rho.image(2).is_identity());
  CHECK(rho.images().size() == 3);
}

TEST_CASE("eval_word is a homomorphism") {
  std::mt19937_64 rng(11);
  const Presentation pres = Presentation::squares(3);
  for (int i = 0; i < 200; ++i) {
    const GenAssignment rho = random_assignment(rng, pres);
    const Word u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
    CHECK(eval_word(u * v, rho) == eval_word(u, rho) * eval_word(v, rho));
    CHECK(eval_word(u.inverse(), rho) == eval_word(u, rho).inverse());
    CHECK(eval_word(u.pow(3), rho) == eval_word(u, rho).pow(3));
    CHECK(eval_word(Word(), rho).is_identity());
  }
}

TEST_CASE("diagonal images see only the abelianization") {
  std::mt19937_64 rng(22);
  const Presentation s1 = Presentation::orientable(1);
  const Rational x(2), z(3, 2);
  const GenAssignment rho(s1, {UTMat(x, Rational(0)), UTMat(z, Rational(0))});
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 2, 6);
    const auto sums = exponent_sums(w, s1);
    const UTMat m = eval_word(w, rho);
    CHECK(m.upper_left() == x.pow(sums[0]) * z.pow(sums[1]));
    CHECK(m.upper_right().is_zero());
  }
}

TEST_CASE("exponent sums survive free reduction") {
  const Presentation s2 = Presentation::orientable(2);
  const Word w = Word::from_syllables({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {3, -2}});
  CHECK(exponent_sums(w, s2) == std::vector<long long>{2, 0, 0, -2});
  CHECK(exponent_sums(Word(), s2) == std::vector<long long>(4, 0));
}

TEST_CASE("orientation character is the parity of one-sided exponents") {
  const Presentation h1 = Presentation::hybrid(1);
  CHECK(orientation_character(parse_word("c", h1), h1) == -1);
  CHECK(orientation_character(parse_word("c^2", h1), h1) == +1);
  CHECK(orientation_character(parse_word("a1 b1", h1), h1) == +1);
  CHECK(orientation_character(parse_word("a1 c^-3", h1), h1) == -1);

  const Presentation k0 = Presentation::klein_tail(0);
  CHECK(orientation_character(parse_word("d", k0), k0) == -1);
  CHECK(orientation_character(parse_word("c", k0), k0) == +1);

  const Presentation n2 = Presentation::squares(2);
  CHECK(orientation_character(parse_word("c1", n2), n2) == -1);
  CHECK(orientation_character(parse_word("c1 c2", n2), n2) == +1);

  CHECK_THROWS_AS(orientation_character(Word(), Presentation::orientable(1)), std::domain_error);

  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 3, 5), v = random_word(rng, 3, 5);
    CHECK(orientation_character(u * v, h1) ==
          orientation_character(u, h1) * orientation_character(v, h1));
  }
}

TEST_CASE("check_relation on points of the representation spaces") {
  std::mt19937_64 seeds(44);
  for (const char* name : {"U:1", "U:2", "V:3", "VH:1", "VK:1"}) {
    const surfrep::Space space = surfrep::Space::parse(name);
    for (int i = 0; i < 20; ++i) {
      const surfrep::RepPoint pt = sample_point(space, seeds());
      const GenAssignment rho = rep_of(pt);
      const auto report = check_relation(rho);
      CHECK(report.holds_exactly);
      CHECK(report.holds_projectively);
      CHECK(report.residual.is_identity());
    }
  }
  // A non-representation: the relator image is the commutator value itself.
  const Presentation s1 = Presentation::orientable(1);
  const GenAssignment bad(s1, {UTMat(Rational(2), Rational(1)), UTMat(Rational(3), Rational(0))});
  const auto report = check_relation(bad);
  CHECK(!report.holds_exactly);
  CHECK(!report.holds_projectively);
  CHECK(report.residual == UTMat(Rational(1), Rational(-16)));
}
