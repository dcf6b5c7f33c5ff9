#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <surfrep/word.hpp>

#include <random>
#include <set>

using surfrep::Presentation;
using surfrep::PresentationKind;
using surfrep::Syllable;
using surfrep::Word;
using surfrep::WordParseError;

namespace {

Word random_word(std::mt19937_64& rng, int gens, int max_syllables) {
  std::vector<Syllable> syls;
  const int n = static_cast<int>(rng() % (max_syllables + 1));
  for (int i = 0; i < n; ++i) {
    const int gen = static_cast<int>(rng() % gens);
    long long exp = static_cast<long long>(rng() % 3) + 1;
    if (rng() % 2) exp = -exp;
    syls.push_back({gen, exp});
  }
  return Word::from_syllables(std::move(syls));
}

}  // namespace

TEST_CASE("construction freely reduces") {
  CHECK(Word::from_syllables({{0, 2}, {0, -2}}).empty());
  CHECK(Word::from_syllables({{0, 1}, {1, 1}, {1, -1}, {0, 1}}) == Word::generator(0, 2));
  CHECK(Word::from_syllables({{0, 1}, {0, 2}}) == Word::generator(0, 3));
  CHECK(Word::generator(0, 0).empty());
  CHECK(Word().empty());

  const Word w = Word::from_syllables({{0, 2}, {1, -3}});
  CHECK(w.length() == 5);
  REQUIRE(w.syllables().size() == 2);
  CHECK(w.syllables()[0] == Syllable{0, 2});
  CHECK(w.syllables()[1] == Syllable{1, -3});
}

TEST_CASE("group laws on random words") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 300; ++i) {
    const Word u = random_word(rng, 3, 6), v = random_word(rng, 3, 6), w = random_word(rng, 3, 6);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * u.inverse()).empty());
    CHECK((u.inverse() * u).empty());
    CHECK(u.inverse().inverse() == u);
    CHECK((u * v).inverse() == v.inverse() * u.inverse());
    CHECK(u.pow(3) == u * u * u);
    CHECK(u.pow(-2) == u.inverse() * u.inverse());
    CHECK(u.pow(0).empty());
    CHECK(u.pow(1) == u);
  }
}

TEST_CASE("multiplication reduces across the seam") {
  const Word ab = Word::from_syllables({{0, 1}, {1, 1}});
  const Word BA = Word::from_syllables({{1, -1}, {0, -1}});
  CHECK((ab * BA).empty());
  const Word aB = Word::from_syllables({{0, 1}, {1, -1}});
  CHECK(ab * aB.inverse() == Word::from_syllables({{0, 1}, {1, 2}, {0, -1}}));
}

TEST_CASE("cyclic reduction strips conjugating ends") {
  // a b c b^-1 a^-1 reduces cyclically to c.
  const Word w = Word::from_syllables({{0, 1}, {1, 1}, {2, 1}, {1, -1}, {0, -1}});
  CHECK(w.cyclic_reduction() == Word::generator(2));
  CHECK(Word::generator(0, 3).cyclic_reduction() == Word::generator(0, 3));
  CHECK(Word().cyclic_reduction().empty());
}

TEST_CASE("canonical rotation is a conjugacy invariant") {
  std::mt19937_64 rng(987);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, 3, 5);
    const Word u = random_word(rng, 3, 4);
    CHECK((u * w * u.inverse()).canonical_rotation() == w.canonical_rotation());
  }
  // b a b and a b^2 are conjugate (rotate one letter).
  const Word bab = Word::from_syllables({{1, 1}, {0, 1}, {1, 1}});
  const Word abb = Word::from_syllables({{0, 1}, {1, 2}});
  CHECK(bab.canonical_rotation() == abb.canonical_rotation());
  CHECK(bab != abb);
  // a^2 b is already the least rotation.
  const Word aab = Word::from_syllables({{0, 2}, {1, 1}});
  CHECK(aab.canonical_rotation() == aab);
}

TEST_CASE("presentation factories and generator tables") {
  const Presentation s2 = Presentation::orientable(2);
  CHECK(s2.generator_names() == std::vector<std::string>{"a1", "b1", "a2", "b2"});
  CHECK(s2.surface_name() == "S2");
  CHECK(s2.is_orientable());
  CHECK_THROWS_AS(s2.nonorientable_genus(), std::domain_error);

  const Presentation n3s = Presentation::squares(3);
  CHECK(n3s.generator_names() == std::vector<std::string>{"c1", "c2", "c3"});
  CHECK(n3s.surface_name() == "N3:squares");
  CHECK(n3s.nonorientable_genus() == 3);

  const Presentation n3h = Presentation::hybrid(1);
  CHECK(n3h.generator_names() == std::vector<std::string>{"a1", "b1", "c"});
  CHECK(n3h.surface_name() == "N3:hybrid");
  CHECK(n3h.nonorientable_genus() == 3);

  const Presentation n4k = Presentation::klein_tail(1);
  CHECK(n4k.generator_names() == std::vector<std::string>{"a1", "b1", "c", "d"});
  CHECK(n4k.surface_name() == "N4:klein");
  CHECK(n4k.nonorientable_genus() == 4);

  CHECK(Presentation::klein_tail(0).generator_names() == std::vector<std::string>{"c", "d"});
  CHECK(Presentation::hybrid(0).generator_names() == std::vector<std::string>{"c"});

  CHECK_THROWS_AS(Presentation::orientable(0), std::invalid_argument);
  CHECK_THROWS_AS(Presentation::squares(0), std::invalid_argument);
  CHECK_THROWS_AS(Presentation::hybrid(-1), std::invalid_argument);
  CHECK_THROWS_AS(Presentation::klein_tail(-1), std::invalid_argument);
}

TEST_CASE("generator_index with rank-1 aliases") {
  const Presentation s1 = Presentation::orientable(1);
  CHECK(s1.generator_index("a") == 0);
  CHECK(s1.generator_index("b1") == 1);
  CHECK(!s1.generator_index("c").has_value());

  const Presentation s2 = Presentation::orientable(2);
  CHECK(!s2.generator_index("a").has_value());  // ambiguous: a1 and a2 exist
  CHECK(s2.generator_index("a2") == 2);

  const Presentation n1 = Presentation::squares(1);
  CHECK(n1.generator_index("c") == 0);
  const Presentation n2 = Presentation::squares(2);
  CHECK(!n2.generator_index("c").has_value());

  const Presentation h1 = Presentation::hybrid(1);
  CHECK(h1.generator_index("c") == 2);  // exact name, not an alias
  CHECK(h1.generator_index("a") == 0);
}

TEST_CASE("one-sided generators") {
  const Presentation s2 = Presentation::orientable(2);
  for (int i = 0; i < 4; ++i) CHECK(!s2.one_sided_generator(i));
  const Presentation n3s = Presentation::squares(3);
  for (int i = 0; i < 3; ++i) CHECK(n3s.one_sided_generator(i));
  const Presentation h1 = Presentation::hybrid(1);
  CHECK((!h1.one_sided_generator(0) && !h1.one_sided_generator(1) && h1.one_sided_generator(2)));
  const Presentation k1 = Presentation::klein_tail(1);
  CHECK((!k1.one_sided_generator(2) && k1.one_sided_generator(3)));  // c two-sided, d one-sided
  CHECK_THROWS_AS(k1.one_sided_generator(4), std::out_of_range);
}

TEST_CASE("relators") {
  CHECK(Presentation::orientable(1).relator() ==
        Word::from_syllables({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
  CHECK(Presentation::squares(2).relator() == Word::from_syllables({{0, 2}, {1, 2}}));
  CHECK(Presentation::hybrid(1).relator() ==
        Word::from_syllables({{0, 1}, {1, 1}, {0, -1}, {1, -1}, {2, 2}}));
  CHECK(Presentation::klein_tail(0).relator() ==
        Word::from_syllables({{0, 1}, {1, 1}, {0, 1}, {1, -1}}));
  CHECK(Presentation::hybrid(0).relator() == Word::generator(0, 2));
}

TEST_CASE("parse_surface round-trips and validates") {
  for (const char* name : {"S1", "S2", "S10", "N1:squares", "N3:squares", "N3:hybrid",
                           "N5:hybrid", "N2:klein", "N4:klein"}) {
    const Presentation p = Presentation::parse_surface(name);
    CHECK(p.surface_name() == name);
  }
  CHECK(Presentation::parse_surface("N3") == Presentation::hybrid(1));
  CHECK(Presentation::parse_surface("N5") == Presentation::squares(5));
  CHECK(Presentation::parse_surface("N1:hybrid") == Presentation::hybrid(0));

  for (const char* name : {"", "S", "N", "S0", "N0", "S2:squares", "N4:hybrid", "N3:klein",
                           "N3:x", "X3", "S-1", "Sx", "N3:", "S2:"})
    CHECK_THROWS_AS(Presentation::parse_surface(name), std::invalid_argument);
}

TEST_CASE("parse_word grammar") {
  const Presentation h1 = Presentation::hybrid(1);
  CHECK(parse_word("a1 b1 A1 B1 c^2", h1) == h1.relator());
  CHECK(parse_word("a b A B c^2", h1) == h1.relator());
  CHECK(parse_word("A1^3", h1) == Word::generator(0, -3));
  CHECK(parse_word("c^-2", h1) == Word::generator(2, -2));
  CHECK(parse_word("C", h1) == Word::generator(2, -1));
  CHECK(parse_word("", h1).empty());
  CHECK(parse_word("  a1   A1 ", h1).empty());
}

TEST_CASE("parse_word reports the offending column") {
  const Presentation h1 = Presentation::hybrid(1);
  try {
    parse_word("a1 q7", h1);
    FAIL("expected WordParseError");
  } catch (const WordParseError& e) {
    CHECK(e.column() == 4);
    CHECK(std::string(e.what()).find("unknown generator \"q7\"") != std::string::npos);
  }
  try {
    parse_word("a1 b1^", h1);
    FAIL("expected WordParseError");
  } catch (const WordParseError& e) {
    CHECK(e.column() == 4);
    CHECK(std::string(e.what()).find("missing exponent") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_word("a1^9999999999999", h1), WordParseError);  // 13 digits
  CHECK_THROWS_AS(parse_word("a1^x", h1), WordParseError);
  CHECK_THROWS_AS(parse_word("^2", h1), WordParseError);
}

TEST_CASE("render_word inverts parse_word") {
  const Presentation h1 = Presentation::hybrid(1);
  CHECK(render_word(h1.relator(), h1) == "a1 b1 A1 B1 c^2");
  CHECK(render_word(Word::generator(2, -1), h1) == "C");
  CHECK(render_word(Word(), h1).empty());

  std::mt19937_64 rng(606);
  const Presentation k2 = Presentation::klein_tail(2);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, k2.generator_count(), 8);
    CHECK(parse_word(render_word(w, k2), k2) == w);
  }
}
