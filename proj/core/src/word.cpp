#include "surfrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <utility>

namespace surfrep {

namespace {

/* Append gen^exp to a syllable stack, merging with the top and dropping
 * zero exponents so the stack stays freely reduced. */
void push_reduced(std::vector<Syllable>& stack, int gen, long long exp) {
  if (exp == 0) return;
  if (!stack.empty() && stack.back().gen == gen) {
    stack.back().exp += exp;
    if (stack.back().exp == 0) stack.pop_back();
    return;
  }
  stack.push_back({gen, exp});
}

/* A word as single letters: (generator, +1/-1) pairs. */
using Letter = std::pair<int, int>;

std::vector<Letter> to_letters(const std::vector<Syllable>& syls) {
  std::vector<Letter> letters;
  for (const auto& s : syls) {
    const int sign = s.exp > 0 ? 1 : -1;
    for (long long i = 0; i < std::llabs(s.exp); ++i) letters.emplace_back(s.gen, sign);
  }
  return letters;
}

Word from_letters(const std::vector<Letter>& letters) {
  std::vector<Syllable> syls;
  for (const auto& [gen, sign] : letters) push_reduced(syls, gen, sign);
  return Word::from_syllables(std::move(syls));
}

}  // namespace

Word Word::from_syllables(std::vector<Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) push_reduced(w.syls_, s.gen, s.exp);
  return w;
}

Word Word::generator(int gen, long long exp) {
  return from_syllables({{gen, exp}});
}

long long Word::length() const {
  long long n = 0;
  for (const auto& s : syls_) n += std::llabs(s.exp);
  return n;
}

Word Word::inverse() const {
  Word w;
  w.syls_.reserve(syls_.size());
  for (auto it = syls_.rbegin(); it != syls_.rend(); ++it)
    w.syls_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Word acc;
  for (long long i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> syls = a.syls_;
  for (const auto& s : b.syls_) push_reduced(syls, s.gen, s.exp);
  Word w;
  w.syls_ = std::move(syls);
  return w;
}

Word Word::cyclic_reduction() const {
  std::vector<Letter> letters = to_letters(syls_);
  size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo].first == letters[hi - 1].first &&
         letters[lo].second == -letters[hi - 1].second) {
    ++lo;
    --hi;
  }
  return from_letters({letters.begin() + lo, letters.begin() + hi});
}

Word Word::canonical_rotation() const {
  const Word core = cyclic_reduction();
  std::vector<Letter> letters = to_letters(core.syls_);
  if (letters.size() <= 1) return core;
  /* Least of all letter-level rotations; rotations of a cyclically reduced
   * word need no further reduction. */
  const size_t n = letters.size();
  size_t best = 0;
  for (size_t cand = 1; cand < n; ++cand) {
    for (size_t i = 0; i < n; ++i) {
      const Letter& a = letters[(cand + i) % n];
      const Letter& b = letters[(best + i) % n];
      if (a < b) { best = cand; break; }
      if (b < a) break;
    }
  }
  std::rotate(letters.begin(), letters.begin() + best, letters.end());
  return from_letters(letters);
}

Word parse_word(std::string_view text, const Presentation& pres) {
  Word out;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    const size_t start = i;
    const int column = static_cast<int>(start) + 1;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view token = text.substr(start, i - start);

    std::string_view name = token;
    std::string_view exp_text;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      exp_text = token.substr(caret + 1);
      if (exp_text.empty())
        throw WordParseError("missing exponent after '^' in \"" + std::string(token) + "\"", column);
    }
    if (name.empty())
      throw WordParseError("empty generator name in \"" + std::string(token) + "\"", column);

    bool inverted = false;
    std::string lookup(name);
    if (std::isupper(static_cast<unsigned char>(lookup[0]))) {
      inverted = true;
      lookup[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lookup[0])));
    }
    auto gen = pres.generator_index(lookup);
    if (!gen)
      throw WordParseError("unknown generator \"" + std::string(name) + "\" for surface " +
                           pres.surface_name(), column);

    long long exp = 1;
    if (!exp_text.empty()) {
      std::string_view digits = exp_text;
      bool neg = false;
      if (digits.front() == '-') { neg = true; digits.remove_prefix(1); }
      if (digits.empty() || digits.size() > 12)
        throw WordParseError("bad exponent \"" + std::string(exp_text) + "\"", column);
      long long mag = 0;
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw WordParseError("bad exponent \"" + std::string(exp_text) + "\"", column);
        mag = mag * 10 + (c - '0');
      }
      exp = neg ? -mag : mag;
    }
    if (inverted) exp = -exp;
    out = out * Word::generator(*gen, exp);
  }
  return out;
}

std::string render_word(const Word& w, const Presentation& pres) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    std::string name = pres.generator_name(s.gen);
    if (s.exp == 1) {
      out += name;
    } else if (s.exp == -1) {
      name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
      out += name;
    } else {
      out += name + "^" + std::to_string(s.exp);
    }
  }
  return out;
}

}  // namespace surfrep
