#pragma once

#include "surfrep/presentation.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace surfrep {

/* One maximal run gen^exp inside a word; exp is nonzero in reduced words. */
struct Syllable {
  int gen = 0;
  long long exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/* A freely reduced word in the generators of some presentation: adjacent
 * syllables have distinct generators, no syllable has exponent zero.
 * Construction reduces, so every Word is reduced by invariant. */
class Word {
public:
  Word() = default;
  static Word from_syllables(std::vector<Syllable> syllables);
  static Word generator(int gen, long long exp = 1);

  const std::vector<Syllable>& syllables() const { return syls_; }
  bool empty() const { return syls_.empty(); }
  long long length() const;  // letter count, sum of |exp|

  Word inverse() const;
  Word pow(long long e) const;

  /* Letter-level cyclic reduction: strips matching inverse letters from the
   * two ends (conjugation-invariant core of the word). */
  Word cyclic_reduction() const;

  /* Canonical representative of the conjugacy class of a cyclic word: the
   * least cyclic rotation (letter level) of the cyclic reduction.  Two
   * words are conjugate iff their canonical rotations are equal. */
  Word canonical_rotation() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Syllable> syls_;
};

class WordParseError : public std::runtime_error {
public:
  WordParseError(const std::string& message, int column)
      : std::runtime_error(message + " (column " + std::to_string(column) + ")"),
        column_(column) {}
  int column() const { return column_; }  // 1-based offset of the bad token

private:
  int column_;
};

/* Grammar: whitespace-separated tokens, each  name('^' signed-integer)?.
 * A token whose leading letter is upper-case denotes the inverse of the
 * lower-case generator: "A1" is a1^-1, "A1^3" is a1^-3. */
Word parse_word(std::string_view text, const Presentation& pres);

/* Inverse of parse_word: exponent 1 renders as the bare name, -1 as the
 * upper-cased name, anything else as name^exp. */
std::string render_word(const Word& w, const Presentation& pres);

}  // namespace surfrep
