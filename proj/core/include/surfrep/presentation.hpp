#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace surfrep {

class Word;

/* The four one-relator surface-group presentations handled here:
 *
 *   Orientable(g):  < a1,b1,...,ag,bg | [a1,b1]...[ag,bg] >           g >= 1
 *   Squares(n):     < c1,...,cn       | c1^2 ... cn^2 >               n >= 1
 *   Hybrid(g):      < a1,b1,...,c     | [a1,b1]...[ag,bg] c^2 >       g >= 0
 *   KleinTail(g):   < a1,b1,...,c,d   | [a1,b1]...[ag,bg] c d c d^-1 > g >= 0
 *
 * Squares(n), Hybrid(g) and KleinTail(g) present the non-orientable
 * surfaces of genus n, 2g+1 and 2g+2 respectively. */
enum class PresentationKind { Orientable, Squares, Hybrid, KleinTail };

class Presentation {
public:
  static Presentation orientable(int g);
  static Presentation squares(int n);
  static Presentation hybrid(int g);
  static Presentation klein_tail(int g);

  PresentationKind kind() const { return kind_; }
  /* The presentation's size parameter: g for Orientable/Hybrid/KleinTail,
   * n for Squares. */
  int rank() const { return rank_; }
  bool is_orientable() const { return kind_ == PresentationKind::Orientable; }
  int nonorientable_genus() const;  // throws std::domain_error for Orientable

  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::string& generator_name(int gen) const { return names_.at(gen); }

  /* Exact name lookup, plus the rank-1 conveniences "a" -> "a1",
   * "b" -> "b1" and (Squares(1) only) "c" -> "c1". */
  std::optional<int> generator_index(std::string_view name) const;

  /* True for the generators whose loops are one-sided (orientation-
   * reversing): every ci in Squares, c in Hybrid, d in KleinTail. */
  bool one_sided_generator(int gen) const;

  Word relator() const;

  /* "S<g>" and "N<n>", with presentation-choice suffixes ":squares",
   * ":hybrid", ":klein" for the non-orientable forms.  parse() accepts
   * suffix-free "N<n>" as Squares(n), except bare "N3" which resolves to
   * Hybrid(1) (the genus-3 catalog's presentation). */
  std::string surface_name() const;
  static Presentation parse_surface(std::string_view text);  // throws std::invalid_argument

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_;
  }

private:
  Presentation(PresentationKind kind, int rank);

  PresentationKind kind_;
  int rank_;
  std::vector<std::string> names_;
};

}  // namespace surfrep
