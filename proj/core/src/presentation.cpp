#include "surfrep/presentation.hpp"

#include "surfrep/word.hpp"

#include <cctype>
#include <stdexcept>

namespace surfrep {

namespace {

std::vector<std::string> handle_pair_names(int g) {
  std::vector<std::string> names;
  names.reserve(2 * g);
  for (int i = 1; i <= g; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  return names;
}

/* [a1,b1][a2,b2]...[ag,bg] as a syllable list (generators 2i-2, 2i-1). */
std::vector<Syllable> commutator_chain(int g) {
  std::vector<Syllable> syls;
  for (int i = 0; i < g; ++i) {
    const int a = 2 * i, b = 2 * i + 1;
    syls.push_back({a, 1});
    syls.push_back({b, 1});
    syls.push_back({a, -1});
    syls.push_back({b, -1});
  }
  return syls;
}

}  // namespace

Presentation::Presentation(PresentationKind kind, int rank) : kind_(kind), rank_(rank) {
  switch (kind_) {
    case PresentationKind::Orientable:
      if (rank_ < 1) throw std::invalid_argument("Presentation: orientable genus must be >= 1");
      names_ = handle_pair_names(rank_);
      break;
    case PresentationKind::Squares:
      if (rank_ < 1) throw std::invalid_argument("Presentation: squares form needs n >= 1");
      for (int i = 1; i <= rank_; ++i) names_.push_back("c" + std::to_string(i));
      break;
    case PresentationKind::Hybrid:
      if (rank_ < 0) throw std::invalid_argument("Presentation: hybrid form needs g >= 0");
      names_ = handle_pair_names(rank_);
      names_.push_back("c");
      break;
    case PresentationKind::KleinTail:
      if (rank_ < 0) throw std::invalid_argument("Presentation: klein-tail form needs g >= 0");
      names_ = handle_pair_names(rank_);
      names_.push_back("c");
      names_.push_back("d");
      break;
  }
}

Presentation Presentation::orientable(int g) { return Presentation(PresentationKind::Orientable, g); }
Presentation Presentation::squares(int n) { return Presentation(PresentationKind::Squares, n); }
Presentation Presentation::hybrid(int g) { return Presentation(PresentationKind::Hybrid, g); }
Presentation Presentation::klein_tail(int g) { return Presentation(PresentationKind::KleinTail, g); }

int Presentation::nonorientable_genus() const {
  switch (kind_) {
    case PresentationKind::Squares: return rank_;
    case PresentationKind::Hybrid: return 2 * rank_ + 1;
    case PresentationKind::KleinTail: return 2 * rank_ + 2;
    case PresentationKind::Orientable: break;
  }
  throw std::domain_error("nonorientable_genus: presentation is orientable");
}

std::optional<int> Presentation::generator_index(std::string_view name) const {
  for (int i = 0; i < generator_count(); ++i)
    if (names_[i] == name) return i;
  /* Single-handle / single-crosscap conveniences: "a" for "a1" etc., valid
   * only when the subscripted family has exactly one member. */
  if (name == "a" || name == "b" || name == "c") {
    const std::string one = std::string(name) + "1";
    const std::string two = std::string(name) + "2";
    bool have_two = false;
    for (const auto& n : names_) have_two = have_two || n == two;
    if (!have_two)
      for (int i = 0; i < generator_count(); ++i)
        if (names_[i] == one) return i;
  }
  return std::nullopt;
}

bool Presentation::one_sided_generator(int gen) const {
  if (gen < 0 || gen >= generator_count())
    throw std::out_of_range("one_sided_generator: no such generator");
  switch (kind_) {
    case PresentationKind::Orientable: return false;
    case PresentationKind::Squares: return true;  // every ci is a crosscap loop
    case PresentationKind::Hybrid: return gen == generator_count() - 1;  // c
    case PresentationKind::KleinTail: return gen == generator_count() - 1;  // d
  }
  return false;
}

Word Presentation::relator() const {
  std::vector<Syllable> syls;
  switch (kind_) {
    case PresentationKind::Orientable:
      syls = commutator_chain(rank_);
      break;
    case PresentationKind::Squares:
      for (int i = 0; i < rank_; ++i) syls.push_back({i, 2});
      break;
    case PresentationKind::Hybrid:
      syls = commutator_chain(rank_);
      syls.push_back({2 * rank_, 2});  // c^2
      break;
    case PresentationKind::KleinTail: {
      syls = commutator_chain(rank_);
      const int c = 2 * rank_, d = 2 * rank_ + 1;
      syls.push_back({c, 1});
      syls.push_back({d, 1});
      syls.push_back({c, 1});
      syls.push_back({d, -1});
      break;
    }
  }
  return Word::from_syllables(std::move(syls));
}

std::string Presentation::surface_name() const {
  switch (kind_) {
    case PresentationKind::Orientable: return "S" + std::to_string(rank_);
    case PresentationKind::Squares: return "N" + std::to_string(rank_) + ":squares";
    case PresentationKind::Hybrid: return "N" + std::to_string(2 * rank_ + 1) + ":hybrid";
    case PresentationKind::KleinTail: return "N" + std::to_string(2 * rank_ + 2) + ":klein";
  }
  return {};
}

Presentation Presentation::parse_surface(std::string_view text) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("surface \"" + std::string(text) + "\": " + why);
  };
  if (text.size() < 2 || (text[0] != 'S' && text[0] != 'N'))
    throw bad("expected S<g> or N<n>[:squares|:hybrid|:klein]");
  const bool orient = text[0] == 'S';
  std::string_view rest = text.substr(1);
  std::string_view suffix;
  bool has_suffix = false;
  if (auto colon = rest.find(':'); colon != std::string_view::npos) {
    has_suffix = true;
    suffix = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
  }
  if (rest.empty()) throw bad("missing genus");
  int genus = 0;
  for (char ch : rest) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad("genus must be a positive integer");
    genus = genus * 10 + (ch - '0');
    if (genus > 1000000) throw bad("genus out of range");
  }
  if (orient) {
    if (has_suffix) throw bad("orientable surfaces take no suffix");
    if (genus < 1) throw bad("orientable genus must be >= 1");
    return orientable(genus);
  }
  if (genus < 1) throw bad("non-orientable genus must be >= 1");
  if (has_suffix && suffix.empty()) throw bad("unknown suffix \"\"");
  if (suffix.empty())
    /* Default form is Squares(n); bare N3 is the special case documented
     * above (the genus-3 catalog lives in the hybrid presentation). */
    return genus == 3 ? hybrid(1) : squares(genus);
  if (suffix == "squares") return squares(genus);
  if (suffix == "hybrid") {
    if (genus % 2 == 0) throw bad("hybrid form requires odd genus (n = 2g+1)");
    return hybrid((genus - 1) / 2);
  }
  if (suffix == "klein") {
    if (genus % 2 == 1) throw bad("klein form requires even genus (n = 2g+2)");
    return klein_tail((genus - 2) / 2);
  }
  throw bad("unknown suffix \"" + std::string(suffix) + "\"");
}

}  // namespace surfrep
