#include "surfrep/scc.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace surfrep {

namespace {

constexpr int kGenA = 0, kGenB = 1, kGenC = 2;

Word commutator_prefix(int g0) {
  std::vector<Syllable> syls;
  for (int i = 0; i < g0; ++i) {
    const int a = 2 * i, b = 2 * i + 1;
    syls.insert(syls.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  }
  return Word::from_syllables(std::move(syls));
}

long long c_exponent_sum(const Word& w) {
  long long sum = 0;
  for (const auto& s : w.syllables())
    if (s.gen == kGenC) sum += s.exp;
  return sum;
}

/* Keeps catalog entries unique up to conjugacy while preserving the
 * first-seen word form and emission order. */
class CatalogBuilder {
public:
  bool add(SccClass cls) {
    cls.one_sided = c_exponent_sum(cls.word) % 2 != 0;
    auto [it, fresh] = seen_.emplace(cls.word.canonical_rotation(), entries_.size());
    if (!fresh) return false;
    entries_.push_back(std::move(cls));
    return true;
  }
  std::vector<SccClass>& entries() { return entries_; }

private:
  std::map<Word, size_t> seen_;
  std::vector<SccClass> entries_;
};

}  // namespace

std::vector<long long> christoffel_exponents(int k, int l) {
  if (k < 1 || l < 1)
    throw std::domain_error("christoffel_exponents: k and l must be positive");
  if (std::gcd(k, l) != 1)
    throw std::domain_error("christoffel_exponents: slope " + std::to_string(k) + "," +
                            std::to_string(l) + " is not coprime; only coprime slopes are simple");
  std::vector<long long> exps(k);
  for (int i = 1; i <= k; ++i) {
    const long long li = static_cast<long long>(i) * l;
    exps[i - 1] = li / k - (li - l) / k;
  }
  return exps;
}

Word christoffel_word(int k, int l) {
  std::vector<Syllable> syls;
  for (long long n : christoffel_exponents(k, l)) {
    if (n != 0) syls.push_back({kGenA, n});
    syls.push_back({kGenB, 1});
  }
  return Word::from_syllables(std::move(syls));
}

Word apply_torus_symmetry(const Word& w, bool swap_ab, int a_sign, int b_sign) {
  if ((a_sign != 1 && a_sign != -1) || (b_sign != 1 && b_sign != -1))
    throw std::invalid_argument("apply_torus_symmetry: signs must be +-1");
  std::vector<Syllable> syls;
  for (const auto& s : w.syllables()) {
    Syllable t = s;
    if (s.gen == kGenA) {
      t.gen = swap_ab ? kGenB : kGenA;
      t.exp = a_sign * s.exp;
    } else if (s.gen == kGenB) {
      t.gen = swap_ab ? kGenA : kGenB;
      t.exp = b_sign * s.exp;
    }
    syls.push_back(t);
  }
  return Word::from_syllables(std::move(syls));
}

std::vector<SccClass> curve_representatives(const Presentation& pres) {
  std::vector<SccClass> out;
  const int rank = pres.rank();
  switch (pres.kind()) {
    case PresentationKind::Orientable:
      out.push_back({"nonseparating", Word::generator(0), false, 0, 0, 0, 0});
      for (int g0 = 1; g0 < rank; ++g0)
        out.push_back({"separating", commutator_prefix(g0), false, 0, 0, g0, 0});
      break;
    case PresentationKind::Squares: {
      out.push_back({"crosscap", Word::generator(0), true, 0, 0, 0, 0});
      for (int n0 = 1; n0 < rank; ++n0) {
        std::vector<Syllable> syls;
        for (int i = 0; i < n0; ++i) syls.push_back({i, 2});
        out.push_back({"prefix-squares", Word::from_syllables(std::move(syls)),
                       false, 0, 0, n0, 0});
      }
      break;
    }
    case PresentationKind::Hybrid: {
      const int c = 2 * rank;
      out.push_back({"crosscap", Word::generator(c), true, 0, 0, 0, 0});
      if (rank >= 1) out.push_back({"nonseparating", Word::generator(0), false, 0, 0, 0, 0});
      for (int g0 = 1; g0 <= rank; ++g0)
        out.push_back({"separating", commutator_prefix(g0), false, 0, 0, g0, 0});
      break;
    }
    case PresentationKind::KleinTail: {
      const int c = 2 * rank;
      if (rank >= 1) out.push_back({"nonseparating", Word::generator(0), false, 0, 0, 0, 0});
      out.push_back({"nonseparating", Word::generator(c), false, 0, 0, 0, 0});
      for (int g0 = 1; g0 <= rank; ++g0)
        out.push_back({"separating", commutator_prefix(g0), false, 0, 0, g0, 0});
      break;
    }
  }
  return out;
}

std::vector<SccClass> genus3_catalog(int max_k, int max_n, bool include_squares) {
  if (max_k < 1 || max_n < 1)
    throw std::invalid_argument("genus3_catalog: bounds must be >= 1");

  CatalogBuilder builder;
  const std::vector<long long> eps_values = {1, -1, 2, -2};

  for (long long e : {1LL, -1LL})
    builder.add({"base", Word::generator(kGenA, e), false, 0, 0, 0, 0});
  for (long long e : {1LL, -1LL})
    builder.add({"base", Word::generator(kGenB, e), false, 0, 0, 0, 0});
  for (long long e : eps_values)
    builder.add({"base", Word::generator(kGenC, e), false, 0, 0, 0, static_cast<int>(e)});

  /* Torus words: all coprime slopes with k <= max_k and floor(l/k) <= max_n,
   * closed under the eight symmetries.  Each stored entry keeps the word
   * form produced by its symmetry (the cutting-sequence ordering matters:
   * rotating a representative changes which wc^eps products arise below). */
  std::vector<SccClass> torus_entries;
  for (int k = 1; k <= max_k; ++k) {
    const int l_max = k * (max_n + 1) - 1;
    for (int l = 1; l <= l_max; ++l) {
      if (std::gcd(k, l) != 1) continue;
      const Word base = christoffel_word(k, l);
      for (bool swap_ab : {false, true})
        for (int a_sign : {1, -1})
          for (int b_sign : {1, -1}) {
            SccClass cls{"torus", apply_torus_symmetry(base, swap_ab, a_sign, b_sign),
                         false, k, l, 0, 0};
            if (builder.add(cls)) torus_entries.push_back(cls);
          }
    }
  }

  for (long long e : eps_values) {
    const Word ac = Word::generator(kGenA) * Word::generator(kGenC);
    builder.add({"ac", ac.pow(e), false, 0, 0, 0, static_cast<int>(e)});
  }
  for (long long e : eps_values) {
    const Word binv_c = Word::generator(kGenB, -1) * Word::generator(kGenC);
    builder.add({"b-inv-c", binv_c.pow(e), false, 0, 0, 0, static_cast<int>(e)});
  }

  for (const auto& torus : torus_entries)
    for (long long e : eps_values)
      builder.add({"torus-c", torus.word * Word::generator(kGenC, e),
                   false, torus.k, torus.l, 0, static_cast<int>(e)});

  if (include_squares) {
    /* Squares of one-sided curves bound Mobius-band neighborhoods; squaring
     * the word realizes the boundary curve. */
    const std::vector<SccClass> snapshot = builder.entries();
    for (const auto& cls : snapshot)
      if (cls.one_sided)
        builder.add({"square", cls.word.pow(2), false, cls.k, cls.l, 0, cls.eps});
  }

  return builder.entries();
}

}  // namespace surfrep
