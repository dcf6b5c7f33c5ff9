#include "surfrep/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace surfrep {

namespace {

constexpr unsigned long kTrialBound = 100000;

bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

/* Brent's variant of Pollard rho; n must be odd, composite, and free of
 * factors below kTrialBound.  Returns a nontrivial factor. */
mpz_class brent_rho(const mpz_class& n) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x9e3779b97f4a7c15UL);
  while (true) {
    const mpz_class c = rng.get_z_range(n - 3) + 1;
    mpz_class x = rng.get_z_range(n - 2) + 1;
    mpz_class y = x, d = 1, q = 1, saved = x;
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (d == 1) {
      y = x;
      for (unsigned long i = 0; i < r; ++i) x = (x * x + c) % n;
      for (unsigned long k = 0; k < r && d == 1; k += batch) {
        saved = x;
        const unsigned long steps = std::min(batch, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          x = (x * x + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack step by step from the last checkpoint
      d = 1;
      x = saved;
      while (d == 1) {
        x = (x * x + c) % n;
        mpz_gcd(d.get_mpz_t(), mpz_class(abs(x - y)).get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
    // rare: retry with a fresh polynomial
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned long>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const mpz_class d = brent_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned long>> factor_positive(const mpz_class& n) {
  if (n < 1) throw std::domain_error("factor_positive: argument must be >= 1");
  std::map<mpz_class, unsigned long> found;
  mpz_class rest = n;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
  for (unsigned long p = 2;
       rest > 1 && p <= kTrialBound && mpz_cmp_ui(root.get_mpz_t(), p) >= 0;
       p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned long e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      found[mpz_class(static_cast<long>(p))] = e;
      mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    }
  }
  if (rest > 1) factor_into(rest, found);  // a prime, or a product of large primes
  return {found.begin(), found.end()};
}

std::map<mpz_class, long> rational_exponents(const Rational& r) {
  if (r.sign() <= 0) throw std::domain_error("rational_exponents: argument must be > 0");
  std::map<mpz_class, long> out;
  for (const auto& [p, e] : factor_positive(r.num())) out[p] += static_cast<long>(e);
  for (const auto& [p, e] : factor_positive(r.den())) out[p] -= static_cast<long>(e);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace surfrep
