#pragma once

#include "surfrep/rational.hpp"

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace surfrep {

/* Prime factorization of n >= 1 as (prime, exponent) pairs with primes
 * ascending; n = 1 gives the empty list.  Trial division by small primes
 * followed by Brent's cycle-finding rho on the remaining composite part,
 * with probabilistic primality tests to terminate.  Throws
 * std::domain_error for n < 1. */
std::vector<std::pair<mpz_class, unsigned long>> factor_positive(const mpz_class& n);

/* Exponent vector of a positive rational over its support primes:
 * r = prod p^{e_p} with e_p in Z (negative for denominator primes).
 * Throws std::domain_error unless r > 0. */
std::map<mpz_class, long> rational_exponents(const Rational& r);

}  // namespace surfrep
