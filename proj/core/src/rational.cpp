#include "surfrep/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace surfrep {

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
  };
  std::string_view numsv = text, densv;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    numsv = text.substr(0, slash);
    densv = text.substr(slash + 1);
    if (!valid_integer_token(densv, /*allow_sign=*/false)) throw bad();
  }
  if (!valid_integer_token(numsv, /*allow_sign=*/true)) throw bad();
  mpz_class num(std::string(numsv), 10);
  mpz_class den = densv.empty() ? mpz_class(1) : mpz_class(std::string(densv), 10);
  if (den == 0) throw bad();
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(num, den);
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class num = v_.get_num(), den = v_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rnum, rden;
  mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
  return Rational(rnum, rden);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace surfrep
