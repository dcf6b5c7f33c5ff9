#include "surfrep/utmat.hpp"

#include <cmath>
#include <stdexcept>

namespace surfrep {

UTMat::UTMat(Rational x, Rational y, int det)
    : x_(std::move(x)), y_(std::move(y)), det_(det) {
  if (x_.is_zero()) throw std::invalid_argument("UTMat: upper-left entry must be nonzero");
  if (det_ != 1 && det_ != -1) throw std::invalid_argument("UTMat: determinant must be +-1");
}

UTMat operator*(const UTMat& a, const UTMat& b) {
  // (x1, y1; 0, d1/x1) (x2, y2; 0, d2/x2) = (x1 x2, x1 y2 + y1 d2/x2; 0, d1 d2/(x1 x2))
  return UTMat(a.x_ * b.x_,
               a.x_ * b.y_ + a.y_ * Rational(b.det_) / b.x_,
               a.det_ * b.det_);
}

UTMat UTMat::inverse() const {
  // adj(x, y; 0, d/x) = (d/x, -y; 0, x), divided by the determinant d.
  return UTMat(x_.inverse(), -Rational(det_) * y_, det_);
}

UTMat UTMat::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  UTMat acc, base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string UTMat::str() const {
  return x_.str() + "," + y_.str() + "," + (det_ == 1 ? "1" : "-1");
}

UTMat UTMat::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) {
      parts.push_back(text.substr(pos));
      break;
    }
    parts.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  if (parts.size() != 2 && parts.size() != 3)
    throw std::invalid_argument("UTMat: expected \"x,y\" or \"x,y,det\", got \"" +
                                std::string(text) + "\"");
  Rational x = Rational::parse(parts[0]);
  Rational y = Rational::parse(parts[1]);
  int det = 1;
  if (parts.size() == 3) {
    if (parts[2] == "1") det = 1;
    else if (parts[2] == "-1") det = -1;
    else throw std::invalid_argument("UTMat: determinant must be 1 or -1, got \"" +
                                     std::string(parts[2]) + "\"");
  }
  return UTMat(std::move(x), std::move(y), det);
}

UTMat commutator(const UTMat& a, const UTMat& b) {
  if (a.det() != 1 || b.det() != 1)
    throw std::domain_error("commutator: both arguments must have determinant +1");
  return a * b * a.inverse() * b.inverse();
}

Rational commutator_entry(const Rational& x, const Rational& y,
                          const Rational& z, const Rational& w) {
  return x * y * (Rational(1) - z * z) - z * w * (Rational(1) - x * x);
}

SquareCoords to_square_coords(const Rational& x, const Rational& y) {
  if (x.sign() <= 0) throw std::domain_error("to_square_coords: requires x > 0");
  return SquareCoords{x * x, y * (x + x.inverse())};
}

CoordsFromSquares from_square_coords(const SquareCoords& sc) {
  if (sc.s.sign() <= 0) throw std::domain_error("from_square_coords: requires s > 0");
  CoordsFromSquares out;
  if (auto root = sc.s.exact_sqrt()) {
    out.exact = true;
    out.x = *root;
    out.y = sc.t / (out.x + out.x.inverse());
    out.x_approx = out.x.to_double();
    out.y_approx = out.y.to_double();
    out.residual = 0.0;
    return out;
  }
  const double s = sc.s.to_double();
  out.x_approx = std::sqrt(s);
  out.y_approx = sc.t.to_double() / (out.x_approx + 1.0 / out.x_approx);
  out.residual = std::abs(out.x_approx * out.x_approx - s);
  return out;
}

Rational squares_product_entry(std::span<const SquareCoords> blocks) {
  if (blocks.empty())
    throw std::invalid_argument("squares_product_entry: need at least one block");
  /* q_n = sum_i (prefix product of s before i) * t_i / (suffix product of s
   * after i); accumulate the suffix divisions by walking right to left. */
  Rational suffix(1);
  std::vector<Rational> t_over_suffix(blocks.size());
  for (size_t i = blocks.size(); i-- > 0;) {
    if (blocks[i].s.is_zero())
      throw std::domain_error("squares_product_entry: s coordinates must be nonzero");
    t_over_suffix[i] = blocks[i].t / suffix;
    suffix *= blocks[i].s;
  }
  Rational prefix(1), q(0);
  for (size_t i = 0; i < blocks.size(); ++i) {
    q += prefix * t_over_suffix[i];
    prefix *= blocks[i].s;
  }
  return q;
}

UTMat cdcd_closed_form(const UTMat& c, const UTMat& d) {
  if (c.det() != 1 || d.det() != 1)
    throw std::domain_error("cdcd_closed_form: both arguments must have determinant +1");
  const Rational &x = c.upper_left(), &y = c.upper_right();
  const Rational &z = d.upper_left(), &w = d.upper_right();
  const Rational x2 = x * x;
  return UTMat(x2,
               x * y * (z * z + x2.inverse()) + z * w * (Rational(1) - x2),
               +1);
}

}  // namespace surfrep
