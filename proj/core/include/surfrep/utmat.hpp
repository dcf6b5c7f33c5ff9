#pragma once

#include "surfrep/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfrep {

/* Invertible upper-triangular 2x2 rational matrix of determinant +-1,
 *
 *     [ x  y     ]
 *     [ 0  det/x ],
 *
 * stored as the triple (x, y, det).  Text form is "x,y,det"; on input the
 * determinant may be omitted and defaults to +1, on output it is always
 * printed. */
class UTMat {
public:
  UTMat() : x_(1), y_(0), det_(1) {}
  UTMat(Rational x, Rational y, int det = +1);  // throws std::invalid_argument

  const Rational& upper_left() const { return x_; }
  const Rational& upper_right() const { return y_; }
  int det() const { return det_; }
  Rational lower_right() const { return Rational(det_) / x_; }

  UTMat inverse() const;
  UTMat pow(long long e) const;

  bool is_identity() const { return x_ == Rational(1) && y_.is_zero() && det_ == 1; }
  bool is_minus_identity() const { return x_ == Rational(-1) && y_.is_zero() && det_ == 1; }

  std::string str() const;
  static UTMat parse(std::string_view text);  // throws std::invalid_argument

  friend UTMat operator*(const UTMat& a, const UTMat& b);
  friend bool operator==(const UTMat& a, const UTMat& b) {
    return a.det_ == b.det_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

private:
  Rational x_, y_;
  int det_;
};

/* Commutator a b a^-1 b^-1, computed as the literal four-matrix product.
 * Requires det +1 on both arguments (throws std::domain_error otherwise);
 * the result is unipotent: (1, commutator_entry(...); 0, 1). */
UTMat commutator(const UTMat& a, const UTMat& b);

/* Upper-right entry of the commutator of (x, y; 0, 1/x) and (z, w; 0, 1/z):
 *
 *     p(x, y, z, w) = x y (1 - z^2) - z w (1 - x^2).                    */
Rational commutator_entry(const Rational& x, const Rational& y,
                          const Rational& z, const Rational& w);

/* Coordinates of the square of C = (x, y; 0, 1/x):
 *
 *     C^2 = (s, t; 0, 1/s)  with  s = x^2,  t = y (x + 1/x).            */
struct SquareCoords {
  Rational s, t;
  friend bool operator==(const SquareCoords&, const SquareCoords&) = default;
};

SquareCoords to_square_coords(const Rational& x, const Rational& y);  // requires x > 0

/* Inverse of to_square_coords.  x = sqrt(s) is rational exactly when s is a
 * perfect square; otherwise the conversion falls back to doubles and
 * reports |x_approx^2 - s| as the residual. */
struct CoordsFromSquares {
  bool exact = false;
  Rational x, y;                        // meaningful when exact
  double x_approx = 0.0, y_approx = 0.0;  // always filled
  double residual = 0.0;                // 0 when exact
};

CoordsFromSquares from_square_coords(const SquareCoords& sc);  // requires s > 0

/* Upper-right entry of the product C_1^2 C_2^2 ... C_n^2 where C_i^2 has
 * square coordinates (s_i, t_i):
 *
 *     q_n = sum_{i=1}^{n}  (s_1 ... s_{i-1}) t_i / (s_{i+1} ... s_n).
 *
 * Requires n >= 1 and every s_i nonzero. */
Rational squares_product_entry(std::span<const SquareCoords> blocks);

/* Closed form of C D C D^-1 for C = (x, y; 0, 1/x), D = (z, w; 0, 1/z)
 * (both determinant +1):
 *
 *     C D C D^-1 = ( x^2,  x y (z^2 + 1/x^2) + z w (1 - x^2);  0,  1/x^2 ).
 *
 * At x^2 = 1 the upper-right entry collapses to x y (z^2 + 1). */
UTMat cdcd_closed_form(const UTMat& c, const UTMat& d);

}  // namespace surfrep
