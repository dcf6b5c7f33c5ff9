#include "surfrep/repspace.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace surfrep {

namespace {

/* Handle-block accessors: block i of a U/VH/VK point occupies coordinates
 * 4i..4i+3 as (x_i, y_i, z_i, w_i). */
const Rational& bx(const RepPoint& pt, int i) { return pt.coords[4 * i + 0]; }
const Rational& by(const RepPoint& pt, int i) { return pt.coords[4 * i + 1]; }
const Rational& bz(const RepPoint& pt, int i) { return pt.coords[4 * i + 2]; }
const Rational& bw(const RepPoint& pt, int i) { return pt.coords[4 * i + 3]; }

Rational block_p(const RepPoint& pt, int i) {
  return commutator_entry(bx(pt, i), by(pt, i), bz(pt, i), bw(pt, i));
}

Rational prefix_p_sum(const RepPoint& pt, int count) {
  Rational sum(0);
  for (int i = 0; i < count; ++i) sum += block_p(pt, i);
  return sum;
}

int handle_count(const Space& space) {
  switch (space.kind) {
    case SpaceKind::U: return space.rank;
    case SpaceKind::VH: return space.rank;
    case SpaceKind::VK: return space.rank;
    case SpaceKind::V: return 0;
  }
  return 0;
}

void require_space(const RepPoint& pt, SpaceKind kind, const char* who) {
  if (pt.space.kind != kind)
    throw std::domain_error(std::string(who) + ": wrong space " + pt.space.name());
}

void require_member(const RepPoint& pt, const char* who) {
  const MembershipResult m = membership(pt);
  if (!m.ok)
    throw std::domain_error(std::string(who) + ": input fails membership (" + m.constraint +
                            ", residual " + m.residual.str() + ")");
}

void require_nonneg_eps(const Rational& eps, const char* who) {
  if (eps.sign() < 0)
    throw std::domain_error(std::string(who) + ": epsilon must be >= 0");
}

std::vector<SquareCoords> square_coords_of(const RepPoint& pt) {
  std::vector<SquareCoords> st;
  const int n = pt.space.rank;
  st.reserve(n);
  for (int i = 0; i < n; ++i)
    st.push_back(to_square_coords(pt.coords[2 * i], pt.coords[2 * i + 1]));
  return st;
}

/* Solve q_n = 0 for the last t: the coefficient of t_n is s_1...s_{n-1},
 * positive on the variety, so the solve is always possible. */
Rational solve_last_t(std::vector<SquareCoords> st) {
  const size_t n = st.size();
  st[n - 1].t = Rational(0);
  Rational partial = squares_product_entry(st);
  Rational coeff(1);
  for (size_t i = 0; i + 1 < n; ++i) coeff *= st[i].s;
  return -partial / coeff;
}

/* Shared prefix-witness move for perturb_separating and the hybrid/klein
 * commutator moves: changes one block's p by delta using w_i when
 * x_i != 1, else y_i when z_i != 1.  Returns false when the whole range
 * is witness-free (every block has x_i = z_i = 1). */
bool apply_block_move(RepPoint& pt, int lo, int hi, const Rational& delta) {
  for (int i = lo; i < hi; ++i) {
    if (bx(pt, i) != Rational(1)) {
      // p is linear in w with coefficient -z(1-x^2)
      pt.coords[4 * i + 3] += -delta / (bz(pt, i) * (Rational(1) - bx(pt, i) * bx(pt, i)));
      return true;
    }
  }
  for (int i = lo; i < hi; ++i) {
    if (bz(pt, i) != Rational(1)) {
      // p is linear in y with coefficient x(1-z^2)
      pt.coords[4 * i + 1] += delta / (bx(pt, i) * (Rational(1) - bz(pt, i) * bz(pt, i)));
      return true;
    }
  }
  return false;
}

}  // namespace

Rational sample_signed_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 21) - 10;  // -10..10
  const long den = static_cast<long>(rng() % 10) + 1;   // 1..10
  return Rational(num, den);
}

Rational sample_positive_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 10) + 1;  // 1..10
  const long den = static_cast<long>(rng() % 10) + 1;
  return Rational(num, den);
}

int Space::coord_count() const {
  switch (kind) {
    case SpaceKind::U: return 4 * rank;
    case SpaceKind::V: return 2 * rank;
    case SpaceKind::VH: return 4 * rank + 2;
    case SpaceKind::VK: return 4 * rank + 4;
  }
  return 0;
}

std::string Space::name() const {
  const char* tag = "";
  switch (kind) {
    case SpaceKind::U: tag = "U"; break;
    case SpaceKind::V: tag = "V"; break;
    case SpaceKind::VH: tag = "VH"; break;
    case SpaceKind::VK: tag = "VK"; break;
  }
  return std::string(tag) + ":" + std::to_string(rank);
}

Space Space::parse(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("space \"" + std::string(text) +
                                 "\": expected U:<g>, V:<n>, VH:<g> or VK:<g>");
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw bad();
  const std::string_view tag = text.substr(0, colon);
  const std::string_view num = text.substr(colon + 1);
  if (num.empty() || num.size() > 6) throw bad();
  int rank = 0;
  for (char ch : num) {
    if (ch < '0' || ch > '9') throw bad();
    rank = rank * 10 + (ch - '0');
  }
  Space space;
  if (tag == "U") space.kind = SpaceKind::U;
  else if (tag == "V") space.kind = SpaceKind::V;
  else if (tag == "VH") space.kind = SpaceKind::VH;
  else if (tag == "VK") space.kind = SpaceKind::VK;
  else throw bad();
  space.rank = rank;
  const int min_rank = (space.kind == SpaceKind::U || space.kind == SpaceKind::V) ? 1 : 0;
  if (rank < min_rank) throw bad();
  return space;
}

Presentation Space::presentation() const {
  switch (kind) {
    case SpaceKind::U: return Presentation::orientable(rank);
    case SpaceKind::V: return Presentation::squares(rank);
    case SpaceKind::VH: return Presentation::hybrid(rank);
    case SpaceKind::VK: return Presentation::klein_tail(rank);
  }
  throw std::logic_error("Space::presentation: bad kind");
}

MembershipResult membership(const RepPoint& pt) {
  if (static_cast<int>(pt.coords.size()) != pt.space.coord_count())
    throw std::invalid_argument("membership: space " + pt.space.name() + " needs " +
                                std::to_string(pt.space.coord_count()) + " coordinates, got " +
                                std::to_string(pt.coords.size()));

  auto violation = [](std::string constraint, Rational residual) {
    return MembershipResult{false, std::move(constraint), std::move(residual)};
  };
  auto positive = [&](const Rational& v, const std::string& name) {
    return v.sign() > 0 ? MembershipResult{true, {}, {}} : violation(name + " > 0", v);
  };

  const int g = handle_count(pt.space);
  for (int i = 0; i < g; ++i) {
    const std::string suffix = std::to_string(i + 1);
    if (auto r = positive(bx(pt, i), "x" + suffix); !r.ok) return r;
    if (auto r = positive(bz(pt, i), "z" + suffix); !r.ok) return r;
  }

  switch (pt.space.kind) {
    case SpaceKind::U: {
      const Rational sum = prefix_p_sum(pt, g);
      if (!sum.is_zero()) return violation("sum p = 0", sum);
      break;
    }
    case SpaceKind::V: {
      const int n = pt.space.rank;
      for (int i = 0; i < n; ++i)
        if (auto r = positive(pt.coords[2 * i], "x" + std::to_string(i + 1)); !r.ok) return r;
      const auto st = square_coords_of(pt);
      Rational prod(1);
      for (const auto& block : st) prod *= block.s;
      if (prod != Rational(1)) return violation("s1...sn = 1", prod - Rational(1));
      const Rational q = squares_product_entry(st);
      if (!q.is_zero()) return violation("q = 0", q);
      break;
    }
    case SpaceKind::VH: {
      const Rational& x = pt.coords[4 * g];
      const Rational& y = pt.coords[4 * g + 1];
      if (x != Rational(1)) return violation("x = 1", x - Rational(1));
      const Rational res = prefix_p_sum(pt, g) + Rational(2) * y;
      if (!res.is_zero()) return violation("sum p + 2y = 0", res);
      break;
    }
    case SpaceKind::VK: {
      const Rational& x = pt.coords[4 * g];
      const Rational& y = pt.coords[4 * g + 1];
      const Rational& z = pt.coords[4 * g + 2];
      const Rational& w = pt.coords[4 * g + 3];
      (void)w;
      if (auto r = positive(z, "z" + std::to_string(g + 1)); !r.ok) return r;
      if (x != Rational(1)) return violation("x" + std::to_string(g + 1) + " = 1", x - Rational(1));
      const Rational res = prefix_p_sum(pt, g) + y * (z * z + Rational(1));
      if (!res.is_zero()) return violation("sum p + y(z^2+1) = 0", res);
      break;
    }
  }
  return MembershipResult{true, {}, {}};
}

GenAssignment rep_of(const RepPoint& pt) {
  const MembershipResult m = membership(pt);
  if (!m.ok)
    throw std::domain_error("rep_of: point is not on " + pt.space.name() + " (" + m.constraint +
                            ", residual " + m.residual.str() + ")");
  std::vector<UTMat> images;
  const int g = handle_count(pt.space);
  for (int i = 0; i < g; ++i) {
    images.emplace_back(bx(pt, i), by(pt, i));
    images.emplace_back(bz(pt, i), bw(pt, i));
  }
  switch (pt.space.kind) {
    case SpaceKind::U:
      break;
    case SpaceKind::V:
      images.clear();
      for (int i = 0; i < pt.space.rank; ++i)
        images.emplace_back(pt.coords[2 * i], pt.coords[2 * i + 1]);
      break;
    case SpaceKind::VH:
      images.emplace_back(pt.coords[4 * g], pt.coords[4 * g + 1]);
      break;
    case SpaceKind::VK:
      images.emplace_back(pt.coords[4 * g], pt.coords[4 * g + 1]);
      images.emplace_back(pt.coords[4 * g + 2], pt.coords[4 * g + 3]);
      break;
  }
  return GenAssignment(pt.space.presentation(), std::move(images));
}

RepPoint sample_point(const Space& space, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  RepPoint pt{space, {}};
  pt.coords.assign(space.coord_count(), Rational(0));
  const int g = handle_count(space);

  switch (space.kind) {
    case SpaceKind::U: {
      /* Free draws in layout order, except y_g (the closing coordinate)
       * and z_g, which is redrawn until != 1 so the solve is possible. */
      for (int i = 0; i < g; ++i) {
        pt.coords[4 * i + 0] = sample_positive_rational(rng);
        if (i + 1 < g) pt.coords[4 * i + 1] = sample_signed_rational(rng);
        Rational z = sample_positive_rational(rng);
        if (i + 1 == g)
          while (z == Rational(1)) z = sample_positive_rational(rng);
        pt.coords[4 * i + 2] = z;
        pt.coords[4 * i + 3] = sample_signed_rational(rng);
      }
      const Rational want = -prefix_p_sum(pt, g - 1);  // required p of the last block
      const Rational &x = bx(pt, g - 1), &z = bz(pt, g - 1), &w = bw(pt, g - 1);
      pt.coords[4 * (g - 1) + 1] =
          (want + z * w * (Rational(1) - x * x)) / (x * (Rational(1) - z * z));
      break;
    }
    case SpaceKind::V: {
      const int n = space.rank;
      Rational prod(1);
      for (int i = 0; i + 1 < n; ++i) {
        pt.coords[2 * i] = sample_positive_rational(rng);
        pt.coords[2 * i + 1] = sample_signed_rational(rng);
        prod *= pt.coords[2 * i];
      }
      pt.coords[2 * (n - 1)] = prod.inverse();  // forces s_1...s_n = 1
      auto st = square_coords_of(pt);
      const Rational tn = solve_last_t(st);
      const Rational& xn = pt.coords[2 * (n - 1)];
      pt.coords[2 * n - 1] = tn / (xn + xn.inverse());
      break;
    }
    case SpaceKind::VH: {
      for (int i = 0; i < g; ++i) {
        pt.coords[4 * i + 0] = sample_positive_rational(rng);
        pt.coords[4 * i + 1] = sample_signed_rational(rng);
        pt.coords[4 * i + 2] = sample_positive_rational(rng);
        pt.coords[4 * i + 3] = sample_signed_rational(rng);
      }
      pt.coords[4 * g] = Rational(1);
      pt.coords[4 * g + 1] = -prefix_p_sum(pt, g) / Rational(2);
      break;
    }
    case SpaceKind::VK: {
      for (int i = 0; i < g; ++i) {
        pt.coords[4 * i + 0] = sample_positive_rational(rng);
        pt.coords[4 * i + 1] = sample_signed_rational(rng);
        pt.coords[4 * i + 2] = sample_positive_rational(rng);
        pt.coords[4 * i + 3] = sample_signed_rational(rng);
      }
      pt.coords[4 * g] = Rational(1);
      const Rational z = sample_positive_rational(rng);
      const Rational w = sample_signed_rational(rng);
      pt.coords[4 * g + 2] = z;
      pt.coords[4 * g + 3] = w;
      pt.coords[4 * g + 1] = -prefix_p_sum(pt, g) / (z * z + Rational(1));
      break;
    }
  }
  return pt;
}

RepPoint perturb_kill_a1(const RepPoint& pt, const Rational& eps) {
  require_space(pt, SpaceKind::U, "perturb_kill_a1");
  require_member(pt, "perturb_kill_a1");
  require_nonneg_eps(eps, "perturb_kill_a1");
  if (bx(pt, 0) != Rational(1) || !by(pt, 0).is_zero())
    throw std::domain_error("perturb_kill_a1: point must satisfy (x1, y1) = (1, 0)");

  RepPoint out = pt;
  if (bz(pt, 0) == Rational(1)) {
    out.coords[1] = eps;
  } else {
    const Rational &z = bz(pt, 0), &w = bw(pt, 0);
    out.coords[0] = Rational(1) + eps;
    out.coords[1] = -eps * (Rational(2) + eps) / (Rational(1) + eps) * z * w /
                    (Rational(1) - z * z);
  }
  return out;
}

RepPoint perturb_separating(const RepPoint& pt, int g0, const Rational& eps) {
  require_space(pt, SpaceKind::U, "perturb_separating");
  require_member(pt, "perturb_separating");
  require_nonneg_eps(eps, "perturb_separating");
  const int g = pt.space.rank;
  if (g0 < 1 || g0 >= g)
    throw std::domain_error("perturb_separating: need 1 <= g0 < g");
  if (!prefix_p_sum(pt, g0).is_zero())
    throw std::domain_error("perturb_separating: point does not kill the separating word "
                            "(prefix p-sum nonzero)");

  RepPoint out = pt;
  if (!apply_block_move(out, 0, g0, -eps))
    throw std::domain_error("perturb_separating: no witness (x_i != 1 or z_i != 1) in the "
                            "prefix; regularize first");
  if (!apply_block_move(out, g0, g, eps))
    throw std::domain_error("perturb_separating: no witness (x_j != 1 or z_j != 1) in the "
                            "suffix; regularize first");
  return out;
}

RepPoint perturb_kill_c1(const RepPoint& pt, const Rational& eps) {
  require_space(pt, SpaceKind::V, "perturb_kill_c1");
  require_member(pt, "perturb_kill_c1");
  require_nonneg_eps(eps, "perturb_kill_c1");
  const int n = pt.space.rank;
  if (n < 2)
    throw std::domain_error("perturb_kill_c1: n = 1 has no second block to re-solve "
                            "(projective plane excluded)");
  if (pt.coords[0] != Rational(1) || !pt.coords[1].is_zero())
    throw std::domain_error("perturb_kill_c1: point must satisfy (x1, y1) = (1, 0)");

  auto st = square_coords_of(pt);
  st[0].t = eps;
  const Rational tn = solve_last_t(st);

  RepPoint out = pt;
  out.coords[1] = eps / (pt.coords[0] + pt.coords[0].inverse());  // = eps/2 since x1 = 1
  const Rational& xn = pt.coords[2 * (n - 1)];
  out.coords[2 * n - 1] = tn / (xn + xn.inverse());
  return out;
}

PrefixSquaresResult perturb_prefix_squares(const RepPoint& pt, int n0, const Rational& eps) {
  require_space(pt, SpaceKind::V, "perturb_prefix_squares");
  require_member(pt, "perturb_prefix_squares");
  require_nonneg_eps(eps, "perturb_prefix_squares");
  const int n = pt.space.rank;
  if (n0 < 1 || n0 >= n)
    throw std::domain_error("perturb_prefix_squares: need 1 <= n0 < n");

  auto st = square_coords_of(pt);
  Rational prefix_prod(1);
  for (int i = 0; i < n0; ++i) prefix_prod *= st[i].s;
  const Rational prefix_q =
      squares_product_entry(std::span<const SquareCoords>(st.data(), n0));
  if (prefix_prod != Rational(1) || !prefix_q.is_zero())
    throw std::domain_error("perturb_prefix_squares: point does not kill c1^2...c_n0^2");

  st[0].s += eps;
  Rational mid(1);
  for (int i = 0; i + 1 < n; ++i) mid *= st[i].s;
  st[n - 1].s = mid.inverse();
  st[n - 1].t = solve_last_t(st);

  PrefixSquaresResult out;
  out.st = st;
  out.point.space = pt.space;

  const CoordsFromSquares first = from_square_coords(st[0]);
  if (first.exact) {
    /* s_2..s_{n-1} were already squares, so the new s_n is one too. */
    out.exact = true;
    out.point.coords = pt.coords;
    out.point.coords[0] = first.x;
    out.point.coords[1] = first.y;
    const CoordsFromSquares last = from_square_coords(st[n - 1]);
    out.point.coords[2 * (n - 1)] = last.x;
    out.point.coords[2 * n - 1] = last.y;
    return out;
  }

  out.approx_coords.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    const CoordsFromSquares c = from_square_coords(st[i]);
    out.approx_coords[2 * i] = c.x_approx;
    out.approx_coords[2 * i + 1] = c.y_approx;
  }
  /* Residual: V(n) constraints evaluated in doubles at the approx point. */
  double prod = 1.0, q = 0.0, prefix = 1.0;
  std::vector<double> sd(n), td(n);
  for (int i = 0; i < n; ++i) {
    const double x = out.approx_coords[2 * i], y = out.approx_coords[2 * i + 1];
    sd[i] = x * x;
    td[i] = y * (x + 1.0 / x);
    prod *= sd[i];
  }
  for (int i = 0; i < n; ++i) {
    double suffix = 1.0;
    for (int j = i + 1; j < n; ++j) suffix *= sd[j];
    q += prefix * td[i] / suffix;
    prefix *= sd[i];
  }
  out.residual = std::max(std::abs(prod - 1.0), std::abs(q));
  return out;
}

namespace {

/* Common body of the hybrid/klein commutator moves; closing_denom is the
 * linear coefficient of the crosscap coordinate in the defining
 * constraint: 2 for VH, z_{g+1}^2 + 1 for VK. */
RepPoint crosscap_commutator_move(const RepPoint& pt, int g0, const Rational& eps,
                                  int y_index, const Rational& closing_denom,
                                  const char* who) {
  require_member(pt, who);
  require_nonneg_eps(eps, who);
  const int g = pt.space.rank;
  if (g0 < 1 || g0 > g) throw std::domain_error(std::string(who) + ": need 1 <= g0 <= g");
  if (!prefix_p_sum(pt, g0).is_zero())
    throw std::domain_error(std::string(who) +
                            ": point does not kill the commutator word (prefix p-sum nonzero)");
  RepPoint out = pt;
  if (!apply_block_move(out, 0, g0, -eps))
    throw std::domain_error(std::string(who) +
                            ": no witness (x_i != 1 or z_i != 1) in the prefix; regularize first");
  out.coords[y_index] += eps / closing_denom;
  return out;
}

}  // namespace

RepPoint perturb_hybrid_commutator(const RepPoint& pt, int g0, const Rational& eps) {
  require_space(pt, SpaceKind::VH, "perturb_hybrid_commutator");
  return crosscap_commutator_move(pt, g0, eps, 4 * pt.space.rank + 1, Rational(2),
                                  "perturb_hybrid_commutator");
}

RepPoint perturb_klein_commutator(const RepPoint& pt, int g0, const Rational& eps) {
  require_space(pt, SpaceKind::VK, "perturb_klein_commutator");
  const Rational& z = pt.coords[4 * pt.space.rank + 2];
  return crosscap_commutator_move(pt, g0, eps, 4 * pt.space.rank + 1,
                                  z * z + Rational(1), "perturb_klein_commutator");
}

namespace {

RepPoint crosscap_a1_move(const RepPoint& pt, const Rational& eps, int y_index,
                          const Rational& closing_denom, const char* who) {
  require_member(pt, who);
  require_nonneg_eps(eps, who);
  if (pt.space.rank < 1) throw std::domain_error(std::string(who) + ": needs g >= 1");
  if (bx(pt, 0) != Rational(1) || !by(pt, 0).is_zero())
    throw std::domain_error(std::string(who) + ": point must satisfy (x1, y1) = (1, 0)");
  RepPoint out = pt;
  out.coords[1] = eps;
  Rational sum = commutator_entry(Rational(1), eps, bz(pt, 0), bw(pt, 0));
  for (int i = 1; i < pt.space.rank; ++i) sum += block_p(pt, i);
  out.coords[y_index] = -sum / closing_denom;
  return out;
}

}  // namespace

RepPoint perturb_hybrid_a1(const RepPoint& pt, const Rational& eps) {
  require_space(pt, SpaceKind::VH, "perturb_hybrid_a1");
  return crosscap_a1_move(pt, eps, 4 * pt.space.rank + 1, Rational(2), "perturb_hybrid_a1");
}

RepPoint perturb_klein_a1(const RepPoint& pt, const Rational& eps) {
  require_space(pt, SpaceKind::VK, "perturb_klein_a1");
  const Rational& z = pt.coords[4 * pt.space.rank + 2];
  return crosscap_a1_move(pt, eps, 4 * pt.space.rank + 1, z * z + Rational(1),
                          "perturb_klein_a1");
}

RegularizingSequence::RegularizingSequence(Rational x, Rational y, Rational z, Rational w)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), w_(std::move(w)) {
  if (x_.is_zero() || z_.is_zero())
    throw std::domain_error("RegularizingSequence: x and z must be nonzero");
  if (!commutator_entry(x_, y_, z_, w_).is_zero())
    throw std::domain_error("RegularizingSequence: input must satisfy p(x,y,z,w) = 0");
  const auto is_unit = [](const Rational& v) {
    return v == Rational(1) || v == Rational(-1);
  };
  if (!is_unit(x_) || !is_unit(z_)) {
    branch_ = Branch::Constant;
  } else if (y_.is_zero()) {
    branch_ = Branch::VaryZ;
  } else {
    branch_ = Branch::Radical;
    sigma_ = -z_.sign() * x_.sign() * y_.sign();
  }
}

RegularizingTerm RegularizingSequence::term(long long n) const {
  if (n < 1) throw std::domain_error("RegularizingSequence::term: n must be >= 1");
  /* 1 + 1/n^2: the quadratic approach keeps term 10^4 within ~1e-8 of
   * the limit point. */
  const mpz_class nz(static_cast<long>(n));
  const Rational bump = Rational(1) + Rational(mpz_class(1), nz * nz);

  RegularizingTerm t;
  auto fill_doubles = [&t] {
    if (t.exact) {
      t.xd = t.x.to_double();
      t.yd = t.y.to_double();
      t.zd = t.z.to_double();
      t.wd = t.w.to_double();
      t.p_residual = 0.0;
    }
  };

  switch (branch_) {
    case Branch::Constant:
      t.exact = true;
      t.x = x_; t.y = y_; t.z = z_; t.w = w_;
      fill_doubles();
      return t;
    case Branch::VaryZ:
      t.exact = true;
      t.x = x_; t.y = Rational(0); t.z = z_ * bump; t.w = w_;
      fill_doubles();
      return t;
    case Branch::Radical: {
      const Rational xn = x_ * bump;
      const Rational one_minus_x2 = Rational(1) - xn * xn;
      const Rational disc = w_ * w_ * one_minus_x2 * one_minus_x2 +
                            Rational(4) * xn * xn * y_ * y_;
      if (auto root = disc.exact_sqrt()) {
        t.exact = true;
        t.x = xn; t.y = y_; t.w = w_;
        t.z = (w_ * one_minus_x2 + Rational(sigma_) * *root) / (Rational(-2) * xn * y_);
        fill_doubles();
        return t;
      }
      t.exact = false;
      t.xd = xn.to_double();
      t.yd = y_.to_double();
      t.wd = w_.to_double();
      const double omx2 = 1.0 - t.xd * t.xd;
      t.zd = (t.wd * omx2 + sigma_ * std::sqrt(disc.to_double())) / (-2.0 * t.xd * t.yd);
      t.p_residual =
          std::abs(t.xd * t.yd * (1.0 - t.zd * t.zd) - t.zd * t.wd * (1.0 - t.xd * t.xd));
      return t;
    }
  }
  throw std::logic_error("RegularizingSequence::term: bad branch");
}

RepPoint torus_rep(const Rational& x, const Rational& z) {
  if (x.sign() <= 0 || z.sign() <= 0)
    throw std::domain_error("torus_rep: requires x, z > 0");
  return RepPoint{Space{SpaceKind::U, 1}, {x, Rational(0), z, Rational(0)}};
}

}  // namespace surfrep
