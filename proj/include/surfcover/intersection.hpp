#ifndef SURFCOVER_INTERSECTION_HPP
#define SURFCOVER_INTERSECTION_HPP

// Local intersection multiplicity of two plane curves by Fulton's reduction:
// translate the point to the origin, then repeatedly either peel a factor y
// off one curve or reduce the other's restriction to y = 0 modulo its own.
//
// Coefficient growth is kept in check by working modulo m^(B+1), m the
// maximal ideal at the origin and B an upper bound for the answer: if
// I(f, g) <= B then m^B lies in (f, g), so higher terms do not matter. B comes
// from R = Res_y(f, g), which lies in (f, g): I(f, g) <= I(f, R) =
// ord_x(R) * ord_y f(0, y).

#include <algorithm>
#include <string>
#include <utility>

#include "surfcover/bivariate.hpp"

namespace surfcover {

struct IntersectionNumber {
  long value = 0;
  bool infinite = false;

  static IntersectionNumber Infinite() { return {0, true}; }
  friend bool operator==(const IntersectionNumber&, const IntersectionNumber&) = default;
  std::string str() const { return infinite ? "Infinite" : std::to_string(value); }
};

namespace detail {

/// f(x, 0) as a univariate polynomial in x.
inline UPoly restrict_to_x_axis(const MultiPoly& f) {
  std::vector<GR> c;
  for (const auto& [e, coef] : f.terms()) {
    if (e[1] != 0) continue;
    if (c.size() <= static_cast<std::size_t>(e[0])) c.resize(e[0] + 1);
    c[e[0]] = coef;
  }
  return UPoly(std::move(c));
}

/// f / y, for f vanishing on y = 0.
inline MultiPoly divide_by_y(const MultiPoly& f) {
  MultiPoly r(f.vars());
  for (const auto& [e, c] : f.terms()) r.add_term({e[0], e[1] - 1}, c);
  return r;
}

inline MultiPoly truncate_above(const MultiPoly& f, long b) {
  MultiPoly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) <= b) r.add_term(e, c);
  }
  return r;
}

/// Order of vanishing at 0 of a polynomial in one variable given as a
/// bivariate polynomial; -1 for the zero polynomial.
inline long axis_order(const MultiPoly& f, std::size_t k) {
  if (f.is_zero()) return -1;
  long best = -1;
  for (const auto& [e, c] : f.terms()) {
    if (e[1 - k] != 0) continue;
    if (best < 0 || e[k] < best) best = e[k];
  }
  return best;
}

/// Upper bound for I_0(f, g), f and g through the origin with
/// Res_y(f, g) != 0 and not both vanishing on x = 0.
inline long intersection_bound(const MultiPoly& f, const MultiPoly& g, const MultiPoly& r) {
  long ord = axis_order(r, 0);
  long best = -1;
  for (const MultiPoly* h : {&f, &g}) {
    long o = axis_order(*h, 1);
    if (o > 0 && (best < 0 || o < best)) best = o;
  }
  return ord * best;
}

inline int x_order(const UPoly& p) {
  int k = 0;
  while (p.coeff(k).is_zero()) ++k;
  return k;
}

}  // namespace detail

/// I_0(f, g) for bivariate f, g in local coordinates at the origin.
inline IntersectionNumber local_intersection(MultiPoly f, MultiPoly g) {
  f.check_vars(g);
  if (f.nvars() != 2) throw VariableMismatch("local_intersection expects two variables");
  if (f.is_zero() || g.is_zero()) {
    const MultiPoly& h = f.is_zero() ? g : f;
    if (!h.is_zero() && !h.constant_term().is_zero()) return {0, false};
    return IntersectionNumber::Infinite();
  }
  if (!f.constant_term().is_zero() || !g.constant_term().is_zero()) return {0, false};
  const long cap = 4L * std::max(f.degree(), 1) * std::max(g.degree(), 1);
  MultiPoly r = resultant(f, g, f.vars()[1]);
  if (r.is_zero()) {
    // A common factor involving y; it is a unit at the origin unless it passes through it.
    MultiPoly common = gcd_bivariate(f, g);
    if (common.constant_term().is_zero()) return IntersectionNumber::Infinite();
    f = divide_exact(f, common);
    g = divide_exact(g, common);
    if (!f.constant_term().is_zero() || !g.constant_term().is_zero()) return {0, false};
    r = resultant(f, g, f.vars()[1]);
  }
  if (detail::axis_order(f, 1) < 0 && detail::axis_order(g, 1) < 0) {
    return IntersectionNumber::Infinite();  // both contain the line x = 0
  }
  long budget = detail::intersection_bound(f, g, r);
  long total = 0;
  for (long step = 0;; ++step) {
    if (step > cap) throw InternalLimit("intersection multiplicity reduction exceeded its step cap");
    f = detail::truncate_above(f, budget);
    g = detail::truncate_above(g, budget);
    if (!f.constant_term().is_zero() || !g.constant_term().is_zero()) return {total, false};
    if (f.is_zero() || g.is_zero()) throw InternalLimit("intersection multiplicity exceeded its bound");
    UPoly f0 = detail::restrict_to_x_axis(f), g0 = detail::restrict_to_x_axis(g);
    if (f0.is_zero() && g0.is_zero()) throw InternalLimit("coprime curves share the line y = 0");
    // Arrange deg f0 <= deg g0, a zero restriction counting as infinite degree.
    if (f0.is_zero() || (!g0.is_zero() && g0.degree() < f0.degree())) {
      std::swap(f, g);
      std::swap(f0, g0);
    }
    if (g0.is_zero()) {
      // g = y*h: I(f, g) = I(f, y) + I(f, h), and I(f, y) = ord_x f(x, 0).
      const int o = detail::x_order(f0);
      total += o;
      budget -= o;
      g = detail::divide_by_y(g);
      continue;
    }
    // I(f, g) = I(f, g - q*f); taking q = g0 div f0 drops deg g(x, 0) below deg f(x, 0).
    auto [q, r] = divmod(g0, f0);
    (void)r;
    g = g - from_upoly(q, f.vars(), 0) * f;
  }
}

/// I_p(F, G). Projective inputs use p's standard chart; bivariate inputs are
/// read as the chart z = 1, so p must have z != 0.
inline IntersectionNumber intersection_multiplicity(const MultiPoly& F, const MultiPoly& G, const PlanePoint& p) {
  F.check_vars(G);
  if (F.nvars() == 3) return local_intersection(local_at(F, p), local_at(G, p));
  if (F.nvars() != 2) throw VariableMismatch("intersection_multiplicity expects two or three variables");
  if (p[2].is_zero()) throw Error("affine curves only see points with z != 0");
  GR a = p[0] / p[2], b = p[1] / p[2];
  const auto& v = F.vars();
  std::vector<MultiPoly> shift{MultiPoly::variable(v, 0) + MultiPoly::constant(v, a),
                               MultiPoly::variable(v, 1) + MultiPoly::constant(v, b)};
  return local_intersection(F.substitute(shift), G.substitute(shift));
}

}  // namespace surfcover

#endif  // SURFCOVER_INTERSECTION_HPP
