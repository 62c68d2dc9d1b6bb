#ifndef SURFCOVER_POINTS_HPP
#define SURFCOVER_POINTS_HPP

// Q(i)-rational singular points and intersection points of plane curves.
// Affine candidates (z = 1) come from x-eliminants by resultants, then a gcd in
// y on each rational fibre; points on z = 0 from gcds of binary forms.

#include <algorithm>
#include <utility>
#include <vector>

#include "surfcover/singularity.hpp"

namespace surfcover {

struct PointSearch {
  std::vector<PlanePoint> points;
  bool complete = true;  // no common point can have coordinates outside Q(i)
};

namespace detail {

inline void add_unique(std::vector<PlanePoint>& pts, const PlanePoint& p) {
  if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p.normalized());
}

/// Common zeros with z = 1 of bivariate polynomials, given an eliminant R(x)
/// vanishing at the x-coordinate of every common zero.
inline void affine_common_zeros(const std::vector<MultiPoly>& polys, const UPoly& eliminant, PointSearch& out) {
  auto xs = gaussian_roots(eliminant);
  out.complete = out.complete && xs.complete;
  for (const GR& a : xs.roots) {
    UPoly g;
    for (const auto& f : polys) {
      const auto& v = f.vars();
      MultiPoly fibre = f.substitute({MultiPoly::constant(v, a), MultiPoly::variable(v, 1)});
      g = gcd(g, to_upoly(fibre, 1));
    }
    if (g.is_zero()) throw Error("a whole vertical line is common to all polynomials");
    if (g.degree() <= 0) continue;
    auto ys = gaussian_roots(g);
    out.complete = out.complete && ys.complete;
    for (const GR& b : ys.roots) add_unique(out.points, PlanePoint(a, b, GR(1)));
  }
}

/// Common zeros on the line z = 0 of homogeneous polynomials in x, y, z.
inline void common_zeros_at_infinity(const std::vector<MultiPoly>& polys, PointSearch& out) {
  UPoly g;
  bool all_vanish_at_x_axis_end = true;  // the point (1:0:0)
  for (const auto& F : polys) {
    MultiPoly b(F.vars());
    for (const auto& [e, c] : F.terms()) {
      if (e[2] == 0) b.add_term(e, c);
    }
    // b(t, 1, 0) as a polynomial in t.
    std::vector<GR> c;
    for (const auto& [e, coef] : b.terms()) {
      if (c.size() <= static_cast<std::size_t>(e[0])) c.resize(e[0] + 1);
      c[e[0]] = coef;
    }
    g = gcd(g, UPoly(std::move(c)));
    if (!b.eval({GR(1), GR(0), GR(0)}).is_zero()) all_vanish_at_x_axis_end = false;
  }
  if (g.is_zero()) throw Error("the line z = 0 is common to all polynomials");
  if (g.degree() > 0) {
    auto ts = gaussian_roots(g);
    out.complete = out.complete && ts.complete;
    for (const GR& t : ts.roots) add_unique(out.points, PlanePoint(t, GR(1), GR(0)));
  }
  if (all_vanish_at_x_axis_end) add_unique(out.points, PlanePoint(GR(1), GR(0), GR(0)));
}

inline UPoly x_eliminant(const MultiPoly& f, const MultiPoly& g) {
  return to_upoly(resultant(f, g, f.vars()[1]), 0);
}

}  // namespace detail

/// Rational common points of two projective plane curves without common component.
inline PointSearch rational_intersection_points(const MultiPoly& F, const MultiPoly& G) {
  F.check_vars(G);
  if (F.nvars() != 3) throw VariableMismatch("rational_intersection_points expects plane curves in x, y, z");
  PointSearch out;
  MultiPoly f = dehomogenize(F, 2), g = dehomogenize(G, 2);
  if (f.degree() > 0 && g.degree() > 0) {
    UPoly r = detail::x_eliminant(f, g);
    if (r.is_zero()) throw Error("the curves share a component");
    detail::affine_common_zeros({f, g}, r, out);
  }
  detail::common_zeros_at_infinity({F, G}, out);
  return out;
}

/// Rational singular points of a reduced projective plane curve; a bivariate
/// polynomial is read as an affine curve in the chart z = 1.
inline PointSearch rational_singular_point_set(const MultiPoly& F) {
  if (F.nvars() == 2) {
    PointSearch s = rational_singular_point_set(homogenize(F, "z"));
    std::erase_if(s.points, [](const PlanePoint& p) { return p[2].is_zero(); });
    return s;
  }
  if (F.nvars() != 3) throw VariableMismatch("rational_singular_points expects a plane curve in x, y, z");
  if (!is_squarefree_projective(F)) throw NotSquarefree("curve has a repeated component");
  PointSearch out;
  MultiPoly f = dehomogenize(F, 2);
  const MultiPoly fx = f.derivative(0), fy = f.derivative(1);
  if (f.degree_in(1) > 0) {
    // f has positive y-degree, so f_y != 0; f_x may vanish identically.
    UPoly r = detail::x_eliminant(f, fy);
    if (!fx.is_zero()) r = gcd(r, detail::x_eliminant(f, fx));
    if (r.is_zero()) throw Error("singular locus is not finite");
    detail::affine_common_zeros({f, fx, fy}, r, out);
  }
  // Without y, f is a product of distinct vertical lines, which meet only at infinity.
  detail::common_zeros_at_infinity({F.derivative(0), F.derivative(1), F.derivative(2)}, out);
  return out;
}

struct SingularPoints {
  std::vector<std::pair<PlanePoint, SingularityClass>> points;
  bool complete = true;
};

inline SingularPoints classify_points(const MultiPoly& F, const PointSearch& s) {
  SingularPoints out;
  out.complete = s.complete;
  for (const auto& p : s.points) out.points.emplace_back(p, classify_singularity(F, p));
  return out;
}

inline SingularPoints rational_singular_points(const MultiPoly& F) {
  return classify_points(F, rational_singular_point_set(F));
}

/// Singular points of the union of several curves, classified on their product:
/// the singular points of each component together with their pairwise meets.
inline SingularPoints rational_singular_points(const std::vector<MultiPoly>& components) {
  PointSearch all;
  MultiPoly product = MultiPoly::constant(projective_vars(), GR(1));
  for (std::size_t a = 0; a < components.size(); ++a) {
    product = product * components[a];
    PointSearch s = rational_singular_point_set(components[a]);
    all.complete = all.complete && s.complete;
    for (const auto& p : s.points) detail::add_unique(all.points, p);
    for (std::size_t b = a + 1; b < components.size(); ++b) {
      PointSearch m = rational_intersection_points(components[a], components[b]);
      all.complete = all.complete && m.complete;
      for (const auto& p : m.points) detail::add_unique(all.points, p);
    }
  }
  return classify_points(product, all);
}

}  // namespace surfcover

#endif  // SURFCOVER_POINTS_HPP
