#ifndef SURFCOVER_BIVARIATE_HPP
#define SURFCOVER_BIVARIATE_HPP

// Gcd and squarefree tests for bivariate polynomials over Q(i), by the
// primitive pseudo-remainder sequence over Q(i)[x][y].

#include <cstddef>
#include <vector>

#include "surfcover/resultant.hpp"

namespace surfcover {

namespace detail {

inline UPoly content(const std::vector<UPoly>& p) {
  UPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

inline std::vector<UPoly> primitive_part(std::vector<UPoly> p) {
  trim(p);
  if (p.empty()) return p;
  UPoly c = content(p);
  for (auto& t : p) t = exact_div(t, c);
  // Normalize so the leading coefficient is monic in x.
  GR s = p.back().lead().inverse();
  for (auto& t : p) t = t * s;
  return p;
}

inline std::vector<UPoly> gcd_coeffs(std::vector<UPoly> a, std::vector<UPoly> b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) {
    std::vector<UPoly> g = a.empty() ? std::move(b) : std::move(a);
    if (g.empty()) return g;
    GR s = g.back().lead().inverse();
    for (auto& t : g) t = t * s;
    return g;
  }
  UPoly c = gcd(content(a), content(b));
  if (!subresultant(a, b, UPoly(GR(1))).is_zero()) {
    // No common factor involving the main variable: the gcd is the content gcd.
    return {c.monic()};
  }
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty() && deg(b) > 0) {
    std::vector<UPoly> r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  std::vector<UPoly> g;
  if (b.empty()) {
    g = std::move(a);
  } else {
    g = {UPoly(GR(1))};  // b is a nonzero constant in the main variable
  }
  for (auto& t : g) t = t * c;
  GR s = g.back().lead().inverse();
  for (auto& t : g) t = t * s;
  return g;
}

}  // namespace detail

/// Gcd of two bivariate polynomials, normalized to leading coefficient 1
/// (in y, then in x). gcd(0, 0) = 0.
inline MultiPoly gcd_bivariate(const MultiPoly& F, const MultiPoly& G) {
  F.check_vars(G);
  if (F.nvars() != 2) throw VariableMismatch("gcd_bivariate expects two variables");
  if (F.is_zero() && G.is_zero()) return F;
  auto g = detail::gcd_coeffs(to_univariate_coeffs(F, 1), to_univariate_coeffs(G, 1));
  return from_univariate_coeffs(g, 1, F.vars());
}

/// True iff no irreducible factor appears squared.
inline bool is_squarefree_bivariate(const MultiPoly& f) {
  if (f.is_zero()) return false;
  MultiPoly g = gcd_bivariate(f, f.derivative(0));
  g = gcd_bivariate(g, f.derivative(1));
  return g.degree() == 0;
}

/// For a homogeneous polynomial in three variables: squarefree as a plane curve.
inline bool is_squarefree_projective(const MultiPoly& F) {
  if (F.is_zero()) return false;
  if (F.nvars() == 2) return is_squarefree_bivariate(F);
  // Count the power of z dividing F; the rest is tested in the chart z = 1.
  int zpow = F.degree();
  for (const auto& [e, c] : F.terms()) zpow = std::min(zpow, e[2]);
  if (zpow >= 2) return false;
  return is_squarefree_bivariate(dehomogenize(F, 2));
}

}  // namespace surfcover

#endif  // SURFCOVER_BIVARIATE_HPP
