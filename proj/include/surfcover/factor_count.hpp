#ifndef SURFCOVER_FACTOR_COUNT_HPP
#define SURFCOVER_FACTOR_COUNT_HPP

// Number of absolutely irreducible factors of a plane curve, as the dimension
// of the space of pairs (g, h) with deg g <= (m-1, n), deg h <= (m, n-1) and
//
//   f*g_y - g*f_y = f*h_x - h*f_x,
//
// where (m, n) is the bidegree of f and gcd(f, f_x) = 1 (Gao's form of
// Ruppert's criterion). The system is linear over Q(i) and solved exactly.

#include <map>

#include "surfcover/bivariate.hpp"
#include "surfcover/modular.hpp"

namespace surfcover {

namespace detail {

inline std::size_t gao_kernel_dimension(const MultiPoly& f) {
  const int m = f.degree_in(0), n = f.degree_in(1);
  const auto& v = f.vars();
  const MultiPoly fx = f.derivative(0), fy = f.derivative(1);
  std::vector<MultiPoly> columns;
  for (int a = 0; a <= m - 1; ++a) {
    for (int b = 0; b <= n; ++b) {
      MultiPoly mono = MultiPoly::monomial(v, {a, b}, GR(1));
      columns.push_back(f * mono.derivative(1) - mono * fy);
    }
  }
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; b <= n - 1; ++b) {
      MultiPoly mono = MultiPoly::monomial(v, {a, b}, GR(1));
      columns.push_back(mono * fx - f * mono.derivative(0));
    }
  }
  std::map<Exponents, std::size_t> row_of;
  for (const auto& c : columns) {
    for (const auto& [e, coef] : c.terms()) row_of.emplace(e, 0);
  }
  std::size_t r = 0;
  for (auto& [e, idx] : row_of) idx = r++;
  ExactMatrix mat(row_of.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [e, coef] : columns[j].terms()) mat(row_of[e], j) = coef;
  }
  // The count is at least 1 and the rank mod p is at most the true rank, so a
  // modular kernel of dimension 1 settles the count without exact elimination.
  if (columns.size() - rank_mod_prime(mat) == 1) return 1;
  return columns.size() - rank(mat);
}

}  // namespace detail

/// Number of absolutely irreducible factors of a squarefree bivariate polynomial,
/// or of a plane curve given by a homogeneous polynomial in x, y, z.
inline std::size_t absolute_factor_count(const MultiPoly& F) {
  if (F.is_zero()) throw NotSquarefree("the zero polynomial");
  if (F.nvars() == 3) {
    if (!F.is_homogeneous()) throw VariableMismatch("plane curves are homogeneous in x, y, z");
    if (!is_squarefree_projective(F)) throw NotSquarefree("curve has a repeated component");
    int zpow = F.degree();
    for (const auto& [e, c] : F.terms()) zpow = std::min(zpow, e[2]);
    MultiPoly f = dehomogenize(F, 2);
    return static_cast<std::size_t>(zpow) + (f.degree() > 0 ? absolute_factor_count(f) : 0);
  }
  if (F.nvars() != 2) throw VariableMismatch("absolute_factor_count expects two or three variables");
  if (F.degree() <= 0) return 0;
  if (!is_squarefree_bivariate(F)) throw NotSquarefree("polynomial has a repeated factor");
  // A factor free of x divides f_x; the shear y -> y + c*x removes such factors.
  MultiPoly f = F;
  const auto& v = F.vars();
  for (long c = 0;; ++c) {
    if (c > F.degree() + 1) throw InternalLimit("no shear made gcd(f, f_x) trivial");
    MultiPoly g = c == 0 ? F
                         : F.substitute({MultiPoly::variable(v, 0),
                                         MultiPoly::variable(v, 1) + MultiPoly::variable(v, 0) * GR(c)});
    if (gcd_bivariate(g, g.derivative(0)).degree() == 0) {
      f = g;
      break;
    }
  }
  return detail::gao_kernel_dimension(f);
}

}  // namespace surfcover

#endif  // SURFCOVER_FACTOR_COUNT_HPP
