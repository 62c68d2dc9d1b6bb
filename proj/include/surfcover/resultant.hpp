#ifndef SURFCOVER_RESULTANT_HPP
#define SURFCOVER_RESULTANT_HPP

// Resultants by the subresultant pseudo-remainder sequence over an integral
// domain R (Q(i), Q(i)[x], or multivariate polynomials).

#include <cstddef>
#include <utility>
#include <vector>

#include "surfcover/multipoly.hpp"

namespace surfcover {

template <class R>
struct RingOps;

template <>
struct RingOps<GR> {
  static GR one(const GR&) { return GR(1); }
  static bool is_zero(const GR& a) { return a.is_zero(); }
  static GR div(const GR& a, const GR& b) { return a / b; }
};

template <>
struct RingOps<UPoly> {
  static UPoly one(const UPoly&) { return UPoly(GR(1)); }
  static bool is_zero(const UPoly& a) { return a.is_zero(); }
  static UPoly div(const UPoly& a, const UPoly& b) { return exact_div(a, b); }
};

template <>
struct RingOps<MultiPoly> {
  static MultiPoly one(const MultiPoly& like) { return MultiPoly::constant(like.vars(), GR(1)); }
  static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
  static MultiPoly div(const MultiPoly& a, const MultiPoly& b) { return divide_exact(a, b); }
};

namespace detail {

template <class R>
void trim(std::vector<R>& p) {
  while (!p.empty() && RingOps<R>::is_zero(p.back())) p.pop_back();
}

template <class R>
long deg(const std::vector<R>& p) {
  return static_cast<long>(p.size()) - 1;
}

template <class R>
R ring_pow(const R& a, long e) {
  R r = RingOps<R>::one(a);
  for (long k = 0; k < e; ++k) r = r * a;
  return r;
}

/// lc(B)^(deg A - deg B + 1) * A mod B.
template <class R>
std::vector<R> pseudo_remainder(std::vector<R> a, const std::vector<R>& b) {
  const long db = deg(b);
  long e = deg(a) - db + 1;
  const R& lb = b.back();
  while (deg(a) >= db && !a.empty()) {
    R c = a.back();
    const long shift = deg(a) - db;
    for (auto& t : a) t = t * lb;
    for (long j = 0; j <= db; ++j) a[shift + j] = a[shift + j] - c * b[j];
    a.pop_back();
    trim(a);
    --e;
  }
  if (e > 0) {
    R f = ring_pow(lb, e);
    for (auto& t : a) t = t * f;
  }
  return a;
}

}  // namespace detail

/// Resultant of two polynomials given by coefficient vectors (low degree first).
template <class R>
R subresultant(std::vector<R> a, std::vector<R> b, const R& one) {
  using Ops = RingOps<R>;
  detail::trim(a);
  detail::trim(b);
  R zero = one - one;
  if (a.empty() || b.empty()) return zero;
  R s = one;
  if (detail::deg(a) < detail::deg(b)) {
    std::swap(a, b);
    if (detail::deg(a) % 2 == 1 && detail::deg(b) % 2 == 1) s = zero - s;
  }
  R g = one, h = one;
  while (detail::deg(b) > 0) {
    const long delta = detail::deg(a) - detail::deg(b);
    if (detail::deg(a) % 2 == 1 && detail::deg(b) % 2 == 1) s = zero - s;
    std::vector<R> r = detail::pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return zero;
    R divisor = g * detail::ring_pow(h, delta);
    for (auto& t : r) t = Ops::div(t, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = Ops::div(detail::ring_pow(g, delta), detail::ring_pow(h, delta - 1));
    }
  }
  const long da = detail::deg(a);
  R lb = b.back();
  R res = da == 0 ? one : Ops::div(detail::ring_pow(lb, da), detail::ring_pow(h, da - 1));
  return s * res;
}

/// Res_var(F, G): eliminates `var` from F and G.
inline MultiPoly resultant(const MultiPoly& F, const MultiPoly& G, const std::string& var) {
  F.check_vars(G);
  if (F.is_zero() || G.is_zero()) throw Error("resultant of a zero polynomial");
  const std::size_t k = F.var_index(var);
  const auto& vars = F.vars();
  if (vars.size() == 2) {
    UPoly r = subresultant(to_univariate_coeffs(F, k), to_univariate_coeffs(G, k), UPoly(GR(1)));
    return from_upoly(r, vars, 1 - k);
  }
  // General case: coefficients are polynomials in the remaining variables.
  auto split = [&](const MultiPoly& P) {
    std::vector<MultiPoly> c(static_cast<std::size_t>(P.degree_in(k)) + 1, MultiPoly(vars));
    for (const auto& [e, coef] : P.terms()) {
      Exponents f = e;
      f[k] = 0;
      c[e[k]].add_term(std::move(f), coef);
    }
    return c;
  };
  return subresultant(split(F), split(G), MultiPoly::constant(vars, GR(1)));
}

}  // namespace surfcover

#endif  // SURFCOVER_RESULTANT_HPP
