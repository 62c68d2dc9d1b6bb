#ifndef SURFCOVER_ROOTS_HPP
#define SURFCOVER_ROOTS_HPP

// Roots of univariate polynomials that lie in Q(i).
//
// Candidates come from high-precision Aberth iteration on the squarefree part
// made integral over Z[i]; a Gaussian-rational root u/v in lowest terms has v
// dividing the leading coefficient, so lc*root is a Gaussian integer and is
// recovered by rounding. Every candidate is then verified exactly.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "surfcover/upoly.hpp"

namespace surfcover {

struct GaussianRoots {
  std::vector<GR> roots;  // distinct, sorted by lex_less
  bool complete = false;  // every complex root is in Q(i)
};

namespace detail {

struct BigComplex {
  mpf_class re, im;
};

inline BigComplex cmul(const BigComplex& a, const BigComplex& b, mp_bitcnt_t prec) {
  BigComplex r{mpf_class(0, prec), mpf_class(0, prec)};
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

inline BigComplex cdiv(const BigComplex& a, const BigComplex& b, mp_bitcnt_t prec) {
  mpf_class n(b.re * b.re + b.im * b.im, prec);
  BigComplex r{mpf_class(0, prec), mpf_class(0, prec)};
  r.re = (a.re * b.re + a.im * b.im) / n;
  r.im = (a.im * b.re - a.re * b.im) / n;
  return r;
}

inline mpf_class cabs2(const BigComplex& a, mp_bitcnt_t prec) {
  return mpf_class(a.re * a.re + a.im * a.im, prec);
}

inline Integer round_nearest(const mpf_class& v) {
  mpf_class h(v + 0.5, v.get_prec());
  mpf_class f(0, v.get_prec());
  mpf_floor(f.get_mpf_t(), h.get_mpf_t());
  Integer z;
  mpz_set_f(z.get_mpz_t(), f.get_mpf_t());
  return z;
}

/// Approximate all complex roots of a squarefree polynomial with Gaussian-integer
/// coefficients (given as real/imag integer vectors, low degree first).
inline std::vector<BigComplex> aberth(const std::vector<Integer>& re, const std::vector<Integer>& im,
                                      mp_bitcnt_t prec) {
  const std::size_t n = re.size() - 1;
  std::vector<BigComplex> a(n + 1);
  for (std::size_t k = 0; k <= n; ++k) a[k] = {mpf_class(re[k], prec), mpf_class(im[k], prec)};

  // Cauchy bound 1 + max |a_k / a_n|.
  mpf_class lead_abs = sqrt(cabs2(a[n], prec));
  mpf_class bound(1, prec);
  for (std::size_t k = 0; k < n; ++k) {
    mpf_class r(sqrt(cabs2(a[k], prec)) / lead_abs, prec);
    if (r + 1 > bound) bound = r + 1;
  }
  std::vector<BigComplex> z(n);
  const double two_pi = 6.283185307179586;
  for (std::size_t k = 0; k < n; ++k) {
    double ang = two_pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    mpf_class rad(bound * (0.5 + 0.5 * static_cast<double>(k + 1) / static_cast<double>(n)), prec);
    z[k] = {mpf_class(rad * std::cos(ang), prec), mpf_class(rad * std::sin(ang), prec)};
  }

  auto eval = [&](const BigComplex& x, BigComplex& p, BigComplex& dp) {
    p = a[n];
    dp = {mpf_class(0, prec), mpf_class(0, prec)};
    for (std::size_t k = n; k-- > 0;) {
      dp = cmul(dp, x, prec);
      dp.re += p.re;
      dp.im += p.im;
      p = cmul(p, x, prec);
      p.re += a[k].re;
      p.im += a[k].im;
    }
  };

  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - prec / 8);
  const int max_iter = 400 + 20 * static_cast<int>(n);
  int settled_rounds = 0;
  for (int it = 0; it < max_iter && settled_rounds < 3; ++it) {
    bool moved = false;
    for (std::size_t k = 0; k < n; ++k) {
      BigComplex p, dp;
      eval(z[k], p, dp);
      if (cabs2(p, prec) == 0) continue;
      if (cabs2(dp, prec) == 0) dp = {mpf_class(1, prec), mpf_class(0, prec)};
      BigComplex ratio = cdiv(p, dp, prec);
      BigComplex sum{mpf_class(0, prec), mpf_class(0, prec)};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        BigComplex d{mpf_class(z[k].re - z[j].re, prec), mpf_class(z[k].im - z[j].im, prec)};
        if (cabs2(d, prec) == 0) continue;
        BigComplex inv = cdiv({mpf_class(1, prec), mpf_class(0, prec)}, d, prec);
        sum.re += inv.re;
        sum.im += inv.im;
      }
      BigComplex rs = cmul(ratio, sum, prec);
      BigComplex den{mpf_class(1 - rs.re, prec), mpf_class(-rs.im, prec)};
      BigComplex w = cdiv(ratio, den, prec);
      z[k].re -= w.re;
      z[k].im -= w.im;
      mpf_class scale(1 + cabs2(z[k], prec), prec);
      if (cabs2(w, prec) > tol * tol * scale) moved = true;
    }
    settled_rounds = moved ? 0 : settled_rounds + 1;
  }
  return z;
}

}  // namespace detail

/// All roots of p in Q(i), with a flag telling whether they exhaust the roots of p.
inline GaussianRoots gaussian_roots(const UPoly& p) {
  GaussianRoots out;
  if (p.is_zero()) throw Error("gaussian_roots of the zero polynomial");
  UPoly q = squarefree_part(p);
  if (q.degree() <= 0) {
    out.complete = true;
    return out;
  }
  // Peel off the root 0 and linear factors directly.
  if (q.coeff(0).is_zero()) {
    out.roots.push_back(GR(0));
    q = exact_div(q, UPoly::x());
  }
  if (q.degree() == 1) {
    out.roots.push_back(-q.coeff(0) / q.coeff(1));
    q = UPoly(GR(1));
  }
  if (q.degree() >= 2) {
    std::vector<GR> c = q.coeffs();
    Integer den = common_denominator(c);
    std::vector<Integer> re(c.size()), im(c.size());
    std::size_t bits = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      Rational r = c[k].re() * den, m = c[k].im() * den;
      re[k] = r.get_num();
      im[k] = m.get_num();
      bits = std::max({bits, mpz_sizeinbase(re[k].get_mpz_t(), 2), mpz_sizeinbase(im[k].get_mpz_t(), 2)});
    }
    GR lead(Rational(re.back()), Rational(im.back()));
    const std::size_t n = c.size() - 1;
    UPoly remaining = q;
    for (mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(4 * bits + 32 * n + 256); remaining.degree() > 0;
         prec *= 2) {
      std::vector<detail::BigComplex> approx = detail::aberth(re, im, prec);
      bool found_new = false;
      for (const auto& z : approx) {
        // w = lead * z, rounded to the nearest Gaussian integer.
        mpf_class wr(z.re * mpf_class(lead.re(), prec) -
                         z.im * mpf_class(lead.im(), prec),
                     prec);
        mpf_class wi(z.re * mpf_class(lead.im(), prec) + z.im * mpf_class(lead.re(), prec), prec);
        GR cand = GR(Rational(detail::round_nearest(wr)), Rational(detail::round_nearest(wi))) / lead;
        if (!remaining.eval(cand).is_zero()) continue;
        remaining = exact_div(remaining, UPoly(std::vector<GR>{-cand, GR(1)}));
        out.roots.push_back(cand);
        found_new = true;
        if (remaining.degree() <= 0) break;
      }
      // Candidates are stable under higher precision; one retry guards the numerics.
      if (!found_new || prec > static_cast<mp_bitcnt_t>(64 * (bits + 64) * (n + 1))) break;
    }
    q = remaining;
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const GR& a, const GR& b) { return lex_less(a, b); });
  out.complete = q.degree() <= 0;
  return out;
}

/// Root of multiplicity k in p: largest k with (t-r)^k | p.
inline int root_multiplicity(const UPoly& p, const GR& r) {
  if (p.is_zero()) throw Error("root_multiplicity of the zero polynomial");
  UPoly lin(std::vector<GR>{-r, GR(1)});
  int k = 0;
  UPoly cur = p;
  while (cur.degree() >= 1) {
    auto [qq, rr] = divmod(cur, lin);
    if (!rr.is_zero()) break;
    cur = std::move(qq);
    ++k;
  }
  return k;
}

}  // namespace surfcover

#endif  // SURFCOVER_ROOTS_HPP
