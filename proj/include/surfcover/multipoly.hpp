#ifndef SURFCOVER_MULTIPOLY_HPP
#define SURFCOVER_MULTIPOLY_HPP

// Sparse multivariate polynomials over Q(i), plane points and affine charts.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcover/exactfield.hpp"
#include "surfcover/upoly.hpp"

namespace surfcover {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

/// Graded reverse lexicographic order, largest first: higher total degree
/// wins, then the smaller exponent of the last variable, then of the one before.
/// This is the order the curve listings in data/ are printed in.
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t k = a.size(); k-- > 0;) {
      if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, GR, GrevlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const GR& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> vars, std::size_t k) {
    MultiPoly p(std::move(vars));
    Exponents e(p.nvars(), 0);
    e.at(k) = 1;
    p.add_term(e, GR(1));
    return p;
  }
  static MultiPoly monomial(std::vector<std::string> vars, Exponents e, const GR& c) {
    MultiPoly p(std::move(vars));
    p.add_term(std::move(e), c);
    return p;
  }

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::size_t var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw VariableMismatch("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  /// Total degree; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

  /// Lowest total degree of a term (the multiplicity at the origin); -1 for zero.
  int order() const {
    int m = -1;
    for (const auto& [e, c] : terms_) {
      int d = total_degree(e);
      if (m < 0 || d < m) m = d;
    }
    return m;
  }

  int degree_in(std::size_t k) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) != d) return false;
    }
    return true;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree() == 0); }

  GR coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GR() : it->second;
  }
  GR constant_term() const { return coeff(Exponents(nvars(), 0)); }

  const std::pair<const Exponents, GR>& leading_term() const { return *terms_.begin(); }

  void add_term(Exponents e, const GR& c) {
    if (e.size() != vars_.size()) throw VariableMismatch("exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly r(a.vars_);
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend MultiPoly operator*(MultiPoly a, const GR& s) {
    if (s.is_zero()) return MultiPoly(a.vars_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend MultiPoly operator*(const GR& s, MultiPoly a) { return std::move(a) * s; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned n) const {
    MultiPoly r = constant(vars_, GR(1)), base = *this;
    while (n != 0) {
      if (n & 1U) r *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return r;
  }

  GR eval(const std::vector<GR>& point) const {
    if (point.size() != nvars()) throw VariableMismatch("eval: wrong number of values");
    std::vector<std::vector<GR>> powers(nvars());
    GR acc;
    for (const auto& [e, c] : terms_) {
      GR t = c;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        auto& pw = powers[k];
        if (pw.empty()) pw.push_back(GR(1));
        while (pw.size() <= static_cast<std::size_t>(e[k])) pw.push_back(pw.back() * point[k]);
        t *= pw[e[k]];
      }
      acc += t;
    }
    return acc;
  }

  MultiPoly derivative(std::size_t k) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponents f = e;
      --f[k];
      r.add_term(std::move(f), c * GR(static_cast<long>(e[k])));
    }
    return r;
  }
  MultiPoly derivative(const std::string& var) const { return derivative(var_index(var)); }

  /// Compose: replace variable k by images[k]; all images share one variable list.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars()) throw VariableMismatch("substitute: wrong number of images");
    const std::vector<std::string>& out_vars = images.at(0).vars();
    std::vector<std::vector<MultiPoly>> powers(nvars());
    MultiPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(out_vars, c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        auto& pw = powers[k];
        if (pw.empty()) pw.push_back(constant(out_vars, GR(1)));
        while (pw.size() <= static_cast<std::size_t>(e[k])) pw.push_back(pw.back() * images[k]);
        t *= pw[e[k]];
      }
      r += t;
    }
    return r;
  }

  /// Same polynomial under new variable names (same count).
  MultiPoly renamed(std::vector<std::string> names) const {
    if (names.size() != nvars()) throw VariableMismatch("renamed: wrong number of names");
    MultiPoly r(std::move(names));
    r.terms_ = terms_;
    return r;
  }

  /// Sum of the terms of total degree d.
  MultiPoly homogeneous_part(int d) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) == d) r.terms_.emplace(e, c);
    }
    return r;
  }

  /// Scale so that the leading coefficient is 1.
  MultiPoly monic() const {
    if (is_zero()) return *this;
    return *this * leading_term().second.inverse();
  }

  /// Canonical text: grevlex-descending terms, `(a*i+b)` for non-real coefficients.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[k];
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      std::string term;
      if (!c.is_real()) {
        term = "(" + c.str() + ")";
        if (!mono.empty()) term += "*" + mono;
        if (!s.empty()) term = "+" + term;
      } else {
        const Rational& q = c.re();
        Rational a = abs(q);
        if (mono.empty()) {
          term = a.get_str();
        } else if (a == 1) {
          term = mono;
        } else {
          term = a.get_str() + "*" + mono;
        }
        if (sgn(q) < 0) {
          term = "-" + term;
        } else if (!s.empty()) {
          term = "+" + term;
        }
      }
      s += term;
    }
    return s;
  }

  void check_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw VariableMismatch("polynomials over different variable lists");
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Exact quotient a / b by leading-term division; throws if b does not divide a.
inline MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero("multivariate division by zero");
  a.check_vars(b);
  MultiPoly q(a.vars()), r = a;
  const auto& [lb_e, lb_c] = b.leading_term();
  GR inv = lb_c.inverse();
  while (!r.is_zero()) {
    const auto& [lr_e, lr_c] = r.leading_term();
    Exponents e(lr_e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = lr_e[k] - lb_e[k];
      if (e[k] < 0) throw Error("divide_exact: not divisible");
    }
    MultiPoly t = MultiPoly::monomial(a.vars(), e, lr_c * inv);
    q += t;
    r -= t * b;
  }
  return q;
}

/// Point (x:y:z) of the projective plane over Q(i).
class PlanePoint {
 public:
  PlanePoint() : coords_{GR(0), GR(0), GR(1)} {}
  PlanePoint(GR x, GR y, GR z) : coords_{std::move(x), std::move(y), std::move(z)} {
    if (coords_[0].is_zero() && coords_[1].is_zero() && coords_[2].is_zero()) {
      throw Error("PlanePoint: all coordinates zero");
    }
  }
  static PlanePoint affine(GR x, GR y) { return {std::move(x), std::move(y), GR(1)}; }

  const std::array<GR, 3>& coords() const noexcept { return coords_; }
  const GR& operator[](std::size_t k) const { return coords_[k]; }

  /// Index of the dehomogenizing coordinate: z if nonzero, else y, else x.
  std::size_t chart() const {
    if (!coords_[2].is_zero()) return 2;
    if (!coords_[1].is_zero()) return 1;
    return 0;
  }

  /// Affine coordinates in the given chart (the two other coordinates, in order).
  std::array<GR, 2> affine_in(std::size_t chart) const {
    if (coords_[chart].is_zero()) throw Error("point at infinity of the requested chart");
    std::array<GR, 2> out;
    std::size_t j = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k != chart) out[j++] = coords_[k] / coords_[chart];
    }
    return out;
  }

  /// Representative with the chart coordinate scaled to 1.
  PlanePoint normalized() const {
    std::size_t c = chart();
    GR inv = coords_[c].inverse();
    return {coords_[0] * inv, coords_[1] * inv, coords_[2] * inv};
  }

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (!(a.coords_[i] * b.coords_[j] - a.coords_[j] * b.coords_[i]).is_zero()) return false;
      }
    }
    return true;
  }

  std::string str() const {
    PlanePoint n = normalized();
    return "(" + n.coords_[0].str() + ":" + n.coords_[1].str() + ":" + n.coords_[2].str() + ")";
  }

 private:
  std::array<GR, 3> coords_;
};

inline const std::vector<std::string>& projective_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}
inline const std::vector<std::string>& local_vars() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

/// Set the chart variable of a homogeneous 3-variable polynomial to 1.
inline MultiPoly dehomogenize(const MultiPoly& f, std::size_t chart) {
  if (f.nvars() != 3) throw VariableMismatch("dehomogenize expects three variables");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k != chart) names.push_back(f.vars()[k]);
  }
  MultiPoly r(names);
  for (const auto& [e, c] : f.terms()) {
    Exponents g;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k != chart) g.push_back(e[k]);
    }
    r.add_term(std::move(g), c);
  }
  return r;
}

/// Homogenize a bivariate polynomial with a new last variable to total degree d (>= degree).
inline MultiPoly homogenize(const MultiPoly& f, const std::string& var, int d = -1) {
  if (f.nvars() != 2) throw VariableMismatch("homogenize expects two variables");
  if (d < 0) d = f.degree();
  std::vector<std::string> names = f.vars();
  names.push_back(var);
  MultiPoly r(names);
  for (const auto& [e, c] : f.terms()) r.add_term({e[0], e[1], d - e[0] - e[1]}, c);
  return r;
}

/// F in local coordinates (x, y) centred at p, in the point's standard chart.
inline MultiPoly local_at(const MultiPoly& F, const PlanePoint& p) {
  if (F.nvars() != 3) throw VariableMismatch("local_at expects a plane curve in three variables");
  std::size_t chart = p.chart();
  auto a = p.affine_in(chart);
  MultiPoly f = dehomogenize(F, chart).renamed(local_vars());
  std::vector<MultiPoly> shift{MultiPoly::variable(local_vars(), 0) + MultiPoly::constant(local_vars(), a[0]),
                               MultiPoly::variable(local_vars(), 1) + MultiPoly::constant(local_vars(), a[1])};
  return f.substitute(shift);
}

/// Projective linear form whose zero set is the line through p with local
/// direction (u:v) in p's standard chart (local coordinates as in local_at).
inline MultiPoly line_through(const PlanePoint& p, const GR& u, const GR& v) {
  std::size_t chart = p.chart();
  auto a = p.affine_in(chart);
  std::array<std::size_t, 2> idx{};
  std::size_t j = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k != chart) idx[j++] = k;
  }
  // v*(X_i - a_i X_c) - u*(X_j - a_j X_c)
  std::array<GR, 3> coef{};
  coef[idx[0]] = v;
  coef[idx[1]] = -u;
  coef[chart] = -(v * a[0]) + u * a[1];
  MultiPoly L(projective_vars());
  for (std::size_t k = 0; k < 3; ++k) {
    Exponents e(3, 0);
    e[k] = 1;
    L.add_term(e, coef[k]);
  }
  return L.monic();
}

/// Line through two distinct points (normalized to leading coefficient 1).
inline MultiPoly line_through_points(const PlanePoint& p, const PlanePoint& q) {
  const auto& a = p.coords();
  const auto& b = q.coords();
  std::array<GR, 3> n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  if (n[0].is_zero() && n[1].is_zero() && n[2].is_zero()) throw Error("line_through_points: points coincide");
  MultiPoly L(projective_vars());
  for (std::size_t k = 0; k < 3; ++k) {
    Exponents e(3, 0);
    e[k] = 1;
    L.add_term(e, n[k]);
  }
  return L.monic();
}

/// Bivariate curves are read in the chart z = 1.
inline bool on_curve(const MultiPoly& F, const PlanePoint& p) {
  if (F.nvars() == 2) return !p[2].is_zero() && F.eval({p[0] / p[2], p[1] / p[2]}).is_zero();
  return F.eval({p[0], p[1], p[2]}).is_zero();
}

/// Bivariate polynomial as a polynomial in variable `main` with UPoly coefficients in the other.
inline std::vector<UPoly> to_univariate_coeffs(const MultiPoly& f, std::size_t main) {
  if (f.nvars() != 2) throw VariableMismatch("to_univariate_coeffs expects two variables");
  std::size_t other = 1 - main;
  int d = f.degree_in(main);
  std::vector<std::vector<GR>> raw(d < 0 ? 0 : static_cast<std::size_t>(d) + 1);
  for (const auto& [e, c] : f.terms()) {
    auto& slot = raw[e[main]];
    if (slot.size() <= static_cast<std::size_t>(e[other])) slot.resize(e[other] + 1);
    slot[e[other]] += c;
  }
  std::vector<UPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

inline MultiPoly from_univariate_coeffs(const std::vector<UPoly>& coeffs, std::size_t main,
                                        const std::vector<std::string>& vars) {
  MultiPoly f(vars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& c = coeffs[k].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      Exponents e(2, 0);
      e[main] = static_cast<int>(k);
      e[1 - main] = static_cast<int>(j);
      f.add_term(e, c[j]);
    }
  }
  return f;
}

/// Univariate polynomial in variable k of a polynomial that only involves that variable.
inline UPoly to_upoly(const MultiPoly& f, std::size_t k) {
  std::vector<GR> c;
  for (const auto& [e, coef] : f.terms()) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j != k && e[j] != 0) throw Error("to_upoly: polynomial involves another variable");
    }
    if (c.size() <= static_cast<std::size_t>(e[k])) c.resize(e[k] + 1);
    c[e[k]] += coef;
  }
  return UPoly(std::move(c));
}

inline MultiPoly from_upoly(const UPoly& p, const std::vector<std::string>& vars, std::size_t k) {
  MultiPoly f(vars);
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    Exponents e(vars.size(), 0);
    e[k] = static_cast<int>(j);
    f.add_term(e, p.coeffs()[j]);
  }
  return f;
}

}  // namespace surfcover

#endif  // SURFCOVER_MULTIPOLY_HPP
