#ifndef SURFCOVER_UPOLY_HPP
#define SURFCOVER_UPOLY_HPP

// Dense univariate polynomials over Q(i).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "surfcover/exactfield.hpp"

namespace surfcover {

class UPoly {
 public:
  UPoly() = default;
  UPoly(GR c) {  // NOLINT: constants embed implicitly
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  UPoly(long c) : UPoly(GR(c)) {}  // NOLINT
  explicit UPoly(std::vector<GR> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly monomial(GR c, std::size_t e) {
    std::vector<GR> v(e + 1);
    v[e] = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(GR(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<GR>& coeffs() const noexcept { return coeffs_; }
  GR coeff(std::size_t e) const { return e < coeffs_.size() ? coeffs_[e] : GR(); }
  const GR& lead() const { return coeffs_.back(); }

  GR eval(const GR& t) const {
    GR acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= t;
      acc += *it;
    }
    return acc;
  }

  UPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GR> d(coeffs_.size() - 1);
    for (std::size_t e = 1; e < coeffs_.size(); ++e) d[e - 1] = coeffs_[e] * GR(static_cast<long>(e));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return {};
    GR inv = lead().inverse();
    return *this * inv;
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (GR& c : r.coeffs_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] += o.coeffs_[e];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] -= o.coeffs_[e];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GR> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return UPoly(std::move(out));
  }
  friend UPoly operator*(UPoly a, const GR& c) {
    if (c.is_zero()) return {};
    for (GR& x : a.coeffs_) x *= c;
    return a;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<GR> rem = a.coeffs_;
    std::vector<GR> quo(a.coeffs_.size() - b.coeffs_.size() + 1);
    GR inv = b.lead().inverse();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
      GR c = rem[k + db];
      if (c.is_zero()) continue;
      c *= inv;
      for (std::size_t j = 0; j <= db; ++j) {
        if (!b.coeffs_[j].is_zero()) rem[k + j] -= c * b.coeffs_[j];
      }
      quo[k] = std::move(c);
    }
    rem.resize(db);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  /// Quotient of an exact division; throws if b does not divide a.
  friend UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("exact_div: nonzero remainder");
    return q;
  }

  /// Substitute t -> t + shift.
  UPoly taylor_shift(const GR& shift) const {
    std::vector<GR> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) c[j - 1] += shift * c[j];
    }
    return UPoly(std::move(c));
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t e = coeffs_.size(); e-- > 0;) {
      const GR& c = coeffs_[e];
      if (c.is_zero()) continue;
      std::string cs = c.is_real() ? c.str() : "(" + c.str() + ")";
      if (!s.empty()) s += (cs[0] == '-') ? "" : "+";
      s += cs;
      if (e > 0) s += "*" + var + (e > 1 ? "^" + std::to_string(e) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<GR> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Product of the distinct irreducible factors (monic).
inline UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? UPoly() : UPoly(GR(1));
  UPoly g = gcd(p, p.derivative());
  return exact_div(p, g).monic();
}

/// Yun's algorithm: result[k-1] is the product of factors of multiplicity exactly k.
inline std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.degree() <= 0) return out;
  UPoly a = p.monic();
  UPoly b = a.derivative();
  UPoly c = gcd(a, b);
  UPoly w = exact_div(a, c);
  UPoly y = exact_div(b, c);
  UPoly z = y - w.derivative();
  while (w.degree() > 0) {
    UPoly g = gcd(w, z);
    out.push_back(g);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace surfcover

#endif  // SURFCOVER_UPOLY_HPP
