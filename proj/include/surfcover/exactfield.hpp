#ifndef SURFCOVER_EXACTFIELD_HPP
#define SURFCOVER_EXACTFIELD_HPP

// Exact arithmetic over Q and Q(i), and dense exact linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "surfcover/errors.hpp"

namespace surfcover {

/// Arbitrary-precision rational; GMP keeps it canonical (den > 0, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: integers embed implicitly
  GaussianRational(const Rational& re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(i)");
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Deterministic total order (re first, then im); not a field order.
  friend bool lex_less(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  GaussianRational pow(unsigned e) const {
    GaussianRational result(1), base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      base *= base;
      e >>= 1U;
    }
    return result;
  }

  /// Plain form: "3", "-1/2", "2*i", "8*i+420", "-i-1".
  std::string str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string s;
    if (im_ == 1) {
      s = "i";
    } else if (im_ == -1) {
      s = "-i";
    } else {
      s = im_.get_str() + "*i";
    }
    if (sgn(re_) > 0) s += "+" + re_.get_str();
    if (sgn(re_) < 0) s += re_.get_str();
    return s;
  }

  std::size_t hash() const {
    std::hash<std::string> h;
    return h(re_.get_str()) * 31U + h(im_.get_str());
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

using GR = GaussianRational;

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& a) { return os << a.str(); }

/// Least common multiple of all denominators of re and im parts.
inline Integer common_denominator(std::span<const GR> values) {
  Integer l = 1;
  for (const GR& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.im().get_den_mpz_t());
  }
  return l;
}

/// Dense matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = GR(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  GR& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GR& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const GR> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const GR> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error("append_row: column count mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  std::vector<GR> apply(std::span<const GR> v) const {
    if (v.size() != cols_) throw Error("apply: dimension mismatch");
    std::vector<GR> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      GR acc;
      for (std::size_t c = 0; c < cols_; ++c) {
        const GR& a = (*this)(r, c);
        if (!a.is_zero() && !v[c].is_zero()) acc += a * v[c];
      }
      out[r] = std::move(acc);
    }
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GR> data_;
};

/// Reduced row echelon form with its pivot columns.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The pivot for each column is the first row
/// (top to bottom) with a nonzero entry, so the result is deterministic.
inline RowEchelon row_reduce(ExactMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t r = prow; r < rows; ++r) {
      if (!m(r, c).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != prow) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(sel, k), m(prow, k));
    }
    GR inv = m(prow, c).inverse();
    for (std::size_t k = c; k < cols; ++k) {
      if (!m(prow, k).is_zero()) m(prow, k) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || m(r, c).is_zero()) continue;
      GR f = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!m(prow, k).is_zero()) m(r, k) -= f * m(prow, k);
      }
    }
    out.pivots.push_back(c);
    ++prow;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const ExactMatrix& m) { return row_reduce(m).pivots.size(); }

/// Basis of {v : M v = 0}: one vector per free column, with that column set to 1.
inline std::vector<std::vector<GR>> kernel(const ExactMatrix& m) {
  RowEchelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<GR>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GR> v(cols);
    v[free] = GR(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const GR& a = e.reduced(r, free);
      if (!a.is_zero()) v[e.pivots[r]] = -a;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace surfcover

#endif  // SURFCOVER_EXACTFIELD_HPP
