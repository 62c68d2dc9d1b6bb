#ifndef SURFCOVER_MODULAR_HPP
#define SURFCOVER_MODULAR_HPP

// Rank of a Q(i)-matrix modulo a prime p = 1 mod 4, through the ring map
// Z[i] -> F_p sending i to a square root of -1. Rows are first scaled to
// Gaussian-integer entries. Minors map to minors, so the result is a lower
// bound for the rank over Q(i).

#include <cstdint>
#include <vector>

#include "surfcover/exactfield.hpp"

namespace surfcover {

struct ModularField {
  std::uint64_t p = 0;
  std::uint64_t sqrt_minus_one = 0;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
  std::uint64_t reduce(const Integer& z) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
  }

  /// First prime above 2^62 that is 1 mod 4.
  static const ModularField& standard() {
    static const ModularField f = [] {
      ModularField m;
      Integer q = Integer(1) << 62;
      for (;;) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 1) break;
      }
      m.p = q.get_ui();
      for (std::uint64_t a = 2;; ++a) {
        std::uint64_t s = m.pow(a, (m.p - 1) / 4);
        if (m.mul(s, s) == m.p - 1) {
          m.sqrt_minus_one = s;
          break;
        }
      }
      return m;
    }();
    return f;
  }
};

inline std::size_t rank_mod_prime(const ExactMatrix& m, const ModularField& F = ModularField::standard()) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer den = common_denominator(m.row(r));
    for (std::size_t c = 0; c < cols; ++c) {
      const GR& v = m(r, c);
      if (v.is_zero()) continue;
      Rational re = v.re() * den, im = v.im() * den;
      a[r][c] = F.add(F.reduce(re.get_num()), F.mul(F.reduce(im.get_num()), F.sqrt_minus_one));
    }
  }
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t r = prow; r < rows; ++r) {
      if (a[r][c] != 0) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(a[sel], a[prow]);
    std::uint64_t inv = F.inv(a[prow][c]);
    for (std::size_t r = prow + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      std::uint64_t f = F.mul(a[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) a[r][k] = F.sub(a[r][k], F.mul(f, a[prow][k]));
    }
    ++prow;
  }
  return prow;
}

}  // namespace surfcover

#endif  // SURFCOVER_MODULAR_HPP
