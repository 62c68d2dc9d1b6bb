#include "surfcover/exactfield.hpp"

#include <gtest/gtest.h>

#include <random>

#include "surfcover/roots.hpp"
#include "surfcover/upoly.hpp"

using namespace surfcover;

namespace {

GR random_gr(std::mt19937_64& rng) {
  auto small = [&] { return static_cast<long>(rng() % 13) - 6; };
  auto den = [&] { return static_cast<long>(rng() % 5) + 1; };
  return {make_rational(small(), den()), make_rational(small(), den())};
}

}  // namespace

TEST(GaussianRational, NormIdentity) {
  GR a(Rational(1), Rational(1)), b(Rational(1), Rational(-1));
  EXPECT_EQ(a * b, GR(2));
}

TEST(GaussianRational, InverseOfI) { EXPECT_EQ(GR::i().inverse(), -GR::i()); }

TEST(GaussianRational, AdditiveInverse) {
  GR a(Rational(3), Rational(2));
  EXPECT_TRUE((a + GR(Rational(-3), Rational(-2))).is_zero());
}

TEST(GaussianRational, DivisionByZeroThrows) {
  EXPECT_THROW(GR(1) / GR(0), DivisionByZero);
  EXPECT_THROW(GR().inverse(), DivisionByZero);
  EXPECT_THROW(make_rational(1, 0), DivisionByZero);
}

TEST(GaussianRational, CanonicalForm) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(GR(Rational(0)), GR());
  EXPECT_EQ(GR(Rational(420), Rational(8)).str(), "8*i+420");
  EXPECT_EQ(GR(Rational(-1), Rational(-1)).str(), "-i-1");
}

TEST(GaussianRational, FieldAxiomsProperty) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    GR a = random_gr(rng), b = random_gr(rng), c = random_gr(rng);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a.norm() == 0, a.is_zero());
    if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
  }
}

TEST(ExactMatrix, IdentityHasTrivialKernel) {
  auto m = ExactMatrix::identity(3);
  EXPECT_TRUE(kernel(m).empty());
  EXPECT_EQ(rank(m), 3U);
}

TEST(ExactMatrix, ZeroMatrixKernel) {
  ExactMatrix m(2, 3);
  EXPECT_EQ(kernel(m).size(), 3U);
  EXPECT_EQ(rank(m), 0U);
}

TEST(ExactMatrix, RepeatedRow) {
  ExactMatrix m;
  std::vector<GR> r1{GR(1), GR(2), GR(3)}, r2{GR(0), GR::i(), GR(1)};
  m.append_row(r1);
  m.append_row(r2);
  m.append_row(r1);
  EXPECT_EQ(rank(m), 2U);
}

TEST(ExactMatrix, RankNullityAndKernelProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 3 != 0) m(r, c) = random_gr(rng);
      }
    }
    // Make some rows dependent.
    if (rows >= 3) {
      for (std::size_t c = 0; c < cols; ++c) m(2, c) = m(0, c) * GR(Rational(2), Rational(1)) - m(1, c);
    }
    auto ker = kernel(m);
    EXPECT_EQ(rank(m) + ker.size(), cols);
    for (const auto& v : ker) {
      for (const GR& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
    }
  }
}

TEST(UPoly, DivisionAndGcd) {
  UPoly t = UPoly::x();
  UPoly a = (t - UPoly(2)) * (t - UPoly(GR::i())) * (t + UPoly(1));
  UPoly b = (t - UPoly(GR::i())) * (t + UPoly(5));
  EXPECT_EQ(gcd(a, b), t - UPoly(GR::i()));
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
}

TEST(UPoly, SquarefreeDecomposition) {
  UPoly t = UPoly::x();
  UPoly a = t - UPoly(1), b = t - UPoly(GR::i());
  UPoly p = t * a * a * b * b * b;
  auto parts = squarefree_decomposition(p);
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0], t);
  EXPECT_EQ(parts[1], a);
  EXPECT_EQ(parts[2], b);
  EXPECT_EQ(squarefree_part(p), t * a * b);
}

TEST(GaussianRoots, FindsRationalRootsOnly) {
  UPoly t = UPoly::x();
  GR r1(make_rational(-3, 7), make_rational(5, 2));
  UPoly p = (t - UPoly(r1)) * (t - UPoly(r1)) * (t * t - UPoly(2)) * (t + UPoly(4));
  auto res = gaussian_roots(p);
  EXPECT_FALSE(res.complete);
  ASSERT_EQ(res.roots.size(), 2U);
  EXPECT_EQ(res.roots[0], GR(-4));
  EXPECT_EQ(res.roots[1], r1);
  EXPECT_EQ(root_multiplicity(p, r1), 2);

  UPoly q = (t * t + UPoly(1)) * (t - UPoly(make_rational(1, 3)));
  auto rq = gaussian_roots(q);
  EXPECT_TRUE(rq.complete);
  EXPECT_EQ(rq.roots.size(), 3U);
}

TEST(GaussianRoots, LargeDenominators) {
  UPoly t = UPoly::x();
  GR r(make_rational(-3735459081, 20983051909), make_rational(-12184818984, 20983051909));
  UPoly p = (t - UPoly(r)) * (t * t * t - UPoly(5) * t + UPoly(GR::i())) * (t - UPoly(3));
  auto res = gaussian_roots(p);
  ASSERT_EQ(res.roots.size(), 2U);
  EXPECT_FALSE(res.complete);
  EXPECT_TRUE(res.roots[0] == r || res.roots[1] == r);
}
