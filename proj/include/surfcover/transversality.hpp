#ifndef SURFCOVER_TRANSVERSALITY_HPP
#define SURFCOVER_TRANSVERSALITY_HPP

// Certificates that plane curves meet transversally away from given points
// and that no point off those points lies on three of them.
//
// After a seeded projective change of coordinates moving (0:1:0) off every
// curve, the roots of Res_y(F, G) are the x-coordinates of the common points,
// each with multiplicity the sum of I_p over the points above it. Dividing
// out the excluded points leaves the residual eliminant. A squarefree residual
// proves every residual point transverse. Coprime residuals of (a, b) and
// (a, c) prove that no residual point of a and b lies on c.

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfcover/errors.hpp"
#include "surfcover/intersection.hpp"
#include "surfcover/points.hpp"
#include "surfcover/resultant.hpp"

namespace surfcover {

struct PlaneSupport {
  std::string name;
  int group = 0;  // curves of one group are not compared with each other
  MultiPoly curve;
};

struct ContactPoint {
  PlanePoint point;
  long multiplicity = 0;
};

struct PairCertificate {
  std::string a, b;
  long bezout = 0;
  long at_excluded = 0;
  long residual = 0;
  bool transverse = false;
  std::vector<ContactPoint> rational_points;  // residual points in Q(i) with their I_p

  nlohmann::json to_json() const {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& c : rational_points) pts.push_back({{"point", c.point.str()}, {"I", c.multiplicity}});
    return {{"pair", a + " x " + b}, {"bezout", bezout},     {"at_excluded", at_excluded},
            {"residual", residual},  {"transverse", transverse}, {"rational_residual_points", pts}};
  }
};

struct TransversalityReport {
  std::vector<PairCertificate> pairs;
  bool no_triple_points = true;
  int attempts = 0;

  bool certified() const {
    if (!no_triple_points) return false;
    for (const auto& p : pairs) {
      if (!p.transverse) return false;
    }
    return true;
  }
  long residual_total() const {
    long n = 0;
    for (const auto& p : pairs) n += p.residual;
    return n;
  }
  nlohmann::json to_json() const {
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : pairs) ps.push_back(p.to_json());
    return {{"certified", certified()}, {"no_triple_points", no_triple_points}, {"attempts", attempts}, {"pairs", ps}};
  }
};

inline constexpr int kCertificateAttempts = 6;

namespace detail {

using Matrix3 = std::array<std::array<GR, 3>, 3>;

inline GR det3(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Inverse up to the scalar det, which is all a projective point needs.
inline Matrix3 adjugate3(const Matrix3& m) {
  Matrix3 a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return a;
}

/// F(M v) as a form in the new coordinates.
inline MultiPoly change_coordinates(const MultiPoly& F, const Matrix3& m) {
  const auto& v = projective_vars();
  std::vector<MultiPoly> images;
  for (int i = 0; i < 3; ++i) {
    MultiPoly row(v);
    for (int j = 0; j < 3; ++j) row += MultiPoly::variable(v, j) * MultiPoly::constant(v, m[i][j]);
    images.push_back(row);
  }
  return F.substitute(images);
}

inline PlanePoint apply3(const Matrix3& m, const PlanePoint& p) {
  std::array<GR, 3> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * p[j];
  }
  return {out[0], out[1], out[2]};
}

inline bool nonconstant(const UPoly& p) { return p.degree() > 0; }

struct AttemptResult {
  bool valid = false;  // the projection was generic enough
  std::vector<PairCertificate> pairs;
  std::vector<UPoly> residuals;
  bool no_triple_points = true;
};

inline AttemptResult certificate_attempt(const std::vector<PlaneSupport>& curves, const std::vector<PlanePoint>& excluded,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                         std::mt19937_64& rng) {
  AttemptResult out;
  std::uniform_int_distribution<int> entry(-4, 4);
  Matrix3 m;
  for (auto& row : m) {
    for (auto& e : row) e = GR(entry(rng));
  }
  if (det3(m).is_zero()) return out;
  const Matrix3 inv = adjugate3(m);
  const PlanePoint pole(m[0][1], m[1][1], m[2][1]);  // the image of (0:1:0)
  std::vector<MultiPoly> local;
  for (const auto& c : curves) {
    if (on_curve(c.curve, pole)) return out;
    local.push_back(dehomogenize(change_coordinates(c.curve, m), 2));
  }
  std::vector<PlanePoint> moved;
  for (const auto& p : excluded) {
    PlanePoint q = apply3(inv, p);
    if (q[2].is_zero()) return out;
    moved.push_back(q);
  }
  for (auto [i, j] : pairs) {
    const MultiPoly& F = curves[i].curve;
    const MultiPoly& G = curves[j].curve;
    PairCertificate pc;
    pc.a = curves[i].name;
    pc.b = curves[j].name;
    pc.bezout = static_cast<long>(F.degree()) * G.degree();
    UPoly r = to_upoly(resultant(local[i], local[j], "y"), 0);
    if (r.is_zero()) throw Error("transversality: " + pc.a + " and " + pc.b + " share a component");
    // A drop in degree means a common point on the line at infinity of the new chart.
    if (r.degree() != pc.bezout) return out;
    for (std::size_t k = 0; k < excluded.size(); ++k) {
      if (!on_curve(F, excluded[k]) || !on_curve(G, excluded[k])) continue;
      IntersectionNumber I = intersection_multiplicity(F, G, excluded[k]);
      if (I.infinite) throw Error("transversality: " + pc.a + " and " + pc.b + " share a component");
      pc.at_excluded += I.value;
      const GR x = moved[k][0] / moved[k][2];
      const UPoly factor(std::vector<GR>{-x, GR(1)});
      for (long e = 0; e < I.value; ++e) {
        auto [q, rem] = divmod(r, factor);
        if (!rem.is_zero()) throw Error("transversality: excluded point multiplicity does not divide the eliminant");
        r = q;
      }
    }
    pc.residual = pc.bezout - pc.at_excluded;
    pc.transverse = !nonconstant(gcd(r, r.derivative()));
    out.pairs.push_back(std::move(pc));
    out.residuals.push_back(r);
  }
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    for (std::size_t t = s + 1; t < pairs.size(); ++t) {
      const auto [a, b] = pairs[s];
      const auto [c, d] = pairs[t];
      // The four indices span three groups exactly when the pairs share a curve
      // and the other two lie in different groups.
      std::size_t shared = a == c || a == d ? a : (b == c || b == d ? b : curves.size());
      if (shared == curves.size()) continue;
      const std::size_t u = shared == a ? b : a, w = shared == c ? d : c;
      if (curves[u].group == curves[w].group) continue;
      if (nonconstant(gcd(out.residuals[s], out.residuals[t]))) out.no_triple_points = false;
    }
  }
  out.valid = true;
  return out;
}

}  // namespace detail

/// Certifies that the curves meet transversally away from the excluded points
/// and that no point off them lies on curves from three groups.
inline TransversalityReport transversality_certificate(const std::vector<PlaneSupport>& curves,
                                                       const std::vector<PlanePoint>& excluded, unsigned long seed = 0) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].curve.nvars() != 3) throw VariableMismatch("transversality expects plane curves in x, y, z");
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (curves[i].group != curves[j].group) pairs.emplace_back(i, j);
    }
  }
  std::mt19937_64 rng(seed);
  TransversalityReport report;
  std::optional<detail::AttemptResult> last;
  for (int attempt = 0; attempt < 64 && report.attempts < kCertificateAttempts; ++attempt) {
    detail::AttemptResult r = detail::certificate_attempt(curves, excluded, pairs, rng);
    if (!r.valid) continue;
    ++report.attempts;
    // Any generic projection with a squarefree residual is a proof, so keep
    // the best verdict seen per pair.
    if (!last) {
      last = std::move(r);
    } else {
      for (std::size_t k = 0; k < pairs.size(); ++k) last->pairs[k].transverse |= r.pairs[k].transverse;
      last->no_triple_points |= r.no_triple_points;
    }
    bool done = last->no_triple_points;
    for (const auto& p : last->pairs) done = done && p.transverse;
    if (done) break;
  }
  if (!last) throw CertificateInconclusive("no generic projection found");
  report.pairs = std::move(last->pairs);
  report.no_triple_points = last->no_triple_points;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    PairCertificate& pc = report.pairs[k];
    const MultiPoly& F = curves[pairs[k].first].curve;
    const MultiPoly& G = curves[pairs[k].second].curve;
    if (pc.residual == 0) continue;
    for (const auto& p : rational_intersection_points(F, G).points) {
      bool skip = false;
      for (const auto& e : excluded) skip = skip || e == p;
      if (skip) continue;
      pc.rational_points.push_back({p, intersection_multiplicity(F, G, p).value});
    }
  }
  return report;
}

}  // namespace surfcover

#endif  // SURFCOVER_TRANSVERSALITY_HPP
