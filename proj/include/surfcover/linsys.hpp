#ifndef SURFCOVER_LINSYS_HPP
#define SURFCOVER_LINSYS_HPP

// Linear systems of plane curves of degree d with assigned multiplicities at
// proper and infinitely near points.
//
// Unknowns are the coefficients of a degree-d form. At an infinitely near
// point the curve is replaced by its virtual transform: the total transform
// divided by the exceptional factor to the multiplicity required at the
// parent. Under the parent's conditions the dropped terms vanish, so every
// condition stays linear in the coefficients.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfcover/picard.hpp"

namespace surfcover {

struct BaseCondition {
  PlanePoint point;
  std::vector<Direction> path;  // directions from the plane point to the center
  int multiplicity = 1;

  std::string str() const {
    std::string s = point.str();
    for (const auto& d : path) s += " -> " + d.str();
    return s + " mult " + std::to_string(multiplicity);
  }
};

/// Multiplicity m at p and at the infinitely near point along the line L.
inline std::vector<BaseCondition> tangent_cluster(const PlanePoint& p, const MultiPoly& L, int m = 2) {
  auto dirs = tangent_directions(tangent_cone_at(L, p));
  return {{p, {}, m}, {p, {dirs.rational.at(0).first}, m}};
}

/// Exponents (a, b, c) of x^a y^b z^c with a + b + c = d, in a fixed order.
inline std::vector<Exponents> form_monomials(int d) {
  std::vector<Exponents> out;
  for (int a = d; a >= 0; --a) {
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  }
  return out;
}

inline MultiPoly form_from_vector(int d, const std::vector<GR>& v) {
  auto mons = form_monomials(d);
  if (v.size() != mons.size()) throw Error("coefficient vector has the wrong length");
  MultiPoly F(projective_vars());
  for (std::size_t k = 0; k < mons.size(); ++k) F.add_term(mons[k], v[k]);
  return F;
}

namespace detail {

/// Terms of x^j (var 0) or y^j (var 1) with j >= k, divided by that power.
inline MultiPoly drop_and_divide(const MultiPoly& f, std::size_t var, int k) {
  MultiPoly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] < k) continue;
    Exponents g = e;
    g[var] -= k;
    r.add_term(std::move(g), c);
  }
  return r;
}

inline int required_multiplicity(const std::vector<BaseCondition>& conds, const PlanePoint& p,
                                 const std::vector<Direction>& path) {
  for (const auto& c : conds) {
    if (c.point == p && c.path == path) return c.multiplicity;
  }
  throw Error("a condition at an infinitely near point needs a condition at every point before it");
}

}  // namespace detail

/// Rows are the local jet coefficients of order below m at each center, as
/// linear forms in the coefficients of form_monomials(d).
inline ExactMatrix condition_matrix(int d, const std::vector<BaseCondition>& conds) {
  if (d < 0) throw Error("condition_matrix: negative degree");
  const auto mons = form_monomials(d);
  ExactMatrix M(0, mons.size());
  for (const auto& cond : conds) {
    if (cond.multiplicity < 1) throw Error("condition multiplicity must be positive");
    std::vector<MultiPoly> local;
    local.reserve(mons.size());
    for (const auto& e : mons) local.push_back(local_at(MultiPoly::monomial(projective_vars(), e, GR(1)), cond.point));
    std::vector<Direction> prefix;
    for (const auto& dir : cond.path) {
      const int v = detail::required_multiplicity(conds, cond.point, prefix);
      for (auto& g : local) g = detail::drop_and_divide(detail::blow_up_substitute(g, dir), dir.vertical ? 1 : 0, v);
      prefix.push_back(dir);
    }
    for (int a = 0; a < cond.multiplicity; ++a) {
      for (int b = 0; a + b < cond.multiplicity; ++b) {
        std::vector<GR> row(mons.size());
        for (std::size_t k = 0; k < mons.size(); ++k) row[k] = local[k].coeff({a, b});
        M.append_row(row);
      }
    }
  }
  return M;
}

struct LinearSystemResult {
  int degree = 0;
  std::vector<BaseCondition> conditions;
  ExactMatrix matrix;
  std::vector<std::vector<GR>> kernel_basis;

  long dimension() const { return static_cast<long>(kernel_basis.size()) - 1; }
  std::size_t rank() const { return form_monomials(degree).size() - kernel_basis.size(); }

  nlohmann::json to_json() const {
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : conditions) conds.push_back(c.str());
    return {{"degree", degree},
            {"conditions", conds},
            {"rows", matrix.rows()},
            {"rank", rank()},
            {"dimension", dimension()}};
  }
};

inline LinearSystemResult solve_system(int d, const std::vector<BaseCondition>& conds) {
  LinearSystemResult r;
  r.degree = d;
  r.conditions = conds;
  r.matrix = condition_matrix(d, conds);
  r.kernel_basis = kernel(r.matrix);
  return r;
}

/// Projective dimension; -1 for an empty system.
inline long system_dimension(int d, const std::vector<BaseCondition>& conds) {
  return solve_system(d, conds).dimension();
}

/// The index-th kernel basis member, scaled to leading coefficient 1.
inline MultiPoly find_member(const LinearSystemResult& r, std::size_t index = 0) {
  if (r.kernel_basis.empty()) throw EmptySystem("no curve of degree " + std::to_string(r.degree) + " satisfies the conditions");
  if (index >= r.kernel_basis.size()) throw Error("find_member: index beyond the kernel basis");
  return form_from_vector(r.degree, r.kernel_basis[index]).monic();
}

/// A seeded combination of the basis with small integer weights.
inline MultiPoly random_member(const LinearSystemResult& r, unsigned long seed) {
  if (r.kernel_basis.empty()) throw EmptySystem("no curve of degree " + std::to_string(r.degree) + " satisfies the conditions");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(-9, 9);
  std::vector<GR> v(r.kernel_basis.front().size());
  for (const auto& b : r.kernel_basis) {
    GR w(weight(rng));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += w * b[k];
  }
  MultiPoly F = form_from_vector(r.degree, v);
  if (F.is_zero()) return find_member(r);
  return F.monic();
}

/// Conditions imposed by d*T - sum m*E with all m >= 0 on a configuration.
inline std::vector<BaseCondition> conditions_from_class(const DivisorClass& a) {
  const BlowupConfiguration& cfg = *a.config();
  std::vector<BaseCondition> out;
  std::vector<BaseCondition> chain(cfg.size());
  for (int k = 0; k < cfg.size(); ++k) {
    const Center& c = cfg.center(k);
    if (c.point) {
      chain[k] = {*c.point, {}, 0};
    } else {
      chain[k] = chain[c.parent];
      chain[k].path.push_back(c.direction);
    }
    chain[k].multiplicity = static_cast<int>(a.mult(k));
  }
  for (int k = 0; k < cfg.size(); ++k) {
    if (a.mult(k) < 0) throw Error("conditions_from_class: negative multiplicity at " + cfg.center(k).label);
    if (a.mult(k) > 0) out.push_back(chain[k]);
  }
  for (int k = 0; k < cfg.size(); ++k) {
    const Center& c = cfg.center(k);
    if (a.mult(k) > 0 && c.parent >= 0 && a.mult(c.parent) == 0) {
      throw Error("conditions_from_class: " + c.label + " has positive multiplicity below a zero one");
    }
  }
  return out;
}

struct H0Result {
  long value = 0;
  DivisorClass moving;                 // the class left after fixed-part removal
  std::vector<std::string> removed;    // catalog curves subtracted, in order
};

struct CatalogCurve {
  std::string name;
  DivisorClass cls;  // an irreducible curve
};

inline constexpr int kUnloadingCap = 100;

/// Strict transforms of every exceptional curve of the configuration.
inline std::vector<CatalogCurve> exceptional_catalog(const ConfigPtr& cfg) {
  std::vector<CatalogCurve> out;
  for (int k = 0; k < cfg->size(); ++k) {
    out.push_back({cfg->center(k).label + " strict", exceptional_strict_transform(cfg, k)});
  }
  return out;
}

/// h0 of a class by removing irreducible curves it meets negatively, then
/// counting forms through the remaining cluster. The strict transforms of the
/// exceptional curves are always available in addition to the catalog.
inline H0Result h0_class_detailed(const DivisorClass& a, const std::vector<CatalogCurve>& catalog) {
  std::vector<CatalogCurve> curves = catalog;
  for (auto& c : exceptional_catalog(a.config())) curves.push_back(std::move(c));
  H0Result out;
  out.moving = a;
  for (int step = 0;; ++step) {
    if (step >= kUnloadingCap) throw CatalogInsufficient("fixed-part removal did not stabilize");
    // T is nef, so an effective class has degree >= 0.
    if (out.moving.degree() < 0) {
      out.value = 0;
      return out;
    }
    const CatalogCurve* hit = nullptr;
    for (const auto& c : curves) {
      if (intersection_number(out.moving, c.cls) < 0) {
        hit = &c;
        break;
      }
    }
    if (!hit) break;
    out.moving -= hit->cls;
    out.removed.push_back(hit->name);
  }
  const DivisorClass& m = out.moving;
  if (m.is_zero()) {
    out.value = 1;
    return out;
  }
  // An effective class of degree 0 is supported on exceptional curves, and the
  // negative definite form would give one of them a negative pairing.
  if (m.degree() <= 0) {
    out.value = 0;
    return out;
  }
  for (int k = 0; k < m.config()->size(); ++k) {
    if (m.mult(k) < 0) {
      throw CatalogInsufficient("class " + m.str() + " still has a negative multiplicity at " +
                                m.config()->center(k).label);
    }
  }
  out.value = static_cast<long>(kernel(condition_matrix(static_cast<int>(m.degree()), conditions_from_class(m))).size());
  return out;
}

inline long h0_class(const DivisorClass& a, const std::vector<CatalogCurve>& catalog) {
  return h0_class_detailed(a, catalog).value;
}

}  // namespace surfcover

#endif  // SURFCOVER_LINSYS_HPP
