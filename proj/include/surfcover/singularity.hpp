#ifndef SURFCOVER_SINGULARITY_HPP
#define SURFCOVER_SINGULARITY_HPP

// Plane-curve singularities by iterated point blow-ups.
//
// A LocalCurve keeps the point of interest at the origin of an affine chart.
// Blowing up in the direction of slope t uses the chart y -> x*(y + t), where
// the new exceptional curve is {x = 0}; the vertical direction uses
// x -> x*y, where it is {y = 0}. Exceptional curves through the origin are
// tracked by the id of the point whose blow-up created them.

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfcover/intersection.hpp"
#include "surfcover/roots.hpp"

namespace surfcover {

using BinaryForm = MultiPoly;

/// Tangent direction at the origin: the line y = slope*x, or the line x = 0.
struct Direction {
  bool vertical = false;
  GR slope;

  static Direction with_slope(GR t) { return {false, std::move(t)}; }
  static Direction vertical_line() { return {true, GR()}; }

  friend bool operator==(const Direction& a, const Direction& b) {
    return a.vertical == b.vertical && (a.vertical || a.slope == b.slope);
  }
  friend bool operator<(const Direction& a, const Direction& b) {
    if (a.vertical != b.vertical) return b.vertical;
    return !a.vertical && lex_less(a.slope, b.slope);
  }
  std::string str() const { return vertical ? "vertical" : "slope " + slope.str(); }
};

struct LocalCurve {
  MultiPoly f;
  int on_x0 = -1;  // exceptional curve equal to {x = 0} in this chart, if any
  int on_y0 = -1;  // exceptional curve equal to {y = 0}
  std::vector<std::string> history;

  int multiplicity() const { return f.is_zero() ? -1 : f.order(); }
  BinaryForm tangent_cone() const { return f.homogeneous_part(multiplicity()); }
};

inline LocalCurve local_curve_at(const MultiPoly& F, const PlanePoint& p) {
  LocalCurve c;
  c.f = F.nvars() == 3 ? local_at(F, p) : local_at(homogenize(F, "z"), p);
  return c;
}

inline int multiplicity_at(const MultiPoly& F, const PlanePoint& p) {
  if (F.is_zero()) throw Error("multiplicity_at: zero polynomial");
  return local_curve_at(F, p).multiplicity();
}

/// Lowest homogeneous part of F in local coordinates at p.
inline BinaryForm tangent_cone_at(const MultiPoly& F, const PlanePoint& p) {
  LocalCurve c = local_curve_at(F, p);
  if (c.multiplicity() == 0) throw NotOnCurve("tangent_cone_at: " + p.str() + " is not on the curve");
  return c.tangent_cone();
}

/// T(1, t) for a binary form T(x, y).
inline UPoly dehomogenized_form(const BinaryForm& T) {
  std::vector<GR> c;
  for (const auto& [e, coef] : T.terms()) {
    if (c.size() <= static_cast<std::size_t>(e[1])) c.resize(e[1] + 1);
    c[e[1]] = coef;
  }
  return UPoly(std::move(c));
}

/// Squarefree as a product of linear forms (distinct tangents).
inline bool binary_form_squarefree(const BinaryForm& T) {
  const int m = T.degree();
  UPoly p = dehomogenized_form(T);
  if (m - p.degree() >= 2) return false;  // x^2 divides T
  return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0;
}

struct ConeDirections {
  std::vector<std::pair<Direction, int>> rational;  // direction and its multiplicity in the cone
  bool repeated_rational = true;                    // every repeated factor splits over Q(i)
  bool all_rational = true;
};

inline ConeDirections tangent_directions(const BinaryForm& T) {
  ConeDirections out;
  const int m = T.degree();
  UPoly p = dehomogenized_form(T);
  auto found = gaussian_roots(p);
  for (const GR& t : found.roots) out.rational.emplace_back(Direction::with_slope(t), root_multiplicity(p, t));
  if (m > p.degree()) out.rational.emplace_back(Direction::vertical_line(), m - p.degree());
  out.all_rational = found.complete;
  if (!found.complete) {
    UPoly repeated = exact_div(p, squarefree_part(p));
    out.repeated_rational = gaussian_roots(repeated).complete;
  }
  return out;
}

inline bool direction_in_cone(const BinaryForm& T, const Direction& d) {
  return d.vertical ? T.eval({GR(0), GR(1)}).is_zero() : T.eval({GR(1), d.slope}).is_zero();
}

namespace detail {

/// Divide out x^k (var 0) or y^k (var 1), all terms being divisible.
inline MultiPoly divide_variable_power(const MultiPoly& f, std::size_t var, int k) {
  MultiPoly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exponents g = e;
    g[var] -= k;
    if (g[var] < 0) throw Error("divide_variable_power: not divisible");
    r.add_term(std::move(g), c);
  }
  return r;
}

/// Total transform of f under the chart map for direction d (no division).
inline MultiPoly blow_up_substitute(const MultiPoly& f, const Direction& d) {
  const auto& v = f.vars();
  MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1);
  if (d.vertical) return f.substitute({x * y, y});
  return f.substitute({x, x * (y + MultiPoly::constant(v, d.slope))});
}

}  // namespace detail

/// Strict transform at the infinitely near point in direction d, the exceptional
/// factor divided out exactly m times. `new_id` names the new exceptional curve.
inline LocalCurve blow_up_local(const LocalCurve& c, const Direction& d, int new_id = -1) {
  const int m = c.multiplicity();
  if (m <= 0) throw NotOnCurve("blow_up_local: the origin is not on the curve");
  if (!direction_in_cone(c.tangent_cone(), d)) {
    throw DirectionNotInTangentCone("direction " + d.str() + " is not tangent to the curve");
  }
  LocalCurve out;
  out.history = c.history;
  out.history.push_back(d.str());
  MultiPoly total = detail::blow_up_substitute(c.f, d);
  if (d.vertical) {
    out.f = detail::divide_variable_power(total, 1, m);
    out.on_y0 = new_id;
    out.on_x0 = c.on_x0;
  } else {
    out.f = detail::divide_variable_power(total, 0, m);
    out.on_x0 = new_id;
    out.on_y0 = d.slope.is_zero() ? c.on_y0 : -1;
  }
  return out;
}

struct ResolutionNode {
  int id = 0;
  int parent = -1;
  int multiplicity = 0;
  int depth = 0;
  std::optional<Direction> direction;  // direction from the parent; empty at the root
  std::vector<int> proximity;          // points whose exceptional curves pass through this one
  bool satellite() const { return proximity.size() >= 2; }
};

/// Infinitely near points that must be blown up to resolve a curve at a point,
/// in breadth-first order with children sorted by direction. Smooth points
/// meeting the exceptional locus transversally at a single curve are not listed.
struct ResolutionTree {
  PlanePoint center;
  std::vector<ResolutionNode> nodes;

  std::vector<int> children(int id) const {
    std::vector<int> out;
    for (const auto& n : nodes) {
      if (n.parent == id) out.push_back(n.id);
    }
    return out;
  }

  /// Multiplicities along the first root-to-leaf path.
  std::vector<int> multiplicity_sequence() const {
    std::vector<int> seq;
    for (int id = 0; id >= 0;) {
      seq.push_back(nodes[id].multiplicity);
      auto ch = children(id);
      id = ch.empty() ? -1 : ch.front();
    }
    return seq;
  }

  nlohmann::json to_json() const {
    nlohmann::json out;
    out["center"] = center.str();
    out["nodes"] = nlohmann::json::array();
    for (const auto& n : nodes) {
      out["nodes"].push_back({{"id", n.id},
                              {"parent", n.parent},
                              {"multiplicity", n.multiplicity},
                              {"proximity", n.proximity},
                              {"direction", n.direction ? n.direction->str() : "root"}});
    }
    return out;
  }
};

inline bool needs_blow_up(const LocalCurve& c) {
  const int m = c.multiplicity();
  if (m >= 2) return true;
  if (m != 1) return false;
  if (c.on_x0 >= 0 && c.on_y0 >= 0) return true;
  BinaryForm T = c.tangent_cone();
  if (c.on_x0 >= 0 && T.coeff({0, 1}).is_zero()) return true;  // tangent to {x = 0}
  if (c.on_y0 >= 0 && T.coeff({1, 0}).is_zero()) return true;  // tangent to {y = 0}
  return false;
}

inline void check_proximity_inequality(const ResolutionTree& t) {
  for (const auto& n : t.nodes) {
    int sum = 0;
    for (const auto& q : t.nodes) {
      if (std::find(q.proximity.begin(), q.proximity.end(), n.id) != q.proximity.end()) sum += q.multiplicity;
    }
    if (sum > n.multiplicity) throw Error("proximity inequality fails at node " + std::to_string(n.id));
  }
}

inline ResolutionTree resolve_local(const LocalCurve& start, const PlanePoint& center, int depth_cap = 16) {
  if (start.multiplicity() <= 0) throw NotOnCurve("resolve_point: " + center.str() + " is not on the curve");
  ResolutionTree tree{center, {}};
  std::deque<std::pair<LocalCurve, int>> queue;
  ResolutionNode root;
  root.multiplicity = start.multiplicity();
  for (int e : {start.on_x0, start.on_y0}) {
    if (e >= 0) root.proximity.push_back(e);
  }
  tree.nodes.push_back(root);
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [c, id] = std::move(queue.front());
    queue.pop_front();
    if (!needs_blow_up(c)) continue;
    if (tree.nodes[id].depth >= depth_cap) throw DepthCapExceeded("resolution deeper than " + std::to_string(depth_cap));
    ConeDirections dirs = tangent_directions(c.tangent_cone());
    if (!dirs.repeated_rational) throw NonSplitTangentCone("a repeated tangent is not defined over Q(i)");
    // Simple irrational tangents give smooth points transverse to one exceptional curve.
    std::sort(dirs.rational.begin(), dirs.rational.end());
    for (const auto& [d, k] : dirs.rational) {
      const int child_id = static_cast<int>(tree.nodes.size());
      LocalCurve child = blow_up_local(c, d, id);
      if (!needs_blow_up(child)) continue;
      ResolutionNode n;
      n.id = child_id;
      n.parent = id;
      n.multiplicity = child.multiplicity();
      n.depth = tree.nodes[id].depth + 1;
      n.direction = d;
      for (int e : {child.on_x0, child.on_y0}) {
        if (e >= 0) n.proximity.push_back(e);
      }
      std::sort(n.proximity.begin(), n.proximity.end());
      tree.nodes.push_back(n);
      queue.emplace_back(std::move(child), child_id);
    }
  }
  check_proximity_inequality(tree);
  return tree;
}

inline ResolutionTree resolve_point(const MultiPoly& F, const PlanePoint& p, int depth_cap = 16) {
  return resolve_local(local_curve_at(F, p), p, depth_cap);
}

inline long delta_invariant(const ResolutionTree& t) {
  long d = 0;
  for (const auto& n : t.nodes) d += static_cast<long>(n.multiplicity) * (n.multiplicity - 1) / 2;
  return d;
}

enum class SingularityKind { Smooth, Node, Tacnode, OrdinaryMultiple, TypePoint, General };

struct SingularityClass {
  SingularityKind kind = SingularityKind::General;
  int m1 = 0;
  int m2 = 0;
  std::optional<MultiPoly> tangent;  // the common tangent line of a Tacnode or TypePoint
  ResolutionTree tree;

  std::string str() const {
    switch (kind) {
      case SingularityKind::Smooth:
        return "Smooth";
      case SingularityKind::Node:
        return "Node";
      case SingularityKind::Tacnode:
        return "Tacnode(" + tangent->str() + ")";
      case SingularityKind::OrdinaryMultiple:
        return "OrdinaryMultiple(" + std::to_string(m1) + ")";
      case SingularityKind::TypePoint:
        return "TypePoint(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
      case SingularityKind::General:
        break;
    }
    std::string s = "General[";
    for (std::size_t k = 0; k < tree.nodes.size(); ++k) s += (k ? "," : "") + std::to_string(tree.nodes[k].multiplicity);
    return s + "]";
  }
};

inline MultiPoly line_in_direction(const PlanePoint& p, const Direction& d) {
  return d.vertical ? line_through(p, GR(0), GR(1)) : line_through(p, GR(1), d.slope);
}

inline SingularityClass classify_local(const LocalCurve& c, const PlanePoint& p) {
  SingularityClass out;
  out.tree = resolve_local(c, p);
  const int m = c.multiplicity();
  out.m1 = m;
  BinaryForm T = c.tangent_cone();
  if (m == 1) {
    out.kind = SingularityKind::Smooth;
    return out;
  }
  if (binary_form_squarefree(T)) {
    out.kind = m == 2 ? SingularityKind::Node : SingularityKind::OrdinaryMultiple;
    return out;
  }
  // One tangent, resolving after one blow-up to an ordinary point off the
  // other exceptional directions.
  ConeDirections dirs = tangent_directions(T);
  const auto& nodes = out.tree.nodes;
  if (dirs.rational.size() == 1 && dirs.rational.front().second == m && nodes.size() == 2 &&
      nodes[1].multiplicity >= 2) {
    const Direction& d = dirs.rational.front().first;
    LocalCurve child = blow_up_local(c, d, 0);
    if (binary_form_squarefree(child.tangent_cone())) {
      out.m2 = nodes[1].multiplicity;
      out.kind = (m == 2 && out.m2 == 2) ? SingularityKind::Tacnode : SingularityKind::TypePoint;
      out.tangent = line_in_direction(p, d);
      return out;
    }
  }
  out.kind = SingularityKind::General;
  return out;
}

inline SingularityClass classify_singularity(const MultiPoly& F, const PlanePoint& p) {
  return classify_local(local_curve_at(F, p), p);
}

/// I_p(F, L) >= m_p(F) + 1 for a line L through p.
inline bool is_tangent_line(const MultiPoly& F, const PlanePoint& p, const MultiPoly& L) {
  if (!on_curve(L, p)) throw NotOnCurve("is_tangent_line: the line misses " + p.str());
  IntersectionNumber i = intersection_multiplicity(F, L, p);
  return i.infinite || i.value >= multiplicity_at(F, p) + 1;
}

namespace detail {

/// Common tangent directions of two binary forms, all of which must be rational.
inline std::vector<Direction> common_directions(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Direction> out;
  UPoly pa = dehomogenized_form(a), pb = dehomogenized_form(b);
  UPoly g = gcd(pa, pb);
  if (g.degree() > 0) {
    auto r = gaussian_roots(g);
    if (!r.complete) throw NonSplitTangentCone("a common tangent is not defined over Q(i)");
    for (const GR& t : r.roots) out.push_back(Direction::with_slope(t));
  }
  if (a.degree() > pa.degree() && b.degree() > pb.degree()) out.push_back(Direction::vertical_line());
  return out;
}

inline long noether_local(const LocalCurve& f, const LocalCurve& g, int depth, int depth_cap) {
  const int mf = f.multiplicity(), mg = g.multiplicity();
  if (mf <= 0 || mg <= 0) return 0;
  if (depth > depth_cap) throw DepthCapExceeded("infinitely near points do not separate");
  long total = static_cast<long>(mf) * mg;
  for (const Direction& d : common_directions(f.tangent_cone(), g.tangent_cone())) {
    total += noether_local(blow_up_local(f, d), blow_up_local(g, d), depth + 1, depth_cap);
  }
  return total;
}

}  // namespace detail

/// I_p(F, G) as the sum of m_q(F)*m_q(G) over the infinitely near points q of p
/// shared by both curves. Independent of the reduction in intersection.hpp.
inline long noether_intersection(const MultiPoly& F, const MultiPoly& G, const PlanePoint& p, int depth_cap = 64) {
  return detail::noether_local(local_curve_at(F, p), local_curve_at(G, p), 0, depth_cap);
}

}  // namespace surfcover

#endif  // SURFCOVER_SINGULARITY_HPP
