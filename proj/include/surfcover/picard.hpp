#ifndef SURFCOVER_PICARD_HPP
#define SURFCOVER_PICARD_HPP

// Divisor classes on a blow-up X of the projective plane at proper and
// infinitely near points. Basis: the pulled-back line class T and the total
// transforms E_c of the exceptional curves, with T^2 = 1, E_c^2 = -1.
// A class is stored as d*T - sum m_c*E_c.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfcover/singularity.hpp"

namespace surfcover {

/// A center of the configuration: a plane point, or the point infinitely near
/// to an earlier center in a direction of that center's local chart.
struct Center {
  std::string label;  // class label such as "E1'"
  std::optional<PlanePoint> point;
  int parent = -1;
  Direction direction;
  // Exceptional curves equal to {x = 0} and {y = 0} in this center's chart.
  int on_x0 = -1;
  int on_y0 = -1;

  bool infinitely_near() const { return parent >= 0; }
};

class BlowupConfiguration {
 public:
  int add_point(const std::string& label, const PlanePoint& p) {
    check_label(label);
    Center c;
    c.label = label;
    c.point = p.normalized();
    centers_.push_back(std::move(c));
    return size() - 1;
  }

  /// The point infinitely near to `parent` in direction d (local coordinates
  /// of the parent's chart, as used by blow_up_local).
  int add_infinitely_near(const std::string& label, int parent, const Direction& d) {
    check_label(label);
    if (parent < 0 || parent >= size()) throw Error("add_infinitely_near: no center " + std::to_string(parent));
    const Center& p = centers_[parent];
    Center c;
    c.label = label;
    c.parent = parent;
    c.direction = d;
    if (d.vertical) {
      c.on_y0 = parent;
      c.on_x0 = p.on_x0;
    } else {
      c.on_x0 = parent;
      c.on_y0 = d.slope.is_zero() ? p.on_y0 : -1;
    }
    centers_.push_back(std::move(c));
    return size() - 1;
  }

  /// The point infinitely near to `parent` on the strict transform of the line L.
  int add_along_line(const std::string& label, int parent, const MultiPoly& L) {
    const Center& p = centers_.at(parent);
    if (!p.point) throw Error("add_along_line: the parent must be a plane point");
    auto dirs = tangent_directions(tangent_cone_at(L, *p.point));
    return add_infinitely_near(label, parent, dirs.rational.at(0).first);
  }

  int size() const { return static_cast<int>(centers_.size()); }
  const Center& center(int k) const { return centers_.at(k); }
  const std::vector<Center>& centers() const { return centers_; }

  int index_of(const std::string& label) const {
    for (int k = 0; k < size(); ++k) {
      if (centers_[k].label == label) return k;
    }
    throw Error("no center labelled " + label);
  }

  /// Centers lying on the strict transform of E_k.
  std::vector<int> proximate_to(int k) const {
    std::vector<int> out;
    for (int j = k + 1; j < size(); ++j) {
      if (centers_[j].on_x0 == k || centers_[j].on_y0 == k) out.push_back(j);
    }
    return out;
  }

  /// Lower unitriangular: P[j][k] = -1 when center j is proximate to center k.
  std::vector<std::vector<int>> proximity_matrix() const {
    std::vector<std::vector<int>> P(size(), std::vector<int>(size(), 0));
    for (int k = 0; k < size(); ++k) {
      P[k][k] = 1;
      for (int j : proximate_to(k)) P[j][k] = -1;
    }
    return P;
  }

  friend bool operator==(const BlowupConfiguration& a, const BlowupConfiguration& b) {
    if (a.size() != b.size()) return false;
    for (int k = 0; k < a.size(); ++k) {
      const Center &x = a.centers_[k], &y = b.centers_[k];
      if (x.label != y.label || x.parent != y.parent || x.point != y.point) return false;
      if (x.infinitely_near() && !(x.direction == y.direction)) return false;
    }
    return true;
  }

 private:
  void check_label(const std::string& label) const {
    for (const auto& c : centers_) {
      if (c.label == label) throw Error("duplicate center label " + label);
    }
  }

  std::vector<Center> centers_;
};

using ConfigPtr = std::shared_ptr<const BlowupConfiguration>;

class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(ConfigPtr cfg, long degree, std::vector<long> mults)
      : cfg_(std::move(cfg)), degree_(degree), mults_(std::move(mults)) {
    if (!cfg_) throw ConfigMismatch("class without a configuration");
    if (static_cast<int>(mults_.size()) != cfg_->size()) throw ConfigMismatch("wrong number of multiplicities");
  }

  static DivisorClass zero(const ConfigPtr& cfg) { return {cfg, 0, std::vector<long>(cfg->size(), 0)}; }
  static DivisorClass line(const ConfigPtr& cfg) { return {cfg, 1, std::vector<long>(cfg->size(), 0)}; }
  static DivisorClass exceptional(const ConfigPtr& cfg, int k) {
    std::vector<long> m(cfg->size(), 0);
    m.at(k) = -1;
    return {cfg, 0, std::move(m)};
  }
  static DivisorClass exceptional(const ConfigPtr& cfg, const std::string& label) {
    return exceptional(cfg, cfg->index_of(label));
  }

  /// d*T - sum m*E over the given labels.
  static DivisorClass from_labels(const ConfigPtr& cfg, long degree,
                                  const std::vector<std::pair<std::string, long>>& mults) {
    DivisorClass c = zero(cfg);
    c.degree_ = degree;
    for (const auto& [label, m] : mults) c.mults_[cfg->index_of(label)] += m;
    return c;
  }

  const ConfigPtr& config() const { return cfg_; }
  long degree() const { return degree_; }
  const std::vector<long>& mults() const { return mults_; }
  long mult(int k) const { return mults_.at(k); }
  long mult(const std::string& label) const { return mults_.at(cfg_->index_of(label)); }

  bool is_zero() const {
    if (degree_ != 0) return false;
    for (long m : mults_) {
      if (m != 0) return false;
    }
    return true;
  }

  void check_same(const DivisorClass& o) const {
    if (cfg_ == o.cfg_) return;
    if (!cfg_ || !o.cfg_ || !(*cfg_ == *o.cfg_)) throw ConfigMismatch("classes on different configurations");
  }

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    a.check_same(b);
    DivisorClass r = a;
    r.degree_ += b.degree_;
    for (std::size_t k = 0; k < r.mults_.size(); ++k) r.mults_[k] += b.mults_[k];
    return r;
  }
  friend DivisorClass operator-(const DivisorClass& a) {
    DivisorClass r = a;
    r.degree_ = -r.degree_;
    for (long& m : r.mults_) m = -m;
    return r;
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-b); }
  friend DivisorClass operator*(long s, const DivisorClass& a) {
    DivisorClass r = a;
    r.degree_ *= s;
    for (long& m : r.mults_) m *= s;
    return r;
  }
  DivisorClass& operator+=(const DivisorClass& o) { return *this = *this + o; }
  DivisorClass& operator-=(const DivisorClass& o) { return *this = *this - o; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    a.check_same(b);
    return a.degree_ == b.degree_ && a.mults_ == b.mults_;
  }

  /// Written as "3T - E0 - 2E1' + E4".
  std::string str() const {
    std::string out;
    auto append = [&](long coef, const std::string& name) {
      if (coef == 0) return;
      long a = coef < 0 ? -coef : coef;
      if (out.empty()) {
        if (coef < 0) out += "-";
      } else {
        out += coef < 0 ? " - " : " + ";
      }
      if (a != 1) out += std::to_string(a);
      out += name;
    };
    append(degree_, "T");
    for (int k = 0; k < static_cast<int>(mults_.size()); ++k) append(-mults_[k], cfg_->center(k).label);
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const DivisorClass& c) { return os << c.str(); }

  nlohmann::json to_json() const {
    nlohmann::json m = nlohmann::json::array();
    for (int k = 0; k < static_cast<int>(mults_.size()); ++k) {
      m.push_back({{"center", cfg_->center(k).label}, {"mult", mults_[k]}});
    }
    return {{"degree", degree_}, {"mults", m}, {"class", str()}};
  }

 private:
  ConfigPtr cfg_;
  long degree_ = 0;
  std::vector<long> mults_;
};

/// Reads the format of DivisorClass::str(), e.g. "3T - E0 + E1 - 2E1'".
inline DivisorClass parse_class(const ConfigPtr& cfg, std::string_view text) {
  DivisorClass out = DivisorClass::zero(cfg);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> DivisorClass {
    throw ParseError(i, why + " in class \"" + std::string(text) + "\"");
  };
  skip();
  if (text.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      return fail("expected + or -");
    }
    long coef = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coef = 10 * coef + (text[i++] - '0');
    }
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '\'' || text[i] == '_')) ++i;
    if (start == i) return fail("expected T or a center label");
    const std::string name(text.substr(start, i - start));
    if (name == "T") {
      out += (sign * coef) * DivisorClass::line(cfg);
    } else {
      if (!std::any_of(cfg->centers().begin(), cfg->centers().end(), [&](const Center& c) { return c.label == name; })) {
        return fail("unknown center " + name);
      }
      out += (sign * coef) * DivisorClass::exceptional(cfg, name);
    }
    first = false;
  }
  return out;
}

inline long intersection_number(const DivisorClass& a, const DivisorClass& b) {
  a.check_same(b);
  long s = a.degree() * b.degree();
  for (std::size_t k = 0; k < a.mults().size(); ++k) s -= a.mults()[k] * b.mults()[k];
  return s;
}

inline long self_intersection(const DivisorClass& a) { return intersection_number(a, a); }

inline DivisorClass canonical_class(const ConfigPtr& cfg) {
  return {cfg, -3, std::vector<long>(cfg->size(), -1)};
}

/// Class of the strict transform of the exceptional curve of center k.
inline DivisorClass exceptional_strict_transform(const ConfigPtr& cfg, int k) {
  DivisorClass c = DivisorClass::exceptional(cfg, k);
  for (int j : cfg->proximate_to(k)) c -= DivisorClass::exceptional(cfg, j);
  return c;
}

namespace detail {

/// Strict transform in direction d, whether or not d is tangent to the curve.
inline LocalCurve strict_transform_step(const LocalCurve& c, const Direction& d) {
  const int m = c.multiplicity();
  LocalCurve out;
  MultiPoly total = blow_up_substitute(c.f, d);
  out.f = divide_variable_power(total, d.vertical ? 1 : 0, m);
  return out;
}

}  // namespace detail

/// Multiplicities of the iterated strict transforms of F at every center.
inline std::vector<long> center_multiplicities(const MultiPoly& F, const BlowupConfiguration& cfg) {
  if (F.is_zero()) throw Error("strict transform of the zero polynomial");
  std::vector<std::optional<LocalCurve>> local(cfg.size());
  std::vector<long> mults(cfg.size(), 0);
  for (int k = 0; k < cfg.size(); ++k) {
    const Center& c = cfg.center(k);
    if (c.point) {
      local[k] = local_curve_at(F, *c.point);
    } else if (local[c.parent] && mults[c.parent] > 0) {
      local[k] = detail::strict_transform_step(*local[c.parent], c.direction);
    }
    if (local[k]) mults[k] = local[k]->multiplicity();
    if (mults[k] < 0) throw Error("the curve contains an exceptional curve at " + c.label);
  }
  return mults;
}

inline DivisorClass strict_transform_class(const MultiPoly& F, const ConfigPtr& cfg) {
  return {cfg, F.degree(), center_multiplicities(F, *cfg)};
}

/// Arithmetic genus of a curve class: C.(C + K) = 2p - 2.
inline long arithmetic_genus(const DivisorClass& c) {
  return (intersection_number(c, c + canonical_class(c.config())) + 2) / 2;
}

inline bool is_even(const DivisorClass& a) {
  if (a.degree() % 2 != 0) return false;
  for (long m : a.mults()) {
    if (m % 2 != 0) return false;
  }
  return true;
}

inline DivisorClass halve(const DivisorClass& a) {
  if (!is_even(a)) throw NotEven(a.str() + " is not divisible by 2");
  std::vector<long> m = a.mults();
  for (long& v : m) v /= 2;
  return {a.config(), a.degree() / 2, std::move(m)};
}

struct ClassIdentity {
  std::string name;
  DivisorClass lhs, rhs;
  bool holds = false;
};

struct BidoubleCheck {
  std::vector<ClassIdentity> identities;
  bool all_hold() const {
    for (const auto& e : identities) {
      if (!e.holds) return false;
    }
    return true;
  }
  nlohmann::json to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : identities) {
      out.push_back({{"identity", e.name}, {"lhs", e.lhs.str()}, {"rhs", e.rhs.str()}, {"holds", e.holds}});
    }
    return out;
  }
};

/// The building-data relations L_g + D_g = L_j + L_k for {g, j, k} = {1, 2, 3}.
inline BidoubleCheck check_bidouble_data(const std::array<DivisorClass, 3>& D, const std::array<DivisorClass, 3>& L) {
  BidoubleCheck out;
  for (int g = 0; g < 3; ++g) {
    int j = (g + 1) % 3, k = (g + 2) % 3;
    if (j > k) std::swap(j, k);
    ClassIdentity e;
    e.name = "L" + std::to_string(g + 1) + "+D" + std::to_string(g + 1) + " = L" + std::to_string(j + 1) + "+L" +
             std::to_string(k + 1);
    e.lhs = L[g] + D[g];
    e.rhs = L[j] + L[k];
    e.holds = e.lhs == e.rhs;
    out.identities.push_back(std::move(e));
  }
  return out;
}

}  // namespace surfcover

#endif  // SURFCOVER_PICARD_HPP
