#ifndef SURFCOVER_SCENARIO_LATTICE_HPP
#define SURFCOVER_SCENARIO_LATTICE_HPP

// The intersection lattice of a bidouble cover V -> X spanned by pullbacks of
// chosen classes and by the preimages of the branch components, laid out by
// the fate of each component.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfcover/scenario_checks.hpp"

namespace surfcover {

/// Generator labels: "pi*NAME" for pullbacks, "bar NAME" for the reduced
/// preimage of a branch component and "bar NAME/k" for its split pieces.
inline std::string pullback_label(const std::string& name) { return "pi*" + name; }
inline std::string reduced_label(const std::string& name) { return "bar " + name; }
inline std::string piece_label(const std::string& name, int k) { return reduced_label(name) + "/" + std::to_string(k); }

struct BranchLattice {
  CoverLattice lattice;
  std::map<int, std::string> branch_center;   // center index -> component name
  std::map<std::string, int> split;           // component -> number of pieces

  /// pi^* of a branch component: twice the reduced preimage, written with the
  /// pieces when it splits.
  CoverClass pull_component(const std::string& name) const {
    CoverClass c(lattice.size(), 0);
    if (auto it = split.find(name); it != split.end()) {
      for (int k = 1; k <= it->second; ++k) c[lattice.index_of(piece_label(name, k))] += 2;
    } else {
      c[lattice.index_of(reduced_label(name))] += 2;
    }
    return c;
  }
};

/// Pullback generators come first in the given order, then each branch
/// component with its pieces. Rational preimages of square -1 and pieces of
/// split (-2)-curves are the curves to contract.
inline BranchLattice branch_lattice(const BranchData& b, const std::vector<ComponentFate>& fates,
                                    const std::vector<std::pair<std::string, DivisorClass>>& pullbacks) {
  std::vector<CoverGenerator> gens;
  for (const auto& [label, c] : pullbacks) gens.push_back(CoverGenerator::pullback(pullback_label(label), c));
  std::map<int, std::string> centers;
  std::map<std::string, int> split;
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    const BranchComponent& c = b.components[i];
    const ComponentFate& f = fates.at(i);
    if (c.center >= 0) centers[c.center] = c.name;
    const int parent = static_cast<int>(gens.size());
    CoverGenerator g = CoverGenerator::branch_reduced(reduced_label(c.name), c.cls);
    g.contracted = f.fate == "rational" && f.self == -1;
    gens.push_back(std::move(g));
    if (f.fate == "splits") {
      split[c.name] = 2;
      for (int k = 1; k <= 2; ++k) {
        CoverGenerator p = CoverGenerator::split_piece(piece_label(c.name, k), parent, 2);
        p.contracted = f.self == -2;
        gens.push_back(std::move(p));
      }
    }
  }
  return {cover_gram(gens, 4), std::move(centers), std::move(split)};
}

/// pi^* of the total transform of the exceptional curve of center k: its
/// strict transform plus the total transforms of the centers proximate to it.
inline CoverClass pull_exceptional_total(const BranchLattice& bl, const ConfigPtr& cfg, int k) {
  CoverClass c(bl.lattice.size(), 0);
  if (auto it = bl.branch_center.find(k); it != bl.branch_center.end()) {
    c = bl.pull_component(it->second);
  } else {
    c[bl.lattice.index_of(pullback_label(cfg->center(k).label))] += 1;
  }
  for (int j : cfg->proximate_to(k)) {
    CoverClass t = pull_exceptional_total(bl, cfg, j);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += t[i];
  }
  return c;
}

/// pi^* of a plane curve that is not a branch component, with generator
/// pi*NAME' for its strict transform: pi^*(strict) + sum m_k pi^*(E_k).
inline CoverClass pull_plane_curve(const BranchLattice& bl, const ConfigPtr& cfg, const std::string& name,
                                   const MultiPoly& F) {
  CoverClass c = bl.lattice.unit(pullback_label(name + "'"));
  const std::vector<long> m = center_multiplicities(F, *cfg);
  for (int k = 0; k < cfg->size(); ++k) {
    if (m[k] == 0) continue;
    CoverClass t = pull_exceptional_total(bl, cfg, k);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += m[k] * t[i];
  }
  return c;
}

inline std::string cover_class_str(const CoverLattice& lat, const CoverClass& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const long a = c[i] < 0 ? -c[i] : c[i];
    out += out.empty() ? (c[i] < 0 ? "-" : "") : (c[i] < 0 ? " - " : " + ");
    if (a != 1) out += std::to_string(a) + " ";
    out += lat.generators()[i].label;
  }
  return out.empty() ? "0" : out;
}

}  // namespace surfcover

#endif  // SURFCOVER_SCENARIO_LATTICE_HPP
