#pragma once

// Connected components (the reflection into sets), its unit, and the
// trivial-covering checks built on it.

#include <vector>

#include "sset/limits.hpp"
#include "sset/morphism.hpp"
#include "sset/report.hpp"

namespace sset {

struct ComponentPartition {
  std::size_t count = 0;
  /// class_of[n][x]: component of simplex x of degree n.
  std::vector<std::vector<Cell>> class_of;
  /// Vertices of each component in increasing order; components are
  /// numbered by their least vertex.
  std::vector<std::vector<Cell>> components;
};

/// Components under undirected reachability along 1-simplices. Throws
/// InputError if some simplex has vertices in different classes.
ComponentPartition pi0(const TruncatedSSet& x);

/// Induced function on components.
std::vector<Cell> pi0_map(const SimplicialMap& f, const ComponentPartition& source,
                          const ComponentPartition& target);
std::vector<Cell> pi0_map(const SimplicialMap& f);

/// Unit X -> H pi0 X onto the discrete object of components.
SimplicialMap pi0_unit(const ObjectPtr& x, const ComponentPartition& components);

/// Comparison A -> B x_{H pi0 B} H pi0 A, a |-> (h(a), [a]), into the
/// materialized pullback of the unit of B along H pi0 h.
struct ComparisonData {
  FiberProduct pullback;  // cells are pairs (cell of B, component of A)
  SimplicialMap comparison;
};
ComparisonData trivial_covering_comparison(const SimplicialMap& h);

/// h is cartesian for the components reflection iff the comparison is an isomorphism.
CheckReport trivial_covering_check(const SimplicialMap& h);

/// For an injective m: every component of the target meeting the image lies
/// inside it. Throws InputError if m is not injective.
CheckReport injection_cartesian_check(const SimplicialMap& m);

}  // namespace sset
