#pragma once

// Simplicial maps between truncated simplicial sets.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sset/sset.hpp"

namespace sset {

using ObjectPtr = std::shared_ptr<const TruncatedSSet>;

inline ObjectPtr share(TruncatedSSet x) { return std::make_shared<const TruncatedSSet>(std::move(x)); }

/// A degreewise function source.cells[n] -> target.cells[n]. Source and
/// target are shared, immutable objects of equal truncation.
class SimplicialMap {
 public:
  /// Checks truncations and table shapes; naturality is checked by validate_map().
  SimplicialMap(ObjectPtr source, ObjectPtr target, std::vector<std::vector<Cell>> level);

  const TruncatedSSet& source() const { return *source_; }
  const TruncatedSSet& target() const { return *target_; }
  const ObjectPtr& source_ptr() const { return source_; }
  const ObjectPtr& target_ptr() const { return target_; }
  int truncation() const { return source_->truncation(); }

  Cell operator()(int n, Cell x) const { return level_[n][x]; }
  const std::vector<Cell>& level(int n) const { return level_.at(n); }
  const std::vector<std::vector<Cell>>& levels() const { return level_; }

 private:
  ObjectPtr source_;
  ObjectPtr target_;
  std::vector<std::vector<Cell>> level_;
};

/// Levels and endpoints equal (endpoints compared structurally).
bool operator==(const SimplicialMap& f, const SimplicialMap& g);

SimplicialMap identity_map(const ObjectPtr& x);

struct MapViolation {
  int degree = 0;        // degree of the simplex the square is evaluated on
  std::string op;        // "d" or "s"
  int index = 0;
  Cell simplex = 0;
};

struct MapValidationReport {
  bool ok = true;
  std::optional<MapViolation> violation;
  std::string message;
};

/// First naturality failure in (degree, operator kind, index, simplex) order.
MapValidationReport validate_map(const SimplicialMap& f);

/// g . f; throws InputError unless target(f) equals source(g).
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

struct MapClass {
  bool injective = false;
  bool surjective = false;
  bool isomorphism = false;
};

MapClass classify(const SimplicialMap& f);

/// Two-sided inverse of an isomorphism, nullopt otherwise.
std::optional<SimplicialMap> inverse(const SimplicialMap& f);

/// The j-th vertex of an n-simplex (canonical face composite).
inline Cell vertex_of(const TruncatedSSet& x, int n, Cell cell, int j) { return x.vertex_of(n, cell, j); }

/// Reorders (or prunes) candidate images during map search.
using CandidateOrder = std::function<void(std::vector<Cell>&)>;

/// Depth-first search over all simplicial maps source -> target, choosing an
/// image for each nondegenerate simplex of the source in turn. `visit`
/// returns false to stop. Returns false iff `node_budget` ran out first.
bool search_maps(const ObjectPtr& source, const ObjectPtr& target,
                 const std::function<bool(const SimplicialMap&)>& visit,
                 const CandidateOrder& order = {}, std::size_t node_budget = 1'000'000);

/// The map determined by images of the nondegenerate simplices of the
/// source, listed in present() generator order. Naturality is not checked.
SimplicialMap extend_from_generators(const ObjectPtr& source, const ObjectPtr& target,
                                     const std::vector<Cell>& images);

std::vector<SimplicialMap> all_maps(const ObjectPtr& source, const ObjectPtr& target);

}  // namespace sset
