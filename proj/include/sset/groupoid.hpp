#pragma once

// Fundamental groupoid presentations and nerves of finite groupoids.

#include <string>
#include <vector>

#include "sset/morphism.hpp"

namespace sset {

struct Arrow {
  Cell source = 0;
  Cell target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite groupoid with a total composition table.
class FiniteGroupoid {
 public:
  static constexpr std::int64_t none = -1;

  /// `compose[g * arrows + f]` is g . f when target(f) = source(g), else none.
  FiniteGroupoid(std::size_t objects, std::vector<Arrow> arrows, std::vector<std::int64_t> compose,
                 std::vector<Cell> identity, std::vector<Cell> inverse);

  /// Z/k as a one-object groupoid; arrow i is the residue i.
  static FiniteGroupoid cyclic_group(int order);
  /// One arrow between every ordered pair of n objects; arrow s*n+t : s -> t.
  static FiniteGroupoid codiscrete(std::size_t objects);

  std::size_t objects() const { return objects_; }
  std::size_t arrow_count() const { return arrows_.size(); }
  const Arrow& arrow(Cell g) const { return arrows_[g]; }
  Cell identity(Cell object) const { return identity_[object]; }
  Cell inverse(Cell g) const { return inverse_[g]; }
  /// g . f; throws InputError if not composable.
  Cell compose(Cell g, Cell f) const;

  /// Checks closure, associativity, units and inverses on the full table;
  /// returns an empty string when every law holds.
  std::string check_laws() const;

 private:
  std::size_t objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::int64_t> compose_;
  std::vector<Cell> identity_;
  std::vector<Cell> inverse_;
};

/// Degree-n simplices are composable strings (g_1, ..., g_n) with
/// target(g_i) = source(g_{i+1}), listed lexicographically; degree 0 is the
/// objects. The result has nondegenerate simplices in every degree, so it
/// validates with the buffer requirement off.
TruncatedSSet nerve(const FiniteGroupoid& g, int truncation);

/// Generators and relations for the fundamental groupoid of an object: one
/// generator per 1-simplex, an identity relation per vertex (s_0 v = id_v)
/// and a triangle relation d_1 s = d_0 s . d_2 s per 2-simplex s. Not simplified.
struct GroupoidPresentation {
  struct Relation {
    enum class Kind { identity, triangle };
    Kind kind = Kind::identity;
    Cell simplex = 0;  // the vertex (identity) or 2-simplex (triangle) it comes from
    Cell lhs = 0;      // generator on the left
    Cell first = 0;    // triangle: d_2, applied first
    Cell second = 0;   // triangle: d_0, applied second
    friend bool operator==(const Relation&, const Relation&) = default;
  };

  std::size_t objects = 0;
  std::vector<Arrow> generators;
  std::vector<Relation> relations;
};

/// Requires truncation >= 2.
GroupoidPresentation pi1_presentation(const TruncatedSSet& x);

/// Text form:
///   objects <count>
///   arrow e<i>: <source> -> <target>
///   relation e<i> = id(<v>)
///   relation e<d1> = e<d0> o e<d2>
std::string render_presentation(const GroupoidPresentation& p);

/// Images of the source relations under f are, verbatim, relations of the target presentation.
bool presentation_map_preserves_relations(const SimplicialMap& f);

}  // namespace sset
