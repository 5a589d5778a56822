#pragma once

// Simplicial sets given by their nondegenerate simplices.
//
// A presentation lists generators (the nondegenerate simplices) and, for
// each, its faces in Eilenberg-Zilber form (generator, surjection). Every
// simplex of the presented object is a pair (generator g, surjection
// [m] -> [dim g]); materialize() tabulates all of them up to a truncation.

#include <map>
#include <utility>
#include <vector>

#include "sset/sset.hpp"

namespace sset {

/// A simplex written as generator . epi, where epi : [m] -> [dim generator]
/// is a surjective monotone map given by its values.
struct EzCell {
  std::size_t generator = 0;
  std::vector<int> epi;

  int degree() const { return static_cast<int>(epi.size()) - 1; }
  friend auto operator<=>(const EzCell&, const EzCell&) = default;
};

struct Generator {
  int dim = 0;
  std::vector<EzCell> faces;  // d_0 .. d_dim, empty for vertices
};

class Presentation {
 public:
  std::size_t add_vertex();
  /// Adds a generator of dimension faces.size()-1. Faces must name existing
  /// generators and satisfy d_i d_j = d_{j-1} d_i; violations throw.
  std::size_t add(std::vector<EzCell> faces);

  const std::vector<Generator>& generators() const { return generators_; }
  int dim() const;

  /// Action of a monotone theta : [m] -> [degree of c] on an EZ cell.
  EzCell act(const EzCell& c, const std::vector<int>& theta) const;

  /// The identity-form cell of generator g.
  EzCell cell(std::size_t g) const;

 private:
  std::vector<Generator> generators_;
};

/// Tabulated presentation: the object plus the EZ form of every cell.
struct Materialized {
  TruncatedSSet object;
  std::vector<std::vector<EzCell>> form;              // form[n][x]
  std::vector<std::map<EzCell, Cell>> index;          // index[n][ez]
  std::vector<std::pair<int, Cell>> generator_cell;   // generator -> (degree, cell)

  Cell lookup(const EzCell& c) const;
};

Materialized materialize(const Presentation& p, int truncation);

/// Presentation of an existing object: generators are its nondegenerate
/// simplices in (degree, index) order.
struct Presented {
  Presentation presentation;
  std::vector<std::vector<EzCell>> form;  // EZ form of every cell of the input
};

Presented present(const TruncatedSSet& x);

/// Identity surjection [d] -> [d].
std::vector<int> identity_epi(int d);

/// All surjective monotone maps [m] -> [d] in lexicographic order.
std::vector<std::vector<int>> surjections(int m, int d);

/// Same object with its truncation raised to `truncation`, adding only
/// degenerate simplices. Requires the buffer degree.
Materialized extend_truncation(const TruncatedSSet& x, int truncation);

}  // namespace sset
