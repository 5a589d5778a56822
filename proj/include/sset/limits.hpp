#pragma once

// Degreewise pullbacks, products and the diagonal into a kernel pair.

#include <optional>
#include <utility>
#include <vector>

#include "sset/morphism.hpp"

namespace sset {

/// X x_B Y for f : X -> B and g : Y -> B. Degree-n cells are the pairs
/// (x1, x2) with f(x1) = g(x2), indexed in lexicographic order.
struct FiberProduct {
  ObjectPtr object;
  SimplicialMap pr1;
  SimplicialMap pr2;

  /// pairs[n][c] is the pair behind cell c.
  std::vector<std::vector<std::pair<Cell, Cell>>> pairs;

  /// row_start[n][x1] is the first pair index with first component x1.
  std::vector<std::vector<std::size_t>> row_start;

  std::optional<Cell> index_of(int n, Cell x1, Cell x2) const;
};

FiberProduct pullback(const SimplicialMap& f, const SimplicialMap& g);

/// Delta = <1_A, 1_A> : A -> A x_B A together with its image D.
struct DiagonalData {
  FiberProduct kernel_pair;
  SimplicialMap delta;
  std::vector<std::vector<char>> image;  // image[n][c] set iff c = (x, x)
};

DiagonalData diagonal(const SimplicialMap& h);

/// X x Y, the pullback over Delta[0].
FiberProduct product(const ObjectPtr& x, const ObjectPtr& y);

}  // namespace sset
