#pragma once

// Standard objects (simplices, boundaries, horns, circle, cyclic covers),
// disjoint unions, discrete objects and sub-objects.

#include <string>
#include <vector>

#include "sset/morphism.hpp"

namespace sset {

struct StandardObjectSpec {
  enum class Kind { simplex, boundary, horn, circle, cyclic_cover, disjoint_union };

  Kind kind = Kind::simplex;
  int n = 0;  // simplex/boundary/horn dimension, or the number of sheets of a cyclic cover
  int k = 0;  // horn index
  std::vector<StandardObjectSpec> parts;

  static StandardObjectSpec simplex(int n) { return {Kind::simplex, n, 0, {}}; }
  static StandardObjectSpec boundary(int n) { return {Kind::boundary, n, 0, {}}; }
  static StandardObjectSpec horn(int n, int k) { return {Kind::horn, n, k, {}}; }
  static StandardObjectSpec circle() { return {Kind::circle, 1, 0, {}}; }
  static StandardObjectSpec cyclic_cover(int sheets) { return {Kind::cyclic_cover, sheets, 0, {}}; }
  static StandardObjectSpec disjoint_union(std::vector<StandardObjectSpec> parts) {
    return {Kind::disjoint_union, 0, 0, std::move(parts)};
  }

  /// Checks parameter ranges; throws InputError.
  void check() const;
  int nondegenerate_dim() const;

  /// Text form: "simplex:2", "boundary:3", "horn:2:1", "circle",
  /// "cyclic-cover:3", parts joined by '+'.
  std::string to_string() const;
  static StandardObjectSpec parse(const std::string& text);
};

/// Requires truncation >= nondegenerate_dim + 1.
TruncatedSSet build_standard(const StandardObjectSpec& spec, int truncation);

/// Monotone maps [m] -> [n] in lexicographic order.
std::vector<std::vector<int>> monotone_maps(int m, int n);

/// Delta[n]: degree-m simplices are the monotone maps [m] -> [n], in lexicographic order.
TruncatedSSet simplex(int n, int truncation);
TruncatedSSet boundary(int n, int truncation);
TruncatedSSet horn(int n, int k, int truncation);
TruncatedSSet terminal(int truncation);

/// One-dimensional object from a directed multigraph; edge e = (source,
/// target) has d_1 e = source and d_0 e = target.
TruncatedSSet graph_object(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                           int truncation);
TruncatedSSet circle(int truncation);
/// C_k: vertices v_0..v_{k-1}, nondegenerate edges e_i : v_i -> v_{i+1 mod k}.
TruncatedSSet cyclic_cover(int sheets, int truncation);

/// `points` vertices and only their degeneracies.
TruncatedSSet discrete(std::size_t points, int truncation);

struct Coproduct {
  ObjectPtr object;
  SimplicialMap left;
  SimplicialMap right;
};

Coproduct disjoint_union(const ObjectPtr& x, const ObjectPtr& y);

/// Codiagonal B + ... + B -> B.
SimplicialMap fold_map(const ObjectPtr& b, int copies = 2);

SimplicialMap to_terminal(const ObjectPtr& x);

struct Subobject {
  ObjectPtr object;
  SimplicialMap inclusion;
};

/// Sub-object on the cells with keep[n][x] set; throws unless closed under
/// faces and degeneracies.
Subobject subobject(const ObjectPtr& x, const std::vector<std::vector<char>>& keep);

/// Smallest sub-object containing the given (degree, cell) simplices.
Subobject generated_subobject(const ObjectPtr& x, const std::vector<std::pair<int, Cell>>& seeds);

/// Delta[0] -> Delta[n] picking vertex v.
SimplicialMap vertex_inclusion(int n, int v, int truncation);

}  // namespace sset
