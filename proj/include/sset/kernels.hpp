#pragma once

// Scan kernels behind the lifting, fill-in, horn and component checks.
//
// Each kernel has two implementations that must return identical results:
// a serial reference that follows the definition literally (pairwise or
// linear scans, its own vertex and component computations), and a
// bucketed OpenMP version used by the checks. Witnesses are always the
// lexicographically least violation in the kernel's documented order, so
// the parallel reduction is deterministic.

#include <cstdint>
#include <optional>
#include <vector>

#include "sset/morphism.hpp"
#include "sset/report.hpp"

namespace sset::kernels {

enum class Execution { serial_reference, parallel };

/// Distinct x1 < x2 in A_n with h(x1) = h(x2) and equal j-th vertices.
/// Order: (n, j, u, a, x1, x2).
std::optional<AmbiguousLift> ambiguous_pair_scan(const SimplicialMap& h, Execution mode,
                                                 std::uint64_t* examined = nullptr);

/// For every (n, j, u in B_n, a in A_0 over the j-th vertex of u): exactly
/// one x in A_n with h(x) = u and j-th vertex a. Order: (n, j, u, a).
/// Yields MissingLift (fill-in) or AmbiguousLift with the two least lifts.
std::optional<Witness> fill_in_scan(const SimplicialMap& h, Execution mode, std::uint64_t* examined = nullptr);

/// For 1 <= n <= bound, 0 <= k <= n, u in B_n: every compatible horn
/// (y_i)_{i != k} over the faces of u has a filler over u.
/// Order: (n, k, u, horn tuple).
std::optional<MissingLift> horn_scan(const SimplicialMap& h, int bound, Execution mode,
                                     std::uint64_t* examined = nullptr);

/// Cells outside `image` whose component meets `image`. Order: (degree, cell).
std::optional<ComponentLeak> leak_scan(const TruncatedSSet& target, const std::vector<std::vector<char>>& image,
                                       Execution mode, std::uint64_t* examined = nullptr);

/// j-th vertex via d_n ... d_{j+1} then d_0 repeated: the face composite
/// used by the serial references, independent of TruncatedSSet::vertex_of.
Cell vertex_by_trailing_faces(const TruncatedSSet& x, int n, Cell cell, int j);

/// Component labels from breadth-first search on the 1-skeleton, numbered
/// by least vertex.
std::vector<Cell> components_by_search(const TruncatedSSet& x);

}  // namespace sset::kernels
