#pragma once

// Finite truncated simplicial sets stored as explicit face/degeneracy tables.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sset {

using Cell = std::uint32_t;

/// Thrown for malformed input: bad table shapes, out-of-range indices,
/// mismatched truncations, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-degree table: table[i][x] is the image of simplex x under the i-th operator.
using OperatorTable = std::vector<std::vector<Cell>>;

/// A simplicial set stored up to degree `truncation`. Every simplex,
/// degenerate or not, is materialized; a simplex is its index within its
/// degree. Instances are immutable once constructed.
class TruncatedSSet {
 public:
  TruncatedSSet() = default;

  /// Builds an object from raw tables. `faces[n]` holds d_0..d_n on degree n
  /// (faces[0] must be empty), `degeneracies[n]` holds s_0..s_n on degree n
  /// for n < truncation. Shapes and index ranges are checked here; the
  /// simplicial identities are checked by validate().
  TruncatedSSet(int truncation, std::vector<std::size_t> counts,
                std::vector<OperatorTable> faces,
                std::vector<OperatorTable> degeneracies);

  /// The empty simplicial set truncated at `truncation`.
  static TruncatedSSet empty(int truncation);

  int truncation() const { return truncation_; }
  std::size_t count(int n) const { return counts_.at(n); }
  const std::vector<std::size_t>& counts() const { return counts_; }
  bool is_empty() const { return counts_.empty() || counts_[0] == 0; }

  Cell face(int n, int i, Cell x) const { return faces_[n][i][x]; }
  Cell degeneracy(int n, int i, Cell x) const { return degeneracies_[n][i][x]; }

  const OperatorTable& faces(int n) const { return faces_.at(n); }
  const OperatorTable& degeneracies(int n) const { return degeneracies_.at(n); }

  /// j-th vertex of x: d_0 applied j times, then d_1 down to degree 0.
  Cell vertex_of(int n, Cell x, int j) const;

  /// True iff x lies in the image of some s_i.
  bool is_degenerate(int n, Cell x) const;

  /// Largest degree holding a nondegenerate simplex; -1 for the empty object.
  int nondegenerate_dim() const;

  /// Action of a monotone map theta: [m] -> [n] (given by its values) on an
  /// n-simplex, yielding an m-simplex. Both degrees must be stored.
  Cell apply(int n, Cell x, const std::vector<int>& theta) const;

  friend bool operator==(const TruncatedSSet&, const TruncatedSSet&) = default;

 private:
  int truncation_ = 0;
  std::vector<std::size_t> counts_;
  std::vector<OperatorTable> faces_;
  std::vector<OperatorTable> degeneracies_;
};

struct ValidationOptions {
  /// Require every top-degree simplex to be degenerate (one buffer degree
  /// above the nondegenerate dimension). Objects with nondegenerate data in
  /// every degree (nerves) are checked with this off.
  bool require_buffer = true;
};

/// First violated identity, if any.
struct IdentityViolation {
  std::string identity;  // e.g. "d_i d_j = d_{j-1} d_i"
  int degree = 0;        // degree of the simplex the identity is evaluated on
  int i = 0;
  int j = 0;
  Cell simplex = 0;
};

struct ValidationReport {
  bool ok = true;
  std::optional<IdentityViolation> violation;
  std::string message;  // human-readable summary of the failure
};

ValidationReport validate(const TruncatedSSet& x, ValidationOptions options = {});

/// Eilenberg-Zilber normal form x = s_{i_1} ... s_{i_k} y with y
/// nondegenerate and i_1 > ... > i_k (outermost first).
struct NormalForm {
  int base_degree = 0;
  Cell base = 0;
  std::vector<int> degeneracies;
};

NormalForm normal_form(const TruncatedSSet& x, int n, Cell cell);

/// Number of monotone maps [m] -> [n], i.e. C(n+m+1, n).
std::size_t monotone_count(int m, int n);

}  // namespace sset
