#pragma once

// Check verdicts with self-describing witnesses, and their JSON/text renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sset/sset.hpp"

namespace sset {

/// Two distinct n-simplices x1 < x2 over the same u that share their j-th
/// vertex a: the square with corner a and bottom u has two diagonals.
struct AmbiguousLift {
  int n = 0;
  int j = 0;
  Cell u = 0;
  Cell a = 0;
  Cell x1 = 0;
  Cell x2 = 0;
  friend bool operator==(const AmbiguousLift&, const AmbiguousLift&) = default;
};

/// A lifting problem with no solution. For a fill-in problem, `index` is
/// the vertex j and `a` the prescribed vertex; for a horn problem, `index`
/// is k and `horn` lists y_i for i != k in increasing i.
struct MissingLift {
  enum class Problem { fill_in, horn };
  Problem problem = Problem::fill_in;
  int n = 0;
  int index = 0;
  Cell u = 0;
  Cell a = 0;
  std::vector<Cell> horn;
  friend bool operator==(const MissingLift&, const MissingLift&) = default;
};

/// A cell of the target outside the image whose component meets the image.
struct ComponentLeak {
  Cell component = 0;
  int degree = 0;
  Cell cell = 0;
  friend bool operator==(const ComponentLeak&, const ComponentLeak&) = default;
};

/// Failure of A -> B x_{pi0 B} pi0 A to be bijective in some degree.
/// not_injective: `first` and `second` are cells of A with the same image.
/// not_surjective: the pair (first = cell of B, second = component of A) is missed.
struct ComparisonFailure {
  enum class Kind { not_injective, not_surjective };
  Kind kind = Kind::not_injective;
  int degree = 0;
  Cell first = 0;
  Cell second = 0;
  friend bool operator==(const ComparisonFailure&, const ComparisonFailure&) = default;
};

using Witness = std::variant<AmbiguousLift, MissingLift, ComponentLeak, ComparisonFailure>;

struct CheckStats {
  std::string check;
  std::uint64_t examined = 0;  // lifting problems, pairs or cells inspected
};

struct CheckReport {
  bool verdict = true;
  std::optional<Witness> witness;
  CheckStats stats;
};

std::string witness_kind(const Witness& w);

/// {"kind": ..., fields...}; the single source for both renderings.
nlohmann::ordered_json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::ordered_json& j);

/// {"verdict": bool, "witness": {...} (only when false), "stats": {...}}
nlohmann::ordered_json report_to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::ordered_json& j);

std::string render_text(const CheckReport& r);

}  // namespace sset
