#pragma once

// Morphism classifiers: separability (via the diagonal and via lifting),
// covering maps, Kan fibrations, and the equivalence verdicts between them.
//
// All quantifiers range over the stored degrees n <= truncation.

#include <optional>
#include <string>
#include <vector>

#include "sset/kernels.hpp"
#include "sset/morphism.hpp"
#include "sset/report.hpp"

namespace sset {

using kernels::Execution;

/// The diagonal A -> A x_B A is cartesian for the components reflection,
/// decided by the component-containment test on the (injective) diagonal.
CheckReport separable_direct(const SimplicialMap& h);

/// Separability for the fundamental-groupoid structure: the diagonal is an
/// injection, so its cartesianness reduces to the components test; the
/// morphism must additionally be a Kan fibration.
struct Gamma2Separability {
  CheckReport diagonal;
  CheckReport kan;
  bool verdict = false;
};
Gamma2Separability separable_for_groupoids(const SimplicialMap& h);

/// Lifting form: any two n-simplices over the same u that share their
/// j-th vertex are equal.
CheckReport separable_via_lifting(const SimplicialMap& h, Execution mode = Execution::parallel);

/// Unique fill-in for every square Delta[0] -> A, Delta[n] -> B with the
/// vertex inclusion at any j.
CheckReport covering_check(const SimplicialMap& h, Execution mode = Execution::parallel);

/// Horn filling over B up to `bound` (default: the truncation).
CheckReport kan_check(const SimplicialMap& h, std::optional<int> bound = std::nullopt,
                      Execution mode = Execution::parallel);

struct AgreementReport {
  std::string statement;      // "theorem1" or "theorem2"
  bool in_hypothesis = true;  // theorem2 requires a Kan fibration
  bool agree = true;
  CheckReport left;
  CheckReport right;
  std::optional<CheckReport> hypothesis;  // the kan_check run for theorem2
  std::vector<std::string> issues;
};

/// separable_direct vs separable_via_lifting.
AgreementReport theorem1_verdict(const SimplicialMap& h);

/// For a Kan fibration: separable_direct vs covering_check, and every
/// covering failure must be an ambiguous lift (a fill-in always exists).
AgreementReport theorem2_verdict(const SimplicialMap& h);

/// trivial covering => covering => Kan (bounded), covering => separable.
struct ChainReport {
  bool holds = true;
  CheckReport trivial_covering;
  CheckReport covering;
  CheckReport kan;
  CheckReport separable;
  std::vector<std::string> violations;
};
ChainReport implication_chain(const SimplicialMap& h);

/// Re-derives a witness from the raw tables with the serial reference
/// predicates. `check` is the stats.check name of the report carrying it.
bool witness_holds(const std::string& check, const SimplicialMap& h, const Witness& w);

nlohmann::ordered_json agreement_to_json(const AgreementReport& r);
nlohmann::ordered_json chain_to_json(const ChainReport& r);

}  // namespace sset
