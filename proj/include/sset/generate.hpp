#pragma once

// Seeded random objects and maps, named fixtures, and the campaign that runs
// the equivalence checks over generated instances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sset/checks.hpp"
#include "sset/morphism.hpp"

namespace sset {

/// splitmix64 stream keyed by (seed, stream); streams are independent, so
/// trial i draws the same numbers regardless of scheduling.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  double unit();
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

enum class Family { gluing, covering, fold, nerve_product, corrupted };
inline constexpr int family_count = 5;
std::string family_name(Family f);

struct GenConfig {
  std::uint64_t seed = 42;
  int max_nondegenerate_dim = 2;
  int max_cells_per_degree = 6;  // nondegenerate simplices per degree
  std::size_t trials = 500;
  /// Weights in Family order.
  std::vector<double> fixture_mix = {1, 1, 1, 1, 1};

  /// Throws InputError on negative weights, all-zero weights or bounds out of range.
  void check() const;
};

/// Random object: a random presentation (faces drawn among compatible
/// tuples of the lower skeleton) materialized one degree above its top
/// generator. Uses stream 0 of the seed.
TruncatedSSet gen_sset(const GenConfig& cfg);
TruncatedSSet gen_sset(const GenConfig& cfg, Rng& rng, int truncation = -1);

struct Instance {
  Family family = Family::gluing;
  std::string strategy;
  std::optional<SimplicialMap> map;  // empty when the draw was rejected
  std::string rejection;
  bool require_buffer = true;        // false for fixtures built from nerves
};

/// Instance for one trial, drawn from stream `trial` of the seed.
Instance gen_instance(const GenConfig& cfg, std::uint64_t trial);

/// First valid instance among trials 0, 1, ... with corrupted draws excluded.
SimplicialMap gen_morphism(const GenConfig& cfg);

/// Named maps: "cyclic-cover:k" (C_k -> circle), "simplex-to-point:n",
/// "fold:<object spec>", "nerve-projection:k" (circle x nerve(Z/k) -> circle),
/// "horn-inclusion:n:k", "boundary-inclusion:n".
SimplicialMap build_fixture(const std::string& name);
std::vector<std::string> curated_fixtures();

struct Disagreement {
  std::uint64_t trial = 0;
  std::string family;
  std::string statement;
  std::vector<std::string> issues;
  nlohmann::ordered_json instance;  // map file contents
  nlohmann::ordered_json reports;
};

struct CampaignReport {
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0;
  std::uint64_t scored = 0;
  std::vector<std::uint64_t> per_family = std::vector<std::uint64_t>(family_count, 0);

  std::uint64_t theorem1_agreements = 0;
  std::uint64_t theorem1_disagreements = 0;
  std::uint64_t theorem2_in_hypothesis = 0;
  std::uint64_t theorem2_agreements = 0;
  std::uint64_t theorem2_disagreements = 0;
  std::uint64_t kan_covering_missing_lift = 0;  // covering failures of Kan maps that are not AmbiguousLift
  std::uint64_t chain_violations = 0;
  std::uint64_t injective_maps = 0;
  std::uint64_t injection_checked = 0;  // injective maps and diagonals compared
  std::uint64_t injection_disagreements = 0;
  std::uint64_t witnesses_emitted = 0;
  std::uint64_t witnesses_confirmed = 0;

  // Class adequacy.
  std::uint64_t separable_coverings = 0;
  std::uint64_t non_separable_kan = 0;
  std::uint64_t trivial_coverings = 0;
  std::uint64_t non_kan = 0;

  std::vector<Disagreement> disagreements;
  double seconds = 0;  // excluded from comparisons

  bool adequate() const;
  /// No disagreement of any kind and every witness confirmed.
  bool passed() const;
  void merge(const CampaignReport& other);
};

CampaignReport run_campaign(const GenConfig& cfg);

/// Everything except runtime.
nlohmann::ordered_json campaign_to_json(const CampaignReport& r, bool include_runtime = true);

/// One directory per disagreement holding map.json and report.json.
void write_disagreement_bundles(const CampaignReport& r, const std::string& directory);

}  // namespace sset
