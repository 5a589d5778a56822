// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "support.hpp"

using namespace sset;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  failures += !o.pass;
  std::printf("%s criterion %d (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
              seconds_since(t0));
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const CampaignReport& campaign() {
  static const CampaignReport r = [] {
    GenConfig cfg;  // seed 42, max dim 2, max cells 6, 500 trials
    return run_campaign(cfg);
  }();
  return r;
}

}  // namespace

int main() {
  criterion(1, "separability: diagonal vs lifting", [] {
    const CampaignReport& r = campaign();
    return Outcome{r.theorem1_disagreements == 0 && r.scored > 0 && r.adequate() && campaign().seconds < 300,
                   fmt("%llu trials, %llu scored, %llu agree, %llu disagree, adequate=%d, campaign %.2fs",
                       (unsigned long long)r.trials, (unsigned long long)r.scored,
                       (unsigned long long)r.theorem1_agreements, (unsigned long long)r.theorem1_disagreements,
                       (int)r.adequate(), r.seconds)};
  });

  criterion(2, "separability vs covering on Kan maps", [] {
    const CampaignReport& r = campaign();
    return Outcome{r.theorem2_disagreements == 0 && r.kan_covering_missing_lift == 0 && r.theorem2_in_hypothesis > 0,
                   fmt("%llu Kan instances, %llu disagree, %llu covering failures without a fill-in",
                       (unsigned long long)r.theorem2_in_hypothesis, (unsigned long long)r.theorem2_disagreements,
                       (unsigned long long)r.kan_covering_missing_lift)};
  });

  criterion(3, "implication chain", [] {
    std::size_t fixture_violations = 0;
    const auto names = curated_fixtures();
    for (const std::string& name : names) fixture_violations += !implication_chain(build_fixture(name)).holds;
    const CampaignReport& r = campaign();
    return Outcome{r.chain_violations == 0 && fixture_violations == 0,
                   fmt("campaign violations %llu, curated fixtures %zu/%zu hold",
                       (unsigned long long)r.chain_violations, names.size() - fixture_violations, names.size())};
  });

  criterion(4, "injection test vs trivial covering", [] {
    const CampaignReport& r = campaign();
    return Outcome{r.injection_disagreements == 0 && r.injection_checked > 0,
                   fmt("%llu injective maps compared (%llu generated, rest diagonals), %llu disagree",
                       (unsigned long long)r.injection_checked, (unsigned long long)r.injective_maps,
                       (unsigned long long)r.injection_disagreements)};
  });

  criterion(5, "named instances", [] {
    struct Expect {
      const char* name;
      std::function<SimplicialMap()> build;
      int trivial, covering, kan, separable;  // -1: not specified
    };
    const std::vector<Expect> cases = {
        {"C2->circle", [] { return c2_to_circle(); }, 0, 1, 1, 1},
        {"Delta1->Delta0", [] { return interval_to_point(); }, -1, 0, 0, 0},
        {"fold Delta1+Delta1->Delta1", [] { return interval_fold(); }, 1, -1, -1, -1},
        {"circle x N(Z/2)->circle", [] { return circle_times_z2_projection(); }, -1, 0, 1, 0},
    };
    bool ok = true;
    double slowest = 0;
    std::string detail;
    for (const Expect& c : cases) {
      const auto t0 = Clock::now();
      const SimplicialMap h = c.build();
      const int got[4] = {trivial_covering_check(h).verdict, covering_check(h).verdict, kan_check(h).verdict,
                          separable_direct(h).verdict};
      const double dt = seconds_since(t0);
      slowest = std::max(slowest, dt);
      const int want[4] = {c.trivial, c.covering, c.kan, c.separable};
      bool match = dt < 1.0;
      for (int k = 0; k < 4; ++k) match = match && (want[k] < 0 || want[k] == got[k]);
      if (!match) detail += std::string(" mismatch on ") + c.name;
      ok = ok && match;
    }
    return Outcome{ok, fmt("4 instances, slowest %.3fs%s", slowest, detail.c_str())};
  });

  criterion(6, "structural oracles", [] {
    const UniversalPropertyResult up = check_pullback_universal_property();
    bool counts = true;
    for (int n = 0; n <= 4; ++n) {
      const TruncatedSSet d = simplex(n, 4);
      for (int m = 0; m <= 4; ++m) counts = counts && d.count(m) == brute_monotone_count(m, n);
    }
    bool connected = true;
    for (int n = 0; n <= 4; ++n) connected = connected && pi0(simplex(n, std::max(n, 1))).count == 1;
    return Outcome{up.failures == 0 && up.cones > 0 && counts && connected,
                   fmt("pullbacks: %zu cospans, %zu cones, %zu failures; simplex counts %s; components %s",
                       up.cospans, up.cones, up.failures, counts ? "ok" : "wrong", connected ? "ok" : "wrong")};
  });

  criterion(7, "witness soundness", [] {
    const CampaignReport& r = campaign();
    // Curated fixtures too, re-checked here directly.
    std::size_t emitted = 0, confirmed = 0;
    for (const std::string& name : curated_fixtures()) {
      const SimplicialMap h = build_fixture(name);
      for (const CheckReport& rep : {separable_direct(h), separable_via_lifting(h), covering_check(h), kan_check(h),
                                     trivial_covering_check(h)}) {
        if (!rep.witness) continue;
        ++emitted;
        confirmed += witness_holds(rep.stats.check, h, *rep.witness);
      }
    }
    return Outcome{r.witnesses_emitted == r.witnesses_confirmed && emitted == confirmed && r.witnesses_emitted > 0,
                   fmt("campaign %llu/%llu confirmed, fixtures %zu/%zu confirmed",
                       (unsigned long long)r.witnesses_confirmed, (unsigned long long)r.witnesses_emitted, confirmed,
                       emitted)};
  });

  std::printf("%s: %d of 7 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
