#include <gtest/gtest.h>

#include "support.hpp"

using namespace sset;
using namespace testing_support;

namespace {

struct Verdicts {
  bool trivial_covering, covering, kan, separable;
};

Verdicts verdicts(const SimplicialMap& h) {
  return {trivial_covering_check(h).verdict, covering_check(h).verdict, kan_check(h).verdict,
          separable_direct(h).verdict};
}

void expect_same(const CheckReport& a, const CheckReport& b) {
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.witness, b.witness);
}

/// Every report a campaign trial would emit for h, labelled by check name.
std::vector<CheckReport> all_reports(const SimplicialMap& h) {
  std::vector<CheckReport> out = {separable_direct(h), separable_via_lifting(h), covering_check(h), kan_check(h),
                                  trivial_covering_check(h)};
  const SimplicialMap delta = diagonal(h).delta;
  out.push_back(injection_cartesian_check(delta));
  return out;
}

const SimplicialMap& subject_of(const CheckReport& r, const SimplicialMap& h, const SimplicialMap& delta) {
  return r.stats.check == "injection-cartesian" ? delta : h;
}

}  // namespace

TEST(Named, DoubleCoverOfCircle) {
  const Verdicts v = verdicts(c2_to_circle());
  EXPECT_TRUE(v.covering);
  EXPECT_TRUE(v.separable);
  EXPECT_TRUE(v.kan);
  EXPECT_FALSE(v.trivial_covering);
  EXPECT_TRUE(separable_via_lifting(c2_to_circle()).verdict);
}

TEST(Named, IntervalToPoint) {
  const SimplicialMap h = interval_to_point();
  const Verdicts v = verdicts(h);
  EXPECT_FALSE(v.covering);
  EXPECT_FALSE(v.separable);
  EXPECT_FALSE(v.kan);

  const CheckReport lift = separable_via_lifting(h);
  ASSERT_TRUE(lift.witness);
  EXPECT_EQ(std::get<AmbiguousLift>(*lift.witness), (AmbiguousLift{1, 0, 0, 0, 0, 1}));
  const CheckReport cover = covering_check(h);
  ASSERT_TRUE(cover.witness);
  EXPECT_EQ(std::get<AmbiguousLift>(*cover.witness), (AmbiguousLift{1, 0, 0, 0, 0, 1}));
  const CheckReport kan = kan_check(h);
  ASSERT_TRUE(kan.witness);
  const auto& horn = std::get<MissingLift>(*kan.witness);
  EXPECT_EQ(horn.problem, MissingLift::Problem::horn);
  EXPECT_EQ(horn.n, 2);
  EXPECT_EQ(horn.index, 0);
}

TEST(Named, FoldOfInterval) {
  const Verdicts v = verdicts(interval_fold());
  EXPECT_TRUE(v.trivial_covering);
  EXPECT_TRUE(v.covering);
  EXPECT_TRUE(v.kan);
  EXPECT_TRUE(v.separable);
}

TEST(Named, CircleTimesNerveProjection) {
  const SimplicialMap h = circle_times_z2_projection();
  const Verdicts v = verdicts(h);
  EXPECT_TRUE(v.kan);
  EXPECT_FALSE(v.covering);
  EXPECT_FALSE(v.separable);
  EXPECT_FALSE(v.trivial_covering);
  // A Kan map that is not a covering fails by ambiguity, never by a missing fill-in.
  EXPECT_TRUE(std::holds_alternative<AmbiguousLift>(*covering_check(h).witness));
}

TEST(Named, FixturesMatchHandBuiltMaps) {
  EXPECT_TRUE(build_fixture("cyclic-cover:2").levels() == extend_map(c2_to_circle(), 3).levels());
  EXPECT_TRUE(build_fixture("nerve-projection:2") == circle_times_z2_projection());
  for (const std::string& name : curated_fixtures()) EXPECT_TRUE(validate_map(build_fixture(name)).ok) << name;
}

TEST(Named, VertexInclusionsAreNotCoverings) {
  // Delta[0] -> Delta[1]: the edge has no lift at all.
  const CheckReport r = covering_check(vertex_inclusion(1, 0, 2));
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(std::get<MissingLift>(*r.witness).problem, MissingLift::Problem::fill_in);
  EXPECT_TRUE(separable_direct(vertex_inclusion(1, 0, 2)).verdict);
}

TEST(Statements, AgreeOnExamples) {
  for (const SimplicialMap& h : {c2_to_circle(), interval_to_point(), interval_fold(), circle_times_z2_projection()}) {
    const AgreementReport t1 = theorem1_verdict(h);
    EXPECT_TRUE(t1.agree) << ::testing::PrintToString(t1.issues);
    const AgreementReport t2 = theorem2_verdict(h);
    EXPECT_TRUE(t2.agree) << ::testing::PrintToString(t2.issues);
    EXPECT_TRUE(implication_chain(h).holds);
  }
  EXPECT_FALSE(theorem2_verdict(interval_to_point()).in_hypothesis);
  EXPECT_TRUE(theorem2_verdict(circle_times_z2_projection()).in_hypothesis);
}

TEST(Statements, GroupoidSeparabilityNeedsKan) {
  const Gamma2Separability cover = separable_for_groupoids(c2_to_circle());
  EXPECT_TRUE(cover.verdict);
  const Gamma2Separability crush = separable_for_groupoids(interval_to_point());
  EXPECT_FALSE(crush.verdict);
  EXPECT_FALSE(crush.kan.verdict);
  // Delta[0] -> Delta[1] has a cartesian diagonal but is not Kan.
  const Gamma2Separability inclusion = separable_for_groupoids(vertex_inclusion(1, 0, 2));
  EXPECT_TRUE(inclusion.diagonal.verdict);
  EXPECT_FALSE(inclusion.verdict);
}

TEST(Statements, HoldOnGeneratedMaps) {
  for (const Instance& inst : corpus(61, 200)) {
    const SimplicialMap& h = *inst.map;
    EXPECT_TRUE(theorem1_verdict(h).agree) << inst.strategy;
    const AgreementReport t2 = theorem2_verdict(h);
    EXPECT_TRUE(t2.agree) << inst.strategy;
    EXPECT_EQ(t2.in_hypothesis, kan_check(h).verdict);
    EXPECT_TRUE(implication_chain(h).holds) << inst.strategy;
  }
}

TEST(Kernels, SerialAndParallelAgree) {
  for (const Instance& inst : corpus(67, 200)) {
    const SimplicialMap& h = *inst.map;
    expect_same(separable_via_lifting(h, Execution::serial_reference), separable_via_lifting(h, Execution::parallel));
    expect_same(covering_check(h, Execution::serial_reference), covering_check(h, Execution::parallel));
    expect_same(kan_check(h, std::nullopt, Execution::serial_reference),
                kan_check(h, std::nullopt, Execution::parallel));
    const DiagonalData d = diagonal(h);
    EXPECT_EQ(kernels::leak_scan(*d.kernel_pair.object, d.image, Execution::serial_reference),
              kernels::leak_scan(*d.kernel_pair.object, d.image, Execution::parallel));
  }
}

TEST(Kernels, ExaminedCountsMatch) {
  for (const Instance& inst : corpus(71, 60)) {
    const SimplicialMap& h = *inst.map;
    std::uint64_t serial = 0, parallel = 0;
    kernels::fill_in_scan(h, Execution::serial_reference, &serial);
    kernels::fill_in_scan(h, Execution::parallel, &parallel);
    // Both stop at the same least violation or scan everything.
    if (!kernels::fill_in_scan(h, Execution::parallel)) { EXPECT_EQ(serial, parallel); }
  }
}

TEST(BoundedDegrees, VerdictsStableUnderExtension) {
  // Adding one degree of degenerate simplices changes no verdict.
  std::size_t checked = 0;
  for (const Instance& inst : corpus(73, 200, {1, 1, 1, 0, 0})) {
    const SimplicialMap& h = *inst.map;
    if (h.truncation() >= 3) continue;
    const SimplicialMap g = extend_map(h, h.truncation() + 1);
    ASSERT_TRUE(validate_map(g).ok);
    EXPECT_EQ(separable_direct(h).verdict, separable_direct(g).verdict) << inst.strategy;
    EXPECT_EQ(separable_via_lifting(h).verdict, separable_via_lifting(g).verdict) << inst.strategy;
    EXPECT_EQ(covering_check(h).verdict, covering_check(g).verdict) << inst.strategy;
    EXPECT_EQ(trivial_covering_check(h).verdict, trivial_covering_check(g).verdict) << inst.strategy;
    EXPECT_EQ(kan_check(h).verdict, kan_check(g).verdict) << inst.strategy;
    ++checked;
  }
  EXPECT_GT(checked, 30u);
}

TEST(Witnesses, PresentExactlyWhenFalseAndConfirmed) {
  std::size_t emitted = 0;
  for (const Instance& inst : corpus(79, 250, {1, 1, 1, 1, 1})) {
    const SimplicialMap& h = *inst.map;
    const SimplicialMap delta = diagonal(h).delta;
    for (const CheckReport& r : all_reports(h)) {
      EXPECT_EQ(r.witness.has_value(), !r.verdict) << r.stats.check;
      if (!r.witness) continue;
      ++emitted;
      EXPECT_TRUE(witness_holds(r.stats.check, subject_of(r, h, delta), *r.witness))
          << r.stats.check << " " << witness_to_json(*r.witness).dump();
    }
  }
  EXPECT_GT(emitted, 200u);
}

TEST(Witnesses, MutatedWitnessesRejected) {
  // Negative controls: the re-check must not accept nearby wrong data.
  const SimplicialMap crush = interval_to_point();
  AmbiguousLift a{1, 0, 0, 0, 0, 1};
  ASSERT_TRUE(witness_holds("separable-lifting", crush, a));
  AmbiguousLift same = a;
  same.x2 = same.x1;
  EXPECT_FALSE(witness_holds("separable-lifting", crush, same));
  AmbiguousLift wrong_vertex = a;
  wrong_vertex.j = 1;  // (0,0) and (0,1) do not share vertex 1
  EXPECT_FALSE(witness_holds("separable-lifting", crush, wrong_vertex));
  AmbiguousLift out_of_range = a;
  out_of_range.x2 = 99;
  EXPECT_FALSE(witness_holds("separable-lifting", crush, out_of_range));

  // A horn on C_2 -> circle: it is Kan, so no horn witness holds.
  const SimplicialMap cover = c2_to_circle();
  EXPECT_FALSE(witness_holds("kan", cover, MissingLift{MissingLift::Problem::horn, 2, 0, 0, 0, {0, 0}}));
  EXPECT_FALSE(witness_holds("covering", cover, MissingLift{MissingLift::Problem::fill_in, 1, 0, 1, 0, {}}));
  EXPECT_FALSE(witness_holds("covering", cover, a));

  const SimplicialMap delta = diagonal(crush).delta;
  ASSERT_TRUE(witness_holds("injection-cartesian", delta, ComponentLeak{0, 0, 1}));
  EXPECT_FALSE(witness_holds("injection-cartesian", delta, ComponentLeak{0, 0, 0}));  // (0,0) is on the diagonal
  EXPECT_FALSE(witness_holds("injection-cartesian", delta, ComponentLeak{1, 0, 1}));  // wrong component

  EXPECT_FALSE(witness_holds("trivial-covering", cover,
                             ComparisonFailure{ComparisonFailure::Kind::not_injective, 0, 0, 0}));
  EXPECT_FALSE(witness_holds("trivial-covering", interval_fold(),
                             ComparisonFailure{ComparisonFailure::Kind::not_surjective, 0, 0, 0}));

  // Random single-field mutations of genuine witnesses.
  Rng rng(83, 0);
  std::size_t rejected = 0, tried = 0;
  for (const Instance& inst : corpus(83, 150)) {
    const SimplicialMap& h = *inst.map;
    const CheckReport r = separable_via_lifting(h);
    if (!r.witness) continue;
    AmbiguousLift w = std::get<AmbiguousLift>(*r.witness);
    w.x2 = w.x1;
    ++tried;
    rejected += !witness_holds(r.stats.check, h, w);
    w = std::get<AmbiguousLift>(*r.witness);
    w.u = static_cast<Cell>((w.u + 1 + rng.below(3)) % (h.target().count(w.n) + 1));
    if (w.u != std::get<AmbiguousLift>(*r.witness).u) {
      ++tried;
      rejected += !witness_holds(r.stats.check, h, w);
    }
  }
  EXPECT_GT(tried, 20u);
  EXPECT_EQ(rejected, tried);
}

TEST(Checks, EmptySource) {
  auto empty = share(TruncatedSSet::empty(2));
  const SimplicialMap h = extend_from_generators(empty, share(circle(2)), {});
  EXPECT_TRUE(separable_direct(h).verdict);
  EXPECT_TRUE(separable_via_lifting(h).verdict);
  EXPECT_TRUE(covering_check(h).verdict);
  EXPECT_TRUE(trivial_covering_check(h).verdict);
  // No horn in an empty object.
  EXPECT_TRUE(kan_check(h).verdict);
  EXPECT_TRUE(implication_chain(h).holds);
}
