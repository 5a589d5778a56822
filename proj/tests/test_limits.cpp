#include <gtest/gtest.h>

#include "support.hpp"

using namespace sset;
using namespace testing_support;

namespace {

std::size_t nondegenerate_count(const TruncatedSSet& x, int n) {
  std::size_t k = 0;
  for (Cell c = 0; c < x.count(n); ++c) k += !x.is_degenerate(n, c);
  return k;
}

}  // namespace

TEST(Pullback, KernelPairOfIdentity) {
  auto s1 = share(circle(2));
  const FiberProduct p = pullback(identity_map(s1), identity_map(s1));
  EXPECT_EQ(p.object->counts(), s1->counts());
  EXPECT_TRUE(classify(p.pr1).isomorphism);
  for (int n = 0; n <= 2; ++n)
    for (const auto& [a, b] : p.pairs[n]) EXPECT_EQ(a, b);
}

TEST(Pullback, KernelPairOfDoubleCover) {
  const SimplicialMap h = c2_to_circle();
  const FiberProduct p = pullback(h, h);
  EXPECT_EQ(p.object->count(0), 4u);
  EXPECT_EQ(nondegenerate_count(*p.object, 1), 4u);
  EXPECT_TRUE(validate(*p.object).ok);
}

TEST(Pullback, DisjointVertexInclusions) {
  const FiberProduct p = pullback(vertex_inclusion(1, 0, 2), vertex_inclusion(1, 1, 2));
  EXPECT_TRUE(p.object->is_empty());
}

TEST(Pullback, IndexOf) {
  const SimplicialMap h = c2_to_circle();
  const FiberProduct p = pullback(h, h);
  for (int n = 0; n <= 2; ++n) {
    for (Cell c = 0; c < p.pairs[n].size(); ++c)
      EXPECT_EQ(p.index_of(n, p.pairs[n][c].first, p.pairs[n][c].second), c);
    // lexicographic order
    for (Cell c = 1; c < p.pairs[n].size(); ++c) EXPECT_LT(p.pairs[n][c - 1], p.pairs[n][c]);
  }
  // s_0 v_0 and e_0 lie over different simplices of the circle.
  EXPECT_FALSE(p.index_of(1, 0, 2).has_value());
}

TEST(Pullback, StructureOnRandomCospans) {
  Rng rng(21, 0);
  for (const Instance& inst : corpus(12, 80)) {
    const SimplicialMap& h = *inst.map;
    // Second leg: another random map into the same target, or the identity.
    SimplicialMap g = identity_map(h.target_ptr());
    if (rng.below(2)) {
      auto other = share(gen_sset(GenConfig{}, rng, h.truncation()));
      if (auto m = random_map_between(other, h.target_ptr(), rng)) g = *m;
    }
    const FiberProduct p = pullback(h, g);
    EXPECT_TRUE(natural(p.pr1));
    EXPECT_TRUE(natural(p.pr2));
    EXPECT_TRUE(identities_hold(*p.object));
    EXPECT_TRUE(compose(h, p.pr1) == compose(g, p.pr2));
    // Every pair with equal images is present.
    for (int n = 0; n <= h.truncation(); ++n) {
      std::size_t expected = 0;
      for (Cell a = 0; a < h.source().count(n); ++a)
        for (Cell b = 0; b < g.source().count(n); ++b) expected += h(n, a) == g(n, b);
      EXPECT_EQ(p.object->count(n), expected);
    }
  }
}

TEST(Pullback, UniversalPropertyOnSmallCospans) {
  const UniversalPropertyResult r = check_pullback_universal_property();
  EXPECT_GT(r.cones, 50u);
  EXPECT_EQ(r.failures, 0u);
}

TEST(Diagonal, Examples) {
  auto s1 = share(circle(2));
  const DiagonalData id = diagonal(identity_map(s1));
  EXPECT_TRUE(classify(id.delta).isomorphism);

  const DiagonalData cover = diagonal(c2_to_circle());
  ASSERT_EQ(cover.image[0].size(), 4u);
  EXPECT_EQ(std::count(cover.image[0].begin(), cover.image[0].end(), 1), 2);

  // Delta[1] -> Delta[0]: kernel pair is Delta[1] x Delta[1]; the diagonal
  // hits the 3 pairs (x, x) among the 9 one-simplices.
  const DiagonalData crush = diagonal(interval_to_point());
  EXPECT_EQ(crush.kernel_pair.object->count(1), 9u);
  EXPECT_EQ(std::count(crush.image[1].begin(), crush.image[1].end(), 1), 3);
}

TEST(Diagonal, SplitsBothProjectionsAndIsInjective) {
  for (const Instance& inst : corpus(13, 120)) {
    const DiagonalData d = diagonal(*inst.map);
    const SimplicialMap id = identity_map(inst.map->source_ptr());
    EXPECT_TRUE(compose(d.kernel_pair.pr1, d.delta) == id);
    EXPECT_TRUE(compose(d.kernel_pair.pr2, d.delta) == id);
    EXPECT_TRUE(classify(d.delta).injective);
    for (int n = 0; n <= inst.map->truncation(); ++n)
      for (Cell c = 0; c < d.kernel_pair.pairs[n].size(); ++c) {
        const auto [a, b] = d.kernel_pair.pairs[n][c];
        EXPECT_EQ(d.image[n][c] != 0, a == b);
      }
  }
}

TEST(Product, Examples) {
  auto s1 = share(circle(2));
  auto point = share(simplex(0, 2));
  EXPECT_TRUE(classify(product(s1, point).pr1).isomorphism);
  EXPECT_TRUE(classify(product(point, point).pr1).isomorphism);
  EXPECT_EQ(product(point, point).object->counts(), point->counts());
  auto d1 = share(simplex(1, 2));
  EXPECT_EQ(product(d1, d1).object->count(1), 9u);
  // Delta[1] x Delta[1] is a square: two nondegenerate triangles.
  EXPECT_EQ(nondegenerate_count(*product(d1, d1).object, 2), 2u);
}
