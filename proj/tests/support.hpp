#pragma once

// Fixtures and independent oracles shared by the unit tests and the
// acceptance runner. Nothing here calls the code it is used to check.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sset/checks.hpp"
#include "sset/generate.hpp"
#include "sset/groupoid.hpp"
#include "sset/limits.hpp"
#include "sset/pi0.hpp"
#include "sset/presentation.hpp"
#include "sset/standard.hpp"

namespace testing_support {

using namespace sset;

// ------------------------------------------------------------ fixtures

/// C_2 -> circle, all vertices to v, e_i to e.
inline SimplicialMap c2_to_circle(int truncation = 2) {
  auto c2 = share(cyclic_cover(2, truncation));
  auto s1 = share(circle(truncation));
  // Generators of C_2: v_0, v_1, e_0, e_1. The circle's edge is cell 1.
  return extend_from_generators(c2, s1, {0, 0, 1, 1});
}

inline SimplicialMap interval_to_point(int truncation = 2) { return to_terminal(share(simplex(1, truncation))); }

inline SimplicialMap interval_fold(int truncation = 2) { return fold_map(share(simplex(1, truncation))); }

inline SimplicialMap circle_times_z2_projection(int truncation = 3) {
  return product(share(circle(truncation)), share(nerve(FiniteGroupoid::cyclic_group(2), truncation))).pr1;
}

/// Delta[0] -> X at vertex v.
inline SimplicialMap point_at(const ObjectPtr& x, Cell v) {
  return extend_from_generators(share(simplex(0, x->truncation())), x, {v});
}

// ------------------------------------------------------------ random streams

/// Valid maps from the generator; nerve-based ones included.
inline std::vector<Instance> corpus(std::uint64_t seed, std::size_t count, std::vector<double> mix = {1, 1, 1, 1, 0}) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.fixture_mix = std::move(mix);
  std::vector<Instance> out;
  for (std::uint64_t t = 0; out.size() < count && t < 20 * count; ++t) {
    Instance inst = gen_instance(cfg, t);
    if (inst.map) out.push_back(std::move(inst));
  }
  return out;
}

/// A map a -> b found by randomized search; nullopt if none exists.
inline std::optional<SimplicialMap> random_map_between(const ObjectPtr& a, const ObjectPtr& b, Rng& rng) {
  std::optional<SimplicialMap> found;
  search_maps(
      a, b,
      [&](const SimplicialMap& f) {
        found = f;
        return false;
      },
      [&](std::vector<Cell>& c) { rng.shuffle(c); }, 50000);
  return found;
}

// ------------------------------------------------------------ oracles

/// Non-decreasing sequences in [0..n]^{m+1}, by filtering all tuples.
inline std::size_t brute_monotone_count(int m, int n) {
  std::size_t total = 1;
  for (int i = 0; i <= m; ++i) total *= static_cast<std::size_t>(n + 1);
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    int prev = -1;
    bool ok = true;
    for (int i = 0; i <= m; ++i) {
      const int v = static_cast<int>(rest % static_cast<std::size_t>(n + 1));
      rest /= static_cast<std::size_t>(n + 1);
      ok = ok && v >= prev;
      prev = v;
    }
    count += ok;
  }
  return count;
}

/// Simplicial identities checked operator-first (the validator is
/// simplex-first), reporting only pass/fail.
inline bool identities_hold(const TruncatedSSet& x) {
  const int top = x.truncation();
  for (int n = 2; n <= top; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (Cell c = 0; c < x.count(n); ++c)
          if (x.face(n - 1, i, x.face(n, j, c)) != x.face(n - 1, j - 1, x.face(n, i, c))) return false;
  for (int n = 0; n + 1 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (Cell c = 0; c < x.count(n); ++c) {
          const Cell lhs = x.face(n + 1, i, x.degeneracy(n, j, c));
          Cell rhs;
          if (i == j || i == j + 1)
            rhs = c;
          else if (i < j)
            rhs = x.degeneracy(n - 1, j - 1, x.face(n, i, c));
          else
            rhs = x.degeneracy(n - 1, j, x.face(n, i - 1, c));
          if (lhs != rhs) return false;
        }
  for (int n = 0; n + 2 <= top; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (Cell c = 0; c < x.count(n); ++c)
          if (x.degeneracy(n + 1, i, x.degeneracy(n, j, c)) != x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, c)))
            return false;
  return true;
}

/// Naturality scanned operator-first, degrees descending.
inline bool natural(const SimplicialMap& f) {
  const TruncatedSSet& a = f.source();
  const TruncatedSSet& b = f.target();
  for (int n = f.truncation(); n >= 0; --n) {
    for (int i = 0; i <= n && n >= 1; ++i)
      for (Cell x = 0; x < a.count(n); ++x)
        if (f(n - 1, a.face(n, i, x)) != b.face(n, i, f(n, x))) return false;
    for (int i = 0; i <= n && n < f.truncation(); ++i)
      for (Cell x = 0; x < a.count(n); ++x)
        if (f(n + 1, a.degeneracy(n, i, x)) != b.degeneracy(n, i, f(n, x))) return false;
  }
  return true;
}

/// Number of mediating maps t -> P with pr1 u = p, pr2 u = q, by
/// enumerating every map t -> P.
inline std::size_t mediating_maps(const FiberProduct& p, const ObjectPtr& t, const SimplicialMap& left,
                                  const SimplicialMap& right) {
  std::size_t count = 0;
  for (const SimplicialMap& u : all_maps(t, p.object))
    if (compose(p.pr1, u).levels() == left.levels() && compose(p.pr2, u).levels() == right.levels()) ++count;
  return count;
}

struct UniversalPropertyResult {
  std::size_t cospans = 0;
  std::size_t cones = 0;
  std::size_t failures = 0;
};

/// For every cospan in a fixed set of small maps (at most 6 cells per
/// degree) and every cone from a fixed set of test objects, exactly one
/// mediating map exists.
inline UniversalPropertyResult check_pullback_universal_property() {
  const int n = 2;
  auto point = share(simplex(0, n));
  auto interval = share(simplex(1, n));
  auto s1 = share(circle(n));
  auto c2 = share(cyclic_cover(2, n));
  auto two = share(discrete(2, n));
  const SimplicialMap cover = c2_to_circle(n);
  const SimplicialMap crush = to_terminal(interval);
  std::vector<std::pair<SimplicialMap, SimplicialMap>> cospans = {
      {cover, cover},
      {crush, crush},
      {point_at(interval, 0), point_at(interval, 1)},
      {point_at(interval, 0), identity_map(interval)},
      {cover, identity_map(s1)},
      {to_terminal(two), to_terminal(s1)},
      {to_terminal(c2), crush},
  };
  const std::vector<ObjectPtr> tests = {point, interval, two, s1};
  UniversalPropertyResult r;
  for (const auto& [f, g] : cospans) {
    ++r.cospans;
    const FiberProduct p = pullback(f, g);
    for (const ObjectPtr& t : tests) {
      const auto lefts = all_maps(t, f.source_ptr());
      const auto rights = all_maps(t, g.source_ptr());
      for (const auto& l : lefts)
        for (const auto& rt : rights) {
          if (compose(f, l).levels() != compose(g, rt).levels()) continue;
          ++r.cones;
          if (mediating_maps(p, t, l, rt) != 1) ++r.failures;
        }
    }
  }
  return r;
}

/// The same map one degree higher: endpoints re-materialized from their
/// nondegenerate simplices, generator images carried over.
inline SimplicialMap extend_map(const SimplicialMap& h, int truncation) {
  const Presented pa = present(h.source());
  const Presented pb = present(h.target());
  const Materialized ea = materialize(pa.presentation, truncation);
  const Materialized eb = materialize(pb.presentation, truncation);
  std::vector<std::pair<int, Cell>> gens_a;  // (degree, cell) of each source generator in h.source()
  for (int n = 0; n <= h.truncation(); ++n)
    for (Cell c = 0; c < h.source().count(n); ++c)
      if (!h.source().is_degenerate(n, c)) gens_a.emplace_back(n, c);
  std::vector<Cell> images;
  for (const auto& [n, c] : gens_a) images.push_back(eb.lookup(pb.form[n][h(n, c)]));
  // ea's generators come out in the same (degree, index) order as gens_a.
  return extend_from_generators(share(ea.object), share(eb.object), images);
}

}  // namespace testing_support
