#include "sset/pi0.hpp"

#include <numeric>
#include <sstream>

#include "sset/kernels.hpp"
#include "sset/limits.hpp"
#include "sset/standard.hpp"

namespace sset {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  // Keeps the smaller index as root so roots are least members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ComponentPartition pi0(const TruncatedSSet& x) {
  const std::size_t vertices = x.count(0);
  UnionFind uf(vertices);
  if (x.truncation() >= 1)
    for (Cell e = 0; e < x.count(1); ++e) uf.unite(x.face(1, 0, e), x.face(1, 1, e));

  ComponentPartition out;
  std::vector<Cell> id(vertices);
  for (Cell v = 0; v < vertices; ++v) {
    const std::size_t root = uf.find(v);
    if (root == v) {
      id[v] = static_cast<Cell>(out.components.size());
      out.components.emplace_back();
    } else {
      id[v] = id[root];
    }
    out.components[id[v]].push_back(v);
  }
  out.count = out.components.size();

  out.class_of.resize(static_cast<std::size_t>(x.truncation()) + 1);
  for (int n = 0; n <= x.truncation(); ++n) {
    out.class_of[n].resize(x.count(n));
    for (Cell c = 0; c < x.count(n); ++c) {
      const Cell k = id[x.vertex_of(n, c, 0)];
      for (int j = 1; j <= n; ++j) {
        if (id[x.vertex_of(n, c, j)] != k) {
          std::ostringstream os;
          os << "simplex " << c << " of degree " << n << " has vertices in different components";
          throw InputError(os.str());
        }
      }
      out.class_of[n][c] = k;
    }
  }
  return out;
}

std::vector<Cell> pi0_map(const SimplicialMap& f, const ComponentPartition& source,
                          const ComponentPartition& target) {
  std::vector<Cell> out(source.count);
  for (std::size_t k = 0; k < source.count; ++k)
    out[k] = target.class_of[0][f(0, source.components[k].front())];
  return out;
}

std::vector<Cell> pi0_map(const SimplicialMap& f) { return pi0_map(f, pi0(f.source()), pi0(f.target())); }

SimplicialMap pi0_unit(const ObjectPtr& x, const ComponentPartition& components) {
  auto points = share(discrete(components.count, x->truncation()));
  return SimplicialMap(x, points, components.class_of);
}

ComparisonData trivial_covering_comparison(const SimplicialMap& h) {
  const int top = h.truncation();
  const ComponentPartition pa = pi0(h.source());
  const ComponentPartition pb = pi0(h.target());
  const SimplicialMap unit_b = pi0_unit(h.target_ptr(), pb);
  const auto induced = pi0_map(h, pa, pb);
  auto points_a = share(discrete(pa.count, top));
  std::vector<std::vector<Cell>> level(static_cast<std::size_t>(top) + 1, induced);
  const SimplicialMap h_pi0(points_a, unit_b.target_ptr(), std::move(level));

  FiberProduct p = pullback(unit_b, h_pi0);
  std::vector<std::vector<Cell>> cmp(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    cmp[n].resize(h.source().count(n));
    for (Cell c = 0; c < h.source().count(n); ++c) cmp[n][c] = *p.index_of(n, h(n, c), pa.class_of[n][c]);
  }
  SimplicialMap comparison(h.source_ptr(), p.object, std::move(cmp));
  return ComparisonData{std::move(p), std::move(comparison)};
}

CheckReport trivial_covering_check(const SimplicialMap& h) {
  const ComparisonData data = trivial_covering_comparison(h);
  const SimplicialMap& cmp = data.comparison;
  CheckReport report;
  report.stats.check = "trivial-covering";
  for (int n = 0; n <= h.truncation(); ++n) {
    const std::size_t cells = data.pullback.object->count(n);
    std::vector<std::int64_t> first(cells, -1);
    report.stats.examined += cmp.level(n).size();
    for (Cell c = 0; c < h.source().count(n); ++c) {
      const Cell t = cmp(n, c);
      if (first[t] >= 0) {
        report.verdict = false;
        report.witness = ComparisonFailure{ComparisonFailure::Kind::not_injective, n,
                                           static_cast<Cell>(first[t]), c};
        return report;
      }
      first[t] = c;
    }
    for (Cell t = 0; t < cells; ++t) {
      if (first[t] < 0) {
        const auto [base, component] = data.pullback.pairs[n][t];
        report.verdict = false;
        report.witness = ComparisonFailure{ComparisonFailure::Kind::not_surjective, n, base, component};
        return report;
      }
    }
  }
  return report;
}

CheckReport injection_cartesian_check(const SimplicialMap& m) {
  if (!classify(m).injective) throw InputError("injection_cartesian_check needs an injective map");
  std::vector<std::vector<char>> image(static_cast<std::size_t>(m.truncation()) + 1);
  for (int n = 0; n <= m.truncation(); ++n) {
    image[n].assign(m.target().count(n), 0);
    for (Cell c : m.level(n)) image[n][c] = 1;
  }
  CheckReport report;
  report.stats.check = "injection-cartesian";
  auto leak = kernels::leak_scan(m.target(), image, kernels::Execution::parallel, &report.stats.examined);
  if (leak) {
    report.verdict = false;
    report.witness = *leak;
  }
  return report;
}

}  // namespace sset
