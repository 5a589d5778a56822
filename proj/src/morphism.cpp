#include "sset/morphism.hpp"

#include <sstream>

#include "sset/presentation.hpp"

namespace sset {

SimplicialMap::SimplicialMap(ObjectPtr source, ObjectPtr target, std::vector<std::vector<Cell>> level)
    : source_(std::move(source)), target_(std::move(target)), level_(std::move(level)) {
  if (!source_ || !target_) throw InputError("map endpoint missing");
  if (source_->truncation() != target_->truncation())
    throw InputError("map endpoints have different truncations");
  const int top = source_->truncation();
  if (level_.size() != static_cast<std::size_t>(top) + 1) throw InputError("map level count does not match truncation");
  for (int n = 0; n <= top; ++n) {
    if (level_[n].size() != source_->count(n)) {
      std::ostringstream os;
      os << "map level " << n << " has " << level_[n].size() << " entries, expected " << source_->count(n);
      throw InputError(os.str());
    }
    for (Cell c : level_[n])
      if (c >= target_->count(n)) throw InputError("map level entry out of range");
  }
}

bool operator==(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.levels() != g.levels()) return false;
  auto same = [](const ObjectPtr& a, const ObjectPtr& b) { return a == b || *a == *b; };
  return same(f.source_ptr(), g.source_ptr()) && same(f.target_ptr(), g.target_ptr());
}

SimplicialMap identity_map(const ObjectPtr& x) {
  std::vector<std::vector<Cell>> level(static_cast<std::size_t>(x->truncation()) + 1);
  for (int n = 0; n <= x->truncation(); ++n) {
    level[n].resize(x->count(n));
    for (Cell c = 0; c < x->count(n); ++c) level[n][c] = c;
  }
  return SimplicialMap(x, x, std::move(level));
}

MapValidationReport validate_map(const SimplicialMap& f) {
  MapValidationReport report;
  const TruncatedSSet& a = f.source();
  const TruncatedSSet& b = f.target();
  auto fail = [&](int n, const char* op, int i, Cell c) {
    report.ok = false;
    report.violation = MapViolation{n, op, i, c};
    std::ostringstream os;
    os << "map does not commute with " << op << "_" << i << " on simplex " << c << " of degree " << n;
    report.message = os.str();
    return report;
  };
  for (int n = 0; n <= a.truncation(); ++n) {
    for (int i = 0; i <= n && n >= 1; ++i)
      for (Cell c = 0; c < a.count(n); ++c)
        if (f(n - 1, a.face(n, i, c)) != b.face(n, i, f(n, c))) return fail(n, "d", i, c);
    for (int i = 0; i <= n && n < a.truncation(); ++i)
      for (Cell c = 0; c < a.count(n); ++c)
        if (f(n + 1, a.degeneracy(n, i, c)) != b.degeneracy(n, i, f(n, c))) return fail(n, "s", i, c);
  }
  return report;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target_ptr() != g.source_ptr() && !(f.target() == g.source()))
    throw InputError("cannot compose: target of the first map is not the source of the second");
  std::vector<std::vector<Cell>> level(f.levels().size());
  for (std::size_t n = 0; n < level.size(); ++n) {
    level[n].resize(f.level(static_cast<int>(n)).size());
    for (std::size_t c = 0; c < level[n].size(); ++c)
      level[n][c] = g(static_cast<int>(n), f(static_cast<int>(n), static_cast<Cell>(c)));
  }
  return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(level));
}

MapClass classify(const SimplicialMap& f) {
  MapClass result{true, true, false};
  for (int n = 0; n <= f.truncation(); ++n) {
    std::vector<char> hit(f.target().count(n), 0);
    for (Cell c : f.level(n)) {
      if (hit[c]) result.injective = false;
      hit[c] = 1;
    }
    for (char h : hit)
      if (!h) result.surjective = false;
  }
  result.isomorphism = result.injective && result.surjective;
  return result;
}

std::optional<SimplicialMap> inverse(const SimplicialMap& f) {
  if (!classify(f).isomorphism) return std::nullopt;
  std::vector<std::vector<Cell>> level(f.levels().size());
  for (int n = 0; n <= f.truncation(); ++n) {
    level[n].resize(f.target().count(n));
    for (Cell c = 0; c < f.source().count(n); ++c) level[n][f(n, c)] = c;
  }
  return SimplicialMap(f.target_ptr(), f.source_ptr(), std::move(level));
}

bool search_maps(const ObjectPtr& source, const ObjectPtr& target,
                 const std::function<bool(const SimplicialMap&)>& visit, const CandidateOrder& order,
                 std::size_t node_budget) {
  if (source->truncation() != target->truncation())
    throw InputError("map endpoints have different truncations");
  const Presented pres = present(*source);
  const auto& gens = pres.presentation.generators();
  const TruncatedSSet& b = *target;
  std::vector<Cell> image(gens.size(), 0);
  std::size_t nodes = 0;
  bool stopped = false;

  auto image_of = [&](const EzCell& c) {
    return b.apply(gens[c.generator].dim, image[c.generator], c.epi);
  };
  auto emit = [&]() {
    std::vector<std::vector<Cell>> level(pres.form.size());
    for (std::size_t n = 0; n < level.size(); ++n) {
      level[n].reserve(pres.form[n].size());
      for (const EzCell& c : pres.form[n]) level[n].push_back(image_of(c));
    }
    return visit(SimplicialMap(source, target, std::move(level)));
  };
  auto recurse = [&](auto&& self, std::size_t k) -> bool {
    if (stopped) return true;
    if (++nodes > node_budget) return false;
    if (k == gens.size()) {
      if (!emit()) stopped = true;
      return true;
    }
    const Generator& g = gens[k];
    std::vector<Cell> required;
    for (const EzCell& f : g.faces) required.push_back(image_of(f));
    std::vector<Cell> candidates;
    for (Cell z = 0; z < b.count(g.dim); ++z) {
      bool ok = true;
      for (int i = 0; i < static_cast<int>(required.size()) && ok; ++i)
        ok = b.face(g.dim, i, z) == required[i];
      if (ok) candidates.push_back(z);
    }
    if (order) order(candidates);
    for (Cell z : candidates) {
      image[k] = z;
      if (!self(self, k + 1)) return false;
      if (stopped) return true;
    }
    return true;
  };
  return recurse(recurse, 0);
}

SimplicialMap extend_from_generators(const ObjectPtr& source, const ObjectPtr& target,
                                     const std::vector<Cell>& images) {
  if (source->truncation() != target->truncation())
    throw InputError("map endpoints have different truncations");
  const Presented pres = present(*source);
  const auto& gens = pres.presentation.generators();
  if (images.size() != gens.size()) throw InputError("one image per nondegenerate simplex required");
  std::vector<std::vector<Cell>> level(pres.form.size());
  for (std::size_t n = 0; n < level.size(); ++n)
    for (const EzCell& c : pres.form[n]) {
      const int d = gens[c.generator].dim;
      if (images[c.generator] >= target->count(d)) throw InputError("generator image out of range");
      level[n].push_back(target->apply(d, images[c.generator], c.epi));
    }
  return SimplicialMap(source, target, std::move(level));
}

std::vector<SimplicialMap> all_maps(const ObjectPtr& source, const ObjectPtr& target) {
  std::vector<SimplicialMap> out;
  if (!search_maps(source, target, [&](const SimplicialMap& m) {
        out.push_back(m);
        return true;
      }))
    throw InputError("map enumeration exceeded its search budget");
  return out;
}

}  // namespace sset
