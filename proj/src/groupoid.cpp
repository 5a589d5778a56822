#include "sset/groupoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace sset {

FiniteGroupoid::FiniteGroupoid(std::size_t objects, std::vector<Arrow> arrows, std::vector<std::int64_t> compose,
                               std::vector<Cell> identity, std::vector<Cell> inverse)
    : objects_(objects),
      arrows_(std::move(arrows)),
      compose_(std::move(compose)),
      identity_(std::move(identity)),
      inverse_(std::move(inverse)) {
  const std::size_t a = arrows_.size();
  if (compose_.size() != a * a) throw InputError("composition table has the wrong size");
  if (identity_.size() != objects_) throw InputError("identity table has the wrong size");
  if (inverse_.size() != a) throw InputError("inverse table has the wrong size");
  for (const Arrow& g : arrows_)
    if (g.source >= objects_ || g.target >= objects_) throw InputError("arrow endpoint out of range");
  for (std::int64_t c : compose_)
    if (c != none && (c < 0 || static_cast<std::size_t>(c) >= a)) throw InputError("composite out of range");
  for (Cell c : identity_)
    if (c >= a) throw InputError("identity out of range");
  for (Cell c : inverse_)
    if (c >= a) throw InputError("inverse out of range");
}

FiniteGroupoid FiniteGroupoid::cyclic_group(int order) {
  if (order < 1) throw InputError("group order must be positive");
  const auto k = static_cast<std::size_t>(order);
  std::vector<Arrow> arrows(k, Arrow{0, 0});
  std::vector<std::int64_t> compose(k * k);
  std::vector<Cell> inverse(k);
  for (std::size_t g = 0; g < k; ++g) {
    inverse[g] = static_cast<Cell>((k - g) % k);
    for (std::size_t f = 0; f < k; ++f) compose[g * k + f] = static_cast<std::int64_t>((g + f) % k);
  }
  return FiniteGroupoid(1, std::move(arrows), std::move(compose), {0}, std::move(inverse));
}

FiniteGroupoid FiniteGroupoid::codiscrete(std::size_t objects) {
  const std::size_t a = objects * objects;
  std::vector<Arrow> arrows(a);
  std::vector<std::int64_t> compose(a * a, none);
  std::vector<Cell> identity(objects), inverse(a);
  for (std::size_t s = 0; s < objects; ++s) {
    identity[s] = static_cast<Cell>(s * objects + s);
    for (std::size_t t = 0; t < objects; ++t) {
      arrows[s * objects + t] = Arrow{static_cast<Cell>(s), static_cast<Cell>(t)};
      inverse[s * objects + t] = static_cast<Cell>(t * objects + s);
    }
  }
  for (std::size_t g = 0; g < a; ++g)
    for (std::size_t f = 0; f < a; ++f)
      if (arrows[f].target == arrows[g].source)
        compose[g * a + f] = static_cast<std::int64_t>(arrows[f].source * objects + arrows[g].target);
  return FiniteGroupoid(objects, std::move(arrows), std::move(compose), std::move(identity), std::move(inverse));
}

Cell FiniteGroupoid::compose(Cell g, Cell f) const {
  const std::int64_t c = compose_[static_cast<std::size_t>(g) * arrows_.size() + f];
  if (c == none) throw InputError("arrows are not composable");
  return static_cast<Cell>(c);
}

std::string FiniteGroupoid::check_laws() const {
  const std::size_t a = arrows_.size();
  auto composite = [&](Cell g, Cell f) { return compose_[static_cast<std::size_t>(g) * a + f]; };
  for (Cell g = 0; g < a; ++g) {
    for (Cell f = 0; f < a; ++f) {
      const bool composable = arrows_[f].target == arrows_[g].source;
      const std::int64_t c = composite(g, f);
      if (composable != (c != none)) return "composition defined exactly on composable pairs fails";
      if (composable && (arrows_[c].source != arrows_[f].source || arrows_[c].target != arrows_[g].target))
        return "composite has the wrong endpoints";
    }
  }
  for (Cell h = 0; h < a; ++h)
    for (Cell g = 0; g < a; ++g)
      for (Cell f = 0; f < a; ++f) {
        if (composite(g, f) == none || composite(h, g) == none) continue;
        if (composite(h, static_cast<Cell>(composite(g, f))) != composite(static_cast<Cell>(composite(h, g)), f))
          return "associativity fails";
      }
  for (Cell f = 0; f < a; ++f) {
    const Arrow& e = arrows_[f];
    const Cell ids = identity_[e.source];
    const Cell idt = identity_[e.target];
    if (arrows_[ids].source != e.source || arrows_[ids].target != e.source) return "identity has wrong endpoints";
    if (composite(f, ids) != f || composite(idt, f) != f) return "unit law fails";
    const Cell inv = inverse_[f];
    if (composite(inv, f) != ids || composite(f, inv) != idt) return "inverse law fails";
  }
  return {};
}

TruncatedSSet nerve(const FiniteGroupoid& g, int truncation) {
  const auto levels = static_cast<std::size_t>(truncation) + 1;
  // strings[n][c]: arrows g_1..g_n; degree 0 cells are objects (empty strings with an object).
  std::vector<std::vector<std::vector<Cell>>> strings(levels);
  std::vector<std::map<std::vector<Cell>, Cell>> index(levels);
  for (int n = 1; n <= truncation; ++n) {
    std::vector<Cell> current;
    auto recurse = [&](auto&& self) -> void {
      if (static_cast<int>(current.size()) == n) {
        index[n][current] = static_cast<Cell>(strings[n].size());
        strings[n].push_back(current);
        return;
      }
      for (Cell a = 0; a < g.arrow_count(); ++a) {
        if (!current.empty() && g.arrow(current.back()).target != g.arrow(a).source) continue;
        current.push_back(a);
        self(self);
        current.pop_back();
      }
    };
    recurse(recurse);
  }
  std::vector<std::size_t> counts(levels);
  counts[0] = g.objects();
  for (int n = 1; n <= truncation; ++n) counts[n] = strings[n].size();

  std::vector<OperatorTable> faces(levels), degeneracies(levels);
  for (int n = 1; n <= truncation; ++n) {
    faces[n].assign(n + 1, std::vector<Cell>(counts[n]));
    for (Cell c = 0; c < counts[n]; ++c) {
      const auto& s = strings[n][c];
      if (n == 1) {
        faces[1][0][c] = g.arrow(s[0]).target;
        faces[1][1][c] = g.arrow(s[0]).source;
        continue;
      }
      for (int i = 0; i <= n; ++i) {
        std::vector<Cell> t;
        if (i == 0) {
          t.assign(s.begin() + 1, s.end());
        } else if (i == n) {
          t.assign(s.begin(), s.end() - 1);
        } else {
          t.assign(s.begin(), s.begin() + i - 1);
          t.push_back(g.compose(s[i], s[i - 1]));
          t.insert(t.end(), s.begin() + i + 1, s.end());
        }
        faces[n][i][c] = index[n - 1].at(t);
      }
    }
  }
  for (int n = 0; n < truncation; ++n) {
    degeneracies[n].assign(n + 1, std::vector<Cell>(counts[n]));
    for (Cell c = 0; c < counts[n]; ++c) {
      if (n == 0) {
        degeneracies[0][0][c] = index[1].at({g.identity(c)});
        continue;
      }
      const auto& s = strings[n][c];
      for (int i = 0; i <= n; ++i) {
        const Cell object = i < n ? g.arrow(s[i]).source : g.arrow(s[n - 1]).target;
        std::vector<Cell> t(s.begin(), s.begin() + i);
        t.push_back(g.identity(object));
        t.insert(t.end(), s.begin() + i, s.end());
        degeneracies[n][i][c] = index[n + 1].at(t);
      }
    }
  }
  return TruncatedSSet(truncation, std::move(counts), std::move(faces), std::move(degeneracies));
}

GroupoidPresentation pi1_presentation(const TruncatedSSet& x) {
  if (x.truncation() < 2) throw InputError("fundamental groupoid presentation needs truncation >= 2");
  GroupoidPresentation p;
  p.objects = x.count(0);
  for (Cell e = 0; e < x.count(1); ++e) p.generators.push_back(Arrow{x.face(1, 1, e), x.face(1, 0, e)});
  using Relation = GroupoidPresentation::Relation;
  for (Cell v = 0; v < x.count(0); ++v)
    p.relations.push_back(Relation{Relation::Kind::identity, v, x.degeneracy(0, 0, v), 0, 0});
  for (Cell s = 0; s < x.count(2); ++s)
    p.relations.push_back(
        Relation{Relation::Kind::triangle, s, x.face(2, 1, s), x.face(2, 2, s), x.face(2, 0, s)});
  return p;
}

std::string render_presentation(const GroupoidPresentation& p) {
  std::ostringstream os;
  os << "objects " << p.objects << "\n";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    os << "arrow e" << i << ": " << p.generators[i].source << " -> " << p.generators[i].target << "\n";
  using Kind = GroupoidPresentation::Relation::Kind;
  for (const auto& r : p.relations) {
    if (r.kind == Kind::identity)
      os << "relation e" << r.lhs << " = id(" << r.simplex << ")\n";
    else
      os << "relation e" << r.lhs << " = e" << r.second << " o e" << r.first << "\n";
  }
  return os.str();
}

bool presentation_map_preserves_relations(const SimplicialMap& f) {
  const GroupoidPresentation source = pi1_presentation(f.source());
  const GroupoidPresentation target = pi1_presentation(f.target());
  using Kind = GroupoidPresentation::Relation::Kind;
  std::set<std::tuple<int, Cell, Cell, Cell>> known;
  for (const auto& r : target.relations) {
    if (r.kind == Kind::identity)
      known.emplace(0, r.lhs, r.simplex, 0);
    else
      known.emplace(1, r.lhs, r.first, r.second);
  }
  for (std::size_t e = 0; e < source.generators.size(); ++e) {
    const Arrow& a = source.generators[e];
    const Arrow& image = target.generators[f(1, static_cast<Cell>(e))];
    if (image.source != f(0, a.source) || image.target != f(0, a.target)) return false;
  }
  for (const auto& r : source.relations) {
    const auto key = r.kind == Kind::identity
                         ? std::make_tuple(0, f(1, r.lhs), f(0, r.simplex), Cell{0})
                         : std::make_tuple(1, f(1, r.lhs), f(1, r.first), f(1, r.second));
    if (!known.count(key)) return false;
  }
  return true;
}

}  // namespace sset
