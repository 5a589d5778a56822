#include "sset/generate.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <numeric>
#include <sstream>

#include "sset/groupoid.hpp"
#include "sset/io.hpp"
#include "sset/limits.hpp"
#include "sset/pi0.hpp"
#include "sset/presentation.hpp"
#include "sset/standard.hpp"

namespace sset {

using nlohmann::ordered_json;

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : state_(mix(seed) ^ mix(stream + 0x9e3779b97f4a7c15ULL)) {}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do r = next();
  while (r >= limit);
  return r % bound;
}

int Rng::between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::string family_name(Family f) {
  switch (f) {
    case Family::gluing: return "random-gluing";
    case Family::covering: return "covering";
    case Family::fold: return "fold";
    case Family::nerve_product: return "nerve-product";
    case Family::corrupted: return "corrupted";
  }
  return "?";
}

void GenConfig::check() const {
  if (max_nondegenerate_dim < 0 || max_nondegenerate_dim > 4)
    throw InputError("max dimension must be in [0, 4]");
  if (max_cells_per_degree < 1 || max_cells_per_degree > 16)
    throw InputError("max cells per degree must be in [1, 16]");
  if (fixture_mix.size() != family_count) throw InputError("fixture mix needs one weight per family");
  double total = 0;
  for (double w : fixture_mix) {
    if (!(w >= 0)) throw InputError("fixture weights must be nonnegative");
    total += w;
  }
  if (!(total > 0)) throw InputError("at least one fixture weight must be positive");
}

// ------------------------------------------------------------------ objects

namespace {

// Faces (c_0..c_k) of a new k-simplex: cells of degree k-1 of `skel` with
// d_i c_j = d_{j-1} c_i for i < j. Depth-first with shuffled candidates;
// falls back to the totally degenerate tuple on vertex 0.
std::vector<Cell> draw_faces(const TruncatedSSet& skel, int k, Rng& rng) {
  const int m = k - 1;
  std::vector<Cell> pool(skel.count(m));
  std::iota(pool.begin(), pool.end(), 0);
  const bool prefer_nondegenerate = rng.below(4) != 0;
  std::vector<Cell> chosen;
  std::size_t budget = 4000;
  auto recurse = [&](auto&& self, int j) -> bool {
    if (j > k) return true;
    if (budget == 0) return false;
    --budget;
    std::vector<Cell> candidates;
    for (Cell c : pool) {
      bool ok = true;
      for (int i = 0; i < j && ok && m >= 1; ++i) ok = skel.face(m, i, c) == skel.face(m, j - 1, chosen[i]);
      if (ok) candidates.push_back(c);
    }
    rng.shuffle(candidates);
    if (prefer_nondegenerate)
      std::stable_partition(candidates.begin(), candidates.end(),
                            [&](Cell c) { return !skel.is_degenerate(m, c); });
    for (Cell c : candidates) {
      chosen.push_back(c);
      if (self(self, j + 1)) return true;
      chosen.pop_back();
      if (budget == 0) return false;
    }
    return false;
  };
  if (recurse(recurse, 0)) return chosen;
  Cell base = 0;
  for (int d = 0; d < m; ++d) base = skel.degeneracy(d, 0, base);
  return std::vector<Cell>(static_cast<std::size_t>(k) + 1, base);
}

Presentation random_presentation(int top, int cap, Rng& rng) {
  Presentation p;
  const int vertices = rng.between(1, cap);
  for (int v = 0; v < vertices; ++v) p.add_vertex();
  for (int k = 1; k <= top; ++k) {
    const Materialized skel = materialize(p, k - 1);
    const int count = rng.between(k == top ? 1 : 0, cap);
    for (int g = 0; g < count; ++g) {
      std::vector<EzCell> faces;
      for (Cell c : draw_faces(skel.object, k, rng)) faces.push_back(skel.form[k - 1][c]);
      p.add(std::move(faces));
    }
  }
  return p;
}

}  // namespace

TruncatedSSet gen_sset(const GenConfig& cfg, Rng& rng, int truncation) {
  cfg.check();
  int top = 0;
  if (truncation < 0) {
    top = rng.between(0, cfg.max_nondegenerate_dim);
    truncation = top + 1;
  } else {
    top = rng.between(0, std::min(cfg.max_nondegenerate_dim, truncation - 1));
  }
  return materialize(random_presentation(top, cfg.max_cells_per_degree, rng), truncation).object;
}

TruncatedSSet gen_sset(const GenConfig& cfg) {
  Rng rng(cfg.seed, 0);
  return gen_sset(cfg, rng);
}

// ------------------------------------------------------------------ maps

namespace {

std::vector<Cell> nondegenerate(const TruncatedSSet& x, int n) {
  std::vector<Cell> out;
  for (Cell c = 0; c < x.count(n); ++c)
    if (!x.is_degenerate(n, c)) out.push_back(c);
  return out;
}

SimplicialMap cyclic_projection(int km, int m, int truncation) {
  auto source = share(cyclic_cover(km, truncation));
  auto target = share(cyclic_cover(m, truncation));
  const auto edges = nondegenerate(*target, 1);
  std::vector<Cell> images;
  for (int i = 0; i < km; ++i) images.push_back(static_cast<Cell>(i % m));
  for (int i = 0; i < km; ++i) images.push_back(edges[static_cast<std::size_t>(i % m)]);
  return extend_from_generators(source, target, images);
}

SimplicialMap random_map(const ObjectPtr& a, const ObjectPtr& b, Rng& rng) {
  std::optional<SimplicialMap> found;
  search_maps(
      a, b,
      [&](const SimplicialMap& f) {
        found = f;
        return false;
      },
      [&](std::vector<Cell>& c) { rng.shuffle(c); }, 20000);
  if (found) return *found;
  // Constant map on vertex 0 always exists.
  const Presented pres = present(*a);
  std::vector<Cell> images;
  for (const auto& g : pres.presentation.generators()) {
    Cell c = 0;
    for (int d = 0; d < g.dim; ++d) c = b->degeneracy(d, 0, c);
    images.push_back(c);
  }
  return extend_from_generators(a, b, images);
}

// Identifies two vertex generators of x.
SimplicialMap vertex_quotient(const ObjectPtr& x, Rng& rng) {
  const Presented pres = present(*x);
  const auto& gens = pres.presentation.generators();
  const auto vertices = static_cast<std::size_t>(x->count(0));
  if (vertices < 2) return to_terminal(x);
  std::size_t keep = rng.below(vertices);
  std::size_t drop = rng.below(vertices - 1);
  if (drop >= keep) ++drop;
  std::vector<std::size_t> renamed(gens.size());
  Presentation q;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (g == drop) continue;
    if (gens[g].dim == 0) {
      renamed[g] = q.add_vertex();
      continue;
    }
    std::vector<EzCell> faces = gens[g].faces;
    for (auto& f : faces) f.generator = renamed[f.generator == drop ? keep : f.generator];
    renamed[g] = q.add(std::move(faces));
  }
  renamed[drop] = renamed[keep];
  const Materialized m = materialize(q, x->truncation());
  auto target = share(m.object);
  std::vector<Cell> images;
  for (std::size_t g = 0; g < gens.size(); ++g) images.push_back(m.generator_cell[renamed[g]].second);
  return extend_from_generators(x, target, images);
}

// Total space B x S with d_0 twisted by the permutation of the leading edge.
SimplicialMap voltage_cover(const ObjectPtr& b, int sheets, Rng& rng) {
  const int top = b->truncation();
  const auto s = static_cast<std::size_t>(sheets);
  auto random_perm = [&] {
    std::vector<Cell> p(s);
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    return p;
  };
  std::vector<std::vector<Cell>> potential(b->count(0));
  for (auto& p : potential) p = random_perm();
  // Edges bounding a nondegenerate 2-simplex get coboundary voltages.
  std::vector<char> constrained(top >= 1 ? b->count(1) : 0, 0);
  if (top >= 2)
    for (Cell t : nondegenerate(*b, 2))
      for (int i = 0; i <= 2; ++i) constrained[b->face(2, i, t)] = 1;
  std::vector<std::vector<Cell>> perm(constrained.size());
  for (Cell e = 0; e < constrained.size(); ++e) {
    if (b->is_degenerate(1, e)) {
      perm[e].resize(s);
      std::iota(perm[e].begin(), perm[e].end(), 0);
    } else if (!constrained[e]) {
      perm[e] = random_perm();
    } else {
      const auto& to = potential[b->face(1, 0, e)];
      const auto& from = potential[b->face(1, 1, e)];
      perm[e].resize(s);
      for (std::size_t i = 0; i < s; ++i) perm[e][from[i]] = to[i];
    }
  }
  auto leading_edge = [&](int n, Cell c) {
    for (int m = n; m >= 2; --m) c = b->face(m, m, c);
    return c;
  };
  const auto levels = static_cast<std::size_t>(top) + 1;
  std::vector<std::size_t> counts(levels);
  std::vector<OperatorTable> faces(levels), degs(levels);
  std::vector<std::vector<Cell>> level(levels);
  for (int n = 0; n <= top; ++n) {
    counts[n] = b->count(n) * s;
    for (Cell c = 0; c < counts[n]; ++c) level[n].push_back(static_cast<Cell>(c / s));
  }
  for (int n = 1; n <= top; ++n) {
    faces[n].assign(n + 1, std::vector<Cell>(counts[n]));
    for (Cell c = 0; c < counts[n]; ++c) {
      const Cell base = static_cast<Cell>(c / s);
      const Cell sheet = static_cast<Cell>(c % s);
      faces[n][0][c] = static_cast<Cell>(b->face(n, 0, base) * s + perm[leading_edge(n, base)][sheet]);
      for (int i = 1; i <= n; ++i) faces[n][i][c] = static_cast<Cell>(b->face(n, i, base) * s + sheet);
    }
  }
  for (int n = 0; n < top; ++n) {
    degs[n].assign(n + 1, std::vector<Cell>(counts[n]));
    for (Cell c = 0; c < counts[n]; ++c)
      for (int i = 0; i <= n; ++i)
        degs[n][i][c] = static_cast<Cell>(b->degeneracy(n, i, static_cast<Cell>(c / s)) * s + c % s);
  }
  auto total = share(TruncatedSSet(top, std::move(counts), std::move(faces), std::move(degs)));
  return SimplicialMap(total, b, std::move(level));
}

ObjectPtr component_of_first_vertex(const ObjectPtr& x) {
  const ComponentPartition parts = pi0(*x);
  std::vector<std::vector<char>> keep(parts.class_of.size());
  for (std::size_t n = 0; n < keep.size(); ++n)
    for (Cell c : parts.class_of[n]) keep[n].push_back(c == 0);
  return subobject(x, keep).object;
}

// nerve(Z/km) -> nerve(Z/m), residues reduced mod m; strings are base-k digits.
SimplicialMap cyclic_reduction(int km, int m, int truncation) {
  auto source = share(nerve(FiniteGroupoid::cyclic_group(km), truncation));
  auto target = share(nerve(FiniteGroupoid::cyclic_group(m), truncation));
  std::vector<std::vector<Cell>> level(static_cast<std::size_t>(truncation) + 1);
  level[0] = {0};
  for (int n = 1; n <= truncation; ++n)
    for (Cell c = 0; c < source->count(n); ++c) {
      Cell rest = c, out = 0, place = 1;
      for (int d = 0; d < n; ++d) {
        out += static_cast<Cell>((rest % km) % m) * place;
        rest /= km;
        place *= m;
      }
      level[n].push_back(out);
    }
  return SimplicialMap(source, target, std::move(level));
}

FiniteGroupoid small_groupoid(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return FiniteGroupoid::cyclic_group(2);
    case 1: return FiniteGroupoid::cyclic_group(3);
    case 2: return FiniteGroupoid::codiscrete(2);
    default: return FiniteGroupoid::cyclic_group(1);
  }
}

ObjectPtr small_factor(int truncation, Rng& rng) {
  switch (rng.below(4)) {
    case 0: return share(discrete(2, truncation));
    case 1: return share(simplex(1, truncation));
    case 2: return share(circle(truncation));
    default: return share(cyclic_cover(2, truncation));
  }
}

Family pick_family(const GenConfig& cfg, Rng& rng) {
  const double total = std::accumulate(cfg.fixture_mix.begin(), cfg.fixture_mix.end(), 0.0);
  double u = rng.unit() * total;
  for (int f = 0; f < family_count; ++f) {
    if (cfg.fixture_mix[f] <= 0) continue;
    if (u < cfg.fixture_mix[f]) return static_cast<Family>(f);
    u -= cfg.fixture_mix[f];
  }
  for (int f = family_count - 1; f >= 0; --f)
    if (cfg.fixture_mix[f] > 0) return static_cast<Family>(f);
  return Family::gluing;
}

SimplicialMap draw(Family family, const GenConfig& cfg, Rng& rng, std::string& strategy, bool& buffer) {
  const int n_default = cfg.max_nondegenerate_dim + 1;
  switch (family) {
    case Family::gluing: {
      auto a = share(gen_sset(cfg, rng, n_default));
      switch (rng.below(5)) {
        case 0: {
          strategy = "random-map";
          auto b = share(gen_sset(cfg, rng, n_default));
          return random_map(a, b, rng);
        }
        case 1: {
          strategy = "inclusion";
          std::vector<std::pair<int, Cell>> seeds;
          const int k = rng.between(1, 3);
          for (int i = 0; i < k; ++i) {
            const int n = rng.between(0, a->truncation());
            seeds.emplace_back(n, static_cast<Cell>(rng.below(a->count(n))));
          }
          return generated_subobject(a, seeds).inclusion;
        }
        case 2:
          strategy = "vertex-quotient";
          return vertex_quotient(a, rng);
        case 3: {
          strategy = "product-projection";
          buffer = false;  // (s_0 x, s_1 y) is nondegenerate in the top degree
          const FiberProduct p = product(a, small_factor(a->truncation(), rng));
          return rng.below(2) ? p.pr1 : p.pr2;
        }
        default:
          strategy = "to-point";
          return to_terminal(a);
      }
    }
    case Family::covering: {
      const int truncation = rng.between(2, 3);
      switch (rng.below(3)) {
        case 0: {
          strategy = "cyclic-cover-of-circle";
          return cyclic_projection(rng.between(1, 4), 1, truncation);
        }
        case 1: {
          strategy = "cyclic-cover-of-cyclic-cover";
          const int m = rng.between(1, 3);
          return cyclic_projection(m * rng.between(1, 3), m, truncation);
        }
        default: {
          strategy = "voltage-cover";
          auto b = share(gen_sset(cfg, rng, n_default));
          return voltage_cover(b, rng.between(1, 3), rng);
        }
      }
    }
    case Family::fold: {
      const int copies = rng.between(2, 3);
      if (rng.below(3) == 0) {
        strategy = "fold-simplex";
        const int n = rng.between(0, cfg.max_nondegenerate_dim);
        return fold_map(share(simplex(n, n + 1)), copies);
      }
      strategy = "fold-component";
      return fold_map(component_of_first_vertex(share(gen_sset(cfg, rng, n_default))), copies);
    }
    case Family::nerve_product: {
      buffer = false;
      const int truncation = rng.between(2, 3);
      switch (rng.below(4)) {
        case 0:
        case 1: {
          auto x = share(gen_sset(cfg, rng, truncation));
          auto g = share(nerve(small_groupoid(rng), truncation));
          const FiberProduct p = product(x, g);
          strategy = rng.below(3) ? "project-away-nerve" : "project-onto-nerve";
          return strategy == "project-away-nerve" ? p.pr1 : p.pr2;
        }
        case 2:
          strategy = "nerve-to-point";
          return to_terminal(share(nerve(small_groupoid(rng), truncation)));
        default: {
          strategy = "nerve-reduction";
          const int m = rng.between(1, 2);
          return cyclic_reduction(m * rng.between(1, 2), m, truncation);
        }
      }
    }
    case Family::corrupted:
      break;
  }
  throw InputError("no generator for family");
}

SimplicialMap corrupt(const SimplicialMap& h, Rng& rng, std::string& strategy) {
  auto levels = h.levels();
  const int top = h.truncation();
  if (rng.below(2) == 0 || top == 0) {
    strategy += "+level";
    const int n = rng.between(0, top);
    if (levels[n].empty() || h.target().count(n) < 2) {
      strategy += "-none";
      return h;
    }
    const auto x = rng.below(levels[n].size());
    levels[n][x] = static_cast<Cell>((levels[n][x] + 1 + rng.below(h.target().count(n) - 1)) % h.target().count(n));
    return SimplicialMap(h.source_ptr(), h.target_ptr(), std::move(levels));
  }
  strategy += "+face";
  const TruncatedSSet& a = h.source();
  std::vector<OperatorTable> faces(static_cast<std::size_t>(top) + 1), degs(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    if (n >= 1) faces[n] = a.faces(n);
    if (n < top) degs[n] = a.degeneracies(n);
  }
  const int n = rng.between(1, top);
  const auto i = rng.below(static_cast<std::uint64_t>(n) + 1);
  if (a.count(n) == 0 || a.count(n - 1) < 2) {
    strategy += "-none";
    return h;
  }
  auto& row = faces[n][i];
  const auto x = rng.below(row.size());
  row[x] = static_cast<Cell>((row[x] + 1 + rng.below(a.count(n - 1) - 1)) % a.count(n - 1));
  auto source = share(TruncatedSSet(top, a.counts(), std::move(faces), std::move(degs)));
  return SimplicialMap(source, h.target_ptr(), h.levels());
}

}  // namespace

Instance gen_instance(const GenConfig& cfg, std::uint64_t trial) {
  cfg.check();
  Rng rng(cfg.seed, trial + 1);
  Instance inst;
  inst.family = pick_family(cfg, rng);
  try {
    if (inst.family == Family::corrupted) {
      const auto base = static_cast<Family>(rng.below(3));
      SimplicialMap h = draw(base, cfg, rng, inst.strategy, inst.require_buffer);
      inst.map = corrupt(h, rng, inst.strategy);
    } else {
      inst.map = draw(inst.family, cfg, rng, inst.strategy, inst.require_buffer);
    }
  } catch (const InputError& e) {
    inst.map.reset();
    inst.rejection = e.what();
    return inst;
  }
  const ValidationOptions opts{inst.require_buffer};
  const auto src = validate(inst.map->source(), opts);
  const auto tgt = validate(inst.map->target(), opts);
  const auto nat = validate_map(*inst.map);
  if (!src.ok || !tgt.ok || !nat.ok) {
    inst.rejection = !src.ok ? "source: " + src.message : !tgt.ok ? "target: " + tgt.message : "map: " + nat.message;
    inst.map.reset();
  }
  return inst;
}

SimplicialMap gen_morphism(const GenConfig& cfg) {
  GenConfig c = cfg;
  c.fixture_mix[static_cast<int>(Family::corrupted)] = 0;
  if (std::accumulate(c.fixture_mix.begin(), c.fixture_mix.end(), 0.0) <= 0) c.fixture_mix = {1, 1, 1, 1, 0};
  for (std::uint64_t t = 0;; ++t) {
    Instance inst = gen_instance(c, t);
    if (inst.map) return *inst.map;
  }
}

// ------------------------------------------------------------------ fixtures

namespace {

std::vector<std::string> split_first(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {text, ""};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

int parse_int(const std::string& s, const std::string& name) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("bad number in fixture '" + name + "'");
  }
}

SimplicialMap face_union_inclusion(int n, int k) {
  if (n < 1 || n > 6) throw InputError("fixture dimension out of range");
  auto whole = share(simplex(n, n + 1));
  std::vector<std::vector<char>> keep(static_cast<std::size_t>(n) + 2);
  for (int m = 0; m <= n + 1; ++m)
    for (const auto& theta : monotone_maps(m, n)) {
      std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
      for (int v : theta) hit[v] = 1;
      bool in = false;
      for (int i = 0; i <= n; ++i) in = in || (!hit[i] && i != k);
      keep[m].push_back(in);
    }
  return subobject(whole, keep).inclusion;
}

}  // namespace

SimplicialMap build_fixture(const std::string& name) {
  const auto parts = split_first(name);
  const std::string& head = parts[0];
  const std::string& arg = parts[1];
  if (head == "cyclic-cover") {
    const int k = parse_int(arg, name);
    if (k < 1 || k > 32) throw InputError("sheet count out of range");
    return cyclic_projection(k, 1, 3);
  }
  if (head == "simplex-to-point") {
    const int n = parse_int(arg, name);
    if (n < 0 || n > 6) throw InputError("fixture dimension out of range");
    return to_terminal(share(simplex(n, n + 1)));
  }
  if (head == "fold") {
    const auto spec = StandardObjectSpec::parse(arg);
    spec.check();
    return fold_map(share(build_standard(spec, spec.nondegenerate_dim() + 1)));
  }
  if (head == "nerve-projection") {
    const int k = parse_int(arg, name);
    if (k < 1 || k > 8) throw InputError("group order out of range");
    return product(share(circle(3)), share(nerve(FiniteGroupoid::cyclic_group(k), 3))).pr1;
  }
  if (head == "horn-inclusion") {
    const auto rest = split_first(arg);
    const int n = parse_int(rest[0], name);
    const int k = parse_int(rest[1], name);
    if (k < 0 || k > n) throw InputError("horn index out of range");
    return face_union_inclusion(n, k);
  }
  if (head == "boundary-inclusion") return face_union_inclusion(parse_int(arg, name), -1);
  throw InputError("unknown fixture '" + name + "'");
}

std::vector<std::string> curated_fixtures() {
  return {"cyclic-cover:1",     "cyclic-cover:2",     "cyclic-cover:3",   "simplex-to-point:1",
          "simplex-to-point:2", "fold:simplex:1",     "fold:circle",      "fold:boundary:2",
          "nerve-projection:2", "nerve-projection:3", "horn-inclusion:2:1", "boundary-inclusion:2"};
}

// ------------------------------------------------------------------ campaign

bool CampaignReport::adequate() const {
  return separable_coverings > 0 && non_separable_kan > 0 && trivial_coverings > 0 && non_kan > 0;
}

bool CampaignReport::passed() const {
  return theorem1_disagreements == 0 && theorem2_disagreements == 0 && kan_covering_missing_lift == 0 &&
         chain_violations == 0 && injection_disagreements == 0 && witnesses_emitted == witnesses_confirmed &&
         disagreements.empty();
}

void CampaignReport::merge(const CampaignReport& o) {
  trials += o.trials;
  skipped += o.skipped;
  scored += o.scored;
  for (int f = 0; f < family_count; ++f) per_family[f] += o.per_family[f];
  theorem1_agreements += o.theorem1_agreements;
  theorem1_disagreements += o.theorem1_disagreements;
  theorem2_in_hypothesis += o.theorem2_in_hypothesis;
  theorem2_agreements += o.theorem2_agreements;
  theorem2_disagreements += o.theorem2_disagreements;
  kan_covering_missing_lift += o.kan_covering_missing_lift;
  chain_violations += o.chain_violations;
  injective_maps += o.injective_maps;
  injection_checked += o.injection_checked;
  injection_disagreements += o.injection_disagreements;
  witnesses_emitted += o.witnesses_emitted;
  witnesses_confirmed += o.witnesses_confirmed;
  separable_coverings += o.separable_coverings;
  non_separable_kan += o.non_separable_kan;
  trivial_coverings += o.trivial_coverings;
  non_kan += o.non_kan;
  disagreements.insert(disagreements.end(), o.disagreements.begin(), o.disagreements.end());
  seconds += o.seconds;
}

namespace {

CampaignReport run_trial(const GenConfig& cfg, std::uint64_t trial) {
  CampaignReport r;
  r.trials = 1;
  const Instance inst = gen_instance(cfg, trial);
  r.per_family[static_cast<int>(inst.family)] = 1;
  if (!inst.map) {
    r.skipped = 1;
    return r;
  }
  r.scored = 1;
  const SimplicialMap& h = *inst.map;
  ordered_json reports;
  auto record = [&](const std::string& statement, std::vector<std::string> issues) {
    r.disagreements.push_back(
        Disagreement{trial, family_name(inst.family) + "/" + inst.strategy, statement, std::move(issues),
                     map_to_json(h), reports});
  };
  auto confirm = [&](const CheckReport& rep, const SimplicialMap& m) {
    if (!rep.witness) return;
    ++r.witnesses_emitted;
    if (witness_holds(rep.stats.check, m, *rep.witness))
      ++r.witnesses_confirmed;
    else
      record("witness", {rep.stats.check + " witness does not re-check"});
  };

  try {
    const AgreementReport t1 = theorem1_verdict(h);
    reports["theorem1"] = agreement_to_json(t1);
    (t1.agree ? r.theorem1_agreements : r.theorem1_disagreements)++;
    if (!t1.agree) record("theorem1", t1.issues);
    confirm(t1.left, h);
    confirm(t1.right, h);

    const ChainReport chain = implication_chain(h);
    reports["chain"] = chain_to_json(chain);
    if (!chain.holds) {
      ++r.chain_violations;
      record("chain", chain.violations);
    }
    for (const CheckReport* c : {&chain.trivial_covering, &chain.covering, &chain.kan}) confirm(*c, h);

    if (chain.kan.verdict) {
      const AgreementReport t2 = theorem2_verdict(h);
      reports["theorem2"] = agreement_to_json(t2);
      ++r.theorem2_in_hypothesis;
      (t2.agree ? r.theorem2_agreements : r.theorem2_disagreements)++;
      if (t2.right.witness && !std::holds_alternative<AmbiguousLift>(*t2.right.witness))
        ++r.kan_covering_missing_lift;
      if (!t2.agree) record("theorem2", t2.issues);
    }

    auto compare_injection = [&](const SimplicialMap& m, const char* what) {
      const CheckReport ic = injection_cartesian_check(m);
      const CheckReport tc = trivial_covering_check(m);
      ++r.injection_checked;
      confirm(ic, m);
      confirm(tc, m);
      if (ic.verdict != tc.verdict) {
        ++r.injection_disagreements;
        reports["injection_cartesian"] = report_to_json(ic);
        reports["trivial_covering"] = report_to_json(tc);
        record("injection-cartesian", {std::string("component test and comparison disagree on ") + what});
      }
    };
    if (classify(h).injective) {
      ++r.injective_maps;
      compare_injection(h, "the map");
    }
    compare_injection(diagonal(h).delta, "the diagonal");

    if (chain.covering.verdict && chain.separable.verdict) ++r.separable_coverings;
    if (chain.kan.verdict && !chain.separable.verdict) ++r.non_separable_kan;
    if (chain.trivial_covering.verdict) ++r.trivial_coverings;
    if (!chain.kan.verdict) ++r.non_kan;
  } catch (const std::exception& e) {
    record("error", {e.what()});
  }
  return r;
}

}  // namespace

CampaignReport run_campaign(const GenConfig& cfg) {
  cfg.check();
  const auto start = std::chrono::steady_clock::now();
  std::vector<CampaignReport> parts(cfg.trials);
  const auto trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < trials; ++t) parts[t] = run_trial(cfg, static_cast<std::uint64_t>(t));
  CampaignReport total;
  for (const auto& p : parts) total.merge(p);
  total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

ordered_json campaign_to_json(const CampaignReport& r, bool include_runtime) {
  ordered_json j;
  j["trials"] = r.trials;
  j["skipped"] = r.skipped;
  j["scored"] = r.scored;
  ordered_json families;
  for (int f = 0; f < family_count; ++f) families[family_name(static_cast<Family>(f))] = r.per_family[f];
  j["families"] = families;
  j["theorem1"] = {{"agreements", r.theorem1_agreements}, {"disagreements", r.theorem1_disagreements}};
  j["theorem2"] = {{"in_hypothesis", r.theorem2_in_hypothesis},
                   {"agreements", r.theorem2_agreements},
                   {"disagreements", r.theorem2_disagreements},
                   {"covering_failures_without_fill_in", r.kan_covering_missing_lift}};
  j["chain_violations"] = r.chain_violations;
  j["injection_cartesian"] = {{"injective_maps", r.injective_maps},
                              {"checked", r.injection_checked},
                              {"disagreements", r.injection_disagreements}};
  j["witnesses"] = {{"emitted", r.witnesses_emitted}, {"confirmed", r.witnesses_confirmed}};
  j["classes"] = {{"separable_covering", r.separable_coverings},
                  {"non_separable_kan", r.non_separable_kan},
                  {"trivial_covering", r.trivial_coverings},
                  {"non_kan", r.non_kan}};
  j["adequate"] = r.adequate();
  j["passed"] = r.passed();
  ordered_json records = ordered_json::array();
  for (const auto& d : r.disagreements)
    records.push_back({{"trial", d.trial}, {"family", d.family}, {"statement", d.statement}, {"issues", d.issues}});
  j["disagreements"] = records;
  if (include_runtime) j["runtime_seconds"] = r.seconds;
  return j;
}

void write_disagreement_bundles(const CampaignReport& r, const std::string& directory) {
  namespace fs = std::filesystem;
  for (std::size_t i = 0; i < r.disagreements.size(); ++i) {
    const auto& d = r.disagreements[i];
    const fs::path dir = fs::path(directory) / ("trial-" + std::to_string(d.trial) + "-" + d.statement);
    fs::create_directories(dir);
    write_text(dir / "map.json", dump(d.instance));
    ordered_json meta = {{"trial", d.trial}, {"family", d.family}, {"statement", d.statement},
                         {"issues", d.issues}, {"reports", d.reports}};
    write_text(dir / "report.json", meta.dump(2) + "\n");
  }
}

}  // namespace sset
