#include "sset/standard.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "sset/presentation.hpp"

namespace sset {

void StandardObjectSpec::check() const {
  switch (kind) {
    case Kind::simplex:
    case Kind::boundary:
      if (n < 0) throw InputError("simplex dimension must be nonnegative");
      break;
    case Kind::horn:
      if (n < 1 || k < 0 || k > n) throw InputError("horn needs 0 <= k <= n and n >= 1");
      break;
    case Kind::circle:
      break;
    case Kind::cyclic_cover:
      if (n < 1) throw InputError("cyclic cover needs at least one sheet");
      break;
    case Kind::disjoint_union:
      if (parts.empty()) throw InputError("disjoint union needs at least one part");
      for (const auto& p : parts) p.check();
      break;
  }
}

int StandardObjectSpec::nondegenerate_dim() const {
  switch (kind) {
    case Kind::simplex:
      return n;
    case Kind::boundary:
    case Kind::horn:
      return n - 1;
    case Kind::circle:
    case Kind::cyclic_cover:
      return 1;
    case Kind::disjoint_union: {
      int d = -1;
      for (const auto& p : parts) d = std::max(d, p.nondegenerate_dim());
      return d;
    }
  }
  return -1;
}

std::string StandardObjectSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::simplex:
      os << "simplex:" << n;
      break;
    case Kind::boundary:
      os << "boundary:" << n;
      break;
    case Kind::horn:
      os << "horn:" << n << ":" << k;
      break;
    case Kind::circle:
      os << "circle";
      break;
    case Kind::cyclic_cover:
      os << "cyclic-cover:" << n;
      break;
    case Kind::disjoint_union:
      for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "+" : "") << parts[i].to_string();
      break;
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw InputError("expected an integer, got '" + s + "'");
  return value;
}

}  // namespace

StandardObjectSpec StandardObjectSpec::parse(const std::string& text) {
  const auto summands = split(text, '+');
  if (summands.size() > 1) {
    std::vector<StandardObjectSpec> parts;
    for (const auto& s : summands) parts.push_back(parse(s));
    auto spec = disjoint_union(std::move(parts));
    spec.check();
    return spec;
  }
  const auto fields = split(text, ':');
  const std::string& name = fields[0];
  StandardObjectSpec spec;
  auto arity = [&](std::size_t count) {
    if (fields.size() != count + 1) throw InputError("wrong number of parameters in '" + text + "'");
  };
  if (name == "simplex") {
    arity(1);
    spec = simplex(parse_int(fields[1]));
  } else if (name == "boundary") {
    arity(1);
    spec = boundary(parse_int(fields[1]));
  } else if (name == "horn") {
    arity(2);
    spec = horn(parse_int(fields[1]), parse_int(fields[2]));
  } else if (name == "circle") {
    arity(0);
    spec = circle();
  } else if (name == "cyclic-cover") {
    arity(1);
    spec = cyclic_cover(parse_int(fields[1]));
  } else {
    throw InputError("unknown standard object '" + name + "'");
  }
  spec.check();
  return spec;
}

std::vector<std::vector<int>> monotone_maps(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int low) -> void {
    if (static_cast<int>(current.size()) == m + 1) {
      out.push_back(current);
      return;
    }
    for (int v = low; v <= n; ++v) {
      current.push_back(v);
      self(self, v);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

TruncatedSSet simplex(int n, int truncation) {
  const auto levels = static_cast<std::size_t>(truncation) + 1;
  std::vector<std::vector<std::vector<int>>> cells(levels);
  std::vector<std::map<std::vector<int>, Cell>> index(levels);
  for (int m = 0; m <= truncation; ++m) {
    cells[m] = monotone_maps(m, n);
    for (std::size_t c = 0; c < cells[m].size(); ++c) index[m][cells[m][c]] = static_cast<Cell>(c);
  }
  std::vector<std::size_t> counts(levels);
  std::vector<OperatorTable> faces(levels), degeneracies(levels);
  for (int m = 0; m <= truncation; ++m) {
    counts[m] = cells[m].size();
    if (m >= 1) {
      faces[m].assign(m + 1, std::vector<Cell>(counts[m]));
      for (int i = 0; i <= m; ++i)
        for (Cell c = 0; c < counts[m]; ++c) {
          auto seq = cells[m][c];
          seq.erase(seq.begin() + i);
          faces[m][i][c] = index[m - 1].at(seq);
        }
    }
    if (m < truncation) {
      degeneracies[m].assign(m + 1, std::vector<Cell>(counts[m]));
      for (int i = 0; i <= m; ++i)
        for (Cell c = 0; c < counts[m]; ++c) {
          auto seq = cells[m][c];
          seq.insert(seq.begin() + i, seq[i]);
          degeneracies[m][i][c] = index[m + 1].at(seq);
        }
    }
  }
  return TruncatedSSet(truncation, std::move(counts), std::move(faces), std::move(degeneracies));
}

namespace {

// Sub-object of Delta[n] of the monotone maps accepted by `keep`.
TruncatedSSet simplex_part(int n, int truncation, const std::function<bool(const std::vector<int>&)>& keep) {
  auto whole = share(simplex(n, truncation));
  std::vector<std::vector<char>> mask(static_cast<std::size_t>(truncation) + 1);
  for (int m = 0; m <= truncation; ++m) {
    const auto seqs = monotone_maps(m, n);
    mask[m].resize(seqs.size());
    for (std::size_t c = 0; c < seqs.size(); ++c) mask[m][c] = keep(seqs[c]) ? 1 : 0;
  }
  return *subobject(whole, mask).object;
}

std::vector<char> image_of(const std::vector<int>& seq, int n) {
  std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
  for (int v : seq) hit[v] = 1;
  return hit;
}

}  // namespace

TruncatedSSet boundary(int n, int truncation) {
  return simplex_part(n, truncation, [n](const std::vector<int>& seq) {
    const auto hit = image_of(seq, n);
    for (char h : hit)
      if (!h) return true;
    return false;
  });
}

TruncatedSSet horn(int n, int k, int truncation) {
  // Union of the faces d_i Delta[n], i != k: maps missing some vertex other than k.
  return simplex_part(n, truncation, [n, k](const std::vector<int>& seq) {
    const auto hit = image_of(seq, n);
    for (int v = 0; v <= n; ++v)
      if (v != k && !hit[v]) return true;
    return false;
  });
}

TruncatedSSet terminal(int truncation) { return simplex(0, truncation); }

TruncatedSSet graph_object(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                           int truncation) {
  Presentation p;
  for (std::size_t v = 0; v < vertices; ++v) p.add_vertex();
  for (const auto& [from, to] : edges) {
    if (from >= vertices || to >= vertices) throw InputError("edge endpoint out of range");
    p.add({p.cell(to), p.cell(from)});
  }
  return materialize(p, truncation).object;
}

TruncatedSSet circle(int truncation) { return graph_object(1, {{0, 0}}, truncation); }

TruncatedSSet cyclic_cover(int sheets, int truncation) {
  if (sheets < 1) throw InputError("cyclic cover needs at least one sheet");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto k = static_cast<std::size_t>(sheets);
  for (std::size_t i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return graph_object(k, edges, truncation);
}

TruncatedSSet discrete(std::size_t points, int truncation) {
  const auto levels = static_cast<std::size_t>(truncation) + 1;
  std::vector<Cell> id(points);
  for (std::size_t c = 0; c < points; ++c) id[c] = static_cast<Cell>(c);
  std::vector<OperatorTable> faces(levels), degeneracies(levels);
  for (int n = 1; n <= truncation; ++n) faces[n].assign(n + 1, id);
  for (int n = 0; n < truncation; ++n) degeneracies[n].assign(n + 1, id);
  return TruncatedSSet(truncation, std::vector<std::size_t>(levels, points), std::move(faces),
                       std::move(degeneracies));
}

TruncatedSSet build_standard(const StandardObjectSpec& spec, int truncation) {
  spec.check();
  if (truncation < spec.nondegenerate_dim() + 1) {
    std::ostringstream os;
    os << "truncation " << truncation << " too small for " << spec.to_string() << " (needs "
       << spec.nondegenerate_dim() + 1 << ")";
    throw InputError(os.str());
  }
  using Kind = StandardObjectSpec::Kind;
  switch (spec.kind) {
    case Kind::simplex:
      return simplex(spec.n, truncation);
    case Kind::boundary:
      return boundary(spec.n, truncation);
    case Kind::horn:
      return horn(spec.n, spec.k, truncation);
    case Kind::circle:
      return circle(truncation);
    case Kind::cyclic_cover:
      return cyclic_cover(spec.n, truncation);
    case Kind::disjoint_union: {
      ObjectPtr acc = share(build_standard(spec.parts[0], truncation));
      for (std::size_t i = 1; i < spec.parts.size(); ++i)
        acc = disjoint_union(acc, share(build_standard(spec.parts[i], truncation))).object;
      return *acc;
    }
  }
  throw InputError("unknown standard object");
}

Coproduct disjoint_union(const ObjectPtr& x, const ObjectPtr& y) {
  if (x->truncation() != y->truncation()) throw InputError("disjoint union of objects with different truncations");
  const int top = x->truncation();
  const auto levels = static_cast<std::size_t>(top) + 1;
  std::vector<std::size_t> counts(levels);
  std::vector<OperatorTable> faces(levels), degeneracies(levels);
  std::vector<std::vector<Cell>> left(levels), right(levels);
  for (int n = 0; n <= top; ++n) {
    counts[n] = x->count(n) + y->count(n);
    for (Cell c = 0; c < x->count(n); ++c) left[n].push_back(c);
    for (Cell c = 0; c < y->count(n); ++c) right[n].push_back(static_cast<Cell>(x->count(n) + c));
  }
  for (int n = 1; n <= top; ++n) {
    faces[n].resize(n + 1);
    const auto shift = static_cast<Cell>(x->count(n - 1));
    for (int i = 0; i <= n; ++i) {
      faces[n][i] = x->faces(n)[i];
      for (Cell c : y->faces(n)[i]) faces[n][i].push_back(c + shift);
    }
  }
  for (int n = 0; n < top; ++n) {
    degeneracies[n].resize(n + 1);
    const auto shift = static_cast<Cell>(x->count(n + 1));
    for (int i = 0; i <= n; ++i) {
      degeneracies[n][i] = x->degeneracies(n)[i];
      for (Cell c : y->degeneracies(n)[i]) degeneracies[n][i].push_back(c + shift);
    }
  }
  auto sum = share(TruncatedSSet(top, std::move(counts), std::move(faces), std::move(degeneracies)));
  return Coproduct{sum, SimplicialMap(x, sum, std::move(left)), SimplicialMap(y, sum, std::move(right))};
}

SimplicialMap fold_map(const ObjectPtr& b, int copies) {
  if (copies < 1) throw InputError("fold needs at least one copy");
  ObjectPtr acc = b;
  for (int i = 1; i < copies; ++i) acc = disjoint_union(acc, b).object;
  std::vector<std::vector<Cell>> level(static_cast<std::size_t>(b->truncation()) + 1);
  for (int n = 0; n <= b->truncation(); ++n)
    for (int copy = 0; copy < copies; ++copy)
      for (Cell c = 0; c < b->count(n); ++c) level[n].push_back(c);
  return SimplicialMap(acc, b, std::move(level));
}

SimplicialMap to_terminal(const ObjectPtr& x) {
  auto point = share(terminal(x->truncation()));
  std::vector<std::vector<Cell>> level(static_cast<std::size_t>(x->truncation()) + 1);
  for (int n = 0; n <= x->truncation(); ++n) level[n].assign(x->count(n), 0);
  return SimplicialMap(x, point, std::move(level));
}

Subobject subobject(const ObjectPtr& x, const std::vector<std::vector<char>>& keep) {
  const int top = x->truncation();
  const auto levels = static_cast<std::size_t>(top) + 1;
  if (keep.size() != levels) throw InputError("sub-object mask does not match truncation");
  std::vector<std::vector<Cell>> new_index(levels), old_index(levels);
  for (int n = 0; n <= top; ++n) {
    if (keep[n].size() != x->count(n)) throw InputError("sub-object mask has the wrong size");
    new_index[n].assign(x->count(n), 0);
    for (Cell c = 0; c < x->count(n); ++c) {
      if (!keep[n][c]) continue;
      new_index[n][c] = static_cast<Cell>(old_index[n].size());
      old_index[n].push_back(c);
    }
  }
  std::vector<std::size_t> counts(levels);
  std::vector<OperatorTable> faces(levels), degeneracies(levels);
  for (int n = 0; n <= top; ++n) {
    counts[n] = old_index[n].size();
    if (n >= 1) {
      faces[n].assign(n + 1, {});
      for (int i = 0; i <= n; ++i)
        for (Cell c : old_index[n]) {
          const Cell f = x->face(n, i, c);
          if (!keep[n - 1][f]) throw InputError("sub-object is not closed under faces");
          faces[n][i].push_back(new_index[n - 1][f]);
        }
    }
    if (n < top) {
      degeneracies[n].assign(n + 1, {});
      for (int i = 0; i <= n; ++i)
        for (Cell c : old_index[n]) {
          const Cell s = x->degeneracy(n, i, c);
          if (!keep[n + 1][s]) throw InputError("sub-object is not closed under degeneracies");
          degeneracies[n][i].push_back(new_index[n + 1][s]);
        }
    }
  }
  auto sub = share(TruncatedSSet(top, std::move(counts), std::move(faces), std::move(degeneracies)));
  return Subobject{sub, SimplicialMap(sub, x, std::move(old_index))};
}

Subobject generated_subobject(const ObjectPtr& x, const std::vector<std::pair<int, Cell>>& seeds) {
  const int top = x->truncation();
  std::vector<std::vector<char>> keep(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) keep[n].assign(x->count(n), 0);
  std::vector<std::pair<int, Cell>> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    auto [n, c] = stack.back();
    stack.pop_back();
    if (keep[n][c]) continue;
    keep[n][c] = 1;
    for (int i = 0; i <= n && n >= 1; ++i) stack.emplace_back(n - 1, x->face(n, i, c));
    for (int i = 0; i <= n && n < top; ++i) stack.emplace_back(n + 1, x->degeneracy(n, i, c));
  }
  return subobject(x, keep);
}

SimplicialMap vertex_inclusion(int n, int v, int truncation) {
  if (v < 0 || v > n) throw InputError("vertex index out of range");
  auto point = share(terminal(truncation));
  auto target = share(simplex(n, truncation));
  std::vector<std::vector<Cell>> level(static_cast<std::size_t>(truncation) + 1);
  for (int m = 0; m <= truncation; ++m) {
    const std::vector<int> constant(static_cast<std::size_t>(m) + 1, 0);
    level[m] = {target->apply(0, static_cast<Cell>(v), constant)};
  }
  return SimplicialMap(point, target, std::move(level));
}

}  // namespace sset
