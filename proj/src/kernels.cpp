#include "sset/kernels.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "sset/pi0.hpp"

namespace sset::kernels {

namespace {

void add(std::uint64_t* counter, std::uint64_t amount) {
  if (counter) *counter += amount;
}

// vertex table: v[x * (n + 1) + j]
std::vector<Cell> vertex_table(const TruncatedSSet& x, int n) {
  const auto count = static_cast<std::ptrdiff_t>(x.count(n));
  const auto width = static_cast<std::ptrdiff_t>(n) + 1;
  std::vector<Cell> table(static_cast<std::size_t>(count * width));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < count; ++c)
    for (int j = 0; j <= n; ++j) table[c * width + j] = x.vertex_of(n, static_cast<Cell>(c), j);
  return table;
}

// Cells of a level grouped by image, each group ascending.
std::vector<std::vector<Cell>> fibers(const SimplicialMap& h, int n) {
  std::vector<std::vector<Cell>> out(h.target().count(n));
  for (Cell c = 0; c < h.source().count(n); ++c) out[h(n, c)].push_back(c);
  return out;
}

using Key = std::tuple<Cell, Cell, Cell>;  // (u, a, x)

std::vector<Key> sorted_keys(const SimplicialMap& h, int n, int j, const std::vector<Cell>& vertices) {
  const auto count = static_cast<std::ptrdiff_t>(h.source().count(n));
  std::vector<Key> keys(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < count; ++c)
    keys[c] = Key{h(n, static_cast<Cell>(c)), vertices[c * (n + 1) + j], static_cast<Cell>(c)};
  std::sort(keys.begin(), keys.end());
  return keys;
}

// ---------------------------------------------------------------- ambiguous pairs

std::optional<AmbiguousLift> ambiguous_serial(const SimplicialMap& h, std::uint64_t* examined) {
  const TruncatedSSet& a = h.source();
  for (int n = 0; n <= h.truncation(); ++n) {
    for (int j = 0; j <= n; ++j) {
      std::optional<AmbiguousLift> best;
      auto tuple = [](const AmbiguousLift& w) { return std::tie(w.u, w.a, w.x1, w.x2); };
      for (Cell x1 = 0; x1 < a.count(n); ++x1) {
        for (Cell x2 = x1 + 1; x2 < a.count(n); ++x2) {
          add(examined, 1);
          if (h(n, x1) != h(n, x2)) continue;
          const Cell v1 = vertex_by_trailing_faces(a, n, x1, j);
          if (v1 != vertex_by_trailing_faces(a, n, x2, j)) continue;
          AmbiguousLift w{n, j, h(n, x1), v1, x1, x2};
          if (!best || tuple(w) < tuple(*best)) best = w;
        }
      }
      if (best) return best;
    }
  }
  return std::nullopt;
}

std::optional<AmbiguousLift> ambiguous_parallel(const SimplicialMap& h, std::uint64_t* examined) {
  for (int n = 0; n <= h.truncation(); ++n) {
    const auto vertices = vertex_table(h.source(), n);
    for (int j = 0; j <= n; ++j) {
      const auto keys = sorted_keys(h, n, j, vertices);
      add(examined, keys.size());
      for (std::size_t t = 0; t + 1 < keys.size(); ++t) {
        const auto& [u, v, x1] = keys[t];
        const auto& [u2, v2, x2] = keys[t + 1];
        if (u == u2 && v == v2) return AmbiguousLift{n, j, u, v, x1, x2};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- fill-ins

std::optional<Witness> fill_in_serial(const SimplicialMap& h, std::uint64_t* examined) {
  const TruncatedSSet& a = h.source();
  const TruncatedSSet& b = h.target();
  for (int n = 0; n <= h.truncation(); ++n) {
    for (int j = 0; j <= n; ++j) {
      for (Cell u = 0; u < b.count(n); ++u) {
        const Cell corner = vertex_by_trailing_faces(b, n, u, j);
        for (Cell v = 0; v < a.count(0); ++v) {
          if (h(0, v) != corner) continue;
          add(examined, 1);
          std::vector<Cell> lifts;
          for (Cell x = 0; x < a.count(n) && lifts.size() < 2; ++x)
            if (h(n, x) == u && vertex_by_trailing_faces(a, n, x, j) == v) lifts.push_back(x);
          if (lifts.empty())
            return Witness{MissingLift{MissingLift::Problem::fill_in, n, j, u, v, {}}};
          if (lifts.size() > 1) return Witness{AmbiguousLift{n, j, u, v, lifts[0], lifts[1]}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> fill_in_parallel(const SimplicialMap& h, std::uint64_t* examined) {
  const TruncatedSSet& b = h.target();
  const auto over_vertex = fibers(h, 0);
  for (int n = 0; n <= h.truncation(); ++n) {
    const auto vertices = vertex_table(h.source(), n);
    for (int j = 0; j <= n; ++j) {
      const auto keys = sorted_keys(h, n, j, vertices);
      const auto count = static_cast<std::ptrdiff_t>(b.count(n));
      std::vector<std::optional<Witness>> found(static_cast<std::size_t>(count));
      std::uint64_t problems = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : problems)
      for (std::ptrdiff_t uu = 0; uu < count; ++uu) {
        const auto u = static_cast<Cell>(uu);
        const Cell corner = b.vertex_of(n, u, j);
        for (Cell v : over_vertex[corner]) {
          ++problems;
          const auto lo = std::lower_bound(keys.begin(), keys.end(), Key{u, v, 0});
          const auto hi = std::lower_bound(keys.begin(), keys.end(), Key{u, v + 1, 0});
          const auto lifts = hi - lo;
          if (lifts == 1) continue;
          if (lifts == 0)
            found[uu] = Witness{MissingLift{MissingLift::Problem::fill_in, n, j, u, v, {}}};
          else
            found[uu] = Witness{AmbiguousLift{n, j, u, v, std::get<2>(*lo), std::get<2>(*(lo + 1))}};
          break;
        }
      }
      add(examined, problems);
      for (auto& w : found)
        if (w) return w;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- horns

bool compatible(const TruncatedSSet& a, int n, const std::vector<Cell>& y, const std::vector<char>& set, int i,
                Cell candidate) {
  // y holds n+1 slots of degree n-1 simplices; checks d_{i'} y_i = d_{i-1} y_{i'} for set slots i' < i.
  if (n < 2) return true;
  for (int earlier = 0; earlier < i; ++earlier) {
    if (!set[earlier]) continue;
    if (a.face(n - 1, earlier, candidate) != a.face(n - 1, i - 1, y[earlier])) return false;
  }
  return true;
}

MissingLift horn_witness(int n, int k, Cell u, const std::vector<Cell>& y) {
  MissingLift w{MissingLift::Problem::horn, n, k, u, 0, {}};
  for (int i = 0; i <= n; ++i)
    if (i != k) w.horn.push_back(y[i]);
  return w;
}

std::optional<MissingLift> horn_serial(const SimplicialMap& h, int bound, std::uint64_t* examined) {
  const TruncatedSSet& a = h.source();
  const TruncatedSSet& b = h.target();
  for (int n = 1; n <= bound; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (Cell u = 0; u < b.count(n); ++u) {
        std::vector<Cell> y(static_cast<std::size_t>(n) + 1, 0);
        std::vector<char> set(static_cast<std::size_t>(n) + 1, 0);
        std::optional<MissingLift> missing;
        auto recurse = [&](auto&& self, int i) -> void {
          if (missing) return;
          if (i > n) {
            add(examined, 1);
            for (Cell x = 0; x < a.count(n); ++x) {
              if (h(n, x) != u) continue;
              bool fills = true;
              for (int f = 0; f <= n && fills; ++f)
                if (f != k) fills = a.face(n, f, x) == y[f];
              if (fills) return;
            }
            missing = horn_witness(n, k, u, y);
            return;
          }
          if (i == k) {
            self(self, i + 1);
            return;
          }
          const Cell below = b.face(n, i, u);
          for (Cell c = 0; c < a.count(n - 1) && !missing; ++c) {
            if (h(n - 1, c) != below || !compatible(a, n, y, set, i, c)) continue;
            y[i] = c;
            set[i] = 1;
            self(self, i + 1);
            set[i] = 0;
          }
        };
        recurse(recurse, 0);
        if (missing) return missing;
      }
    }
  }
  return std::nullopt;
}

std::optional<MissingLift> horn_parallel(const SimplicialMap& h, int bound, std::uint64_t* examined) {
  const TruncatedSSet& a = h.source();
  const TruncatedSSet& b = h.target();
  for (int n = 1; n <= bound; ++n) {
    const auto below = fibers(h, n - 1);
    for (int k = 0; k <= n; ++k) {
      // Filled horns: (u, y_i for i != k) for every x in A_n.
      std::vector<std::vector<Cell>> filled(a.count(n));
      for (Cell x = 0; x < a.count(n); ++x) {
        filled[x].push_back(h(n, x));
        for (int i = 0; i <= n; ++i)
          if (i != k) filled[x].push_back(a.face(n, i, x));
      }
      std::sort(filled.begin(), filled.end());

      const auto count = static_cast<std::ptrdiff_t>(b.count(n));
      std::vector<std::optional<MissingLift>> found(static_cast<std::size_t>(count));
      std::uint64_t problems = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : problems)
      for (std::ptrdiff_t uu = 0; uu < count; ++uu) {
        const auto u = static_cast<Cell>(uu);
        std::vector<Cell> y(static_cast<std::size_t>(n) + 1, 0);
        std::vector<char> set(static_cast<std::size_t>(n) + 1, 0);
        std::vector<Cell> key;
        auto recurse = [&](auto&& self, int i) -> void {
          if (found[uu]) return;
          if (i > n) {
            ++problems;
            key.assign(1, u);
            for (int f = 0; f <= n; ++f)
              if (f != k) key.push_back(y[f]);
            if (!std::binary_search(filled.begin(), filled.end(), key)) found[uu] = horn_witness(n, k, u, y);
            return;
          }
          if (i == k) {
            self(self, i + 1);
            return;
          }
          for (Cell c : below[b.face(n, i, u)]) {
            if (!compatible(a, n, y, set, i, c)) continue;
            y[i] = c;
            set[i] = 1;
            self(self, i + 1);
            set[i] = 0;
            if (found[uu]) return;
          }
        };
        recurse(recurse, 0);
      }
      add(examined, problems);
      for (auto& w : found)
        if (w) return w;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- component leaks

std::optional<ComponentLeak> leak_serial(const TruncatedSSet& x, const std::vector<std::vector<char>>& image,
                                         std::uint64_t* examined) {
  const auto label = components_by_search(x);
  std::vector<char> meets;
  for (int n = 0; n <= x.truncation(); ++n)
    for (Cell c = 0; c < x.count(n); ++c)
      if (image[n][c]) {
        const Cell k = label[vertex_by_trailing_faces(x, n, c, 0)];
        if (meets.size() <= k) meets.resize(k + 1, 0);
        meets[k] = 1;
      }
  for (int n = 0; n <= x.truncation(); ++n) {
    for (Cell c = 0; c < x.count(n); ++c) {
      add(examined, 1);
      const Cell k = label[vertex_by_trailing_faces(x, n, c, 0)];
      if (!image[n][c] && k < meets.size() && meets[k]) return ComponentLeak{k, n, c};
    }
  }
  return std::nullopt;
}

std::optional<ComponentLeak> leak_parallel(const TruncatedSSet& x, const std::vector<std::vector<char>>& image,
                                           std::uint64_t* examined) {
  const ComponentPartition parts = pi0(x);
  std::vector<char> meets(parts.count, 0);
  for (Cell v = 0; v < x.count(0); ++v)
    if (image[0][v]) meets[parts.class_of[0][v]] = 1;
  for (int n = 0; n <= x.truncation(); ++n) {
    const auto count = static_cast<std::ptrdiff_t>(x.count(n));
    std::ptrdiff_t first = count;
#pragma omp parallel for schedule(static) reduction(min : first)
    for (std::ptrdiff_t c = 0; c < count; ++c)
      if (!image[n][c] && meets[parts.class_of[n][c]]) first = std::min(first, c);
    add(examined, static_cast<std::uint64_t>(count));
    if (first < count) {
      const auto cell = static_cast<Cell>(first);
      return ComponentLeak{parts.class_of[n][cell], n, cell};
    }
  }
  return std::nullopt;
}

}  // namespace

Cell vertex_by_trailing_faces(const TruncatedSSet& x, int n, Cell cell, int j) {
  int degree = n;
  while (degree > j) {
    cell = x.face(degree, degree, cell);
    --degree;
  }
  while (degree > 0) cell = x.face(degree--, 0, cell);
  return cell;
}

std::vector<Cell> components_by_search(const TruncatedSSet& x) {
  const std::size_t vertices = x.count(0);
  std::vector<std::vector<Cell>> adjacent(vertices);
  if (x.truncation() >= 1) {
    for (Cell e = 0; e < x.count(1); ++e) {
      const Cell s = x.face(1, 1, e);
      const Cell t = x.face(1, 0, e);
      adjacent[s].push_back(t);
      adjacent[t].push_back(s);
    }
  }
  constexpr Cell unset = ~Cell{0};
  std::vector<Cell> label(vertices, unset);
  Cell next = 0;
  for (Cell start = 0; start < vertices; ++start) {
    if (label[start] != unset) continue;
    std::deque<Cell> queue{start};
    label[start] = next;
    while (!queue.empty()) {
      const Cell v = queue.front();
      queue.pop_front();
      for (Cell w : adjacent[v]) {
        if (label[w] == unset) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::optional<AmbiguousLift> ambiguous_pair_scan(const SimplicialMap& h, Execution mode, std::uint64_t* examined) {
  return mode == Execution::parallel ? ambiguous_parallel(h, examined) : ambiguous_serial(h, examined);
}

std::optional<Witness> fill_in_scan(const SimplicialMap& h, Execution mode, std::uint64_t* examined) {
  return mode == Execution::parallel ? fill_in_parallel(h, examined) : fill_in_serial(h, examined);
}

std::optional<MissingLift> horn_scan(const SimplicialMap& h, int bound, Execution mode, std::uint64_t* examined) {
  if (bound > h.truncation()) throw InputError("horn bound exceeds the truncation");
  return mode == Execution::parallel ? horn_parallel(h, bound, examined) : horn_serial(h, bound, examined);
}

std::optional<ComponentLeak> leak_scan(const TruncatedSSet& target, const std::vector<std::vector<char>>& image,
                                       Execution mode, std::uint64_t* examined) {
  return mode == Execution::parallel ? leak_parallel(target, image, examined) : leak_serial(target, image, examined);
}

}  // namespace sset::kernels
