#include "sset/limits.hpp"

#include <algorithm>

#include "sset/standard.hpp"

namespace sset {

std::optional<Cell> FiberProduct::index_of(int n, Cell x1, Cell x2) const {
  const auto& level = pairs[n];
  const auto begin = level.begin() + static_cast<std::ptrdiff_t>(row_start[n][x1]);
  const auto end = level.begin() + static_cast<std::ptrdiff_t>(row_start[n][x1 + 1]);
  auto it = std::lower_bound(begin, end, std::make_pair(x1, x2));
  if (it == end || it->second != x2) return std::nullopt;
  return static_cast<Cell>(it - level.begin());
}

FiberProduct pullback(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.target_ptr() != g.target_ptr() && !(f.target() == g.target()))
    throw InputError("pullback of maps with different targets");
  const TruncatedSSet& x = f.source();
  const TruncatedSSet& y = g.source();
  const TruncatedSSet& b = f.target();
  const int top = b.truncation();
  const auto levels = static_cast<std::size_t>(top) + 1;

  std::vector<std::vector<std::pair<Cell, Cell>>> pairs(levels);
  std::vector<std::vector<std::size_t>> first(levels);
  for (int n = 0; n <= top; ++n) {
    std::vector<std::vector<Cell>> over(b.count(n));
    for (Cell c = 0; c < y.count(n); ++c) over[g(n, c)].push_back(c);
    first[n].reserve(x.count(n) + 1);
    for (Cell c = 0; c < x.count(n); ++c) {
      first[n].push_back(pairs[n].size());
      for (Cell d : over[f(n, c)]) pairs[n].emplace_back(c, d);
    }
    first[n].push_back(pairs[n].size());
  }

  FiberProduct out{nullptr, identity_map(f.target_ptr()), identity_map(f.target_ptr()), std::move(pairs),
                   std::move(first)};

  std::vector<std::size_t> counts(levels);
  std::vector<OperatorTable> faces(levels), degeneracies(levels);
  for (int n = 0; n <= top; ++n) counts[n] = out.pairs[n].size();
  for (int n = 1; n <= top; ++n) {
    faces[n].assign(n + 1, std::vector<Cell>(counts[n]));
    for (int i = 0; i <= n; ++i) {
      const auto count = static_cast<std::ptrdiff_t>(counts[n]);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t c = 0; c < count; ++c) {
        const auto [p, q] = out.pairs[n][c];
        faces[n][i][c] = *out.index_of(n - 1, x.face(n, i, p), y.face(n, i, q));
      }
    }
  }
  for (int n = 0; n < top; ++n) {
    degeneracies[n].assign(n + 1, std::vector<Cell>(counts[n]));
    for (int i = 0; i <= n; ++i) {
      const auto count = static_cast<std::ptrdiff_t>(counts[n]);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t c = 0; c < count; ++c) {
        const auto [p, q] = out.pairs[n][c];
        degeneracies[n][i][c] = *out.index_of(n + 1, x.degeneracy(n, i, p), y.degeneracy(n, i, q));
      }
    }
  }
  out.object = share(TruncatedSSet(top, counts, std::move(faces), std::move(degeneracies)));

  std::vector<std::vector<Cell>> left(levels), right(levels);
  for (int n = 0; n <= top; ++n) {
    for (const auto& [p, q] : out.pairs[n]) {
      left[n].push_back(p);
      right[n].push_back(q);
    }
  }
  out.pr1 = SimplicialMap(out.object, f.source_ptr(), std::move(left));
  out.pr2 = SimplicialMap(out.object, g.source_ptr(), std::move(right));
  return out;
}

DiagonalData diagonal(const SimplicialMap& h) {
  FiberProduct kp = pullback(h, h);
  const int top = h.truncation();
  const auto levels = static_cast<std::size_t>(top) + 1;
  std::vector<std::vector<Cell>> level(levels);
  std::vector<std::vector<char>> image(levels);
  for (int n = 0; n <= top; ++n) {
    image[n].assign(kp.object->count(n), 0);
    for (Cell c = 0; c < h.source().count(n); ++c) {
      const Cell d = *kp.index_of(n, c, c);
      level[n].push_back(d);
      image[n][d] = 1;
    }
  }
  SimplicialMap delta(h.source_ptr(), kp.object, std::move(level));
  return DiagonalData{std::move(kp), std::move(delta), std::move(image)};
}

FiberProduct product(const ObjectPtr& x, const ObjectPtr& y) {
  auto point = share(terminal(x->truncation()));
  if (x->truncation() != y->truncation()) throw InputError("product of objects with different truncations");
  const auto levels = static_cast<std::size_t>(x->truncation()) + 1;
  std::vector<std::vector<Cell>> lx(levels), ly(levels);
  for (int n = 0; n <= x->truncation(); ++n) {
    lx[n].assign(x->count(n), 0);
    ly[n].assign(y->count(n), 0);
  }
  return pullback(SimplicialMap(x, point, std::move(lx)), SimplicialMap(y, point, std::move(ly)));
}

}  // namespace sset
