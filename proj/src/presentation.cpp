#include "sset/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace sset {

namespace {

std::vector<int> coface(int m, int i) {
  // delta_i : [m-1] -> [m], skipping i
  std::vector<int> theta;
  for (int v = 0; v <= m; ++v)
    if (v != i) theta.push_back(v);
  return theta;
}

std::vector<int> codegeneracy(int m, int i) {
  // sigma_i : [m+1] -> [m], hitting i twice
  std::vector<int> theta;
  for (int v = 0; v <= m; ++v) {
    theta.push_back(v);
    if (v == i) theta.push_back(v);
  }
  return theta;
}

bool is_surjection(const std::vector<int>& epi, int d) {
  if (epi.empty() || epi.front() != 0 || epi.back() != d) return false;
  for (std::size_t t = 1; t < epi.size(); ++t) {
    const int step = epi[t] - epi[t - 1];
    if (step != 0 && step != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<int> identity_epi(int d) {
  std::vector<int> epi(static_cast<std::size_t>(d) + 1);
  for (int v = 0; v <= d; ++v) epi[v] = v;
  return epi;
}

std::vector<std::vector<int>> surjections(int m, int d) {
  std::vector<std::vector<int>> out;
  if (d > m || d < 0) return out;
  // A surjection is determined by the d positions t in 1..m where it steps up.
  std::vector<int> current{0};
  auto recurse = [&](auto&& self, int t, int value) -> void {
    if (t > m) {
      if (value == d) out.push_back(current);
      return;
    }
    const int remaining = m - t + 1;
    if (d - value < remaining) {
      current.push_back(value);
      self(self, t + 1, value);
      current.pop_back();
    }
    if (value < d) {
      current.push_back(value + 1);
      self(self, t + 1, value + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 1, 0);
  return out;
}

std::size_t Presentation::add_vertex() { return add({}); }

std::size_t Presentation::add(std::vector<EzCell> faces) {
  const int dim = faces.empty() ? 0 : static_cast<int>(faces.size()) - 1;
  if (faces.size() == 1) throw InputError("a 0-dimensional generator has no faces");
  for (const EzCell& f : faces) {
    if (f.generator >= generators_.size()) throw InputError("face names an unknown generator");
    if (f.degree() != dim - 1) throw InputError("face has the wrong degree");
    if (!is_surjection(f.epi, generators_[f.generator].dim))
      throw InputError("face operator is not a surjection onto its generator");
  }
  for (int j = 1; j <= dim && dim >= 2; ++j) {
    for (int i = 0; i < j; ++i) {
      if (act(faces[j], coface(dim - 1, i)) != act(faces[i], coface(dim - 1, j - 1))) {
        std::ostringstream os;
        os << "faces violate d_i d_j = d_{j-1} d_i at i=" << i << ", j=" << j;
        throw InputError(os.str());
      }
    }
  }
  generators_.push_back(Generator{dim, std::move(faces)});
  return generators_.size() - 1;
}

int Presentation::dim() const {
  int d = -1;
  for (const auto& g : generators_) d = std::max(d, g.dim);
  return d;
}

EzCell Presentation::cell(std::size_t g) const { return EzCell{g, identity_epi(generators_.at(g).dim)}; }

EzCell Presentation::act(const EzCell& c, const std::vector<int>& theta) const {
  std::size_t g = c.generator;
  std::vector<int> s(theta.size());
  for (std::size_t t = 0; t < theta.size(); ++t) s[t] = c.epi.at(theta[t]);
  for (;;) {
    const int d = generators_[g].dim;
    std::vector<char> hit(static_cast<std::size_t>(d) + 1, 0);
    for (int v : s) hit[v] = 1;
    int missing = -1;
    for (int v = d; v >= 0; --v) {
      if (!hit[v]) {
        missing = v;
        break;
      }
    }
    if (missing < 0) return EzCell{g, std::move(s)};
    const EzCell& f = generators_[g].faces[missing];
    for (int& v : s) {
      if (v > missing) --v;
      v = f.epi[v];
    }
    g = f.generator;
  }
}

Cell Materialized::lookup(const EzCell& c) const {
  const auto& table = index.at(c.degree());
  auto it = table.find(c);
  if (it == table.end()) throw InputError("cell not present in materialized object");
  return it->second;
}

Materialized materialize(const Presentation& p, int truncation) {
  if (truncation < 0) throw InputError("negative truncation");
  const auto levels = static_cast<std::size_t>(truncation) + 1;
  Materialized out;
  out.form.resize(levels);
  out.index.resize(levels);
  out.generator_cell.assign(p.generators().size(), {-1, 0});
  for (int m = 0; m <= truncation; ++m) {
    for (std::size_t g = 0; g < p.generators().size(); ++g) {
      const int d = p.generators()[g].dim;
      if (d > m) continue;
      for (auto& epi : surjections(m, d)) {
        const Cell id = static_cast<Cell>(out.form[m].size());
        EzCell c{g, std::move(epi)};
        if (d == m) out.generator_cell[g] = {m, id};
        out.index[m].emplace(c, id);
        out.form[m].push_back(std::move(c));
      }
    }
  }
  std::vector<std::size_t> counts(levels);
  std::vector<OperatorTable> faces(levels), degeneracies(levels);
  for (int m = 0; m <= truncation; ++m) {
    counts[m] = out.form[m].size();
    if (m >= 1) {
      faces[m].assign(m + 1, std::vector<Cell>(counts[m]));
      for (int i = 0; i <= m; ++i) {
        const auto theta = coface(m, i);
        for (Cell x = 0; x < counts[m]; ++x)
          faces[m][i][x] = out.lookup(p.act(out.form[m][x], theta));
      }
    }
    if (m < truncation) {
      degeneracies[m].assign(m + 1, std::vector<Cell>(counts[m]));
      for (int i = 0; i <= m; ++i) {
        const auto theta = codegeneracy(m, i);
        for (Cell x = 0; x < counts[m]; ++x)
          degeneracies[m][i][x] = out.index[m + 1].at(p.act(out.form[m][x], theta));
      }
    }
  }
  out.object = TruncatedSSet(truncation, std::move(counts), std::move(faces), std::move(degeneracies));
  return out;
}

Presented present(const TruncatedSSet& x) {
  Presented out;
  const int top = x.truncation();
  out.form.resize(static_cast<std::size_t>(top) + 1);
  std::map<std::pair<int, Cell>, std::size_t> generator_of;
  for (int n = 0; n <= top; ++n) {
    for (Cell c = 0; c < x.count(n); ++c) {
      if (x.is_degenerate(n, c)) continue;
      std::vector<EzCell> faces;
      for (int i = 0; i <= n && n >= 1; ++i) faces.push_back(out.form[n - 1][x.face(n, i, c)]);
      generator_of[{n, c}] = out.presentation.add(std::move(faces));
    }
    out.form[n].resize(x.count(n));
    for (Cell c = 0; c < x.count(n); ++c) {
      const NormalForm nf = normal_form(x, n, c);
      std::vector<int> epi = identity_epi(nf.base_degree);
      for (auto it = nf.degeneracies.rbegin(); it != nf.degeneracies.rend(); ++it)
        epi.insert(epi.begin() + *it, epi[*it]);
      out.form[n][c] = EzCell{generator_of.at({nf.base_degree, nf.base}), std::move(epi)};
    }
  }
  return out;
}

Materialized extend_truncation(const TruncatedSSet& x, int truncation) {
  if (truncation < x.truncation()) throw InputError("cannot lower the truncation");
  if (!x.is_empty() && x.nondegenerate_dim() >= x.truncation())
    throw InputError("extension needs a buffer degree above the nondegenerate dimension");
  return materialize(present(x).presentation, truncation);
}

}  // namespace sset
