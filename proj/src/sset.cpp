#include "sset/sset.hpp"

#include <algorithm>
#include <sstream>

namespace sset {

namespace {

void check_table(const OperatorTable& table, std::size_t operators, std::size_t domain,
                 std::size_t codomain, const char* what, int n) {
  if (table.size() != operators) {
    std::ostringstream os;
    os << what << " table at degree " << n << " has " << table.size() << " operators, expected "
       << operators;
    throw InputError(os.str());
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].size() != domain) {
      std::ostringstream os;
      os << what << "_" << i << " at degree " << n << " has " << table[i].size()
         << " entries, expected " << domain;
      throw InputError(os.str());
    }
    for (Cell c : table[i]) {
      if (c >= codomain) {
        std::ostringstream os;
        os << what << "_" << i << " at degree " << n << " maps to " << c
           << ", out of range (" << codomain << " cells)";
        throw InputError(os.str());
      }
    }
  }
}

}  // namespace

TruncatedSSet::TruncatedSSet(int truncation, std::vector<std::size_t> counts,
                             std::vector<OperatorTable> faces,
                             std::vector<OperatorTable> degeneracies)
    : truncation_(truncation),
      counts_(std::move(counts)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  if (truncation_ < 0) throw InputError("negative truncation");
  const auto levels = static_cast<std::size_t>(truncation_) + 1;
  if (counts_.size() != levels) throw InputError("cell counts do not match truncation");
  if (faces_.size() != levels) throw InputError("face tables do not match truncation");
  if (degeneracies_.size() != levels) throw InputError("degeneracy tables do not match truncation");
  if (!faces_[0].empty()) throw InputError("degree 0 has no faces");
  if (!degeneracies_[truncation_].empty()) throw InputError("top degree has no degeneracies");
  for (int n = 1; n <= truncation_; ++n)
    check_table(faces_[n], n + 1, counts_[n], counts_[n - 1], "d", n);
  for (int n = 0; n < truncation_; ++n)
    check_table(degeneracies_[n], n + 1, counts_[n], counts_[n + 1], "s", n);
}

TruncatedSSet TruncatedSSet::empty(int truncation) {
  const auto levels = static_cast<std::size_t>(truncation) + 1;
  std::vector<OperatorTable> faces(levels), degeneracies(levels);
  for (int n = 1; n <= truncation; ++n) faces[n].assign(n + 1, {});
  for (int n = 0; n < truncation; ++n) degeneracies[n].assign(n + 1, {});
  return TruncatedSSet(truncation, std::vector<std::size_t>(levels, 0), std::move(faces),
                       std::move(degeneracies));
}

Cell TruncatedSSet::vertex_of(int n, Cell x, int j) const {
  int degree = n;
  for (int step = 0; step < j; ++step) x = face(degree--, 0, x);
  while (degree > 0) x = face(degree--, 1, x);
  return x;
}

bool TruncatedSSet::is_degenerate(int n, Cell x) const {
  for (int i = 0; i < n; ++i)
    if (degeneracy(n - 1, i, face(n, i, x)) == x) return true;
  return false;
}

int TruncatedSSet::nondegenerate_dim() const {
  for (int n = truncation_; n >= 0; --n)
    for (Cell x = 0; x < counts_[n]; ++x)
      if (!is_degenerate(n, x)) return n;
  return -1;
}

namespace {

Cell apply_epi(const TruncatedSSet& x, int degree, Cell cell, std::vector<int> epi) {
  const int target = static_cast<int>(epi.size()) - 1;
  if (target == degree) return cell;
  std::size_t t = 0;
  while (epi[t] != epi[t + 1]) ++t;
  epi.erase(epi.begin() + static_cast<std::ptrdiff_t>(t) + 1);
  const Cell lower = apply_epi(x, degree, cell, epi);
  return x.degeneracy(target - 1, static_cast<int>(t), lower);
}

}  // namespace

Cell TruncatedSSet::apply(int n, Cell x, const std::vector<int>& theta) const {
  const int m = static_cast<int>(theta.size()) - 1;
  if (m < 0 || m > truncation_ || n > truncation_) throw InputError("operator degree not stored");
  std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
  for (int v : theta) {
    if (v < 0 || v > n) throw InputError("operator value out of range");
    hit[v] = 1;
  }
  int degree = n;
  for (int i = n; i >= 0; --i) {
    if (!hit[i]) x = face(degree--, i, x);
  }
  std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0, r = 0; i <= n; ++i) {
    rank[i] = r;
    r += hit[i];
  }
  std::vector<int> epi(theta.size());
  for (std::size_t t = 0; t < theta.size(); ++t) {
    if (t > 0 && theta[t] < theta[t - 1]) throw InputError("operator is not monotone");
    epi[t] = rank[theta[t]];
  }
  return apply_epi(*this, degree, x, std::move(epi));
}

ValidationReport validate(const TruncatedSSet& x, ValidationOptions options) {
  ValidationReport report;
  auto fail = [&](const char* identity, int degree, int i, int j, Cell cell) {
    report.ok = false;
    report.violation = IdentityViolation{identity, degree, i, j, cell};
    std::ostringstream os;
    os << "identity " << identity << " fails at degree " << degree << " (i=" << i << ", j=" << j
       << ") on simplex " << cell;
    report.message = os.str();
    return report;
  };
  const int top = x.truncation();
  for (int n = 0; n <= top; ++n) {
    for (Cell c = 0; c < x.count(n); ++c) {
      // d_i d_j = d_{j-1} d_i for i < j
      for (int j = 1; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i)
          if (x.face(n - 1, i, x.face(n, j, c)) != x.face(n - 1, j - 1, x.face(n, i, c)))
            return fail("d_i d_j = d_{j-1} d_i", n, i, j, c);
      // s_i s_j = s_{j+1} s_i for i <= j
      if (n + 2 <= top)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (x.degeneracy(n + 1, i, x.degeneracy(n, j, c)) !=
                x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, c)))
              return fail("s_i s_j = s_{j+1} s_i", n, i, j, c);
      if (n + 1 > top) continue;
      for (int j = 0; j <= n; ++j) {
        const Cell up = x.degeneracy(n, j, c);
        // d_j s_j = d_{j+1} s_j = id
        if (x.face(n + 1, j, up) != c) return fail("d_j s_j = id", n, j, j, c);
        if (x.face(n + 1, j + 1, up) != c) return fail("d_{j+1} s_j = id", n, j + 1, j, c);
        for (int i = 0; i <= n + 1; ++i) {
          // d_i s_j = s_{j-1} d_i for i < j
          if (i < j && x.face(n + 1, i, up) != x.degeneracy(n - 1, j - 1, x.face(n, i, c)))
            return fail("d_i s_j = s_{j-1} d_i", n, i, j, c);
          // d_i s_j = s_j d_{i-1} for i > j+1
          if (i > j + 1 && x.face(n + 1, i, up) != x.degeneracy(n - 1, j, x.face(n, i - 1, c)))
            return fail("d_i s_j = s_j d_{i-1}", n, i, j, c);
        }
      }
    }
  }
  if (options.require_buffer) {
    for (Cell c = 0; c < x.count(top); ++c) {
      if (!x.is_degenerate(top, c)) {
        report.ok = false;
        report.violation = IdentityViolation{"top degree degenerate", top, 0, 0, c};
        std::ostringstream os;
        os << "nondegenerate simplex " << c << " in top degree " << top
           << ": truncation leaves no buffer degree";
        report.message = os.str();
        return report;
      }
    }
  }
  return report;
}

NormalForm normal_form(const TruncatedSSet& x, int n, Cell cell) {
  NormalForm form;
  int degree = n;
  for (;;) {
    int found = -1;
    for (int i = degree - 1; i >= 0; --i) {
      if (x.degeneracy(degree - 1, i, x.face(degree, i, cell)) == cell) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    form.degeneracies.push_back(found);
    cell = x.face(degree, found, cell);
    --degree;
  }
  form.base_degree = degree;
  form.base = cell;
  return form;
}

std::size_t monotone_count(int m, int n) {
  // C(n+m+1, n)
  std::size_t result = 1;
  for (int k = 1; k <= n; ++k) result = result * static_cast<std::size_t>(m + 1 + k) / k;
  return result;
}

}  // namespace sset
