#include "sset/checks.hpp"

#include "sset/limits.hpp"
#include "sset/pi0.hpp"

namespace sset {

using nlohmann::ordered_json;

CheckReport separable_direct(const SimplicialMap& h) {
  const DiagonalData d = diagonal(h);
  CheckReport report = injection_cartesian_check(d.delta);
  report.stats.check = "separable-direct";
  return report;
}

Gamma2Separability separable_for_groupoids(const SimplicialMap& h) {
  Gamma2Separability out{separable_direct(h), kan_check(h), false};
  out.verdict = out.diagonal.verdict && out.kan.verdict;
  return out;
}

CheckReport separable_via_lifting(const SimplicialMap& h, Execution mode) {
  CheckReport report;
  report.stats.check = "separable-lifting";
  if (auto w = kernels::ambiguous_pair_scan(h, mode, &report.stats.examined)) {
    report.verdict = false;
    report.witness = *w;
  }
  return report;
}

CheckReport covering_check(const SimplicialMap& h, Execution mode) {
  CheckReport report;
  report.stats.check = "covering";
  if (auto w = kernels::fill_in_scan(h, mode, &report.stats.examined)) {
    report.verdict = false;
    report.witness = *w;
  }
  return report;
}

CheckReport kan_check(const SimplicialMap& h, std::optional<int> bound, Execution mode) {
  CheckReport report;
  report.stats.check = "kan";
  const int b = bound.value_or(h.truncation());
  if (b < 0 || b > h.truncation()) throw InputError("kan bound outside the stored degrees");
  if (auto w = kernels::horn_scan(h, b, mode, &report.stats.examined)) {
    report.verdict = false;
    report.witness = *w;
  }
  return report;
}

AgreementReport theorem1_verdict(const SimplicialMap& h) {
  AgreementReport r;
  r.statement = "theorem1";
  r.left = separable_direct(h);
  r.right = separable_via_lifting(h);
  r.agree = r.left.verdict == r.right.verdict;
  if (!r.agree) r.issues.push_back("separable-direct and separable-lifting disagree");
  return r;
}

AgreementReport theorem2_verdict(const SimplicialMap& h) {
  AgreementReport r;
  r.statement = "theorem2";
  r.hypothesis = kan_check(h);
  if (!r.hypothesis->verdict) {
    r.in_hypothesis = false;
    r.issues.push_back("not a Kan fibration: outside the hypothesis");
    return r;
  }
  r.left = separable_direct(h);
  r.right = covering_check(h);
  r.agree = r.left.verdict == r.right.verdict;
  if (!r.agree) r.issues.push_back("separable-direct and covering disagree on a Kan fibration");
  if (r.right.witness && std::holds_alternative<MissingLift>(*r.right.witness)) {
    r.agree = false;
    r.issues.push_back("Kan fibration with a square that has no fill-in");
  }
  return r;
}

ChainReport implication_chain(const SimplicialMap& h) {
  ChainReport r;
  r.trivial_covering = trivial_covering_check(h);
  r.covering = covering_check(h);
  r.kan = kan_check(h);
  r.separable = separable_direct(h);
  auto implies = [&](const CheckReport& p, const CheckReport& q, const char* text) {
    if (p.verdict && !q.verdict) {
      r.holds = false;
      r.violations.emplace_back(text);
    }
  };
  implies(r.trivial_covering, r.covering, "trivial covering but not a covering");
  implies(r.covering, r.kan, "covering but not a Kan fibration");
  implies(r.covering, r.separable, "covering but not separable");
  implies(r.trivial_covering, r.kan, "trivial covering but not a Kan fibration");
  return r;
}

// ---------------------------------------------------------------- witness re-checks

namespace {

using kernels::components_by_search;
using kernels::vertex_by_trailing_faces;

bool in_range(const TruncatedSSet& x, int n, Cell c) { return n >= 0 && n <= x.truncation() && c < x.count(n); }

bool ambiguous_holds(const SimplicialMap& h, const AmbiguousLift& w) {
  const TruncatedSSet& a = h.source();
  if (!in_range(a, w.n, w.x1) || !in_range(a, w.n, w.x2) || !in_range(a, 0, w.a)) return false;
  if (w.j < 0 || w.j > w.n || w.x1 == w.x2) return false;
  return h(w.n, w.x1) == w.u && h(w.n, w.x2) == w.u && vertex_by_trailing_faces(a, w.n, w.x1, w.j) == w.a &&
         vertex_by_trailing_faces(a, w.n, w.x2, w.j) == w.a;
}

bool missing_fill_in_holds(const SimplicialMap& h, const MissingLift& w) {
  const TruncatedSSet& a = h.source();
  const TruncatedSSet& b = h.target();
  if (!in_range(b, w.n, w.u) || !in_range(a, 0, w.a) || w.index < 0 || w.index > w.n) return false;
  if (h(0, w.a) != vertex_by_trailing_faces(b, w.n, w.u, w.index)) return false;
  for (Cell x = 0; x < a.count(w.n); ++x)
    if (h(w.n, x) == w.u && vertex_by_trailing_faces(a, w.n, x, w.index) == w.a) return false;
  return true;
}

bool missing_horn_holds(const SimplicialMap& h, const MissingLift& w) {
  const TruncatedSSet& a = h.source();
  const TruncatedSSet& b = h.target();
  const int n = w.n;
  const int k = w.index;
  if (n < 1 || !in_range(b, n, w.u) || k < 0 || k > n || w.horn.size() != static_cast<std::size_t>(n)) return false;
  std::vector<Cell> y(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0, t = 0; i <= n; ++i) {
    if (i == k) continue;
    y[i] = w.horn[t++];
    if (!in_range(a, n - 1, y[i]) || h(n - 1, y[i]) != b.face(n, i, w.u)) return false;
  }
  for (int j = 1; j <= n && n >= 2; ++j)
    for (int i = 0; i < j; ++i)
      if (i != k && j != k && a.face(n - 1, i, y[j]) != a.face(n - 1, j - 1, y[i])) return false;
  for (Cell x = 0; x < a.count(n); ++x) {
    if (h(n, x) != w.u) continue;
    bool fills = true;
    for (int i = 0; i <= n && fills; ++i)
      if (i != k) fills = a.face(n, i, x) == y[i];
    if (fills) return false;
  }
  return true;
}

// Leak in the target of an injective m: cell outside the image, in the
// same search component as some image vertex.
bool leak_holds(const SimplicialMap& m, const ComponentLeak& w) {
  const TruncatedSSet& x = m.target();
  if (!in_range(x, w.degree, w.cell)) return false;
  for (Cell c : m.level(w.degree))
    if (c == w.cell) return false;
  const auto label = components_by_search(x);
  const Cell k = label[vertex_by_trailing_faces(x, w.degree, w.cell, 0)];
  if (k != w.component) return false;
  for (Cell v : m.level(0))
    if (label[v] == k) return true;
  return false;
}

bool comparison_holds(const SimplicialMap& h, const ComparisonFailure& w) {
  const TruncatedSSet& a = h.source();
  const TruncatedSSet& b = h.target();
  const auto label_a = components_by_search(a);
  const auto label_b = components_by_search(b);
  auto class_a = [&](int n, Cell c) { return label_a[vertex_by_trailing_faces(a, n, c, 0)]; };
  auto class_b = [&](int n, Cell c) { return label_b[vertex_by_trailing_faces(b, n, c, 0)]; };
  if (w.kind == ComparisonFailure::Kind::not_injective) {
    if (!in_range(a, w.degree, w.first) || !in_range(a, w.degree, w.second) || w.first == w.second) return false;
    return h(w.degree, w.first) == h(w.degree, w.second) && class_a(w.degree, w.first) == class_a(w.degree, w.second);
  }
  if (!in_range(b, w.degree, w.first)) return false;
  // The component must exist and lie over the component of the base cell.
  std::optional<Cell> over;
  for (Cell v = 0; v < a.count(0); ++v)
    if (label_a[v] == w.second) {
      over = label_b[h(0, v)];
      break;
    }
  if (!over || *over != class_b(w.degree, w.first)) return false;
  for (Cell x = 0; x < a.count(w.degree); ++x)
    if (h(w.degree, x) == w.first && class_a(w.degree, x) == w.second) return false;
  return true;
}

}  // namespace

bool witness_holds(const std::string& check, const SimplicialMap& h, const Witness& w) {
  if (check == "separable-lifting") {
    const auto* x = std::get_if<AmbiguousLift>(&w);
    return x && ambiguous_holds(h, *x);
  }
  if (check == "covering") {
    if (const auto* x = std::get_if<AmbiguousLift>(&w))
      return ambiguous_holds(h, *x) && h(0, x->a) == vertex_by_trailing_faces(h.target(), x->n, x->u, x->j);
    const auto* m = std::get_if<MissingLift>(&w);
    return m && m->problem == MissingLift::Problem::fill_in && missing_fill_in_holds(h, *m);
  }
  if (check == "kan") {
    const auto* m = std::get_if<MissingLift>(&w);
    return m && m->problem == MissingLift::Problem::horn && missing_horn_holds(h, *m);
  }
  if (check == "separable-direct") {
    const auto* x = std::get_if<ComponentLeak>(&w);
    if (!x) return false;
    const DiagonalData d = diagonal(h);
    if (!in_range(*d.kernel_pair.object, x->degree, x->cell)) return false;
    const auto [x1, x2] = d.kernel_pair.pairs[x->degree][x->cell];
    return x1 != x2 && leak_holds(d.delta, *x);
  }
  if (check == "injection-cartesian") {
    const auto* x = std::get_if<ComponentLeak>(&w);
    return x && leak_holds(h, *x);
  }
  if (check == "trivial-covering") {
    const auto* x = std::get_if<ComparisonFailure>(&w);
    return x && comparison_holds(h, *x);
  }
  return false;
}

ordered_json agreement_to_json(const AgreementReport& r) {
  ordered_json j;
  j["statement"] = r.statement;
  j["in_hypothesis"] = r.in_hypothesis;
  j["agree"] = r.agree;
  if (r.hypothesis) j["hypothesis"] = report_to_json(*r.hypothesis);
  if (r.in_hypothesis) {
    j["left"] = report_to_json(r.left);
    j["right"] = report_to_json(r.right);
  }
  j["issues"] = r.issues;
  return j;
}

ordered_json chain_to_json(const ChainReport& r) {
  ordered_json j;
  j["holds"] = r.holds;
  j["trivial_covering"] = report_to_json(r.trivial_covering);
  j["covering"] = report_to_json(r.covering);
  j["kan"] = report_to_json(r.kan);
  j["separable"] = report_to_json(r.separable);
  j["violations"] = r.violations;
  return j;
}

}  // namespace sset
