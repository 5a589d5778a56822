#include "sset/report.hpp"

#include <sstream>

namespace sset {

using nlohmann::ordered_json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_keys(const ordered_json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw InputError("witness must be a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) throw InputError("unknown witness key '" + item.key() + "'");
  }
  for (const char* k : keys)
    if (!j.contains(k)) throw InputError(std::string("witness missing key '") + k + "'");
}

}  // namespace

std::string witness_kind(const Witness& w) {
  return std::visit(overloaded{[](const AmbiguousLift&) { return std::string("AmbiguousLift"); },
                               [](const MissingLift&) { return std::string("MissingLift"); },
                               [](const ComponentLeak&) { return std::string("ComponentLeak"); },
                               [](const ComparisonFailure&) { return std::string("ComparisonFailure"); }},
                    w);
}

ordered_json witness_to_json(const Witness& w) {
  ordered_json j;
  j["kind"] = witness_kind(w);
  std::visit(overloaded{[&](const AmbiguousLift& x) {
                          j["n"] = x.n;
                          j["j"] = x.j;
                          j["u"] = x.u;
                          j["a"] = x.a;
                          j["x1"] = x.x1;
                          j["x2"] = x.x2;
                        },
                        [&](const MissingLift& x) {
                          const bool fill = x.problem == MissingLift::Problem::fill_in;
                          j["problem"] = fill ? "fill-in" : "horn";
                          j["n"] = x.n;
                          j[fill ? "j" : "k"] = x.index;
                          j["u"] = x.u;
                          if (fill)
                            j["a"] = x.a;
                          else
                            j["horn"] = x.horn;
                        },
                        [&](const ComponentLeak& x) {
                          j["component"] = x.component;
                          j["degree"] = x.degree;
                          j["cell"] = x.cell;
                        },
                        [&](const ComparisonFailure& x) {
                          const bool inj = x.kind == ComparisonFailure::Kind::not_injective;
                          j["failure"] = inj ? "not-injective" : "not-surjective";
                          j["degree"] = x.degree;
                          if (inj) {
                            j["x1"] = x.first;
                            j["x2"] = x.second;
                          } else {
                            j["base"] = x.first;
                            j["component"] = x.second;
                          }
                        }},
             w);
  return j;
}

Witness witness_from_json(const ordered_json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "AmbiguousLift") {
    require_keys(j, {"kind", "n", "j", "u", "a", "x1", "x2"});
    return AmbiguousLift{j["n"], j["j"], j["u"], j["a"], j["x1"], j["x2"]};
  }
  if (kind == "MissingLift") {
    MissingLift m;
    const std::string problem = j.at("problem").get<std::string>();
    if (problem == "fill-in") {
      require_keys(j, {"kind", "problem", "n", "j", "u", "a"});
      m.problem = MissingLift::Problem::fill_in;
      m.index = j["j"];
      m.a = j["a"];
    } else if (problem == "horn") {
      require_keys(j, {"kind", "problem", "n", "k", "u", "horn"});
      m.problem = MissingLift::Problem::horn;
      m.index = j["k"];
      m.horn = j["horn"].get<std::vector<Cell>>();
    } else {
      throw InputError("unknown lifting problem '" + problem + "'");
    }
    m.n = j["n"];
    m.u = j["u"];
    return m;
  }
  if (kind == "ComponentLeak") {
    require_keys(j, {"kind", "component", "degree", "cell"});
    return ComponentLeak{j["component"], j["degree"], j["cell"]};
  }
  if (kind == "ComparisonFailure") {
    const std::string failure = j.at("failure").get<std::string>();
    if (failure == "not-injective") {
      require_keys(j, {"kind", "failure", "degree", "x1", "x2"});
      return ComparisonFailure{ComparisonFailure::Kind::not_injective, j["degree"], j["x1"], j["x2"]};
    }
    if (failure == "not-surjective") {
      require_keys(j, {"kind", "failure", "degree", "base", "component"});
      return ComparisonFailure{ComparisonFailure::Kind::not_surjective, j["degree"], j["base"], j["component"]};
    }
    throw InputError("unknown comparison failure '" + failure + "'");
  }
  throw InputError("unknown witness kind '" + kind + "'");
}

ordered_json report_to_json(const CheckReport& r) {
  ordered_json j;
  j["verdict"] = r.verdict;
  if (r.witness) j["witness"] = witness_to_json(*r.witness);
  j["stats"] = {{"check", r.stats.check}, {"examined", r.stats.examined}};
  return j;
}

CheckReport report_from_json(const ordered_json& j) {
  CheckReport r;
  r.verdict = j.at("verdict").get<bool>();
  if (j.contains("witness")) r.witness = witness_from_json(j["witness"]);
  r.stats.check = j.at("stats").at("check").get<std::string>();
  r.stats.examined = j.at("stats").at("examined").get<std::uint64_t>();
  return r;
}

std::string render_text(const CheckReport& r) {
  std::ostringstream os;
  os << r.stats.check << ": " << (r.verdict ? "true" : "false") << "\n";
  if (r.witness) {
    const ordered_json w = witness_to_json(*r.witness);
    os << "witness: " << w["kind"].get<std::string>();
    for (const auto& item : w.items()) {
      if (item.key() == "kind") continue;
      os << " " << item.key() << "=";
      if (item.value().is_string())
        os << item.value().get<std::string>();
      else
        os << item.value().dump();
    }
    os << "\n";
  }
  os << "examined: " << r.stats.examined << "\n";
  return os.str();
}

}  // namespace sset
