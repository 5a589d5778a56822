#include "sset/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sset {

using nlohmann::ordered_json;

namespace {

void only_keys(const ordered_json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) throw InputError(std::string("unknown key '") + item.key() + "' in " + what);
  for (const auto& key : allowed)
    if (!j.contains(key)) throw InputError(std::string("missing key '") + key + "' in " + what);
}

Cell to_cell(const ordered_json& v) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() > UINT32_MAX) throw InputError("simplex index must be a non-negative integer");
  return v.get<Cell>();
}

std::vector<Cell> to_cells(const ordered_json& v) {
  if (!v.is_array()) throw InputError("expected an array of simplex indices");
  std::vector<Cell> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(to_cell(c));
  return out;
}

std::vector<OperatorTable> tables(const ordered_json& v, int first, int last, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != std::max(0, last - first + 1))
    throw InputError(std::string(what) + " has the wrong number of degrees");
  std::vector<OperatorTable> out;
  for (const auto& level : v) {
    if (!level.is_array()) throw InputError(std::string(what) + " entries must be arrays");
    OperatorTable t;
    for (const auto& op : level) t.push_back(to_cells(op));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

ordered_json object_to_json(const TruncatedSSet& x) {
  ordered_json j;
  const int n_max = x.truncation();
  j["truncation"] = n_max;
  j["cells"] = x.counts();
  ordered_json faces = ordered_json::array();
  for (int n = 1; n <= n_max; ++n) faces.push_back(x.faces(n));
  ordered_json degs = ordered_json::array();
  for (int n = 0; n < n_max; ++n) degs.push_back(x.degeneracies(n));
  j["face"] = std::move(faces);
  j["degeneracy"] = std::move(degs);
  return j;
}

TruncatedSSet object_from_json(const ordered_json& j) {
  only_keys(j, {"truncation", "cells", "face", "degeneracy"}, "object");
  if (!j["truncation"].is_number_integer() || j["truncation"].get<std::int64_t>() < 0 ||
      j["truncation"].get<std::int64_t>() > 64)
    throw InputError("truncation must be an integer in [0, 64]");
  const int n_max = j["truncation"].get<int>();
  const auto cells = to_cells(j["cells"]);
  std::vector<std::size_t> counts(cells.begin(), cells.end());
  auto face_levels = tables(j["face"], 1, n_max, "face");
  auto deg_levels = tables(j["degeneracy"], 0, n_max - 1, "degeneracy");
  std::vector<OperatorTable> faces(static_cast<std::size_t>(n_max) + 1);
  std::vector<OperatorTable> degs(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) faces[n] = std::move(face_levels[n - 1]);
  for (int n = 0; n < n_max; ++n) degs[n] = std::move(deg_levels[n]);
  return TruncatedSSet(n_max, std::move(counts), std::move(faces), std::move(degs));
}

ordered_json map_to_json(const SimplicialMap& f) {
  ordered_json j;
  j["source"] = object_to_json(f.source());
  j["target"] = object_to_json(f.target());
  j["level"] = f.levels();
  return j;
}

SimplicialMap map_from_json(const ordered_json& j, const std::filesystem::path& base) {
  only_keys(j, {"source", "target", "level"}, "map");
  auto endpoint = [&](const ordered_json& v) {
    if (v.is_string()) return read_object(base / v.get<std::string>());
    return object_from_json(v);
  };
  ObjectPtr source = share(endpoint(j["source"]));
  ObjectPtr target = share(endpoint(j["target"]));
  if (!j["level"].is_array()) throw InputError("level must be an array");
  std::vector<std::vector<Cell>> level;
  for (const auto& l : j["level"]) level.push_back(to_cells(l));
  return SimplicialMap(std::move(source), std::move(target), std::move(level));
}

ordered_json validation_to_json(const ValidationReport& r) {
  ordered_json j;
  j["verdict"] = r.ok;
  if (r.violation) {
    const auto& v = *r.violation;
    j["witness"] = {{"kind", "IdentityViolation"}, {"identity", v.identity}, {"degree", v.degree},
                    {"i", v.i},  {"j", v.j}, {"simplex", v.simplex}};
  }
  j["stats"] = {{"check", "validate"}, {"message", r.message}};
  return j;
}

ordered_json validation_to_json(const MapValidationReport& r) {
  ordered_json j;
  j["verdict"] = r.ok;
  if (r.violation) {
    const auto& v = *r.violation;
    j["witness"] = {{"kind", "NaturalityViolation"}, {"degree", v.degree}, {"op", v.op},
                    {"index", v.index}, {"simplex", v.simplex}};
  }
  j["stats"] = {{"check", "validate"}, {"message", r.message}};
  return j;
}

std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

ordered_json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ordered_json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

TruncatedSSet read_object(const std::filesystem::path& path) { return object_from_json(read_json(path)); }

SimplicialMap read_map(const std::filesystem::path& path) {
  return map_from_json(read_json(path), path.parent_path());
}

}  // namespace sset
