#pragma once

// JSON interchange for objects and maps.
//
// Object: {"truncation": N, "cells": [c_0..c_N], "face": [...], "degeneracy": [...]}
//   face[n-1][i] is the table of d_i on degree n (n = 1..N);
//   degeneracy[n][i] is the table of s_i on degree n (n = 0..N-1).
// Map: {"source": <object or path>, "target": <object or path>, "level": [[...] per degree]}
//   paths are resolved relative to the map file.
// Unknown keys are rejected everywhere.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "sset/morphism.hpp"

namespace sset {

nlohmann::ordered_json object_to_json(const TruncatedSSet& x);
/// Shape and range checks only; run validate() for the identities. Throws InputError.
TruncatedSSet object_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json map_to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const nlohmann::ordered_json& j, const std::filesystem::path& base = {});

/// {"verdict", "witness"?, "stats": {"check": "validate"}} for objects and maps.
nlohmann::ordered_json validation_to_json(const ValidationReport& r);
nlohmann::ordered_json validation_to_json(const MapValidationReport& r);

/// Canonical serialization: compact JSON plus a trailing newline.
std::string dump(const nlohmann::ordered_json& j);

/// Throws InputError on unreadable files or malformed JSON.
nlohmann::ordered_json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

TruncatedSSet read_object(const std::filesystem::path& path);
SimplicialMap read_map(const std::filesystem::path& path);

}  // namespace sset
