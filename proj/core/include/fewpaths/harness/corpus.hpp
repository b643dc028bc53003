#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fewpaths/graph.hpp"

namespace fewpaths::harness {

struct CorpusSpec {
  std::string generator; // chain | diamond | dag
  std::vector<double> grid; // half, m or n values
  double density = 0.1;     // dag only
  std::uint64_t seed = 0;   // dag item i uses seed + i
};

inline constexpr const char *kManifestSchema = "fewpaths.corpus_manifest/1";
inline constexpr const char *kManifestFile = "manifest.json";

// Oracle-certified properties recorded for each corpus graph.
nlohmann::json certify(const DirectedGraph &g);

// Writes one edge-list file per grid point plus manifest.json into `dir`
// (created if missing) and returns the manifest. Throws ConfigInvalid on an
// empty grid or unknown generator, IOFailure on unwritable paths.
nlohmann::json emit_corpus(const CorpusSpec &spec, const std::filesystem::path &dir);

// Reloads every file listed in dir/manifest.json and re-certifies it with the
// oracle. Returns human-readable mismatches (empty when truthful).
std::vector<std::string> verify_manifest(const std::filesystem::path &dir);

} // namespace fewpaths::harness
