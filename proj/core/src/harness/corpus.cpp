#include "fewpaths/harness/corpus.hpp"

#include <cmath>
#include <fstream>

#include "fewpaths/errors.hpp"
#include "fewpaths/generators.hpp"
#include "fewpaths/path_count.hpp"
#include "fewpaths/traversal.hpp"

namespace fewpaths::harness {

namespace {

// Large enough that every count the corpus generators produce is exact.
const BigInt kCertifyCap = BigInt(1) << 128;

std::uint64_t grid_integer(double value) {
  if (!(value >= 1.0) || value != std::floor(value) || value > 1e6)
    throw ConfigInvalid("grid", "values must be positive integers");
  return static_cast<std::uint64_t>(value);
}

struct Item {
  std::string file;
  nlohmann::json params;
  nlohmann::json seed;
  DirectedGraph graph;
};

Item make_item(const CorpusSpec &spec, std::size_t index) {
  const auto value = grid_integer(spec.grid[index]);
  const auto suffix = std::to_string(value);
  if (spec.generator == "chain")
    return {"chain_half" + suffix + ".txt", {{"half", value}}, nullptr, gen_chain_figure1(value)};
  if (spec.generator == "diamond")
    return {"diamond_m" + suffix + ".txt", {{"m", value}}, nullptr, gen_diamond_chain(value)};
  if (spec.generator == "dag") {
    const std::uint64_t seed = spec.seed + index;
    return {"dag_" + std::to_string(index) + "_n" + suffix + ".txt",
            {{"n", value}, {"density", spec.density}},
            seed,
            gen_random_dag(value, spec.density, seed)};
  }
  throw ConfigInvalid("generator", "expected chain, diamond or dag");
}

DirectedGraph regenerate(const nlohmann::json &manifest, const nlohmann::json &entry) {
  const std::string generator = manifest.at("generator");
  const auto &params = entry.at("params");
  if (generator == "chain")
    return gen_chain_figure1(params.at("half").get<std::size_t>());
  if (generator == "diamond")
    return gen_diamond_chain(params.at("m").get<std::size_t>());
  return gen_random_dag(params.at("n").get<std::size_t>(), params.at("density").get<double>(),
                        entry.at("seed").get<std::uint64_t>());
}

} // namespace

nlohmann::json certify(const DirectedGraph &g) {
  const auto counts = count_paths_oracle(g, kCertifyCap);
  std::string max_count;
  bool infinite = false;
  for (std::size_t i = 0; i < g.size() && !infinite; ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (counts.at(i, j).is_infinite()) {
        infinite = true;
        break;
      }
  const auto max_finite = counts.max_finite();
  if (infinite)
    max_count = "inf";
  else if (!max_finite)
    max_count = ">" + kCertifyCap.str();
  else
    max_count = max_finite->str();

  nlohmann::json j;
  j["nodes"] = g.size();
  j["edges"] = g.edge_count();
  j["acyclic"] = is_acyclic(g);
  j["max_count"] = max_count;
  j["strongly_unambiguous"] = max_finite.has_value() && *max_finite <= 1;
  // Smallest P for which the all-pairs promise N(i,j) <= P holds.
  j["strongly_few_bound"] = max_finite ? nlohmann::json(max_finite->str()) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json emit_corpus(const CorpusSpec &spec, const std::filesystem::path &dir) {
  if (spec.grid.empty())
    throw ConfigInvalid("grid", "must not be empty");
  if (spec.generator != "chain" && spec.generator != "diamond" && spec.generator != "dag")
    throw ConfigInvalid("generator", "expected chain, diamond or dag");
  if (spec.generator == "dag" && !(spec.density >= 0.0 && spec.density <= 1.0))
    throw ConfigInvalid("density", "must lie in [0, 1]");

  std::vector<Item> items;
  for (std::size_t i = 0; i < spec.grid.size(); ++i)
    items.push_back(make_item(spec, i));

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw IOFailure("cannot create directory " + dir.string() + ": " + ec.message());

  nlohmann::json manifest;
  manifest["schema"] = kManifestSchema;
  manifest["generator"] = spec.generator;
  manifest["grid"] = spec.grid;
  manifest["seed"] = spec.seed;
  if (spec.generator == "dag")
    manifest["density"] = spec.density;
  manifest["entries"] = nlohmann::json::array();
  for (const auto &item : items) {
    save_edge_list(dir / item.file, item.graph);
    manifest["entries"].push_back({{"file", item.file},
                                   {"params", item.params},
                                   {"seed", item.seed},
                                   {"properties", certify(item.graph)}});
  }

  const auto path = dir / kManifestFile;
  std::ofstream out(path);
  if (!out)
    throw IOFailure("cannot write " + path.string());
  out << manifest.dump(2) << '\n';
  if (!out)
    throw IOFailure("write failed: " + path.string());
  return manifest;
}

std::vector<std::string> verify_manifest(const std::filesystem::path &dir) {
  const auto path = dir / kManifestFile;
  std::ifstream in(path);
  if (!in)
    throw IOFailure("cannot read " + path.string());
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(path.string() + ": " + e.what());
  }

  std::vector<std::string> mismatches;
  try {
    if (manifest.at("schema") != kManifestSchema)
      mismatches.push_back("unexpected schema " + manifest.at("schema").dump());
    for (const auto &entry : manifest.at("entries")) {
      const std::string file = entry.at("file");
      const auto g = load_edge_list(dir / file);
      if (!(g == regenerate(manifest, entry)))
        mismatches.push_back(file + ": does not match its generator parameters");
      const auto actual = certify(g);
      for (const auto &[key, value] : entry.at("properties").items())
        if (!actual.contains(key) || actual.at(key) != value)
          mismatches.push_back(file + ": " + key + " recorded " + value.dump() + ", oracle says " +
                               (actual.contains(key) ? actual.at(key).dump() : "nothing"));
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return mismatches;
}

} // namespace fewpaths::harness
