#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fewpaths/graph.hpp"
#include "fewpaths/noise.hpp"

namespace fewpaths::harness {

enum class Command { Gen, Count, Recognize, Classify, Spectrum, Walk, Savitch, Bench };

std::string_view to_string(Command command) noexcept;
std::optional<Command> parse_command(std::string_view text) noexcept;

// Parameters for the named generators used by --graph.
struct GeneratorParams {
  std::uint64_t half = 0;  // chain
  std::uint64_t m = 0;     // diamond
  std::uint64_t n = 0;     // dag
  double density = 0.1;    // dag
};

struct ExperimentConfig {
  Command command = Command::Count;

  // file:PATH | chain | diamond | dag | lange:left|middle|right |
  // union:TERM+TERM+... where TERM is chain:HALF, diamond:M, dag:N:DENSITY,
  // lange:NAME or file:PATH.
  std::string graph;
  GeneratorParams generator;

  std::string algorithm = "theorem1"; // count: theorem1 | theorem2
  std::optional<Node> s;
  std::optional<Node> t;
  std::uint64_t k = 1;
  std::uint64_t bound = 1; // P
  NoiseModel noise;
  // Accuracy was not given explicitly; the pipeline default applies.
  bool default_accuracy = true;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 1;
  std::optional<std::uint64_t> max_steps;
  bool strict_entry_sweep = false;
  std::string out;

  // gen only
  std::string corpus_generator;
  std::vector<double> grid;
};

// Field-level validation; throws ConfigInvalid.
void validate(const ExperimentConfig &config);

// Builds the input graph named by config.graph. Throws ConfigInvalid for a
// malformed source and IOFailure/ParseError for unreadable files.
DirectedGraph build_graph(const ExperimentConfig &config);

// Parses one union term or plain generator spec.
DirectedGraph build_graph_term(std::string_view term, const GeneratorParams &params,
                               std::uint64_t seed);

nlohmann::json to_json(const ExperimentConfig &config);

// "2,4,8", "1..5" or a mix such as "1..3,8". Throws ConfigInvalid("grid").
std::vector<double> parse_grid(std::string_view text);

// Default output directory, from FEWPATHS_OUT_DIR.
std::optional<std::string> default_output_dir();

} // namespace fewpaths::harness
