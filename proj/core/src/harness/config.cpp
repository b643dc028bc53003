#include "fewpaths/harness/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>

#include "fewpaths/errors.hpp"
#include "fewpaths/generators.hpp"
#include "fewpaths/rng.hpp"

namespace fewpaths::harness {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommands{{
    {Command::Gen, "gen"},
    {Command::Count, "count"},
    {Command::Recognize, "recognize"},
    {Command::Classify, "classify"},
    {Command::Spectrum, "spectrum"},
    {Command::Walk, "walk"},
    {Command::Savitch, "savitch"},
    {Command::Bench, "bench"},
}};

bool needs_pair(Command c) {
  return c == Command::Count || c == Command::Recognize || c == Command::Classify ||
         c == Command::Walk || c == Command::Savitch;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ConfigInvalid("graph", "bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

double parse_double(std::string_view text, std::string_view what) {
  // from_chars for double is not available everywhere in GCC 11's libstdc++
  // builds, so go through strtod.
  std::string copy(text);
  char *end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(value))
    throw ConfigInvalid("graph", "bad " + std::string(what) + " '" + copy + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

DirectedGraph chain(std::uint64_t half) {
  if (half == 0)
    throw ConfigInvalid("half", "must be positive");
  return gen_chain_figure1(half);
}

DirectedGraph diamond(std::uint64_t m) {
  if (m == 0)
    throw ConfigInvalid("m", "must be positive");
  return gen_diamond_chain(m);
}

DirectedGraph dag(std::uint64_t n, double density, std::uint64_t seed) {
  if (n == 0)
    throw ConfigInvalid("n", "must be positive");
  if (!(density >= 0.0 && density <= 1.0))
    throw ConfigInvalid("density", "must lie in [0, 1]");
  return gen_random_dag(n, density, seed);
}

bool uses_random_generator(std::string_view graph) {
  if (graph == "dag" || graph.starts_with("dag:"))
    return true;
  if (!graph.starts_with("union:"))
    return false;
  for (auto term : split(graph.substr(6), '+'))
    if (term == "dag" || term.starts_with("dag:"))
      return true;
  return false;
}

} // namespace

std::string_view to_string(Command command) noexcept {
  for (const auto &[c, name] : kCommands)
    if (c == command)
      return name;
  return "?";
}

std::optional<Command> parse_command(std::string_view text) noexcept {
  for (const auto &[c, name] : kCommands)
    if (name == text)
      return c;
  return std::nullopt;
}

DirectedGraph build_graph_term(std::string_view term, const GeneratorParams &params,
                               std::uint64_t seed) {
  if (term.starts_with("file:")) {
    const auto path = term.substr(5);
    if (path.empty())
      throw ConfigInvalid("graph", "file: needs a path");
    if (!std::filesystem::exists(std::filesystem::path(std::string(path))))
      throw ConfigInvalid("graph", "no such file '" + std::string(path) + "'");
    return load_edge_list(std::string(path));
  }
  const auto parts = split(term, ':');
  const auto name = parts.front();
  if (name == "chain") {
    if (parts.size() > 2)
      throw ConfigInvalid("graph", "expected chain or chain:HALF");
    return chain(parts.size() == 2 ? parse_u64(parts[1], "half") : params.half);
  }
  if (name == "diamond") {
    if (parts.size() > 2)
      throw ConfigInvalid("graph", "expected diamond or diamond:M");
    return diamond(parts.size() == 2 ? parse_u64(parts[1], "m") : params.m);
  }
  if (name == "dag") {
    if (parts.size() != 1 && parts.size() != 3)
      throw ConfigInvalid("graph", "expected dag or dag:N:DENSITY");
    if (parts.size() == 3)
      return dag(parse_u64(parts[1], "n"), parse_double(parts[2], "density"), seed);
    return dag(params.n, params.density, seed);
  }
  if (name == "lange" && parts.size() == 2) {
    if (parts[1] == "left")
      return lange_example(LangeExample::Left);
    if (parts[1] == "middle")
      return lange_example(LangeExample::Middle);
    if (parts[1] == "right")
      return lange_example(LangeExample::Right);
  }
  throw ConfigInvalid("graph", "unknown graph source '" + std::string(term) + "'");
}

DirectedGraph build_graph(const ExperimentConfig &config) {
  const std::string_view spec = config.graph;
  const std::uint64_t seed = config.seed.value_or(0);
  if (!spec.starts_with("union:"))
    return build_graph_term(spec, config.generator, seed);
  const auto terms = split(spec.substr(6), '+');
  if (terms.size() < 2)
    throw ConfigInvalid("graph", "union needs at least two terms joined by '+'");
  // Random terms draw from consecutive streams of the seed so that two dag
  // terms are not copies of each other.
  std::optional<DirectedGraph> acc;
  std::uint64_t index = 0;
  for (auto term : terms) {
    if (term.starts_with("union:"))
      throw ConfigInvalid("graph", "nested union");
    auto part = build_graph_term(term, config.generator, stream_seed(seed, index++));
    acc = acc ? disjoint_union(*acc, part) : std::move(part);
  }
  return std::move(*acc);
}

void validate(const ExperimentConfig &config) {
  if (config.command == Command::Gen) {
    if (config.corpus_generator.empty())
      throw ConfigInvalid("generator", "required for gen");
    if (config.grid.empty())
      throw ConfigInvalid("grid", "must not be empty");
    if (config.out.empty() && !default_output_dir())
      throw ConfigInvalid("out", "gen needs --out or FEWPATHS_OUT_DIR");
    if (config.corpus_generator == "dag" && !config.seed)
      throw ConfigInvalid("seed", "required for the dag generator");
    return;
  }
  if (config.graph.empty())
    throw ConfigInvalid("graph", "required");
  if (uses_random_generator(config.graph) && !config.seed)
    throw ConfigInvalid("seed", "required for the dag generator");
  if (!config.noise.is_exact() && !config.seed)
    throw ConfigInvalid("seed", "required when noise is not exact");
  if (config.command == Command::Walk && !config.seed)
    throw ConfigInvalid("seed", "required for random walks");
  if (!config.noise.is_exact()) {
    if (!config.default_accuracy && !(config.noise.accuracy > 0.0))
      throw ConfigInvalid("accuracy", "must be positive");
    if (!(config.noise.failure_prob >= 0.0 && config.noise.failure_prob < 1.0))
      throw ConfigInvalid("failure-prob", "must lie in [0, 1)");
  }
  if (config.trials == 0)
    throw ConfigInvalid("trials", "must be positive");
  if (config.k == 0)
    throw ConfigInvalid("k", "must be positive");
  if (config.bound == 0)
    throw ConfigInvalid("P", "must be positive");
  if (config.command == Command::Count && config.algorithm != "theorem1" &&
      config.algorithm != "theorem2")
    throw ConfigInvalid("alg", "expected theorem1 or theorem2");
  if (needs_pair(config.command)) {
    if (!config.s)
      throw ConfigInvalid("s", "required");
    if (!config.t)
      throw ConfigInvalid("t", "required");
  }
}

nlohmann::json to_json(const ExperimentConfig &config) {
  nlohmann::json j;
  j["command"] = std::string(to_string(config.command));
  if (config.command == Command::Gen) {
    j["generator"] = config.corpus_generator;
    j["grid"] = config.grid;
    j["density"] = config.generator.density;
  } else {
    j["graph"] = config.graph;
    j["half"] = config.generator.half;
    j["m"] = config.generator.m;
    j["n"] = config.generator.n;
    j["density"] = config.generator.density;
    j["algorithm"] = config.algorithm;
    j["s"] = config.s ? nlohmann::json(*config.s) : nlohmann::json(nullptr);
    j["t"] = config.t ? nlohmann::json(*config.t) : nlohmann::json(nullptr);
    j["k"] = config.k;
    j["P"] = config.bound;
    j["noise"] = {{"mode", std::string(to_string(config.noise.mode))},
                  {"accuracy", config.default_accuracy ? nlohmann::json(nullptr)
                                                       : nlohmann::json(config.noise.accuracy)},
                  {"failure_prob", config.noise.failure_prob}};
    j["trials"] = config.trials;
    j["max_steps"] = config.max_steps ? nlohmann::json(*config.max_steps) : nlohmann::json(nullptr);
    j["strict_entry_sweep"] = config.strict_entry_sweep;
  }
  j["seed"] = config.seed ? nlohmann::json(*config.seed) : nlohmann::json(nullptr);
  j["out"] = config.out;
  return j;
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> grid;
  if (text.empty())
    return grid;
  for (auto item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      try {
        grid.push_back(parse_double(item, "grid value"));
      } catch (const ConfigInvalid &e) {
        throw ConfigInvalid("grid", e.what());
      }
      continue;
    }
    std::uint64_t lo = 0, hi = 0;
    try {
      lo = parse_u64(item.substr(0, dots), "range start");
      hi = parse_u64(item.substr(dots + 2), "range end");
    } catch (const ConfigInvalid &e) {
      throw ConfigInvalid("grid", e.what());
    }
    if (lo > hi || hi - lo > 100000)
      throw ConfigInvalid("grid", "bad range '" + std::string(item) + "'");
    for (auto v = lo; v <= hi; ++v)
      grid.push_back(static_cast<double>(v));
  }
  return grid;
}

std::optional<std::string> default_output_dir() {
  const char *dir = std::getenv("FEWPATHS_OUT_DIR");
  if (dir == nullptr || *dir == '\0')
    return std::nullopt;
  return std::string(dir);
}

} // namespace fewpaths::harness
