#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fewpaths/errors.hpp"
#include "fewpaths/harness/corpus.hpp"
#include "fewpaths/harness/run.hpp"

namespace fs = std::filesystem;
using namespace fewpaths;
using namespace fewpaths::harness;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInstance = 3;

struct Flags {
  ExperimentConfig config;
  std::string noise = "exact";
  bool exact = false;
  double accuracy = 0.0;
  Node s = 0, t = 0;
  std::uint64_t seed = 0, max_steps = 0;
  std::string grid;
  std::string verify;
  bool quiet = false;
};

void add_pipeline_flags(CLI::App *cmd, Flags &f) {
  cmd->add_option("--graph", f.config.graph,
                  "file:PATH | chain | diamond | dag | lange:left|middle|right | union:A+B+...");
  cmd->add_option("--half", f.config.generator.half, "chain: number of spine nodes");
  cmd->add_option("--m", f.config.generator.m, "diamond: number of triangles");
  cmd->add_option("--n", f.config.generator.n, "dag: number of nodes");
  cmd->add_option("--density", f.config.generator.density, "dag: edge probability");
  cmd->add_option("--s", f.s, "source node (0-based)");
  cmd->add_option("--t", f.t, "target node (0-based)");
  cmd->add_option("--k", f.config.k, "path-count bound for recognize/classify");
  cmd->add_option("--P", f.config.bound, "promised path-count bound for count");
  cmd->add_option("--noise", f.noise, "exact | uniform | adversarial");
  cmd->add_flag("--exact", f.exact, "shorthand for --noise exact");
  cmd->add_option("--accuracy", f.accuracy, "additive accuracy of simulated outputs");
  cmd->add_option("--failure-prob", f.config.noise.failure_prob, "failure probability");
  cmd->add_option("--seed", f.seed, "base seed; instance i uses seed + i");
  cmd->add_option("--trials", f.config.trials, "repetitions (walk: number of walks)");
  cmd->add_option("--max-steps", f.max_steps, "walk: step limit (default n)");
  cmd->add_option("--out", f.config.out, "write the report here");
  cmd->add_flag("--strict-entry-sweep", f.config.strict_entry_sweep,
                "recognize: check every entry of the inverse against k");
  cmd->add_flag("-q,--quiet", f.quiet, "no progress lines");
}

void write_report(const RunReport &report, const std::string &out, Command command) {
  const auto text = report.to_json().dump(2) + "\n";
  fs::path path;
  if (command != Command::Gen && !out.empty())
    path = out;
  else if (auto dir = default_output_dir(); dir && command != Command::Gen)
    path = fs::path(*dir) / (report.command + ".json");
  if (path.empty()) {
    std::cout << text;
    return;
  }
  if (path.has_parent_path())
    fs::create_directories(path.parent_path());
  std::ofstream file(path);
  if (!file || !(file << text))
    throw IOFailure("cannot write " + path.string());
  std::cerr << "report written to " << path.string() << '\n';
}

int verify_corpus(const std::string &dir) {
  const auto mismatches = verify_manifest(dir);
  for (const auto &m : mismatches)
    std::cout << "MISMATCH " << m << '\n';
  std::cout << (mismatches.empty() ? "manifest verified\n" : "manifest has mismatches\n");
  return mismatches.empty() ? 0 : kExitInstance;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Path counting on directed graphs with simulated spectral subroutines"};
  app.require_subcommand(1);
  Flags f;

  auto *gen = app.add_subcommand("gen", "write a generated corpus plus manifest.json");
  gen->add_option("--generator", f.config.corpus_generator, "chain | diamond | dag");
  gen->add_option("--grid", f.grid, "parameter values, e.g. 2,4,8 or 1..5");
  gen->add_option("--density", f.config.generator.density, "dag: edge probability");
  gen->add_option("--seed", f.seed, "dag: item i uses seed + i");
  gen->add_option("--out", f.config.out, "corpus directory (default FEWPATHS_OUT_DIR)");
  gen->add_option("--verify", f.verify, "re-check an existing corpus directory instead");
  gen->add_flag("-q,--quiet", f.quiet, "no progress lines");

  const std::pair<const char *, const char *> pipelines[] = {
      {"count", "count s-t paths (--alg theorem1|theorem2)"},
      {"recognize", "decide <G,s,t,k> membership via the layered inverse"},
      {"classify", "unambiguity predicates from the exact oracle"},
      {"spectrum", "singular values of the counting Laplacian and their bounds"},
      {"walk", "Monte Carlo random-walk hit probability"},
      {"savitch", "midpoint-recursion reachability"},
      {"bench", "time each pipeline stage on one graph"},
  };
  for (const auto &[name, help] : pipelines) {
    auto *cmd = app.add_subcommand(name, help);
    add_pipeline_flags(cmd, f);
    if (std::string_view(name) == "count")
      cmd->add_option("--alg", f.config.algorithm, "theorem1 | theorem2");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitConfig;
  }

  auto *chosen = app.get_subcommands().front();
  auto &config = f.config;
  config.command = *parse_command(chosen->get_name());

  try {
    if (config.command == Command::Gen) {
      if (!f.verify.empty())
        return verify_corpus(f.verify);
      config.grid = parse_grid(f.grid);
    }
    if (chosen->count("--seed") > 0)
      config.seed = f.seed;
    if (config.command != Command::Gen) {
      if (chosen->count("--s") > 0)
        config.s = f.s;
      if (chosen->count("--t") > 0)
        config.t = f.t;
      if (chosen->count("--max-steps") > 0)
        config.max_steps = f.max_steps;
      auto mode = parse_noise_mode(f.noise);
      if (!mode)
        throw ConfigInvalid("noise", "expected exact, uniform or adversarial");
      if (f.exact && *mode != NoiseMode::Exact)
        throw ConfigInvalid("noise", "--exact conflicts with --noise " + f.noise);
      config.noise.mode = *mode;
      if (chosen->count("--accuracy") > 0) {
        config.noise.accuracy = f.accuracy;
        config.default_accuracy = false;
      }
    }

    const auto report = run(config, f.quiet ? nullptr : &std::cerr);
    write_report(report, config.out, config.command);
    return report.any_instance_error() ? kExitInstance : 0;
  } catch (const ConfigInvalid &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
