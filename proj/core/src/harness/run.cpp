#include "fewpaths/harness/run.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <map>

#include "fewpaths/counting.hpp"
#include "fewpaths/errors.hpp"
#include "fewpaths/harness/corpus.hpp"
#include "fewpaths/layered.hpp"
#include "fewpaths/path_count.hpp"
#include "fewpaths/random_walk.hpp"
#include "fewpaths/recognizer.hpp"
#include "fewpaths/savitch.hpp"
#include "fewpaths/spectral.hpp"
#include "fewpaths/svd.hpp"
#include "fewpaths/traversal.hpp"
#include "fewpaths/unambiguity.hpp"

namespace fewpaths::harness {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const BigInt kOracleCap = BigInt(1) << 128;

json pair_json(const std::optional<std::pair<Node, Node>> &p) {
  return p ? json::array({p->first, p->second}) : json(nullptr);
}

template <class T> json opt_json(const std::optional<T> &v) {
  return v ? json(*v) : json(nullptr);
}

std::string error_type(const std::exception &e) {
  if (dynamic_cast<const NumericalFailure *>(&e))
    return "NumericalFailure";
  if (dynamic_cast<const ThresholdOnSingularValue *>(&e))
    return "ThresholdOnSingularValue";
  if (dynamic_cast<const ThresholdUnresolvable *>(&e))
    return "ThresholdUnresolvable";
  if (dynamic_cast<const SpectralBoundViolated *>(&e))
    return "SpectralBoundViolated";
  if (dynamic_cast<const PromiseViolationSuspected *>(&e))
    return "PromiseViolationSuspected";
  return "Error";
}

json error_record(const std::exception &e) {
  return {{"type", error_type(e)}, {"message", e.what()}};
}

// Runs one instance, turning algorithm errors into a record instead of
// aborting the batch.
class Batch {
public:
  Batch(RunReport &report, std::ostream *progress, std::uint64_t total)
      : report_(report), progress_(progress), total_(total) {}

  void add(std::uint64_t seed, const std::function<void(json &)> &body) {
    const auto id = report_.instances.size();
    json record{{"id", id}, {"seed", seed}};
    const auto start = Clock::now();
    try {
      body(record);
      record["status"] = "ok";
    } catch (const ConfigInvalid &) {
      throw;
    } catch (const Error &e) {
      record["status"] = "error";
      record["error"] = error_record(e);
      ++errors_[error_type(e)];
    }
    times_.push_back(ms_since(start));
    if (progress_)
      *progress_ << "[" << id + 1 << "/" << total_ << "] " << record["status"].get<std::string>()
                 << '\n';
    report_.instances.push_back(std::move(record));
  }

  // Records the same error for every instance (setup failed).
  void fail_all(std::exception_ptr error, std::uint64_t base_seed) {
    for (std::uint64_t i = 0; i < total_; ++i)
      add(base_seed + i, [&](json &) { std::rethrow_exception(error); });
  }

  json error_counts() const {
    json j = json::object();
    for (const auto &[type, count] : errors_)
      j[type] = count;
    return j;
  }

  std::uint64_t error_total() const {
    std::uint64_t total = 0;
    for (const auto &[type, count] : errors_)
      total += count;
    return total;
  }

  const std::vector<double> &times() const { return times_; }

private:
  RunReport &report_;
  std::ostream *progress_;
  std::uint64_t total_;
  std::map<std::string, std::uint64_t> errors_;
  std::vector<double> times_;
};

DirectedGraph load_graph(const ExperimentConfig &config) {
  try {
    return build_graph(config);
  } catch (const IOFailure &e) {
    throw ConfigInvalid("graph", e.what());
  } catch (const ParseError &e) {
    throw ConfigInvalid("graph", e.what());
  } catch (const std::invalid_argument &e) {
    throw ConfigInvalid("graph", e.what());
  }
}

void check_node(const DirectedGraph &g, const std::optional<Node> &v, const char *field) {
  if (v && *v >= g.size())
    throw ConfigInvalid(field, "node " + std::to_string(*v) + " out of range for n = " +
                                   std::to_string(g.size()));
}

NoiseModel instance_noise(const ExperimentConfig &config, std::uint64_t i) {
  NoiseModel noise = config.noise;
  noise.seed = config.seed.value_or(0) + i;
  return noise;
}

json count_params_json(const CountParameters &p) {
  return {{"P", p.bound},
          {"zeta", p.zeta},
          {"delta", p.delta},
          {"zeta_realized", p.zeta_realized},
          {"accuracy", p.accuracy},
          {"failure_prob", p.failure_prob},
          {"Z", p.scale},
          {"matrix_size", p.matrix_size},
          {"layered", p.layered},
          {"mode", std::string(to_string(p.mode))}};
}

void run_count(const ExperimentConfig &config, const DirectedGraph &g, RunReport &report,
               std::ostream *progress) {
  const Node s = *config.s;
  const Node t = *config.t;
  const bool theorem1 = config.algorithm == "theorem1";

  // What the algorithm is supposed to return: N(s,t), or for the layered
  // route the number of walks of length <= n-1.
  PathCount oracle;
  if (theorem1 || is_acyclic(g)) {
    oracle = count_paths_from(g, s, kOracleCap)[t];
  } else {
    const auto n = g.size();
    oracle = count_paths_from(layer_graph(g), s, kOracleCap)[layered_node(t, n, n)];
  }

  Batch batch(report, progress, config.trials);
  std::uint64_t matches = 0;
  auto record = [&](json &r, const CountResult &c) {
    r["count"] = c.count;
    r["raw_value"] = c.raw_value;
    r["margin"] = c.margin;
    r["failed"] = c.failed;
    r["parameters"] = count_params_json(c.parameters);
    r["oracle_count"] = oracle.to_string();
    const bool match = oracle.is_finite() && oracle.value() == c.count;
    r["matches_oracle"] = match;
    matches += match ? 1 : 0;
  };

  try {
    if (theorem1) {
      const StronglyFewCounter counter(g, config.bound);
      for (std::uint64_t i = 0; i < config.trials; ++i)
        batch.add(config.seed.value_or(0) + i, [&](json &r) {
          NoiseModel noise = instance_noise(config, i);
          if (config.default_accuracy)
            noise.accuracy = 1.0 / 3.0;
          record(r, counter.count(s, t, noise));
        });
    } else {
      const FewEndpointsCounter counter(g, config.bound);
      for (std::uint64_t i = 0; i < config.trials; ++i)
        batch.add(config.seed.value_or(0) + i,
                  [&](json &r) { record(r, counter.count(s, t, instance_noise(config, i))); });
    }
  } catch (const ConfigInvalid &) {
    throw;
  } catch (const Error &) {
    batch.fail_all(std::current_exception(), config.seed.value_or(0));
  }

  const auto n = static_cast<double>(config.trials);
  report.aggregate = {{"instances", config.trials},
                      {"errors", batch.error_total()},
                      {"error_types", batch.error_counts()},
                      {"matches_oracle", matches},
                      {"mismatch_rate", (n - static_cast<double>(matches)) / n},
                      {"oracle_count", oracle.to_string()}};
  report.timing["instances_ms"] = batch.times();
}

void run_recognize(const ExperimentConfig &config, const DirectedGraph &g, RunReport &report,
                   std::ostream *progress) {
  const Node s = *config.s;
  const Node t = *config.t;
  const bool member = stcon_sf_member(g, s, t, config.k);
  Batch batch(report, progress, config.trials);
  std::uint64_t wrong = 0;
  std::map<std::string, std::uint64_t> reasons;
  try {
    const StconRecognizer recognizer(g);
    for (std::uint64_t i = 0; i < config.trials; ++i)
      batch.add(config.seed.value_or(0) + i, [&](json &r) {
        const auto v = recognizer.decide(s, t, config.k, instance_noise(config, i),
                                         config.strict_entry_sweep);
        r["accepted"] = v.accepted;
        r["reason"] = std::string(to_string(v.reason));
        r["cycle_node"] = opt_json(v.cycle_node);
        r["pair"] = pair_json(v.pair);
        r["sigma_min_estimate"] = v.sigma_min_estimate;
        r["spectrum_failed"] = v.spectrum_failed;
        r["failed_entry_reads"] = v.failed_entry_reads;
        r["parameters"] = {{"k", v.parameters.k},
                           {"delta", v.parameters.delta},
                           {"epsilon", v.parameters.epsilon},
                           {"epsilon_entries", v.parameters.epsilon_entries},
                           {"entry_accuracy", v.parameters.entry_accuracy},
                           {"layered_size", v.parameters.layered_size},
                           {"entries_read", v.parameters.entries_read},
                           {"strict", v.parameters.strict},
                           {"mode", std::string(to_string(v.parameters.mode))}};
        r["oracle_member"] = member;
        r["correct"] = v.accepted == member;
        wrong += v.accepted == member ? 0 : 1;
        ++reasons[std::string(to_string(v.reason))];
      });
  } catch (const ConfigInvalid &) {
    throw;
  } catch (const Error &) {
    batch.fail_all(std::current_exception(), config.seed.value_or(0));
  }
  json reason_counts = json::object();
  for (const auto &[reason, count] : reasons)
    reason_counts[reason] = count;
  report.aggregate = {{"instances", config.trials},
                      {"errors", batch.error_total()},
                      {"error_types", batch.error_counts()},
                      {"oracle_member", member},
                      {"wrong_verdicts", wrong},
                      {"wrong_rate", static_cast<double>(wrong) / static_cast<double>(config.trials)},
                      {"reasons", reason_counts}};
  report.timing["instances_ms"] = batch.times();
}

void run_classify(const ExperimentConfig &config, const DirectedGraph &g, RunReport &report,
                  std::ostream *progress) {
  Batch batch(report, progress, 1);
  batch.add(config.seed.value_or(0), [&](json &r) {
    const auto rep = classify(g, *config.s, *config.t, config.k);
    r["k"] = rep.k;
    r["s"] = rep.s;
    r["t"] = rep.t;
    r["unambiguous_st"] = rep.unambiguous_st;
    r["st_witness"] = pair_json(rep.st_witness);
    r["reach_unambiguous_s"] = rep.reach_unambiguous_s;
    r["reach_witness"] = opt_json(rep.reach_witness);
    r["strongly_unambiguous"] = rep.strongly_unambiguous;
    r["strong_witness"] = pair_json(rep.strong_witness);
  });
  report.aggregate = {{"instances", 1}, {"errors", batch.error_total()}};
  report.timing["instances_ms"] = batch.times();
}

void run_spectrum(const ExperimentConfig &config, const DirectedGraph &g, RunReport &report,
                  std::ostream *progress) {
  if (!config.noise.is_exact() && config.default_accuracy)
    throw ConfigInvalid("accuracy", "required for a noisy spectrum estimate");
  const auto n = static_cast<double>(g.size());
  const auto counts = count_paths_oracle(g, kOracleCap);
  const auto max_count = counts.max_finite();

  Batch batch(report, progress, config.trials);
  std::uint64_t violations = 0;
  try {
    const auto d = svd(counting_laplacian(g));
    for (std::uint64_t i = 0; i < config.trials; ++i)
      batch.add(config.seed.value_or(0) + i, [&](json &r) {
        r["n"] = g.size();
        r["sigma"] = d.sigma;
        r["sigma_max"] = d.sigma_max();
        r["sigma_min"] = d.sigma_min();
        r["sweeps"] = d.sweeps;
        r["max_count"] = max_count ? json(max_count->str()) : json(nullptr);
        // sigma_1 <= n * max|L| = n; with M = max N(i,j) finite,
        // M <= |L^-1|_2 <= n M, i.e. 1/(nM) <= sigma_n <= 1/M.
        const double slack = 1.0 + 1e-9;
        json checks{{"sigma_max_bound", n}, {"sigma_max_ok", d.sigma_max() <= n * slack}};
        bool ok = d.sigma_max() <= n * slack;
        if (max_count) {
          const double m = max_count->convert_to<double>();
          checks["sigma_min_lower_bound"] = 1.0 / (n * m);
          checks["sigma_min_upper_bound"] = 1.0 / m;
          const bool lower = d.sigma_min() * slack >= 1.0 / (n * m);
          const bool upper = d.sigma_min() <= slack / m;
          checks["sigma_min_lower_ok"] = lower;
          checks["sigma_min_upper_ok"] = upper;
          ok = ok && lower && upper;
        }
        checks["consistent"] = ok;
        violations += ok ? 0 : 1;
        r["bounds"] = checks;
        if (!config.noise.is_exact()) {
          const auto est = spectrum_estimate(d, instance_noise(config, i));
          r["sigma_estimate"] = est.values;
          r["sigma_min_estimate"] = est.min();
          r["estimate_failed"] = est.failed;
        }
      });
  } catch (const ConfigInvalid &) {
    throw;
  } catch (const Error &) {
    batch.fail_all(std::current_exception(), config.seed.value_or(0));
  }
  report.aggregate = {{"instances", config.trials},
                      {"errors", batch.error_total()},
                      {"error_types", batch.error_counts()},
                      {"bound_violations", violations}};
  report.timing["instances_ms"] = batch.times();
}

void run_walk(const ExperimentConfig &config, const DirectedGraph &g, RunReport &report,
              std::ostream *progress) {
  const std::uint64_t steps = config.max_steps.value_or(g.size());
  Batch batch(report, progress, 1);
  json summary;
  batch.add(*config.seed, [&](json &r) {
    const auto w = random_walk_hit_probability(g, *config.s, *config.t, steps, config.trials,
                                               *config.seed);
    const double p = w.probability();
    r["hits"] = w.hits;
    r["trials"] = w.trials;
    r["max_steps"] = steps;
    r["probability"] = p;
    r["standard_error"] = std::sqrt(p * (1.0 - p) / static_cast<double>(w.trials));
    summary = r;
  });
  report.aggregate = {{"instances", 1}, {"errors", batch.error_total()}};
  if (!summary.is_null()) {
    report.aggregate["probability"] = summary["probability"];
    report.aggregate["standard_error"] = summary["standard_error"];
  }
  report.timing["instances_ms"] = batch.times();
}

void run_savitch(const ExperimentConfig &config, const DirectedGraph &g, RunReport &report,
                 std::ostream *progress) {
  const bool expected = reachable_from(g, *config.s)[*config.t];
  Batch batch(report, progress, 1);
  bool match = false;
  batch.add(config.seed.value_or(0), [&](json &r) {
    const auto res = savitch_reachable(g, *config.s, *config.t);
    r["reachable"] = res.reachable;
    r["recursion_depth"] = res.recursion_depth;
    r["calls"] = res.calls;
    r["oracle_reachable"] = expected;
    match = res.reachable == expected;
    r["matches_oracle"] = match;
  });
  report.aggregate = {{"instances", 1}, {"errors", batch.error_total()}, {"matches_oracle", match}};
  report.timing["instances_ms"] = batch.times();
}

// Times each pipeline stage on the input graph; results go to `instances`,
// wall-clock numbers to `timing`.
void run_bench(const ExperimentConfig &config, const DirectedGraph &g, RunReport &report,
               std::ostream *progress) {
  const auto n = g.size();
  const Node s = config.s.value_or(0);
  const Node t = config.t.value_or(n - 1);
  std::vector<std::pair<std::string, std::function<json()>>> stages;
  stages.emplace_back("oracle", [&] {
    const auto m = count_paths_oracle(g, kOracleCap).max_finite();
    return json{{"max_count", m ? json(m->str()) : json(nullptr)}};
  });
  stages.emplace_back("svd", [&] {
    const auto d = svd(counting_laplacian(g));
    return json{{"sigma_max", d.sigma_max()}, {"sigma_min", d.sigma_min()}, {"sweeps", d.sweeps}};
  });
  if (is_acyclic(g))
    stages.emplace_back("theorem1", [&] {
      const auto c = count_paths_strongly_few(g, s, t, config.bound, NoiseModel::exact());
      return json{{"count", c.count}};
    });
  if (n <= 24)
    stages.emplace_back("recognize", [&] {
      const auto v = recognize_stcon_sf(g, s, t, config.k, NoiseModel::exact());
      return json{{"accepted", v.accepted}, {"reason", std::string(to_string(v.reason))}};
    });
  if (n <= 16)
    stages.emplace_back("savitch", [&] {
      const auto r = savitch_reachable(g, s, t);
      return json{{"reachable", r.reachable}, {"recursion_depth", r.recursion_depth}};
    });

  Batch batch(report, progress, stages.size());
  json stage_ms = json::object();
  for (const auto &[name, body] : stages) {
    std::vector<double> reps;
    batch.add(config.seed.value_or(0), [&](json &r) {
      r["stage"] = name;
      for (std::uint64_t i = 0; i < config.trials; ++i) {
        const auto start = Clock::now();
        r["result"] = body();
        reps.push_back(ms_since(start));
      }
    });
    stage_ms[name] = reps;
  }
  report.aggregate = {{"stages", stages.size()}, {"errors", batch.error_total()}, {"n", n}};
  report.timing["stages_ms"] = stage_ms;
}

void run_gen(const ExperimentConfig &config, RunReport &report) {
  const std::filesystem::path dir = config.out.empty() ? *default_output_dir() : config.out;
  CorpusSpec spec{config.corpus_generator, config.grid, config.generator.density,
                  config.seed.value_or(0)};
  const auto manifest = emit_corpus(spec, dir);
  for (const auto &entry : manifest.at("entries")) {
    json r = entry;
    r["id"] = report.instances.size();
    r["status"] = "ok";
    report.instances.push_back(std::move(r));
  }
  report.aggregate = {{"files", manifest.at("entries").size()},
                      {"directory", dir.string()},
                      {"manifest", (dir / kManifestFile).string()}};
}

} // namespace

bool RunReport::any_instance_error() const {
  for (const auto &r : instances)
    if (r.value("status", "ok") != "ok")
      return true;
  return false;
}

json RunReport::deterministic_json() const {
  return {{"schema", kRunReportSchema},
          {"command", command},
          {"config", config},
          {"instances", instances},
          {"aggregate", aggregate}};
}

json RunReport::to_json() const {
  auto j = deterministic_json();
  j["timing"] = timing;
  return j;
}

RunReport run(const ExperimentConfig &config, std::ostream *progress) {
  validate(config);
  RunReport report;
  report.command = std::string(to_string(config.command));
  report.config = harness::to_json(config);
  const auto start = Clock::now();

  if (config.command == Command::Gen) {
    run_gen(config, report);
  } else {
    const auto g = load_graph(config);
    check_node(g, config.s, "s");
    check_node(g, config.t, "t");
    switch (config.command) {
    case Command::Count:
      run_count(config, g, report, progress);
      break;
    case Command::Recognize:
      run_recognize(config, g, report, progress);
      break;
    case Command::Classify:
      run_classify(config, g, report, progress);
      break;
    case Command::Spectrum:
      run_spectrum(config, g, report, progress);
      break;
    case Command::Walk:
      run_walk(config, g, report, progress);
      break;
    case Command::Savitch:
      run_savitch(config, g, report, progress);
      break;
    case Command::Bench:
      run_bench(config, g, report, progress);
      break;
    case Command::Gen:
      break;
    }
  }
  report.timing["total_ms"] = ms_since(start);
  return report;
}

} // namespace fewpaths::harness
