#pragma once

#include <ostream>

#include <nlohmann/json.hpp>

#include "fewpaths/harness/config.hpp"

namespace fewpaths::harness {

// Result of one run: a JSON document with the sections
//   schema, command, config, instances, aggregate, timing.
// Everything except `timing` is a pure function of the config.
struct RunReport {
  nlohmann::json config;
  nlohmann::json instances = nlohmann::json::array();
  nlohmann::json aggregate = nlohmann::json::object();
  nlohmann::json timing = nlohmann::json::object();
  std::string command;

  bool any_instance_error() const;

  nlohmann::json to_json() const;
  // The report without the timing section.
  nlohmann::json deterministic_json() const;
};

inline constexpr const char *kRunReportSchema = "fewpaths.run_report/1";

// Validates the config and executes the selected pipeline. Algorithm errors
// are recorded per instance and never abort the batch. Throws ConfigInvalid
// for invalid configs, including unreadable graph files. `gen` writes its
// corpus to config.out (or FEWPATHS_OUT_DIR). One progress line per instance
// goes to `progress` when it is non-null.
RunReport run(const ExperimentConfig &config, std::ostream *progress = nullptr);

} // namespace fewpaths::harness
