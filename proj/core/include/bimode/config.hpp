// config.hpp — run configuration: defaults, file ingestion, validation.
// Flat INI-style sections mirror the nested structs; physical inputs are
// conventionally dimensionless multiples of omega2.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bimode/model.hpp"

namespace bimode {

enum class OutputSeries { delta, purity, entropy, trace_distance, greens };

const char* to_string(OutputSeries series);

struct RunConfig {
    SystemParams system;
    InitialState initial;
    TimeGrid grid;
    int n_max{40};
    double truncation_budget{1e-10};
    std::vector<OutputSeries> outputs;  // column groups emitted by compare

    bool wants(OutputSeries series) const;
    void validate() const;   // nested invariants plus n_max >= 1, budget in (0, 1e-4]
};

// Demo defaults: resonant modes, unit coupling, alpha1 = 0.5, alpha2 = 0.3,
// gamma = 1, 200 steps over [0, 2*pi], n_max = 40, all outputs.
RunConfig default_run_config();

// Parses "[section]" / "key = value" text ('#' and ';' comments). Unknown
// sections or keys, bad numbers, and duplicate keys raise ConfigError with
// the source name and line number.
RunConfig parse_config_text(const std::string& text, const std::string& source_name);

RunConfig parse_config_file(const std::string& path);

}  // namespace bimode
