#pragma once

// Command layer behind the CLI: validated run configuration in, canonical
// CSV (plus optional SVG) out. Commands are pure given the config, so a
// repeated invocation reproduces output byte for byte.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lyap/core.hpp"
#include "lyap/recursion.hpp"

namespace lyap {

enum class OutputFormat { csv, svg, both };

struct RunConfig {
    ModelKind model = ModelKind::bernoulli;
    double p = 0.5;            // invariant-measure parameter
    std::uint64_t n = 0;       // chain steps; 0 = command default
    std::uint64_t m = 0;       // replicas; 0 = command default
    double k = 0.0;            // grid spacing; 0 = command default
    double range_a = 0.0;
    double range_b = 0.0;
    bool range_set = false;
    std::uint64_t count = 100'000;  // invariant draws
    std::uint32_t depth = 64;       // invariant chain depth
    int depth_cap = 34;             // streaming-engine level cap
    int nmax = 25;
    Engine engine = Engine::streaming;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out;           // output stem; empty = CSV to stdout
    OutputFormat format = OutputFormat::csv;
    bool paper_scale = false;  // restore the full-size simulation parameters
};

// exit codes used across the CLI
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

struct CommandOutput {
    int exit_code = kExitOk;
    std::string csv_text;  // possibly partial on computation errors
    std::vector<std::pair<std::string, std::string>> svg_files;  // name suffix -> content
    std::string error;
};

CommandOutput run_bounds(const RunConfig& config);
CommandOutput run_lambda_curve(const RunConfig& config);
CommandOutput run_variance_curve(const RunConfig& config);
CommandOutput run_invariant(const RunConfig& config);

// Runs a command and writes its outputs (files under config.out, or CSV to
// stdout when no output stem is given). Returns the process exit code.
int execute(const std::string& command, const RunConfig& config);

}  // namespace lyap
