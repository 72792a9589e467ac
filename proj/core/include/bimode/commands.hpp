// commands.hpp — the operational surface behind the CLI subcommands: CSV
// emission for Green functions, the analytical-vs-oracle comparison run,
// canned mixedness sweeps, and the self-validation suite.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bimode/config.hpp"
#include "bimode/model.hpp"

namespace bimode {

// Exit codes shared by the command layer and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitTruncation = 3;

// time, Re/Im of u, v0, v1, v2, |u|^2+|v0|^2, |v1|+|v2| per grid point.
int cmd_greens(const RunConfig& config, std::ostream& out);

// Comparison CSV to `out`, one summary line to `diag`; returns kExitOk iff
// the max trace distance stays within `tolerance`, kExitTruncation if a
// truncation sentinel fires.
int cmd_compare(const RunConfig& config, double tolerance, std::ostream& out,
                std::ostream& diag);

struct Fig1Curve {
    std::string label;
    SystemParams params;
    InitialState state;
};

struct Fig1Panel {
    char variant{'a'};
    TimeGrid grid;                  // spans 3 periods of the slowest curve
    std::vector<Fig1Curve> curves;
    bool power_columns{false};      // panel a: delta^0, delta^1, delta^2
};

// Canned parameter sets: (a) delta powers at omega1/omega2 = 2, V12 = omega2,
// gamma = 2; (b) gamma in {2, 1, 0.5}; (c) V12 in {2, 1, 0.5} omega2;
// (d) (omega1, omega2) in {(1,1), (2,1), (sqrt2,1)}. Unknown variants are
// rejected with ConfigError.
Fig1Panel fig1_panel(char variant);

int cmd_fig1(char variant, std::ostream& out);

// QA fault hooks: deliberately corrupt one ingredient to prove the
// validation checks can catch it.
struct FaultInjection {
    bool flip_v2_sign{false};             // negate v2(t,t) feeding the coefficients
    bool swap_partial_trace_order{false}; // trace out the wrong mode
};

struct CheckResult {
    std::string name;
    bool pass{false};
    double measured{0.0};
    double threshold{0.0};
    std::string detail;
};

std::vector<CheckResult> run_validation(const FaultInjection& faults = {});

int cmd_validate(std::ostream& out, const FaultInjection& faults = {});

}  // namespace bimode
