#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bimode/commands.hpp"
#include "bimode/config.hpp"
#include "bimode/errors.hpp"

using namespace bimode;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

double cell(const std::vector<std::vector<std::string>>& rows, std::size_t r, std::size_t c) {
    return std::stod(rows.at(r).at(c));
}

}  // namespace

TEST_CASE("config: defaults when no keys are given") {
    const RunConfig cfg = parse_config_text("", "inline");
    CHECK(cfg.system.omega1 == 1.0);
    CHECK(cfg.system.v12 == Complex{1.0, 0.0});
    CHECK(cfg.initial.alpha1 == Complex{0.5, 0.0});
    CHECK(cfg.initial.gamma == 1.0);
    CHECK(cfg.grid.n_steps == 200);
    CHECK(cfg.n_max == 40);
    CHECK(cfg.truncation_budget == 1e-10);
    CHECK(cfg.wants(OutputSeries::delta));
    CHECK(cfg.wants(OutputSeries::greens));
}

TEST_CASE("config: full round trip") {
    const std::string text = R"(
# demo configuration
[system]
omega1 = 2.0
omega2 = 1.0
v12_re = 0.4
v12_im = -0.3

[initial]
alpha1_re = 0.3
alpha1_im = 0.4
alpha2_re = 0.2
gamma = 1.5
theta = 0.785398163
[grid]
t0 = 0.0
t = 6.283185307
n_steps = 128

[run]
n_max = 32
truncation_budget = 1e-6
outputs = delta, trace_distance
)";
    const RunConfig cfg = parse_config_text(text, "inline");
    CHECK(cfg.system.omega1 == 2.0);
    CHECK(cfg.system.v12 == Complex{0.4, -0.3});
    CHECK(cfg.initial.alpha1 == Complex{0.3, 0.4});
    CHECK(cfg.initial.alpha2 == Complex{0.2, 0.0});
    CHECK(cfg.initial.gamma == 1.5);
    CHECK(cfg.initial.theta == doctest::Approx(0.785398163));
    CHECK(cfg.grid.n_steps == 128);
    CHECK(cfg.n_max == 32);
    CHECK(cfg.truncation_budget == 1e-6);
    CHECK(cfg.wants(OutputSeries::delta));
    CHECK(cfg.wants(OutputSeries::trace_distance));
    CHECK_FALSE(cfg.wants(OutputSeries::purity));
}

TEST_CASE("config: line-precise error reporting") {
    auto message_of = [](const std::string& text) -> std::string {
        try {
            parse_config_text(text, "cfg.ini");
        } catch (const ConfigError& ex) {
            return ex.what();
        }
        return "";
    };

    CHECK(message_of("[system]\nomega3 = 1\n").find("cfg.ini:2: unknown key 'omega3'") !=
          std::string::npos);
    CHECK(message_of("[orbit]\n").find("cfg.ini:1: unknown section") != std::string::npos);
    CHECK(message_of("omega1 = 1\n").find("before any [section]") != std::string::npos);
    CHECK(message_of("[system]\nomega1 = fast\n").find("cfg.ini:2:") != std::string::npos);
    CHECK(message_of("[system]\nomega1 = 1\nomega1 = 2\n").find("cfg.ini:3: duplicate") !=
          std::string::npos);
    CHECK(message_of("[grid]\nn_steps = 2.5\n").find("must be an integer") != std::string::npos);
    CHECK(message_of("[run]\noutputs = delta, plasma\n").find("unknown output series 'plasma'") !=
          std::string::npos);
    CHECK(message_of("[system]\nomega1 =\n").find("cfg.ini:2: empty value") != std::string::npos);
}

TEST_CASE("config: semantic validation") {
    CHECK_THROWS_AS(parse_config_text("[system]\nomega1 = -1\n", "x"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[run]\ntruncation_budget = 0.1\n", "x"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[run]\nn_max = 0\n", "x"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[grid]\nn_steps = -4\n", "x"), ConfigError);
    CHECK_THROWS_AS(parse_config_file("/nonexistent/path.ini"), ConfigError);
}

TEST_CASE("config: squeezing phase is wrapped into [0, 2 pi)") {
    const RunConfig cfg = parse_config_text("[initial]\ntheta = -1.5707963267948966\n", "x");
    CHECK(cfg.initial.theta == doctest::Approx(3.0 * kPi / 2).epsilon(1e-12));
    CHECK(cfg.initial.theta >= 0.0);
    CHECK(cfg.initial.theta < 2.0 * kPi);
}

TEST_CASE("cmd_greens: coherent run zeroes the future-influence columns") {
    RunConfig cfg = default_run_config();
    cfg.initial.gamma = 0.0;
    cfg.grid = TimeGrid{0.0, 2.0 * kPi, 64};

    std::ostringstream out;
    CHECK(cmd_greens(cfg, out) == kExitOk);
    const auto rows = parse_csv(out.str());
    REQUIRE(rows.size() == 66);  // header + 65 points
    CHECK(rows[0][0] == "time");
    CHECK(rows[0][10] == "future_influence");
    for (std::size_t r = 1; r < rows.size(); ++r) {
        for (std::size_t c = 5; c <= 8; ++c) CHECK(cell(rows, r, c) == 0.0);       // v1, v2
        CHECK(std::abs(cell(rows, r, 9) - 1.0) < 1e-12);                            // unitarity
        CHECK(cell(rows, r, 10) == 0.0);                                            // |v1|+|v2|
    }
}

TEST_CASE("cmd_greens: resonant transfer probability is sin^2(t)") {
    RunConfig cfg = default_run_config();
    cfg.grid = TimeGrid{0.0, kPi, 50};
    std::ostringstream out;
    cmd_greens(cfg, out);
    const auto rows = parse_csv(out.str());
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const double t = cell(rows, r, 0);
        const double v0_sq = cell(rows, r, 3) * cell(rows, r, 3) + cell(rows, r, 4) * cell(rows, r, 4);
        CHECK(std::abs(v0_sq - std::sin(t) * std::sin(t)) < 1e-12);
    }
}

TEST_CASE("cmd_greens: byte-identical output on repeated runs") {
    RunConfig cfg = default_run_config();
    cfg.grid = TimeGrid{0.0, 3.0, 37};
    std::ostringstream first, second;
    cmd_greens(cfg, first);
    cmd_greens(cfg, second);
    CHECK(first.str() == second.str());
    CHECK(first.str().find("\r") == std::string::npos);
}

TEST_CASE("cmd_compare: coherent run passes at 1e-10") {
    RunConfig cfg = default_run_config();
    cfg.initial.gamma = 0.0;
    cfg.n_max = 16;
    cfg.grid = TimeGrid{0.0, 2.0 * kPi, 40};

    std::ostringstream out, diag;
    CHECK(cmd_compare(cfg, 1e-10, out, diag) == kExitOk);
    CHECK(diag.str().find("result=PASS") != std::string::npos);

    const auto rows = parse_csv(out.str());
    REQUIRE(rows.size() == 42);
    CHECK(rows[0] == std::vector<std::string>{"time", "trace_distance", "fidelity",
                                              "purity_analytical", "purity_oracle",
                                              "entropy_oracle", "delta"});
    for (std::size_t r = 1; r < rows.size(); ++r) {
        CHECK(cell(rows, r, 1) < 1e-10);   // trace distance
        CHECK(cell(rows, r, 6) == 0.0);    // delta
    }
}

TEST_CASE("cmd_compare: output column selection") {
    RunConfig cfg = default_run_config();
    cfg.initial = InitialState{Complex{0.2, 0.0}, Complex{0.1, 0.0}, 0.0, 0.0};
    cfg.n_max = 8;
    cfg.grid = TimeGrid{0.0, 1.0, 4};
    cfg.outputs = {OutputSeries::delta};
    std::ostringstream out, diag;
    CHECK(cmd_compare(cfg, 1e-6, out, diag) == kExitOk);
    const auto rows = parse_csv(out.str());
    REQUIRE(!rows.empty());
    CHECK(rows[0] == std::vector<std::string>{"time", "delta"});
}

TEST_CASE("cmd_compare: undersized basis aborts through the truncation sentinel") {
    RunConfig cfg = default_run_config();
    cfg.initial.gamma = 2.0;
    cfg.n_max = 3;
    cfg.grid = TimeGrid{0.0, 1.0, 4};

    std::ostringstream out, diag;
    CHECK(cmd_compare(cfg, 1e-7, out, diag) == kExitTruncation);
    CHECK(diag.str().find("increase n_max") != std::string::npos);
    CHECK(out.str().empty());
}

TEST_CASE("cmd_fig1: panel a starts at (1, 0, 0) and stays periodic") {
    std::ostringstream out;
    CHECK(cmd_fig1('a', out) == kExitOk);
    const auto rows = parse_csv(out.str());
    CHECK(rows[0] == std::vector<std::string>{"time", "delta_pow0", "delta_pow1", "delta_pow2"});
    CHECK(cell(rows, 1, 0) == 0.0);
    CHECK(cell(rows, 1, 1) == 1.0);
    CHECK(cell(rows, 1, 2) == 0.0);
    CHECK(cell(rows, 1, 3) == 0.0);

    // delta^2 = (delta^1)^2 on every row
    for (std::size_t r = 1; r < rows.size(); r += 97) {
        const double d = cell(rows, r, 2);
        CHECK(std::abs(cell(rows, r, 3) - d * d) < 1e-14);
    }
}

TEST_CASE("cmd_fig1: panel b curves are ordered by squeezing strength") {
    std::ostringstream out;
    cmd_fig1('b', out);
    const auto rows = parse_csv(out.str());
    CHECK(rows[0] == std::vector<std::string>{"time", "delta_gamma_2", "delta_gamma_1",
                                              "delta_gamma_0.5"});
    // at the first maximum of the gamma = 2 curve
    std::size_t arg_max = 1;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (cell(rows, r, 1) > cell(rows, arg_max, 1)) arg_max = r;
    }
    CHECK(cell(rows, arg_max, 1) > cell(rows, arg_max, 2));
    CHECK(cell(rows, arg_max, 2) > cell(rows, arg_max, 3));
}

TEST_CASE("cmd_fig1: unknown variant is a configuration error") {
    std::ostringstream out;
    CHECK_THROWS_AS(cmd_fig1('q', out), ConfigError);
}

TEST_CASE("fig1 panels: expected parameter sets") {
    const Fig1Panel a = fig1_panel('a');
    CHECK(a.power_columns);
    CHECK(a.curves.size() == 1);
    CHECK(a.curves[0].params.omega1 == 2.0);
    CHECK(a.curves[0].state.gamma == 2.0);

    const Fig1Panel c = fig1_panel('c');
    REQUIRE(c.curves.size() == 3);
    CHECK(c.curves[0].params.v12 == Complex{2.0, 0.0});
    CHECK(c.curves[2].params.v12 == Complex{0.5, 0.0});

    const Fig1Panel d = fig1_panel('d');
    REQUIRE(d.curves.size() == 3);
    CHECK(d.curves[0].params.omega1 == 1.0);
    CHECK(d.curves[2].params.omega1 == doctest::Approx(std::sqrt(2.0)));
    // span covers three beats of the slowest curve (omega1 = omega2 = 1)
    CHECK(d.grid.t == doctest::Approx(3.0 * kPi));
}
