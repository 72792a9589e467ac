#include "bimode/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "bimode/errors.hpp"

namespace bimode {

const char* to_string(OutputSeries series) {
    switch (series) {
        case OutputSeries::delta: return "delta";
        case OutputSeries::purity: return "purity";
        case OutputSeries::entropy: return "entropy";
        case OutputSeries::trace_distance: return "trace_distance";
        case OutputSeries::greens: return "greens";
    }
    return "?";
}

bool RunConfig::wants(OutputSeries series) const {
    return std::find(outputs.begin(), outputs.end(), series) != outputs.end();
}

void RunConfig::validate() const {
    system.validate();
    initial.validate();
    grid.validate();
    if (n_max < 1) throw ConfigError("run.n_max must be >= 1");
    if (!(truncation_budget > 0.0) || truncation_budget > 1e-4) {
        throw ConfigError("run.truncation_budget must lie in (0, 1e-4]");
    }
}

RunConfig default_run_config() {
    RunConfig cfg;
    cfg.system = SystemParams{1.0, 1.0, Complex{1.0, 0.0}};
    cfg.initial = InitialState{Complex{0.5, 0.0}, Complex{0.3, 0.0}, 1.0, 0.0};
    cfg.grid = TimeGrid{0.0, 2.0 * std::numbers::pi, 200};
    cfg.n_max = 40;
    cfg.truncation_budget = 1e-10;
    cfg.outputs = {OutputSeries::delta, OutputSeries::purity, OutputSeries::entropy,
                   OutputSeries::trace_distance, OutputSeries::greens};
    return cfg;
}

namespace {

struct ParseContext {
    std::string source;
    int line{0};

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream out;
        out << source << ":" << line << ": " << msg;
        throw ConfigError(out.str());
    }
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const ParseContext& ctx, const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &used);
    } catch (const std::exception&) {
        ctx.fail("value for '" + key + "' is not a number: '" + value + "'");
    }
    if (used != value.size()) ctx.fail("trailing characters after number in '" + key + "'");
    return parsed;
}

int parse_int(const ParseContext& ctx, const std::string& key, const std::string& value) {
    const double parsed = parse_number(ctx, key, value);
    if (parsed != std::floor(parsed)) ctx.fail("value for '" + key + "' must be an integer");
    return static_cast<int>(parsed);
}

std::vector<OutputSeries> parse_outputs(const ParseContext& ctx, const std::string& value) {
    std::vector<OutputSeries> out;
    std::stringstream items(value);
    std::string item;
    while (std::getline(items, item, ',')) {
        const std::string name = trim(item);
        if (name == "delta") out.push_back(OutputSeries::delta);
        else if (name == "purity") out.push_back(OutputSeries::purity);
        else if (name == "entropy") out.push_back(OutputSeries::entropy);
        else if (name == "trace_distance") out.push_back(OutputSeries::trace_distance);
        else if (name == "greens") out.push_back(OutputSeries::greens);
        else ctx.fail("unknown output series '" + name + "'");
    }
    if (out.empty()) ctx.fail("outputs list is empty");
    return out;
}

double wrap_phase(double theta) {
    const double tau = 2.0 * std::numbers::pi;
    double wrapped = std::fmod(theta, tau);
    if (wrapped < 0.0) wrapped += tau;
    return wrapped;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& source_name) {
    RunConfig cfg = default_run_config();
    ParseContext ctx{source_name, 0};

    std::string section;
    std::set<std::string> seen;
    std::istringstream stream(text);
    std::string raw;

    while (std::getline(stream, raw)) {
        ++ctx.line;
        std::string line = raw;
        if (const auto hash = line.find_first_of("#;"); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') ctx.fail("unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "system" && section != "initial" && section != "grid" &&
                section != "run") {
                ctx.fail("unknown section '" + section + "'");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) ctx.fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) ctx.fail("empty key");
        if (value.empty()) ctx.fail("empty value for '" + key + "'");
        if (section.empty()) ctx.fail("key '" + key + "' appears before any [section]");
        if (!seen.insert(section + "." + key).second) {
            ctx.fail("duplicate key '" + key + "' in [" + section + "]");
        }

        if (section == "system") {
            if (key == "omega1") cfg.system.omega1 = parse_number(ctx, key, value);
            else if (key == "omega2") cfg.system.omega2 = parse_number(ctx, key, value);
            else if (key == "v12_re") cfg.system.v12.real(parse_number(ctx, key, value));
            else if (key == "v12_im") cfg.system.v12.imag(parse_number(ctx, key, value));
            else ctx.fail("unknown key '" + key + "' in [system]");
        } else if (section == "initial") {
            if (key == "alpha1_re") cfg.initial.alpha1.real(parse_number(ctx, key, value));
            else if (key == "alpha1_im") cfg.initial.alpha1.imag(parse_number(ctx, key, value));
            else if (key == "alpha2_re") cfg.initial.alpha2.real(parse_number(ctx, key, value));
            else if (key == "alpha2_im") cfg.initial.alpha2.imag(parse_number(ctx, key, value));
            else if (key == "gamma") cfg.initial.gamma = parse_number(ctx, key, value);
            else if (key == "theta") cfg.initial.theta = wrap_phase(parse_number(ctx, key, value));
            else ctx.fail("unknown key '" + key + "' in [initial]");
        } else if (section == "grid") {
            if (key == "t0") cfg.grid.t0 = parse_number(ctx, key, value);
            else if (key == "t") cfg.grid.t = parse_number(ctx, key, value);
            else if (key == "n_steps") cfg.grid.n_steps = parse_int(ctx, key, value);
            else ctx.fail("unknown key '" + key + "' in [grid]");
        } else {  // run
            if (key == "n_max") cfg.n_max = parse_int(ctx, key, value);
            else if (key == "truncation_budget") cfg.truncation_budget = parse_number(ctx, key, value);
            else if (key == "outputs") cfg.outputs = parse_outputs(ctx, value);
            else ctx.fail("unknown key '" + key + "' in [run]");
        }
    }

    try {
        cfg.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ConfigError(source_name + ": " + ex.what());
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

}  // namespace bimode
