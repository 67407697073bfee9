// wqcmi -- QCMI of tripartite W and biseparable states under uniform
// acceleration. Subcommands: sweep, properties, compare.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wqcmi/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComparison = 2;
constexpr int kExitInternal = 3;

int write_out(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return kExitOk;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitUsage;
    }
    os << body;
    if (!os.flush()) {
        std::cerr << "error: write to '" << path << "' failed\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QCMI of tripartite W states in non-inertial frames"};
    app.require_subcommand(1);

    std::string scenario_str = "W_C";
    std::string r2_str = "locked";
    std::string format_str = "csv";
    std::string out_path;
    double r_min = 0.0;
    double r_max = wqcmi::AccelerationParameter::max_value();
    int steps = 64;
    bool compare_analytic = false;
    double tolerance = wqcmi::kFormulaTolerance;
    std::uint64_t seed = 0;
    int count = 1000;

    CLI::App* sweep = app.add_subcommand("sweep", "sweep QCMI and entropies over r");
    sweep->add_option("--scenario", scenario_str,
                      "W_C | W_B | W_BC | W_AB | BISEP1_C | BISEP2_C | BISEP3_C");
    sweep->add_option("--r-min", r_min, "grid start (radians)");
    sweep->add_option("--r-max", r_max, "grid end (radians, <= pi/4)");
    sweep->add_option("--steps", steps, "number of subintervals (steps+1 rows)");
    sweep->add_option("--r2", r2_str, "two-party scenarios: 'locked' (r2=r1) or a fixed value");
    sweep->add_option("--format", format_str, "csv | json | plotdata");
    sweep->add_option("--out", out_path, "output path (default stdout)");
    sweep->add_flag("--compare-analytic", compare_analytic,
                    "add closed-form QCMI and abs_diff columns");
    sweep->add_option("--tolerance", tolerance, "comparison tolerance in bits");

    CLI::App* properties = app.add_subcommand("properties", "randomized invariant checks");
    properties->add_option("--seed", seed, "random seed");
    properties->add_option("--count", count, "number of random states");
    properties->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* compare = app.add_subcommand("compare", "numeric-vs-analytic reconciliation report");
    std::string compare_scenario;
    compare->add_option("--scenario", compare_scenario, "restrict to one W scenario");
    compare->add_option("--steps", steps, "grid subintervals");
    compare->add_option("--tolerance", tolerance, "comparison tolerance in bits");
    compare->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sweep->parsed()) {
            wqcmi::SweepConfig config;
            const auto scenario = wqcmi::parse_scenario(scenario_str);
            if (!scenario) {
                std::cerr << "error: unknown scenario '" << scenario_str << "'\n";
                return kExitUsage;
            }
            config.scenario = *scenario;
            config.r_min = r_min;
            config.r_max = r_max;
            config.steps = steps;
            config.compare_analytic = compare_analytic;
            config.tolerance = tolerance;
            config.out_path = out_path;
            if (r2_str == "locked") {
                config.r2_mode = wqcmi::R2Mode::Locked;
            } else if (r2_str == "grid") {
                config.r2_mode = wqcmi::R2Mode::IndependentGrid;
            } else {
                try {
                    config.r2_fixed = std::stod(r2_str);
                } catch (const std::exception&) {
                    std::cerr << "error: --r2 expects 'locked', 'grid' or a number\n";
                    return kExitUsage;
                }
                config.r2_mode = wqcmi::R2Mode::Fixed;
            }
            const auto format = wqcmi::parse_output_format(format_str);
            if (!format) {
                std::cerr << "error: unknown format '" << format_str << "'\n";
                return kExitUsage;
            }
            config.format = *format;

            wqcmi::SweepResult result;
            try {
                result = wqcmi::run_sweep(config);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            std::ostringstream body;
            wqcmi::render(config, result, body);
            const int rc = write_out(out_path, body.str());
            if (rc != kExitOk) return rc;
            return (config.compare_analytic && !result.comparison_ok) ? kExitComparison : kExitOk;
        }

        if (properties->parsed()) {
            wqcmi::PropertyConfig config{seed, count};
            wqcmi::PropertyResult result;
            try {
                result = wqcmi::run_properties(config);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            std::ostringstream body;
            wqcmi::render_properties(config, result, body);
            const int rc = write_out(out_path, body.str());
            if (rc != kExitOk) return rc;
            return result.passed == result.count ? kExitOk : kExitInternal;
        }

        if (compare->parsed()) {
            wqcmi::CompareConfig config;
            if (!compare_scenario.empty()) {
                const auto scenario = wqcmi::parse_scenario(compare_scenario);
                if (!scenario || *scenario == wqcmi::Scenario::Bisep1C ||
                    *scenario == wqcmi::Scenario::Bisep2C ||
                    *scenario == wqcmi::Scenario::Bisep3C) {
                    std::cerr << "error: compare covers the W scenarios\n";
                    return kExitUsage;
                }
                config.scenario = scenario;
            }
            config.steps = steps;
            config.tolerance = tolerance;
            std::ostringstream body;
            const wqcmi::CompareResult result = wqcmi::run_compare(config, body);
            const int rc = write_out(out_path, body.str());
            if (rc != kExitOk) return rc;
            return result.eigenvalue_ok ? kExitOk : kExitComparison;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
