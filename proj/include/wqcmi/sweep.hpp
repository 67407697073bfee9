#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wqcmi/analytic.hpp"
#include "wqcmi/info_measures.hpp"

namespace wqcmi {

enum class OutputFormat { Csv, Json, PlotData };

std::optional<OutputFormat> parse_output_format(const std::string& name);
const char* output_format_name(OutputFormat f);

/// How r2 moves while r1 sweeps (two-party scenarios only).
enum class R2Mode { Locked, Fixed, IndependentGrid };

struct SweepConfig {
    Scenario scenario = Scenario::WC;
    double r_min = 0.0;
    double r_max = AccelerationParameter::max_value();
    int steps = 64;  // subintervals; steps+1 rows, or one row when r_min == r_max
    R2Mode r2_mode = R2Mode::Locked;
    double r2_fixed = 0.0;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;  // empty -> stdout
    bool compare_analytic = false;
    double tolerance = kFormulaTolerance;

    void validate() const;
};

struct SweepRow {
    double r = 0.0;
    std::optional<double> r2;
    double s_abc = 0.0;
    double s_ac = 0.0;
    double s_bc = 0.0;
    double s_c = 0.0;
    double qcmi_numeric = 0.0;
    std::optional<double> qcmi_analytic;
    std::optional<double> abs_diff;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double max_abs_diff = 0.0;
    bool comparison_ok = true;
};

SweepResult run_sweep(const SweepConfig& config);

/// 12 significant digits, lowercase scientific below 1e-4 in magnitude;
/// bare "0" for exact zero. Keeps sweep output byte-reproducible.
std::string format_number(double x);

void render_csv(const SweepResult& result, std::ostream& os);
void render_json(const SweepConfig& config, const SweepResult& result, std::ostream& os);
void render_plotdata(const SweepResult& result, std::ostream& os);
void render(const SweepConfig& config, const SweepResult& result, std::ostream& os);

struct PropertyConfig {
    std::uint64_t seed = 0;
    int count = 1000;
};

struct PropertyResult {
    int count = 0;
    int passed = 0;
    double min_qcmi = 0.0;          // most negative QCMI seen (SSA floor)
    double max_trace_error = 0.0;   // worst |tr(reduced) - 1| over partial traces
    double max_hermiticity = 0.0;   // worst Hermiticity defect over partial traces
    std::optional<int> first_failure;
};

/// Random tripartite states: QCMI >= -1e-9 and partial traces preserve trace
/// and Hermiticity within 1e-12.
PropertyResult run_properties(const PropertyConfig& config);
void render_properties(const PropertyConfig& config, const PropertyResult& result,
                       std::ostream& os);

struct CompareConfig {
    std::optional<Scenario> scenario;  // nullopt -> all four W scenarios
    int steps = 64;
    double tolerance = kFormulaTolerance;
};

struct CompareResult {
    int eigenvalue_points = 0;
    double eigenvalue_max_diff = 0.0;  // pipeline spectra vs closed-form lists
    bool eigenvalue_ok = true;
    int printed_match = 0;
    int printed_mismatch = 0;
    int printed_undefined = 0;
};

/// Numeric-vs-analytic reconciliation: eigenvalue-level agreement between the
/// pipeline and the closed-form lists, then per-point evaluation of every
/// printed composed expression against the eigenvalue oracle.
CompareResult run_compare(const CompareConfig& config, std::ostream& os);

}  // namespace wqcmi
