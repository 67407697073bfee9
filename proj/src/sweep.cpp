#include "wqcmi/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace wqcmi {

namespace {

constexpr double kPi4 = std::numbers::pi / 4.0;

std::vector<double> grid_points(double lo, double hi, int steps) {
    if (lo == hi) return {lo};
    std::vector<double> pts(steps + 1);
    for (int k = 0; k <= steps; ++k) pts[k] = lo + k * (hi - lo) / steps;
    return pts;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "plotdata") return OutputFormat::PlotData;
    return std::nullopt;
}

const char* output_format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::PlotData: return "plotdata";
    }
    return "?";
}

void SweepConfig::validate() const {
    if (!(r_min >= 0.0 && r_min <= r_max && r_max <= kPi4 + 1e-15))
        throw std::invalid_argument("sweep: need 0 <= r_min <= r_max <= pi/4");
    if (steps < 1) throw std::invalid_argument("sweep: steps must be >= 1");
    if (r2_mode == R2Mode::Fixed && !(r2_fixed >= 0.0 && r2_fixed <= kPi4 + 1e-15))
        throw std::invalid_argument("sweep: fixed r2 must lie in [0, pi/4]");
    if (!is_two_party(scenario) && r2_mode != R2Mode::Locked)
        throw std::invalid_argument(std::string("sweep: scenario ") + scenario_name(scenario) +
                                    " has a single accelerated party; --r2 does not apply");
}

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();
    const std::vector<double> r1s = grid_points(config.r_min, config.r_max, config.steps);
    const bool two = is_two_party(config.scenario);

    SweepResult result;
    auto emit = [&](double r1, std::optional<double> r2) {
        const auto rate2 = r2 ? std::optional<AccelerationParameter>(AccelerationParameter(*r2))
                              : std::nullopt;
        const QcmiReport rep = scenario_qcmi(config.scenario, AccelerationParameter(r1), rate2);
        SweepRow row;
        row.r = r1;
        row.r2 = r2;
        row.s_abc = rep.s_abc;
        row.s_ac = rep.s_ac;
        row.s_bc = rep.s_bc;
        row.s_c = rep.s_c;
        row.qcmi_numeric = rep.qcmi;
        if (config.compare_analytic) {
            row.qcmi_analytic = analytic_qcmi(config.scenario, r1, r2);
            row.abs_diff = std::abs(*row.qcmi_analytic - row.qcmi_numeric);
            result.max_abs_diff = std::max(result.max_abs_diff, *row.abs_diff);
            if (*row.abs_diff > config.tolerance) result.comparison_ok = false;
        }
        result.rows.push_back(std::move(row));
    };

    if (!two) {
        for (double r : r1s) emit(r, std::nullopt);
    } else if (config.r2_mode == R2Mode::IndependentGrid) {
        for (double r1 : r1s)
            for (double r2 : r1s) emit(r1, r2);
    } else {
        for (double r1 : r1s) emit(r1, config.r2_mode == R2Mode::Locked ? r1 : config.r2_fixed);
    }
    return result;
}

std::string format_number(double x) {
    if (x == 0.0) return "0";
    char buf[40];
    if (std::abs(x) < 1e-4)
        std::snprintf(buf, sizeof buf, "%.11e", x);
    else
        std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string opt_field(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string{};
}

void json_kv(std::ostream& os, const char* key, const std::string& raw, bool quote,
             bool trailing_comma = true) {
    os << "\"" << key << "\": ";
    if (quote) os << "\"" << raw << "\"";
    else os << raw;
    if (trailing_comma) os << ", ";
}

}  // namespace

void render_csv(const SweepResult& result, std::ostream& os) {
    os << "r,r2,S_ABC,S_AC,S_BC,S_C,QCMI,QCMI_analytic,abs_diff\n";
    for (const SweepRow& row : result.rows) {
        os << format_number(row.r) << ',' << opt_field(row.r2) << ','
           << format_number(row.s_abc) << ',' << format_number(row.s_ac) << ','
           << format_number(row.s_bc) << ',' << format_number(row.s_c) << ','
           << format_number(row.qcmi_numeric) << ',' << opt_field(row.qcmi_analytic) << ','
           << opt_field(row.abs_diff) << '\n';
    }
}

void render_json(const SweepConfig& config, const SweepResult& result, std::ostream& os) {
    os << "{\n  \"config\": {";
    json_kv(os, "scenario", scenario_name(config.scenario), true);
    json_kv(os, "r_min", format_number(config.r_min), false);
    json_kv(os, "r_max", format_number(config.r_max), false);
    json_kv(os, "steps", std::to_string(config.steps), false);
    if (is_two_party(config.scenario)) {
        switch (config.r2_mode) {
            case R2Mode::Locked: json_kv(os, "r2_mode", "locked", true); break;
            case R2Mode::IndependentGrid: json_kv(os, "r2_mode", "grid", true); break;
            case R2Mode::Fixed:
                json_kv(os, "r2_mode", "fixed", true);
                json_kv(os, "r2", format_number(config.r2_fixed), false);
                break;
        }
    }
    json_kv(os, "compare_analytic", config.compare_analytic ? "true" : "false", false);
    json_kv(os, "tolerance", format_number(config.tolerance), false, false);
    os << "},\n  \"rows\": [\n";
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const SweepRow& row = result.rows[i];
        os << "    {";
        json_kv(os, "r", format_number(row.r), false);
        if (row.r2) json_kv(os, "r2", format_number(*row.r2), false);
        json_kv(os, "s_abc", format_number(row.s_abc), false);
        json_kv(os, "s_ac", format_number(row.s_ac), false);
        json_kv(os, "s_bc", format_number(row.s_bc), false);
        json_kv(os, "s_c", format_number(row.s_c), false);
        const bool more = row.qcmi_analytic.has_value();
        json_kv(os, "qcmi", format_number(row.qcmi_numeric), false, more);
        if (more) {
            json_kv(os, "qcmi_analytic", format_number(*row.qcmi_analytic), false);
            json_kv(os, "abs_diff", format_number(*row.abs_diff), false, false);
        }
        os << (i + 1 < result.rows.size() ? "},\n" : "}\n");
    }
    os << "  ],\n  \"summary\": {";
    json_kv(os, "max_abs_diff", format_number(result.max_abs_diff), false);
    json_kv(os, "status", result.comparison_ok ? "ok" : "mismatch", true, false);
    os << "}\n}\n";
}

void render_plotdata(const SweepResult& result, std::ostream& os) {
    os << "# r r2 S_ABC S_AC S_BC S_C QCMI QCMI_analytic abs_diff\n";
    auto field = [](const std::optional<double>& v) {
        return v ? format_number(*v) : std::string("nan");
    };
    for (const SweepRow& row : result.rows) {
        os << format_number(row.r) << ' ' << field(row.r2) << ' ' << format_number(row.s_abc)
           << ' ' << format_number(row.s_ac) << ' ' << format_number(row.s_bc) << ' '
           << format_number(row.s_c) << ' ' << format_number(row.qcmi_numeric) << ' '
           << field(row.qcmi_analytic) << ' ' << field(row.abs_diff) << '\n';
    }
}

void render(const SweepConfig& config, const SweepResult& result, std::ostream& os) {
    switch (config.format) {
        case OutputFormat::Csv: render_csv(result, os); break;
        case OutputFormat::Json: render_json(config, result, os); break;
        case OutputFormat::PlotData: render_plotdata(result, os); break;
    }
}

PropertyResult run_properties(const PropertyConfig& config) {
    if (config.count < 1) throw std::invalid_argument("properties: count must be >= 1");

    RandomStateSource source(config.seed);
    PropertyResult res;
    res.count = config.count;
    const Partition parties{{0}, {1}, {2}};
    const std::vector<std::size_t> dims(3, 2);

    for (int i = 0; i < config.count; ++i) {
        const ComplexMatrix rho = source.next_tripartite();
        bool ok = true;

        const double tr_full = rho.trace().real();
        for (const auto& keep : {std::vector<std::size_t>{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}) {
            const ComplexMatrix red = partial_trace(rho, dims, keep);
            res.max_trace_error =
                std::max(res.max_trace_error, std::abs(red.trace().real() - tr_full));
            res.max_hermiticity = std::max(res.max_hermiticity, red.hermiticity_defect());
        }
        if (res.max_trace_error > 1e-12 || res.max_hermiticity > 1e-12) ok = false;

        const QcmiReport rep = qcmi(rho, parties);
        res.min_qcmi = std::min(res.min_qcmi, rep.qcmi);
        if (rep.qcmi < -1e-9) ok = false;

        if (ok) ++res.passed;
        else if (!res.first_failure) res.first_failure = i;
    }
    return res;
}

void render_properties(const PropertyConfig& config, const PropertyResult& result,
                       std::ostream& os) {
    os << "properties: seed=" << config.seed << " count=" << result.count << "\n"
       << "min_qcmi = " << format_number(result.min_qcmi) << "\n"
       << "max_trace_error = " << format_number(result.max_trace_error) << "\n"
       << "max_hermiticity_defect = " << format_number(result.max_hermiticity) << "\n"
       << "result: " << result.passed << "/" << result.count << " pass";
    if (result.first_failure) os << " (first failure at state " << *result.first_failure << ")";
    os << "\n";
}

namespace {

struct PrintedSummary {
    int match = 0;
    int mismatch = 0;
    int undefined = 0;
    double max_diff = 0.0;
    double min_diff = std::numeric_limits<double>::infinity();
};

// Sign-corrected variant of the composed single-party-C expression; reported
// alongside the verbatim one because it reproduces the oracle.
double sign_flipped_wc(double r) {
    const double s = std::sqrt(3.0 + std::pow(std::cos(2.0 * r), 2));
    const double c2 = std::pow(std::cos(r), 2), s2 = std::pow(std::sin(r), 2);
    return 2.0 / 3.0 - (4.0 / 3.0) * std::log2(std::cos(r) * std::sin(r) / 3.0)
           + (2.0 * s / 3.0) * std::log2((2.0 - s) / std::sin(2.0 * r))
           + ((1.0 + 2.0 * c2) / 3.0) * std::log2((1.0 + 2.0 * c2) / 3.0)
           + ((1.0 + 2.0 * s2) / 3.0) * std::log2((1.0 + 2.0 * s2) / 3.0);
}

}  // namespace

CompareResult run_compare(const CompareConfig& config, std::ostream& os) {
    if (config.steps < 2) throw std::invalid_argument("compare: steps must be >= 2");

    const std::vector<Scenario> scenarios =
        config.scenario ? std::vector<Scenario>{*config.scenario}
                        : std::vector<Scenario>{Scenario::WC, Scenario::WB, Scenario::WBC,
                                                Scenario::WAB};
    const std::vector<double> grid = grid_points(0.0, kPi4, config.steps);

    CompareResult res;
    os << "numeric-vs-analytic reconciliation (" << grid.size() << "-point grid on [0, pi/4]"
       << ", two-party scenarios on the r1 = r2 diagonal)\n\n";

    os << "[eigenvalue oracle] pipeline spectra vs closed-form lists, per-eigenvalue\n";
    for (const Scenario sc : scenarios) {
        double worst = 0.0;
        for (double r : grid) {
            const auto r2 = is_two_party(sc)
                                ? std::optional<AccelerationParameter>(AccelerationParameter(r))
                                : std::nullopt;
            const auto r2d = is_two_party(sc) ? std::optional<double>(r) : std::nullopt;
            for (const Subsystem sub :
                 {Subsystem::ABC, Subsystem::AC, Subsystem::BC, Subsystem::C}) {
                const EigenvalueList numeric =
                    scenario_spectrum(sc, sub, AccelerationParameter(r), r2);
                const EigenvalueList closed = analytic_eigenvalues(sc, sub, r, r2d);
                for (std::size_t i = 0; i < numeric.values.size(); ++i)
                    worst = std::max(worst, std::abs(numeric.values[i] - closed.values[i]));
                ++res.eigenvalue_points;
            }
        }
        res.eigenvalue_max_diff = std::max(res.eigenvalue_max_diff, worst);
        const bool ok = worst <= 1e-10;
        if (!ok) res.eigenvalue_ok = false;
        os << "  " << scenario_name(sc) << ": max |diff| = " << format_number(worst) << "  "
           << (ok ? "ok" : "FAIL") << "\n";
    }

    os << "\n[composed formulas] verbatim transcriptions vs eigenvalue oracle, interior points\n";
    for (const PrintedFormula f :
         {PrintedFormula::WCComposed, PrintedFormula::WBComposed, PrintedFormula::WBCGeneral,
          PrintedFormula::WBCEqualRates, PrintedFormula::WABGeneral,
          PrintedFormula::WABEqualRates}) {
        const Scenario sc = printed_formula_scenario(f);
        if (config.scenario && sc != *config.scenario) continue;
        PrintedSummary sum;
        for (double r : grid) {
            if (r <= 0.0 || r >= kPi4) continue;
            const FormulaComparison cmp = compare_printed(f, r, r, config.tolerance);
            switch (cmp.status) {
                case ComparisonStatus::Match: ++sum.match; break;
                case ComparisonStatus::Mismatch: ++sum.mismatch; break;
                case ComparisonStatus::UndefinedAtPoint: ++sum.undefined; break;
            }
            if (cmp.analytic) {
                sum.max_diff = std::max(sum.max_diff, cmp.abs_diff);
                sum.min_diff = std::min(sum.min_diff, cmp.abs_diff);
            }
        }
        res.printed_match += sum.match;
        res.printed_mismatch += sum.mismatch;
        res.printed_undefined += sum.undefined;
        os << "  " << printed_formula_name(f) << ": " << sum.match << " match, " << sum.mismatch
           << " mismatch, " << sum.undefined << " undefined-at-point";
        if (sum.mismatch > 0)
            os << "; |diff| in [" << format_number(sum.min_diff) << ", "
               << format_number(sum.max_diff) << "]";
        os << "\n";
    }

    if (!config.scenario || *config.scenario == Scenario::WC) {
        double worst = 0.0;
        for (double r : grid) {
            if (r <= 0.0 || r >= kPi4) continue;
            worst = std::max(worst, std::abs(sign_flipped_wc(r) - analytic_qcmi(Scenario::WC, r)));
        }
        os << "\n  note: the composed C-acceleration expression matches the oracle at every\n"
              "  interior point once the sign of its (2 sqrt(3+cos^2 2r)/3) log2 term is\n"
              "  flipped (max |diff| = "
           << format_number(worst) << ")\n";
    }

    bool show_lists = !config.scenario;
    if (config.scenario && is_two_party(*config.scenario)) show_lists = true;
    if (show_lists) {
        os << "\n[as-printed tripartite lists, two-party scenarios]\n";
        for (const Scenario sc : {Scenario::WBC, Scenario::WAB}) {
            if (config.scenario && sc != *config.scenario) continue;
            const double r = kPi4 / 2.0;
            const std::vector<double> printed = printed_lambda_abc_two_party(sc, r, r);
            double sum = 0.0;
            for (double x : printed) sum += x;
            os << "  " << scenario_name(sc) << " lambda_ABC as printed, r1=r2=pi/8: sum = "
               << format_number(sum) << " (a spectrum must sum to 1); the implemented list\n"
               << "  follows the substitution-rule derivation and sums to 1 identically\n";
        }
        if (!config.scenario || *config.scenario == Scenario::WBC) {
            // QCMI at pi/4 recomputed with the as-printed list, for the record
            const std::vector<double> printed =
                printed_lambda_abc_two_party(Scenario::WBC, kPi4, kPi4);
            double s_abc = 0.0;
            for (double x : printed)
                if (x > 0.0) s_abc -= x * std::log2(x);
            const double s_ac = entropy_bits(analytic_eigenvalues(Scenario::WBC, Subsystem::AC,
                                                                  kPi4, kPi4));
            const double s_bc = entropy_bits(analytic_eigenvalues(Scenario::WBC, Subsystem::BC,
                                                                  kPi4, kPi4));
            const double s_c = entropy_bits(analytic_eigenvalues(Scenario::WBC, Subsystem::C,
                                                                 kPi4, kPi4));
            os << "  with the as-printed W_BC list, QCMI at r1=r2=pi/4 evaluates to "
               << format_number(s_ac + s_bc - s_abc - s_c) << "; both computation paths give "
               << format_number(analytic_qcmi(Scenario::WBC, kPi4, kPi4)) << "\n";
        }
    }

    os << "\nsummary: eigenvalue oracle " << (res.eigenvalue_ok ? "ok" : "FAILED")
       << " (max |diff| = " << format_number(res.eigenvalue_max_diff) << "); composed formulas: "
       << res.printed_match << " match, " << res.printed_mismatch << " mismatch, "
       << res.printed_undefined << " undefined-at-point (documented findings)\n";
    return res;
}

}  // namespace wqcmi
