#include "wqcmi/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace wqcmi {

namespace {

constexpr double kPi4 = std::numbers::pi / 4.0;

double sq(double x) { return x * x; }

/// {cos^2 r/3, (2 +- sqrt(3+cos^2 2r))/6, sin^2 r/3} -- the recurring
/// spectrum of a one-inertial/one-accelerated pair.
std::vector<double> pair_spectrum(double r) {
    const double s = std::sqrt(3.0 + sq(std::cos(2.0 * r)));
    return {sq(std::cos(r)) / 3.0, (2.0 + s) / 6.0, (2.0 - s) / 6.0, sq(std::sin(r)) / 3.0};
}

/// Eigenvalues of the rank-2 block shared by the tripartite spectra of both
/// two-party scenarios.
std::vector<double> tripartite_cross_block(double r1, double r2) {
    const double s1 = sq(std::sin(r1)), c1 = sq(std::cos(r1));
    const double s2 = sq(std::sin(r2)), c2 = sq(std::cos(r2));
    const double trace = (s2 * (1.0 + c1) + s1 * (1.0 + c2)) / 3.0;
    const double det = (s1 * s2 / 9.0) * ((1.0 + c1) * (1.0 + c2) - 1.0);
    const double disc = std::sqrt(std::max(trace * trace - 4.0 * det, 0.0));
    return {(trace + disc) / 2.0, (trace - disc) / 2.0};
}

std::vector<double> two_party_abc(double r1, double r2) {
    const double s1 = sq(std::sin(r1)), c1 = sq(std::cos(r1));
    const double s2 = sq(std::sin(r2)), c2 = sq(std::cos(r2));
    std::vector<double> v = {s1 * s2 / 3.0, (c1 + c2 + c1 * c2) / 3.0};
    const std::vector<double> cross = tripartite_cross_block(r1, r2);
    v.insert(v.end(), cross.begin(), cross.end());
    return v;
}

std::vector<double> wbc_bc(double r1, double r2) {
    const double s1 = sq(std::sin(r1)), c1 = sq(std::cos(r1));
    const double s2 = sq(std::sin(r2)), c2 = sq(std::cos(r2));
    const double trace = (c1 * (1.0 + s2) + c2 * (1.0 + s1)) / 3.0;
    const double det = (c1 * c2 / 9.0) * ((1.0 + s1) * (1.0 + s2) - 1.0);
    const double disc = std::sqrt(std::max(trace * trace - 4.0 * det, 0.0));
    return {c1 * c2 / 3.0, (s1 + s2 + s1 * s2) / 3.0, (trace + disc) / 2.0,
            (trace - disc) / 2.0};
}

std::vector<double> single_party_abc(double r) {
    return {(2.0 + std::cos(2.0 * r)) / 3.0, (1.0 - std::cos(2.0 * r)) / 3.0};
}

std::vector<double> accelerated_single(double r) {
    return {2.0 * sq(std::cos(r)) / 3.0, (1.0 + 2.0 * sq(std::sin(r))) / 3.0};
}

EigenvalueList finish(std::vector<double> v, std::size_t dim) {
    v.resize(dim, 0.0);
    std::sort(v.begin(), v.end(), std::greater<>());
    return EigenvalueList{std::move(v)};
}

double entropy_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        if (x > 0.0) s -= x * std::log2(x);
    return s;
}

double binary_entropy(double p) {
    return entropy_of({p, 1.0 - p});
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

EigenvalueList analytic_eigenvalues(Scenario scenario, Subsystem subsystem, double r1,
                                    std::optional<double> r2) {
    if (is_two_party(scenario) != r2.has_value())
        throw std::invalid_argument("analytic_eigenvalues: r2 must be given exactly for "
                                    "two-party scenarios");
    const std::size_t dim = subsystem == Subsystem::ABC ? 8 : subsystem == Subsystem::C ? 2 : 4;
    const std::vector<double> inertial_pair = {2.0 / 3.0, 1.0 / 3.0};

    switch (scenario) {
        case Scenario::WC:
            switch (subsystem) {
                case Subsystem::ABC: return finish(single_party_abc(r1), dim);
                case Subsystem::AC:
                case Subsystem::BC: return finish(pair_spectrum(r1), dim);
                case Subsystem::C: return finish(accelerated_single(r1), dim);
            }
            break;
        case Scenario::WB:
            switch (subsystem) {
                case Subsystem::ABC: return finish(single_party_abc(r1), dim);
                case Subsystem::AC: return finish(inertial_pair, dim);
                case Subsystem::BC: return finish(pair_spectrum(r1), dim);
                case Subsystem::C: return finish(inertial_pair, dim);
            }
            break;
        case Scenario::WBC:
            switch (subsystem) {
                case Subsystem::ABC: return finish(two_party_abc(r1, *r2), dim);
                case Subsystem::AC: return finish(pair_spectrum(*r2), dim);
                case Subsystem::BC: return finish(wbc_bc(r1, *r2), dim);
                case Subsystem::C: return finish(accelerated_single(*r2), dim);
            }
            break;
        case Scenario::WAB:
            switch (subsystem) {
                case Subsystem::ABC: return finish(two_party_abc(r1, *r2), dim);
                case Subsystem::AC: return finish(pair_spectrum(r1), dim);
                case Subsystem::BC: return finish(pair_spectrum(*r2), dim);
                case Subsystem::C: return finish(inertial_pair, dim);
            }
            break;
        default:
            throw std::invalid_argument("analytic_eigenvalues: closed-form lists exist for the "
                                        "W scenarios only");
    }
    throw std::logic_error("unreachable");
}

double analytic_qcmi(Scenario scenario, double r1, std::optional<double> r2) {
    switch (scenario) {
        case Scenario::Bisep1C: return 2.0;
        case Scenario::Bisep2C:
        case Scenario::Bisep3C: return 0.0;
        default: break;
    }
    const double s_abc = entropy_bits(analytic_eigenvalues(scenario, Subsystem::ABC, r1, r2));
    const double s_ac = entropy_bits(analytic_eigenvalues(scenario, Subsystem::AC, r1, r2));
    const double s_bc = entropy_bits(analytic_eigenvalues(scenario, Subsystem::BC, r1, r2));
    const double s_c = entropy_bits(analytic_eigenvalues(scenario, Subsystem::C, r1, r2));
    return s_ac + s_bc - s_abc - s_c;
}

BiseparableEntropies analytic_biseparable_entropies(int k, double r) {
    const double s2 = sq(std::sin(r)), c2 = sq(std::cos(r));
    const double bell_half = binary_entropy(s2);                       // Bell pair kept intact
    const double split_a = entropy_of({(1.0 + c2) / 2.0, s2 / 2.0});   // pair containing the
    const double split_b = entropy_of({c2 / 2.0, (1.0 + s2) / 2.0});   // accelerated half
    switch (k) {
        case 1: return {bell_half, 1.0 + bell_half, 1.0 + bell_half, bell_half, 2.0};
        case 2: return {split_a, split_a, split_b, split_b, 0.0};
        case 3: return {split_a, split_b, split_a, split_b, 0.0};
        default: throw std::invalid_argument("analytic_biseparable_entropies: k must be 1..3");
    }
}

const char* printed_formula_name(PrintedFormula f) {
    switch (f) {
        case PrintedFormula::WCComposed: return "I^C_W composed";
        case PrintedFormula::WBComposed: return "I^B_W composed";
        case PrintedFormula::WBCGeneral: return "I^BC_W general (xi form)";
        case PrintedFormula::WBCEqualRates: return "I^BC_W at r1=r2";
        case PrintedFormula::WABGeneral: return "I^AB_W general (zeta form)";
        case PrintedFormula::WABEqualRates: return "I^AB_W at r1=r2";
    }
    return "?";
}

Scenario printed_formula_scenario(PrintedFormula f) {
    switch (f) {
        case PrintedFormula::WCComposed: return Scenario::WC;
        case PrintedFormula::WBComposed: return Scenario::WB;
        case PrintedFormula::WBCGeneral:
        case PrintedFormula::WBCEqualRates: return Scenario::WBC;
        case PrintedFormula::WABGeneral:
        case PrintedFormula::WABEqualRates: return Scenario::WAB;
    }
    throw std::logic_error("unreachable");
}

namespace {

// The six composed expressions below are transcribed as printed, misprints
// and all; they exist so the compare report can quantify where each one
// departs from the eigenvalue lists.

double printed_wc(double r) {
    const double s = std::sqrt(3.0 + sq(std::cos(2.0 * r)));
    const double c2 = sq(std::cos(r)), s2 = sq(std::sin(r));
    return 2.0 / 3.0 - (4.0 / 3.0) * std::log2(std::cos(r) * std::sin(r) / 3.0)
           - (2.0 * s / 3.0) * std::log2((2.0 - s) / std::sin(2.0 * r))
           + ((1.0 + 2.0 * c2) / 3.0) * std::log2((1.0 + 2.0 * c2) / 3.0)
           + ((1.0 + 2.0 * s2) / 3.0) * std::log2((1.0 + 2.0 * s2) / 3.0);
}

double printed_wb(double r) {
    const double s = std::sqrt(3.0 + sq(std::cos(2.0 * r)));
    const double c2 = sq(std::cos(r)), s2 = sq(std::sin(r));
    return (s / 3.0) * std::log2((2.0 - s) / std::sin(2.0 * r))
           - ((1.0 + c2) / 3.0) * std::log2(c2 / 3.0)
           + ((2.0 * s2 - c2) / 3.0) * std::log2(s2 / 3.0)
           + ((1.0 + 2.0 * c2) / 3.0) * std::log2((1.0 + 2.0 * c2) / 3.0);
}

double printed_wbc_general(double r1, double r2) {
    const double s1 = sq(std::sin(r1)), c1 = sq(std::cos(r1));
    const double s2 = sq(std::sin(r2)), c2 = sq(std::cos(r2));
    const double xi1 = std::sqrt(2.0 + std::cos(2.0 * r1 + 2.0 * r2) * std::cos(2.0 * r1 - 2.0 * r2)
                                 - std::cos(2.0 * r2) - 2.0 * std::cos(2.0 * r1) * c2);
    const double xi2 = std::cos(2.0 * r2)
                       + std::sqrt(12.0 + 2.0 * std::cos(4.0 * r1) + 2.0 * std::cos(4.0 * r2)
                                   - 16.0 * s1 * s2);
    const double xi3 = std::sqrt(sq(std::cos(2.0 * r1)) + sq(std::cos(2.0 * r2)) + 2.0
                                 + 4.0 * s1 * s2);
    const double xi4 = 5.0 + 6.0 * std::cos(r1 + r2) * std::cos(r1 - r2)
                       + std::cos(2.0 * r2) * std::cos(2.0 * r1);
    const double xi5 = s1 * (1.0 + s2) + s2;
    const double xi6 = s1 * s2;
    const double xi7 = s2 * c2;
    // the bare "sin r cos r" carries no subscript in print; read as r1 (the
    // two readings coincide on the r1 = r2 comparison grid)
    const double bare_sc = std::sin(r1) * std::cos(r1);
    const double u = 2.0 * s2 + 2.0 * s1 * c2;
    return (1.0 / 6.0) * (u - xi1) * std::log2((1.0 / 6.0) * (u - xi1))
           + (1.0 / 6.0) * (u + xi1) * std::log2((1.0 / 6.0) * (u + xi1))
           - (1.0 / 6.0) * (2.0 - 2.0 * s1 * s2 - xi3) * std::log2((1.0 / 6.0) * (2.0 - 2.0 * s1 * s2 - xi3))
           + (1.0 / 12.0) * xi4 * std::log2(xi4)
           - (1.0 / 12.0) * (3.0 + 2.0 * std::cos(2.0 * r1) * s2 + xi2)
                 * std::log2((1.0 / 12.0) * (3.0 + 2.0 * std::cos(2.0 * r1) * s2 + xi2))
           + (c2 / 3.0) * (2.0 + s1 * std::log2(c2 / 3.0) - c1 * std::log2(c1))
           + ((1.0 + 2.0 * s2) / 3.0) * std::log2((1.0 + 2.0 * s2) / 3.0)
           + (xi6 / 3.0) * std::log2(3.0 * s1 / xi5)
           - (std::sqrt(1.0 - xi7) / 3.0)
                 * std::log2((1.0 + std::sqrt(1.0 - xi7)) / (1.0 - std::sqrt(1.0 - xi7)))
           - (2.0 / 3.0) * std::log2(bare_sc / 3.0)
           - ((s1 + s2) / 3.0) * std::log2(xi5 / 3.0)
           - (c1 * s2 / 3.0) * std::log2(s2 / 3.0);
}

double printed_wbc_equal(double r) {
    const double c2 = sq(std::cos(r)), s2 = sq(std::sin(r));
    const double sq32 = std::sqrt(3.0 + sq(std::cos(2.0 * r)));
    const double sr = std::sin(r);
    return (c2 / 3.0) * (2.0 * s2 + c2 * std::log2(2.0 + c2)
                         + std::log2(std::pow(2.0 + c2, 4) / sq(2.0 + s2)))
           + (s2 / 3.0) * (c2 * std::log2(s2 / (2.0 + s2))
                           + s2 * std::log2(3.0 * sq(s2) / (2.0 * s2 + sq(s2)))
                           + std::log2(sq(sr + 2.0 * sr * sr * sr)
                                       * sq((6.0 + 3.0 * c2) / (2.0 * s2 + sq(s2)))))
           + (1.0 / 3.0) * std::log2(1.0 + 2.0 * s2)
           + (sq32 / 3.0) * std::log2((2.0 - sq32) / std::sin(2.0 * r))
           - 7.0 / 3.0 - (2.0 / 3.0) * std::log2(std::sin(r) * std::cos(r) / 3.0);
}

double printed_wab_general(double r1, double r2) {
    const double s1 = sq(std::sin(r1)), c1 = sq(std::cos(r1));
    const double s2 = sq(std::sin(r2)), c2 = sq(std::cos(r2));
    const double z1 = 5.0 + 3.0 * std::cos(2.0 * r1) + 3.0 * std::cos(2.0 * r2)
                      + std::cos(2.0 * r1) * std::cos(2.0 * r2);
    const double z2 = 3.0 - std::cos(2.0 * r1) - std::cos(2.0 * r2)
                      - std::cos(2.0 * r1) * std::cos(2.0 * r2);
    const double z3 = 8.0 - 4.0 * (std::cos(2.0 * r1) + std::cos(2.0 * r2))
                      + 2.0 * (std::cos(4.0 * r1) + std::cos(4.0 * r2)
                               - 4.0 * std::cos(2.0 * r1) * std::cos(2.0 * r2));
    const double rad = std::sqrt(z3);
    return (-s1 * c2 / 3.0) * std::log2(s1 / 3.0) - (c1 * s2 / 3.0) * std::log2(s2)
           + ((3.0 + s2) / 3.0) * std::log2(3.0) - (c1 / 3.0) * std::log2(c1 / 3.0)
           - (c2 / 3.0) * std::log2(c2 / 3.0) + 2.0 / 3.0
           - (std::sqrt(2.0 - s1 * c1 - s2 * c2) / 3.0)
                 * std::log2((1.0 + std::sqrt(1.0 - s2 * c2)) / (1.0 - std::sqrt(1.0 - s2 * c2)))
           - (2.0 / 3.0) * std::log2(std::sin(r1) * std::sin(r2) * std::cos(r1) * std::cos(r2) / 9.0)
           + ((z2 - rad) / 12.0) * std::log2((z2 - rad) / 12.0)
           + ((z2 + rad) / 12.0) * std::log2((z2 + rad) / 12.0)
           + (z1 / 12.0) * std::log2(z1 / 12.0);
}

double printed_wab_equal(double r) {
    const double c = std::cos(r), s = std::sin(r);
    const double c2 = c * c, s2 = s * s;
    const double sq32 = std::sqrt(3.0 + sq(std::cos(2.0 * r)));
    return (2.0 * sq32 / 3.0) * std::log2((2.0 - sq32) / std::sin(2.0 * r))
           - ((3.0 - s2 * c2) / 3.0) * std::log2(c * s)
           + ((s2 * (2.0 + c2)) / 3.0) * std::log2(s2 * (2.0 + c2) / 3.0)
           + ((2.0 + c2) / 3.0) * std::log2(3.0) + 2.0 / 3.0
           - ((2.0 * c2 + c2 * c2) / 3.0) * std::log2((2.0 * c2 + c2 * c2) / 3.0)
           - ((4.0 * c2) / 3.0) * (std::log2(c) + s2 * std::log2(s));
}

}  // namespace

std::optional<double> printed_qcmi(PrintedFormula f, double r1, double r2) {
    double v = 0.0;
    switch (f) {
        case PrintedFormula::WCComposed: v = printed_wc(r1); break;
        case PrintedFormula::WBComposed: v = printed_wb(r1); break;
        case PrintedFormula::WBCGeneral: v = printed_wbc_general(r1, r2); break;
        case PrintedFormula::WBCEqualRates: v = printed_wbc_equal(r1); break;
        case PrintedFormula::WABGeneral: v = printed_wab_general(r1, r2); break;
        case PrintedFormula::WABEqualRates: v = printed_wab_equal(r1); break;
    }
    if (!finite(v)) return std::nullopt;
    return v;
}

std::vector<double> printed_lambda_abc_two_party(Scenario scenario, double r1, double r2) {
    const double s1 = sq(std::sin(r1)), c2p = sq(std::cos(r2));
    const double u = std::cos(2.0 * r1), v = std::cos(2.0 * r2);
    if (scenario == Scenario::WBC) {
        const double base = (6.0 - 2.0 * (u - v) - std::cos(2.0 * (r1 - r2))
                             - std::cos(2.0 * (r1 + r2))) / 24.0;
        const double rad = std::sqrt(32.0 + 8.0 * std::cos(4.0 * r1) - 32.0 * u * c2p
                                     - 16.0 * v + std::cos(4.0 * r2)) / 24.0;
        return {s1 * sq(std::sin(r2)) / 3.0, (5.0 + 3.0 * v + u * (3.0 + v)) / 12.0,
                base + rad, base - rad};
    }
    if (scenario == Scenario::WAB) {
        const double base = (6.0 - 2.0 * (u - v) - std::cos(2.0 * (r1 - r2))
                             - std::cos(2.0 * (r1 + r2))) / 24.0;
        const double rad = std::sqrt(32.0 + 8.0 * std::cos(4.0 * r1) - 16.0 * u * c2p
                                     - 16.0 * v + 8.0 * std::cos(4.0 * r2)) / 24.0;
        return {s1 * sq(std::sin(r2)) / 3.0,
                (10.0 + 6.0 * (u + v) + std::cos(2.0 * (r1 - r2)) + std::cos(2.0 * (r1 + r2)))
                    / 24.0,
                base + rad, base - rad};
    }
    throw std::invalid_argument("printed_lambda_abc_two_party: two-party scenarios only");
}

const char* comparison_status_name(ComparisonStatus s) {
    switch (s) {
        case ComparisonStatus::Match: return "match";
        case ComparisonStatus::Mismatch: return "mismatch";
        case ComparisonStatus::UndefinedAtPoint: return "undefined-at-point";
    }
    return "?";
}

namespace {

/// One-sided limit with step 1e-6: Richardson-extrapolate from f(h), f(2h)
/// and reject if the two samples already disagree by more than the
/// extrapolation can credibly repair.
std::optional<double> one_sided_limit(const std::function<std::optional<double>(double)>& f,
                                      double at, double direction) {
    constexpr double kStep = 1e-6;
    const auto fh = f(at + direction * kStep);
    const auto f2h = f(at + direction * 2.0 * kStep);
    if (!fh || !f2h) return std::nullopt;
    if (std::abs(*fh - *f2h) > 1e-3) return std::nullopt;  // not converging
    return 2.0 * *fh - *f2h;
}

}  // namespace

FormulaComparison compare_printed(PrintedFormula f, double r1, double r2, double tolerance) {
    const Scenario scenario = printed_formula_scenario(f);
    const bool two = is_two_party(scenario);

    FormulaComparison cmp;
    cmp.r1 = r1;
    if (two) cmp.r2 = r2;
    cmp.numeric = analytic_qcmi(scenario, r1, two ? std::optional<double>(r2) : std::nullopt);

    constexpr double kEdge = 1e-12;
    std::optional<double> value;
    if (r1 < kEdge || r1 > kPi4 - kEdge) {
        const double direction = (r1 < kEdge) ? 1.0 : -1.0;
        value = one_sided_limit(
            [&](double r) { return printed_qcmi(f, r, two ? r : r2); }, r1, direction);
    } else {
        value = printed_qcmi(f, r1, r2);
    }

    if (!value) {
        cmp.status = ComparisonStatus::UndefinedAtPoint;
        return cmp;
    }
    cmp.analytic = value;
    cmp.abs_diff = std::abs(*value - cmp.numeric);
    cmp.status = cmp.abs_diff <= tolerance ? ComparisonStatus::Match : ComparisonStatus::Mismatch;
    return cmp;
}

}  // namespace wqcmi
