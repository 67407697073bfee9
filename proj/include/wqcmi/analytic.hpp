#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wqcmi/info_measures.hpp"

namespace wqcmi {

/// Closed-form eigenvalue list for a scenario/subsystem pair, zero-padded to
/// the subsystem dimension (8 for ABC, 4 for AC/BC, 2 for C) and sorted
/// descending. W scenarios only; r2 is required exactly for the two-party
/// scenarios. These lists are the authoritative analytic oracle: they sum to
/// 1 identically and reproduce the numeric pipeline spectra.
EigenvalueList analytic_eigenvalues(Scenario scenario, Subsystem subsystem, double r1,
                                    std::optional<double> r2 = std::nullopt);

/// QCMI evaluated from the closed-form eigenvalue lists. Biseparable
/// scenarios return their exact constants (2 for phi_1, 0 for phi_2/phi_3).
double analytic_qcmi(Scenario scenario, double r1, std::optional<double> r2 = std::nullopt);

/// The four entropies of the biseparable states under C acceleration,
/// together with the (constant) QCMI they combine to.
struct BiseparableEntropies {
    double s_abc;
    double s_ac;
    double s_bc;
    double s_c;
    double qcmi;
};

BiseparableEntropies analytic_biseparable_entropies(int k, double r);

/// The long composed QCMI expressions transcribed from print, evaluated
/// verbatim (misprints included). They are reconciliation material, not an
/// oracle; several diverge from the eigenvalue lists.
enum class PrintedFormula {
    WCComposed,        // single-party C acceleration, composed form
    WBComposed,        // single-party B acceleration, composed form
    WBCGeneral,        // two-party B,C general (r1, r2) xi-form
    WBCEqualRates,     // two-party B,C specialized to r1 = r2
    WABGeneral,        // two-party A,B general (r1, r2) zeta-form
    WABEqualRates,     // two-party A,B specialized to r1 = r2
};

const char* printed_formula_name(PrintedFormula f);
Scenario printed_formula_scenario(PrintedFormula f);

/// Verbatim evaluation; nullopt when an intermediate is non-finite
/// (log of a nonpositive argument, square root of a negative).
std::optional<double> printed_qcmi(PrintedFormula f, double r1, double r2);

/// As-printed tripartite eigenvalue lists of the two-party scenarios, kept
/// for the reconciliation report; their sum deviates from 1 except where the
/// misprinted terms vanish.
std::vector<double> printed_lambda_abc_two_party(Scenario scenario, double r1, double r2);

enum class ComparisonStatus { Match, Mismatch, UndefinedAtPoint };

const char* comparison_status_name(ComparisonStatus s);

/// One point of a printed-formula (or oracle) comparison.
struct FormulaComparison {
    double r1 = 0.0;
    std::optional<double> r2;
    double numeric = 0.0;             // eigenvalue-oracle value
    std::optional<double> analytic;   // formula value when finite
    double abs_diff = 0.0;
    ComparisonStatus status = ComparisonStatus::UndefinedAtPoint;
};

/// Comparison tolerance for composed-formula reconciliation, in bits.
constexpr double kFormulaTolerance = 1e-6;

/// Evaluate a printed formula against the eigenvalue oracle at one point.
/// Endpoints (r = 0 or pi/4) are handled by a one-sided numeric limit with
/// step 1e-6 and a two-point Richardson check.
FormulaComparison compare_printed(PrintedFormula f, double r1, double r2,
                                  double tolerance = kFormulaTolerance);

}  // namespace wqcmi
