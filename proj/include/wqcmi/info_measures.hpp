#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wqcmi/fock.hpp"
#include "wqcmi/rindler.hpp"

namespace wqcmi {

/// Three disjoint, exhaustive groups of register mode indices. C is the
/// conditioning group of I(A:B|C).
struct Partition {
    std::vector<std::size_t> group_a;
    std::vector<std::size_t> group_b;
    std::vector<std::size_t> group_c;

    std::size_t mode_count() const noexcept {
        return group_a.size() + group_b.size() + group_c.size();
    }
};

/// Group each surviving mode of a register by its party; party C conditions.
Partition partition_by_party(const ModeRegister& reg);

/// The four entropies and their signed combination at a given r (or r1, r2).
/// All entropies in bits.
struct QcmiReport {
    double r1 = 0.0;
    std::optional<double> r2;
    double s_abc = 0.0;
    double s_ac = 0.0;
    double s_bc = 0.0;
    double s_c = 0.0;
    double qcmi = 0.0;
};

/// S = -sum lambda_i log2 lambda_i with 0 log 0 := 0. Eigenvalues in
/// [-1e-10, 0) are clipped to 0; anything more negative is an error.
double entropy_bits(const EigenvalueList& ev);
double von_neumann_entropy(const ComplexMatrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);

/// I(X:Y) = S(rho_X) + S(rho_Y) - S(rho_XY) for the bipartition given by
/// side_x (complement is side_y).
double mutual_information(const ComplexMatrix& rho, std::size_t mode_count,
                          const std::vector<std::size_t>& side_x);
double mutual_information(const DensityMatrix& rho, const std::vector<std::size_t>& side_x);

/// I(A:B|C) = S(rho_AC) + S(rho_BC) - S(rho_ABC) - S(rho_C).
QcmiReport qcmi(const ComplexMatrix& rho, const Partition& partition);
QcmiReport qcmi(const DensityMatrix& rho, const Partition& partition);

enum class Scenario {
    WC,      // W state, Charlie accelerated
    WB,      // W state, Bob accelerated
    WBC,     // W state, Bob at r1 and Charlie at r2
    WAB,     // W state, Alice at r1 and Bob at r2
    Bisep1C, // (|000>+|110>)/sqrt(2), Charlie accelerated
    Bisep2C, // (|000>+|101>)/sqrt(2), Charlie accelerated
    Bisep3C, // (|000>+|011>)/sqrt(2), Charlie accelerated
};

bool is_two_party(Scenario s);
const char* scenario_name(Scenario s);
std::optional<Scenario> parse_scenario(const std::string& name);

enum class Subsystem { ABC, AC, BC, C };

const char* subsystem_name(Subsystem s);

/// Scenario state after acceleration and region-II tracing, on the surviving
/// 3-mode register. r2 is required for two-party scenarios and rejected
/// otherwise.
DensityMatrix scenario_density_matrix(Scenario scenario, AccelerationParameter r1,
                                      std::optional<AccelerationParameter> r2 = std::nullopt,
                                      double phi = 0.0);

/// End-to-end pipeline: build the scenario state, accelerate the designated
/// parties, trace region II, and evaluate the QCMI with C conditioning.
QcmiReport scenario_qcmi(Scenario scenario, AccelerationParameter r1,
                         std::optional<AccelerationParameter> r2 = std::nullopt,
                         double phi = 0.0);

/// Numeric-pipeline spectrum of one reduced subsystem of a scenario state.
EigenvalueList scenario_spectrum(Scenario scenario, Subsystem subsystem, AccelerationParameter r1,
                                 std::optional<AccelerationParameter> r2 = std::nullopt);

/// Deterministic generator of random tripartite density matrices: a pure
/// 4-qubit state with unit-normalized complex Gaussian amplitudes, traced
/// over its last qubit. Used by the property suite.
class RandomStateSource {
public:
    explicit RandomStateSource(std::uint64_t seed);
    ComplexMatrix next_tripartite();

private:
    double next_gaussian();

    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace wqcmi
