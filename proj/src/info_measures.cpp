#include "wqcmi/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wqcmi {

namespace {

constexpr double kEigClip = 1e-10;
constexpr double kSsaSlack = 1e-9;

std::vector<std::size_t> sorted_union(const std::vector<std::size_t>& x,
                                      const std::vector<std::size_t>& y) {
    std::vector<std::size_t> out(x);
    out.insert(out.end(), y.begin(), y.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Partition partition_by_party(const ModeRegister& reg) {
    Partition p;
    p.group_a = reg.modes_of(Party::A);
    p.group_b = reg.modes_of(Party::B);
    p.group_c = reg.modes_of(Party::C);
    if (p.mode_count() != reg.size())
        throw std::invalid_argument("partition_by_party: register has unassigned modes");
    return p;
}

double entropy_bits(const EigenvalueList& ev) {
    double s = 0.0;
    for (double lambda : ev.values) {
        if (lambda < -kEigClip)
            throw std::invalid_argument("entropy: negative eigenvalue " + std::to_string(lambda));
        if (lambda <= 0.0) continue;
        s -= lambda * std::log2(lambda);
    }
    return s;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    return entropy_bits(hermitian_eigenvalues(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return von_neumann_entropy(rho.matrix);
}

double mutual_information(const ComplexMatrix& rho, std::size_t mode_count,
                          const std::vector<std::size_t>& side_x) {
    if (side_x.empty() || side_x.size() >= mode_count)
        throw std::invalid_argument("mutual_information: bipartition must be proper");
    std::vector<std::size_t> side_y;
    for (std::size_t m = 0; m < mode_count; ++m)
        if (std::find(side_x.begin(), side_x.end(), m) == side_x.end()) side_y.push_back(m);

    const std::vector<std::size_t> dims(mode_count, 2);
    const double s_x = von_neumann_entropy(partial_trace(rho, dims, side_x));
    const double s_y = von_neumann_entropy(partial_trace(rho, dims, side_y));
    return s_x + s_y - von_neumann_entropy(rho);
}

double mutual_information(const DensityMatrix& rho, const std::vector<std::size_t>& side_x) {
    return mutual_information(rho.matrix, rho.reg.size(), side_x);
}

QcmiReport qcmi(const ComplexMatrix& rho, const Partition& partition) {
    const std::size_t n = partition.mode_count();
    if ((std::size_t{1} << n) != rho.dim())
        throw DimensionError(std::size_t{1} << n, rho.dim(), "qcmi");
    if (partition.group_c.empty())
        throw std::invalid_argument("qcmi: conditioning group C is empty");

    const std::vector<std::size_t> dims(n, 2);
    QcmiReport rep;
    rep.s_abc = von_neumann_entropy(rho);
    rep.s_ac = von_neumann_entropy(
        partial_trace(rho, dims, sorted_union(partition.group_a, partition.group_c)));
    rep.s_bc = von_neumann_entropy(
        partial_trace(rho, dims, sorted_union(partition.group_b, partition.group_c)));
    rep.s_c = von_neumann_entropy(partial_trace(rho, dims, partition.group_c));
    rep.qcmi = rep.s_ac + rep.s_bc - rep.s_abc - rep.s_c;
    if (rep.qcmi < -kSsaSlack)
        throw std::runtime_error("qcmi: strong subadditivity violated, I = " +
                                 std::to_string(rep.qcmi));
    return rep;
}

QcmiReport qcmi(const DensityMatrix& rho, const Partition& partition) {
    return qcmi(rho.matrix, partition);
}

bool is_two_party(Scenario s) { return s == Scenario::WBC || s == Scenario::WAB; }

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::WC: return "W_C";
        case Scenario::WB: return "W_B";
        case Scenario::WBC: return "W_BC";
        case Scenario::WAB: return "W_AB";
        case Scenario::Bisep1C: return "BISEP1_C";
        case Scenario::Bisep2C: return "BISEP2_C";
        case Scenario::Bisep3C: return "BISEP3_C";
    }
    return "?";
}

std::optional<Scenario> parse_scenario(const std::string& name) {
    for (const Scenario s : {Scenario::WC, Scenario::WB, Scenario::WBC, Scenario::WAB,
                             Scenario::Bisep1C, Scenario::Bisep2C, Scenario::Bisep3C})
        if (name == scenario_name(s)) return s;
    return std::nullopt;
}

const char* subsystem_name(Subsystem s) {
    switch (s) {
        case Subsystem::ABC: return "ABC";
        case Subsystem::AC: return "AC";
        case Subsystem::BC: return "BC";
        case Subsystem::C: return "C";
    }
    return "?";
}

DensityMatrix scenario_density_matrix(Scenario scenario, AccelerationParameter r1,
                                      std::optional<AccelerationParameter> r2, double phi) {
    if (is_two_party(scenario) != r2.has_value())
        throw std::invalid_argument(std::string("scenario ") + scenario_name(scenario) +
                                    (r2 ? " takes a single rate" : " requires r2"));

    PureState psi = [&] {
        switch (scenario) {
            case Scenario::Bisep1C: return biseparable_state(1);
            case Scenario::Bisep2C: return biseparable_state(2);
            case Scenario::Bisep3C: return biseparable_state(3);
            default: return w_state();
        }
    }();

    const AccelerationAssignment assignment = [&]() -> AccelerationAssignment {
        switch (scenario) {
            case Scenario::WC:
            case Scenario::Bisep1C:
            case Scenario::Bisep2C:
            case Scenario::Bisep3C: return {Party::C, r1};
            case Scenario::WB: return {Party::B, r1};
            case Scenario::WBC: return {Party::B, r1, Party::C, *r2};
            case Scenario::WAB: return {Party::A, r1, Party::B, *r2};
        }
        throw std::logic_error("unreachable");
    }();

    return accelerate_and_trace(psi, assignment, phi);
}

QcmiReport scenario_qcmi(Scenario scenario, AccelerationParameter r1,
                         std::optional<AccelerationParameter> r2, double phi) {
    const DensityMatrix rho = scenario_density_matrix(scenario, r1, r2, phi);
    QcmiReport rep = qcmi(rho, partition_by_party(rho.reg));
    rep.r1 = r1.value();
    if (r2) rep.r2 = r2->value();
    return rep;
}

EigenvalueList scenario_spectrum(Scenario scenario, Subsystem subsystem, AccelerationParameter r1,
                                 std::optional<AccelerationParameter> r2) {
    const DensityMatrix rho = scenario_density_matrix(scenario, r1, r2);
    if (subsystem == Subsystem::ABC) return hermitian_eigenvalues(rho.matrix);

    const Partition p = partition_by_party(rho.reg);
    std::vector<std::size_t> keep;
    switch (subsystem) {
        case Subsystem::AC: keep = sorted_union(p.group_a, p.group_c); break;
        case Subsystem::BC: keep = sorted_union(p.group_b, p.group_c); break;
        case Subsystem::C: keep = p.group_c; break;
        case Subsystem::ABC: break;
    }
    const std::vector<std::size_t> dims(rho.reg.size(), 2);
    return hermitian_eigenvalues(partial_trace(rho.matrix, dims, keep));
}

RandomStateSource::RandomStateSource(std::uint64_t seed) : state_(seed) {}

// splitmix64 stream feeding a Box-Muller transform; self-contained so the
// property suite is reproducible independent of the standard library's
// distribution implementations.
double RandomStateSource::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    auto next_u64 = [this] {
        state_ += 0x9E3779B97f4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    };
    auto uniform01 = [&] { return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53; };
    const double u = uniform01();
    const double v = uniform01();
    const double mag = std::sqrt(-2.0 * std::log(u));
    spare_ = mag * std::sin(2.0 * std::numbers::pi * v);
    has_spare_ = true;
    return mag * std::cos(2.0 * std::numbers::pi * v);
}

ComplexMatrix RandomStateSource::next_tripartite() {
    std::vector<Complex> amps(16);
    double norm2 = 0.0;
    for (Complex& a : amps) {
        a = Complex(next_gaussian(), next_gaussian());
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : amps) a *= inv;

    const ComplexMatrix rho4 = ComplexMatrix::outer(amps);
    const std::vector<std::size_t> dims(4, 2);
    const std::vector<std::size_t> keep = {0, 1, 2};
    return partial_trace(rho4, dims, keep);
}

}  // namespace wqcmi
