#include "wqcmi/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wqcmi {

std::string to_string(Party p) {
    switch (p) {
        case Party::A: return "A";
        case Party::B: return "B";
        case Party::C: return "C";
    }
    return "?";
}

ModeRegister::ModeRegister(std::vector<ModeLabel> modes) : modes_(std::move(modes)) {
    validate();
}

ModeRegister ModeRegister::minkowski_abc() {
    return ModeRegister({{Party::A, Frame::Minkowski, Species::Particle},
                         {Party::B, Frame::Minkowski, Species::Particle},
                         {Party::C, Frame::Minkowski, Species::Particle}});
}

void ModeRegister::validate() const {
    for (const ModeLabel& m : modes_) {
        const bool species_ok =
            (m.frame == Frame::RindlerII) ? m.species == Species::Antiparticle
                                          : m.species == Species::Particle;
        if (!species_ok)
            throw std::invalid_argument("ModeRegister: species inconsistent with frame");
    }
    for (std::size_t i = 0; i < modes_.size(); ++i)
        for (std::size_t j = i + 1; j < modes_.size(); ++j)
            if (modes_[i].party == modes_[j].party && modes_[i].frame == modes_[j].frame)
                throw std::invalid_argument("ModeRegister: duplicate (party, frame) pair");
    for (const Party p : {Party::A, Party::B, Party::C}) {
        const bool mink = find(p, Frame::Minkowski).has_value();
        const auto rI = find(p, Frame::RindlerI);
        const auto rII = find(p, Frame::RindlerII);
        if (mink && (rI || rII))
            throw std::invalid_argument("ModeRegister: party " + to_string(p) +
                                        " present in both Minkowski and Rindler frames");
        if (rI.has_value() != rII.has_value())
            throw std::invalid_argument("ModeRegister: party " + to_string(p) +
                                        " has an unpaired Rindler mode");
        if (rI && rII && *rII != *rI + 1)
            throw std::invalid_argument("ModeRegister: party " + to_string(p) +
                                        " Rindler modes are not adjacent");
    }
}

std::optional<std::size_t> ModeRegister::find(Party party, Frame frame) const {
    for (std::size_t i = 0; i < modes_.size(); ++i)
        if (modes_[i].party == party && modes_[i].frame == frame) return i;
    return std::nullopt;
}

std::vector<std::size_t> ModeRegister::modes_of(Party party) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < modes_.size(); ++i)
        if (modes_[i].party == party) out.push_back(i);
    return out;
}

std::vector<std::size_t> ModeRegister::modes_in(Frame frame) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < modes_.size(); ++i)
        if (modes_[i].frame == frame) out.push_back(i);
    return out;
}

ModeRegister ModeRegister::with_rindler_pair(std::size_t mode_index) const {
    const Party p = modes_.at(mode_index).party;
    std::vector<ModeLabel> out(modes_.begin(), modes_.begin() + mode_index);
    out.push_back({p, Frame::RindlerI, Species::Particle});
    out.push_back({p, Frame::RindlerII, Species::Antiparticle});
    out.insert(out.end(), modes_.begin() + mode_index + 1, modes_.end());
    return ModeRegister(std::move(out));
}

ModeRegister ModeRegister::subset(const std::vector<std::size_t>& kept) const {
    std::vector<ModeLabel> out;
    out.reserve(kept.size());
    for (std::size_t i : kept) out.push_back(modes_.at(i));
    return ModeRegister(std::move(out));
}

PureState::PureState(ModeRegister r, std::vector<Complex> a)
    : reg(std::move(r)), amplitudes(std::move(a)) {
    if (amplitudes.size() != reg.dim())
        throw DimensionError(reg.dim(), amplitudes.size(), "PureState");
    if (std::abs(norm() - 1.0) > 1e-12)
        throw std::invalid_argument("PureState: amplitudes are not normalized");
}

double PureState::norm() const {
    double s = 0.0;
    for (const Complex& z : amplitudes) s += std::norm(z);
    return std::sqrt(s);
}

DensityMatrix::DensityMatrix(ModeRegister r, ComplexMatrix m)
    : reg(std::move(r)), matrix(std::move(m)) {
    if (matrix.dim() != reg.dim())
        throw DimensionError(reg.dim(), matrix.dim(), "DensityMatrix");
    const double defect = matrix.hermiticity_defect();
    if (defect > 1e-10) throw HermiticityError(defect);
    if (std::abs(matrix.trace() - Complex{1.0}) > 1e-10)
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    const EigenvalueList ev = hermitian_eigenvalues(matrix);
    if (ev.values.back() < -1e-10)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(ev.values.back()));
}

PureState w_state() {
    std::vector<Complex> amps(8, 0.0);
    const double a = 1.0 / std::sqrt(3.0);
    amps[0b001] = amps[0b010] = amps[0b100] = a;
    return PureState(ModeRegister::minkowski_abc(), std::move(amps));
}

PureState biseparable_state(int k) {
    std::vector<Complex> amps(8, 0.0);
    const double a = 1.0 / std::sqrt(2.0);
    amps[0b000] = a;
    switch (k) {
        case 1: amps[0b110] = a; break;
        case 2: amps[0b101] = a; break;
        case 3: amps[0b011] = a; break;
        default: throw std::invalid_argument("biseparable_state: k must be 1, 2 or 3");
    }
    return PureState(ModeRegister::minkowski_abc(), std::move(amps));
}

PureState product_state(const std::array<std::array<Complex, 2>, 3>& factors) {
    for (const auto& f : factors) {
        const double n = std::sqrt(std::norm(f[0]) + std::norm(f[1]));
        if (std::abs(n - 1.0) > 1e-12)
            throw std::invalid_argument("product_state: factor is not normalized");
    }
    std::vector<Complex> amps(8);
    for (std::size_t i = 0; i < 8; ++i)
        amps[i] = factors[0][(i >> 2) & 1] * factors[1][(i >> 1) & 1] * factors[2][i & 1];
    return PureState(ModeRegister::minkowski_abc(), std::move(amps));
}

DensityMatrix to_density_matrix(const PureState& psi) {
    return DensityMatrix(psi.reg, ComplexMatrix::outer(psi.amplitudes));
}

}  // namespace wqcmi
