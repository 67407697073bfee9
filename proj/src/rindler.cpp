#include "wqcmi/rindler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wqcmi {

AccelerationParameter::AccelerationParameter(double r) : r_(r) {
    if (!(r >= 0.0 && r <= max_value()))
        throw std::invalid_argument("AccelerationParameter: r must lie in [0, pi/4], got " +
                                    std::to_string(r));
}

AccelerationParameter acceleration_to_r(const PhysicalAcceleration& p) {
    if (!(p.a > 0.0) || !(p.omega > 0.0) || !(p.c > 0.0))
        throw std::invalid_argument("acceleration_to_r: a, omega and c must be positive");
    const double big_omega = p.omega * p.c / p.a;  // Rindler frequency
    return AccelerationParameter(std::atan(std::exp(-std::numbers::pi * big_omega)));
}

AccelerationAssignment::AccelerationAssignment(Party party, AccelerationParameter r) {
    entries_[party] = r;
}

AccelerationAssignment::AccelerationAssignment(Party p1, AccelerationParameter r1,
                                               Party p2, AccelerationParameter r2) {
    if (p1 == p2)
        throw std::invalid_argument("AccelerationAssignment: parties must be distinct");
    entries_[p1] = r1;
    entries_[p2] = r2;
}

std::optional<AccelerationParameter> AccelerationAssignment::rate_of(Party p) const {
    const auto it = entries_.find(p);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

PureState sma_substitute(const PureState& psi, Party party, AccelerationParameter r,
                         double phi) {
    const auto pos = psi.reg.find(party, Frame::Minkowski);
    if (!pos)
        throw std::invalid_argument("sma_substitute: party " + to_string(party) +
                                    " is not held as a Minkowski mode");

    const std::size_t n = psi.reg.size();
    const std::size_t m = *pos;
    const double c = std::cos(r.value());
    const Complex s = std::exp(Complex(0.0, -phi)) * std::sin(r.value());

    // Index layout: [high bits][mode m][low bits]; the new pair occupies two
    // bits in place of mode m.
    const std::size_t low_bits = n - 1 - m;
    const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;

    std::vector<Complex> out(std::size_t{1} << (n + 1), 0.0);
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        const Complex a = psi.amplitudes[idx];
        if (a == Complex{}) continue;
        const std::size_t low = idx & low_mask;
        const std::size_t bit = (idx >> low_bits) & 1u;
        const std::size_t high = idx >> (low_bits + 1);
        const std::size_t base = (high << (low_bits + 2)) | low;
        if (bit == 0) {
            out[base | (std::size_t{0b00} << low_bits)] += a * c;
            out[base | (std::size_t{0b11} << low_bits)] += a * s;
        } else {
            out[base | (std::size_t{0b10} << low_bits)] += a;
        }
    }
    return PureState(psi.reg.with_rindler_pair(m), std::move(out));
}

DensityMatrix accelerate_and_trace(const PureState& psi, const AccelerationAssignment& assignment,
                                   double phi) {
    if (psi.reg.modes_in(Frame::Minkowski).size() != 3 || psi.reg.size() != 3)
        throw std::invalid_argument(
            "accelerate_and_trace: input must be an all-Minkowski 3-party state");

    PureState state = psi;
    for (const Party p : {Party::A, Party::B, Party::C})
        if (const auto r = assignment.rate_of(p)) state = sma_substitute(state, p, *r, phi);

    const ComplexMatrix rho = ComplexMatrix::outer(state.amplitudes);
    const std::vector<std::size_t> dims(state.reg.size(), 2);

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < state.reg.size(); ++i)
        if (state.reg.label(i).frame != Frame::RindlerII) keep.push_back(i);

    return DensityMatrix(state.reg.subset(keep), partial_trace(rho, dims, keep));
}

}  // namespace wqcmi
