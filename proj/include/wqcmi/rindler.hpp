#pragma once

#include <map>
#include <optional>

#include "wqcmi/fock.hpp"

namespace wqcmi {

/// Dimensionless acceleration parameter r in [0, pi/4]; pi/4 is the limit of
/// infinite acceleration.
class AccelerationParameter {
public:
    AccelerationParameter() = default;
    explicit AccelerationParameter(double r);

    double value() const noexcept { return r_; }

    static constexpr double max_value() { return 0.78539816339744830961; }  // pi/4

private:
    double r_ = 0.0;
};

/// Proper acceleration a (m/s^2), Minkowski frequency omega (rad/s) and the
/// speed of light c (m/s), all strictly positive.
struct PhysicalAcceleration {
    double a;
    double omega;
    double c;
};

/// r = arctan(exp(-pi * omega * c / a)), strictly inside (0, pi/4).
AccelerationParameter acceleration_to_r(const PhysicalAcceleration& p);

/// Which parties accelerate, with their r values. One or two distinct parties.
class AccelerationAssignment {
public:
    AccelerationAssignment(Party party, AccelerationParameter r);
    AccelerationAssignment(Party p1, AccelerationParameter r1,
                           Party p2, AccelerationParameter r2);

    const std::map<Party, AccelerationParameter>& entries() const noexcept { return entries_; }
    std::optional<AccelerationParameter> rate_of(Party p) const;

private:
    std::map<Party, AccelerationParameter> entries_;
};

/// Replace the party's Minkowski mode in place by the (Rindler-I, Rindler-II)
/// pair: |0> -> cos r |0>_I |0>_II + e^{-i phi} sin r |1>_I |1>_II and
/// |1> -> |1>_I |0>_II, applied term by term. phi defaults to 0; every
/// downstream entropy is phi-independent.
PureState sma_substitute(const PureState& psi, Party party, AccelerationParameter r,
                         double phi = 0.0);

/// Full scenario pipeline: substitute each assigned party (in order A, B, C),
/// form the density matrix, and trace out every Rindler-II mode.
DensityMatrix accelerate_and_trace(const PureState& psi, const AccelerationAssignment& assignment,
                                   double phi = 0.0);

}  // namespace wqcmi
