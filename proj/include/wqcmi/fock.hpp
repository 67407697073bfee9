#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wqcmi/complex_matrix.hpp"

namespace wqcmi {

enum class Party { A, B, C };
enum class Frame { Minkowski, RindlerI, RindlerII };
enum class Species { Particle, Antiparticle };

std::string to_string(Party p);

/// One two-level mode: who holds it, in which frame, particle or antiparticle.
/// Minkowski and Rindler-I modes are particles; Rindler-II modes produced by
/// the single-mode-approximation substitution are antiparticles.
struct ModeLabel {
    Party party;
    Frame frame;
    Species species;

    bool operator==(const ModeLabel&) const = default;
};

/// Ordered list of labeled modes. Mode 0 is the most significant bit of a
/// basis index, matching left-to-right ket order. A party appears either as
/// one Minkowski mode or as the adjacent (Rindler-I, Rindler-II) pair.
class ModeRegister {
public:
    ModeRegister() = default;
    explicit ModeRegister(std::vector<ModeLabel> modes);

    /// The inertial three-party register [A, B, C].
    static ModeRegister minkowski_abc();

    std::size_t size() const noexcept { return modes_.size(); }
    std::size_t dim() const noexcept { return std::size_t{1} << modes_.size(); }
    const ModeLabel& label(std::size_t i) const { return modes_[i]; }
    const std::vector<ModeLabel>& modes() const noexcept { return modes_; }

    std::optional<std::size_t> find(Party party, Frame frame) const;
    std::vector<std::size_t> modes_of(Party party) const;
    std::vector<std::size_t> modes_in(Frame frame) const;

    /// Register with the given mode replaced by the party's Rindler pair.
    ModeRegister with_rindler_pair(std::size_t mode_index) const;
    /// Register restricted to the given (ascending) mode indices.
    ModeRegister subset(const std::vector<std::size_t>& kept) const;

    bool operator==(const ModeRegister&) const = default;

private:
    void validate() const;

    std::vector<ModeLabel> modes_;
};

/// Normalized amplitude vector over a register's computational basis.
struct PureState {
    ModeRegister reg;
    std::vector<Complex> amplitudes;

    PureState(ModeRegister reg, std::vector<Complex> amplitudes);

    std::size_t dim() const noexcept { return amplitudes.size(); }
    double norm() const;
};

/// Hermitian, unit-trace, positive-semidefinite matrix over a register.
struct DensityMatrix {
    ModeRegister reg;
    ComplexMatrix matrix;

    DensityMatrix(ModeRegister reg, ComplexMatrix matrix);
};

/// |W> = (|001> + |010> + |100>)/sqrt(3) on the inertial [A,B,C] register.
PureState w_state();

/// k=1: (|000>+|110>)/sqrt(2); k=2: (|000>+|101>)/sqrt(2); k=3: (|000>+|011>)/sqrt(2).
PureState biseparable_state(int k);

/// Kronecker product of three normalized single-qubit states, one per party.
PureState product_state(const std::array<std::array<Complex, 2>, 3>& factors);

DensityMatrix to_density_matrix(const PureState& psi);

}  // namespace wqcmi
