#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wqcmi {

using Complex = std::complex<double>;

/// Shape mismatch between an operand and what the operation expects.
class DimensionError : public std::invalid_argument {
public:
    DimensionError(std::size_t expected, std::size_t actual, const std::string& context);
    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

/// Input to the eigensolver deviates from Hermitian symmetry beyond tolerance.
class HermiticityError : public std::runtime_error {
public:
    explicit HermiticityError(double defect);
    double defect() const noexcept { return defect_; }

private:
    double defect_;
};

/// Dense square complex matrix, row-major storage. Sized for registers of
/// up to 6 two-level modes (dim <= 64); no sparsity, no rectangular shapes.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// rho = |psi><psi| for an amplitude vector (not necessarily normalized).
    static ComplexMatrix outer(std::span<const Complex> amplitudes);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    Complex trace() const;
    double frobenius_norm() const;
    /// max_ij |m(i,j) - conj(m(j,i))|
    double hermiticity_defect() const;

    bool approx_equal(const ComplexMatrix& other, double tol) const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Real spectrum sorted descending.
struct EigenvalueList {
    std::vector<double> values;

    double sum() const;
    /// Density-matrix sanity: every value >= -eps and the sum is 1 within eps.
    bool is_distribution(double eps = 1e-10) const;
};

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix over the kept modes. mode_dims must all be 2 and their
/// product must equal dim(rho); `keep` selects mode indices (mode 0 is the
/// most significant bit of the basis index). An empty keep set traces out
/// everything and yields the 1x1 total trace. Trace and Hermiticity are
/// preserved by construction.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> mode_dims,
                            std::span<const std::size_t> keep);

/// Eigenvalues of a Hermitian matrix via cyclic complex Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm drops below 1e-14.
/// The input is symmetrized as (m + m^dagger)/2 first; a Hermiticity defect
/// beyond 1e-10 is an error.
EigenvalueList hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace wqcmi
