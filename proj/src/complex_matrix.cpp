#include "wqcmi/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wqcmi {

DimensionError::DimensionError(std::size_t expected, std::size_t actual,
                               const std::string& context)
    : std::invalid_argument(context + ": expected dim " + std::to_string(expected) +
                            ", got " + std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

HermiticityError::HermiticityError(double defect)
    : std::runtime_error("matrix is not Hermitian: defect " + std::to_string(defect)),
      defect_(defect) {}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> amplitudes) {
    ComplexMatrix m(amplitudes.size());
    for (std::size_t i = 0; i < amplitudes.size(); ++i)
        for (std::size_t j = 0; j < amplitudes.size(); ++j)
            m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
    if (dim_ != other.dim_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (std::abs(data_[k] - other.data_[k]) > tol) return false;
    return true;
}

double EigenvalueList::sum() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

bool EigenvalueList::is_distribution(double eps) const {
    for (double v : values)
        if (v < -eps) return false;
    return std::abs(sum() - 1.0) <= eps;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> mode_dims,
                            std::span<const std::size_t> keep) {
    const std::size_t n = mode_dims.size();
    std::size_t full_dim = 1;
    for (std::size_t d : mode_dims) {
        if (d != 2) throw std::invalid_argument("partial_trace: all modes must have dimension 2");
        full_dim *= 2;
    }
    if (full_dim != rho.dim()) throw DimensionError(full_dim, rho.dim(), "partial_trace");

    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
        throw std::invalid_argument("partial_trace: duplicate mode index in keep set");
    if (!kept.empty() && kept.back() >= n)
        throw std::invalid_argument("partial_trace: mode index out of range");

    std::vector<std::size_t> traced;
    for (std::size_t m = 0; m < n; ++m)
        if (!std::binary_search(kept.begin(), kept.end(), m)) traced.push_back(m);

    // Bit m of a basis index sits at shift n-1-m (mode 0 is the MSB).
    auto scatter = [n](std::size_t compact, std::span<const std::size_t> modes) {
        std::size_t idx = 0;
        for (std::size_t b = 0; b < modes.size(); ++b) {
            const std::size_t bit = (compact >> (modes.size() - 1 - b)) & 1u;
            idx |= bit << (n - 1 - modes[b]);
        }
        return idx;
    };

    const std::size_t dk = std::size_t{1} << kept.size();
    const std::size_t dt = std::size_t{1} << traced.size();
    ComplexMatrix out(dk);
    for (std::size_t ik = 0; ik < dk; ++ik) {
        const std::size_t irow = scatter(ik, kept);
        for (std::size_t jk = 0; jk < dk; ++jk) {
            const std::size_t jcol = scatter(jk, kept);
            Complex acc = 0.0;
            for (std::size_t t = 0; t < dt; ++t) {
                const std::size_t tbits = scatter(t, traced);
                acc += rho(irow | tbits, jcol | tbits);
            }
            out(ik, jk) = acc;
        }
    }
    return out;
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = p + 1; q < a.dim(); ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
}

// Annihilate a(p,q) with the unitary J = P*G, where P = diag(1, e^{-i arg g})
// turns the 2x2 pivot real and G is the symmetric-Schur Givens rotation.
void jacobi_rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
    const Complex g = a(p, q);
    const double absg = std::abs(g);
    if (absg == 0.0) return;

    const Complex w = std::conj(g) / absg;  // e^{-i arg g}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * absg);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.dim();
    // columns: A <- A*J   with J(p,p)=c, J(p,q)=s, J(q,p)=-s*w, J(q,q)=c*w
    for (std::size_t i = 0; i < n; ++i) {
        const Complex aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip - s * w * aiq;
        a(i, q) = s * aip + c * w * aiq;
    }
    // rows: A <- J^dagger * A
    const Complex wc = std::conj(w);
    for (std::size_t j = 0; j < n; ++j) {
        const Complex apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - s * wc * aqj;
        a(q, j) = s * apj + c * wc * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

EigenvalueList hermitian_eigenvalues(const ComplexMatrix& m) {
    const double defect = m.hermiticity_defect();
    if (defect > 1e-10) throw HermiticityError(defect);

    const std::size_t n = m.dim();
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    constexpr double kOffTol = 1e-14;
    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (offdiag_norm(a) >= kOffTol) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("hermitian_eigenvalues: Jacobi did not converge");
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > kOffTol / (4.0 * double(n))) jacobi_rotate(a, p, q);
    }

    EigenvalueList ev;
    ev.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) ev.values[i] = a(i, i).real();
    std::sort(ev.values.begin(), ev.values.end(), std::greater<>());
    return ev;
}

}  // namespace wqcmi
