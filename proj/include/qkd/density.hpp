#pragma once

#include <cstddef>
#include <vector>

#include "qkd/state.hpp"
#include "qkd/types.hpp"

namespace qkd {

// Density matrix, row-major. Construction checks Hermiticity and unit trace
// within invariant_tol and positive semidefiniteness via an eigenvalue floor
// of -invariant_tol.
class DensityMatrix {
public:
    DensityMatrix(std::size_t dim, std::vector<cplx> entries);

    // |psi><psi|
    static DensityMatrix pure(const StateVector& psi);

    std::size_t dim() const { return dim_; }
    const cplx& at(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    const std::vector<cplx>& entries() const { return entries_; }

    double purity() const; // Tr(rho^2)

private:
    std::size_t dim_;
    std::vector<cplx> entries_;
};

// Traces out the subsystems not listed in `keep`. Subsystem labels are
// 1-based in the order of `dims`, subsystem 1 most significant; `keep` must
// be strictly increasing. The product of dims must equal rho.dim.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep,
                            const std::vector<std::size_t>& dims);

// Tr(rho sigma), returned as its real part. For density matrices this lies
// in [0, 1]; zero means orthogonal supports.
double trace_overlap(const DensityMatrix& rho, const DensityMatrix& sigma);

// Largest elementwise |rho_ij - sigma_ij|.
double max_elementwise_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Eigenvalues of a Hermitian matrix (row-major entries), ascending. Uses a
// cyclic Jacobi sweep on the real symmetric embedding; plenty for the
// dim <= 16 matrices this library handles.
std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& entries,
                                          std::size_t dim);

} // namespace qkd
