#pragma once

#include <cstddef>
#include <vector>

#include "qkd/types.hpp"

namespace qkd {

// Complete orthonormal basis of a dim-dimensional space: exactly dim vectors
// with <v_i|v_j> = delta_ij within the construction tolerance.
class OrthonormalBasis {
public:
    OrthonormalBasis(std::size_t dim, std::vector<std::vector<cplx>> vectors,
                     double tol = invariant_tol);

    static OrthonormalBasis computational(std::size_t dim);

    // Single-qubit basis { cos(theta)|0> + e^{i phi} sin(theta)|1>, and its
    // orthogonal complement }. theta = phi = 0 gives the Z basis.
    static OrthonormalBasis single_qubit(double theta, double phi);

    std::size_t dim() const { return dim_; }
    const std::vector<cplx>& vector(std::size_t k) const { return vectors_[k]; }

private:
    std::size_t dim_;
    std::vector<std::vector<cplx>> vectors_;
};

} // namespace qkd
