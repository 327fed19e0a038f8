#include "qkd/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace qkd {

OrthonormalBasis::OrthonormalBasis(std::size_t dim,
                                   std::vector<std::vector<cplx>> vectors,
                                   double tol)
    : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0 || vectors_.size() != dim_) {
        throw std::invalid_argument("OrthonormalBasis: need exactly dim vectors");
    }
    for (const auto& v : vectors_) {
        if (v.size() != dim_) {
            throw std::invalid_argument("OrthonormalBasis: vector length != dim");
        }
        for (const auto& x : v) {
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
                throw std::invalid_argument("OrthonormalBasis: non-finite entry");
            }
        }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            cplx s{0.0, 0.0};
            for (std::size_t m = 0; m < dim_; ++m) {
                s += std::conj(vectors_[i][m]) * vectors_[j][m];
            }
            const cplx expect = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (std::abs(s - expect) > tol) {
                throw std::invalid_argument("OrthonormalBasis: vectors not orthonormal");
            }
        }
    }
}

OrthonormalBasis OrthonormalBasis::computational(std::size_t dim) {
    std::vector<std::vector<cplx>> vs(dim, std::vector<cplx>(dim, cplx{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) vs[i][i] = cplx{1.0, 0.0};
    return OrthonormalBasis(dim, std::move(vs));
}

OrthonormalBasis OrthonormalBasis::single_qubit(double theta, double phi) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const cplx e_plus = std::polar(1.0, phi);
    const cplx e_minus = std::polar(1.0, -phi);
    std::vector<std::vector<cplx>> vs = {
        {cplx{c, 0.0}, e_plus * s},
        {-e_minus * s, cplx{c, 0.0}},
    };
    return OrthonormalBasis(2, std::move(vs));
}

} // namespace qkd
