#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qkd/basis.hpp"
#include "qkd/density.hpp"
#include "qkd/state.hpp"
#include "qkd/unitary.hpp"

namespace testutil {

// Random pure state with Gaussian amplitudes, fixed-seed engine.
inline qkd::StateVector random_state(int num_qubits, std::mt19937_64& eng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<qkd::cplx> amps(std::size_t{1} << num_qubits);
    for (auto& a : amps) a = qkd::cplx{g(eng), g(eng)};
    return qkd::StateVector::normalized(num_qubits, std::move(amps));
}

// Haar-ish random unitary via Gram-Schmidt on a Gaussian matrix.
inline qkd::UnitaryOp random_unitary(std::size_t dim, std::mt19937_64& eng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<std::vector<qkd::cplx>> cols(dim, std::vector<qkd::cplx>(dim));
    for (auto& col : cols) {
        for (auto& x : col) x = qkd::cplx{g(eng), g(eng)};
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            qkd::cplx proj{0.0, 0.0};
            for (std::size_t m = 0; m < dim; ++m) {
                proj += std::conj(cols[j][m]) * cols[i][m];
            }
            for (std::size_t m = 0; m < dim; ++m) cols[i][m] -= proj * cols[j][m];
        }
        double n2 = 0.0;
        for (const auto& x : cols[i]) n2 += std::norm(x);
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& x : cols[i]) x *= inv;
    }
    std::vector<qkd::cplx> entries(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) entries[r * dim + c] = cols[c][r];
    }
    return qkd::UnitaryOp(dim, std::move(entries));
}

// Random single-qubit orthonormal basis.
inline qkd::OrthonormalBasis random_qubit_basis(std::mt19937_64& eng) {
    const auto u = random_unitary(2, eng);
    return qkd::OrthonormalBasis(
        2, {{u.at(0, 0), u.at(1, 0)}, {u.at(0, 1), u.at(1, 1)}});
}

inline double max_state_diff(const qkd::StateVector& a, const std::vector<qkd::cplx>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a.amp(i) - b[i]));
    return d;
}

// |freq - p| within nsigma binomial standard errors for every outcome.
inline bool frequencies_match(const std::vector<std::size_t>& counts,
                              const std::vector<double>& probs, std::size_t trials,
                              double nsigma) {
    for (std::size_t k = 0; k < probs.size(); ++k) {
        const double p = probs[k];
        const double freq = static_cast<double>(counts[k]) / static_cast<double>(trials);
        const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
        if (std::abs(freq - p) > nsigma * sigma + 1e-9) return false;
    }
    return true;
}

} // namespace testutil
