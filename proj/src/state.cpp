#include "qkd/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qkd {

namespace {

void check_shape(int num_qubits, const std::vector<cplx>& amps) {
    if (num_qubits < 1) {
        throw std::invalid_argument("StateVector: num_qubits must be positive");
    }
    if (amps.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("StateVector: amplitude count != 2^num_qubits");
    }
    for (const auto& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("StateVector: non-finite amplitude");
        }
    }
}

} // namespace

StateVector::StateVector(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    check_shape(num_qubits_, amps_);
    if (std::abs(norm() - 1.0) > invariant_tol) {
        throw std::invalid_argument("StateVector: not unit norm");
    }
}

StateVector StateVector::normalized(int num_qubits, std::vector<cplx> amplitudes) {
    check_shape(num_qubits, amplitudes);
    double s2 = 0.0;
    for (const auto& a : amplitudes) s2 += std::norm(a);
    if (s2 <= 0.0) {
        throw std::invalid_argument("StateVector: cannot normalize zero vector");
    }
    const double s = std::sqrt(s2);
    for (auto& a : amplitudes) a /= s;
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::basis_ket(int num_qubits, std::size_t index) {
    if (num_qubits < 1 || index >= (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("basis_ket: index out of range");
    }
    std::vector<cplx> amps(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    amps[index] = cplx{1.0, 0.0};
    return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm() const {
    double s2 = 0.0;
    for (const auto& a : amps_) s2 += std::norm(a);
    return std::sqrt(s2);
}

cplx StateVector::inner_product(const StateVector& other) const {
    if (dim() != other.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    cplx r{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        r += std::conj(amps_[i]) * other.amps_[i];
    }
    return r;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<cplx> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a.amp(i) * b.amp(j);
        }
    }
    return StateVector(a.num_qubits() + b.num_qubits(), std::move(out));
}

} // namespace qkd
