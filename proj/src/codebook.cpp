#include "qkd/codebook.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qkd {

Symbol::Symbol(int value) : value_(value) {
    if (value < 0 || value > 3) {
        throw std::invalid_argument("Symbol: value must be in {0,1,2,3}");
    }
}

namespace {

std::vector<std::vector<cplx>> eta_amplitudes() {
    const double s = 1.0 / std::sqrt(3.0);
    return {
        {cplx{s, 0}, cplx{s, 0}, cplx{s, 0}, cplx{0, 0}},
        {cplx{s, 0}, cplx{-s, 0}, cplx{0, 0}, cplx{s, 0}},
        {cplx{s, 0}, cplx{0, 0}, cplx{-s, 0}, cplx{-s, 0}},
        {cplx{0, 0}, cplx{s, 0}, cplx{-s, 0}, cplx{s, 0}},
    };
}

} // namespace

Codebook::Codebook() : states_(4, eta_amplitudes(), exact_tol) {}

StateVector Codebook::eta_state(Symbol symbol) const {
    return StateVector(2, states_.vector(symbol.value()));
}

StateVector Codebook::encode(int b1, int b0) const {
    return eta_state(Symbol::from_bits(b1, b0));
}

Symbol Codebook::decode(const StateVector& two_qubit_state, RandomSource& rng) const {
    if (two_qubit_state.num_qubits() != 2) {
        throw std::invalid_argument("decode: expected a 2-qubit state");
    }
    const auto [outcome, post] = sample_measurement(two_qubit_state, states_, {1, 2}, rng);
    (void)post;
    return Symbol(static_cast<int>(outcome));
}

DensityMatrix Codebook::reduced_state(Symbol symbol, int subsystem) const {
    if (subsystem != 1 && subsystem != 2) {
        throw std::invalid_argument("reduced_state: subsystem must be 1 or 2");
    }
    const DensityMatrix joint = DensityMatrix::pure(eta_state(symbol));
    return partial_trace(joint, {subsystem}, {2, 2});
}

const Codebook& default_codebook() {
    static const Codebook cb;
    return cb;
}

} // namespace qkd
