#include "qkd/unitary.hpp"

#include <cmath>
#include <stdexcept>

namespace qkd {

UnitaryOp::UnitaryOp(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("UnitaryOp: entry count != dim^2");
    }
    for (const auto& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw std::invalid_argument("UnitaryOp: non-finite entry");
        }
    }
    // U†U = I, elementwise
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            cplx s{0.0, 0.0};
            for (std::size_t k = 0; k < dim_; ++k) {
                s += std::conj(at(k, i)) * at(k, j);
            }
            const cplx expect = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (std::abs(s - expect) > invariant_tol) {
                throw std::invalid_argument("UnitaryOp: matrix is not unitary");
            }
        }
    }
}

UnitaryOp UnitaryOp::identity(std::size_t dim) {
    std::vector<cplx> e(dim * dim, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = cplx{1.0, 0.0};
    return UnitaryOp(dim, std::move(e));
}

UnitaryOp UnitaryOp::cnot() {
    // basis order |control target>: 00, 01, 10, 11
    std::vector<cplx> e(16, cplx{0.0, 0.0});
    e[0 * 4 + 0] = 1.0;
    e[1 * 4 + 1] = 1.0;
    e[2 * 4 + 3] = 1.0;
    e[3 * 4 + 2] = 1.0;
    return UnitaryOp(4, std::move(e));
}

StateVector apply_on_qubits(const UnitaryOp& u, const StateVector& state,
                            const std::vector<int>& targets) {
    const int n = state.num_qubits();
    const std::size_t k = targets.size();
    if (k == 0 || k > static_cast<std::size_t>(n)) {
        throw std::invalid_argument("apply_on_qubits: bad target count");
    }
    if (u.dim() != (std::size_t{1} << k)) {
        throw std::invalid_argument("apply_on_qubits: gate dim != 2^targets");
    }

    // Bit position of each target; first listed target = MSB of gate index.
    std::vector<int> pos(k);
    std::size_t target_mask = 0;
    for (std::size_t t = 0; t < k; ++t) {
        if (targets[t] < 1 || targets[t] > n) {
            throw std::out_of_range("apply_on_qubits: target out of range");
        }
        pos[t] = qubit_bit_pos(targets[t], n);
        const std::size_t bit = std::size_t{1} << pos[t];
        if (target_mask & bit) {
            throw std::invalid_argument("apply_on_qubits: duplicate target");
        }
        target_mask |= bit;
    }

    // Scatter gate-local index g onto the full-state bit positions.
    auto scatter = [&](std::size_t g) {
        std::size_t x = 0;
        for (std::size_t t = 0; t < k; ++t) {
            if ((g >> (k - 1 - t)) & 1ULL) x |= std::size_t{1} << pos[t];
        }
        return x;
    };

    const std::size_t gate_dim = u.dim();
    std::vector<std::size_t> offsets(gate_dim);
    for (std::size_t g = 0; g < gate_dim; ++g) offsets[g] = scatter(g);

    std::vector<cplx> out(state.dim());
    std::vector<cplx> in_block(gate_dim);
    for (std::size_t base = 0; base < state.dim(); ++base) {
        if (base & target_mask) continue; // visit each block once
        for (std::size_t g = 0; g < gate_dim; ++g) {
            in_block[g] = state.amp(base | offsets[g]);
        }
        for (std::size_t r = 0; r < gate_dim; ++r) {
            cplx acc{0.0, 0.0};
            for (std::size_t c = 0; c < gate_dim; ++c) {
                acc += u.at(r, c) * in_block[c];
            }
            out[base | offsets[r]] = acc;
        }
    }
    return StateVector(state.num_qubits(), std::move(out));
}

} // namespace qkd
