#pragma once

#include <cstddef>
#include <vector>

#include "qkd/state.hpp"
#include "qkd/types.hpp"

namespace qkd {

// Dense unitary operator, row-major. Construction checks U†U = I within
// invariant_tol, so a held UnitaryOp is always actually unitary.
class UnitaryOp {
public:
    UnitaryOp(std::size_t dim, std::vector<cplx> entries);

    static UnitaryOp identity(std::size_t dim);

    // Two-qubit controlled-NOT. Control is the more significant gate index
    // bit, i.e. the first qubit in an apply_on_qubits target list.
    static UnitaryOp cnot();

    std::size_t dim() const { return dim_; }
    const cplx& at(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    const std::vector<cplx>& entries() const { return entries_; }

private:
    std::size_t dim_;
    std::vector<cplx> entries_;
};

// Applies `u` to the listed qubits (identity on the rest). Targets are
// 1-based qubit labels; the first listed target maps to the most significant
// bit of the gate index. Requires u.dim == 2^targets.size() and distinct
// in-range targets.
StateVector apply_on_qubits(const UnitaryOp& u, const StateVector& state,
                            const std::vector<int>& targets);

} // namespace qkd
