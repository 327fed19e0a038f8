#pragma once

#include <cstddef>
#include <vector>

#include "qkd/types.hpp"

namespace qkd {

// Pure state of n qubits as a dense unit-norm amplitude vector.
//
// Index convention (used everywhere in this library): amplitude index i is
// the basis ket |b1 b2 ... bn> read as a binary number with b1 the most
// significant bit. Qubit labels are 1-based; qubit 1 is the first qubit
// transmitted over the channel and owns the top bit of the index.
class StateVector {
public:
    // Validates the amplitude count (2^num_qubits), finiteness, and unit
    // norm within invariant_tol. Throws std::invalid_argument on violation.
    StateVector(int num_qubits, std::vector<cplx> amplitudes);

    // Same, but rescales to unit norm first (input must be nonzero).
    static StateVector normalized(int num_qubits, std::vector<cplx> amplitudes);

    // Computational basis ket |index>.
    static StateVector basis_ket(int num_qubits, std::size_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    const cplx& amp(std::size_t i) const { return amps_[i]; }
    const std::vector<cplx>& amplitudes() const { return amps_; }

    double norm() const;
    cplx inner_product(const StateVector& other) const; // <this|other>

private:
    int num_qubits_;
    std::vector<cplx> amps_;
};

// |a> (x) |b>; qubits of `a` end up above (more significant than) those of `b`.
StateVector tensor(const StateVector& a, const StateVector& b);

// Bit position (from the LSB) of 1-based qubit label q in an n-qubit index.
inline int qubit_bit_pos(int q, int num_qubits) { return num_qubits - q; }

} // namespace qkd
