#pragma once

#include <cstdint>

#include "qkd/basis.hpp"
#include "qkd/density.hpp"
#include "qkd/measure.hpp"
#include "qkd/rng.hpp"
#include "qkd/state.hpp"

namespace qkd {

// Two-bit protocol symbol. Value i names the codebook state |eta_i>; the
// high bit is b1, the low bit b0, so "10" is symbol 2.
class Symbol {
public:
    explicit Symbol(int value);
    static Symbol from_bits(int b1, int b0) { return Symbol(2 * b1 + b0); }

    int value() const { return value_; }
    int bit1() const { return value_ >> 1; } // high bit
    int bit0() const { return value_ & 1; }  // low bit

    bool operator==(const Symbol&) const = default;

private:
    int value_;
};

// The four-state codebook. Symbol i is carried by the two-qubit state
// |eta_i>, stored with exact real amplitudes (global phase untouched):
//
//   |eta_0> = (|00> + |01> + |10>) / sqrt(3)
//   |eta_1> = (|00> - |01> + |11>) / sqrt(3)
//   |eta_2> = (|00> - |10> - |11>) / sqrt(3)
//   |eta_3> = (|01> - |10> + |11>) / sqrt(3)
//
// The four states are pairwise orthonormal, so an honest receiver
// discriminates them perfectly by measuring in this basis.
class Codebook {
public:
    Codebook();

    const OrthonormalBasis& states() const { return states_; }

    StateVector eta_state(Symbol symbol) const;
    StateVector encode(int b1, int b0) const;

    // Projective measurement in the eta basis. On a codebook state this is
    // deterministic; on anything else it samples honestly, which is exactly
    // the receiver's behavior under attack.
    Symbol decode(const StateVector& two_qubit_state, RandomSource& rng) const;

    // Reduced density matrix of qubit 1 (subsystem 1) or qubit 2
    // (subsystem 2) of |eta_symbol>.
    DensityMatrix reduced_state(Symbol symbol, int subsystem) const;

private:
    OrthonormalBasis states_;
};

// Shared immutable instance.
const Codebook& default_codebook();

} // namespace qkd
