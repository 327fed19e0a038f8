#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qkd/attack.hpp"
#include "qkd/codebook.hpp"

namespace qkd {

struct SessionConfig {
    std::size_t num_pairs = 0;
    double check_fraction = 0.0;  // in [0,1)
    double abort_threshold = 0.0; // max tolerated check error rate
    std::uint64_t seed = 0;
    AttackModel attack = no_attack();
};

struct SessionResult {
    std::vector<Symbol> alice_symbols;
    std::vector<Symbol> bob_symbols;
    std::vector<std::size_t> check_indices;
    double symbol_error_rate_check = 0.0; // 0 when the check set is empty
    std::string sifted_key_bits;          // '0'/'1'; empty when aborted
    double efficiency = 0.0;
    bool aborted = false;
    ChannelTranscript transcript;
};

struct EfficiencyReport {
    std::size_t secret_bits = 0;
    std::size_t qubits_sent = 0;
    std::size_t classical_bits = 0;
    double efficiency = 0.0; // secret / (qubits + classical)
};

// Runs a full key-distribution session, deterministic given config.seed.
//
// Per pair: Alice draws a uniform symbol, encodes, and transmits through the
// (possibly attacked) channel; Bob decodes. The check subset is the first
// ceil(check_fraction * num_pairs) pairs -- a fixed public rule, so no index
// announcement is charged. Both parties disclose their check symbols
// (4 classical bits per checked pair); the session aborts iff the check
// error rate exceeds abort_threshold. The sifted key is Alice's 2-bit
// symbols of the non-check pairs, kept only when not aborted.
SessionResult run_session(const SessionConfig& config);

EfficiencyReport compute_efficiency(std::size_t secret_bits, std::size_t qubits_sent,
                                    std::size_t classical_bits);

// Fraction of positions where the symbols differ. Lists must be non-empty
// and of equal length.
double estimate_error(const std::vector<Symbol>& alice_check,
                      const std::vector<Symbol>& bob_check);

} // namespace qkd
