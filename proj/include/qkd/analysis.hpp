#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qkd/attack.hpp"
#include "qkd/codebook.hpp"
#include "qkd/measure.hpp"

namespace qkd {

// Anti-cloning conditions for one unordered pair of codebook states, checked
// on the reduced single-qubit states: both pairs of reduced states must be
// non-orthogonal (positive trace overlap) and the qubit-1 pair must also be
// non-identical. A one-by-one cloner would need all three to fail.
struct MorReport {
    std::pair<int, int> pair;  // symbol values, first < second
    double rho1_overlap;       // Tr(rho1 rho1')
    double rho1_distance;      // max elementwise |rho1 - rho1'|
    double rho2_overlap;       // Tr(rho2 rho2')
    bool passes;               // all three above invariant_tol
};

// Exact (sampling-free) evaluation of one attack: Bob's outcome distribution
// per sent symbol, the uniform-average symbol error rate, and Eve's best
// single-shot guess probability given her fixed readout.
struct AttackReport {
    std::string attack_name;
    std::vector<OutcomeDistribution> bob_distributions; // indexed by sent symbol
    double symbol_error_rate;
    double eve_guess_probability; // >= 1/4; 1/4 means no information
};

// One weighted pure-state branch of the channel evolution. Unitary slots
// keep one branch; measure-forward slots fan out per outcome.
struct ChannelBranch {
    double probability;
    StateVector state;
    std::optional<int> eve_record; // intercept outcome accumulator
};

// Exact branch enumeration of prepare -> slot 1 -> slot 2 for one symbol.
std::vector<ChannelBranch> enumerate_branches(Symbol symbol, const AttackModel& attack,
                                              const Codebook& codebook = default_codebook());

// All six unordered codebook pairs.
std::vector<MorReport> mor_check_all(const Codebook& codebook = default_codebook());

AttackReport attack_report(const AttackModel& attack,
                           const Codebook& codebook = default_codebook());

// 1 - P(bob decodes `symbol` | `symbol` sent), exact.
double symbol_error_rate(const AttackModel& attack, Symbol symbol,
                         const Codebook& codebook = default_codebook());

} // namespace qkd
