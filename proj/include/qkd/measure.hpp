#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qkd/basis.hpp"
#include "qkd/rng.hpp"
#include "qkd/state.hpp"
#include "qkd/types.hpp"

namespace qkd {

// Probabilities indexed by measurement outcome. Must sum to 1 within
// invariant_tol; tiny negatives (>= -1e-12) are tolerated and clamped.
class OutcomeDistribution {
public:
    explicit OutcomeDistribution(std::vector<double> probabilities);

    std::size_t size() const { return probs_.size(); }
    double prob(std::size_t k) const { return probs_[k]; }
    const std::vector<double>& probabilities() const { return probs_; }

private:
    std::vector<double> probs_;
};

// Exact outcome probabilities for a projective measurement of the listed
// qubits in `basis`. The basis must span the measured subsystem
// (basis.dim == 2^measured_qubits.size()); the first listed qubit maps to
// the most significant bit of the basis vector index. Unmeasured qubits are
// summed over.
OutcomeDistribution outcome_distribution(const StateVector& state,
                                         const OrthonormalBasis& basis,
                                         const std::vector<int>& measured_qubits);

// Probability of one outcome together with the normalized post-measurement
// state of the full system. Probability 0 outcomes have no post state;
// asking for one throws.
std::pair<double, StateVector> project_outcome(const StateVector& state,
                                               const OrthonormalBasis& basis,
                                               const std::vector<int>& measured_qubits,
                                               std::size_t outcome);

// Draws an outcome from outcome_distribution and collapses. One rng draw per
// call, so sequences are reproducible given the seed and call order.
std::pair<std::size_t, StateVector> sample_measurement(const StateVector& state,
                                                       const OrthonormalBasis& basis,
                                                       const std::vector<int>& measured_qubits,
                                                       RandomSource& rng);

} // namespace qkd
