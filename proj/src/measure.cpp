#include "qkd/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace qkd {

namespace {

struct MeasureLayout {
    std::size_t k = 0;                  // number of measured qubits
    std::size_t target_mask = 0;        // bits of measured qubits
    std::vector<std::size_t> offsets;   // basis index m -> full-index bits
};

MeasureLayout layout_for(const StateVector& state, const OrthonormalBasis& basis,
                         const std::vector<int>& measured_qubits) {
    const int n = state.num_qubits();
    MeasureLayout lay;
    lay.k = measured_qubits.size();
    if (lay.k == 0 || lay.k > static_cast<std::size_t>(n)) {
        throw std::invalid_argument("measurement: bad measured qubit count");
    }
    if (basis.dim() != (std::size_t{1} << lay.k)) {
        throw std::invalid_argument("measurement: basis dim != 2^measured qubits");
    }
    std::vector<int> pos(lay.k);
    for (std::size_t t = 0; t < lay.k; ++t) {
        const int q = measured_qubits[t];
        if (q < 1 || q > n) {
            throw std::out_of_range("measurement: qubit label out of range");
        }
        pos[t] = qubit_bit_pos(q, n);
        const std::size_t bit = std::size_t{1} << pos[t];
        if (lay.target_mask & bit) {
            throw std::invalid_argument("measurement: duplicate qubit label");
        }
        lay.target_mask |= bit;
    }
    lay.offsets.resize(basis.dim());
    for (std::size_t m = 0; m < basis.dim(); ++m) {
        std::size_t x = 0;
        for (std::size_t t = 0; t < lay.k; ++t) {
            if ((m >> (lay.k - 1 - t)) & 1ULL) x |= std::size_t{1} << pos[t];
        }
        lay.offsets[m] = x;
    }
    return lay;
}

// Unnormalized environment amplitudes c(env) = <b_outcome, env | psi>,
// keyed by the environment bit pattern (measured bits zeroed).
std::vector<cplx> environment_amplitudes(const StateVector& state,
                                         const OrthonormalBasis& basis,
                                         const MeasureLayout& lay,
                                         std::size_t outcome) {
    std::vector<cplx> c(state.dim(), cplx{0.0, 0.0});
    for (std::size_t env = 0; env < state.dim(); ++env) {
        if (env & lay.target_mask) continue;
        cplx acc{0.0, 0.0};
        for (std::size_t m = 0; m < basis.dim(); ++m) {
            acc += std::conj(basis.vector(outcome)[m]) * state.amp(env | lay.offsets[m]);
        }
        c[env] = acc;
    }
    return c;
}

} // namespace

OutcomeDistribution::OutcomeDistribution(std::vector<double> probabilities)
    : probs_(std::move(probabilities)) {
    if (probs_.empty()) {
        throw std::invalid_argument("OutcomeDistribution: empty");
    }
    double sum = 0.0;
    for (auto& p : probs_) {
        if (!std::isfinite(p) || p < -1e-12) {
            throw std::invalid_argument("OutcomeDistribution: bad probability");
        }
        if (p < 0.0) p = 0.0;
        sum += p;
    }
    if (std::abs(sum - 1.0) > invariant_tol) {
        throw std::invalid_argument("OutcomeDistribution: probabilities do not sum to 1");
    }
}

OutcomeDistribution outcome_distribution(const StateVector& state,
                                         const OrthonormalBasis& basis,
                                         const std::vector<int>& measured_qubits) {
    const MeasureLayout lay = layout_for(state, basis, measured_qubits);
    std::vector<double> probs(basis.dim(), 0.0);
    for (std::size_t o = 0; o < basis.dim(); ++o) {
        const auto c = environment_amplitudes(state, basis, lay, o);
        double p = 0.0;
        for (const auto& a : c) p += std::norm(a);
        probs[o] = p;
    }
    return OutcomeDistribution(std::move(probs));
}

std::pair<double, StateVector> project_outcome(const StateVector& state,
                                               const OrthonormalBasis& basis,
                                               const std::vector<int>& measured_qubits,
                                               std::size_t outcome) {
    const MeasureLayout lay = layout_for(state, basis, measured_qubits);
    if (outcome >= basis.dim()) {
        throw std::out_of_range("project_outcome: outcome out of range");
    }
    const auto c = environment_amplitudes(state, basis, lay, outcome);
    double p = 0.0;
    for (const auto& a : c) p += std::norm(a);
    if (p <= 1e-15) {
        throw std::invalid_argument("project_outcome: outcome has zero probability");
    }
    const double inv = 1.0 / std::sqrt(p);
    std::vector<cplx> post(state.dim(), cplx{0.0, 0.0});
    for (std::size_t env = 0; env < state.dim(); ++env) {
        if (env & lay.target_mask) continue;
        if (c[env] == cplx{0.0, 0.0}) continue;
        for (std::size_t m = 0; m < basis.dim(); ++m) {
            post[env | lay.offsets[m]] += basis.vector(outcome)[m] * c[env] * inv;
        }
    }
    return {p, StateVector(state.num_qubits(), std::move(post))};
}

std::pair<std::size_t, StateVector> sample_measurement(const StateVector& state,
                                                       const OrthonormalBasis& basis,
                                                       const std::vector<int>& measured_qubits,
                                                       RandomSource& rng) {
    const OutcomeDistribution dist = outcome_distribution(state, basis, measured_qubits);
    const double u = rng.uniform();
    double cum = 0.0;
    std::size_t pick = dist.size(); // sentinel
    for (std::size_t o = 0; o < dist.size(); ++o) {
        cum += dist.prob(o);
        if (u < cum) {
            pick = o;
            break;
        }
    }
    if (pick == dist.size()) {
        // u landed in the rounding sliver beyond the last cumulative value
        for (std::size_t o = dist.size(); o-- > 0;) {
            if (dist.prob(o) > 1e-15) {
                pick = o;
                break;
            }
        }
    }
    auto [p, post] = project_outcome(state, basis, measured_qubits, pick);
    (void)p;
    return {pick, std::move(post)};
}

} // namespace qkd
