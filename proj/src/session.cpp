#include "qkd/session.hpp"

#include <cmath>
#include <stdexcept>

namespace qkd {

namespace {

std::size_t check_count_for(const SessionConfig& config) {
    if (config.check_fraction == 0.0) return 0;
    // nudge below: 0.2 * 100000 rounds to 20000.000000000004
    const double raw = config.check_fraction * static_cast<double>(config.num_pairs);
    return static_cast<std::size_t>(std::ceil(raw - 1e-9));
}

void validate(const SessionConfig& config) {
    if (config.num_pairs < 1) {
        throw std::invalid_argument("SessionConfig: num_pairs must be >= 1");
    }
    if (config.check_fraction < 0.0 || config.check_fraction >= 1.0) {
        throw std::invalid_argument("SessionConfig: check_fraction must be in [0,1)");
    }
    if (config.abort_threshold < 0.0 || config.abort_threshold > 1.0) {
        throw std::invalid_argument("SessionConfig: abort_threshold must be in [0,1]");
    }
    if (config.check_fraction > 0.0 &&
        config.check_fraction * static_cast<double>(config.num_pairs) < 1.0 - 1e-9) {
        throw std::invalid_argument(
            "SessionConfig: check_fraction * num_pairs must be >= 1 when checking");
    }
}

} // namespace

SessionResult run_session(const SessionConfig& config) {
    validate(config);
    const Codebook& cb = default_codebook();

    RandomSource master(config.seed);
    RandomSource alice_rng = master.split();
    RandomSource channel_rng = master.split();

    SessionResult result;
    result.transcript.attack_name = config.attack.name();
    result.alice_symbols.reserve(config.num_pairs);
    result.bob_symbols.reserve(config.num_pairs);
    result.transcript.records.reserve(config.num_pairs);

    for (std::size_t i = 0; i < config.num_pairs; ++i) {
        const Symbol sent(static_cast<int>(alice_rng.uniform_int(4)));
        PairOutcome out = transmit_pair(sent, config.attack, channel_rng, cb);
        result.alice_symbols.push_back(sent);
        result.bob_symbols.push_back(out.bob);
        result.transcript.records.push_back(
            PairRecord{sent, std::move(out.actions), out.bob, out.eve});
    }

    const std::size_t check_count = check_count_for(config);
    result.check_indices.resize(check_count);
    for (std::size_t i = 0; i < check_count; ++i) result.check_indices[i] = i;

    if (check_count > 0) {
        const std::vector<Symbol> alice_check(result.alice_symbols.begin(),
                                              result.alice_symbols.begin() + check_count);
        const std::vector<Symbol> bob_check(result.bob_symbols.begin(),
                                            result.bob_symbols.begin() + check_count);
        result.symbol_error_rate_check = estimate_error(alice_check, bob_check);
    }
    result.aborted = result.symbol_error_rate_check > config.abort_threshold;

    if (!result.aborted) {
        result.sifted_key_bits.reserve(2 * (config.num_pairs - check_count));
        for (std::size_t i = check_count; i < config.num_pairs; ++i) {
            const Symbol s = result.alice_symbols[i];
            result.sifted_key_bits.push_back(s.bit1() ? '1' : '0');
            result.sifted_key_bits.push_back(s.bit0() ? '1' : '0');
        }
    }

    const std::size_t secret_bits = result.sifted_key_bits.size();
    const std::size_t qubits_sent = 2 * config.num_pairs;
    const std::size_t classical_bits = 4 * check_count;
    result.efficiency = compute_efficiency(secret_bits, qubits_sent, classical_bits).efficiency;
    return result;
}

EfficiencyReport compute_efficiency(std::size_t secret_bits, std::size_t qubits_sent,
                                    std::size_t classical_bits) {
    if (qubits_sent + classical_bits == 0) {
        throw std::invalid_argument("compute_efficiency: zero denominator");
    }
    EfficiencyReport r;
    r.secret_bits = secret_bits;
    r.qubits_sent = qubits_sent;
    r.classical_bits = classical_bits;
    r.efficiency = static_cast<double>(secret_bits) /
                   static_cast<double>(qubits_sent + classical_bits);
    return r;
}

double estimate_error(const std::vector<Symbol>& alice_check,
                      const std::vector<Symbol>& bob_check) {
    if (alice_check.empty() || alice_check.size() != bob_check.size()) {
        throw std::invalid_argument("estimate_error: lists must be non-empty and equal length");
    }
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < alice_check.size(); ++i) {
        if (!(alice_check[i] == bob_check[i])) ++mismatches;
    }
    return static_cast<double>(mismatches) / static_cast<double>(alice_check.size());
}

} // namespace qkd
