#include "qkd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qkd/density.hpp"

namespace qkd {

std::vector<ChannelBranch> enumerate_branches(Symbol symbol, const AttackModel& attack,
                                              const Codebook& codebook) {
    const int na = attack.ancilla_qubits();
    std::vector<int> ancillas(na);
    for (int a = 0; a < na; ++a) ancillas[a] = 3 + a;

    StateVector initial = codebook.eta_state(symbol);
    if (na > 0) initial = tensor(initial, StateVector::basis_ket(na, 0));

    std::vector<ChannelBranch> branches;
    branches.push_back(ChannelBranch{1.0, std::move(initial), std::nullopt});

    const auto apply_slot = [&](const SlotAction& action, int slot_qubit) {
        std::vector<int> targets{slot_qubit};
        targets.insert(targets.end(), ancillas.begin(), ancillas.end());

        std::vector<ChannelBranch> next;
        for (auto& br : branches) {
            if (const auto* u = std::get_if<UnitaryOp>(&action)) {
                next.push_back(ChannelBranch{br.probability,
                                             apply_on_qubits(*u, br.state, targets),
                                             br.eve_record});
            } else {
                const auto& mf = std::get<MeasureForward>(action);
                const auto dist = outcome_distribution(br.state, mf.basis, {slot_qubit});
                for (std::size_t o = 0; o < dist.size(); ++o) {
                    if (dist.prob(o) <= 1e-15) continue;
                    auto [p, post] = project_outcome(br.state, mf.basis, {slot_qubit}, o);
                    const int rec = br.eve_record.value_or(0) * 2 + static_cast<int>(o);
                    next.push_back(ChannelBranch{br.probability * p, std::move(post), rec});
                }
            }
        }
        branches = std::move(next);
    };

    apply_slot(attack.slot1(), 1);
    apply_slot(attack.slot2(), 2);
    return branches;
}

std::vector<MorReport> mor_check_all(const Codebook& codebook) {
    std::vector<MorReport> reports;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const auto rho1_i = codebook.reduced_state(Symbol(i), 1);
            const auto rho1_j = codebook.reduced_state(Symbol(j), 1);
            const auto rho2_i = codebook.reduced_state(Symbol(i), 2);
            const auto rho2_j = codebook.reduced_state(Symbol(j), 2);
            MorReport r;
            r.pair = {i, j};
            r.rho1_overlap = trace_overlap(rho1_i, rho1_j);
            r.rho1_distance = max_elementwise_distance(rho1_i, rho1_j);
            r.rho2_overlap = trace_overlap(rho2_i, rho2_j);
            r.passes = r.rho1_overlap > invariant_tol &&
                       r.rho1_distance > invariant_tol &&
                       r.rho2_overlap > invariant_tol;
            reports.push_back(r);
        }
    }
    return reports;
}

AttackReport attack_report(const AttackModel& attack, const Codebook& codebook) {
    AttackReport report;
    report.attack_name = attack.name();

    const int na = attack.ancilla_qubits();
    std::vector<int> ancillas(na);
    for (int a = 0; a < na; ++a) ancillas[a] = 3 + a;

    double total_correct = 0.0;
    // joint_eve[record][symbol] = P(symbol) * P(record | symbol)
    std::map<int, std::array<double, 4>> joint_eve;
    bool eve_has_record = false;

    for (int s = 0; s < 4; ++s) {
        const auto branches = enumerate_branches(Symbol(s), attack, codebook);
        std::vector<double> bob(4, 0.0);
        for (const auto& br : branches) {
            const auto dist = outcome_distribution(br.state, codebook.states(), {1, 2});
            for (std::size_t o = 0; o < 4; ++o) {
                bob[o] += br.probability * dist.prob(o);
            }
            // Eve's record: intercept outcomes, ancilla readout, or both.
            if (attack.readout().has_value()) {
                const auto anc = outcome_distribution(br.state, attack.readout()->basis,
                                                      ancillas);
                for (std::size_t o = 0; o < anc.size(); ++o) {
                    if (anc.prob(o) <= 0.0) continue;
                    const int rec = (br.eve_record.value_or(0) << na) + static_cast<int>(o);
                    joint_eve[rec][s] += 0.25 * br.probability * anc.prob(o);
                    eve_has_record = true;
                }
            } else if (br.eve_record.has_value()) {
                joint_eve[*br.eve_record][s] += 0.25 * br.probability;
                eve_has_record = true;
            }
        }
        total_correct += bob[s];
        report.bob_distributions.emplace_back(std::move(bob));
    }

    // rounding can land a hair outside [0,1]
    report.symbol_error_rate = std::clamp(1.0 - total_correct / 4.0, 0.0, 1.0);

    if (!eve_has_record) {
        report.eve_guess_probability = 0.25; // blind guess on a uniform prior
    } else {
        double guess = 0.0;
        for (const auto& [rec, per_symbol] : joint_eve) {
            guess += *std::max_element(per_symbol.begin(), per_symbol.end());
        }
        report.eve_guess_probability = guess;
    }
    return report;
}

double symbol_error_rate(const AttackModel& attack, Symbol symbol,
                         const Codebook& codebook) {
    const auto branches = enumerate_branches(symbol, attack, codebook);
    double correct = 0.0;
    for (const auto& br : branches) {
        const auto dist = outcome_distribution(br.state, codebook.states(), {1, 2});
        correct += br.probability * dist.prob(static_cast<std::size_t>(symbol.value()));
    }
    return std::clamp(1.0 - correct, 0.0, 1.0);
}

} // namespace qkd
