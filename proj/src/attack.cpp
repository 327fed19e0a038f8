#include "qkd/attack.hpp"

#include <stdexcept>
#include <utility>

#include "qkd/measure.hpp"

namespace qkd {

namespace {

void check_slot_action(const SlotAction& action, int ancilla_qubits, const char* which) {
    if (const auto* u = std::get_if<UnitaryOp>(&action)) {
        const std::size_t want = std::size_t{1} << (1 + ancilla_qubits);
        if (u->dim() != want) {
            throw std::invalid_argument(std::string("AttackModel: ") + which +
                                        " unitary dim != 2^(1+ancillas)");
        }
    } else {
        const auto& mf = std::get<MeasureForward>(action);
        if (mf.basis.dim() != 2) {
            throw std::invalid_argument(std::string("AttackModel: ") + which +
                                        " measure basis must be single-qubit");
        }
    }
}

} // namespace

AttackModel::AttackModel(std::string name, int ancilla_qubits, SlotAction slot1,
                         SlotAction slot2, std::optional<AncillaReadout> readout)
    : name_(std::move(name)),
      ancilla_qubits_(ancilla_qubits),
      slot1_(std::move(slot1)),
      slot2_(std::move(slot2)),
      readout_(std::move(readout)) {
    if (ancilla_qubits_ < 0 || ancilla_qubits_ > 2) {
        throw std::invalid_argument("AttackModel: ancilla_qubits must be in [0,2]");
    }
    check_slot_action(slot1_, ancilla_qubits_, "slot1");
    check_slot_action(slot2_, ancilla_qubits_, "slot2");
    if (readout_.has_value()) {
        if (ancilla_qubits_ == 0) {
            throw std::invalid_argument("AttackModel: readout without ancillas");
        }
        if (readout_->basis.dim() != (std::size_t{1} << ancilla_qubits_)) {
            throw std::invalid_argument("AttackModel: readout basis dim != 2^ancillas");
        }
    } else if (ancilla_qubits_ > 0) {
        throw std::invalid_argument("AttackModel: ancillas without readout");
    }
}

AttackModel no_attack() {
    return AttackModel("none", 0, UnitaryOp::identity(2), UnitaryOp::identity(2),
                       std::nullopt);
}

AttackModel double_cnot() {
    return AttackModel("double-cnot", 1, UnitaryOp::cnot(), UnitaryOp::cnot(),
                       AncillaReadout{OrthonormalBasis::computational(2)});
}

AttackModel intercept_resend(OrthonormalBasis basis_slot1, OrthonormalBasis basis_slot2,
                             std::string name) {
    return AttackModel(std::move(name), 0,
                       MeasureForward{std::move(basis_slot1)},
                       MeasureForward{std::move(basis_slot2)}, std::nullopt);
}

namespace {

// Applies one slot action to the live state. `targets` is the slot qubit
// followed by the ancilla labels; a measure-forward touches only targets[0].
struct SlotApplier {
    const std::vector<int> targets;

    StateVector operator()(const UnitaryOp& u, StateVector state,
                           std::vector<ActionRecord>& log, int slot,
                           RandomSource&) const {
        log.push_back(ActionRecord{slot, false, std::nullopt, {}});
        return apply_on_qubits(u, state, targets);
    }

    StateVector operator()(const MeasureForward& mf, StateVector state,
                           std::vector<ActionRecord>& log, int slot,
                           RandomSource& rng) const {
        auto [outcome, post] = sample_measurement(state, mf.basis, {targets[0]}, rng);
        log.push_back(ActionRecord{slot, true, static_cast<int>(outcome),
                                   mf.basis.vector(outcome)});
        return std::move(post);
    }
};

} // namespace

PairOutcome transmit_pair(Symbol symbol, const AttackModel& attack, RandomSource& rng,
                          const Codebook& codebook) {
    const int na = attack.ancilla_qubits();
    std::vector<int> ancillas(na);
    for (int a = 0; a < na; ++a) ancillas[a] = 3 + a;

    StateVector state = codebook.eta_state(symbol);
    if (na > 0) {
        state = tensor(state, StateVector::basis_ket(na, 0));
    }

    std::vector<ActionRecord> log;
    std::optional<int> intercept_record;
    auto note_intercept = [&](const ActionRecord& rec) {
        if (!rec.measured) return;
        intercept_record = intercept_record.value_or(0) * 2 + *rec.outcome;
    };

    // slot 1: Eve touches qubit 1 (and her ancillas) only
    {
        std::vector<int> t1{1};
        t1.insert(t1.end(), ancillas.begin(), ancillas.end());
        state = std::visit(
            [&](const auto& a) {
                return SlotApplier{t1}(a, std::move(state), log, 1, rng);
            },
            attack.slot1());
        note_intercept(log.back());
    }
    // slot 2 applier is created here, after slot 1 has fully completed
    {
        std::vector<int> t2{2};
        t2.insert(t2.end(), ancillas.begin(), ancillas.end());
        state = std::visit(
            [&](const auto& a) {
                return SlotApplier{t2}(a, std::move(state), log, 2, rng);
            },
            attack.slot2());
        note_intercept(log.back());
    }

    // Bob's discrimination measurement on the pair
    auto [bob_outcome, post_bob] = sample_measurement(state, codebook.states(), {1, 2}, rng);

    // Eve's readout, after Bob
    std::optional<int> eve = intercept_record;
    if (attack.readout().has_value()) {
        auto [anc_outcome, post_eve] =
            sample_measurement(post_bob, attack.readout()->basis, ancillas, rng);
        (void)post_eve;
        const int shifted = eve.value_or(0) << na;
        eve = shifted + static_cast<int>(anc_outcome);
    }

    return PairOutcome{Symbol(static_cast<int>(bob_outcome)), eve, std::move(log)};
}

} // namespace qkd
