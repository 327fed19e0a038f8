#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qkd/basis.hpp"
#include "qkd/codebook.hpp"
#include "qkd/rng.hpp"
#include "qkd/state.hpp"
#include "qkd/unitary.hpp"

namespace qkd {

// One channel-slot action. The type carries no qubit addressing: a unitary
// acts on (slot qubit, ancillas) and a measure-forward acts on the slot
// qubit alone. transmit_pair binds the indices, so an action cannot couple
// the two data qubits directly -- the sequential-access rule of the channel.
struct MeasureForward {
    OrthonormalBasis basis; // single-qubit; Eve forwards the collapsed eigenstate
};
using SlotAction = std::variant<UnitaryOp, MeasureForward>;

// Eve's ancilla measurement, performed after Bob's. Basis dimension is
// 2^ancilla_qubits.
struct AncillaReadout {
    OrthonormalBasis basis;
};

// An eavesdropping strategy over the sequential two-qubit channel: Eve holds
// qubit 1 (plus her ancillas), must release it before she ever sees qubit 2,
// then holds qubit 2 (plus the same ancillas).
class AttackModel {
public:
    AttackModel(std::string name, int ancilla_qubits, SlotAction slot1,
                SlotAction slot2, std::optional<AncillaReadout> readout);

    const std::string& name() const { return name_; }
    int ancilla_qubits() const { return ancilla_qubits_; }
    const SlotAction& slot1() const { return slot1_; }
    const SlotAction& slot2() const { return slot2_; }
    const std::optional<AncillaReadout>& readout() const { return readout_; }

private:
    std::string name_;
    int ancilla_qubits_;
    SlotAction slot1_;
    SlotAction slot2_;
    std::optional<AncillaReadout> readout_;
};

// Identity channel: no ancillas, both slots identity, no readout.
AttackModel no_attack();

// One ancilla prepared |0>; C-NOT from each in-transit qubit into the
// ancilla, computational-basis readout. The ancilla ends in q1 XOR q2.
AttackModel double_cnot();

// Measure each in-transit qubit in the given basis and forward the
// collapsed eigenstate. Eve keeps both outcomes as her record.
AttackModel intercept_resend(OrthonormalBasis basis_slot1, OrthonormalBasis basis_slot2,
                             std::string name = "intercept-resend");

// What one transmitted pair looked like from inside the channel.
struct ActionRecord {
    int slot = 0;                 // 1 or 2
    bool measured = false;        // false = unitary action
    std::optional<int> outcome;   // measure-forward outcome index
    std::vector<cplx> forwarded;  // collapsed eigenstate, measure-forward only
};

struct PairOutcome {
    Symbol bob;
    std::optional<int> eve; // see eve record encoding in transmit_pair
    std::vector<ActionRecord> actions;
};

struct PairRecord {
    Symbol sent;
    std::vector<ActionRecord> actions;
    Symbol bob;
    std::optional<int> eve;
};

struct ChannelTranscript {
    std::string attack_name;
    std::vector<PairRecord> records;
};

// Runs one pair through the channel:
//   prepare |eta_symbol> (x) |0...0>  ->  slot-1 action on (qubit 1, ancillas)
//   ->  slot-2 action on (qubit 2, ancillas)  ->  Bob measures qubits (1,2)
//   in the eta basis  ->  Eve measures her ancillas per the readout.
// The slot-2 applier is only built after the slot-1 action has completed, so
// the access order is fixed by control flow, not convention.
//
// Eve's record: intercept outcomes accumulate most-significant-first
// (slot 1 above slot 2); an ancilla readout outcome is appended below them.
// Absent when the attack measures nothing.
//
// Draws from rng in a fixed order (slot 1 measure, slot 2 measure, Bob,
// readout), so transcripts are reproducible.
PairOutcome transmit_pair(Symbol symbol, const AttackModel& attack, RandomSource& rng,
                          const Codebook& codebook = default_codebook());

} // namespace qkd
