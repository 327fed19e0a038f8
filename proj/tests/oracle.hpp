// Brute-force reference computations for the protocol, written against plain
// arrays with explicit index sums. Everything here is independent of the
// library under test: its own eta amplitudes, its own partial trace, its own
// attack enumeration. Tests freeze these numbers and also compare them
// against the library implementation.
#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

// Two-qubit amplitudes of |eta_s| in ket order |00>,|01>,|10>,|11>.
std::array<cd, 4> eta(int symbol);

// Reduced 2x2 density matrix (row-major) of one qubit of a two-qubit pure
// state; subsystem 1 keeps the first ket digit, subsystem 2 the second.
std::array<cd, 4> reduced(const std::array<cd, 4>& psi, int subsystem);

double trace_product(const std::array<cd, 4>& a, const std::array<cd, 4>& b);
double max_abs_diff(const std::array<cd, 4>& a, const std::array<cd, 4>& b);
double purity(const std::array<cd, 4>& rho);
std::array<double, 2> eigenvalues_2x2(const std::array<cd, 4>& rho);

// |<eta_k|psi>|^2 for k = 0..3 on a two-qubit state.
std::array<double, 4> eta_overlap_probs(const std::array<cd, 4>& psi);

// Double C-NOT attack, worked ket-by-ket from the CNOT truth table on the
// 3-qubit register (qubit1, qubit2, ancilla), ancilla starts |0>.
std::array<cd, 8> double_cnot_final_state(int symbol);
std::array<double, 4> double_cnot_bob_dist(int symbol);
std::array<double, 2> double_cnot_ancilla_dist(int symbol);
double double_cnot_error_rate();
double double_cnot_eve_guess();

// Z,Z intercept-resend: measuring both qubits in the computational basis is
// a joint computational measurement, so the forwarded states are the basis
// kets weighted by squared amplitude.
std::vector<std::pair<double, int>> intercept_z_branches(int symbol); // (prob, ket)
std::array<double, 4> intercept_z_bob_dist(int symbol);
double intercept_z_error_rate();
double intercept_z_eve_guess();

} // namespace oracle
