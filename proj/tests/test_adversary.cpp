#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "oracle.hpp"
#include "qkd/analysis.hpp"
#include "qkd/attack.hpp"
#include "qkd/measure.hpp"

using namespace qkd;

namespace {

// Applies an arbitrary (not necessarily unitary) 2x2 matrix to one qubit of
// a raw amplitude vector. Used to embed measurement projectors.
std::vector<cplx> apply2(const std::array<cplx, 4>& m, const std::vector<cplx>& v,
                         int qubit, int num_qubits) {
    const std::size_t bit = std::size_t{1} << qubit_bit_pos(qubit, num_qubits);
    std::vector<cplx> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i & bit) continue;
        const cplx a = v[i], b = v[i | bit];
        out[i] = m[0] * a + m[1] * b;
        out[i | bit] = m[2] * a + m[3] * b;
    }
    return out;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace

// ---------- no_attack ----------

TEST_CASE("the identity channel never disturbs the pair") {
    const auto attack = no_attack();
    RandomSource rng(17);
    for (int sym = 0; sym < 4; ++sym) {
        for (int rep = 0; rep < 50; ++rep) {
            const auto out = transmit_pair(Symbol(sym), attack, rng);
            CHECK(out.bob == Symbol(sym));
            CHECK_FALSE(out.eve.has_value());
        }
    }
}

// ---------- double_cnot ----------

TEST_CASE("double C-NOT leaves the ancilla holding q1 XOR q2") {
    const auto attack = double_cnot();
    const auto& slot1 = std::get<UnitaryOp>(attack.slot1());
    const auto& slot2 = std::get<UnitaryOp>(attack.slot2());
    for (int q1 = 0; q1 < 2; ++q1) {
        for (int q2 = 0; q2 < 2; ++q2) {
            auto psi = StateVector::basis_ket(3, std::size_t(4 * q1 + 2 * q2));
            psi = apply_on_qubits(slot1, psi, {1, 3});
            psi = apply_on_qubits(slot2, psi, {2, 3});
            const std::size_t want = std::size_t(4 * q1 + 2 * q2 + (q1 ^ q2));
            CHECK(std::abs(psi.amp(want) - cplx{1}) < 1e-15);
        }
    }
}

TEST_CASE("double C-NOT pre-measurement state on eta0") {
    const auto branches = enumerate_branches(Symbol(0), double_cnot());
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].probability == doctest::Approx(1.0));
    const auto want = oracle::double_cnot_final_state(0);
    for (int i = 0; i < 8; ++i) {
        CHECK(std::abs(branches[0].state.amp(i) -
                       cplx{want[i].real(), want[i].imag()}) < 1e-12);
    }
    // frozen: (|000> + |011> + |101>) / sqrt(3)
    const double s = 1.0 / std::sqrt(3.0);
    CHECK(branches[0].state.amp(0b000).real() == doctest::Approx(s).epsilon(1e-12));
    CHECK(branches[0].state.amp(0b011).real() == doctest::Approx(s).epsilon(1e-12));
    CHECK(branches[0].state.amp(0b101).real() == doctest::Approx(s).epsilon(1e-12));
}

TEST_CASE("double C-NOT Monte-Carlo statistics on eta0") {
    const auto attack = double_cnot();
    RandomSource rng(99);
    const std::size_t trials = 30000;
    std::vector<std::size_t> bob_counts(4, 0), eve_counts(2, 0);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto out = transmit_pair(Symbol(0), attack, rng);
        ++bob_counts[out.bob.value()];
        REQUIRE(out.eve.has_value());
        ++eve_counts[*out.eve];
    }
    const auto bob_want = oracle::double_cnot_bob_dist(0);
    CHECK(testutil::frequencies_match(
        bob_counts, {bob_want[0], bob_want[1], bob_want[2], bob_want[3]}, trials, 3.0));
    const auto eve_want = oracle::double_cnot_ancilla_dist(0);
    CHECK(testutil::frequencies_match(eve_counts, {eve_want[0], eve_want[1]}, trials,
                                      3.0));
    CHECK(eve_want[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(eve_want[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(bob_counts[3] == 0); // outcome 3 has probability exactly 0
}

TEST_CASE("action log for unitary attacks carries no measurement records") {
    RandomSource rng(5);
    const auto out = transmit_pair(Symbol(2), double_cnot(), rng);
    REQUIRE(out.actions.size() == 2);
    CHECK(out.actions[0].slot == 1);
    CHECK(out.actions[1].slot == 2);
    CHECK_FALSE(out.actions[0].measured);
    CHECK_FALSE(out.actions[1].measured);
}

// ---------- intercept_resend ----------

TEST_CASE("Z,Z intercept on eta0 forwards |00>, |01>, |10> uniformly") {
    const auto attack = intercept_resend(OrthonormalBasis::computational(2),
                                         OrthonormalBasis::computational(2));
    const auto branches = enumerate_branches(Symbol(0), attack);
    REQUIRE(branches.size() == 3);
    const auto want = oracle::intercept_z_branches(0);
    REQUIRE(want.size() == 3);
    for (std::size_t b = 0; b < 3; ++b) {
        CHECK(branches[b].probability == doctest::Approx(want[b].first).epsilon(1e-12));
        CHECK(branches[b].probability == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        REQUIRE(branches[b].eve_record.has_value());
        CHECK(*branches[b].eve_record == want[b].second);
        // forwarded state is the observed basis ket
        for (int i = 0; i < 4; ++i) {
            const cplx amp = (i == want[b].second) ? cplx{1} : cplx{0};
            CHECK(std::abs(branches[b].state.amp(i) - amp) < 1e-12);
        }
    }
}

TEST_CASE("Z,Z intercept Monte-Carlo statistics on eta0") {
    const auto attack = intercept_resend(OrthonormalBasis::computational(2),
                                         OrthonormalBasis::computational(2));
    RandomSource rng(314);
    const std::size_t trials = 30000;
    std::vector<std::size_t> bob_counts(4, 0);
    std::size_t correct = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto out = transmit_pair(Symbol(0), attack, rng);
        ++bob_counts[out.bob.value()];
        if (out.bob.value() == 0) ++correct;
        REQUIRE(out.eve.has_value());
        // two action records with outcomes and forwarded eigenstates
        REQUIRE(out.actions.size() == 2);
        CHECK(out.actions[0].measured);
        CHECK(out.actions[1].measured);
        CHECK(*out.eve == 2 * *out.actions[0].outcome + *out.actions[1].outcome);
        CHECK(out.actions[0].forwarded.size() == 2);
    }
    const auto want = oracle::intercept_z_bob_dist(0);
    CHECK(testutil::frequencies_match(
        bob_counts, {want[0], want[1], want[2], want[3]}, trials, 3.0));
    // correct-decode probability 1/3
    CHECK(std::abs(static_cast<double>(correct) / trials - 1.0 / 3.0) <
          3.0 * std::sqrt((1.0 / 3.0) * (2.0 / 3.0) / trials));
}

TEST_CASE("Z-basis intercept forwards a computational ket unchanged") {
    // |00> is diagonal in the intercept basis, so both measurements are
    // deterministic and the forwarded pair is |00> again.
    const auto z = OrthonormalBasis::computational(2);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        RandomSource rng(seed);
        auto psi = StateVector::basis_ket(2, 0);
        const auto [o1, after1] = sample_measurement(psi, z, {1}, rng);
        const auto [o2, after2] = sample_measurement(after1, z, {2}, rng);
        CHECK(o1 == 0);
        CHECK(o2 == 0);
        CHECK(std::abs(after2.amp(0) - cplx{1}) < 1e-12);
    }
}

// ---------- attack validation ----------

TEST_CASE("malformed attacks are rejected at construction") {
    // slot unitary must cover the ancilla
    CHECK_THROWS_AS(AttackModel("bad", 1, UnitaryOp::identity(2), UnitaryOp::cnot(),
                                AncillaReadout{OrthonormalBasis::computational(2)}),
                    std::invalid_argument);
    // readout requires an ancilla
    CHECK_THROWS_AS(AttackModel("bad", 0, UnitaryOp::identity(2), UnitaryOp::identity(2),
                                AncillaReadout{OrthonormalBasis::computational(2)}),
                    std::invalid_argument);
    // ancilla requires a readout
    CHECK_THROWS_AS(AttackModel("bad", 1, UnitaryOp::cnot(), UnitaryOp::cnot(),
                                std::nullopt),
                    std::invalid_argument);
    // readout basis must span the ancilla space
    CHECK_THROWS_AS(AttackModel("bad", 2, UnitaryOp::identity(8), UnitaryOp::identity(8),
                                AncillaReadout{OrthonormalBasis::computational(2)}),
                    std::invalid_argument);
    // measure-forward basis must be single-qubit
    CHECK_THROWS_AS(intercept_resend(OrthonormalBasis::computational(4),
                                     OrthonormalBasis::computational(2)),
                    std::invalid_argument);
    // a non-orthonormal basis cannot even be built
    CHECK_THROWS_AS(OrthonormalBasis(2, {{cplx{1}, cplx{0}}, {cplx{0.9}, cplx{0.1}}}),
                    std::invalid_argument);
}

// ---------- sequential-access constraint ----------

TEST_CASE("slot-1 actions commute with anything acting on qubit 2" *
          doctest::description("property")) {
    std::mt19937_64 eng(61);

    SUBCASE("unitary slot-1 actions (none, double-cnot)") {
        for (const auto& attack : {no_attack(), double_cnot()}) {
            const auto& u = std::get<UnitaryOp>(attack.slot1());
            const int n = 2 + attack.ancilla_qubits();
            std::vector<int> slot1_targets{1};
            for (int a = 0; a < attack.ancilla_qubits(); ++a) {
                slot1_targets.push_back(3 + a);
            }
            for (int rep = 0; rep < 20; ++rep) {
                const auto psi = testutil::random_state(n, eng);
                const auto v = testutil::random_unitary(2, eng);
                const auto uv = apply_on_qubits(u, apply_on_qubits(v, psi, {2}),
                                                slot1_targets);
                const auto vu = apply_on_qubits(v, apply_on_qubits(u, psi, slot1_targets),
                                                {2});
                CHECK(max_diff(uv.amplitudes(), vu.amplitudes()) < 1e-9);
            }
        }
    }

    SUBCASE("measurement projectors of intercept attacks") {
        for (int rep = 0; rep < 20; ++rep) {
            const auto basis = testutil::random_qubit_basis(eng);
            for (int k = 0; k < 2; ++k) {
                const auto& v = basis.vector(k);
                const std::array<cplx, 4> proj{
                    v[0] * std::conj(v[0]), v[0] * std::conj(v[1]),
                    v[1] * std::conj(v[0]), v[1] * std::conj(v[1])};
                const auto w = testutil::random_unitary(2, eng);
                const std::array<cplx, 4> wm{w.at(0, 0), w.at(0, 1), w.at(1, 0),
                                             w.at(1, 1)};
                const auto psi = testutil::random_state(2, eng).amplitudes();
                const auto pw = apply2(proj, apply2(wm, psi, 2, 2), 1, 2);
                const auto wp = apply2(wm, apply2(proj, psi, 1, 2), 2, 2);
                CHECK(max_diff(pw, wp) < 1e-9);
            }
        }
    }
}

TEST_CASE("Eve's readout statistics do not depend on measuring before or after Bob") {
    const auto attack = double_cnot();
    const auto& cb = default_codebook();
    for (int sym = 0; sym < 4; ++sym) {
        const auto branches = enumerate_branches(Symbol(sym), attack);
        REQUIRE(branches.size() == 1);
        const auto& joint = branches[0].state;

        // before Bob
        const auto before = outcome_distribution(joint, attack.readout()->basis, {3});

        // after Bob: average over his outcome branches
        std::vector<double> after(2, 0.0);
        const auto bob = outcome_distribution(joint, cb.states(), {1, 2});
        for (std::size_t o = 0; o < 4; ++o) {
            if (bob.prob(o) <= 1e-15) continue;
            const auto [p, post] = project_outcome(joint, cb.states(), {1, 2}, o);
            const auto anc = outcome_distribution(post, attack.readout()->basis, {3});
            for (std::size_t a = 0; a < 2; ++a) after[a] += p * anc.prob(a);
        }
        for (std::size_t a = 0; a < 2; ++a) {
            CHECK(before.prob(a) == doctest::Approx(after[a]).epsilon(1e-12));
        }
    }
}

TEST_CASE("attack unitaries satisfy U-dagger-U = I") {
    for (const auto& attack : {no_attack(), double_cnot()}) {
        for (const SlotAction* action : {&attack.slot1(), &attack.slot2()}) {
            const auto& u = std::get<UnitaryOp>(*action);
            for (std::size_t i = 0; i < u.dim(); ++i) {
                for (std::size_t j = 0; j < u.dim(); ++j) {
                    cplx s{0, 0};
                    for (std::size_t k = 0; k < u.dim(); ++k) {
                        s += std::conj(u.at(k, i)) * u.at(k, j);
                    }
                    const cplx want = (i == j) ? cplx{1} : cplx{0};
                    CHECK(std::abs(s - want) < 1e-9);
                }
            }
        }
    }
}
