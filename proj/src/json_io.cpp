#include "qkd/json_io.hpp"

namespace qkd {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const ActionRecord& record) {
    json j;
    j["slot"] = record.slot;
    j["kind"] = record.measured ? "measure-forward" : "unitary";
    if (record.measured) {
        j["outcome"] = *record.outcome;
        json fwd = json::array();
        for (const auto& a : record.forwarded) fwd.push_back(to_json(a));
        j["forwarded"] = std::move(fwd);
    }
    return j;
}

json to_json(const ChannelTranscript& transcript) {
    json j;
    j["attack"] = transcript.attack_name;
    json records = json::array();
    for (const auto& r : transcript.records) {
        json jr;
        jr["sent"] = r.sent.value();
        json actions = json::array();
        for (const auto& a : r.actions) actions.push_back(to_json(a));
        jr["actions"] = std::move(actions);
        jr["bob"] = r.bob.value();
        jr["eve"] = r.eve.has_value() ? json(*r.eve) : json(nullptr);
        records.push_back(std::move(jr));
    }
    j["records"] = std::move(records);
    return j;
}

json to_json(const SessionResult& result) {
    json j;
    json alice = json::array();
    for (const auto& s : result.alice_symbols) alice.push_back(s.value());
    j["alice_symbols"] = std::move(alice);
    json bob = json::array();
    for (const auto& s : result.bob_symbols) bob.push_back(s.value());
    j["bob_symbols"] = std::move(bob);
    j["check_indices"] = result.check_indices;
    j["symbol_error_rate_check"] = result.symbol_error_rate_check;
    j["sifted_key_bits"] = result.sifted_key_bits;
    j["efficiency"] = result.efficiency;
    j["aborted"] = result.aborted;
    j["transcript"] = to_json(result.transcript);
    return j;
}

json to_json(const EfficiencyReport& report) {
    json j;
    j["secret_bits"] = report.secret_bits;
    j["qubits_sent"] = report.qubits_sent;
    j["classical_bits"] = report.classical_bits;
    j["efficiency"] = report.efficiency;
    return j;
}

json to_json(const MorReport& report) {
    json j;
    j["pair"] = json::array({report.pair.first, report.pair.second});
    j["rho1_overlap"] = report.rho1_overlap;
    j["rho1_distance"] = report.rho1_distance;
    j["rho2_overlap"] = report.rho2_overlap;
    j["passes"] = report.passes;
    return j;
}

json to_json(const AttackReport& report) {
    json j;
    j["attack"] = report.attack_name;
    json dists = json::array();
    for (const auto& d : report.bob_distributions) dists.push_back(d.probabilities());
    j["bob_distributions"] = std::move(dists);
    j["symbol_error_rate"] = report.symbol_error_rate;
    j["eve_guess_probability"] = report.eve_guess_probability;
    return j;
}

} // namespace qkd
