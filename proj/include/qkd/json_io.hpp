#pragma once

#include <json.hpp>

#include "qkd/analysis.hpp"
#include "qkd/attack.hpp"
#include "qkd/session.hpp"

namespace qkd {

// JSON conventions shared by the CLI and the serialization tests: field
// order is fixed (declaration order of the structs), complex numbers are
// [re, im] pairs, absent optionals are null. ordered_json keeps insertion
// order so identical values always print identically.
using json = nlohmann::ordered_json;

json to_json(cplx z);
json to_json(const ActionRecord& record);
json to_json(const ChannelTranscript& transcript);
json to_json(const SessionResult& result);
json to_json(const EfficiencyReport& report);
json to_json(const MorReport& report);
json to_json(const AttackReport& report);

} // namespace qkd
