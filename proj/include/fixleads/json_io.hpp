#pragma once

#include "certificate.hpp"
#include "event_system.hpp"
#include "oracle.hpp"
#include "verdict.hpp"

#include <json.hpp>

namespace fixleads
{

using json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

// {"x": 0, "flag": true, "mode": "busy"} with keys in declaration order.
json state_to_json( const state_space& space, state_index s );
state_index state_from_json( const state_space& space, const json& j );

// Sorted list of state objects.
json set_to_json( const state_set& set );
state_set set_from_json( const state_space& space, const json& j );

json trace_to_json( const iterate_trace& trace );

json counterexample_to_json( const event_system& sys, const counterexample& cex );

json verdict_to_json( const event_system& sys, const verdict& v );

json certificate_to_json( const event_system& sys, const certificate& cert );
certificate certificate_from_json( const event_system& sys, const json& j );

// Events with guard sets and adjacency lists, plus init.
json system_to_json( const event_system& sys );

} // namespace fixleads
