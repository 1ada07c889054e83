#pragma once

#include <string>

#include "curalight/net/types.hpp"
#include "curalight/sim/types.hpp"
#include "curalight/util/json_util.hpp"

namespace curalight::net {

struct Scenario {
    RoadNetwork network;
    sim::DemandProfile demand;
    sim::SimConfig config;
    json controller = json::object(); // raw `sim.controller` section, parsed by the runner
    std::string name;                 // file path or generator tag, echoed in reports
};

// Parses and validates a scenario document. Pure function of the bytes.
Scenario parse_scenario(const std::string& text, const std::string& name);

// Reads `path` and delegates to parse_scenario.
Scenario load_scenario(const std::string& path);

// Re-checks every structural invariant (lane references, phase compatibility,
// duration bounds, demand routes). parse_scenario always calls this; exposed
// for generated networks and tests.
void validate_network(const RoadNetwork& net);
void validate_demand(const RoadNetwork& net, const sim::DemandProfile& demand);

// Serializes a scenario back to the document format (used by the grid
// generator's --emit flag; load(emit(x)) is structurally identical to x).
std::string scenario_to_json(const Scenario& sc);

} // namespace curalight::net
