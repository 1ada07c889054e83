#pragma once

#include "curalight/net/scenario.hpp"

namespace curalight::net {

// Synthetic R x C signalized grid with boundary stubs on the perimeter.
// Boundary nodes carry no movements (vehicles enter/leave through them), so
// they enumerate to a single empty phase. Demand is straight crossing routes,
// one per row direction and one per column direction, at `veh_per_hour` each.
struct GridParams {
    int rows = 3;
    int cols = 3;
    double lane_length_m = 300.0;
    double speed_mps = 10.0;
    double veh_per_hour = 300.0;
    double demand_until_s = 0.0; // 0 -> 90% of the horizon
    double d_min_s = 5.0;
    double d_max_s = 60.0;
    sim::SimConfig sim;
};

Scenario make_grid_scenario(const GridParams& params);

} // namespace curalight::net
