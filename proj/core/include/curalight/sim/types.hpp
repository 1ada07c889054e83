#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "curalight/net/types.hpp"

namespace curalight::sim {

using Tick = std::int64_t;
using VehicleId = std::int64_t;

struct SimConfig {
    double tick_s = 1.0;
    double saturation_vps = 0.5; // vehicles/second discharged per lane at green
    double lost_time_s = 3.0;    // all-red on phase change
    Tick horizon = 3600;
    std::uint64_t seed = 1;
    double vehicle_length_m = 7.5; // queue-count -> meters factor for AQL

    Tick to_ticks(double seconds) const {
        const double t = seconds / tick_s;
        Tick k = static_cast<Tick>(t + 0.5);
        return k < 1 && seconds > 0 ? 1 : k;
    }
};

struct RateWindow {
    double from_s = 0.0;
    double until_s = 0.0; // exclusive
    double veh_per_hour = 0.0;
};

// One demand entry: vehicles spawn into the first lane's queue and follow the
// route; the final lane is traversed and then the vehicle leaves the network.
struct DemandEntry {
    std::vector<net::LaneId> route; // >= 2 lanes, consecutive pairs joined by movements
    std::vector<RateWindow> windows;
};

struct DemandProfile {
    std::vector<DemandEntry> entries;

    double rate_at(std::size_t entry, double time_s) const {
        for (const auto& w : entries[entry].windows) {
            if (time_s >= w.from_s && time_s < w.until_s) return w.veh_per_hour;
        }
        return 0.0;
    }
};

struct VehicleRecord {
    VehicleId id = 0;
    Tick spawn_tick = 0;
    std::optional<Tick> completion_tick;
    Tick waiting_ticks = 0; // ticks spent in any queue
    std::size_t demand_entry = 0;
};

struct InTransit {
    VehicleId vehicle = 0;
    net::LaneId lane = 0;
    Tick remaining = 0;
};

struct SignalState {
    net::TimingAction action{1, 0.0};
    Tick remaining_green = 0;  // ticks of green left once lost time has elapsed
    Tick lost_countdown = 0;   // all-red ticks left after a phase change
    Tick elapsed_in_phase = 0; // ticks since the current action was applied

    bool needs_decision() const { return remaining_green == 0 && lost_countdown == 0; }
};

struct SimState {
    Tick clock = 0;
    // Indexed by dense lane index (net::RoadNetwork::lane_dense).
    std::vector<std::deque<VehicleId>> queues;
    std::vector<double> discharge_credit; // fractional carryover per lane
    std::vector<InTransit> transit;
    std::vector<SignalState> signals; // indexed like net.intersections
    std::vector<VehicleRecord> records;
    std::vector<std::uint32_t> route_pos; // per vehicle: index into its route
    VehicleId spawned = 0;
    VehicleId completed = 0;

    // AQL accumulators: per-tick sum of queue counts over all incoming lanes.
    double queue_tick_sum = 0.0;
    Tick metered_ticks = 0;

    int queue_len(std::size_t dense_lane) const {
        return static_cast<int>(queues[dense_lane].size());
    }
    std::int64_t queued_total() const {
        std::int64_t n = 0;
        for (const auto& q : queues) n += static_cast<std::int64_t>(q.size());
        return n;
    }
};

} // namespace curalight::sim
