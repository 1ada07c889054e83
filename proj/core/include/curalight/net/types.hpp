#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace curalight::net {

using LaneId = std::int64_t;
using NodeId = std::int64_t;
using MovementId = std::int64_t;

enum class Turn { Left, Through, Right };

const char* to_string(Turn t);
Turn turn_from_string(const std::string& s);

struct Lane {
    LaneId id = 0;
    double length_m = 0.0;
    double speed_mps = 0.0; // free-flow
};

struct Road {
    NodeId from = 0;
    NodeId to = 0;
    std::vector<LaneId> lanes;
};

// Feasible (incoming lane, outgoing lane) connection at one intersection.
struct Movement {
    MovementId id = 0;
    LaneId from_lane = 0;
    LaneId to_lane = 0;
    Turn turn = Turn::Through;
};

// Set of mutually compatible movements given green together. `index` is
// 1-based and unique within its intersection.
struct Phase {
    int index = 0;
    std::vector<MovementId> movements; // sorted ascending

    bool operator==(const Phase&) const = default;
};

// (phase index, green duration) pair chosen at each decision step.
struct TimingAction {
    int phase = 1;        // 1-based
    double duration_s = 0.0;

    bool operator==(const TimingAction&) const = default;
};

// Symmetric, irreflexive conflict predicate over one intersection's movements,
// addressed by position in the intersection's movement list.
class ConflictRelation {
  public:
    ConflictRelation() = default;
    explicit ConflictRelation(std::size_t n) : n_(n), bits_(n * n, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t a, std::size_t b) {
        if (a == b) return; // irreflexive by construction
        bits_[a * n_ + b] = 1;
        bits_[b * n_ + a] = 1;
    }

    bool conflicts(std::size_t a, std::size_t b) const {
        if (a == b) return false;
        return bits_[a * n_ + b] != 0;
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

struct Intersection {
    NodeId id = 0;
    std::vector<LaneId> incoming;  // ordered
    std::vector<LaneId> outgoing;  // ordered
    std::vector<Movement> movements;
    std::vector<Phase> phases;
    double d_min_s = 5.0;
    double d_max_s = 60.0;
    // Approach bearing per incoming lane: travel heading in degrees, 0 = north,
    // clockwise positive. Present when the scenario supplies geometry.
    std::unordered_map<LaneId, double> bearing_deg;

    int phase_count() const { return static_cast<int>(phases.size()); }
    const Phase& phase_at(int index_1based) const { return phases[static_cast<std::size_t>(index_1based - 1)]; }
};

struct RoadNetwork {
    std::vector<Intersection> intersections;
    std::vector<Road> roads;
    std::unordered_map<LaneId, Lane> lanes;

    // Derived lookups, filled by finalize() after load/generation.
    std::unordered_map<NodeId, std::size_t> intersection_index;
    std::unordered_map<LaneId, std::size_t> lane_dense; // lane id -> dense [0, n)
    std::vector<LaneId> dense_lane;                     // dense -> lane id
    // Intersection whose incoming set contains the lane (queues form there).
    std::unordered_map<LaneId, NodeId> lane_sink;
    // movement lookup: (intersection, from lane, to lane) -> movement position
    // in that intersection's movement vector.
    std::unordered_map<LaneId, std::unordered_map<LaneId, std::size_t>> movement_at_sink;

    std::size_t lane_count() const { return dense_lane.size(); }

    const Intersection& intersection(NodeId id) const {
        return intersections[intersection_index.at(id)];
    }

    void finalize(); // builds the derived lookups
};

} // namespace curalight::net
