#include "curalight/net/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "curalight/net/conflicts.hpp"
#include "curalight/net/phases.hpp"
#include "curalight/util/errors.hpp"

namespace curalight::net {

const char* to_string(Turn t) {
    switch (t) {
        case Turn::Left: return "left";
        case Turn::Through: return "through";
        case Turn::Right: return "right";
    }
    return "through";
}

Turn turn_from_string(const std::string& s) {
    if (s == "left") return Turn::Left;
    if (s == "through") return Turn::Through;
    if (s == "right") return Turn::Right;
    throw ParseError("unknown turn class \"" + s + "\" (expected left|through|right)");
}

void RoadNetwork::finalize() {
    intersection_index.clear();
    lane_dense.clear();
    dense_lane.clear();
    lane_sink.clear();
    movement_at_sink.clear();

    for (std::size_t i = 0; i < intersections.size(); ++i) {
        intersection_index[intersections[i].id] = i;
    }
    for (const auto& [id, lane] : lanes) (void)lane, dense_lane.push_back(id);
    std::sort(dense_lane.begin(), dense_lane.end());
    for (std::size_t i = 0; i < dense_lane.size(); ++i) lane_dense[dense_lane[i]] = i;

    for (const auto& ix : intersections) {
        for (LaneId l : ix.incoming) lane_sink[l] = ix.id;
        for (std::size_t m = 0; m < ix.movements.size(); ++m) {
            const Movement& mv = ix.movements[m];
            movement_at_sink[mv.from_lane][mv.to_lane] = m;
        }
    }
}

namespace {

std::string ix_tag(NodeId id) { return "intersection " + std::to_string(id); }

void validate_intersection(const RoadNetwork& net, const Intersection& ix) {
    if (ix.incoming.empty()) throw ValidationError(ix_tag(ix.id) + ": no incoming lanes");
    if (ix.outgoing.empty()) throw ValidationError(ix_tag(ix.id) + ": no outgoing lanes");
    if (!(ix.d_min_s > 0.0) || ix.d_min_s > ix.d_max_s) {
        throw ValidationError(ix_tag(ix.id) + ": invalid duration bounds d_min=" +
                              std::to_string(ix.d_min_s) + " d_max=" + std::to_string(ix.d_max_s));
    }

    const std::unordered_set<LaneId> in(ix.incoming.begin(), ix.incoming.end());
    const std::unordered_set<LaneId> out(ix.outgoing.begin(), ix.outgoing.end());
    for (LaneId l : ix.incoming) {
        if (!net.lanes.count(l)) {
            throw ValidationError(ix_tag(ix.id) + ": incoming lane " + std::to_string(l) +
                                  " is not declared in lanes");
        }
    }
    for (LaneId l : ix.outgoing) {
        if (!net.lanes.count(l)) {
            throw ValidationError(ix_tag(ix.id) + ": outgoing lane " + std::to_string(l) +
                                  " is not declared in lanes");
        }
    }

    std::unordered_set<MovementId> movement_ids;
    for (const Movement& m : ix.movements) {
        const std::string tag = "movement " + std::to_string(m.id);
        if (!movement_ids.insert(m.id).second) {
            throw ValidationError(ix_tag(ix.id) + ": duplicate " + tag);
        }
        if (!in.count(m.from_lane)) {
            throw ValidationError(tag + ": from-lane " + std::to_string(m.from_lane) +
                                  " is missing from incoming lanes of " + ix_tag(ix.id));
        }
        if (!out.count(m.to_lane)) {
            throw ValidationError(tag + ": to-lane " + std::to_string(m.to_lane) +
                                  " is missing from outgoing lanes of " + ix_tag(ix.id));
        }
    }

    if (ix.phases.empty()) throw ValidationError(ix_tag(ix.id) + ": empty phase set");
    std::set<std::vector<MovementId>> seen;
    std::unordered_set<MovementId> covered;
    for (const Phase& p : ix.phases) {
        for (MovementId m : p.movements) {
            if (!movement_ids.count(m)) {
                throw ValidationError(ix_tag(ix.id) + ": phase " + std::to_string(p.index) +
                                      " names unknown movement " + std::to_string(m));
            }
            covered.insert(m);
        }
        auto sorted = p.movements;
        std::sort(sorted.begin(), sorted.end());
        if (!seen.insert(sorted).second) {
            throw ValidationError(ix_tag(ix.id) + ": duplicate phase with movements of phase " +
                                  std::to_string(p.index));
        }
    }
    for (const Movement& m : ix.movements) {
        if (!covered.count(m.id)) {
            throw ValidationError(ix_tag(ix.id) + ": movement " + std::to_string(m.id) +
                                  " appears in no phase");
        }
    }
}

} // namespace

void validate_network(const RoadNetwork& net) {
    if (net.intersections.empty()) throw ValidationError("no intersections");

    std::unordered_set<NodeId> node_ids;
    for (const auto& ix : net.intersections) {
        if (!node_ids.insert(ix.id).second) {
            throw ValidationError("duplicate intersection id " + std::to_string(ix.id));
        }
    }

    std::unordered_map<LaneId, int> lane_road_uses;
    for (std::size_t r = 0; r < net.roads.size(); ++r) {
        const Road& road = net.roads[r];
        const std::string tag = "road " + std::to_string(road.from) + "->" + std::to_string(road.to);
        if (!node_ids.count(road.from)) {
            throw ValidationError(tag + ": from-intersection " + std::to_string(road.from) +
                                  " does not exist");
        }
        if (!node_ids.count(road.to)) {
            throw ValidationError(tag + ": to-intersection " + std::to_string(road.to) +
                                  " does not exist");
        }
        for (LaneId l : road.lanes) {
            if (!net.lanes.count(l)) {
                throw ValidationError(tag + ": lane " + std::to_string(l) +
                                      " is not declared in lanes");
            }
            lane_road_uses[l] += 1;
        }
    }
    for (const auto& [id, lane] : net.lanes) {
        (void)lane;
        const auto it = lane_road_uses.find(id);
        if (it == lane_road_uses.end()) {
            throw ValidationError("lane " + std::to_string(id) + " belongs to no road");
        }
        if (it->second != 1) {
            throw ValidationError("lane " + std::to_string(id) + " belongs to " +
                                  std::to_string(it->second) + " roads (must be exactly one)");
        }
        if (!(net.lanes.at(id).length_m > 0.0) || !(net.lanes.at(id).speed_mps > 0.0)) {
            throw ValidationError("lane " + std::to_string(id) +
                                  ": length and speed must be positive");
        }
    }

    // incoming/outgoing sets must agree with road directions
    std::unordered_map<LaneId, NodeId> road_head, road_tail;
    for (const Road& road : net.roads) {
        for (LaneId l : road.lanes) {
            road_tail[l] = road.from;
            road_head[l] = road.to;
        }
    }
    for (const auto& ix : net.intersections) {
        for (LaneId l : ix.incoming) {
            auto it = road_head.find(l);
            if (it == road_head.end() || it->second != ix.id) {
                throw ValidationError(ix_tag(ix.id) + ": incoming lane " + std::to_string(l) +
                                      " is not on a road ending here");
            }
        }
        for (LaneId l : ix.outgoing) {
            auto it = road_tail.find(l);
            if (it == road_tail.end() || it->second != ix.id) {
                throw ValidationError(ix_tag(ix.id) + ": outgoing lane " + std::to_string(l) +
                                      " is not on a road starting here");
            }
        }
        validate_intersection(net, ix);
    }
}

void validate_demand(const RoadNetwork& net, const sim::DemandProfile& demand) {
    for (std::size_t e = 0; e < demand.entries.size(); ++e) {
        const auto& entry = demand.entries[e];
        const std::string tag = "demand entry " + std::to_string(e);
        if (entry.route.size() < 2) {
            throw ValidationError(tag + ": route needs at least an entry lane and an exit lane");
        }
        for (LaneId l : entry.route) {
            if (!net.lanes.count(l)) {
                throw ValidationError(tag + ": route lane " + std::to_string(l) + " does not exist");
            }
        }
        for (std::size_t i = 0; i + 1 < entry.route.size(); ++i) {
            const LaneId a = entry.route[i];
            const LaneId b = entry.route[i + 1];
            const auto ita = net.movement_at_sink.find(a);
            if (ita == net.movement_at_sink.end() || !ita->second.count(b)) {
                throw ValidationError(tag + ": no movement connects lane " + std::to_string(a) +
                                      " to lane " + std::to_string(b));
            }
        }
        for (const auto& w : entry.windows) {
            if (w.veh_per_hour < 0.0) {
                throw ValidationError(tag + ": negative arrival rate");
            }
            if (w.until_s < w.from_s) {
                throw ValidationError(tag + ": rate window ends before it starts");
            }
        }
    }
}

namespace {

Intersection parse_intersection(const json& j, const RoadNetwork& net) {
    require_keys(j, "intersection",
                 {"id", "incoming", "outgoing", "movements", "bearings", "phases", "conflicts",
                  "d_min", "d_max"});
    Intersection ix;
    ix.id = require_field(j, "intersection", "id").get<NodeId>();
    const std::string where = ix_tag(ix.id);
    ix.incoming = require_field(j, where, "incoming").get<std::vector<LaneId>>();
    ix.outgoing = require_field(j, where, "outgoing").get<std::vector<LaneId>>();
    ix.d_min_s = get_or(j, "d_min", 5.0);
    ix.d_max_s = get_or(j, "d_max", 60.0);

    for (const auto& jm : require_field(j, where, "movements")) {
        require_keys(jm, where + " movement", {"id", "from", "to", "turn"});
        Movement m;
        m.id = require_field(jm, where + " movement", "id").get<MovementId>();
        m.from_lane = require_field(jm, where + " movement", "from").get<LaneId>();
        m.to_lane = require_field(jm, where + " movement", "to").get<LaneId>();
        m.turn = turn_from_string(require_field(jm, where + " movement", "turn").get<std::string>());
        ix.movements.push_back(m);
    }

    if (j.contains("bearings")) {
        for (const auto& [key, val] : j.at("bearings").items()) {
            ix.bearing_deg[std::stoll(key)] = val.get<double>();
        }
    }

    if (j.contains("phases")) {
        int index = 1;
        for (const auto& jp : j.at("phases")) {
            Phase p;
            p.index = index++;
            p.movements = jp.get<std::vector<MovementId>>();
            std::sort(p.movements.begin(), p.movements.end());
            ix.phases.push_back(std::move(p));
        }
    } else {
        ConflictRelation rel;
        if (j.contains("conflicts")) {
            std::vector<std::pair<MovementId, MovementId>> pairs;
            for (const auto& jp : j.at("conflicts")) {
                if (!jp.is_array() || jp.size() != 2) {
                    throw ParseError(where + ": each conflict must be a [a, b] movement pair");
                }
                pairs.emplace_back(jp[0].get<MovementId>(), jp[1].get<MovementId>());
            }
            rel = conflicts_from_pairs(ix, pairs);
        } else {
            rel = default_conflicts(ix);
        }
        ix.phases = enumerate_phases(ix.movements, rel);
    }
    (void)net;
    return ix;
}

} // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(name + ": " + e.what());
    }

    try {
        require_keys(doc, "scenario", {"lanes", "roads", "intersections", "demand", "sim"});

        Scenario sc;
        sc.name = name;

        for (const auto& jl : require_field(doc, "scenario", "lanes")) {
            require_keys(jl, "lane", {"id", "length", "speed"});
            Lane lane;
            lane.id = require_field(jl, "lane", "id").get<LaneId>();
            lane.length_m = require_field(jl, "lane", "length").get<double>();
            lane.speed_mps = require_field(jl, "lane", "speed").get<double>();
            if (sc.network.lanes.count(lane.id)) {
                throw ValidationError("duplicate lane id " + std::to_string(lane.id));
            }
            sc.network.lanes[lane.id] = lane;
        }

        for (const auto& jr : require_field(doc, "scenario", "roads")) {
            require_keys(jr, "road", {"from", "to", "lanes"});
            Road road;
            road.from = require_field(jr, "road", "from").get<NodeId>();
            road.to = require_field(jr, "road", "to").get<NodeId>();
            road.lanes = require_field(jr, "road", "lanes").get<std::vector<LaneId>>();
            sc.network.roads.push_back(std::move(road));
        }

        for (const auto& ji : require_field(doc, "scenario", "intersections")) {
            sc.network.intersections.push_back(parse_intersection(ji, sc.network));
        }

        sc.network.finalize();
        validate_network(sc.network);

        if (doc.contains("demand")) {
            const json& jd = doc.at("demand");
            require_keys(jd, "demand", {"entries"});
            for (const auto& je : get_or(jd, "entries", json::array())) {
                require_keys(je, "demand entry", {"route", "rates"});
                sim::DemandEntry entry;
                entry.route = require_field(je, "demand entry", "route").get<std::vector<LaneId>>();
                for (const auto& jw : require_field(je, "demand entry", "rates")) {
                    require_keys(jw, "rate window", {"from_s", "until_s", "veh_per_hour"});
                    sim::RateWindow w;
                    w.from_s = require_field(jw, "rate window", "from_s").get<double>();
                    w.until_s = require_field(jw, "rate window", "until_s").get<double>();
                    w.veh_per_hour =
                        require_field(jw, "rate window", "veh_per_hour").get<double>();
                    entry.windows.push_back(w);
                }
                sc.demand.entries.push_back(std::move(entry));
            }
        }
        validate_demand(sc.network, sc.demand);

        if (doc.contains("sim")) {
            const json& js = doc.at("sim");
            require_keys(js, "sim",
                         {"tick", "saturation_flow", "lost_time", "horizon", "seed",
                          "vehicle_length", "controller"});
            sc.config.tick_s = get_or(js, "tick", 1.0);
            sc.config.saturation_vps = get_or(js, "saturation_flow", 0.5);
            sc.config.lost_time_s = get_or(js, "lost_time", 3.0);
            sc.config.horizon = get_or(js, "horizon", sim::Tick{3600});
            sc.config.seed = get_or(js, "seed", std::uint64_t{1});
            sc.config.vehicle_length_m = get_or(js, "vehicle_length", 7.5);
            if (js.contains("controller")) sc.controller = js.at("controller");
        }
        if (!(sc.config.tick_s > 0.0)) throw ValidationError("sim.tick must be > 0");
        if (!(sc.config.saturation_vps > 0.0)) {
            throw ValidationError("sim.saturation_flow must be > 0");
        }
        if (sc.config.lost_time_s < 0.0) throw ValidationError("sim.lost_time must be >= 0");

        return sc;
    } catch (const json::exception& e) {
        throw ParseError(name + ": " + e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

std::string scenario_to_json(const Scenario& sc) {
    json doc;

    json lanes = json::array();
    std::vector<LaneId> ids;
    ids.reserve(sc.network.lanes.size());
    for (const auto& [id, lane] : sc.network.lanes) (void)lane, ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    for (LaneId id : ids) {
        const Lane& l = sc.network.lanes.at(id);
        lanes.push_back({{"id", l.id}, {"length", l.length_m}, {"speed", l.speed_mps}});
    }
    doc["lanes"] = std::move(lanes);

    json roads = json::array();
    for (const Road& r : sc.network.roads) {
        roads.push_back({{"from", r.from}, {"to", r.to}, {"lanes", r.lanes}});
    }
    doc["roads"] = std::move(roads);

    json ixs = json::array();
    for (const Intersection& ix : sc.network.intersections) {
        json ji;
        ji["id"] = ix.id;
        ji["incoming"] = ix.incoming;
        ji["outgoing"] = ix.outgoing;
        json movements = json::array();
        for (const Movement& m : ix.movements) {
            movements.push_back(
                {{"id", m.id}, {"from", m.from_lane}, {"to", m.to_lane}, {"turn", to_string(m.turn)}});
        }
        ji["movements"] = std::move(movements);
        if (!ix.bearing_deg.empty()) {
            json bearings = json::object();
            std::vector<LaneId> bl;
            for (const auto& [lane, deg] : ix.bearing_deg) (void)deg, bl.push_back(lane);
            std::sort(bl.begin(), bl.end());
            for (LaneId lane : bl) bearings[std::to_string(lane)] = ix.bearing_deg.at(lane);
            ji["bearings"] = std::move(bearings);
        }
        json phases = json::array();
        for (const Phase& p : ix.phases) phases.push_back(p.movements);
        ji["phases"] = std::move(phases);
        ji["d_min"] = ix.d_min_s;
        ji["d_max"] = ix.d_max_s;
        ixs.push_back(std::move(ji));
    }
    doc["intersections"] = std::move(ixs);

    json entries = json::array();
    for (const auto& e : sc.demand.entries) {
        json je;
        je["route"] = e.route;
        json rates = json::array();
        for (const auto& w : e.windows) {
            rates.push_back(
                {{"from_s", w.from_s}, {"until_s", w.until_s}, {"veh_per_hour", w.veh_per_hour}});
        }
        je["rates"] = std::move(rates);
        entries.push_back(std::move(je));
    }
    doc["demand"] = {{"entries", std::move(entries)}};

    doc["sim"] = {{"tick", sc.config.tick_s},
                  {"saturation_flow", sc.config.saturation_vps},
                  {"lost_time", sc.config.lost_time_s},
                  {"horizon", sc.config.horizon},
                  {"seed", sc.config.seed},
                  {"vehicle_length", sc.config.vehicle_length_m}};
    if (!sc.controller.empty()) doc["sim"]["controller"] = sc.controller;

    return doc.dump(2) + "\n";
}

} // namespace curalight::net
