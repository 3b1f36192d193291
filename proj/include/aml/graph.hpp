#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "aml/types.hpp"

namespace aml {

enum class EdgeLabel : uint8_t { legitimate = 0, suspicious = 1, unknown = 2 };

// Daily aggregate over one ordered (src, dst) pair; direction follows the
// money flow. One event per (src, dst, day).
struct EdgeEvent {
    uint32_t src = 0;
    uint32_t dst = 0;
    int day = 0;
    double amount = 0.0;
    EdgeLabel label = EdgeLabel::legitimate;
};

// Dual retention: suspicious events are kept for tws_days, legitimate and
// not-yet-labeled events for twl_days. A window of 0 means events of that
// class never enter the graph.
struct WindowConfig {
    int twl_days = 60;
    int tws_days = 60;
    int label_delay_days = 0;

    void validate() const;  // throws UsageError
    int retention_days(EdgeLabel cls) const {
        return cls == EdgeLabel::suspicious ? tws_days : twl_days;
    }
};

struct LabelUpdate {
    uint32_t src = 0;
    uint32_t dst = 0;
    int day = 0;
    EdgeLabel label = EdgeLabel::legitimate;
};

// 14 unweighted + 14 amount-weighted degree features.
constexpr size_t kDegreeFeatureCount = 28;
const std::array<std::string, kDegreeFeatureCount>& degree_feature_names();

// The retained transaction graph as of one evaluation day. advance_day is
// the single-writer operation; every query (including degree_features and
// the walk accessors) is read-only and safe to call concurrently between
// advances.
class GraphSnapshot {
public:
    explicit GraphSnapshot(WindowConfig config, int as_of_day = -1)
        : config_(config), as_of_(as_of_day) {
        config_.validate();
    }

    // Moves to day = as_of_day + 1: applies label updates (which may change
    // an event's retention class), expires events that fall out of their
    // class window, then adds the day's events. With label_delay_days > 0
    // new events enter as `unknown` regardless of their carried label.
    void advance_day(int day, std::span<const EdgeEvent> new_events,
                     std::span<const LabelUpdate> updates = {});

    // Reference construction straight from the full event stream (events
    // carry true labels; the delay view is derived from as_of_day).
    static GraphSnapshot build_from_scratch(std::span<const EdgeEvent> all_events,
                                            WindowConfig config, int as_of_day);

    int as_of_day() const { return as_of_; }
    const WindowConfig& config() const { return config_; }

    bool has_node(uint32_t node) const { return nodes_.count(node) != 0; }
    size_t n_nodes() const { return nodes_.size(); }
    size_t n_edges() const { return n_edges_; }

    // Distinct undirected neighbors, ascending; empty span for absent nodes.
    std::span<const uint32_t> neighbors(uint32_t node) const;

    // Cached event-count and amount-weighted degrees; zeros for absent nodes.
    struct NodeDegrees {
        int in_events = 0;
        int out_events = 0;
        double in_weight = 0.0;
        double out_weight = 0.0;
    };
    NodeDegrees degrees(uint32_t node) const;

    // Target in/out degree plus successors' and predecessors' mean/min/max
    // in- and out-degrees, unweighted then weighted. Absent targets and
    // empty neighbor sets give zeros.
    std::array<double, kDegreeFeatureCount> degree_features(uint32_t target) const;

    // Canonical views for equivalence tests, sorted.
    struct Edge {
        uint32_t src;
        uint32_t dst;
        int day;
        double amount;
        EdgeLabel cls;
        auto operator<=>(const Edge&) const = default;
    };
    std::vector<Edge> edge_set() const;
    std::vector<uint32_t> node_set() const;

    // Debug dump: src,dst,day,amount,label rows.
    void write_edge_csv(const std::string& path,
                        const std::vector<std::string>& account_names) const;

private:
    struct NbrStat {
        int out_events = 0;
        int in_events = 0;
        double out_weight = 0.0;
        double in_weight = 0.0;
        bool empty() const { return out_events == 0 && in_events == 0; }
    };
    struct NodeEntry {
        std::map<uint32_t, NbrStat> nbrs;  // ordered: deterministic iteration
        NodeDegrees deg;
        std::vector<uint32_t> nbr_cache;
    };
    struct StoredEvent {
        uint32_t src;
        uint32_t dst;
        double amount;
        EdgeLabel cls;
    };

    void add_event(const EdgeEvent& ev, EdgeLabel cls);
    void remove_event(const StoredEvent& ev);
    void rebuild_dirty_caches();

    WindowConfig config_;
    int as_of_ = -1;
    size_t n_edges_ = 0;
    std::unordered_map<uint32_t, NodeEntry> nodes_;
    std::map<int, std::vector<StoredEvent>> by_day_;
    std::vector<uint32_t> dirty_;
};

// Daily (src, dst) aggregation of a transaction stream: amounts summed, a
// pair-day is suspicious if any constituent transaction is. Sorted by
// (day, src, dst).
std::vector<EdgeEvent> events_from_transactions(const Dataset& dataset);

// Drives a snapshot over a day-sorted event stream, feeding label updates
// when their delay elapses. advance_to must be called day by day.
class GraphStream {
public:
    GraphStream(std::vector<EdgeEvent> events, WindowConfig config, int start_day = 0);

    const GraphSnapshot& advance_to(int day);
    const GraphSnapshot& snapshot() const { return snapshot_; }

private:
    std::span<const EdgeEvent> events_on(int day) const;

    std::vector<EdgeEvent> events_;                 // sorted by day
    std::unordered_map<int, std::pair<size_t, size_t>> day_ranges_;
    GraphSnapshot snapshot_;
};

}  // namespace aml
