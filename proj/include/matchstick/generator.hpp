#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "matchstick/criteria.hpp"
#include "matchstick/plane_graph.hpp"

namespace matchstick {

struct SearchConfig {
    enum class Mode { TauTarget, ClassifyK };
    Mode mode = Mode::TauTarget;

    int target_tau = 4;        // TauTarget mode: 0, 2 or 4
    std::set<int> target_ks;   // ClassifyK mode: requested outer sizes

    int max_n = 16;
    int s_max = 12;                     // largest face glued by one move
    bool require_two_connected = true;  // excludes vertex gluings
    std::vector<std::string> filters;   // criteria ids, see filter_registry()
    int parallel_width = 1;
    std::uint64_t max_nodes = 0;  // 0 = unlimited; graceful stop when hit

    static SearchConfig tau_target(int tau, int max_n);
    static SearchConfig classify(std::set<int> ks, int max_n, bool two_connected);
};

struct SearchNode {
    PlaneGraph graph;
    int depth = 0;  // faces added so far
    CanonicalCode code;
};

struct EnumStats {
    std::uint64_t expanded = 0;   // nodes visited
    std::uint64_t survivors = 0;  // candidates emitted
    std::uint64_t interior = 0;   // visited nodes that were not candidates
    std::map<std::string, std::uint64_t> pruned_by_rule;
    std::uint64_t pruned_total() const {
        std::uint64_t s = 0;
        for (auto& [k, v] : pruned_by_rule) s += v;
        return s;
    }
    double wall_seconds = 0.0;
    bool budget_exceeded = false;
};

SearchNode seed();

// All children of `node` reachable by gluing one face onto the outer
// boundary, before any dedup.  Deterministic order.
std::vector<SearchNode> expansions(const SearchNode& node, const SearchConfig& config);

// Candidate sink: the surviving node plus the verdicts of the configured
// filters (all passing).  Called exactly once per canonical class.
using SurvivorSink = std::function<void(const SearchNode&, const std::vector<Verdict>&)>;

// Depth-first exhaustive enumeration from the seed triangle with global
// canonical dedup.  A node is a complete candidate when its deficiency
// matches target_tau (TauTarget) or its outer size is in target_ks
// (ClassifyK); candidates failing a configured filter are counted as pruned.
// `node_sink`, when set, observes every visited node (candidate or not).
using NodeSink = std::function<void(const SearchNode&)>;
EnumStats enumerate(const SearchConfig& config, const SurvivorSink& sink,
                    const NodeSink& node_sink = {});

}  // namespace matchstick
