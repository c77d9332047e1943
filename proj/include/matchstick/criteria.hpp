#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matchstick/plane_graph.hpp"

namespace matchstick {

// Outcome of one pruning criterion.  `witness` spells out the violated
// inequality with its numbers so a reader can re-evaluate it.
struct Verdict {
    bool passed = true;
    std::string rule;
    std::string witness;

    static Verdict pass(std::string rule) { return {true, std::move(rule), ""}; }
    static Verdict fail(std::string rule, std::string witness) {
        return {false, std::move(rule), std::move(witness)};
    }
};

// One of the three triangle/quadrangle configurations used by the area
// budget: four faces around a common interior degree-4 vertex.  `face_sizes`
// is the cyclic size sequence; consecutive entries share an edge.
struct PatternTemplate {
    std::string name;
    std::vector<int> face_sizes;                   // cyclic, length 4
    std::vector<std::pair<int, int>> shared_edges; // index pairs into face_sizes
    int angle_slots = 15;
};

// Occurrence of a pattern: the central vertex plus the four occupied faces.
struct PatternOccurrence {
    int pattern = 0;
    VertexId center = -1;
    std::vector<int> faces;
};

const std::vector<PatternTemplate>& builtin_patterns();
std::vector<PatternTemplate> load_patterns(const std::string& json_path);

std::vector<PatternOccurrence> find_pattern_occurrences(const PlaneGraph& g,
                                                        const std::vector<PatternTemplate>& pats);

// Exact maximum number of pairwise face-disjoint pattern occurrences.
int count_disjoint_fig1(const PlaneGraph& g);
int max_disjoint_occurrences(const std::vector<PatternOccurrence>& occ);

// Per-deficiency bounds on k, A_3, the area ratio, and n.
struct BoundsRow {
    int tau;
    int min_k;
    int min_a3;
    int min_area;
    int min_n;
};
struct BoundsTable {
    std::vector<BoundsRow> rows;  // tau = 0, 2, 4
    const BoundsRow& row(int tau) const;
};
const BoundsTable& bounds_table();

// --- checks ------------------------------------------------------------

Verdict euler_relations_check(const FaceProfile& p);
Verdict triangle_lower_bound(const FaceProfile& p);

// Largest area of a unit-sided k-gon, in units of the unit triangle area:
// k * cot(pi/k) / sqrt(3).
double area_upper(int k);

Verdict area_argument_check(const PlaneGraph& g);
Verdict corollary_bounds_check(const FaceProfile& p, bool has_inner);
Verdict tau_bounds_check(const FaceProfile& p);
Verdict degree2_inner_triangle_check(const PlaneGraph& g, int target_tau);
Verdict quad_component_check(const PlaneGraph& g);

// Replay of the angle-budget case analysis that rules out a complete
// 10-gon-boundary graph: the budget 23, the 15-slot cost of a configuration,
// and the three case margins 10, 10, 4.
struct ExclusionTrace {
    int angle_budget = 0;    // 3*10 - 7
    int config_slots = 0;    // angles of one configuration usable by triangles
    struct Case {
        std::string description;
        int margin;
    };
    std::vector<Case> cases;
};
ExclusionTrace tau0_k10_exclusion();

// Closed-form bounds.
std::int64_t a4_upper_bound(int k);    // floor(k^4 / 4)
std::int64_t f4_upper_bound(int k);    // floor(2k^2/3 + k^4/4 - 2)
int cut_decomposition_bound(int n2, int n4);  // min(2*n2, 2*n4 + 2)

// --- filter registry ----------------------------------------------------

// Whether a criterion may prune partial graphs (violations cannot be
// repaired by adding faces) or only complete candidates.
enum class FilterStage { Monotone, Final };

struct Filter {
    std::string id;
    FilterStage stage;
    int cost_rank;  // cheap integer checks first, pattern/area checks later
    // Evaluated on complete candidates; gates (inner vertices, tau range,
    // k range) are applied inside and return a vacuous pass when unmet.
    std::function<Verdict(const PlaneGraph&, const FaceProfile&, int target_tau)> run;
};

const std::vector<Filter>& filter_registry();
const Filter* find_filter(const std::string& id);
std::vector<std::string> default_filter_ids();

// Known criteria sorted so cheap integer checks precede pattern and area
// checks; the realizability stage "realize" is always last when present.
std::vector<std::string> prune_order(const std::vector<std::string>& requested);

}  // namespace matchstick
