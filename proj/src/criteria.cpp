#include "matchstick/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace matchstick {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// Margin applied to floating-point comparisons: never prune on a tie.
constexpr double kAreaSlack = 1e-9;

}  // namespace

const std::vector<PatternTemplate>& builtin_patterns() {
    static const std::vector<PatternTemplate> pats = {
        {"opposite-triangles", {3, 4, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 15},
        {"adjacent-triangles", {3, 3, 4, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 15},
        {"single-triangle", {3, 4, 4, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 15},
    };
    return pats;
}

std::vector<PatternTemplate> load_patterns(const std::string& json_path) {
    std::ifstream in(json_path);
    if (!in) throw std::runtime_error("cannot open pattern file " + json_path);
    nlohmann::json j;
    in >> j;
    std::vector<PatternTemplate> out;
    for (const auto& p : j.at("patterns")) {
        PatternTemplate t;
        t.name = p.at("name").get<std::string>();
        t.face_sizes = p.at("face_sizes").get<std::vector<int>>();
        for (const auto& e : p.at("shared_edges"))
            t.shared_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        t.angle_slots = p.value("angle_slots", 15);
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

// Cyclic match of `sizes` against `pat` allowing rotation and reflection.
bool cyclic_match(const std::vector<int>& sizes, const std::vector<int>& pat) {
    const int m = static_cast<int>(pat.size());
    if (static_cast<int>(sizes.size()) != m) return false;
    for (int rev = 0; rev < 2; ++rev) {
        for (int s = 0; s < m; ++s) {
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                int idx = rev ? (s - i + 2 * m) % m : (s + i) % m;
                ok = sizes[idx] == pat[i];
            }
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace

std::vector<PatternOccurrence> find_pattern_occurrences(const PlaneGraph& g,
                                                        const std::vector<PatternTemplate>& pats) {
    std::vector<PatternOccurrence> occ;
    for (VertexId v = 0; v < g.n(); ++v) {
        if (g.on_outer_face(v) || g.degree(v) != 4) continue;
        // Cyclic sequence of the four faces around v.
        std::vector<int> around;
        around.reserve(4);
        bool usable = true;
        for (VertexId u : g.rotation(v)) {
            int f = g.face_of(v, u);
            if (f == g.outer_face_id()) usable = false;
            around.push_back(f);
        }
        if (!usable) continue;
        std::vector<int> distinct = around;
        std::sort(distinct.begin(), distinct.end());
        if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) continue;
        std::vector<int> sizes;
        sizes.reserve(4);
        for (int f : around) sizes.push_back(g.face(f).size());
        for (std::size_t pi = 0; pi < pats.size(); ++pi) {
            if (cyclic_match(sizes, pats[pi].face_sizes)) {
                PatternOccurrence o;
                o.pattern = static_cast<int>(pi);
                o.center = v;
                o.faces = around;
                occ.push_back(std::move(o));
                break;
            }
        }
    }
    return occ;
}

namespace {

// Exact maximum set of pairwise face-disjoint occurrences, branch and bound.
void disjoint_search(const std::vector<PatternOccurrence>& occ,
                     const std::vector<std::vector<int>>& conflicts, std::size_t i,
                     std::vector<char>& blocked, int chosen, int& best) {
    if (chosen + static_cast<int>(occ.size() - i) <= best) return;
    if (i == occ.size()) {
        best = std::max(best, chosen);
        return;
    }
    if (!blocked[i]) {
        std::vector<int> newly;
        for (int j : conflicts[i])
            if (j > static_cast<int>(i) && !blocked[j]) {
                blocked[j] = 1;
                newly.push_back(j);
            }
        disjoint_search(occ, conflicts, i + 1, blocked, chosen + 1, best);
        for (int j : newly) blocked[j] = 0;
    }
    disjoint_search(occ, conflicts, i + 1, blocked, chosen, best);
}

}  // namespace

int max_disjoint_occurrences(const std::vector<PatternOccurrence>& occ) {
    const std::size_t m = occ.size();
    if (m == 0) return 0;
    std::vector<std::vector<int>> conflicts(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            bool share = false;
            for (int f : occ[i].faces)
                for (int h : occ[j].faces)
                    if (f == h) share = true;
            if (share) {
                conflicts[i].push_back(static_cast<int>(j));
                conflicts[j].push_back(static_cast<int>(i));
            }
        }
    std::vector<char> blocked(m, 0);
    int best = 0;
    disjoint_search(occ, conflicts, 0, blocked, 0, best);
    return best;
}

int count_disjoint_fig1(const PlaneGraph& g) {
    return max_disjoint_occurrences(find_pattern_occurrences(g, builtin_patterns()));
}

const BoundsTable& bounds_table() {
    static const BoundsTable table = {{
        {0, 11, 15, 17, 16},
        {2, 9, 11, 13, 13},
        {4, 8, 8, 10, 11},
    }};
    return table;
}

const BoundsRow& BoundsTable::row(int tau) const {
    for (const auto& r : rows)
        if (r.tau == tau) return r;
    throw std::invalid_argument("UnsupportedTau: no bounds row for tau=" + std::to_string(tau));
}

Verdict euler_relations_check(const FaceProfile& p) {
    if (p.tau % 2 != 0)
        return Verdict::fail("tau-parity", "tau=" + std::to_string(p.tau) + " is odd");
    long long size_sum = 0, face_sum = 0, deficiency_sum = 0;
    for (auto [i, a] : p.census) {
        size_sum += static_cast<long long>(i) * a;
        face_sum += a;
        deficiency_sum += static_cast<long long>(4 - i) * a;
    }
    if (face_sum != p.faces)
        return Verdict::fail("face-count", "sum A_i=" + std::to_string(face_sum) +
                                               " != |F|=" + std::to_string(p.faces));
    if (2LL * p.edges != size_sum)
        return Verdict::fail("edge-census", "2|E|=" + std::to_string(2 * p.edges) +
                                                " != sum i*A_i=" + std::to_string(size_sum));
    if (4LL * p.n != size_sum + p.tau)
        return Verdict::fail("vertex-census",
                             "4n=" + std::to_string(4 * p.n) + " != sum i*A_i + tau=" +
                                 std::to_string(size_sum + p.tau));
    if (p.n != p.faces - 2 + p.tau / 2)
        return Verdict::fail("face-vertex-relation",
                             "n=" + std::to_string(p.n) + " != |F|-2+tau/2=" +
                                 std::to_string(p.faces - 2 + p.tau / 2));
    if (deficiency_sum != 8 - p.tau)
        return Verdict::fail("census-deficiency",
                             "sum (4-i)A_i=" + std::to_string(deficiency_sum) +
                                 " != 8-tau=" + std::to_string(8 - p.tau));
    return Verdict::pass("euler-relations");
}

Verdict triangle_lower_bound(const FaceProfile& p) {
    int a3 = p.census_at(3);
    int need = 4 + p.k - p.tau;
    if (a3 < need)
        return Verdict::fail("triangle-lower-bound", "A_3=" + std::to_string(a3) + " < 4+k-tau=" +
                                                         std::to_string(need));
    return Verdict::pass("triangle-lower-bound");
}

double area_upper(int k) {
    if (k < 3) throw std::invalid_argument("area_upper requires k >= 3");
    return k / std::tan(std::numbers::pi / k) / std::sqrt(3.0);
}

Verdict area_argument_check(const PlaneGraph& g) {
    FaceProfile p = face_profile(g);
    long long odd = 0;
    for (auto [i, a] : p.census)
        if (i % 2 == 1) odd += a;
    int configs = count_disjoint_fig1(g);
    double lhs = area_upper(std::max(p.k, 3));
    double rhs = static_cast<double>(odd) + 2.0 * configs;
    if (lhs + kAreaSlack < rhs)
        return Verdict::fail("area-budget", "area_upper(" + std::to_string(p.k) + ")=" + fmt(lhs) +
                                                " < odd faces " + std::to_string(odd) +
                                                " + 2*configs " + std::to_string(configs));
    return Verdict::pass("area-budget");
}

Verdict corollary_bounds_check(const FaceProfile& p, bool has_inner) {
    if (!has_inner) return Verdict::pass("inner-vertex-bounds");
    int need_n = 5 + p.k - p.tau / 2;
    if (p.n < need_n)
        return Verdict::fail("inner-vertex-bounds", "n=" + std::to_string(p.n) +
                                                        " < 5+k-tau/2=" + std::to_string(need_n));
    double lhs = area_upper(std::max(p.k, 3));
    double rhs = 6.0 + p.k - p.tau;
    if (lhs + kAreaSlack < rhs)
        return Verdict::fail("inner-vertex-bounds",
                             "area_upper(" + std::to_string(p.k) + ")=" + fmt(lhs) +
                                 " < 6+k-tau=" + fmt(rhs));
    return Verdict::pass("inner-vertex-bounds");
}

Verdict tau_bounds_check(const FaceProfile& p) {
    if (p.tau != 0 && p.tau != 2 && p.tau != 4)
        throw std::invalid_argument("UnsupportedTau: tau_bounds_check needs tau in {0,2,4}");
    const BoundsRow& r = bounds_table().row(p.tau);
    if (p.tau == 4 && p.n == 1) return Verdict::pass("deficiency-bounds");
    if (p.k < r.min_k)
        return Verdict::fail("deficiency-bounds", "k=" + std::to_string(p.k) + " < " +
                                                      std::to_string(r.min_k) + " at tau=" +
                                                      std::to_string(p.tau));
    if (p.census_at(3) < r.min_a3)
        return Verdict::fail("deficiency-bounds",
                             "A_3=" + std::to_string(p.census_at(3)) + " < " +
                                 std::to_string(r.min_a3) + " at tau=" + std::to_string(p.tau));
    if (area_upper(std::max(p.k, 3)) + kAreaSlack < r.min_area)
        return Verdict::fail("deficiency-bounds",
                             "area_upper(" + std::to_string(p.k) + ")=" +
                                 fmt(area_upper(std::max(p.k, 3))) + " < " +
                                 std::to_string(r.min_area) + " at tau=" + std::to_string(p.tau));
    if (p.n < r.min_n)
        return Verdict::fail("deficiency-bounds", "n=" + std::to_string(p.n) + " < " +
                                                      std::to_string(r.min_n) + " at tau=" +
                                                      std::to_string(p.tau));
    return Verdict::pass("deficiency-bounds");
}

Verdict degree2_inner_triangle_check(const PlaneGraph& g, int target_tau) {
    if (target_tau != 2 && target_tau != 4)
        throw std::invalid_argument("degree2_inner_triangle_check needs target tau in {2,4}");
    for (VertexId v = 0; v < g.n(); ++v) {
        if (!g.on_outer_face(v) || g.degree(v) != 2) continue;
        // The single inner face between the two edges of v.
        for (VertexId u : g.rotation(v)) {
            int f = g.face_of(v, u);
            if (f == g.outer_face_id()) continue;
            if (g.face(f).size() == 3)
                return Verdict::fail("exposed-triangle-reduction",
                                     "degree-2 outer vertex " + std::to_string(v) +
                                         " lies on an inner triangle; deleting it yields a "
                                         "smaller graph with the same deficiency");
        }
    }
    return Verdict::pass("exposed-triangle-reduction");
}

Verdict quad_component_check(const PlaneGraph& g) {
    FaceProfile p = face_profile(g);
    if (p.k < 5) throw std::invalid_argument("quad_component_check needs k >= 5");
    QuadDecomposition qd = quadrangle_decomposition(g);
    long long q_total = 0;
    long long rhs = 0;
    for (const auto& c : qd.components) {
        q_total += c.q;
        // smallest m with m^2 >= 4q, i.e. ceil(2*sqrt(q)), in exact arithmetic
        long long m = static_cast<long long>(std::ceil(2.0 * std::sqrt(static_cast<double>(c.q))));
        while (m * m < 4LL * c.q) ++m;
        while (m > 0 && (m - 1) * (m - 1) >= 4LL * c.q) --m;
        rhs += 2 * m;
    }
    if (q_total != p.census_at(4))
        return Verdict::fail("quad-components", "sum q_i=" + std::to_string(q_total) +
                                                    " != A_4=" + std::to_string(p.census_at(4)));
    long long lhs = 3LL * p.census_at(3);
    for (int i = 5; i <= p.k; ++i) lhs += static_cast<long long>(i) * p.census_at(i);
    if (lhs < rhs)
        return Verdict::fail("quad-components",
                             "3*A_3 + sum_{i=5..k} i*A_i = " + std::to_string(lhs) +
                                 " < sum 2*ceil(2*sqrt(q_i)) = " + std::to_string(rhs));
    return Verdict::pass("quad-components");
}

ExclusionTrace tau0_k10_exclusion() {
    ExclusionTrace t;
    t.angle_budget = 3 * 10 - 7;  // 23
    t.config_slots = 15;
    int m2 = 15 * 3 - t.angle_budget - (3 * 5 - 3);
    int m3 = 16 * 3 - t.angle_budget - (3 * 6 - 3);
    int m1 = 14 * 3 - t.angle_budget - 1 * t.config_slots;
    t.cases.push_back({"A_3=15, A_5=1: 15*3-23-(3*5-3)", m2});
    t.cases.push_back({"A_3=16, A_6=1: 16*3-23-(3*6-3)", m3});
    t.cases.push_back({"A_3=14: 14*3-23-15", m1});
    return t;
}

std::int64_t a4_upper_bound(int k) {
    if (k < 0 || k > 10000) throw std::invalid_argument("a4_upper_bound range");
    std::int64_t k4 = static_cast<std::int64_t>(k) * k * k * k;
    return k4 / 4;
}

std::int64_t f4_upper_bound(int k) {
    if (k < 0 || k > 10000) throw std::invalid_argument("f4_upper_bound range");
    std::int64_t k2 = static_cast<std::int64_t>(k) * k;
    std::int64_t num = 8 * k2 + 3 * k2 * k2 - 24;  // (2k^2/3 + k^4/4 - 2) * 12
    // floor division for possibly negative numerator
    std::int64_t q = num / 12;
    if (num % 12 != 0 && num < 0) --q;
    return q;
}

int cut_decomposition_bound(int n2, int n4) {
    if (!(n2 >= n4 && n4 >= 3))
        throw std::invalid_argument("cut_decomposition_bound requires n2 >= n4 >= 3");
    return std::min(2 * n2, 2 * n4 + 2);
}

namespace {

std::vector<Filter> make_registry() {
    std::vector<Filter> fs;
    fs.push_back({"euler", FilterStage::Final, 0,
                  [](const PlaneGraph&, const FaceProfile& p, int) {
                      return euler_relations_check(p);
                  }});
    fs.push_back({"triangle-bound", FilterStage::Final, 1,
                  [](const PlaneGraph&, const FaceProfile& p, int) {
                      return triangle_lower_bound(p);
                  }});
    fs.push_back({"tau-bounds", FilterStage::Final, 2,
                  [](const PlaneGraph&, const FaceProfile& p, int) {
                      if (p.tau != 0 && p.tau != 2 && p.tau != 4)
                          return Verdict::pass("deficiency-bounds");
                      return tau_bounds_check(p);
                  }});
    fs.push_back({"corollary-bounds", FilterStage::Final, 3,
                  [](const PlaneGraph&, const FaceProfile& p, int) {
                      return corollary_bounds_check(p, p.n > p.k);
                  }});
    fs.push_back({"quad-components", FilterStage::Final, 4,
                  [](const PlaneGraph& g, const FaceProfile& p, int) {
                      if (p.k < 5) return Verdict::pass("quad-components");
                      return quad_component_check(g);
                  }});
    fs.push_back({"degree2-triangle", FilterStage::Final, 5,
                  [](const PlaneGraph& g, const FaceProfile&, int target_tau) {
                      if (target_tau != 2 && target_tau != 4)
                          return Verdict::pass("exposed-triangle-reduction");
                      return degree2_inner_triangle_check(g, target_tau);
                  }});
    fs.push_back({"area-argument", FilterStage::Final, 6,
                  [](const PlaneGraph& g, const FaceProfile& p, int) {
                      if (p.n <= p.k) return Verdict::pass("area-budget");
                      return area_argument_check(g);
                  }});
    return fs;
}

}  // namespace

const std::vector<Filter>& filter_registry() {
    static const std::vector<Filter> reg = make_registry();
    return reg;
}

const Filter* find_filter(const std::string& id) {
    for (const auto& f : filter_registry())
        if (f.id == id) return &f;
    return nullptr;
}

std::vector<std::string> default_filter_ids() {
    std::vector<std::string> ids;
    for (const auto& f : filter_registry()) ids.push_back(f.id);
    return ids;
}

std::vector<std::string> prune_order(const std::vector<std::string>& requested) {
    std::vector<std::string> known;
    bool realize = false;
    for (const auto& id : requested) {
        if (id == "realize") {
            realize = true;
            continue;
        }
        if (!find_filter(id)) throw std::invalid_argument("unknown filter id: " + id);
        known.push_back(id);
    }
    std::stable_sort(known.begin(), known.end(), [](const std::string& a, const std::string& b) {
        return find_filter(a)->cost_rank < find_filter(b)->cost_rank;
    });
    if (realize) known.push_back("realize");
    return known;
}

}  // namespace matchstick
