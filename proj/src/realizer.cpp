#include "matchstick/realizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>

namespace matchstick {

namespace {

constexpr double kCheckTol = 1e-6;   // gaps beyond this refute
constexpr double kExactTol = 1e-9;   // gaps beyond this are "uncertain zone"
constexpr double kCrossTol = 1e-9;

double angle_of(Vec2 from, Vec2 to) { return std::atan2(to.y - from.y, to.x - from.x); }

// Orientations in which the angular order of the placed neighbors of v
// matches the rotation list: bit 1 = as given, bit 2 = reversed (the mirror
// drawing).  Fewer than three placed neighbors match either way.
int cyclic_match_mask(const PlaneGraph& g, VertexId v, const std::vector<Vec2>& pos,
                      const std::vector<char>& placed) {
    std::vector<VertexId> present;
    for (VertexId u : g.rotation(v))
        if (placed[u]) present.push_back(u);
    if (present.size() < 3) return 3;
    std::vector<std::pair<double, VertexId>> by_angle;
    by_angle.reserve(present.size());
    for (VertexId u : present) by_angle.emplace_back(angle_of(pos[v], pos[u]), u);
    std::sort(by_angle.begin(), by_angle.end());
    const std::size_t m = present.size();
    int mask = 0;
    for (int dir = 0; dir < 2; ++dir) {
        bool match_any = false;
        for (std::size_t s = 0; s < m && !match_any; ++s) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) {
                VertexId expect = dir == 0 ? present[i] : present[m - 1 - i];
                ok = by_angle[(s + i) % m].second == expect;
            }
            match_any = ok;
        }
        if (match_any) mask |= dir == 0 ? 1 : 2;
    }
    return mask;
}

struct Cluster {
    std::vector<VertexId> verts;
    std::vector<Vec2> local;  // aligned with verts
    bool infeasible = false;
    ForcedCheck infeasible_witness;

    int index_of(VertexId v) const {
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (verts[i] == v) return static_cast<int>(i);
        return -1;
    }
};

// Maximal trilaterable vertex sets: grown from triangles by adding vertices
// with two neighbors inside, merged while sharing two or more vertices.
std::vector<std::vector<VertexId>> trilateration_sets(const PlaneGraph& g) {
    std::vector<std::set<VertexId>> sets;
    // triangle seeds
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.rotation(u)) {
            if (v < u) continue;
            for (VertexId w : g.rotation(u)) {
                if (w <= v) continue;
                if (!g.contains_edge(v, w)) continue;
                bool inside = false;
                for (auto& s : sets)
                    if (s.count(u) && s.count(v) && s.count(w)) inside = true;
                if (inside) continue;
                std::set<VertexId> s = {u, v, w};
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (VertexId x = 0; x < g.n(); ++x) {
                        if (s.count(x)) continue;
                        int links = 0;
                        for (VertexId y : g.rotation(x)) links += s.count(y) ? 1 : 0;
                        if (links >= 2) {
                            s.insert(x);
                            grew = true;
                        }
                    }
                }
                sets.push_back(std::move(s));
            }
        }
    // merge while any two share >= 2 vertices
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < sets.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < sets.size() && !merged; ++j) {
                int shared = 0;
                for (VertexId v : sets[j]) shared += sets[i].count(v) ? 1 : 0;
                if (shared >= 2) {
                    sets[i].insert(sets[j].begin(), sets[j].end());
                    sets.erase(sets.begin() + static_cast<long>(j));
                    // re-grow the union
                    bool grew = true;
                    while (grew) {
                        grew = false;
                        for (VertexId x = 0; x < g.n(); ++x) {
                            if (sets[i].count(x)) continue;
                            int links = 0;
                            for (VertexId y : g.rotation(x)) links += sets[i].count(y) ? 1 : 0;
                            if (links >= 2) {
                                sets[i].insert(x);
                                grew = true;
                            }
                        }
                    }
                    merged = true;
                }
            }
    }
    std::vector<std::vector<VertexId>> out;
    for (auto& s : sets) out.emplace_back(s.begin(), s.end());
    return out;
}

// Incremental placement engine shared by rigid_propagate and the flex scan.
class Propagator {
public:
    Propagator(const PlaneGraph& g, const std::vector<Cluster>& clusters)
        : g_(g), clusters_(clusters) {
        st_.pos.assign(g.n(), Vec2{});
        st_.placed.assign(g.n(), 0);
        attached_.assign(clusters.size(), 0);
    }

    PartialPlacement& state() { return st_; }
    const PartialPlacement& state() const { return st_; }
    bool ambiguous() const { return ambiguous_; }
    double score() const { return score_; }

    void set_scoring(bool scoring) { scoring_ = scoring; }

    void place_base(VertexId u, VertexId v) {
        st_.pos[u] = {0.0, 0.0};
        st_.pos[v] = {1.0, 0.0};
        st_.placed[u] = st_.placed[v] = 1;
        check_edges_of(u);
        check_edges_of(v);
    }

    void place_vertex(VertexId v, Vec2 p) {
        st_.pos[v] = p;
        st_.placed[v] = 1;
    }

    // Run all rules to fixpoint.  Returns false when a violation aborted the
    // run (non-scoring mode only).
    bool settle() {
        while (!stopped()) {
            // rigid parts first: their internal geometry is exact, while the
            // vertex rule would rebuild them point by point and can pick up
            // spurious chirality on the way
            if (cluster_rule_two_shared()) continue;
            if (cluster_rule_rotor_bar()) continue;
            if (vertex_rule()) continue;
            break;
        }
        st_.complete = st_.placed_count() == g_.n() && !st_.violation;
        return !st_.violation;
    }

    // First pending cluster attachable at exactly one placed vertex, for the
    // one-parameter scan; -1 when none.
    int pending_rotor() const {
        for (std::size_t c = 0; c < clusters_.size(); ++c) {
            if (attached_[c]) continue;
            std::vector<VertexId> shared;
            for (VertexId v : clusters_[c].verts)
                if (st_.placed[v]) shared.push_back(v);
            if (shared.size() == 1) return static_cast<int>(c);
        }
        // fall back: a lone unplaced vertex hanging off one placed neighbor
        return -1;
    }

    // Attach cluster c rotated by theta around its single placed vertex;
    // mirror variant reflects the cluster's local frame first.
    bool attach_rotor_at(int c, double theta, bool mirror) {
        const Cluster& cl = clusters_[c];
        VertexId pivot = -1;
        for (VertexId v : cl.verts)
            if (st_.placed[v]) pivot = v;
        if (pivot < 0) return false;
        int pi = cl.index_of(pivot);
        Vec2 porigin = cl.local[pi];
        for (std::size_t i = 0; i < cl.verts.size(); ++i) {
            VertexId v = cl.verts[i];
            if (st_.placed[v]) continue;
            Vec2 rel = cl.local[i] - porigin;
            if (mirror) rel.y = -rel.y;
            place_vertex(v, st_.pos[pivot] + rel.rotated(theta));
        }
        attached_[c] = 1;
        for (VertexId v : cl.verts) check_edges_of(v);
        return !st_.violation || scoring_;
    }

private:
    bool stopped() const { return st_.violation.has_value() && !scoring_; }

    void report(ForcedCheck chk) {
        if (chk.gap() > kCheckTol) {
            score_ += chk.gap() * chk.gap();
            if (!st_.violation) st_.violation = chk;
        } else {
            if (chk.gap() > kExactTol) st_.degenerate = true;
            st_.forced.push_back(std::move(chk));
        }
    }

    // Check all edges from v to already-placed vertices.
    void check_edges_of(VertexId v) {
        if (!st_.placed[v]) return;
        for (VertexId u : g_.rotation(v)) {
            if (!st_.placed[u] || u < v) continue;
            ForcedCheck chk;
            chk.u = v;
            chk.v = u;
            chk.required = 1.0;
            chk.measured = dist(st_.pos[v], st_.pos[u]);
            chk.note = "edge";
            report(std::move(chk));
        }
    }

    // Orientations compatible with the placement around v and its placed
    // neighbors, intersected with the orientation committed so far.
    int consistent_around(VertexId v) const {
        int mask = orient_mask_;
        mask &= cyclic_match_mask(g_, v, st_.pos, st_.placed);
        for (VertexId u : g_.rotation(v)) {
            if (!mask) break;
            if (st_.placed[u]) mask &= cyclic_match_mask(g_, u, st_.pos, st_.placed);
        }
        return mask;
    }

    bool vertex_rule() {
        for (VertexId x = 0; x < g_.n(); ++x) {
            if (st_.placed[x]) continue;
            VertexId a = -1, b = -1;
            for (VertexId u : g_.rotation(x)) {
                if (!st_.placed[u]) continue;
                if (a < 0)
                    a = u;
                else if (b < 0)
                    b = u;
            }
            if (b < 0) continue;
            double d = dist(st_.pos[a], st_.pos[b]);
            if (d > 2.0 + kCheckTol) {
                ForcedCheck chk{a, b, 2.0, d,
                                "common neighbor " + std::to_string(x) +
                                    " needs these at distance <= 2"};
                score_ += chk.gap() * chk.gap();
                if (!st_.violation) st_.violation = chk;
                if (!scoring_) return false;
                // scoring mode: park x at the midpoint so the scan stays total
                place_vertex(x, (st_.pos[a] + st_.pos[b]) * 0.5);
                check_edges_of(x);
                return true;
            }
            auto isect = unit_circle_intersection(st_.pos[a], st_.pos[b], 1.0, 1.0);
            if (!isect) {
                st_.degenerate = true;
                st_.stall = "coincident anchors for vertex " + std::to_string(x);
                continue;
            }
            if (isect->degenerate) st_.degenerate = true;
            // orientation from the rotation system
            Vec2 options[2] = {isect->left, isect->right};
            int masks[2] = {0, 0};
            int pick = -1;
            bool both = false;
            for (int o = 0; o < 2; ++o) {
                place_vertex(x, options[o]);
                masks[o] = consistent_around(x);
                st_.placed[x] = 0;
                if (masks[o]) {
                    if (pick < 0)
                        pick = o;
                    else
                        both = true;
                }
            }
            if (pick < 0) {
                ForcedCheck chk{a, b, 1.0, dist(st_.pos[a], st_.pos[b]),
                                "no rotation-consistent side for vertex " + std::to_string(x)};
                chk.note = "orientation obstruction at vertex " + std::to_string(x);
                score_ += 1.0;
                if (!st_.violation) st_.violation = chk;
                if (!scoring_) return false;
                pick = 0;
            }
            if (both && st_.placed_count() > 2) ambiguous_ = true;
            place_vertex(x, options[pick]);
            if (!both) orient_mask_ = masks[pick];
            check_edges_of(x);
            return true;
        }
        return false;
    }

    // Attach any cluster with two or more placed vertices by the proper (or,
    // if the rotation system demands it, mirrored) isometry aligning them.
    bool cluster_rule_two_shared() {
        for (std::size_t c = 0; c < clusters_.size(); ++c) {
            if (attached_[c]) continue;
            const Cluster& cl = clusters_[c];
            std::vector<int> shared;
            for (std::size_t i = 0; i < cl.verts.size(); ++i)
                if (st_.placed[cl.verts[i]]) shared.push_back(static_cast<int>(i));
            if (shared.size() < 2) continue;
            if (shared.size() == cl.verts.size()) {
                attached_[c] = 1;
                return true;
            }

            int i0 = shared[0], i1 = shared[1];
            double dl = dist(cl.local[i0], cl.local[i1]);
            double dg = dist(st_.pos[cl.verts[i0]], st_.pos[cl.verts[i1]]);
            if (std::abs(dl - dg) > kCheckTol) {
                ForcedCheck chk{cl.verts[i0], cl.verts[i1], dl, dg,
                                "rigid part fixes this distance"};
                score_ += chk.gap() * chk.gap();
                if (!st_.violation) st_.violation = chk;
                if (!scoring_) return false;
            } else if (std::abs(dl - dg) > kExactTol) {
                st_.degenerate = true;
            }

            bool attached_ok = false;
            for (int mirror = 0; mirror < 2 && !attached_ok; ++mirror) {
                auto backup_pos = st_.pos;
                auto backup_placed = st_.placed;
                apply_alignment(cl, i0, i1, mirror != 0);
                bool ok = true;
                // all shared vertices must coincide
                for (int si : shared) {
                    VertexId v = cl.verts[si];
                    Vec2 mapped = mapped_point(cl, i0, i1, mirror != 0, cl.local[si]);
                    if (dist(mapped, st_.pos[v]) > kCheckTol) ok = false;
                }
                int mask = orient_mask_;
                if (ok) {
                    for (std::size_t i = 0; i < cl.verts.size(); ++i) {
                        if (backup_placed[cl.verts[i]]) continue;
                        mask &= consistent_around(cl.verts[i]);
                        if (!mask) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) {
                    st_.pos = backup_pos;
                    st_.placed = backup_placed;
                    continue;
                }
                orient_mask_ = mask;
                attached_ok = true;
            }
            if (!attached_ok) {
                // shared vertices could not be aligned in either chirality
                ForcedCheck chk{cl.verts[i0], cl.verts[i1], dl, dg,
                                "rigid part cannot be aligned with its anchors"};
                score_ += chk.gap() * chk.gap();
                st_.degenerate = true;
                if (!st_.violation) st_.violation = chk;
                if (!scoring_) return false;
                // scoring mode: force the proper alignment; remaining strain
                // shows up in the edge checks below
                apply_alignment(cl, i0, i1, false);
            }
            attached_[c] = 1;
            for (VertexId v : cl.verts) check_edges_of(v);
            return true;
        }
        return false;
    }

    Vec2 mapped_point(const Cluster& cl, int i0, int i1, bool mirror, Vec2 p) const {
        Vec2 a = cl.local[i0], b = cl.local[i1];
        Vec2 A = st_.pos[cl.verts[i0]], B = st_.pos[cl.verts[i1]];
        Vec2 u = b - a;
        Vec2 q = p - a;
        if (mirror) {
            u.y = -u.y;
            q.y = -q.y;
        }
        double lu = u.norm();
        Vec2 U = B - A;
        double lU = U.norm();
        if (lu < 1e-14 || lU < 1e-14) return A + q;
        // rotation taking u/|u| to U/|U|
        double c = (u.x * U.x + u.y * U.y) / (lu * lU);
        double s = (u.x * U.y - u.y * U.x) / (lu * lU);
        return {A.x + c * q.x - s * q.y, A.y + s * q.x + c * q.y};
    }

    void apply_alignment(const Cluster& cl, int i0, int i1, bool mirror) {
        for (std::size_t i = 0; i < cl.verts.size(); ++i) {
            VertexId v = cl.verts[i];
            if (st_.placed[v]) continue;
            place_vertex(v, mapped_point(cl, i0, i1, mirror, cl.local[i]));
        }
    }

    // One placed vertex plus one edge into the placed region: rotate the
    // cluster about the shared vertex so the edge reaches unit length.
    bool cluster_rule_rotor_bar() {
        for (std::size_t c = 0; c < clusters_.size(); ++c) {
            if (attached_[c]) continue;
            const Cluster& cl = clusters_[c];
            std::vector<int> shared;
            for (std::size_t i = 0; i < cl.verts.size(); ++i)
                if (st_.placed[cl.verts[i]]) shared.push_back(static_cast<int>(i));
            if (shared.size() != 1) continue;
            int pi = shared[0];
            VertexId pivot = cl.verts[pi];
            // find a bar: cluster vertex a (unplaced) adjacent to placed b
            VertexId bar_a = -1, bar_b = -1;
            for (VertexId a : cl.verts) {
                if (st_.placed[a]) continue;
                for (VertexId b : g_.rotation(a))
                    if (st_.placed[b] && cl.index_of(b) < 0) {
                        bar_a = a;
                        bar_b = b;
                        break;
                    }
                if (bar_a >= 0) break;
            }
            if (bar_a < 0) continue;

            int ai = cl.index_of(bar_a);
            double r = dist(cl.local[ai], cl.local[pi]);
            double d = dist(st_.pos[bar_b], st_.pos[pivot]);
            if (d > r + 1.0 + kCheckTol || d + kCheckTol < std::abs(r - 1.0)) {
                ForcedCheck chk{bar_a, bar_b, 1.0,
                                d > r + 1.0 ? d - r : std::abs(r - d),
                                "edge range about pivot " + std::to_string(pivot) +
                                    " is [" + std::to_string(std::abs(r - 1.0)) + ", " +
                                    std::to_string(r + 1.0) + "], anchors at distance " +
                                    std::to_string(d)};
                score_ += chk.gap() * chk.gap();
                if (!st_.violation) st_.violation = chk;
                if (!scoring_) return false;
                attached_[c] = 1;
                return true;
            }

            // angles theta with |pivot + R(theta)(local(a)-local(pivot)) - b| = 1
            double base_angle = angle_of(st_.pos[pivot], st_.pos[bar_b]);
            double cosg = (r * r + d * d - 1.0) / (2.0 * r * d);
            cosg = std::clamp(cosg, -1.0, 1.0);
            double gamma = std::acos(cosg);

            struct Branch {
                double theta;
                bool mirror;
                int mask;
                double local_score;
            };
            std::vector<Branch> viable;
            for (int mirror = 0; mirror < 2; ++mirror) {
                Vec2 rel = cl.local[ai] - cl.local[pi];
                if (mirror) rel.y = -rel.y;
                double local_angle = std::atan2(rel.y, rel.x);
                for (int sign = -1; sign <= 1; sign += 2) {
                    double theta = base_angle + sign * gamma - local_angle;
                    auto backup_pos = st_.pos;
                    auto backup_placed = st_.placed;
                    for (std::size_t i = 0; i < cl.verts.size(); ++i) {
                        VertexId v = cl.verts[i];
                        if (st_.placed[v]) continue;
                        Vec2 q = cl.local[i] - cl.local[pi];
                        if (mirror) q.y = -q.y;
                        place_vertex(v, st_.pos[pivot] + q.rotated(theta));
                    }
                    int mask = orient_mask_;
                    for (std::size_t i = 0; i < cl.verts.size() && mask; ++i) {
                        if (backup_placed[cl.verts[i]]) continue;
                        mask &= consistent_around(cl.verts[i]);
                    }
                    double local_score = 0.0;
                    if (mask) {
                        for (VertexId v : cl.verts) {
                            if (backup_placed[v]) continue;
                            for (VertexId u : g_.rotation(v)) {
                                if (!st_.placed[u]) continue;
                                double gap =
                                    std::abs(dist(st_.pos[v], st_.pos[u]) - 1.0);
                                if (gap > kCheckTol) local_score += gap * gap;
                            }
                        }
                        viable.push_back({theta, mirror != 0, mask, local_score});
                    }
                    st_.pos = backup_pos;
                    st_.placed = backup_placed;
                }
            }
            // prefer rotation-consistent branches with the least edge strain
            std::stable_sort(viable.begin(), viable.end(),
                             [](const Branch& x, const Branch& y) {
                                 return x.local_score < y.local_score;
                             });
            bool committed = false;
            if (!viable.empty()) {
                const Branch& br = viable.front();
                if (viable.size() > 1 && viable[1].local_score <= kCheckTol * kCheckTol)
                    ambiguous_ = true;  // a second branch also closes cleanly
                for (std::size_t i = 0; i < cl.verts.size(); ++i) {
                    VertexId v = cl.verts[i];
                    if (st_.placed[v]) continue;
                    Vec2 q = cl.local[i] - cl.local[pi];
                    if (br.mirror) q.y = -q.y;
                    place_vertex(v, st_.pos[pivot] + q.rotated(br.theta));
                }
                orient_mask_ = br.mask;
                for (VertexId v : cl.verts) check_edges_of(v);
                committed = true;
            }
            if (!committed) {
                ForcedCheck chk{bar_a, bar_b, 1.0, 2.0,
                                "no rotation of the rigid part fits the embedding"};
                score_ += 1e-4;
                if (!st_.violation) st_.violation = chk;
                if (!scoring_) return false;
            }
            attached_[c] = 1;
            return true;
        }
        return false;
    }

    const PlaneGraph& g_;
    const std::vector<Cluster>& clusters_;
    PartialPlacement st_;
    std::vector<char> attached_;
    int orient_mask_ = 3;  // bit 1: rotations as given; bit 2: mirror drawing
    bool scoring_ = false;
    bool ambiguous_ = false;
    double score_ = 0.0;
};

// Local coordinates of one trilaterable set, built by replaying the growth.
Cluster build_cluster(const PlaneGraph& g, const std::vector<VertexId>& verts) {
    Cluster cl;
    cl.verts = verts;
    cl.local.assign(verts.size(), Vec2{});

    std::vector<char> in_cluster(g.n(), 0);
    for (VertexId v : verts) in_cluster[v] = 1;

    // seed on a triangle inside the set
    VertexId sa = -1, sb = -1, sc = -1;
    for (VertexId u : verts) {
        for (VertexId v : g.rotation(u)) {
            if (!in_cluster[v] || v < u) continue;
            for (VertexId w : g.rotation(u)) {
                if (!in_cluster[w] || w <= v || !g.contains_edge(v, w)) continue;
                sa = u;
                sb = v;
                sc = w;
                break;
            }
            if (sa >= 0) break;
        }
        if (sa >= 0) break;
    }
    if (sa < 0) {
        cl.infeasible = true;
        cl.infeasible_witness.note = "trilaterable set without a triangle";
        return cl;
    }

    std::vector<Vec2> pos(g.n());
    std::vector<char> placed(g.n(), 0);
    pos[sa] = {0.0, 0.0};
    pos[sb] = {1.0, 0.0};
    pos[sc] = {0.5, std::sqrt(3.0) / 2.0};
    placed[sa] = placed[sb] = placed[sc] = 1;

    int orient_mask = 3;  // either chirality until the structure pins one
    bool progress = true;
    while (progress) {
        progress = false;
        for (VertexId x : verts) {
            if (placed[x]) continue;
            VertexId a = -1, b = -1;
            for (VertexId u : g.rotation(x)) {
                if (!in_cluster[u] || !placed[u]) continue;
                if (a < 0)
                    a = u;
                else if (b < 0)
                    b = u;
            }
            if (b < 0) continue;
            double d = dist(pos[a], pos[b]);
            if (d > 2.0 + kCheckTol) {
                cl.infeasible = true;
                cl.infeasible_witness = {a, b, 2.0, d,
                                         "common neighbor " + std::to_string(x) +
                                             " needs these at distance <= 2"};
                return cl;
            }
            auto isect = unit_circle_intersection(pos[a], pos[b], 1.0, 1.0);
            if (!isect) continue;
            Vec2 options[2] = {isect->left, isect->right};
            int masks[2] = {0, 0};
            int pick = -1;
            for (int o = 0; o < 2; ++o) {
                pos[x] = options[o];
                placed[x] = 1;
                int mask = orient_mask;
                mask &= cyclic_match_mask(g, x, pos, placed);
                for (VertexId u : g.rotation(x)) {
                    if (!mask) break;
                    if (placed[u]) mask &= cyclic_match_mask(g, u, pos, placed);
                }
                placed[x] = 0;
                masks[o] = mask;
                if (mask && pick < 0) pick = o;
            }
            if (pick < 0) {
                cl.infeasible = true;
                cl.infeasible_witness = {a, b, 1.0, d,
                                         "no rotation-consistent side for vertex " +
                                             std::to_string(x)};
                return cl;
            }
            pos[x] = options[pick];
            placed[x] = 1;
            if (!(masks[0] && masks[1])) orient_mask = masks[pick];
            // verify remaining edges into the cluster
            for (VertexId u : g.rotation(x)) {
                if (!placed[u] || !in_cluster[u]) continue;
                double len = dist(pos[x], pos[u]);
                if (std::abs(len - 1.0) > kCheckTol) {
                    cl.infeasible = true;
                    cl.infeasible_witness = {x, u, 1.0, len, "edge inside a rigid part"};
                    return cl;
                }
            }
            progress = true;
        }
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (!placed[verts[i]]) {
            // growth order unavailable from this seed; mark unusable
            cl.infeasible = true;
            cl.infeasible_witness.note = "trilaterable set not reachable from its seed";
            return cl;
        }
        cl.local[i] = pos[verts[i]];
    }
    return cl;
}

std::vector<Cluster> build_clusters(const PlaneGraph& g) {
    std::vector<Cluster> out;
    for (const auto& set : trilateration_sets(g)) out.push_back(build_cluster(g, set));
    return out;
}

std::vector<std::pair<VertexId, VertexId>> triangle_base_edges(const PlaneGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> bases;
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.rotation(u)) {
            if (v < u) continue;
            bool tri = false;
            for (VertexId w : g.rotation(u))
                if (w != v && g.contains_edge(v, w)) tri = true;
            if (tri) bases.emplace_back(u, v);
        }
    return bases;
}

}  // namespace

const char* RealizeVerdict::tag_name(Tag t) {
    switch (t) {
        case Tag::Realizable: return "realizable";
        case Tag::Infeasible: return "infeasible";
        case Tag::Flexible: return "flexible";
        case Tag::Unknown: return "unknown";
    }
    return "unknown";
}

PartialPlacement rigid_propagate(const PlaneGraph& g, std::pair<VertexId, VertexId> base) {
    auto clusters = build_clusters(g);
    for (const auto& cl : clusters)
        if (cl.infeasible) {
            PartialPlacement st;
            st.pos.assign(g.n(), Vec2{});
            st.placed.assign(g.n(), 0);
            st.violation = cl.infeasible_witness;
            return st;
        }
    Propagator prop(g, clusters);
    prop.place_base(base.first, base.second);
    prop.settle();
    PartialPlacement st = prop.state();
    if (st.violation && prop.ambiguous()) {
        // an ambiguous orientation pick preceded the contradiction; report a
        // stall instead of a refutation
        st.stall = "violation after ambiguous orientation; not conclusive";
        st.degenerate = true;
    }
    return st;
}

Verdict verify_realization(const PlaneGraph& g, const std::vector<Vec2>& coords, double tol) {
    if (static_cast<int>(coords.size()) != g.n())
        return Verdict::fail("realization", "coordinate count mismatch");
    if (g.n() == 1) return Verdict::pass("realization");

    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v = u + 1; v < g.n(); ++v)
            if (dist(coords[u], coords[v]) < kCrossTol)
                return Verdict::fail("realization", "vertices " + std::to_string(u) + " and " +
                                                        std::to_string(v) + " coincide");

    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.rotation(u)) {
            if (v < u) continue;
            double err = std::abs(dist(coords[u], coords[v]) - 1.0);
            if (err > tol)
                return Verdict::fail("realization", "edge (" + std::to_string(u) + "," +
                                                        std::to_string(v) + ") has length error " +
                                                        std::to_string(err));
        }

    // vertex-on-edge and proper crossings
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.rotation(u))
            if (u < v) edges.emplace_back(u, v);
    for (auto [u, v] : edges)
        for (VertexId w = 0; w < g.n(); ++w) {
            if (w == u || w == v) continue;
            if (point_segment_distance(coords[w], coords[u], coords[v]) < kCrossTol)
                return Verdict::fail("realization", "vertex " + std::to_string(w) +
                                                        " lies on edge (" + std::to_string(u) +
                                                        "," + std::to_string(v) + ")");
        }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_conflict(coords[a], coords[b], coords[c], coords[d], kCrossTol))
                return Verdict::fail("realization",
                                     "edges (" + std::to_string(a) + "," + std::to_string(b) +
                                         ") and (" + std::to_string(c) + "," +
                                         std::to_string(d) + ") cross");
        }

    // angular orders must match the rotation system, with one global
    // orientation (reflections identified)
    int global_dir = 0;  // +1 forward, -1 reversed
    for (VertexId v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 3) continue;
        const auto& rot = g.rotation(v);
        std::vector<std::pair<double, VertexId>> by_angle;
        for (VertexId u : rot) by_angle.emplace_back(angle_of(coords[v], coords[u]), u);
        std::sort(by_angle.begin(), by_angle.end());
        const std::size_t m = rot.size();
        int dir = 0;
        for (int attempt = 0; attempt < 2 && dir == 0; ++attempt) {
            for (std::size_t s = 0; s < m && dir == 0; ++s) {
                bool ok = true;
                for (std::size_t t = 0; t < m && ok; ++t) {
                    VertexId expect = attempt == 0 ? rot[t] : rot[m - 1 - t];
                    ok = by_angle[(s + t) % m].second == expect;
                }
                if (ok) dir = attempt == 0 ? 1 : -1;
            }
        }
        if (dir == 0)
            return Verdict::fail("realization",
                                 "angular order at vertex " + std::to_string(v) +
                                     " does not match the embedding");
        if (global_dir == 0) global_dir = dir;
        if (dir != global_dir)
            return Verdict::fail("realization", "mixed orientation at vertex " +
                                                    std::to_string(v));
    }
    if (global_dir == 0) global_dir = 1;

    // the designated outer face must be the unbounded one
    std::vector<Vec2> walk;
    for (VertexId v : g.outer_face().boundary) walk.push_back(coords[v]);
    double area = polygon_area(walk);
    // counterclockwise rotations trace the outer walk clockwise
    if (global_dir == 1 && area > 1e-12)
        return Verdict::fail("realization", "outer face is not the unbounded face");
    if (global_dir == -1 && area < -1e-12)
        return Verdict::fail("realization", "outer face is not the unbounded face");

    return Verdict::pass("realization");
}

namespace {

double objective_at(const FlexSystem& fs, const std::vector<double>& params,
                    bool* valid = nullptr) {
    auto coords = fs.place(params);
    if (!coords) {
        if (valid) *valid = false;
        return 0.0;
    }
    if (valid) *valid = true;
    return dist((*coords)[fs.objective.first], (*coords)[fs.objective.second]);
}

}  // namespace

FlexScanResult flex_scan(const FlexSystem& fs, int samples) {
    if (samples < 3) throw std::invalid_argument("flex_scan needs samples >= 3");
    const std::size_t np = fs.params.size();
    const std::size_t nc = fs.constraints.size();
    if (np == 0 || np - nc != 1)
        throw std::invalid_argument("flex_scan supports exactly one free parameter");

    // Parameterize by t in [0,1] along the constrained segment of the box.
    auto params_at = [&](double t) -> std::optional<std::vector<double>> {
        std::vector<double> p(np);
        if (np == 1) {
            p[0] = fs.params[0].lo + t * (fs.params[0].hi - fs.params[0].lo);
        } else if (np == 2 && nc == 1) {
            // c0*x + c1*y = rhs; sweep x across its box, derive y
            const auto& con = fs.constraints[0];
            double x = fs.params[0].lo + t * (fs.params[0].hi - fs.params[0].lo);
            if (std::abs(con.coeffs[1]) < 1e-14) return std::nullopt;
            double y = (con.rhs - con.coeffs[0] * x) / con.coeffs[1];
            if (y < fs.params[1].lo - 1e-12 || y > fs.params[1].hi + 1e-12) return std::nullopt;
            p[0] = x;
            p[1] = y;
        } else {
            return std::nullopt;
        }
        return p;
    };

    bool any = false;
    FlexScanResult res;
    double tmin = 0.0, tmax = 0.0;
    for (int i = 0; i < samples; ++i) {
        double t = static_cast<double>(i) / (samples - 1);
        auto p = params_at(t);
        if (!p) continue;
        bool valid = false;
        double obj = objective_at(fs, *p, &valid);
        if (!valid) continue;
        if (!any || obj < res.min) {
            res.min = obj;
            res.argmin = *p;
            tmin = t;
        }
        if (!any || obj > res.max) {
            res.max = obj;
            res.argmax = *p;
            tmax = t;
        }
        any = true;
    }
    if (!any) throw std::runtime_error("EmptyDomain: no valid flex samples");

    // golden-section refinement around each extremum
    auto refine = [&](double tc, bool minimize) {
        double lo = std::max(0.0, tc - 1.5 / (samples - 1));
        double hi = std::min(1.0, tc + 1.5 / (samples - 1));
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        auto value = [&](double t) -> std::optional<double> {
            auto p = params_at(t);
            if (!p) return std::nullopt;
            bool valid = false;
            double obj = objective_at(fs, *p, &valid);
            if (!valid) return std::nullopt;
            return minimize ? obj : -obj;
        };
        double a = lo, b = hi;
        double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
        auto f1 = value(x1), f2 = value(x2);
        int guard = 200;
        while (b - a > 1e-10 && guard-- > 0) {
            double v1 = f1 ? *f1 : 1e100;
            double v2 = f2 ? *f2 : 1e100;
            if (v1 < v2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - phi * (b - a);
                f1 = value(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + phi * (b - a);
                f2 = value(x2);
            }
        }
        double tbest = (a + b) / 2;
        auto p = params_at(tbest);
        if (!p) return;
        bool valid = false;
        double obj = objective_at(fs, *p, &valid);
        if (!valid) return;
        if (minimize && obj < res.min) {
            res.min = obj;
            res.argmin = *p;
        }
        if (!minimize && obj > res.max) {
            res.max = obj;
            res.argmax = *p;
        }
    };
    refine(tmin, true);
    refine(tmax, false);
    return res;
}

std::vector<Vec2> tutte_layout(const PlaneGraph& g) {
    const int n = g.n();
    std::vector<Vec2> pos(n);
    if (n == 1) return pos;
    const Face& outer = g.outer_face();
    const int k = outer.size();
    double radius = k >= 3 ? 0.5 / std::sin(std::numbers::pi / k) : 0.5;
    std::vector<char> fixed(n, 0);
    for (int i = 0; i < k; ++i) {
        VertexId v = outer.boundary[i];
        if (fixed[v]) continue;  // pinched walks: keep the first visit
        double ang = -2.0 * std::numbers::pi * i / k;  // clockwise outer walk
        pos[v] = {radius * std::cos(ang), radius * std::sin(ang)};
        fixed[v] = 1;
    }
    std::vector<VertexId> inner;
    std::vector<int> idx(n, -1);
    for (VertexId v = 0; v < n; ++v)
        if (!fixed[v]) {
            idx[v] = static_cast<int>(inner.size());
            inner.push_back(v);
        }
    const int m = static_cast<int>(inner.size());
    if (m == 0) return pos;

    // Laplacian solve: coordinates of interior vertices average neighbors.
    std::vector<std::vector<double>> A(m, std::vector<double>(m, 0.0));
    std::vector<double> bx(m, 0.0), by(m, 0.0);
    for (int i = 0; i < m; ++i) {
        VertexId v = inner[i];
        A[i][i] = static_cast<double>(g.degree(v));
        for (VertexId u : g.rotation(v)) {
            if (fixed[u]) {
                bx[i] += pos[u].x;
                by[i] += pos[u].y;
            } else {
                A[i][idx[u]] -= 1.0;
            }
        }
    }
    // Gaussian elimination with partial pivoting
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        std::swap(A[col], A[piv]);
        std::swap(bx[col], bx[piv]);
        std::swap(by[col], by[piv]);
        double diag = A[col][col];
        if (std::abs(diag) < 1e-14) continue;
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            double f = A[r][col] / diag;
            if (f == 0.0) continue;
            for (int c2 = col; c2 < m; ++c2) A[r][c2] -= f * A[col][c2];
            bx[r] -= f * bx[col];
            by[r] -= f * by[col];
        }
    }
    for (int i = 0; i < m; ++i) {
        double diag = A[i][i];
        if (std::abs(diag) < 1e-14) continue;
        pos[inner[i]] = {bx[i] / diag, by[i] / diag};
    }
    return pos;
}

double edge_residual_sum(const PlaneGraph& g, const std::vector<Vec2>& coords) {
    double acc = 0.0;
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.rotation(u)) {
            if (v < u) continue;
            double r = dist(coords[u], coords[v]) - 1.0;
            acc += r * r;
        }
    return acc;
}

std::vector<double> edge_residual_gradient(const PlaneGraph& g, const std::vector<Vec2>& coords) {
    std::vector<double> grad(2 * g.n(), 0.0);
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.rotation(u)) {
            if (v < u) continue;
            Vec2 delta = coords[u] - coords[v];
            double len = delta.norm();
            if (len < 1e-14) continue;
            double r = len - 1.0;
            double f = 2.0 * r / len;
            grad[2 * u] += f * delta.x;
            grad[2 * u + 1] += f * delta.y;
            grad[2 * v] -= f * delta.x;
            grad[2 * v + 1] -= f * delta.y;
        }
    return grad;
}

namespace {

// Gauss-Newton with Levenberg damping on edge-length residuals; the first
// edge is pinned to (0,0)-(1,0) to fix the frame.
bool least_squares_polish(const PlaneGraph& g, std::vector<Vec2>& coords, int max_iters = 300) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.rotation(u))
            if (u < v) edges.emplace_back(u, v);
    if (edges.empty()) return true;

    VertexId pin_a = edges[0].first;
    VertexId pin_b = edges[0].second;
    // normalize the frame
    {
        Vec2 origin = coords[pin_a];
        for (auto& p : coords) p = p - origin;
        Vec2 dir = coords[pin_b];
        double len = dir.norm();
        if (len > 1e-14) {
            double c = dir.x / len, s = dir.y / len;
            for (auto& p : coords) p = {c * p.x + s * p.y, -s * p.x + c * p.y};
        }
    }

    std::vector<int> var(2 * g.n(), -1);
    int nv = 0;
    for (VertexId v = 0; v < g.n(); ++v) {
        if (v == pin_a) continue;
        var[2 * v] = nv++;
        if (v == pin_b) continue;  // keep pin_b on the x-axis
        var[2 * v + 1] = nv++;
    }

    double lambda = 1e-6;
    double prev = edge_residual_sum(g, coords);
    for (int iter = 0; iter < max_iters; ++iter) {
        std::vector<std::vector<double>> H(nv, std::vector<double>(nv, 0.0));
        std::vector<double> rhs(nv, 0.0);
        double sum = 0.0;
        double max_r = 0.0;
        for (auto [u, v] : edges) {
            Vec2 delta = coords[u] - coords[v];
            double len = delta.norm();
            if (len < 1e-14) len = 1e-14;
            double r = len - 1.0;
            sum += r * r;
            max_r = std::max(max_r, std::abs(r));
            double jx = delta.x / len, jy = delta.y / len;
            int iux = var[2 * u], iuy = var[2 * u + 1];
            int ivx = var[2 * v], ivy = var[2 * v + 1];
            int idxs[4] = {iux, iuy, ivx, ivy};
            double vals[4] = {jx, jy, -jx, -jy};
            for (int a2 = 0; a2 < 4; ++a2) {
                if (idxs[a2] < 0) continue;
                rhs[idxs[a2]] -= vals[a2] * r;
                for (int b2 = 0; b2 < 4; ++b2) {
                    if (idxs[b2] < 0) continue;
                    H[idxs[a2]][idxs[b2]] += vals[a2] * vals[b2];
                }
            }
        }
        if (max_r < 1e-13) return true;

        for (int i = 0; i < nv; ++i) H[i][i] += lambda;
        // Gaussian elimination
        std::vector<double> step = rhs;
        std::vector<std::vector<double>> M = H;
        bool singular = false;
        for (int col = 0; col < nv; ++col) {
            int piv = col;
            for (int r2 = col + 1; r2 < nv; ++r2)
                if (std::abs(M[r2][col]) > std::abs(M[piv][col])) piv = r2;
            std::swap(M[col], M[piv]);
            std::swap(step[col], step[piv]);
            if (std::abs(M[col][col]) < 1e-14) {
                singular = true;
                break;
            }
            for (int r2 = 0; r2 < nv; ++r2) {
                if (r2 == col) continue;
                double f = M[r2][col] / M[col][col];
                if (f == 0.0) continue;
                for (int c2 = col; c2 < nv; ++c2) M[r2][c2] -= f * M[col][c2];
                step[r2] -= f * step[col];
            }
        }
        if (singular) {
            lambda *= 10.0;
            continue;
        }
        for (int i = 0; i < nv; ++i) step[i] /= M[i][i];

        std::vector<Vec2> trial = coords;
        for (VertexId v = 0; v < g.n(); ++v) {
            if (var[2 * v] >= 0) trial[v].x += step[var[2 * v]];
            if (var[2 * v + 1] >= 0) trial[v].y += step[var[2 * v + 1]];
        }
        double trial_sum = edge_residual_sum(g, trial);
        if (trial_sum < sum) {
            coords = std::move(trial);
            lambda = std::max(lambda * 0.3, 1e-12);
            if (std::abs(prev - trial_sum) < 1e-30 && trial_sum < 1e-24) return true;
            prev = trial_sum;
        } else {
            lambda *= 10.0;
            if (lambda > 1e8) return sum < 1e-20;
        }
    }
    return edge_residual_sum(g, coords) < 1e-20;
}

Realization make_realization(const PlaneGraph& g, std::vector<Vec2> coords) {
    Realization r;
    double max_err = 0.0;
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.rotation(u))
            if (u < v) max_err = std::max(max_err, std::abs(dist(coords[u], coords[v]) - 1.0));
    r.max_edge_error = max_err;
    std::vector<Vec2> walk;
    for (VertexId v : g.outer_face().boundary) walk.push_back(coords[v]);
    r.outer_area = walk.size() >= 3 ? std::abs(polygon_area(walk)) : 0.0;
    r.crossing_free = verify_realization(g, coords, std::max(1e-8, max_err * 2)).passed;
    r.coords = std::move(coords);
    return r;
}

std::uint64_t code_hash(const CanonicalCode& code) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint8_t b : code.bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

RealizeVerdict solve(const PlaneGraph& g, const SolveOptions& opts) {
    RealizeVerdict verdict;
    if (g.n() == 1) {
        verdict.tag = RealizeVerdict::Tag::Realizable;
        verdict.realization = make_realization(g, {Vec2{0, 0}});
        return verdict;
    }

    auto clusters = build_clusters(g);
    for (const auto& cl : clusters)
        if (cl.infeasible && cl.infeasible_witness.u >= 0 &&
            cl.infeasible_witness.gap() > kCheckTol) {
            verdict.tag = RealizeVerdict::Tag::Infeasible;
            verdict.witness = cl.infeasible_witness;
            verdict.gap = cl.infeasible_witness.gap();
            verdict.detail = "rigid part is contradictory: " + cl.infeasible_witness.note;
            return verdict;
        }

    // coordinate propagation from every triangle edge
    auto bases = triangle_base_edges(g);
    int best_stalled_base = -1;
    int best_stalled_count = -1;
    bool any_degenerate = false;
    for (std::size_t bi = 0; bi < bases.size(); ++bi) {
        Propagator prop(g, clusters);
        prop.place_base(bases[bi].first, bases[bi].second);
        prop.settle();
        const PartialPlacement& st = prop.state();

        if (st.complete && !st.violation) {
            std::vector<Vec2> coords = st.pos;
            least_squares_polish(g, coords);
            Verdict v = verify_realization(g, coords, opts.tol);
            if (v.passed) {
                verdict.tag = RealizeVerdict::Tag::Realizable;
                verdict.realization = make_realization(g, std::move(coords));
                return verdict;
            }
            if (!st.degenerate && !prop.ambiguous()) {
                verdict.tag = RealizeVerdict::Tag::Infeasible;
                ForcedCheck chk;
                chk.note = v.witness;
                verdict.witness = chk;
                verdict.gap = kCheckTol * 2;  // structural obstruction
                verdict.detail = "unique coordinates violate the embedding: " + v.witness;
                return verdict;
            }
            any_degenerate = true;
            continue;
        }
        if (st.violation && !prop.ambiguous() && st.violation->gap() > kCheckTol) {
            verdict.tag = RealizeVerdict::Tag::Infeasible;
            verdict.witness = st.violation;
            verdict.gap = st.violation->gap();
            verdict.detail = "forced distance conflict: " + st.violation->note;
            return verdict;
        }
        if (st.violation) {
            any_degenerate = true;
            continue;
        }
        if (st.placed_count() > best_stalled_count) {
            best_stalled_count = st.placed_count();
            best_stalled_base = static_cast<int>(bi);
        }
    }

    // one-parameter family: scan a pending rotor from the best stalled base
    if (best_stalled_base >= 0) {
        auto base = bases[best_stalled_base];
        Propagator stalled(g, clusters);
        stalled.place_base(base.first, base.second);
        stalled.settle();
        int rotor = stalled.pending_rotor();
        if (rotor >= 0) {
            auto shoot = [&](double theta, bool mirror) {
                Propagator p2(g, clusters);
                p2.set_scoring(true);
                p2.place_base(base.first, base.second);
                p2.settle();
                p2.attach_rotor_at(rotor, theta, mirror);
                p2.settle();
                return p2;
            };
            const int samples = std::max(16, opts.flex_samples);
            const bool flex_debug = std::getenv("MATCHSTICK_FLEX_DEBUG") != nullptr;
            double best_score = 1e100;
            double best_theta = 0.0;
            bool best_mirror = false;
            bool scan_usable = true;
            for (int mi = 0; mi < 2 && scan_usable; ++mi) {
                for (int i = 0; i < samples; ++i) {
                    double theta = 2.0 * std::numbers::pi * i / samples;
                    Propagator p2 = shoot(theta, mi != 0);
                    if (p2.state().placed_count() < g.n()) {
                        scan_usable = false;  // a second degree of freedom
                        break;
                    }
                    double sc = p2.score();
                    if (flex_debug && i % std::max(1, samples / 64) == 0)
                        std::fprintf(stderr, "flex mi=%d theta=%.4f score=%.6g viol=%s\n", mi,
                                     theta, sc,
                                     p2.state().violation ? p2.state().violation->note.c_str()
                                                          : "-");
                    if (sc < best_score) {
                        best_score = sc;
                        best_theta = theta;
                        best_mirror = mi != 0;
                    }
                }
            }
            if (scan_usable) {
                // golden-section refinement of the residual near the best angle
                double span = 2.0 * std::numbers::pi / samples;
                double a = best_theta - span, b = best_theta + span;
                const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
                double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
                double f1 = shoot(x1, best_mirror).score();
                double f2 = shoot(x2, best_mirror).score();
                int guard = 120;
                while (b - a > 1e-12 && guard-- > 0) {
                    if (f1 < f2) {
                        b = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = b - phi * (b - a);
                        f1 = shoot(x1, best_mirror).score();
                    } else {
                        a = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = a + phi * (b - a);
                        f2 = shoot(x2, best_mirror).score();
                    }
                }
                double theta_star = (a + b) / 2;
                Propagator pbest = shoot(theta_star, best_mirror);
                double res = std::sqrt(pbest.score());
                if (res < 1e-5) {
                    std::vector<Vec2> coords = pbest.state().pos;
                    least_squares_polish(g, coords);
                    Verdict v = verify_realization(g, coords, opts.tol);
                    if (v.passed) {
                        verdict.tag = RealizeVerdict::Tag::Realizable;
                        verdict.realization = make_realization(g, std::move(coords));
                        return verdict;
                    }
                    // the refined angle may sit on a degenerate configuration
                    // of a genuinely flexible family; look for an embeddable
                    // zero elsewhere in the parameter range
                    for (int i = 0; i < samples; i += std::max(1, samples / 256)) {
                        double theta = 2.0 * std::numbers::pi * i / samples;
                        for (int mi = 0; mi < 2; ++mi) {
                            Propagator p2 = shoot(theta, mi != 0);
                            if (p2.state().placed_count() < g.n()) continue;
                            if (p2.score() > 1e-10) continue;
                            std::vector<Vec2> c2 = p2.state().pos;
                            least_squares_polish(g, c2);
                            Verdict v2 = verify_realization(g, c2, opts.tol);
                            if (v2.passed) {
                                verdict.tag = RealizeVerdict::Tag::Realizable;
                                verdict.realization = make_realization(g, std::move(c2));
                                return verdict;
                            }
                        }
                    }
                    // residual vanishes only at a non-embeddable parameter:
                    // margin = best residual among embeddable configurations
                    double valid_min = 1e100;
                    for (int i = 0; i < samples; ++i) {
                        double theta = 2.0 * std::numbers::pi * i / samples;
                        for (int mi = 0; mi < 2; ++mi) {
                            Propagator p2 = shoot(theta, mi != 0);
                            if (p2.state().placed_count() < g.n()) continue;
                            Verdict emb = verify_realization(g, p2.state().pos, 1.0);
                            if (emb.passed)
                                valid_min = std::min(valid_min, std::sqrt(p2.score()));
                        }
                    }
                    verdict.tag = RealizeVerdict::Tag::Flexible;
                    verdict.detail =
                        "one-parameter family; the unit requirements close only at a "
                        "non-embeddable configuration: " + v.witness;
                    if (pbest.state().violation) verdict.witness = pbest.state().violation;
                    verdict.gap = valid_min < 1e100 ? valid_min : res;
                    if (verdict.gap > kCheckTol) return verdict;
                    verdict.tag = RealizeVerdict::Tag::Unknown;
                    verdict.detail = "flex closes within tolerance of a degenerate point";
                    return verdict;
                }
                if (res > kCheckTol) {
                    verdict.tag = RealizeVerdict::Tag::Flexible;
                    verdict.gap = res;
                    if (pbest.state().violation) verdict.witness = pbest.state().violation;
                    verdict.detail =
                        "one-parameter family never satisfies all unit constraints; best "
                        "residual " + std::to_string(res);
                    return verdict;
                }
            }
        }
    }

    // least-squares fallback with deterministic restarts
    std::mt19937_64 rng(code_hash(canonical_code(g)) ^ (opts.seed + 0x9e3779b97f4a7c15ULL));
    std::normal_distribution<double> noise(0.0, 0.35);
    std::vector<Vec2> tutte = tutte_layout(g);
    double best_residual = 1e100;
    for (int attempt = 0; attempt < std::max(1, opts.restarts); ++attempt) {
        std::vector<Vec2> coords = tutte;
        if (attempt > 0)
            for (auto& p : coords) p = {p.x + noise(rng), p.y + noise(rng)};
        least_squares_polish(g, coords);
        double res = edge_residual_sum(g, coords);
        best_residual = std::min(best_residual, res);
        if (res > opts.tol * opts.tol) continue;
        Verdict v = verify_realization(g, coords, opts.tol);
        if (v.passed) {
            verdict.tag = RealizeVerdict::Tag::Realizable;
            verdict.realization = make_realization(g, std::move(coords));
            return verdict;
        }
    }
    verdict.tag = RealizeVerdict::Tag::Unknown;
    verdict.detail = "restarts exhausted; best squared residual " +
                     std::to_string(best_residual) +
                     (any_degenerate ? "; a propagation pass was degenerate" : "");
    return verdict;
}

}  // namespace matchstick
