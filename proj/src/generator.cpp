#include "matchstick/generator.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <array>
#include <atomic>
#include <thread>

namespace matchstick {

SearchConfig SearchConfig::tau_target(int tau, int max_n) {
    SearchConfig c;
    c.mode = Mode::TauTarget;
    c.target_tau = tau;
    c.max_n = max_n;
    c.filters = default_filter_ids();
    return c;
}

SearchConfig SearchConfig::classify(std::set<int> ks, int max_n, bool two_connected) {
    SearchConfig c;
    c.mode = Mode::ClassifyK;
    c.target_ks = std::move(ks);
    c.max_n = max_n;
    c.require_two_connected = two_connected;
    c.filters = {"euler", "triangle-bound", "corollary-bounds", "quad-components",
                 "area-argument"};
    return c;
}

SearchNode seed() {
    std::vector<std::vector<VertexId>> rot = {{1, 2}, {2, 0}, {0, 1}};
    PlaneGraph g = PlaneGraph::from_rotation_system(std::move(rot), {1, 0});
    SearchNode node;
    node.code = canonical_code(g);
    node.graph = std::move(g);
    node.depth = 0;
    return node;
}

// Every inner face of a reachable graph is either a seed face or was glued,
// so the seed set must cover each admissible first inner face: one cycle per
// face size.  The triangle alone would miss the triangle-free classification
// graphs (the plain cycles and their quadrangulations).
std::vector<SearchNode> seed_cycles(const SearchConfig& config) {
    std::vector<SearchNode> out;
    int top = std::min(config.s_max, config.max_n);
    for (int m = 3; m <= top; ++m) {
        std::vector<std::vector<VertexId>> rot(m);
        for (int v = 0; v < m; ++v) rot[v] = {(v + 1) % m, (v + m - 1) % m};
        PlaneGraph g = PlaneGraph::from_rotation_system(std::move(rot), {1, 0});
        SearchNode node;
        node.code = canonical_code(g);
        node.graph = std::move(g);
        node.depth = 0;
        out.push_back(std::move(node));
    }
    return out;
}

namespace {

void insert_after(std::vector<VertexId>& rot, VertexId anchor, VertexId value) {
    for (std::size_t i = 0; i < rot.size(); ++i) {
        if (rot[i] == anchor) {
            rot.insert(rot.begin() + static_cast<long>(i) + 1, value);
            return;
        }
    }
    throw std::logic_error("insert_after: anchor not found");
}

void insert_after_pair(std::vector<VertexId>& rot, VertexId anchor, VertexId a, VertexId b) {
    for (std::size_t i = 0; i < rot.size(); ++i) {
        if (rot[i] == anchor) {
            rot.insert(rot.begin() + static_cast<long>(i) + 1, {a, b});
            return;
        }
    }
    throw std::logic_error("insert_after_pair: anchor not found");
}

// Admissibility of gluing along the boundary path of p edges starting at
// walk position i; the checks shared by every face size.
struct GlueSite {
    int i;
    int p;
    VertexId a;
    VertexId b;
    bool chord_free;  // no existing edge between the endpoints
};

std::optional<GlueSite> check_site(const PlaneGraph& g, const std::vector<VertexId>& walk,
                                   int i, int p) {
    const int L = static_cast<int>(walk.size());
    auto at = [&](int t) { return walk[((t % L) + L) % L]; };
    GlueSite site{i, p, at(i), at(i + p), false};
    if (p == 0) {
        if (g.degree(site.a) > 2) return std::nullopt;  // gains two edges
        site.chord_free = true;
        return site;
    }
    if (site.a == site.b) return std::nullopt;
    if (g.degree(site.a) > 3 || g.degree(site.b) > 3) return std::nullopt;
    for (int t = 0; t <= p; ++t) {
        VertexId v = at(i + t);
        // distinct path vertices
        for (int u = t + 1; u <= p; ++u)
            if (at(i + u) == v) return std::nullopt;
        // covered vertices whose only boundary visit this is become interior
        if (t > 0 && t < p && g.outer_visits(v) == 1 && g.degree(v) != 4)
            return std::nullopt;
    }
    site.chord_free = !g.contains_edge(site.b, site.a);
    return site;
}

// Build the child for face size s at an admissible site.
PlaneGraph build_glued(const PlaneGraph& g, const std::vector<VertexId>& walk,
                       const GlueSite& site, int s) {
    const int L = static_cast<int>(walk.size());
    const int n = g.n();
    const int p = site.p;
    const int q = s - p - 1;
    auto at = [&](int t) { return walk[((t % L) + L) % L]; };

    if (p == 0) {
        std::vector<std::vector<VertexId>> rot = g.rotation_system();
        rot.resize(n + s - 1);
        VertexId c1 = n;
        VertexId clast = n + s - 2;
        for (int t = 0; t < s - 1; ++t) {
            VertexId cur = n + t;
            VertexId next = (t == s - 2) ? site.a : cur + 1;
            VertexId prev = (t == 0) ? site.a : cur - 1;
            rot[cur] = {next, prev};
        }
        insert_after_pair(rot[site.a], at(site.i + 1), c1, clast);
        return PlaneGraph::from_trusted_rotation_system(std::move(rot),
                                                        {at(site.i), at(site.i + 1)});
    }

    std::vector<std::vector<VertexId>> rot = g.rotation_system();
    rot.resize(n + q);
    // Face cycle: a -> path -> b -> c_1 -> ... -> c_q -> a.
    VertexId first_new = q > 0 ? n : site.a;
    VertexId last_new = q > 0 ? n + q - 1 : site.b;
    for (int t = 0; t < q; ++t) {
        VertexId cur = n + t;
        VertexId next = (t == q - 1) ? site.a : cur + 1;
        VertexId prev = (t == 0) ? site.b : cur - 1;
        rot[cur] = {next, prev};
    }
    // At b: new edge immediately counterclockwise-before the path neighbor.
    {
        VertexId anchor = at(site.i + p - 1);
        auto& rb = rot[site.b];
        for (std::size_t t = 0; t < rb.size(); ++t) {
            if (rb[t] == anchor) {
                rb.insert(rb.begin() + static_cast<long>(t), first_new);
                break;
            }
        }
    }
    // At a: new edge immediately counterclockwise-after the path neighbor.
    insert_after(rot[site.a], at(site.i + 1), last_new);

    return PlaneGraph::from_trusted_rotation_system(std::move(rot),
                                                    {at(site.i + p), at(site.i + p + 1)});
}

bool is_candidate(const PlaneGraph& g, const FaceProfile& p, const SearchConfig& config) {
    if (config.mode == SearchConfig::Mode::TauTarget) return p.tau == config.target_tau;
    return config.target_ks.count(g.outer_size_adjusted()) > 0;
}

// 128-bit hash of the canonical code for the dedup store.
std::pair<std::uint64_t, std::uint64_t> code_key(const CanonicalCode& code) {
    auto mix = [](std::uint64_t h) {
        h ^= h >> 30;
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 27;
        h *= 0x94d049bb133111ebULL;
        h ^= h >> 31;
        return h;
    };
    std::uint64_t h1 = 0x9e3779b97f4a7c15ULL;
    std::uint64_t h2 = 0xc2b2ae3d27d4eb4fULL;
    for (std::uint8_t b : code.bytes) {
        h1 = mix(h1 ^ b);
        h2 = mix((h2 + b) * 0x165667b19e3779f9ULL);
    }
    if (h1 == 0 && h2 == 0) h1 = 1;
    return {h1, h2};
}

// Open-addressing set of 128-bit keys, sharded to keep workers apart.
class DedupStore {
public:
    bool insert(std::pair<std::uint64_t, std::uint64_t> key) {
        Shard& shard = shards_[key.second & (kShards - 1)];
        std::lock_guard<std::mutex> lock(shard.mu);
        if ((shard.count + 1) * 10 > shard.slots.size() * 7) grow(shard);
        return insert_nolock(shard, key);
    }

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        std::mutex mu;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> slots =
            std::vector<std::pair<std::uint64_t, std::uint64_t>>(1 << 10);
        std::size_t count = 0;
    };

    static void grow(Shard& shard) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> old;
        old.swap(shard.slots);
        shard.slots.resize(old.size() * 2);
        shard.count = 0;
        for (auto& k : old)
            if (k.first || k.second) insert_nolock(shard, k);
    }

    static bool insert_nolock(Shard& shard, std::pair<std::uint64_t, std::uint64_t> key) {
        std::size_t mask = shard.slots.size() - 1;
        std::size_t pos = key.first & mask;
        while (true) {
            auto& slot = shard.slots[pos];
            if (slot.first == 0 && slot.second == 0) {
                slot = key;
                ++shard.count;
                return true;
            }
            if (slot == key) return false;
            pos = (pos + 1) & mask;
        }
    }

    std::array<Shard, kShards> shards_;
};

struct FilterPipeline {
    std::vector<const Filter*> filters;
    int target_tau;

    bool run(const PlaneGraph& g, const FaceProfile& p, std::vector<Verdict>& out) const {
        out.clear();
        bool ok = true;
        for (const Filter* f : filters) {
            Verdict v = f->run(g, p, target_tau);
            if (!v.passed) ok = false;
            out.push_back(std::move(v));
        }
        return ok;
    }
};

FilterPipeline build_pipeline(const SearchConfig& config) {
    FilterPipeline pipe;
    pipe.target_tau =
        config.mode == SearchConfig::Mode::TauTarget ? config.target_tau : -1;
    for (const auto& id : prune_order(config.filters)) {
        if (id == "realize") continue;  // applied downstream of enumeration
        pipe.filters.push_back(find_filter(id));
    }
    return pipe;
}

}  // namespace

std::vector<SearchNode> expansions(const SearchNode& node, const SearchConfig& config) {
    std::vector<SearchNode> children;
    const PlaneGraph& g = node.graph;
    const std::vector<VertexId>& walk = g.outer_face().boundary;
    const int L = static_cast<int>(walk.size());
    std::set<CanonicalCode> local;

    const int p_min = config.require_two_connected ? 1 : 0;
    for (int i = 0; i < L; ++i) {
        for (int p = p_min; p <= L - 1; ++p) {
            auto site = check_site(g, walk, i, p);
            if (!site) continue;
            int s_lo = std::max(3, p + 1 + (site->chord_free ? 0 : 1));
            for (int s = s_lo; s <= config.s_max; ++s) {
                int q = s - p - 1;
                if (p == 0) q = s - 1;
                if (g.n() + q > config.max_n) break;
                PlaneGraph child = build_glued(g, walk, *site, s);
                SearchNode c;
                c.code = canonical_code(child);
                if (!local.insert(c.code).second) continue;  // symmetric duplicates
                c.graph = std::move(child);
                c.depth = node.depth + 1;
                children.push_back(std::move(c));
            }
        }
    }
    return children;
}

namespace {

struct Scheduler {
    std::deque<SearchNode> work;
    std::mutex mu;
    std::condition_variable cv;
    int active = 0;
    bool done = false;
};

}  // namespace

EnumStats enumerate(const SearchConfig& config, const SurvivorSink& sink,
                    const NodeSink& node_sink) {
    auto t0 = std::chrono::steady_clock::now();
    EnumStats stats;
    DedupStore seen;
    FilterPipeline pipe = build_pipeline(config);

    std::mutex stats_mu;
    std::mutex sink_mu;

    std::vector<SearchNode> roots = seed_cycles(config);

    auto process = [&](const SearchNode& node, auto&& push_child) {
        if (node_sink) {
            std::lock_guard<std::mutex> lock(sink_mu);
            node_sink(node);
        }
        FaceProfile profile = face_profile(node.graph);
        bool candidate = is_candidate(node.graph, profile, config);
        std::vector<Verdict> verdicts;
        {
            std::lock_guard<std::mutex> lock(stats_mu);
            ++stats.expanded;
        }
        if (candidate) {
            bool pass = pipe.run(node.graph, profile, verdicts);
            if (pass) {
                std::lock_guard<std::mutex> lock(sink_mu);
                ++stats.survivors;
                if (sink) sink(node, verdicts);
            } else {
                std::lock_guard<std::mutex> lock(stats_mu);
                for (const auto& v : verdicts) {
                    if (!v.passed) {
                        ++stats.pruned_by_rule[v.rule];
                        break;
                    }
                }
            }
        } else {
            std::lock_guard<std::mutex> lock(stats_mu);
            ++stats.interior;
        }

        if (config.max_nodes && stats.expanded >= config.max_nodes) {
            stats.budget_exceeded = true;
            return;
        }
        for (SearchNode& child : expansions(node, config)) {
            if (!seen.insert(code_key(child.code))) continue;
            push_child(std::move(child));
        }
    };

    if (config.parallel_width <= 1) {
        std::vector<SearchNode> stack;
        for (auto it = roots.rbegin(); it != roots.rend(); ++it)
            if (seen.insert(code_key(it->code))) stack.push_back(std::move(*it));
        while (!stack.empty()) {
            if (stats.budget_exceeded) break;
            SearchNode node = std::move(stack.back());
            stack.pop_back();
            std::vector<SearchNode> children;
            process(node, [&](SearchNode&& c) { children.push_back(std::move(c)); });
            // Depth-first, preserving expansion order.
            for (auto it = children.rbegin(); it != children.rend(); ++it)
                stack.push_back(std::move(*it));
        }
    } else {
        Scheduler sched;
        for (auto& r : roots)
            if (seen.insert(code_key(r.code))) sched.work.push_back(std::move(r));
        const std::size_t batch = 8;
        auto worker = [&]() {
            std::vector<SearchNode> mine;
            std::vector<SearchNode> produced;
            while (true) {
                mine.clear();
                {
                    std::unique_lock<std::mutex> lock(sched.mu);
                    sched.cv.wait(lock, [&] { return !sched.work.empty() || sched.done; });
                    if (sched.work.empty()) return;
                    while (!sched.work.empty() && mine.size() < batch) {
                        mine.push_back(std::move(sched.work.back()));
                        sched.work.pop_back();
                    }
                    ++sched.active;
                }
                produced.clear();
                for (auto& node : mine)
                    process(node, [&](SearchNode&& c) { produced.push_back(std::move(c)); });
                {
                    std::unique_lock<std::mutex> lock(sched.mu);
                    for (auto& c : produced) sched.work.push_back(std::move(c));
                    --sched.active;
                    if (sched.work.empty() && sched.active == 0) {
                        sched.done = true;
                        sched.cv.notify_all();
                    } else if (!sched.work.empty()) {
                        if (sched.work.size() > 1)
                            sched.cv.notify_all();
                        else
                            sched.cv.notify_one();
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < config.parallel_width; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return stats;
}

}  // namespace matchstick
