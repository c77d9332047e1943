#include "oracle_enum.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <vector>

namespace matchstick::test {

namespace {

bool connected(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int seen = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[v])
            if (!vis[u]) {
                vis[u] = 1;
                ++seen;
                q.push(u);
            }
    }
    return seen == n;
}

bool two_connected(int n, const std::vector<std::vector<int>>& adj) {
    if (n < 3) return false;
    for (int cut = 0; cut < n; ++cut) {
        std::vector<char> vis(n, 0);
        vis[cut] = 1;
        int start = cut == 0 ? 1 : 0;
        std::queue<int> q;
        q.push(start);
        vis[start] = 1;
        int seen = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v])
                if (!vis[u]) {
                    vis[u] = 1;
                    ++seen;
                    q.push(u);
                }
        }
        if (seen != n - 1) return false;
    }
    return true;
}

// all cyclic arrangements of `items` with the first element pinned
void cyclic_perms(std::vector<int> items, const std::function<void(const std::vector<int>&)>& f) {
    if (items.size() <= 2) {
        f(items);
        return;
    }
    std::sort(items.begin() + 1, items.end());
    std::vector<int> rest(items.begin() + 1, items.end());
    do {
        std::vector<int> rot;
        rot.push_back(items[0]);
        rot.insert(rot.end(), rest.begin(), rest.end());
        f(rot);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

void embeddings_of(int n, const std::vector<std::vector<int>>& adj,
                   std::set<CanonicalCode>& out) {
    // assign rotations along a connectivity-first vertex order so that face
    // cycles close early and the Euler bound prunes deep subtrees
    std::vector<int> order;
    std::vector<char> in_order(n, 0);
    order.push_back(0);
    in_order[0] = 1;
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (in_order[v]) continue;
            int links = 0;
            for (int u : adj[v]) links += in_order[u];
            if (links > best_links) {
                best_links = links;
                best = v;
            }
        }
        order.push_back(best);
        in_order[best] = 1;
    }
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    // one representative per mirror pair at the first vertex of degree >= 3
    int mirror_pivot = -1;
    for (int i = 0; i < n && mirror_pivot < 0; ++i)
        if (adj[order[i]].size() >= 3) mirror_pivot = order[i];

    int edge_total = 0;
    for (int v = 0; v < n; ++v) edge_total += static_cast<int>(adj[v].size());
    edge_total /= 2;
    const int face_budget = edge_total - n + 2;  // Euler: |F| on the sphere

    std::vector<std::vector<VertexId>> rot(n);
    std::vector<char> assigned(n, 0);

    // count face cycles fully inside the assigned set; fixed buffers, no
    // allocation on the hot path
    std::vector<std::array<char, 4>> used_buf(n);
    std::array<std::pair<int, int>, 64> walk_buf{};
    auto closed_faces = [&](int& used_directed) {
        int count = 0;
        used_directed = 0;
        auto& used = used_buf;
        for (int v = 0; v < n; ++v) used[v] = {0, 0, 0, 0};
        auto index_of = [&](int v, int u) {
            for (std::size_t i = 0; i < rot[v].size(); ++i)
                if (rot[v][i] == u) return static_cast<int>(i);
            return -1;
        };
        for (int v0 = 0; v0 < n; ++v0) {
            if (!assigned[v0]) continue;
            for (std::size_t j0 = 0; j0 < rot[v0].size(); ++j0) {
                if (used[v0][j0] || !assigned[rot[v0][j0]]) continue;
                int u = v0;
                int j = static_cast<int>(j0);
                bool closed = true;
                int wlen = 0;
                while (true) {
                    if (wlen < 64) walk_buf[wlen++] = {u, j};
                    int w = rot[u][j];
                    if (!assigned[w]) {
                        closed = false;
                        break;
                    }
                    int iu = index_of(w, u);
                    int jn = (iu - 1 + static_cast<int>(rot[w].size())) %
                             static_cast<int>(rot[w].size());
                    u = w;
                    j = jn;
                    if (u == v0 && j == static_cast<int>(j0)) break;
                    if (used[u][j]) {
                        closed = false;
                        break;
                    }
                }
                if (closed) {
                    ++count;
                    used_directed += wlen;
                }
                for (int t = 0; t < wlen; ++t)
                    if (assigned[walk_buf[t].first])
                        used[walk_buf[t].first][walk_buf[t].second] = 1;
            }
        }
        return count;
    };

    std::function<void(int)> assign = [&](int oi) {
        if (oi == n) {
            PlaneGraph g;
            try {
                g = PlaneGraph::from_rotation_system(rot, {0, rot[0][0]});
            } catch (const GraphError&) {
                return;  // nonzero genus
            }
            for (int f = 0; f < g.face_count(); ++f) {
                const Face& face = g.face(f);
                PlaneGraph rooted = PlaneGraph::from_rotation_system(
                    rot, {face.boundary[0], face.boundary[1]});
                if (!rooted.degrees_admissible()) continue;
                out.insert(canonical_code(rooted));
            }
            return;
        }
        int v = order[oi];
        int assigned_nbrs = 0;
        for (int u : adj[v]) assigned_nbrs += assigned[u];
        cyclic_perms(std::vector<int>(adj[v].begin(), adj[v].end()),
                     [&](const std::vector<int>& rotation) {
                         if (v == mirror_pivot && rotation.size() >= 3 &&
                             rotation[1] > rotation.back())
                             return;  // mirror representative
                         rot[v].assign(rotation.begin(), rotation.end());
                         assigned[v] = 1;
                         // closed faces never reopen, and every future face
                         // consumes at least three of the remaining directed
                         // edges; prune on both sides of the Euler count
                         bool ok = true;
                         if (assigned_nbrs >= 2) {
                             int used_directed = 0;
                             int closed = closed_faces(used_directed);
                             if (closed > face_budget) ok = false;
                             int remaining = 2 * edge_total - used_directed;
                             if (ok && closed + remaining / 3 < face_budget) ok = false;
                         }
                         if (ok) assign(oi + 1);
                         assigned[v] = 0;
                         rot[v].clear();
                     });
    };
    assign(0);
}

void graphs_on(int n, std::set<CanonicalCode>& out) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<std::vector<int>> adj(n);
    std::vector<int> deg(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == pairs.size()) {
            for (int v = 0; v < n; ++v)
                if (deg[v] < 2 || deg[v] > 4) return;
            if (!connected(n, adj) || !two_connected(n, adj)) return;
            embeddings_of(n, adj, out);
            return;
        }
        auto [i, j] = pairs[idx];
        // prune: vertices whose remaining pairs cannot lift them to degree 2
        rec(idx + 1);
        if (deg[i] < 4 && deg[j] < 4) {
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++deg[i];
            ++deg[j];
            rec(idx + 1);
            adj[i].pop_back();
            adj[j].pop_back();
            --deg[i];
            --deg[j];
        }
    };
    rec(0);
}

}  // namespace

std::set<CanonicalCode> oracle_enumerate(int max_n) {
    std::set<CanonicalCode> out;
    for (int n = 3; n <= max_n; ++n) graphs_on(n, out);
    return out;
}

}  // namespace matchstick::test
