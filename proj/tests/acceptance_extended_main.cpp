// Extended acceptance: the outer-size-7 classification (long running) and a
// deeper generator-against-oracle equivalence check.
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "matchstick/generator.hpp"
#include "matchstick/realizer.hpp"
#include "oracle_enum.hpp"

using namespace matchstick;

int main() {
    int failures = 0;

    // criterion 2: outer size 7, 2-connected: exactly 34 matchstick graphs,
    // each with at most two inner vertices
    {
        int max_n = 13;
        if (const char* env = std::getenv("MATCHSTICK_K7_MAX_N")) max_n = std::atoi(env);
        SearchConfig config = SearchConfig::classify({7}, max_n, true);
        config.parallel_width = 2;
        std::vector<SearchNode> candidates;
        enumerate(config, [&](const SearchNode& n, const std::vector<Verdict>&) {
            candidates.push_back(n);
        });
        int realizable = 0;
        int max_inner = 0;
        std::map<int, int> by_inner;
        for (const auto& c : candidates) {
            RealizeVerdict v = solve(c.graph);
            if (!v.realizable()) continue;
            ++realizable;
            FaceProfile p = face_profile(c.graph);
            int inner = p.n - p.k;
            max_inner = std::max(max_inner, inner);
            ++by_inner[inner];
        }
        std::ostringstream os;
        os << "candidates " << candidates.size() << ", realizable " << realizable
           << " (expected 34), max inner vertices " << max_inner << " (expected <= 2);";
        for (auto [inner, count] : by_inner) os << " inner=" << inner << ": " << count;
        bool ok = realizable == 34 && max_inner <= 2;
        std::printf("%-4s criterion-2: %s\n", ok ? "PASS" : "FAIL", os.str().c_str());
        if (!ok) ++failures;
    }

    // generator exhaustiveness against the brute-force oracle
    {
        int limit = 7;
        if (const char* env = std::getenv("MATCHSTICK_ORACLE_N")) limit = std::atoi(env);
        auto oracle = matchstick::test::oracle_enumerate(limit);
        SearchConfig config = SearchConfig::tau_target(4, limit);
        config.filters.clear();
        std::set<CanonicalCode> generated;
        enumerate(config, {}, [&](const SearchNode& n) { generated.insert(n.code); });
        bool ok = generated == oracle;
        std::printf("%-4s oracle-equivalence: n<=%d: oracle %zu, generated %zu\n",
                    ok ? "PASS" : "FAIL", limit, oracle.size(), generated.size());
        if (!ok) ++failures;
    }

    return failures == 0 ? 0 : 1;
}
