#include "toriclift/wedge_search.hpp"

#include <algorithm>
#include <set>

#include "toriclift/enumeration.hpp"
#include "toriclift/parallel.hpp"

namespace toriclift {

WedgeSearchResult search_idcm_tuples(const SimplicialComplex& seed, const WedgeSearchOptions& opts) {
    if (seed.picard_number() != 4)
        throw std::invalid_argument("search_idcm_tuples: seed must have Picard number 4");
    const int m = seed.m;
    const int vertex_cap = (1 << seed.picard_number()) - 1; // IDCM forces m <= 2^p - 1

    WedgeSearchResult result;
    std::vector<JTuple> frontier{JTuple{std::vector<int>(static_cast<std::size_t>(m), 1)}};
    std::vector<JTuple> no_idcm_level;

    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());

        const int level_total = frontier.front().total();
        const int level_dim = seed.n - 1 + (level_total - m);

        std::vector<char> admits(frontier.size(), 0);
        std::vector<int> facet_counts(frontier.size(), 0);
        parallel_shards(frontier.size(), [&](std::size_t, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                SimplicialComplex kj = j_construction(seed, frontier[i]);
                facet_counts[i] = kj.facet_count();
                admits[i] = has_idcm(kj) ? 1 : 0;
            }
        });

        std::vector<JTuple> has_idcm_level;
        no_idcm_level.clear();
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            ++result.tuples_examined;
            if (admits[i]) {
                has_idcm_level.push_back(frontier[i]);
                if (facet_counts[i] >= opts.facet_threshold) result.hits.push_back(frontier[i]);
            } else {
                no_idcm_level.push_back(frontier[i]);
            }
        }
        ++result.levels_processed;

        if (!opts.general_bound && level_dim >= 10) break;
        if (opts.general_bound && level_total >= vertex_cap) break;

        std::set<JTuple> pruned_successors;
        for (const JTuple& j : no_idcm_level)
            for (int k = 0; k < m; ++k) {
                JTuple s = j;
                ++s.entries[static_cast<std::size_t>(k)];
                pruned_successors.insert(std::move(s));
            }
        std::set<JTuple> next;
        for (const JTuple& j : has_idcm_level)
            for (int k = 0; k < m; ++k) {
                JTuple s = j;
                ++s.entries[static_cast<std::size_t>(k)];
                if (!pruned_successors.count(s)) next.insert(std::move(s));
            }
        frontier.assign(next.begin(), next.end());
    }

    std::sort(result.hits.begin(), result.hits.end());
    return result;
}

} // namespace toriclift
