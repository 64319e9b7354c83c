#include "toriclift/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>

#include "toriclift/parallel.hpp"

namespace toriclift {

namespace {

// Xor-basis keyed by highest set bit; insert returns the filled slot, or -1
// when the vector is dependent on the span.
struct XorBasis {
    std::array<std::uint32_t, 16> slot{};
    int insert(std::uint32_t v) {
        while (v) {
            int b = 31 - std::countl_zero(v);
            if (!slot[static_cast<std::size_t>(b)]) {
                slot[static_cast<std::size_t>(b)] = v;
                return b;
            }
            v ^= slot[static_cast<std::size_t>(b)];
        }
        return -1;
    }
    void erase(int b) { slot[static_cast<std::size_t>(b)] = 0; }
};

// Shared backtracking core: assigns a nonzero d-bit vector to each listed
// vertex, keeping every constraint set's assigned subset independent.
struct AssignmentSearch {
    int dim = 0;                                  // vector length (n or p)
    std::vector<int> order;                       // vertices, 0-based, search order
    std::vector<std::vector<int>> constraints_of; // per vertex: constraint ids
    int constraint_count = 0;

    bool distinct = false;
    // allowed_partner[v] lists vertices whose value v may share.
    std::vector<std::vector<int>> allowed_partner;

    // Runs the search over the given first-vertex values; calls sink on each
    // complete assignment (values indexed by vertex).
    template <typename Sink>
    void run(const std::vector<std::uint32_t>& first_values, Sink&& sink,
             bool stop_after_first = false) const {
        std::vector<XorBasis> basis(static_cast<std::size_t>(constraint_count));
        std::vector<std::uint32_t> value(constraints_of.size(), 0);
        std::vector<int> owner_count(std::size_t{1} << dim, 0);
        std::vector<std::vector<int>> owners(std::size_t{1} << dim);
        bool stop = false;
        dfs(0, first_values, basis, value, owner_count, owners, sink, stop_after_first, stop);
    }

private:
    template <typename Sink>
    void dfs(std::size_t pos, const std::vector<std::uint32_t>& first_values,
             std::vector<XorBasis>& basis, std::vector<std::uint32_t>& value,
             std::vector<int>& owner_count, std::vector<std::vector<int>>& owners, Sink&& sink,
             bool stop_after_first, bool& stop) const {
        if (stop) return;
        if (pos == order.size()) {
            sink(value);
            if (stop_after_first) stop = true;
            return;
        }
        int v = order[pos];
        const std::uint32_t max_val = (std::uint32_t{1} << dim) - 1;
        const bool first = pos == 0;
        std::uint32_t candidate_count = first ? static_cast<std::uint32_t>(first_values.size()) : max_val;
        for (std::uint32_t c = 0; c < candidate_count && !stop; ++c) {
            std::uint32_t val = first ? first_values[c] : c + 1;
            if (distinct && owner_count[val] > 0) {
                bool all_partnered = true;
                for (int o : owners[val])
                    if (std::find(allowed_partner[static_cast<std::size_t>(v)].begin(),
                                  allowed_partner[static_cast<std::size_t>(v)].end(),
                                  o) == allowed_partner[static_cast<std::size_t>(v)].end()) {
                        all_partnered = false;
                        break;
                    }
                if (!all_partnered) continue;
            }
            // Tentatively insert into every constraint containing v.
            std::vector<std::pair<int, int>> undo;
            bool ok = true;
            for (int cid : constraints_of[static_cast<std::size_t>(v)]) {
                int slot = basis[static_cast<std::size_t>(cid)].insert(val);
                if (slot < 0) {
                    ok = false;
                    break;
                }
                undo.emplace_back(cid, slot);
            }
            if (ok) {
                value[static_cast<std::size_t>(v)] = val;
                ++owner_count[val];
                owners[val].push_back(v);
                dfs(pos + 1, first_values, basis, value, owner_count, owners, sink,
                    stop_after_first, stop);
                owners[val].pop_back();
                --owner_count[val];
                value[static_cast<std::size_t>(v)] = 0;
            }
            for (auto it = undo.rbegin(); it != undo.rend(); ++it)
                basis[static_cast<std::size_t>(it->first)].erase(it->second);
        }
    }
};

AssignmentSearch primal_search(const SimplicialComplex& k) {
    AssignmentSearch s;
    s.dim = k.n;
    s.constraint_count = k.facet_count();
    s.constraints_of.assign(static_cast<std::size_t>(k.m), {});
    std::vector<int> degree(static_cast<std::size_t>(k.m), 0);
    for (int fi = 0; fi < k.facet_count(); ++fi)
        for (int v : set_to_vertices(k.facets[static_cast<std::size_t>(fi)])) {
            s.constraints_of[static_cast<std::size_t>(v - 1)].push_back(fi);
            ++degree[static_cast<std::size_t>(v - 1)];
        }
    for (int v = 0; v < k.m; ++v)
        if (degree[static_cast<std::size_t>(v)] > 0) s.order.push_back(v);
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });
    return s;
}

AssignmentSearch dual_search(const SimplicialComplex& k,
                             const std::vector<std::pair<int, int>>& allowed_repeats) {
    AssignmentSearch s;
    s.dim = k.m - k.n;
    auto cfs = cofacets(k);
    s.constraint_count = static_cast<int>(cfs.size());
    s.constraints_of.assign(static_cast<std::size_t>(k.m), {});
    std::vector<int> degree(static_cast<std::size_t>(k.m), 0);
    for (int ci = 0; ci < static_cast<int>(cfs.size()); ++ci)
        for (int v : set_to_vertices(cfs[static_cast<std::size_t>(ci)])) {
            s.constraints_of[static_cast<std::size_t>(v - 1)].push_back(ci);
            ++degree[static_cast<std::size_t>(v - 1)];
        }
    s.order.resize(static_cast<std::size_t>(k.m));
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });
    s.distinct = true;
    s.allowed_partner.assign(static_cast<std::size_t>(k.m), {});
    for (auto [a, b] : allowed_repeats) {
        s.allowed_partner[static_cast<std::size_t>(a - 1)].push_back(b - 1);
        s.allowed_partner[static_cast<std::size_t>(b - 1)].push_back(a - 1);
    }
    return s;
}

std::vector<BitMatrix> run_sharded(const AssignmentSearch& s,
                                   const std::function<BitMatrix(const std::vector<std::uint32_t>&)>& build) {
    const std::uint32_t nvals = (std::uint32_t{1} << s.dim) - 1;
    if (s.order.empty()) {
        // Nothing to assign (only ghosts, or an empty-dimension map).
        std::vector<std::uint32_t> value(s.constraints_of.size(), 0);
        return {build(value)};
    }
    std::vector<std::uint32_t> all_values(nvals);
    std::iota(all_values.begin(), all_values.end(), 1u);

    std::vector<std::vector<BitMatrix>> per_shard(static_cast<std::size_t>(worker_count()) + 1);
    parallel_shards(all_values.size(), [&](std::size_t shard, std::size_t b, std::size_t e) {
        std::vector<std::uint32_t> firsts(all_values.begin() + static_cast<long>(b),
                                          all_values.begin() + static_cast<long>(e));
        s.run(firsts, [&](const std::vector<std::uint32_t>& value) {
            per_shard[shard].push_back(build(value));
        });
    });
    std::vector<BitMatrix> out;
    for (auto& v : per_shard) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitMatrix> dedupe_by_normal_form(std::vector<BitMatrix> maps,
                                             const std::function<BitMatrix(const BitMatrix&)>& nf) {
    std::vector<BitMatrix> forms;
    forms.reserve(maps.size());
    for (const auto& m : maps) forms.push_back(nf(m));
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return forms;
}

} // namespace

std::vector<BitMatrix> enumerate_char_maps(const SimplicialComplex& k, const EnumerateOptions& opts) {
    AssignmentSearch s = primal_search(k);
    auto build = [&](const std::vector<std::uint32_t>& value) {
        BitMatrix m(k.n, k.m);
        for (int v = 0; v < k.m; ++v)
            for (int i = 0; i < k.n; ++i) m.set(i, v, static_cast<int>((value[static_cast<std::size_t>(v)] >> i) & 1));
        return m;
    };
    auto maps = run_sharded(s, build);
    if (opts.up_to_dj)
        return dedupe_by_normal_form(std::move(maps),
                                     [&](const BitMatrix& m) { return dj_normal_form(k, m); });
    return maps;
}

std::vector<BitMatrix> enumerate_idcm(const SimplicialComplex& k, const EnumerateOptions& opts,
                                      const std::vector<std::pair<int, int>>& allowed_repeats) {
    AssignmentSearch s = dual_search(k, allowed_repeats);
    auto build = [&](const std::vector<std::uint32_t>& value) {
        BitMatrix m(k.m, k.m - k.n);
        for (int v = 0; v < k.m; ++v) m.set_row(v, value[static_cast<std::size_t>(v)]);
        return m;
    };
    auto maps = run_sharded(s, build);
    if (opts.up_to_dj)
        return dedupe_by_normal_form(std::move(maps),
                                     [&](const BitMatrix& m) { return dual_dj_normal_form(k, m); });
    return maps;
}

bool has_idcm(const SimplicialComplex& k) {
    if (k.m > (1 << (k.m - k.n)) - 1) return false; // more vertices than nonzero vectors
    AssignmentSearch s = dual_search(k, {});
    if (s.order.empty()) return true;
    const std::uint32_t nvals = (std::uint32_t{1} << s.dim) - 1;
    std::vector<std::uint32_t> all_values(nvals);
    std::iota(all_values.begin(), all_values.end(), 1u);
    bool found = false;
    s.run(all_values, [&](const std::vector<std::uint32_t>&) { found = true; }, /*stop_after_first=*/true);
    return found;
}

std::vector<BitMatrix> enumerate_quasi_idcm(const SimplicialComplex& k, const EnumerateOptions& opts) {
    std::vector<std::pair<int, int>> suspended;
    for (int v1 = 1; v1 <= k.m; ++v1)
        for (int v2 = v1 + 1; v2 <= k.m; ++v2) {
            auto c = classify_pair(k, v1, v2);
            if (c && c->kind == PairKind::SuspendedPair) suspended.emplace_back(v1, v2);
        }
    return enumerate_idcm(k, opts, suspended);
}

std::vector<BitMatrix> reduce_idcm_by_symmetry(const SimplicialComplex& k,
                                               const std::vector<BitMatrix>& idcms) {
    std::vector<std::pair<int, int>> wedged;
    for (int v1 = 1; v1 <= k.m; ++v1)
        for (int v2 = v1 + 1; v2 <= k.m; ++v2) {
            auto c = classify_pair(k, v1, v2);
            if (c && c->kind == PairKind::WedgedEdge) wedged.emplace_back(v1, v2);
        }
    std::vector<BitMatrix> reps;
    for (const auto& m : idcms) {
        // Canonical orbit key: minimum normal form over all swap subsets.
        BitMatrix best = dual_dj_normal_form(k, m);
        const std::size_t combos = std::size_t{1} << wedged.size();
        for (std::size_t mask = 1; mask < combos; ++mask) {
            BitMatrix swapped = m;
            for (std::size_t i = 0; i < wedged.size(); ++i)
                if ((mask >> i) & 1) {
                    std::uint64_t r1 = swapped.row(wedged[i].first - 1);
                    std::uint64_t r2 = swapped.row(wedged[i].second - 1);
                    swapped.set_row(wedged[i].first - 1, r2);
                    swapped.set_row(wedged[i].second - 1, r1);
                }
            if (!is_dual_char_map(k, swapped)) continue;
            BitMatrix nf = dual_dj_normal_form(k, swapped);
            if (nf < best) best = nf;
        }
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

} // namespace toriclift
