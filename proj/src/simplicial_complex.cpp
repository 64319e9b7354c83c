#include "toriclift/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace toriclift {

namespace {

// Inserts a zero bit at 0-based position `pos`; bits at and above shift up.
VertexSet insert_gap(VertexSet mask, int pos) {
    VertexSet low = mask & ((VertexSet{1} << pos) - 1);
    VertexSet high = mask & ~((VertexSet{1} << pos) - 1);
    return low | (high << 1);
}

// Removes 0-based bit position `pos`; bits above shift down.
VertexSet remove_gap(VertexSet mask, int pos) {
    VertexSet low = mask & ((VertexSet{1} << pos) - 1);
    VertexSet high = mask >> (pos + 1);
    return low | (high << pos);
}

std::vector<int> facet_degrees(const SimplicialComplex& k) {
    std::vector<int> deg(static_cast<std::size_t>(k.m), 0);
    for (VertexSet f : k.facets)
        for (int v : set_to_vertices(f)) ++deg[static_cast<std::size_t>(v - 1)];
    return deg;
}

} // namespace

SimplicialComplex from_facet_masks(int m, std::vector<VertexSet> facets) {
    if (m < 0 || m > 64) throw std::invalid_argument("from_facets: m must be in 0..64");
    if (facets.empty()) throw std::invalid_argument("from_facets: empty facet list");
    for (VertexSet f : facets)
        if (!subset_of(f, full_set(m)))
            throw std::invalid_argument("from_facets: facet outside 1..m");
    int n = set_size(facets.front());
    for (VertexSet f : facets)
        if (set_size(f) != n)
            throw std::invalid_argument("from_facets: mixed facet cardinalities (non-pure input)");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    SimplicialComplex k;
    k.m = m;
    k.n = n;
    k.facets = std::move(facets);
    return k;
}

SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets) {
    std::vector<VertexSet> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        for (int v : f)
            if (v < 1 || v > m) throw std::invalid_argument("from_facets: vertex outside 1..m");
        VertexSet mask = vertices_to_set(f);
        if (set_size(mask) != static_cast<int>(f.size()))
            throw std::invalid_argument("from_facets: repeated vertex in facet");
        masks.push_back(mask);
    }
    return from_facet_masks(m, std::move(masks));
}

bool is_face(const SimplicialComplex& k, VertexSet sigma) {
    for (VertexSet f : k.facets)
        if (subset_of(sigma, f)) return true;
    return false;
}

VertexSet ghost_vertices(const SimplicialComplex& k) {
    VertexSet support = 0;
    for (VertexSet f : k.facets) support |= f;
    return full_set(k.m) & ~support;
}

bool is_pseudomanifold(const SimplicialComplex& k) {
    std::unordered_map<VertexSet, int> ridge_count;
    for (VertexSet f : k.facets) {
        VertexSet rest = f;
        if (k.n == 0) return k.facets.size() == 1;
        while (rest) {
            VertexSet bit = rest & (~rest + 1);
            ++ridge_count[f ^ bit];
            rest ^= bit;
        }
    }
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2) return false;
    return true;
}

std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& k) {
    if (k.m > 28) throw std::invalid_argument("minimal_non_faces: m > 28 unsupported");
    std::vector<VertexSet> out;
    // A minimal non-face has every proper subset a face, so its size is at
    // most n+1.
    for (int size = 1; size <= k.n + 1; ++size) {
        for (VertexSet s : k_subsets(k.m, size)) {
            if (is_face(k, s)) continue;
            bool minimal = true;
            VertexSet rest = s;
            while (rest && minimal) {
                VertexSet bit = rest & (~rest + 1);
                if (!is_face(k, s ^ bit)) minimal = false;
                rest ^= bit;
            }
            if (minimal) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex from_minimal_non_faces(int m, const std::vector<VertexSet>& non_faces) {
    if (m < 0 || m > 20) throw std::invalid_argument("from_minimal_non_faces: m > 20 unsupported");
    const VertexSet all = full_set(m);
    std::vector<bool> face(std::size_t{1} << m, true);
    for (VertexSet s = 0; s <= all; ++s) {
        for (VertexSet nf : non_faces)
            if (subset_of(nf, s)) {
                face[s] = false;
                break;
            }
        if (s == all) break;
    }
    std::vector<VertexSet> maximal;
    for (VertexSet s = 0;; ++s) {
        if (face[s]) {
            bool is_max = true;
            for (int b = 0; b < m && is_max; ++b)
                if (!((s >> b) & 1) && face[s | (VertexSet{1} << b)]) is_max = false;
            if (is_max) maximal.push_back(s);
        }
        if (s == all) break;
    }
    return from_facet_masks(m, std::move(maximal));
}

std::vector<VertexSet> FaceSet::maximal_faces() const {
    std::vector<VertexSet> out;
    for (VertexSet f : faces) {
        bool maximal = true;
        for (VertexSet g : faces)
            if (g != f && subset_of(f, g)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma, bool drop_ghosts) {
    if (sigma != 0 && !is_face(k, sigma)) throw std::invalid_argument("link: sigma is not a face");
    std::vector<VertexSet> lk_facets;
    for (VertexSet f : k.facets)
        if (subset_of(sigma, f)) lk_facets.push_back(f & ~sigma);

    // Compress away sigma's vertex positions (and optionally link ghosts).
    VertexSet removed = sigma;
    if (drop_ghosts) {
        VertexSet support = 0;
        for (VertexSet f : lk_facets) support |= f;
        removed = full_set(k.m) & ~support;
    }
    std::vector<int> removed_vs = set_to_vertices(removed);
    for (auto it = removed_vs.rbegin(); it != removed_vs.rend(); ++it)
        for (VertexSet& f : lk_facets) f = remove_gap(f, *it - 1);

    SimplicialComplex out = from_facet_masks(k.m - static_cast<int>(removed_vs.size()), std::move(lk_facets));
    if (out.m > 0) {
        out.labels.reserve(static_cast<std::size_t>(out.m));
        for (int v = 1; v <= k.m; ++v)
            if (!contains(removed, v)) out.labels.push_back(k.label(v));
    }
    return out;
}

FaceSet deletion(const SimplicialComplex& k, VertexSet sigma) {
    FaceSet out;
    out.m = k.m;
    std::unordered_set<VertexSet> seen;
    for (VertexSet f : k.facets) {
        // Every subset of a facet is a face; keep those not containing sigma.
        VertexSet sub = f;
        while (true) {
            if (sub != 0 && !subset_of(sigma, sub)) seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    out.faces.assign(seen.begin(), seen.end());
    std::sort(out.faces.begin(), out.faces.end());
    return out;
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    std::vector<VertexSet> facets;
    facets.reserve(k1.facets.size() * k2.facets.size());
    for (VertexSet f1 : k1.facets)
        for (VertexSet f2 : k2.facets) facets.push_back(f1 | (f2 << k1.m));
    SimplicialComplex out = from_facet_masks(k1.m + k2.m, std::move(facets));
    if (!k1.labels.empty() || !k2.labels.empty()) {
        for (int v = 1; v <= k1.m; ++v) out.labels.push_back(k1.label(v));
        for (int v = 1; v <= k2.m; ++v) out.labels.push_back(k2.label(v));
    }
    return out;
}

SimplicialComplex suspension(const SimplicialComplex& k) {
    std::vector<VertexSet> facets;
    facets.reserve(k.facets.size() * 2);
    VertexSet a = VertexSet{1} << k.m, b = VertexSet{1} << (k.m + 1);
    for (VertexSet f : k.facets) {
        facets.push_back(f | a);
        facets.push_back(f | b);
    }
    SimplicialComplex out = from_facet_masks(k.m + 2, std::move(facets));
    if (!k.labels.empty()) {
        out.labels = k.labels;
        out.labels.push_back(std::to_string(k.m + 1));
        out.labels.push_back(std::to_string(k.m + 2));
    }
    return out;
}

SimplicialComplex wedge(const SimplicialComplex& k, int v) {
    if (v < 1 || v > k.m) throw std::invalid_argument("wedge: vertex out of range");
    const VertexSet copy1 = VertexSet{1} << (v - 1);
    const VertexSet copy2 = VertexSet{1} << v;
    std::vector<VertexSet> facets;
    bool ghost = !is_face(k, singleton(v));
    for (VertexSet f : k.facets) {
        VertexSet g = insert_gap(f, v); // old v stays at position v; gap at v+1
        if (!ghost && contains(f, v)) {
            facets.push_back(g | copy2); // I * lk(v): both copies
        } else {
            facets.push_back(g | copy1); // dI * (K minus v), and the whole of
            facets.push_back(g | copy2); // K when v is a ghost (suspension)
        }
    }
    SimplicialComplex out = from_facet_masks(k.m + 1, std::move(facets));
    out.labels.reserve(static_cast<std::size_t>(out.m));
    for (int w = 1; w <= k.m; ++w) {
        if (w == v) {
            out.labels.push_back(k.label(v) + "_1");
            out.labels.push_back(k.label(v) + "_2");
        } else {
            out.labels.push_back(k.label(w));
        }
    }
    return out;
}

SimplicialComplex wedge_via_minimal_non_faces(const SimplicialComplex& k, int v) {
    if (v < 1 || v > k.m) throw std::invalid_argument("wedge: vertex out of range");
    std::vector<VertexSet> nfs;
    for (VertexSet nf : minimal_non_faces(k)) {
        VertexSet g = insert_gap(nf, v);
        if (contains(nf, v)) g |= VertexSet{1} << v; // duplicate v in the non-face
        nfs.push_back(g);
    }
    SimplicialComplex out = from_minimal_non_faces(k.m + 1, nfs);
    SimplicialComplex labeled = wedge(k, v);
    out.labels = labeled.labels;
    return out;
}

std::string JTuple::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries[i]);
    }
    return s + ")";
}

std::vector<int> j_construction_base_positions(const JTuple& j) {
    std::vector<int> pos;
    pos.reserve(j.entries.size());
    int p = 1;
    for (int e : j.entries) {
        pos.push_back(p);
        p += e;
    }
    return pos;
}

SimplicialComplex j_construction(const SimplicialComplex& k, const JTuple& j) {
    if (static_cast<int>(j.entries.size()) != k.m)
        throw std::invalid_argument("j_construction: tuple length != m");
    for (int e : j.entries)
        if (e < 1) throw std::invalid_argument("j_construction: entries must be >= 1");
    SimplicialComplex cur = k;
    int pos = 1;
    for (int i = 0; i < k.m; ++i) {
        for (int t = 1; t < j.entries[static_cast<std::size_t>(i)]; ++t) cur = wedge(cur, pos);
        pos += j.entries[static_cast<std::size_t>(i)];
    }
    cur.labels.clear();
    cur.labels.reserve(static_cast<std::size_t>(cur.m));
    for (int i = 1; i <= k.m; ++i) {
        int ji = j.entries[static_cast<std::size_t>(i - 1)];
        for (int c = 1; c <= ji; ++c)
            cur.labels.push_back(ji == 1 ? k.label(i) : k.label(i) + "_" + std::to_string(c));
    }
    return cur;
}

SimplicialComplex dual_complex(const SimplicialComplex& k) {
    std::vector<VertexSet> facets;
    facets.reserve(k.facets.size());
    for (VertexSet f : k.facets) facets.push_back(full_set(k.m) & ~f);
    SimplicialComplex out = from_facet_masks(k.m, std::move(facets));
    out.labels = k.labels;
    return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, VertexSet keep) {
    std::vector<VertexSet> candidates;
    candidates.reserve(k.facets.size());
    for (VertexSet f : k.facets) candidates.push_back(f & keep);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<VertexSet> maximal;
    for (VertexSet c : candidates) {
        bool is_max = true;
        for (VertexSet d : candidates)
            if (d != c && subset_of(c, d)) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(c);
    }
    std::vector<int> dropped = set_to_vertices(full_set(k.m) & ~keep);
    for (auto it = dropped.rbegin(); it != dropped.rend(); ++it)
        for (VertexSet& f : maximal) f = remove_gap(f, *it - 1);
    SimplicialComplex out = from_facet_masks(set_size(keep), std::move(maximal));
    if (out.m > 0 && !k.labels.empty()) {
        for (int v = 1; v <= k.m; ++v)
            if (contains(keep, v)) out.labels.push_back(k.label(v));
    }
    return out;
}

std::optional<CoveringPair> classify_pair(const SimplicialComplex& k, int v1, int v2) {
    VertexSet pair = singleton(v1) | singleton(v2);
    for (VertexSet f : k.facets)
        if ((f & pair) == 0) return std::nullopt;
    CoveringPair out;
    out.v1 = v1;
    out.v2 = v2;
    out.kind = is_face(k, pair) ? PairKind::WedgedEdge : PairKind::SuspendedPair;
    return out;
}

std::optional<CoveringPair> find_wedge_or_suspension_pair(const SimplicialComplex& k) {
    std::optional<CoveringPair> suspended;
    for (int v1 = 1; v1 <= k.m; ++v1)
        for (int v2 = v1 + 1; v2 <= k.m; ++v2) {
            auto c = classify_pair(k, v1, v2);
            if (!c) continue;
            if (c->kind == PairKind::WedgedEdge) return c;
            if (!suspended) suspended = c;
        }
    return suspended;
}

bool is_seed(const SimplicialComplex& k) {
    for (int v1 = 1; v1 <= k.m; ++v1)
        for (int v2 = v1 + 1; v2 <= k.m; ++v2) {
            auto c = classify_pair(k, v1, v2);
            if (c && c->kind == PairKind::WedgedEdge) return false;
        }
    return true;
}

std::vector<VertexSet> canonical_form(const SimplicialComplex& k) {
    if (k.m > 12) throw std::invalid_argument("canonical_form: m > 12 unsupported");
    std::vector<int> deg = facet_degrees(k);
    std::vector<int> sorted_deg = deg;
    std::sort(sorted_deg.rbegin(), sorted_deg.rend());

    // Backtrack over bijections old-vertex -> position such that the position
    // degree layout is the sorted one; keep the lexicographically smallest
    // relabeled facet list.
    std::vector<int> image(static_cast<std::size_t>(k.m), -1);
    std::vector<bool> used(static_cast<std::size_t>(k.m), false);
    std::vector<VertexSet> best;
    bool have_best = false;

    std::function<void(int)> rec = [&](int next_old) {
        if (next_old == k.m) {
            std::vector<VertexSet> relabeled;
            relabeled.reserve(k.facets.size());
            for (VertexSet f : k.facets) {
                VertexSet g = 0;
                for (int v : set_to_vertices(f))
                    g |= VertexSet{1} << image[static_cast<std::size_t>(v - 1)];
                relabeled.push_back(g);
            }
            std::sort(relabeled.begin(), relabeled.end());
            if (!have_best || relabeled < best) {
                best = relabeled;
                have_best = true;
            }
            return;
        }
        for (int pos = 0; pos < k.m; ++pos) {
            if (used[static_cast<std::size_t>(pos)]) continue;
            if (deg[static_cast<std::size_t>(next_old)] != sorted_deg[static_cast<std::size_t>(pos)])
                continue;
            used[static_cast<std::size_t>(pos)] = true;
            image[static_cast<std::size_t>(next_old)] = pos;
            rec(next_old + 1);
            used[static_cast<std::size_t>(pos)] = false;
        }
    };
    rec(0);
    return best;
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.m != b.m || a.n != b.n || a.facets.size() != b.facets.size()) return false;
    std::vector<int> da = facet_degrees(a), db = facet_degrees(b);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace toriclift
