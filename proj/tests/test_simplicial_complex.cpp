#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "toriclift/seeds.hpp"
#include "toriclift/simplicial_complex.hpp"

using namespace toriclift;

namespace {

std::vector<VertexSet> masks(const std::vector<std::vector<int>>& sets) {
    std::vector<VertexSet> out;
    for (const auto& s : sets) out.push_back(vertices_to_set(s));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("from_facets validation") {
    SimplicialComplex p5 = pentagon();
    CHECK(p5.m == 5);
    CHECK(p5.n == 2);
    CHECK(p5.facet_count() == 5);

    SimplicialComplex sq = boundary_of_square();
    CHECK(sq.facets == masks({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));

    SimplicialComplex ghost = from_facets(3, {{1, 2}});
    CHECK(ghost.m == 3);
    CHECK(ghost_vertices(ghost) == singleton(3));

    CHECK_THROWS_AS(from_facets(4, {{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(from_facets(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(from_facets(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("minimal non-faces") {
    CHECK(minimal_non_faces(pentagon()) == masks({{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}));
    CHECK(minimal_non_faces(boundary_of_square()) == masks({{1, 2}, {3, 4}}));
    CHECK(minimal_non_faces(from_facets(3, {{1, 2}, {1, 3}, {2, 3}})) == masks({{1, 2, 3}}));
    // ghost vertices appear as singletons
    CHECK(minimal_non_faces(from_facets(3, {{1, 2}})) == masks({{3}}));
}

TEST_CASE("round trip between facets and minimal non-faces") {
    for (const auto& name : builtin_names()) {
        SimplicialComplex k = *builtin_complex(name);
        if (k.m > 20) continue;
        SimplicialComplex back = from_minimal_non_faces(k.m, minimal_non_faces(k));
        CHECK(back.facets == k.facets);
    }
}

TEST_CASE("link") {
    SimplicialComplex p5 = pentagon();
    SimplicialComplex lk = link(p5, singleton(1));
    // remaining vertices 2..5 relabel to 1..4; neighbors 2 and 5 become 1 and 4
    CHECK(lk.m == 4);
    CHECK(lk.facets == masks({{1}, {4}}));
    CHECK(lk.label(1) == "2");
    CHECK(lk.label(4) == "5");
    CHECK(link(p5, singleton(1), /*drop_ghosts=*/true).m == 2);

    CHECK(link(p5, 0) == p5);
    CHECK_THROWS_AS(link(p5, vertices_to_set({1, 3})), std::invalid_argument);

    // link of a wedged vertex is the original complex
    SimplicialComplex w = wedge(p5, 1);
    SimplicialComplex lkw = link(w, singleton(1));
    CHECK(lkw.m == 5);
    CHECK(isomorphic(lkw, p5));
}

TEST_CASE("deletion") {
    SimplicialComplex p5 = pentagon();
    FaceSet del = deletion(p5, singleton(1));
    CHECK(del.maximal_faces() == masks({{2, 3}, {3, 4}, {4, 5}}));

    CHECK(deletion(p5, 0).faces.empty()); // empty set is inside every face

    FaceSet sq = deletion(boundary_of_square(), singleton(1));
    CHECK(sq.faces == masks({{2}, {3}, {4}, {2, 3}, {2, 4}}));
}

TEST_CASE("join and suspension") {
    SimplicialComplex l2 = seed_l2();
    CHECK(l2.m == 8);
    CHECK(l2.n == 4);
    CHECK(l2.facet_count() == 16);

    SimplicialComplex s = suspension(pentagon());
    CHECK(s.m == 7);
    CHECK(s.n == 3);
    CHECK(s.facet_count() == 10);
    auto nf = minimal_non_faces(s);
    auto expected = masks({{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {6, 7}});
    CHECK(nf == expected);
}

TEST_CASE("wedge of the pentagon at vertex 1") {
    SimplicialComplex w = wedge(pentagon(), 1);
    CHECK(w.m == 6);
    CHECK(w.n == 3);
    // copies at positions 1,2; old vertices 2..5 shift to 3..6
    CHECK(w.facets == masks({{1, 2, 3}, {1, 2, 6}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6},
                             {2, 3, 4}, {2, 4, 5}, {2, 5, 6}}));
    CHECK(w.label(1) == "1_1");
    CHECK(w.label(2) == "1_2");
    CHECK(w.label(3) == "2");
    CHECK(minimal_non_faces(w) ==
          masks({{1, 2, 4}, {1, 2, 5}, {3, 5}, {3, 6}, {4, 6}}));
    CHECK_THROWS_AS(wedge(pentagon(), 6), std::invalid_argument);
}

TEST_CASE("wedge agrees with the minimal-non-face duplication rule") {
    for (const auto& name : {"dI", "square", "dP5", "octahedron", "dC47"}) {
        SimplicialComplex k = *builtin_complex(name);
        for (int v = 1; v <= k.m; ++v)
            CHECK(wedge(k, v).facets == wedge_via_minimal_non_faces(k, v).facets);
    }
}

TEST_CASE("wedge at a ghost vertex is the suspension") {
    SimplicialComplex p5g = from_facets(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    SimplicialComplex w = wedge(p5g, 6); // ghost: copies at positions 6,7
    CHECK(w.facets == suspension(pentagon()).facets);
}

TEST_CASE("j_construction") {
    SimplicialComplex p5 = pentagon();
    CHECK(j_construction(p5, JTuple{{1, 1, 1, 1, 1}}).facets == p5.facets);
    CHECK(j_construction(p5, JTuple{{2, 1, 1, 1, 1}}).facets == wedge(p5, 1).facets);
    CHECK_THROWS_AS(j_construction(p5, JTuple{{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(j_construction(p5, JTuple{{0, 1, 1, 1, 1}}), std::invalid_argument);

    SimplicialComplex k = j_construction(p5, JTuple{{2, 1, 3, 1, 2}});
    CHECK(k.m == 9);
    CHECK(k.picard_number() == p5.picard_number());
    CHECK(k.label(3) == "2");
    CHECK(k.label(4) == "3_1");
    CHECK(k.label(6) == "3_3");
}

TEST_CASE("j_construction facets match the independent blow-up description") {
    // Facets of K(J): all copies of the vertices of a facet F, plus all but
    // one copy of each vertex outside F.
    auto blow_up = [](const SimplicialComplex& k, const JTuple& j) {
        auto pos = j_construction_base_positions(j);
        auto copies = [&](int i) {
            VertexSet s = 0;
            for (int c = 0; c < j.entries[static_cast<std::size_t>(i - 1)]; ++c)
                s |= singleton(pos[static_cast<std::size_t>(i - 1)] + c);
            return s;
        };
        std::vector<VertexSet> out;
        std::function<void(VertexSet, int, VertexSet)> rec = [&](VertexSet f, int i, VertexSet acc) {
            if (i > k.m) {
                out.push_back(acc);
                return;
            }
            if (contains(f, i)) {
                rec(f, i + 1, acc | copies(i));
            } else {
                for (int c = 0; c < j.entries[static_cast<std::size_t>(i - 1)]; ++c)
                    rec(f, i + 1, acc | (copies(i) & ~singleton(pos[static_cast<std::size_t>(i - 1)] + c)));
            }
        };
        for (VertexSet f : k.facets) rec(f, 1, 0);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    std::mt19937_64 rng(77);
    for (const auto& name : {"dI", "square", "dP5"}) {
        SimplicialComplex k = *builtin_complex(name);
        for (int trial = 0; trial < 4; ++trial) {
            JTuple j{std::vector<int>(static_cast<std::size_t>(k.m), 1)};
            for (int& e : j.entries) e = 1 + static_cast<int>(rng() % 3);
            CHECK(j_construction(k, j).facets == blow_up(k, j));
        }
    }
}

TEST_CASE("j_construction is independent of the wedge order") {
    SimplicialComplex p5 = pentagon();
    JTuple j{{2, 1, 2, 1, 1}};
    SimplicialComplex reference = j_construction(p5, j);

    // Apply the same multiset of wedges in scrambled orders; identify copies
    // through the recorded labels and compare facet sets.
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<int> base_targets; // base vertices still needing a wedge
        for (int i = 1; i <= p5.m; ++i)
            for (int c = 1; c < j.entries[static_cast<std::size_t>(i - 1)]; ++c)
                base_targets.push_back(i);
        std::shuffle(base_targets.begin(), base_targets.end(), rng);

        SimplicialComplex cur = p5;
        cur.labels.clear();
        for (int v = 1; v <= p5.m; ++v) cur.labels.push_back(std::to_string(v));
        for (int base : base_targets) {
            // wedge at the first copy of `base` (label "base" or "base_...")
            int at = 0;
            for (int v = 1; v <= cur.m; ++v) {
                const std::string& lbl = cur.labels[static_cast<std::size_t>(v - 1)];
                if (lbl == std::to_string(base) ||
                    lbl.rfind(std::to_string(base) + "_", 0) == 0) {
                    at = v;
                    break;
                }
            }
            REQUIRE(at > 0);
            cur = wedge(cur, at);
        }
        REQUIRE(cur.m == reference.m);
        // map: sort positions by base vertex then arbitrary copy order
        std::vector<int> perm(static_cast<std::size_t>(cur.m));
        {
            std::vector<std::pair<int, int>> keyed; // (base, position)
            for (int v = 1; v <= cur.m; ++v) {
                std::string lbl = cur.labels[static_cast<std::size_t>(v - 1)];
                auto us = lbl.find('_');
                keyed.emplace_back(std::stoi(lbl.substr(0, us)), v);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](auto& a, auto& b) { return a.first < b.first; });
            for (std::size_t t = 0; t < keyed.size(); ++t)
                perm[static_cast<std::size_t>(keyed[t].second - 1)] = static_cast<int>(t) + 1;
        }
        std::vector<VertexSet> relabeled;
        for (VertexSet f : cur.facets) {
            VertexSet g = 0;
            for (int v : set_to_vertices(f)) g |= singleton(perm[static_cast<std::size_t>(v - 1)]);
            relabeled.push_back(g);
        }
        std::sort(relabeled.begin(), relabeled.end());
        CHECK(relabeled == reference.facets);
    }
}

TEST_CASE("suspension J-construction splits as a join") {
    // (dI * K)(j1, j2, J') equals dI(j1, j2) * K(J') on the nose with the
    // canonical copy ordering.
    SimplicialComplex k = pentagon();
    SimplicialComplex lhs = j_construction(join(boundary_of_edge(), k), JTuple{{2, 3, 1, 2, 1, 1, 1}});
    SimplicialComplex rhs = join(j_construction(boundary_of_edge(), JTuple{{2, 3}}),
                                 j_construction(k, JTuple{{1, 2, 1, 1, 1}}));
    CHECK(lhs.m == rhs.m);
    CHECK(lhs.facets == rhs.facets);
}

TEST_CASE("dual complex") {
    SimplicialComplex p5 = pentagon();
    SimplicialComplex d = dual_complex(p5);
    CHECK(d.facets == masks({{3, 4, 5}, {1, 4, 5}, {1, 2, 5}, {1, 2, 3}, {2, 3, 4}}));
    CHECK(dual_complex(d) == p5);
    // the square boundary is self-dual on the nose
    SimplicialComplex sq = boundary_of_square();
    CHECK(dual_complex(sq).facets == sq.facets);
}

TEST_CASE("covering pairs, seeds and suspensions") {
    SimplicialComplex w = wedge(pentagon(), 1);
    auto pair = find_wedge_or_suspension_pair(w);
    REQUIRE(pair.has_value());
    CHECK(pair->v1 == 1);
    CHECK(pair->v2 == 2);
    CHECK(pair->kind == PairKind::WedgedEdge);
    CHECK_FALSE(is_seed(w));

    SimplicialComplex s = suspension(pentagon());
    auto spair = find_wedge_or_suspension_pair(s);
    REQUIRE(spair.has_value());
    CHECK(spair->v1 == 6);
    CHECK(spair->v2 == 7);
    CHECK(spair->kind == PairKind::SuspendedPair);
    CHECK(is_seed(s));

    CHECK_FALSE(find_wedge_or_suspension_pair(pentagon()).has_value());
    CHECK(is_seed(pentagon()));
}

TEST_CASE("pseudomanifold check") {
    CHECK(is_pseudomanifold(pentagon()));
    CHECK(is_pseudomanifold(seed_l2()));
    CHECK(is_pseudomanifold(cyclic_c4_7()));
    for (const auto& name : builtin_names()) {
        SimplicialComplex k = *builtin_complex(name);
        CHECK(is_pseudomanifold(k));
        CHECK(is_pseudomanifold(wedge(k, 1)));
        CHECK(is_pseudomanifold(suspension(k)));
    }
    // a path is not a pseudomanifold (endpoints have free ridges)
    CHECK_FALSE(is_pseudomanifold(from_facets(3, {{1, 2}, {2, 3}})));
}

TEST_CASE("cyclic polytope boundary via Gale evenness") {
    SimplicialComplex c = cyclic_c4_7();
    CHECK(c.m == 7);
    CHECK(c.n == 4);
    CHECK(c.facet_count() == 14);
    CHECK(c.picard_number() == 3);
    CHECK(is_seed(c));
    // neighborly: every pair of vertices is an edge
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b) CHECK(is_face(c, vertices_to_set({a, b})));
}

TEST_CASE("Picard number under wedge and suspension") {
    for (const auto& name : {"dP5", "square", "octahedron", "dC47"}) {
        SimplicialComplex k = *builtin_complex(name);
        CHECK(wedge(k, 1).picard_number() == k.picard_number());
        CHECK(suspension(k).picard_number() == k.picard_number() + 1);
    }
}

TEST_CASE("induced subcomplex splits a suspension") {
    SimplicialComplex s = suspension(pentagon()); // pair {6,7}
    SimplicialComplex core = induced_subcomplex(s, full_set(5));
    CHECK(core == pentagon());
}

TEST_CASE("isomorphism checks") {
    SimplicialComplex p5 = pentagon();
    SimplicialComplex relabeled = from_facets(5, {{2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 2}});
    CHECK(isomorphic(p5, relabeled));
    CHECK_FALSE(isomorphic(p5, boundary_of_square()));
    CHECK(isomorphic(boundary_of_square(), from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
}
