#include <set>

#include "doctest.h"
#include "gi/graphalg.hpp"
#include "test_util.hpp"

using namespace gi;

TEST_CASE("min cut basics") {
    Digraph g(2);
    g.add_arc(0, 1, 7);
    CutResult r = max_flow_min_cut(g, 0, 1);
    CHECK(r.value == 7);
    REQUIRE(r.arcs.size() == 1);
    CHECK(r.arcs[0].from == 0);

    Digraph h(3);
    h.add_arc(1, 0, 4);  // tau unreachable from sigma
    CutResult r2 = max_flow_min_cut(h, 0, 1);
    CHECK(r2.value == 0);
    CHECK(r2.arcs.empty());

    Digraph m(2);
    m.add_arc(0, 1, 9);
    m.add_arc(0, 1, 3);  // parallel arcs merge by minimum
    CHECK(max_flow_min_cut(m, 0, 1).value == 3);
}

TEST_CASE("min cut matches subset enumeration and flow value") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Digraph g = gitest::random_digraph(seed, 4 + seed % 5, 13, 5, false);
        int s = 0, t = g.n() - 1;
        Cost brute = gitest::brute_min_cut(g, s, t);
        CutResult r = max_flow_min_cut(g, s, t);
        CHECK(r.value == brute);
        Cost w = 0;
        for (const Arc& a : r.arcs) w += a.w;
        CHECK(w == r.value);  // strong duality, cut re-scored
        // removing the cut disconnects
        std::vector<char> removed(g.arcs().size(), 0);
        for (size_t i = 0; i < g.arcs().size(); ++i)
            for (const Arc& a : r.arcs)
                if (g.arcs()[i].from == a.from && g.arcs()[i].to == a.to) removed[i] = 1;
        CHECK(gitest::arcs_disconnect(g, removed, s, t));
    }
}

TEST_CASE("vertex separator basics") {
    Digraph g(3);
    g.vertex_weight = {1, 4, 1};
    g.add_arc(0, 1, 0);
    g.add_arc(1, 2, 0);
    SeparatorResult r = min_vertex_separator(g, 0, 2);
    CHECK(r.weight == 4);
    CHECK(r.vertices == std::vector<int>{1});

    Digraph h(4);  // two vertex-disjoint paths, both must be cut
    h.vertex_weight = {1, 2, 3, 1};
    h.add_arc(0, 1, 0);
    h.add_arc(1, 3, 0);
    h.add_arc(0, 2, 0);
    h.add_arc(2, 3, 0);
    SeparatorResult r2 = min_vertex_separator(h, 0, 3);
    CHECK(r2.weight == 5);
    CHECK(r2.vertices == std::vector<int>{1, 2});

    Digraph direct(2);
    direct.vertex_weight = {1, 1};
    direct.add_arc(0, 1, 0);
    CHECK_THROWS_AS(min_vertex_separator(direct, 0, 1), NoSeparatorExists);
}

TEST_CASE("vertex separator matches subset enumeration") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Digraph g = gitest::random_digraph(seed + 1000, 4 + seed % 4, 14, 4, true);
        int s = 0, t = g.n() - 1;
        if (g.has_arc(s, t)) {
            CHECK_THROWS_AS(min_vertex_separator(g, s, t), NoSeparatorExists);
            continue;
        }
        Cost brute = gitest::brute_min_separator(g, s, t);
        SeparatorResult r = min_vertex_separator(g, s, t);
        CHECK(r.weight == brute);
        Cost w = 0;
        for (int v : r.vertices) w += g.vertex_weight[v];
        CHECK(w == r.weight);
    }
}

TEST_CASE("arborescence on the four-agent figure") {
    // merged-root graph: r, a3, a4 with the drawn weights
    Digraph g(3);  // 0 = r, 1 = a3, 2 = a4
    g.add_arc(0, 1, 5);
    g.add_arc(0, 2, 3);
    g.add_arc(1, 2, 0);
    g.add_arc(2, 1, 2);
    TreeResult r = min_spanning_arborescence(g, 0);
    CHECK(r.weight == 5);
    CHECK(r.arcs.size() == 2);
}

TEST_CASE("arborescence basics and brute force") {
    Digraph star(5);
    for (int v = 1; v < 5; ++v) star.add_arc(0, v, 1);
    CHECK(min_spanning_arborescence(star, 0).weight == 4);

    Digraph bad(3);
    bad.add_arc(0, 1, 1);
    CHECK_THROWS_AS(min_spanning_arborescence(bad, 0), NotSpannable);

    int tested = 0;
    for (std::uint64_t seed = 0; tested < 100 && seed < 4000; ++seed) {
        Digraph g = gitest::random_digraph(seed + 5000, 3 + seed % 4, 12, 5, false);
        std::vector<char> reach = g.reachable({0});
        bool spannable = true;
        for (int v = 0; v < g.n(); ++v) spannable = spannable && reach[v];
        if (!spannable) {
            CHECK_THROWS_AS(min_spanning_arborescence(g, 0), NotSpannable);
            continue;
        }
        ++tested;
        TreeResult r = min_spanning_arborescence(g, 0);
        CHECK(r.weight == gitest::brute_arborescence(g, 0));
        // arborescence shape: in-degree one per non-root vertex, no cycles
        std::vector<int> indeg(g.n(), 0);
        for (const Arc& a : r.arcs) indeg[a.to]++;
        for (int v = 0; v < g.n(); ++v) CHECK(indeg[v] == (v == 0 ? 0 : 1));
        Digraph sub(g.n());
        for (const Arc& a : r.arcs) sub.add_arc(a.from, a.to, a.w);
        std::vector<char> tree_reach = sub.reachable({0});
        for (int v = 0; v < g.n(); ++v) CHECK(tree_reach[v] == 1);
    }
    CHECK(tested == 100);
}

TEST_CASE("steiner tree on the three-agent figure") {
    // root-augmented graph for the constructive example
    Digraph g(4);  // 0..2 = a1..a3, 3 = r
    g.add_arc(3, 0, 0);
    g.add_arc(3, 1, 3);
    g.add_arc(3, 2, 4);
    g.add_arc(0, 1, 5);
    g.add_arc(0, 2, 5);
    g.add_arc(1, 0, 0);
    g.add_arc(1, 2, 1);
    g.add_arc(2, 0, 0);
    g.add_arc(2, 1, 0);
    TreeResult r = directed_steiner_tree(g, 3, {0, 1, 2});
    CHECK(r.weight == 4);
}

TEST_CASE("steiner tree edge cases and brute force") {
    Digraph g(3);
    g.add_arc(0, 1, 2);
    CHECK(directed_steiner_tree(g, 0, {}).weight == 0);
    CHECK_THROWS_AS(directed_steiner_tree(g, 0, {2}), TerminalUnreachable);
    CHECK_THROWS_AS(directed_steiner_tree(Digraph(25), 0, std::vector<int>{1,  2,  3,  4,  5,  6,
                                                                           7,  8,  9,  10, 11, 12,
                                                                           13, 14, 15, 16, 17, 18,
                                                                           19, 20, 21}),
                    TooManyTerminals);

    int tested = 0;
    for (std::uint64_t seed = 0; tested < 100 && seed < 6000; ++seed) {
        Digraph g2 = gitest::random_digraph(seed + 9000, 4 + seed % 4, 13, 5, false);
        gi::SplitMix64 rng(seed);
        std::vector<int> terms;
        int want = 1 + static_cast<int>(rng.next_range(0, 2));
        for (int i = 0; i < want; ++i)
            terms.push_back(1 + static_cast<int>(rng.next_range(0, g2.n() - 2)));
        std::vector<char> reach = g2.reachable({0});
        bool ok = true;
        for (int t : terms) ok = ok && reach[t];
        if (!ok) continue;
        ++tested;
        TreeResult r = directed_steiner_tree(g2, 0, terms);
        CHECK(r.weight == gitest::brute_steiner(g2, 0, terms));

        // every chosen arc lies on a root-to-terminal path in the solution
        Digraph sub(g2.n());
        for (const Arc& a : r.arcs) sub.add_arc(a.from, a.to, a.w);
        std::vector<char> from_root = sub.reachable({0});
        for (const Arc& a : r.arcs) {
            CHECK(from_root[a.from] == 1);
            Digraph down(g2.n());
            for (const Arc& b : r.arcs) down.add_arc(b.from, b.to, 0);
            std::vector<char> below = down.reachable({a.to});
            bool hits_terminal = false;
            for (int t : terms) hits_terminal = hits_terminal || below[t];
            CHECK(hits_terminal);
        }
    }
    CHECK(tested == 100);
}
