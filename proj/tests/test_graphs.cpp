#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "quadpreper/catalog.hpp"
#include "quadpreper/graphs.hpp"
#include "quadpreper/preper.hpp"
#include "quadpreper/textio.hpp"

using namespace quadpreper;

namespace {

Rational rq(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

PreperGraph graph_of(long disc, const char* c_text) {
    FieldDesc k = disc == 1 ? FieldDesc::rational() : FieldDesc::make(Integer(disc));
    QuadElem c = parse_elem(c_text, k);
    return build_graph(preperiodic_points(k, c), c);
}

PreperGraph relabel(const PreperGraph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.size());
    for (int i = 0; i < g.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    PreperGraph h;
    for (int i = 0; i < g.size(); ++i) h.add_vertex();
    for (int v = 0; v < g.size(); ++v) h.set_successor(perm[v], perm[g.successor(v)]);
    return h;
}

// Exhaustive oracle: every admissible graph with the given cycle structure
// and vertex count, generated independently of admissible_closure.  The base
// graph attaches the mandatory in-degree-2 child to each cycle vertex;
// growth steps attach preimage pairs to in-degree-0 vertices.
std::set<std::string> enumerate_admissible(const std::vector<int>& cycles, int target) {
    PreperGraph base;
    for (int len : cycles) {
        std::vector<int> c;
        for (int i = 0; i < len; ++i) c.push_back(base.add_vertex());
        for (int i = 0; i < len; ++i) base.set_successor(c[i], c[(i + 1) % len]);
        for (int i = 0; i < len; ++i) {
            int leaf = base.add_vertex();
            base.set_successor(leaf, c[i]);
        }
    }
    std::set<std::string> out;
    std::set<std::string> seen;
    std::vector<PreperGraph> frontier{base};
    while (!frontier.empty()) {
        std::vector<PreperGraph> next;
        for (const auto& g : frontier) {
            if (g.size() == target) {
                out.insert(canonical_form(g));
                continue;
            }
            if (g.size() + 2 > target) continue;
            auto deg = g.in_degrees();
            for (int v = 0; v < g.size(); ++v) {
                if (deg[v] != 0) continue;
                PreperGraph h = g;
                int a = h.add_vertex();
                h.set_successor(a, v);
                int b = h.add_vertex();
                h.set_successor(b, v);
                std::string canon = canonical_form(h);
                if (seen.insert(canon).second) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(2024);
    for (const auto& g : {graph_of(-7, "3/16"), graph_of(17, "-21/16"), shape_G2(),
                          shape_12_4(), graph_of(1, "-29/16")}) {
        std::string canon = canonical_form(g);
        for (int i = 0; i < 100; ++i) CHECK(canonical_form(relabel(g, rng)) == canon);
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    // 2-cycle with a pair on each side vs both pairs stacked on one side
    CHECK(canonical_form(shape_10_3a()) != canonical_form(shape_10_3b()));
    CHECK(canonical_form(shape_G2()) != canonical_form(shape_G3()));
    CHECK(canonical_form(shape_G2()) != canonical_form(shape_10_2()));
    CHECK(canonical_form(PreperGraph()) == "empty");
}

TEST_CASE("cycle structures") {
    CHECK(cycle_structure(graph_of(1, "0")).lengths == std::vector<int>{1, 1});
    CHECK(cycle_structure(graph_of(1, "0")).str() == "(1,1)");
    auto cs33 = cycle_structure(graph_of(33, "-71/48")).lengths;
    CHECK(std::find(cs33.begin(), cs33.end(), 6) != cs33.end());
    CHECK(cycle_structure(PreperGraph()).lengths.empty());
    CHECK(cycle_structure(shape_12_42()).str() == "(4,2)");
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(shape_G2()));
    CHECK(is_strongly_admissible(graph_of(-7, "3/16")));
    // a single self-loop vertex has in-degree 1
    PreperGraph loop;
    loop.add_vertex();
    loop.set_successor(0, 0);
    CHECK_FALSE(is_admissible(loop));
    // (Q, 1/4) has one fixed point: admissible but not strongly
    PreperGraph quarter = graph_of(1, "1/4");
    CHECK(is_admissible(quarter));
    CHECK_FALSE(is_strongly_admissible(quarter));
    // 0 preperiodic breaks admissibility (odd vertex count)
    CHECK_FALSE(is_admissible(graph_of(1, "-1")));
    CHECK_FALSE(is_admissible(graph_of(1, "-2")));
}

TEST_CASE("admissibility enforces the r(N) cycle caps") {
    // two 2-cycles exceed r(2) = 1
    PreperGraph g;
    for (int rep = 0; rep < 2; ++rep) {
        int a = g.add_vertex(), b = g.add_vertex();
        g.set_successor(a, b);
        g.set_successor(b, a);
        int la = g.add_vertex(), lb = g.add_vertex();
        g.set_successor(la, a);
        g.set_successor(lb, b);
    }
    CHECK_FALSE(is_admissible(g));
}

TEST_CASE("admissible closures: worked sizes") {
    CHECK(admissible_closure({{PointType{2, 0}}, false}).size() == 4);
    CHECK(admissible_closure({{PointType{1, 0}}, false}).size() == 2);
    CHECK(shape_G0().size() == 12);
    CHECK(shape_G4().size() == 12);
    CHECK(shape_G1().size() == 10);
    CHECK(admissible_closure({{PointType{1, 2}, PointType{1, 2}, PointType{2, 0}}, false})
              .size() == 12);  // G5
    CHECK(admissible_closure({{PointType{1, 2}, PointType{1, 0}, PointType{2, 2}}, false})
              .size() == 12);  // G6
    for (const auto& g : {shape_G0(), shape_G1(), shape_G4()}) CHECK(is_admissible(g));
    // r(N) violation: three 2-cycles implied
    CHECK_THROWS_AS(admissible_closure({{PointType{2, 0}, PointType{2, 0}}, false}),
                    ConsistencyError);
    // shared-cycle attachment: two 2_1 tails on one 2-cycle give exactly 4(2)
    PreperGraph shared = admissible_closure({{PointType{2, 1}, PointType{2, 1}}, true});
    CHECK(shared.size() == 4);
    CHECK(canonical_form(shared) ==
          canonical_form(admissible_closure({{PointType{2, 0}}, false})));
}

TEST_CASE("subgraph containment") {
    PreperGraph four2 = admissible_closure({{PointType{2, 0}}, false});
    CHECK(subgraph_contains(shape_G2(), four2, false));
    CHECK(subgraph_contains(shape_G2(), four2, true));
    PreperGraph ten = graph_of(-7, "3/16");
    CHECK(subgraph_contains(ten, ten, false));
    CHECK_FALSE(subgraph_contains(ten, ten, true));
    // 3(2) = 2-cycle plus one leaf sits inside 4(2)
    PreperGraph three2;
    {
        int a = three2.add_vertex(), b = three2.add_vertex(), l = three2.add_vertex();
        three2.set_successor(a, b);
        three2.set_successor(b, a);
        three2.set_successor(l, a);
    }
    CHECK(subgraph_contains(four2, three2, true));
    // depth matters: the chain 10(2) does not embed into the bushy G3
    CHECK_FALSE(subgraph_contains(shape_G3(), shape_10_2(), false));
    CHECK(subgraph_contains(graph_of(2, "-15/8"), shape_G2(), false));
    CHECK_FALSE(subgraph_contains(graph_of(2, "-15/8"), shape_G3(), false));
    // cycle lengths must match
    CHECK_FALSE(subgraph_contains(shape_12_4(), four2, false));
}

TEST_CASE("exhaustive shape census matches the known minimality statements") {
    // counts quoted from the classification: only N(...) has k vertices
    auto c11 = enumerate_admissible({1, 1}, 4);
    CHECK(c11.size() == 1);
    CHECK(enumerate_admissible({1, 1}, 6).size() == 1);
    CHECK(enumerate_admissible({1, 1}, 8).size() == 2);
    auto ten11 = enumerate_admissible({1, 1}, 10);
    CHECK(ten11.size() == 3);  // 10(1,1)a, 10(1,1)b, G1
    CHECK(ten11.count(canonical_form(graph_of(-7, "3/16"))));
    CHECK(ten11.count(canonical_form(shape_10_11b())));
    CHECK(ten11.count(canonical_form(shape_G1())));

    CHECK(enumerate_admissible({2}, 4).size() == 1);
    CHECK(enumerate_admissible({2}, 6).size() == 1);
    CHECK(enumerate_admissible({2}, 8).size() == 2);
    auto ten2 = enumerate_admissible({2}, 10);
    CHECK(ten2.size() == 3);  // 10(2), G2, G3
    CHECK(ten2.count(canonical_form(shape_10_2())));
    CHECK(ten2.count(canonical_form(shape_G2())));
    CHECK(ten2.count(canonical_form(shape_G3())));

    CHECK(enumerate_admissible({3}, 6).size() == 1);
    CHECK(enumerate_admissible({3}, 8).size() == 1);
    auto ten3 = enumerate_admissible({3}, 10);
    CHECK(ten3.size() == 2);  // 10(3)a, 10(3)b
    CHECK(ten3.count(canonical_form(shape_10_3a())));
    CHECK(ten3.count(canonical_form(shape_10_3b())));

    CHECK(enumerate_admissible({1, 1, 2}, 8).size() == 1);
    CHECK(enumerate_admissible({1, 1, 2}, 10).size() == 2);
    auto twelve112 = enumerate_admissible({1, 1, 2}, 12);
    CHECK(twelve112.size() == 5);  // 12(2,1,1)a/b, G4, G5, G6
    CHECK(twelve112.count(canonical_form(graph_of(-7, "-5/16"))));
    CHECK(twelve112.count(canonical_form(shape_12_211b())));
    CHECK(twelve112.count(canonical_form(shape_G4())));
    CHECK(twelve112.count(canonical_form(
        admissible_closure({{PointType{1, 2}, PointType{1, 2}, PointType{2, 0}}, false}))));
    CHECK(twelve112.count(canonical_form(
        admissible_closure({{PointType{1, 2}, PointType{1, 0}, PointType{2, 2}}, false}))));

    CHECK(enumerate_admissible({1, 1, 3}, 10).size() == 1);
    CHECK(enumerate_admissible({1, 1, 3}, 12).size() == 2);  // G7, G8
    CHECK(enumerate_admissible({1, 1, 3}, 12)
              .count(canonical_form(admissible_closure(
                  {{PointType{1, 2}, PointType{1, 0}, PointType{3, 0}}, false}))));

    CHECK(enumerate_admissible({2, 3}, 10).size() == 1);
    CHECK(enumerate_admissible({2, 3}, 12).size() == 2);  // G9, G10
    CHECK(enumerate_admissible({2, 3}, 12)
              .count(canonical_form(
                  admissible_closure({{PointType{2, 2}, PointType{3, 0}}, false}))));

    CHECK(enumerate_admissible({4}, 8).size() == 1);
    auto twelve4 = enumerate_admissible({4}, 12);
    CHECK(twelve4.size() == 3);  // adjacent/opposite pairs and the chain
    CHECK(twelve4.count(canonical_form(shape_12_4())));

    auto twelve42 = enumerate_admissible({2, 4}, 12);
    CHECK(twelve42.size() == 1);
    CHECK(twelve42.count(canonical_form(shape_12_42())));
}

TEST_CASE("classify against the default catalog") {
    const Catalog& cat = default_catalog();
    CHECK(cat.classify(graph_of(17, "-21/16")) == "14(2,1,1)");
    CHECK(cat.classify(graph_of(-7, "-5/16")) == "12(2,1,1)a");
    CHECK(cat.classify(PreperGraph()) == "0");
    CHECK_FALSE(cat.classify(shape_G2()).has_value());
    CHECK(Catalog::known_labels().size() == 46);
    // every shipped representative classifies to its own label
    for (const auto& e : cat.entries())
        CHECK(cat.classify_canonical(e.canonical) == e.label);
}

TEST_CASE("catalog save/load round-trip and duplicate detection") {
    std::string path = "/tmp/qp_catalog_test.txt";
    default_catalog().save(path);
    Catalog loaded = Catalog::load(path);
    CHECK(loaded.entries().size() == default_catalog().entries().size());
    for (size_t i = 0; i < loaded.entries().size(); ++i) {
        CHECK(loaded.entries()[i].label == default_catalog().entries()[i].label);
        CHECK(loaded.entries()[i].canonical == default_catalog().entries()[i].canonical);
    }
    Catalog dup;
    dup.add({"x", "canon1", std::nullopt, std::nullopt});
    CHECK_THROWS_AS(dup.add({"x", "canon2", std::nullopt, std::nullopt}), DataIntegrityError);
    CHECK_THROWS_AS(dup.add({"y", "canon1", std::nullopt, std::nullopt}), DataIntegrityError);
}

TEST_CASE("main theorem screen") {
    const Catalog& cat = default_catalog();
    auto r1 = main_theorem_screen(graph_of(-7, "3/16"), cat);
    CHECK(r1.status == ScreenStatus::IN_CATALOG);
    CHECK(r1.label == "10(1,1)a");

    auto r2 = main_theorem_screen(shape_G0(), cat);
    CHECK(r2.status == ScreenStatus::EXCEPTIONAL);
    REQUIRE(r2.witnesses.size() >= 1);
    CHECK(std::find(r2.witnesses.begin(), r2.witnesses.end(), "G0") != r2.witnesses.end());

    auto r3 = main_theorem_screen(graph_of(1, "-1"), cat);  // 3(2), catalogued
    CHECK(r3.status == ScreenStatus::IN_CATALOG);
    CHECK(r3.label == "3(2)");

    // G1 is strongly admissible, uncatalogued, and contains none of the
    // mandated shapes: the screen must flag it loudly (consistent with its
    // provable non-realizability)
    auto r4 = main_theorem_screen(shape_G1(), cat);
    CHECK(r4.status == ScreenStatus::VIOLATION);

    // a 14-vertex chain extension of 10(1,1)b is exceptional
    {
        PreperGraph g;
        int p = g.add_vertex();
        g.set_successor(p, p);
        int a = g.add_vertex();
        g.set_successor(a, p);
        int q = g.add_vertex();
        g.set_successor(q, q);
        int prev = g.add_vertex();
        g.set_successor(prev, q);
        for (int lvl = 0; lvl < 4; ++lvl) {
            int s1 = g.add_vertex(), s2 = g.add_vertex();
            g.set_successor(s1, prev);
            g.set_successor(s2, prev);
            prev = s1;
        }
        REQUIRE(g.size() == 12);
        auto rep = main_theorem_screen(g, cat);
        CHECK(rep.status == ScreenStatus::EXCEPTIONAL);
        CHECK(std::find(rep.witnesses.begin(), rep.witnesses.end(), "10(1,1)b (proper)") !=
              rep.witnesses.end());
    }

    // 12(6) carries a six-cycle but is catalogued
    auto r6 = main_theorem_screen(graph_of(33, "-71/48"), cat);
    CHECK(r6.status == ScreenStatus::IN_CATALOG);
    CHECK(r6.label == "12(6)");

    // uncatalogued graph with a 5-cycle is out of hypothesis
    {
        PreperGraph g;
        std::vector<int> c;
        for (int i = 0; i < 5; ++i) c.push_back(g.add_vertex());
        for (int i = 0; i < 5; ++i) g.set_successor(c[i], c[(i + 1) % 5]);
        for (int i = 0; i < 5; ++i) {
            int l = g.add_vertex();
            g.set_successor(l, c[i]);
        }
        auto rep = main_theorem_screen(g, cat);
        CHECK(rep.status == ScreenStatus::OUT_OF_HYPOTHESIS);
    }
}

TEST_CASE("vertex types and DOT export") {
    PreperGraph g = graph_of(-7, "3/16");
    int ones = 0, threes = 0;
    for (int v = 0; v < g.size(); ++v) {
        PointType t = g.vertex_type(v);
        if (t == PointType{1, 0}) ++ones;
        if (t == PointType{1, 3}) ++threes;
    }
    CHECK(ones == 2);
    CHECK(threes == 4);
    std::string dot = g.dot();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("1_3") != std::string::npos);
    CHECK(dot.find("sqrt(-7)") != std::string::npos);
}
