#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "vsplit/corpus.hpp"
#include "vsplit/graph.hpp"

using namespace vsplit;
using testing::cycle;
using testing::ideal;
using testing::path;
using testing::table;

namespace {

Graph two_edges() { return Graph::from_edges(4, {{0, 1}, {2, 3}}); }

/// Independent sets by enumeration.
std::set<VarSet> independent_sets(const Graph& g)
{
    std::set<VarSet> out;
    const VarSet vs = g.vertices();
    for (VarSet s = vs;; s = (s - 1) & vs) {
        bool independent = true;
        for_each_bit(s, [&](std::size_t v) { independent = independent && (g.neighbors(v) & s) == 0; });
        if (independent)
            out.insert(s);
        if (s == 0)
            break;
    }
    return out;
}

} // namespace

TEST_CASE("graph construction")
{
    Graph g(3);
    g.add_edge(0, 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(2) == 0);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    const auto h = g.remove(bit(1));
    CHECK(h.vertices() == 0b101);
    CHECK(h.edge_count() == 0);
    CHECK_THROWS_AS(Graph(h).add_edge(0, 1), std::invalid_argument);
    CHECK(Graph::complete(4).edge_count() == 6);
    CHECK(path(4).edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("graph ideals and complexes")
{
    CHECK(edge_ideal(path(3)) == ideal("x y z", "xy, yz"));
    CHECK(cover_ideal(path(3)) == ideal("x y z", "y, xz"));
    CHECK(cover_ideal(path(4)) == ideal("a b c d", "ac, bc, bd"));
    CHECK(cover_ideal(Graph(3)).is_unit());
    CHECK(edge_ideal(Graph(3)).is_zero());
    CHECK(complement(path(4)) == Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 3}}));
    CHECK(complement(Graph::complete(3)).edge_count() == 0);
    CHECK(independence_complex(path(3)) == SimplicialComplex::from_facets({0b101, 0b010}, 3));
    CHECK(independence_complex(Graph::complete(3)) == SimplicialComplex::from_facets({0b001, 0b010, 0b100}, 3));
    CHECK(clique_complex(path(3)) == SimplicialComplex::from_facets({0b011, 0b110}, 3));
    // Removed vertices stay in the universe but leave the ground set.
    const auto d = independence_complex(path(4).remove(bit(1)));
    CHECK(d.ground() == 0b1101);
    CHECK(d.universe() == 4);
}

TEST_CASE("chordality")
{
    CHECK(is_chordal(path(4)));
    CHECK_FALSE(is_chordal(cycle(4)));
    CHECK(is_chordal(Graph::complete(4)));
    CHECK(is_chordal(Graph(3)));
    CHECK_FALSE(is_chordal(cycle(5)));
    const auto order = perfect_elimination_order(path(4));
    REQUIRE(order);
    CHECK(order->size() == 4);
    CHECK(simplicial_vertex(path(4)) == std::optional<std::size_t>{0});
    CHECK_FALSE(simplicial_vertex(cycle(4)).has_value());
}

TEST_CASE("domination shedding vertices")
{
    // In a-b-c-d, N[a] ⊆ N[b] and N[d] ⊆ N[c].
    CHECK(domination_shedding(path(4)) == std::vector<std::size_t>{1, 2});
    CHECK(domination_shedding(cycle(5)).empty());
    CHECK(domination_shedding(Graph(2)).empty());
}

TEST_CASE("sequentially Cohen-Macaulay bipartite graphs")
{
    const auto p4 = is_scm_bipartite(path(4));
    REQUIRE(p4);
    CHECK_FALSE(p4->is_leaf());
    CHECK(is_scm_bipartite(cycle(4)) == nullptr);
    const auto edgeless = is_scm_bipartite(Graph(3));
    REQUIRE(edgeless);
    CHECK(edgeless->is_leaf());
    CHECK(is_scm_bipartite(cycle(6)) == nullptr);
    CHECK_THROWS_AS(is_scm_bipartite(Graph::complete(3)), std::invalid_argument);
    CHECK(is_bipartite(cycle(6)));
    CHECK_FALSE(is_bipartite(cycle(5)));
}

TEST_CASE("cover ideal Betti numbers through a shedding vertex")
{
    CHECK(cover_betti_recursive(path(4), 1) == table({{0, 2, 3}, {1, 3, 2}}));
    CHECK(cover_betti_recursive(path(3), 1) == table({{0, 1, 1}, {0, 2, 1}, {1, 3, 1}}));
    CHECK(cover_betti_recursive(path(2), 0) == table({{0, 1, 2}, {1, 2, 1}}));
    CHECK(cover_betti_recursive(path(4), 1, Field::prime(2)) == koszul_betti(cover_ideal(path(4))));
    CHECK_THROWS_AS(cover_betti_recursive(path(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(cover_betti_recursive(path(4), 7), std::invalid_argument);
    CHECK_THROWS_AS(cover_betti_recursive(path(4).remove(bit(2)), 2), std::invalid_argument);
}

TEST_CASE("splitting the complement's edge ideal of a chordal graph")
{
    const auto t = chordal_split(path(4));
    REQUIRE(is_valid_split_tree(*t));
    CHECK(t->ideal() == edge_ideal(complement(path(4))));
    const auto p3 = chordal_split(path(3));
    CHECK(p3->kind() == SplitTree::Kind::Leaf);
    CHECK(p3->ideal() == ideal("x y z", "xz"));
    CHECK(chordal_split(Graph::complete(5))->kind() == SplitTree::Kind::Zero);
    CHECK_THROWS_AS(chordal_split(cycle(4)), std::invalid_argument);
}

TEST_CASE("equivalences on named graphs")
{
    const auto c4 = froberg_equivalence(cycle(4));
    CHECK(c4.complement_chordal);
    CHECK(c4.edge_ideal_linear_resolution);
    CHECK(c4.edge_ideal_vertex_splittable);
    const auto tk = froberg_equivalence(two_edges());
    CHECK_FALSE(tk.complement_chordal);
    CHECK_FALSE(tk.edge_ideal_linear_resolution);
    CHECK_FALSE(tk.edge_ideal_vertex_splittable);
    CHECK(froberg_equivalence(Graph::complete(3)).all_agree());
    CHECK(froberg_equivalence(Graph::complete(3)).complement_chordal);
    CHECK_THROWS_AS(froberg_equivalence(Graph(3)), std::invalid_argument);

    const auto p3 = corchor1_equivalence(path(3));
    CHECK(p3.complement_chordal);
    CHECK(p3.dual_vertex_decomposable);
    CHECK(p3.dual_cohen_macaulay);
    CHECK_FALSE(corchor1_equivalence(two_edges()).dual_cohen_macaulay);
    const auto c5 = corchor1_equivalence(cycle(5));
    CHECK_FALSE(c5.complement_chordal);
    CHECK(c5.all_agree());
    CHECK_THROWS_AS(corchor1_equivalence(Graph(2)), std::invalid_argument);
}

TEST_CASE("exhaustive graph properties on at most 6 vertices")
{
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            ++count;
            // Cover ideal as a generic intersection of edge primes.
            MonomialIdeal primes = MonomialIdeal::unit(n);
            for (auto [u, v] : g.edges())
                primes = intersect(primes, MonomialIdeal::variables(n, bit(u) | bit(v)));
            const auto cover = cover_ideal(g);
            REQUIRE(cover == primes);
            const auto delta = independence_complex(g);
            REQUIRE(testing::faces_of(delta.facets(), delta.ground()) == independent_sets(g));
            REQUIRE(stanley_reisner_ideal(delta) == edge_ideal(g));
            REQUIRE(is_chordal(g) == testing::chordal_by_cycles(g));
            if (auto order = perfect_elimination_order(g)) {
                // Each vertex's later neighbours form a clique.
                VarSet later = g.vertices();
                for (auto v : *order) {
                    later &= ~bit(v);
                    REQUIRE(g.is_clique(g.neighbors(v) & later));
                }
                REQUIRE(is_valid_split_tree(*chordal_split(g)));
                REQUIRE(chordal_split(g)->ideal() == edge_ideal(complement(g)));
            }
            for (auto y : domination_shedding(g))
                REQUIRE(is_shedding(delta, y));
            if (auto s = simplicial_vertex(g); s && g.degree(*s) > 0)
                for_each_bit(g.neighbors(*s), [&](std::size_t y) { REQUIRE(is_shedding(delta, y)); });
        });
    }
    CHECK(count == 1 + 2 + 8 + 64 + 1024 + 32768);
}
