#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "vsplit/corpus.hpp"
#include "vsplit/decomposable.hpp"
#include "vsplit/homology.hpp"
#include "vsplit/splittable.hpp"

using namespace vsplit;
using testing::ideal;

namespace {

constexpr VarSet X = 0b001, Y = 0b010, Z = 0b100;

SimplicialComplex cx(std::vector<VarSet> facets, std::size_t n = 3) { return SimplicialComplex::from_facets(facets, n); }

/// Shedding in its other form: every facet of del(x) is a facet of Δ.
bool shedding_by_facets(const std::set<VarSet>& faces, std::size_t x)
{
    const auto all = testing::maximal_of(faces);
    std::set<VarSet> del;
    for (VarSet f : faces)
        if (!(f & bit(x)))
            del.insert(f);
    for (VarSet f : testing::maximal_of(del))
        if (!all.count(f))
            return false;
    return true;
}

} // namespace

TEST_CASE("shedding vertices on small complexes")
{
    const auto c = cx({X | Z, Y});
    CHECK(is_shedding(c, 1));
    CHECK_FALSE(is_shedding(c, 0));
    CHECK_FALSE(is_shedding(c, 2));
    // <ab, cd>: no vertex sheds.
    const auto two = cx({0b0011, 0b1100}, 4);
    for (std::size_t v = 0; v < 4; ++v)
        CHECK_FALSE(is_shedding(two, v));
    CHECK_THROWS_AS(is_shedding(cx({X}, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(is_shedding(c, 9), std::invalid_argument);
}

TEST_CASE("vertex decomposable examples")
{
    const auto c = cx({X | Z, Y});
    const auto t = vertex_decomposable(c);
    REQUIRE(t);
    CHECK(is_valid_decomposition(*t));
    CHECK_FALSE(t->is_leaf());
    CHECK(t->vertex() == 1);

    CHECK(vertex_decomposable(cx({0b0011, 0b1100}, 4)) == nullptr);

    const auto simplex = vertex_decomposable(cx({X | Y | Z}));
    REQUIRE(simplex);
    CHECK(simplex->is_leaf());
    CHECK(simplex->facet() == (X | Y | Z));

    const auto empty_face = vertex_decomposable(cx({0}, 2));
    REQUIRE(empty_face);
    CHECK(empty_face->is_leaf());

    // Independence complex of the path a-b-c-d: facets ac, ad, bd.
    const auto p4 = SimplicialComplex::from_facets({0b0101, 0b1001, 0b1010}, 4);
    REQUIRE(vertex_decomposable(p4));
    CHECK(check_pd_equals_bight(p4));
}

TEST_CASE("pd and reg along a decomposition")
{
    CHECK(pd_reg_recursive(cx({X | Z, Y})) == PdReg{2, 1});
    CHECK(pd_reg_recursive(cx({X | Y | Z})) == PdReg{0, 0});
    CHECK(pd_reg_recursive(cx({X | Y}, 3)) == PdReg{1, 0});
    CHECK(pd_reg_recursive(cx({0}, 3)) == PdReg{3, 0});
    CHECK_THROWS_AS(pd_reg_recursive(cx({0b0101, 0b1010}, 4)), std::invalid_argument);
    CHECK(check_pd_equals_bight(cx({X | Z, Y})));
    CHECK(check_pd_equals_bight(cx({X | Y | Z})));
    CHECK_THROWS_AS(check_pd_equals_bight(cx({0b0011, 0b1100}, 4)), std::invalid_argument);
}

TEST_CASE("exhaustive agreement with the definition on at most 5 vertices")
{
    std::size_t count = 0, decomposable = 0;
    Decomposer decomposer;
    for (std::size_t n = 1; n <= 5; ++n) {
        for_each_complex(n, [&](const SimplicialComplex& c) {
            ++count;
            const auto faces = testing::faces_of(c.facets(), c.ground());
            for_each_bit(c.vertices(), [&](std::size_t x) { REQUIRE(is_shedding(c, x) == shedding_by_facets(faces, x)); });

            const auto tree = decomposer.decompose(c);
            REQUIRE(static_cast<bool>(tree) == testing::vd_by_definition(faces, c.ground()));
            if (!tree)
                return;
            ++decomposable;
            REQUIRE(is_valid_decomposition(*tree));
            const auto q = quotient_table(hochster_betti(c));
            const auto pr = pd_reg_recursive(*tree);
            REQUIRE(pr.pd == pd(q).value());
            REQUIRE(pr.reg == reg(q).value());
            REQUIRE(pr.pd == bight(c));
            REQUIRE(is_cohen_macaulay(c) == is_pure(c));
            // Dual facet ideal of a decomposable complex is vertex splittable.
            if (!c.is_full_simplex()) {
                const auto dual = dual_facet_ideal(c);
                const auto split = vertex_split(dual);
                REQUIRE(split);
                REQUIRE(is_valid_split_tree(*split));
            }
        });
    }
    CHECK(count == 7773);
    CHECK(decomposable > 1000);
    CHECK(decomposable < count);
}

TEST_CASE("dual facet ideals split along the decomposition")
{
    for_each_complex(4, [&](const SimplicialComplex& c) {
        const auto tree = vertex_decomposable(c);
        if (!tree || tree->is_leaf())
            return;
        const auto x = Monomial::variable(c.universe(), tree->vertex());
        const auto whole = dual_facet_ideal(c);
        const auto d = dual_facet_ideal(tree->del()->complex());
        const auto l = dual_facet_ideal(tree->lk()->complex());
        REQUIRE(whole == x * d + l);
        REQUIRE(is_subideal(l, d));
    });
}
