#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "vsplit/corpus.hpp"
#include "vsplit/io.hpp"

using namespace vsplit;
using testing::ideal;
using testing::path;

TEST_CASE("ideal parsing")
{
    const auto p = parse_ideal("kind: ideal\nvars: x y z\nxy\n yz \n# comment\n");
    CHECK(p.names == Names{"x", "y", "z"});
    CHECK(p.ideal == minimalize({testing::mono({1, 1, 0}), testing::mono({0, 1, 1})}, 3));

    // Names inferred from generators, ordered naturally.
    const auto q = parse_ideal("x10*x2^3, x1");
    CHECK(q.names == Names{"x1", "x2", "x10"});
    CHECK(q.ideal.generators().front() == testing::mono({1, 0, 0}));
    CHECK(q.ideal.generators().back() == testing::mono({0, 3, 1}));

    CHECK(parse_ideal("vars: a b\n0\n").ideal.is_zero());
    CHECK(parse_ideal("vars: a b\n1\n").ideal.is_unit());
    CHECK(parse_ideal("vars: a b\n").ideal.is_zero());
    CHECK(parse_ideal("x^2 y, xy^2").ideal.size() == 2);
}

TEST_CASE("ideal parse errors")
{
    CHECK_THROWS_AS(parse_ideal("vars: x y\nxz\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x^\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x + y\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars: x x\nx\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("vars: ab c\nc\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("kind: graph\nn 2\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x^99999999999999999999\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x^4294967295 x^1\n"), ParseError);
}

TEST_CASE("complex parsing")
{
    const auto p = parse_complex("kind: complex\nvertices: a b c d\n{a,b}\nc\n");
    CHECK(p.names == Names{"a", "b", "c", "d"});
    CHECK(p.complex.ground() == 0b1111);
    CHECK(p.complex.facets() == std::vector<VarSet>{0b0011, 0b0100});
    const auto empty_face = parse_complex("vertices: a b\n-\n");
    CHECK(empty_face.complex.facets() == std::vector<VarSet>{0});
    CHECK_THROWS_AS(parse_complex("vertices: a b\n"), ParseError);
    CHECK_THROWS_AS(parse_complex("vertices: a\nb\n"), ParseError);
    CHECK_THROWS_AS(parse_complex("kind: ideal\na\n"), ParseError);
}

TEST_CASE("graph parsing")
{
    const auto p = parse_graph("kind: graph\nn 4\n0 1\n1 2\n2 3\n");
    CHECK(p.graph == path(4));
    CHECK(p.names == default_names(4));
    const auto l = parse_graph("n 3\nlabels: u v w\nu v\nv w\n");
    CHECK(l.graph == path(3));
    CHECK(l.names == Names{"u", "v", "w"});
    CHECK_THROWS_AS(parse_graph("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\nlabels: a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 99\n"), ParseError);
}

TEST_CASE("kind dispatch")
{
    CHECK(std::holds_alternative<ParsedIdeal>(parse_input("xy, yz")));
    CHECK(std::holds_alternative<ParsedGraph>(parse_input("n 3\n0 1\n")));
    CHECK(std::holds_alternative<ParsedComplex>(parse_input("kind: complex\na b\n")));
    CHECK(std::holds_alternative<ParsedGraph>(parse_input("kind: graph\nn 1\n")));
    CHECK_THROWS_AS(parse_input("kind: matroid\n"), ParseError);
    CHECK_THROWS_AS(read_file("/nonexistent/file"), ParseError);
}

TEST_CASE("names")
{
    CHECK(default_names(3) == Names{"a", "b", "c"});
    CHECK(default_names(27).back() == "x26");
    CHECK(natural_less("x2", "x10"));
    CHECK_FALSE(natural_less("x10", "x2"));
    CHECK(natural_less("a", "b"));
    CHECK(natural_less("x", "x1"));
    CHECK_FALSE(natural_less("x1", "x1"));
    CHECK(natural_less("x01", "x2"));
}

TEST_CASE("formatting")
{
    const Names xyz{"x", "y", "z"};
    CHECK(format_ideal(ideal("x y z", "xy, yz^2"), xyz) == "(xy, yz^2)");
    CHECK(format_ideal(MonomialIdeal::zero(3), xyz) == "(0)");
    CHECK(format_ideal(MonomialIdeal::unit(3), xyz) == "(1)");
    CHECK(format_monomial(testing::mono({1, 0, 2}), Names{"x1", "x2", "x3"}) == "x1*x3^2");
    CHECK(format_set(0, xyz) == "-");
    CHECK(format_set(0b101, xyz) == "x,z");
    CHECK(format_complex(SimplicialComplex::from_facets({0b010, 0b101}, 3), xyz) == "<{x,z}, {y}>");
    CHECK(format_order({2, 0}, xyz) == "z x");
    const auto order = quotient_order_from_split(*vertex_split(ideal("x y z", "y, xz")));
    CHECK(format_quotient_order(order, xyz) == "y [-] < xz [y]");
    CHECK(format_quotient_order(LinearQuotientOrder{}, xyz) == "(empty)");
    const auto d = vertex_decomposable(SimplicialComplex::from_facets({0b101, 0b010}, 3));
    CHECK(format_decomposition(*d, xyz) == "(y: x,z | -)");
    const auto scm = is_scm_bipartite(path(2));
    REQUIRE(scm);
    CHECK(format_scm(*scm, Names{"a", "b"}).front() == '(');
}

TEST_CASE("text round trips")
{
    Rng rng(5);
    SplittableParams p;
    p.vars = 5;
    for (int trial = 0; trial < 200; ++trial) {
        const auto tree = random_splittable(p, rng);
        const auto names = default_names(p.vars);
        const auto text = format_split_tree(*tree, names);
        const auto back = parse_split_tree(text, names);
        REQUIRE(format_split_tree(*back, names) == text);
        REQUIRE(back->ideal() == tree->ideal());
        const auto w = parse_ideal(write_ideal(tree->ideal(), names));
        REQUIRE(w.ideal == tree->ideal());
        REQUIRE(w.names == names);

        const auto c = random_complex(5, 1 + rng.below(5), rng);
        const auto pc = parse_complex(write_complex(c, names));
        REQUIRE(format_complex(pc.complex, pc.names) == format_complex(c, names));

        const auto g = random_graph(5, 0.5, rng);
        REQUIRE(parse_graph(write_graph(g)).graph == g);
    }
    const Names long_names{"x1", "x2", "x10"};
    const auto i = ideal("x1 x2 x10", "x1*x10^2, x2");
    CHECK(parse_ideal(write_ideal(i, long_names)).ideal == i);
    CHECK_THROWS_AS(parse_split_tree("(x: y | z", Names{"x", "y", "z"}), ParseError);
    CHECK_THROWS_AS(parse_split_tree("(q: y | z)", Names{"x", "y", "z"}), ParseError);
    CHECK_THROWS_AS(parse_split_tree("y z)", Names{"x", "y", "z"}), ParseError);
}
