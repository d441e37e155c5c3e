#include "catch_amalgamated.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "support.hpp"
#include "vsplit/corpus.hpp"
#include "vsplit/homology.hpp"
#include "vsplit/linalg.hpp"

using namespace vsplit;
using testing::ideal;
using testing::table;

namespace {

/// Rank by plain Gaussian elimination over exact rationals.
std::size_t rational_rank_oracle(const IntMatrix& m)
{
    using boost::multiprecision::cpp_rational;
    std::vector<std::vector<cpp_rational>> a(m.rows(), std::vector<cpp_rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0)
            ++p;
        if (p == m.rows())
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const cpp_rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k)
                a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

SimplicialComplex from_triples(const std::vector<std::array<int, 3>>& tris, std::size_t n)
{
    std::vector<VarSet> facets;
    for (const auto& t : tris)
        facets.push_back(bit(t[0] - 1) | bit(t[1] - 1) | bit(t[2] - 1));
    return SimplicialComplex::from_facets(facets, n);
}

/// Polarization: x_i^e becomes x_{i,1} ... x_{i,e}. Graded Betti numbers are unchanged.
MonomialIdeal polarize(const MonomialIdeal& ideal)
{
    std::vector<Monomial::Exponent> width(ideal.num_vars(), 0);
    for (const auto& g : ideal.generators())
        for (std::size_t i = 0; i < ideal.num_vars(); ++i)
            width[i] = std::max(width[i], g[i]);
    std::vector<std::size_t> offset(ideal.num_vars() + 1, 0);
    for (std::size_t i = 0; i < ideal.num_vars(); ++i)
        offset[i + 1] = offset[i] + width[i];
    const std::size_t n = offset.back();
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        VarSet s = 0;
        for (std::size_t i = 0; i < ideal.num_vars(); ++i)
            for (Monomial::Exponent e = 0; e < g[i]; ++e)
                s |= bit(offset[i] + e);
        gens.push_back(Monomial::from_set(n, s));
    }
    return minimalize(gens, n);
}

} // namespace

TEST_CASE("fields")
{
    CHECK(Field::rationals().name() == "QQ");
    CHECK(Field::prime(101).name() == "ZZ/101");
    CHECK(Field::prime(2).characteristic() == 2);
    CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(91), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(4294967311ULL), std::invalid_argument);
}

TEST_CASE("exact rank against a rational elimination oracle")
{
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        IntMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = static_cast<std::int64_t>(rng.below(7)) - 3;
        if (trial % 3 == 0 && rows > 1)
            for (std::size_t c = 0; c < cols; ++c)
                m(rows - 1, c) = 2 * m(0, c) - m(rows > 2 ? 1 : 0, c);
        CHECK(rank_rational(m) == rational_rank_oracle(m));
    }
}

TEST_CASE("rank falls back to big integers when 64 bits overflow")
{
    IntMatrix m(4, 4);
    const std::int64_t big = std::int64_t{1} << 40;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            m(r, c) = big + static_cast<std::int64_t>((r + 1) * (c + 3) * (r + c + 1));
    CHECK(rank_rational(m) == rational_rank_oracle(m));
    for (std::size_t c = 0; c < 4; ++c)
        m(3, c) = m(0, c) - m(1, c) + m(2, c);
    CHECK(rank_rational(m) == rational_rank_oracle(m));
}

TEST_CASE("rank over prime fields")
{
    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 0;
    m(1, 0) = 0;
    m(1, 1) = 2;
    CHECK(rank_rational(m) == 2);
    CHECK(rank_mod_p(m, 2) == 0);
    CHECK(rank_mod_p(m, 3) == 2);
    CHECK_THROWS(rank_mod_p(m, 1));
}

TEST_CASE("reduced homology of small spaces")
{
    const auto points = SimplicialComplex::from_facets({0b01, 0b10}, 2);
    CHECK(reduced_homology_dims(points).at(0) == 1);
    CHECK(reduced_homology_dims(points).at(1) == 0);
    const auto circle = SimplicialComplex::from_facets({0b011, 0b110, 0b101}, 3);
    CHECK(reduced_homology_dims(circle).at(1) == 1);
    CHECK(reduced_homology_dims(circle).at(0) == 0);
    CHECK(reduced_homology_dims(SimplicialComplex::from_facets({0b111}, 3)).acyclic());
    CHECK(reduced_homology_dims(SimplicialComplex::from_facets({0}, 2)).at(-1) == 1);
    const auto octahedron = from_triples({{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6},
                                          {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}},
                                         6);
    CHECK(reduced_homology_dims(octahedron).at(2) == 1);
    CHECK(reduced_homology_dims(octahedron).at(1) == 0);
}

TEST_CASE("projective plane homology depends on the field")
{
    const auto rp2 = from_triples({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                   {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}},
                                  6);
    CHECK(reduced_homology_dims(rp2, Field::rationals()).acyclic());
    const auto mod2 = reduced_homology_dims(rp2, Field::prime(2));
    CHECK(mod2.at(1) == 1);
    CHECK(mod2.at(2) == 1);
    CHECK(reduced_homology_dims(rp2, Field::prime(3)).acyclic());
    CHECK(hochster_betti(rp2, Field::rationals()) != hochster_betti(rp2, Field::prime(2)));
    CHECK(koszul_betti(stanley_reisner_ideal(rp2), Field::prime(2)) == hochster_betti(rp2, Field::prime(2)));
}

TEST_CASE("Hochster examples")
{
    CHECK(hochster_betti(complex_of_ideal(ideal("x y", "xy"))) == table({{0, 2, 1}}));
    CHECK(hochster_betti(complex_of_ideal(ideal("x y z", "xy, yz"))) == table({{0, 2, 2}, {1, 3, 1}}));
    CHECK(hochster_betti(complex_of_ideal(ideal("x y", "x, y"))) == table({{0, 1, 2}, {1, 2, 1}}));
    CHECK(hochster_betti(SimplicialComplex::from_facets({0b111}, 3)).empty());
}

TEST_CASE("Koszul examples")
{
    CHECK(koszul_betti(ideal("x y", "x^2, xy")) == table({{0, 2, 2}, {1, 3, 1}}));
    CHECK(koszul_betti(ideal("x y z", "xyz")) == table({{0, 3, 1}}));
    CHECK(koszul_betti(ideal("x y z", "xy, yz")) == hochster_betti(complex_of_ideal(ideal("x y z", "xy, yz"))));
    CHECK(koszul_betti(MonomialIdeal::unit(2)) == table({{0, 0, 1}}));
    CHECK(koszul_betti(MonomialIdeal::zero(2)).empty());
    // Koszul complex on three variables.
    CHECK(koszul_betti(ideal("x y z", "x, y, z")) == table({{0, 1, 3}, {1, 2, 3}, {2, 3, 1}}));
}

TEST_CASE("pd, reg and quotient tables")
{
    const auto t = table({{0, 2, 2}, {1, 3, 1}});
    CHECK(reg(t) == 2);
    CHECK(pd(t) == 1);
    CHECK(reg(table({{0, 0, 1}})) == 0);
    CHECK(pd(table({{0, 0, 1}})) == 0);
    const auto q = quotient_table(t);
    CHECK(q.subject() == BettiSubject::Quotient);
    CHECK(q.entries() == table({{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}).entries());
    CHECK(reg(q) == 1);
    CHECK(pd(q) == 2);
    CHECK(quotient_table(BettiTable()).entries() == table({{0, 0, 1}}).entries());
    CHECK(quotient_table(table({{0, 1, 2}, {1, 2, 1}})).entries() == table({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}).entries());
    CHECK_FALSE(reg(BettiTable()).has_value());
    CHECK_FALSE(pd(BettiTable()).has_value());
    CHECK_THROWS(quotient_table(q));
    CHECK_THROWS(BettiTable().add(-1, 0, 1));
}

TEST_CASE("table formatting")
{
    const auto t = table({{0, 2, 2}, {1, 3, 1}});
    CHECK(format_flat(t) == "0 2 2\n1 3 1\n");
    CHECK(format_inline(t) == "{(0,2):2, (1,3):1}");
    CHECK(format_grid(BettiTable()) == "(zero module: empty table)\n");
    CHECK(format_grid(t).find("       0|  2") != std::string::npos);
}

TEST_CASE("linear resolutions and Cohen-Macaulayness")
{
    CHECK(has_linear_resolution(ideal("a b c d", "ab, bc, cd, ad")));
    CHECK_FALSE(has_linear_resolution(ideal("a b c d", "ab, cd")));
    CHECK_FALSE(has_linear_resolution(ideal("x y z", "y, xz")));
    CHECK_FALSE(has_linear_resolution(MonomialIdeal::zero(2)));
    const auto p3 = complex_of_ideal(ideal("x y z", "xy, yz"));
    CHECK(is_cohen_macaulay(alexander_dual_complex(p3)));
    const auto two_k2 = complex_of_ideal(ideal("a b c d", "ab, cd"));
    CHECK_FALSE(is_cohen_macaulay(alexander_dual_complex(two_k2)));
    CHECK(is_cohen_macaulay(SimplicialComplex::from_facets({0b111}, 3)));
    CHECK_FALSE(is_cohen_macaulay(SimplicialComplex::from_facets({0b0011, 0b1100}, 4)));
}

TEST_CASE("Hochster and Koszul agree on every complex with at most 5 vertices")
{
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for_each_complex(n, [&](const SimplicialComplex& c) {
            ++checked;
            const auto h = hochster_betti(c);
            REQUIRE(h == koszul_betti(stanley_reisner_ideal(c)));
            REQUIRE(h == hochster_betti(c, Field::prime(101)));
        });
    CHECK(checked == 7773);
}

TEST_CASE("Koszul on non-square-free ideals matches Hochster on the polarization")
{
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng.below(3);
        std::vector<Monomial> gens;
        const auto k = 1 + rng.below(4);
        for (std::uint64_t t = 0; t < k; ++t) {
            std::vector<Monomial::Exponent> e(n);
            for (auto& x : e)
                x = static_cast<Monomial::Exponent>(rng.below(3));
            gens.emplace_back(e);
        }
        const auto i = minimalize(gens, n);
        if (i.is_unit())
            continue;
        const auto pol = polarize(i);
        INFO(format_ideal(i, default_names(n)));
        CHECK(koszul_betti(i) == hochster_betti(complex_of_ideal(pol)));
    }
}

TEST_CASE("Euler characteristic of chain ranks matches homology")
{
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = random_complex(6, 1 + rng.below(6), rng);
        const auto h = reduced_homology_dims(c);
        long long chi_faces = 0, chi_hom = 0;
        for (std::size_t s = 0; s < h.faces.size(); ++s)
            chi_faces += (s % 2 ? 1 : -1) * static_cast<long long>(h.faces[s]);
        for (std::size_t s = 0; s < h.dims.size(); ++s)
            chi_hom += (s % 2 ? 1 : -1) * static_cast<long long>(h.dims[s]);
        CHECK(chi_faces == chi_hom);
    }
}

TEST_CASE("homology refuses oversized complexes")
{
    const auto big = SimplicialComplex::from_facets({full_set(30) & ~VarSet{1}, VarSet{1}}, 30);
    CHECK_THROWS_AS(reduced_homology_dims(big), std::length_error);
}
