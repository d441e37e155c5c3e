#ifndef VSPLIT_HOMOLOGY_HPP
#define VSPLIT_HOMOLOGY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vsplit/betti.hpp"
#include "vsplit/complex.hpp"
#include "vsplit/linalg.hpp"
#include "vsplit/monomial.hpp"

namespace vsplit {

/// Coefficient field: the rationals or F_p.
class Field {
public:
    static Field rationals() { return Field(0); }

    static Field prime(std::uint64_t p)
    {
        if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw std::invalid_argument("field characteristic must be a prime below 2^31, got " + std::to_string(p));
        return Field(static_cast<std::uint32_t>(p));
    }

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const { return is_rational() ? "QQ" : "ZZ/" + std::to_string(p_); }

    std::size_t rank(const IntMatrix& m) const { return is_rational() ? rank_rational(m) : rank_mod_p(m, p_); }

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Reduced homology dimensions; dims[k + 1] = dim H~_k for k = -1..dim.
struct ReducedHomology {
    std::vector<std::size_t> dims;
    /// Number of faces of each size; faces[s] counts faces with s vertices.
    std::vector<std::size_t> faces;

    std::size_t at(int k) const
    {
        const auto idx = static_cast<std::size_t>(k + 1);
        return k < -1 || idx >= dims.size() ? 0 : dims[idx];
    }

    bool acyclic() const
    {
        for (auto d : dims)
            if (d != 0)
                return false;
        return true;
    }
};

namespace detail {

inline constexpr std::size_t kMaxHomologyVertices = 24;

/// True when all facets share a vertex; such a complex is a cone, hence acyclic.
inline bool is_cone(std::span<const VarSet> facets)
{
    if (facets.empty())
        return false;
    VarSet common = ~VarSet{0};
    for (VarSet f : facets)
        common &= f;
    return common != 0;
}

/*
 * Reduced homology of the complex generated by facets (which may be empty,
 * meaning the void complex, or contain only the empty face).
 */
inline ReducedHomology homology_of_facets(std::span<const VarSet> raw_facets, const Field& field, bool want_faces = false)
{
    ReducedHomology out;
    if (raw_facets.empty())
        return out;

    VarSet verts = 0;
    for (VarSet f : raw_facets)
        verts |= f;
    std::array<int, 64> relabel{};
    int nv = 0;
    for_each_bit(verts, [&](std::size_t v) { relabel[v] = nv++; });
    if (static_cast<std::size_t>(nv) > kMaxHomologyVertices)
        throw std::length_error("homology: complex has more than 24 vertices");

    std::vector<std::uint32_t> facets;
    int top = 0;
    for (VarSet f : raw_facets) {
        std::uint32_t c = 0;
        for_each_bit(f, [&](std::size_t v) { c |= std::uint32_t{1} << relabel[v]; });
        facets.push_back(c);
        top = std::max(top, popcount(c));
    }

    if (!want_faces && is_cone(raw_facets)) {
        out.dims.assign(static_cast<std::size_t>(top) + 1, 0);
        return out;
    }

    // Enumerate all faces, grouped by size; index[face] is its row/column.
    const std::size_t space = std::size_t{1} << nv;
    std::vector<std::int32_t> index(space, -1);
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(top) + 1);
    for (std::uint32_t f : facets) {
        std::uint32_t s = f;
        while (true) {
            if (index[s] < 0) {
                auto& bucket = by_size[static_cast<std::size_t>(std::popcount(s))];
                index[s] = static_cast<std::int32_t>(bucket.size());
                bucket.push_back(s);
            }
            if (s == 0)
                break;
            s = (s - 1) & f;
        }
    }

    // rank_of[s] = rank of the boundary from faces of size s to size s - 1.
    std::vector<std::size_t> rank_of(by_size.size() + 1, 0);
    for (std::size_t s = 1; s < by_size.size(); ++s) {
        const auto& cols = by_size[s];
        const auto& rows = by_size[s - 1];
        if (cols.empty() || rows.empty())
            continue;
        if (s == 1) {
            rank_of[1] = 1;
            continue;
        }
        IntMatrix d(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::int64_t sign = 1;
            std::uint32_t rest = cols[c];
            while (rest) {
                const std::uint32_t low = rest & (~rest + 1);
                d(static_cast<std::size_t>(index[cols[c] & ~low]), c) = sign;
                sign = -sign;
                rest &= rest - 1;
            }
        }
        rank_of[s] = field.rank(d);
    }

    out.dims.resize(by_size.size());
    for (std::size_t s = 0; s < by_size.size(); ++s)
        out.dims[s] = by_size[s].size() - rank_of[s] - rank_of[s + 1];
    if (want_faces)
        for (const auto& b : by_size)
            out.faces.push_back(b.size());
    return out;
}

} // namespace detail

/// Reduced simplicial homology of Δ over the field, indexed -1..dim Δ.
inline ReducedHomology reduced_homology_dims(const SimplicialComplex& c, const Field& field = Field::rationals())
{
    return detail::homology_of_facets(c.facets(), field, /*want_faces=*/true);
}

/**
 * Betti table of I_Δ by Hochster's formula:
 * beta_{i,j}(I_Δ) = sum over W with |W| = j of dim H~_{j-i-2}(Δ|_W).
 * Restrictions that are cones are skipped.
 */
inline BettiTable hochster_betti(const SimplicialComplex& c, const Field& field = Field::rationals())
{
    BettiTable table(BettiSubject::Ideal);
    const VarSet ground = c.ground();
    std::vector<VarSet> restricted;
    for (VarSet w = ground; w != 0; w = (w - 1) & ground) {
        restricted.clear();
        for (VarSet f : c.facets())
            restricted.push_back(f & w);
        restricted = maximal_sets(std::move(restricted));
        if (detail::is_cone(restricted))
            continue;
        const auto h = detail::homology_of_facets(restricted, field);
        const int j = popcount(w);
        for (int k = -1; k <= j - 2; ++k)
            if (auto d = h.at(k))
                table.add(j - k - 2, j, d);
    }
    return table;
}

namespace detail {

inline std::vector<VarSet> squarefree_lcm_lattice(const std::vector<VarSet>& gens)
{
    std::unordered_set<VarSet> seen;
    std::vector<VarSet> lattice;
    for (VarSet g : gens) {
        const std::size_t before = lattice.size();
        if (seen.insert(g).second)
            lattice.push_back(g);
        for (std::size_t k = 0; k < before; ++k) {
            const VarSet l = lattice[k] | g;
            if (seen.insert(l).second)
                lattice.push_back(l);
        }
    }
    return lattice;
}

inline std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& gens)
{
    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Monomial> lattice;
    for (const auto& g : gens) {
        const std::size_t before = lattice.size();
        if (seen.insert(g).second)
            lattice.push_back(g);
        for (std::size_t k = 0; k < before; ++k) {
            Monomial l = lcm(lattice[k], g);
            if (seen.insert(l).second)
                lattice.push_back(std::move(l));
        }
    }
    return lattice;
}

} // namespace detail

/**
 * Betti table of an arbitrary monomial ideal from upper Koszul complexes:
 * beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) where
 * K^b(I) = {squarefree F : x^{b-F} in I} = <{k : g_k < b_k} : g | x^b>.
 * Only degrees b in the lcm lattice of G(I) can carry non-zero Betti numbers.
 */
inline BettiTable koszul_betti(const MonomialIdeal& ideal, const Field& field = Field::rationals())
{
    BettiTable table(BettiSubject::Ideal);
    if (ideal.is_zero())
        return table;
    std::vector<VarSet> facets;
    auto accumulate = [&](int degree) {
        facets = maximal_sets(std::move(facets));
        if (detail::is_cone(facets))
            return;
        const auto h = detail::homology_of_facets(facets, field);
        for (int k = -1; k + 1 < static_cast<int>(h.dims.size()); ++k)
            if (auto d = h.at(k))
                table.add(k + 1, degree, d);
    };

    if (is_squarefree(ideal)) {
        std::vector<VarSet> gens;
        for (const auto& g : ideal.generators())
            gens.push_back(g.support());
        for (VarSet b : detail::squarefree_lcm_lattice(gens)) {
            facets.clear();
            for (VarSet g : gens)
                if ((g & ~b) == 0)
                    facets.push_back(b & ~g);
            accumulate(popcount(b));
        }
        return table;
    }

    for (const auto& b : detail::lcm_lattice(ideal.generators())) {
        facets.clear();
        for (const auto& g : ideal.generators()) {
            if (!divides(g, b))
                continue;
            VarSet slack = 0;
            for (std::size_t k = 0; k < b.num_vars(); ++k)
                if (g[k] < b[k])
                    slack |= bit(k);
            facets.push_back(slack);
        }
        accumulate(static_cast<int>(b.degree()));
    }
    return table;
}

/// True iff I is generated in one degree d and beta_{i,j}(I) = 0 for j != i + d.
inline bool has_linear_resolution(const MonomialIdeal& ideal, const Field& field = Field::rationals())
{
    const long long d = common_degree(ideal);
    if (d < 0)
        return false;
    const auto table = koszul_betti(ideal, field);
    for (const auto& [key, v] : table.entries())
        if (key.second != key.first + d)
            return false;
    return true;
}

/// Eagon-Reiner: Δ is Cohen-Macaulay iff I_{Δ^∨} has a linear resolution.
inline bool is_cohen_macaulay(const SimplicialComplex& c, const Field& field = Field::rationals())
{
    if (c.is_full_simplex())
        return true;
    return has_linear_resolution(dual_facet_ideal(c), field);
}

} // namespace vsplit

#endif // VSPLIT_HOMOLOGY_HPP
