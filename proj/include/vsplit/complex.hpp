#ifndef VSPLIT_COMPLEX_HPP
#define VSPLIT_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsplit/monomial.hpp"

namespace vsplit {

/// Keeps the inclusion-maximal members of sets, sorted ascending and deduplicated.
inline std::vector<VarSet> maximal_sets(std::vector<VarSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
        const int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarSet> kept;
    for (VarSet s : sets) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [&](VarSet k) { return (s & ~k) == 0; });
        if (!covered)
            kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

/// Keeps the inclusion-minimal members of sets, sorted ascending and deduplicated.
inline std::vector<VarSet> minimal_sets(std::vector<VarSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
        const int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarSet> kept;
    for (VarSet s : sets) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [&](VarSet k) { return (k & ~s) == 0; });
        if (!covered)
            kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

/**
 * A simplicial complex given by its facets.
 *
 * Vertices are indices into a label universe of size universe(); the
 * complex lives on a ground set X (a subset of the universe). Deletion and
 * link drop the chosen vertex from the ground set but keep the universe, so
 * ideals built from related complexes share one polynomial ring. Vertices of
 * X lying in no face ("ghost" vertices) are allowed.
 *
 * The void complex (no faces at all) is not representable. {∅} is.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Complex on ground set {0..n-1} generated by the given faces.
    static SimplicialComplex from_facets(const std::vector<VarSet>& faces, std::size_t n)
    {
        return from_facets(faces, n, full_set(n));
    }

    static SimplicialComplex from_facets(const std::vector<VarSet>& faces, std::size_t universe, VarSet ground)
    {
        check_var_count(universe);
        if ((ground & ~full_set(universe)) != 0)
            throw std::invalid_argument("ground set exceeds the vertex universe");
        if (faces.empty())
            throw std::invalid_argument("a complex needs at least one facet (the void complex is not representable)");
        for (VarSet f : faces)
            if ((f & ~ground) != 0)
                throw std::invalid_argument("facet uses a vertex outside the ground set");
        SimplicialComplex c;
        c.universe_ = universe;
        c.ground_ = ground;
        c.facets_ = maximal_sets(faces);
        return c;
    }

    /// The simplex whose single facet is the whole ground set.
    static SimplicialComplex full_simplex(std::size_t universe, VarSet ground)
    {
        return from_facets({ground}, universe, ground);
    }

    std::size_t universe() const { return universe_; }
    VarSet ground() const { return ground_; }
    std::size_t ground_size() const { return static_cast<std::size_t>(popcount(ground_)); }
    const std::vector<VarSet>& facets() const { return facets_; }

    /// Union of the facets: the vertices that really occur in some face.
    VarSet vertices() const
    {
        VarSet v = 0;
        for (VarSet f : facets_)
            v |= f;
        return v;
    }

    bool is_vertex(std::size_t x) const { return x < 64 && (vertices() & bit(x)) != 0; }

    bool has_face(VarSet s) const
    {
        return std::any_of(facets_.begin(), facets_.end(), [&](VarSet f) { return (s & ~f) == 0; });
    }

    /// Dimension: largest facet size minus one ({∅} has dimension -1).
    int dimension() const
    {
        int d = -1;
        for (VarSet f : facets_)
            d = std::max(d, popcount(f) - 1);
        return d;
    }

    bool is_full_simplex() const { return facets_.size() == 1 && facets_.front() == ground_; }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
    friend auto operator<=>(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t universe_ = 0;
    VarSet ground_ = 0;
    std::vector<VarSet> facets_;
};

inline void require_in_ground(const SimplicialComplex& c, std::size_t x)
{
    if (x >= c.universe() || (c.ground() & bit(x)) == 0)
        throw std::out_of_range("vertex " + std::to_string(x) + " is not in the ground set");
}

/// Faces avoiding x, as a complex on X \ {x}.
inline SimplicialComplex deletion(const SimplicialComplex& c, std::size_t x)
{
    require_in_ground(c, x);
    std::vector<VarSet> faces;
    faces.reserve(c.facets().size());
    for (VarSet f : c.facets())
        faces.push_back(f & ~bit(x));
    return SimplicialComplex::from_facets(faces, c.universe(), c.ground() & ~bit(x));
}

/// {F \ {x} : x in F in Δ}, as a complex on X \ {x}. x must be a vertex of Δ.
inline SimplicialComplex link(const SimplicialComplex& c, std::size_t x)
{
    require_in_ground(c, x);
    std::vector<VarSet> faces;
    for (VarSet f : c.facets())
        if (f & bit(x))
            faces.push_back(f & ~bit(x));
    if (faces.empty())
        throw std::invalid_argument("link: " + std::to_string(x) + " is not a vertex of the complex");
    return SimplicialComplex::from_facets(faces, c.universe(), c.ground() & ~bit(x));
}

inline bool is_simplex(const SimplicialComplex& c) { return c.facets().size() == 1; }

inline bool is_pure(const SimplicialComplex& c)
{
    const auto& fs = c.facets();
    return std::all_of(fs.begin(), fs.end(), [&](VarSet f) { return popcount(f) == popcount(fs.front()); });
}

/// Intersection of the primes P_{C} = (x_i : i in C) over the given sets.
/// An empty set contributes the zero ideal; no sets gives the unit ideal.
inline MonomialIdeal intersect_primes(const std::vector<VarSet>& sets, std::size_t num_vars)
{
    // Square-free generators as supports: lcm is union, divisibility is inclusion.
    std::vector<VarSet> acc{0};
    for (VarSet s : sets) {
        std::vector<VarSet> next;
        for (VarSet a : acc) {
            if (a & s)
                next.push_back(a);
            else
                for_each_bit(s, [&](std::size_t v) { next.push_back(a | bit(v)); });
        }
        acc = minimal_sets(std::move(next));
        if (acc.empty())
            break;
    }
    std::vector<Monomial> gens;
    gens.reserve(acc.size());
    for (VarSet a : acc)
        gens.push_back(Monomial::from_set(num_vars, a));
    return minimalize(std::move(gens), num_vars);
}

/// I_Δ: the square-free ideal of minimal non-faces, computed as the
/// intersection of P_{X \ F} over the facets F.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c)
{
    std::vector<VarSet> complements;
    complements.reserve(c.facets().size());
    for (VarSet f : c.facets())
        complements.push_back(c.ground() & ~f);
    return intersect_primes(complements, c.universe());
}

/// The complex whose Stanley-Reisner ideal is I, on the ground set of all variables.
inline SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal)
{
    if (!is_squarefree(ideal))
        throw std::invalid_argument("complex_of_ideal: ideal is not square-free");
    if (ideal.is_unit())
        throw std::invalid_argument("complex_of_ideal: the unit ideal has no complex (void)");
    // F is a face iff X \ F meets the support of every generator.
    std::vector<VarSet> supports;
    for (const auto& g : ideal.generators())
        supports.push_back(g.support());
    const auto transversals = intersect_primes(supports, ideal.num_vars());
    const VarSet ground = full_set(ideal.num_vars());
    std::vector<VarSet> facets;
    for (const auto& t : transversals.generators())
        facets.push_back(ground & ~t.support());
    return SimplicialComplex::from_facets(facets, ideal.num_vars(), ground);
}

/// Δ^∨ = {X \ F : F not in Δ}. Its facets are complements of minimal non-faces.
inline SimplicialComplex alexander_dual_complex(const SimplicialComplex& c)
{
    if (c.is_full_simplex())
        throw std::invalid_argument("alexander_dual_complex: dual is void (complex is the full simplex)");
    const auto nonfaces = stanley_reisner_ideal(c);
    std::vector<VarSet> facets;
    for (const auto& g : nonfaces.generators())
        facets.push_back(c.ground() & ~g.support());
    return SimplicialComplex::from_facets(facets, c.universe(), c.ground());
}

/// I_{Δ^∨} = (x^{X \ F} : F a facet of Δ).
inline MonomialIdeal dual_facet_ideal(const SimplicialComplex& c)
{
    std::vector<Monomial> gens;
    gens.reserve(c.facets().size());
    for (VarSet f : c.facets())
        gens.push_back(Monomial::from_set(c.universe(), c.ground() & ~f));
    return minimalize(std::move(gens), c.universe());
}

/// Big height of I_Δ: the largest facet complement.
inline int bight(const SimplicialComplex& c)
{
    int best = 0;
    for (VarSet f : c.facets())
        best = std::max(best, popcount(c.ground() & ~f));
    return best;
}

/// Δ|_W: faces of Δ inside W, as a complex on W.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VarSet w)
{
    if ((w & ~c.ground()) != 0)
        throw std::invalid_argument("induced_subcomplex: W is not inside the ground set");
    std::vector<VarSet> faces;
    faces.reserve(c.facets().size());
    for (VarSet f : c.facets())
        faces.push_back(f & w);
    return SimplicialComplex::from_facets(faces, c.universe(), w);
}

} // namespace vsplit

#endif // VSPLIT_COMPLEX_HPP
