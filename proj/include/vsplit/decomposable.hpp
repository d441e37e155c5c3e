#ifndef VSPLIT_DECOMPOSABLE_HPP
#define VSPLIT_DECOMPOSABLE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "vsplit/betti.hpp"
#include "vsplit/complex.hpp"
#include "vsplit/homology.hpp"

namespace vsplit {

/// x is a shedding vertex of Δ when no facet of lk(x) is a facet of del(x).
inline bool is_shedding(const SimplicialComplex& c, std::size_t x)
{
    if (!c.is_vertex(x))
        throw std::invalid_argument("is_shedding: " + std::to_string(x) + " is not a vertex of the complex");
    const auto del = deletion(c, x);
    const auto lk = link(c, x);
    for (VarSet f : lk.facets())
        if (std::binary_search(del.facets().begin(), del.facets().end(), f))
            return false;
    return true;
}

class DecompositionTree;
using DecompositionTreePtr = std::shared_ptr<const DecompositionTree>;

/// Certificate of vertex decomposability: a simplex leaf, or a shedding
/// vertex with certificates for its deletion and link.
class DecompositionTree {
public:
    static DecompositionTreePtr leaf(SimplicialComplex c)
    {
        return DecompositionTreePtr(new DecompositionTree(std::move(c), 0, nullptr, nullptr));
    }

    static DecompositionTreePtr node(SimplicialComplex c, std::size_t v, DecompositionTreePtr del,
                                     DecompositionTreePtr lk)
    {
        if (!del || !lk)
            throw std::invalid_argument("decomposition node needs both children");
        return DecompositionTreePtr(new DecompositionTree(std::move(c), v, std::move(del), std::move(lk)));
    }

    bool is_leaf() const { return !del_; }
    const SimplicialComplex& complex() const { return complex_; }
    std::size_t vertex() const { return vertex_; }
    const DecompositionTreePtr& del() const { return del_; }
    const DecompositionTreePtr& lk() const { return lk_; }

    /// The facet of a leaf.
    VarSet facet() const { return complex_.facets().front(); }

private:
    DecompositionTree(SimplicialComplex c, std::size_t v, DecompositionTreePtr del, DecompositionTreePtr lk)
        : complex_(std::move(c)), vertex_(v), del_(std::move(del)), lk_(std::move(lk))
    {
    }

    SimplicialComplex complex_;
    std::size_t vertex_;
    DecompositionTreePtr del_, lk_;
};

/// Re-checks the shedding and simplex conditions at every node, and that children are del/lk.
inline bool is_valid_decomposition(const DecompositionTree& t)
{
    if (t.is_leaf())
        return is_simplex(t.complex());
    const auto& c = t.complex();
    const auto v = t.vertex();
    if (!c.is_vertex(v) || !is_shedding(c, v))
        return false;
    if (t.del()->complex() != deletion(c, v) || t.lk()->complex() != link(c, v))
        return false;
    return is_valid_decomposition(*t.del()) && is_valid_decomposition(*t.lk());
}

/// Memoized vertex-decomposability search; shedding vertices are tried in ascending order.
class Decomposer {
public:
    DecompositionTreePtr decompose(const SimplicialComplex& c)
    {
        if (is_simplex(c))
            return DecompositionTree::leaf(c);
        if (auto it = memo_.find(c); it != memo_.end())
            return it->second;
        DecompositionTreePtr result;
        const VarSet verts = c.vertices();
        for (std::size_t v = 0; v < c.universe() && !result; ++v) {
            if (!(verts & bit(v)) || !is_shedding(c, v))
                continue;
            auto d = decompose(deletion(c, v));
            if (!d)
                continue;
            auto l = decompose(link(c, v));
            if (!l)
                continue;
            result = DecompositionTree::node(c, v, std::move(d), std::move(l));
        }
        memo_.emplace(c, result);
        return result;
    }

private:
    std::map<SimplicialComplex, DecompositionTreePtr> memo_;
};

/// A certificate, or nullptr if Δ is not vertex decomposable.
inline DecompositionTreePtr vertex_decomposable(const SimplicialComplex& c)
{
    Decomposer d;
    return d.decompose(c);
}

struct PdReg {
    int pd = 0;
    int reg = 0;
    friend bool operator==(const PdReg&, const PdReg&) = default;
};

/**
 * (pd(R/I_Δ), reg(R/I_Δ)) along a decomposition:
 * pd = max(pd(del) + 1, pd(lk)), reg = max(reg(del), reg(lk) + 1).
 * A simplex leaf with facet F on ground set Y has I = (x_i : i in Y \ F),
 * so pd = |Y \ F| and reg = 0.
 */
inline PdReg pd_reg_recursive(const DecompositionTree& t)
{
    if (t.is_leaf())
        return {popcount(t.complex().ground() & ~t.facet()), 0};
    const auto d = pd_reg_recursive(*t.del());
    const auto l = pd_reg_recursive(*t.lk());
    return {std::max(d.pd + 1, l.pd), std::max(d.reg, l.reg + 1)};
}

inline PdReg pd_reg_recursive(const SimplicialComplex& c)
{
    const auto tree = vertex_decomposable(c);
    if (!tree)
        throw std::invalid_argument("pd_reg_recursive: complex is not vertex decomposable");
    return pd_reg_recursive(*tree);
}

/// Compares the oracle's pd(R/I_Δ) with bight(I_Δ). Requires Δ vertex decomposable.
inline bool check_pd_equals_bight(const SimplicialComplex& c, const Field& field = Field::rationals())
{
    if (!vertex_decomposable(c))
        throw std::invalid_argument("check_pd_equals_bight: complex is not vertex decomposable");
    const auto q = quotient_table(koszul_betti(stanley_reisner_ideal(c), field));
    return pd(q).value() == bight(c);
}

} // namespace vsplit

#endif // VSPLIT_DECOMPOSABLE_HPP
