#ifndef VSPLIT_GRAPH_HPP
#define VSPLIT_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vsplit/betti.hpp"
#include "vsplit/complex.hpp"
#include "vsplit/decomposable.hpp"
#include "vsplit/homology.hpp"
#include "vsplit/monomial.hpp"
#include "vsplit/splittable.hpp"

namespace vsplit {

/**
 * Simple undirected graph on a subset of the indices 0..n-1.
 *
 * Removing vertices keeps the index space (so ideals of subgraphs share a
 * ring with the original) and clears them from vertices().
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), present_(full_set(n)), adj_(n, 0) { check_var_count(n); }

    static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    static Graph complete(std::size_t n)
    {
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    void add_edge(std::size_t u, std::size_t v)
    {
        if (u >= n_ || v >= n_)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("loops are not allowed");
        if (!(present_ & bit(u)) || !(present_ & bit(v)))
            throw std::invalid_argument("edge endpoint was removed from the graph");
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    std::size_t n() const { return n_; }
    VarSet vertices() const { return present_; }
    VarSet neighbors(std::size_t v) const { return adj_[v]; }
    VarSet closed_neighborhood(std::size_t v) const { return adj_[v] | bit(v); }
    int degree(std::size_t v) const { return popcount(adj_[v]); }
    bool has_edge(std::size_t u, std::size_t v) const { return (adj_[u] & bit(v)) != 0; }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t u = 0; u < n_; ++u)
            for_each_bit(adj_[u] & ~full_set(u + 1), [&](std::size_t v) { out.emplace_back(u, v); });
        return out;
    }

    std::size_t edge_count() const
    {
        std::size_t e = 0;
        for (auto a : adj_)
            e += static_cast<std::size_t>(popcount(a));
        return e / 2;
    }

    /// G \ S: drops the vertices in S and their edges.
    Graph remove(VarSet s) const
    {
        Graph g = *this;
        g.present_ &= ~s;
        for (std::size_t v = 0; v < n_; ++v)
            g.adj_[v] = (s & bit(v)) ? 0 : (g.adj_[v] & ~s);
        return g;
    }

    /// Whether S is a clique.
    bool is_clique(VarSet s) const
    {
        bool ok = true;
        for_each_bit(s, [&](std::size_t v) { ok = ok && (s & ~bit(v) & ~adj_[v]) == 0; });
        return ok;
    }

    friend bool operator==(const Graph&, const Graph&) = default;
    friend auto operator<=>(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    VarSet present_ = 0;
    std::vector<VarSet> adj_;
};

/// Complement on the same vertex set.
inline Graph complement(const Graph& g)
{
    Graph c(g.n());
    c = c.remove(~g.vertices() & full_set(g.n()));
    const VarSet vs = g.vertices();
    for_each_bit(vs, [&](std::size_t u) {
        for_each_bit(vs & ~g.closed_neighborhood(u) & ~full_set(u + 1), [&](std::size_t v) { c.add_edge(u, v); });
    });
    return c;
}

/// I(G) = (x_u x_v : uv an edge).
inline MonomialIdeal edge_ideal(const Graph& g)
{
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges())
        gens.push_back(Monomial::from_set(g.n(), bit(u) | bit(v)));
    return minimalize(std::move(gens), g.n());
}

/// I(G)^∨ = intersection of (x_u, x_v) over edges; the unit ideal for an edgeless graph.
inline MonomialIdeal cover_ideal(const Graph& g)
{
    std::vector<VarSet> edges;
    for (auto [u, v] : g.edges())
        edges.push_back(bit(u) | bit(v));
    return intersect_primes(edges, g.n());
}

/// Δ_G: independent sets of G, on the ground set V(G). Facets complement the minimal vertex covers.
inline SimplicialComplex independence_complex(const Graph& g)
{
    std::vector<VarSet> facets;
    const auto covers = cover_ideal(g);
    for (const auto& c : covers.generators())
        facets.push_back(g.vertices() & ~c.support());
    return SimplicialComplex::from_facets(facets, g.n(), g.vertices());
}

inline SimplicialComplex clique_complex(const Graph& g) { return independence_complex(complement(g)); }

/// Perfect elimination ordering via maximum cardinality search; nullopt if G is not chordal.
inline std::optional<std::vector<std::size_t>> perfect_elimination_order(const Graph& g)
{
    const VarSet vs = g.vertices();
    std::vector<std::size_t> visit;
    std::vector<int> weight(g.n(), 0);
    VarSet numbered = 0;
    while (numbered != vs) {
        std::size_t best = g.n();
        for_each_bit(vs & ~numbered, [&](std::size_t v) {
            if (best == g.n() || weight[v] > weight[best])
                best = v;
        });
        visit.push_back(best);
        numbered |= bit(best);
        for_each_bit(g.neighbors(best) & ~numbered, [&](std::size_t v) { ++weight[v]; });
    }
    std::vector<std::size_t> order(visit.rbegin(), visit.rend());

    // Each vertex's later neighbours must form a clique; it suffices that they
    // all neighbour the earliest of them.
    std::vector<std::size_t> position(g.n(), 0);
    for (std::size_t k = 0; k < order.size(); ++k)
        position[order[k]] = k;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t v = order[k];
        VarSet later = 0;
        for_each_bit(g.neighbors(v), [&](std::size_t u) {
            if (position[u] > k)
                later |= bit(u);
        });
        if (!later)
            continue;
        std::size_t first = g.n();
        for_each_bit(later, [&](std::size_t u) {
            if (first == g.n() || position[u] < position[first])
                first = u;
        });
        if ((later & ~bit(first) & ~g.neighbors(first)) != 0)
            return std::nullopt;
    }
    return order;
}

inline bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

/// Lowest-index vertex whose neighbourhood is a clique.
inline std::optional<std::size_t> simplicial_vertex(const Graph& g)
{
    std::optional<std::size_t> found;
    for_each_bit(g.vertices(), [&](std::size_t v) {
        if (!found && g.is_clique(g.neighbors(v)))
            found = v;
    });
    return found;
}

/// All y with N[x] ⊆ N[y] for some x != y, ascending.
inline std::vector<std::size_t> domination_shedding(const Graph& g)
{
    std::vector<std::size_t> out;
    for_each_bit(g.vertices(), [&](std::size_t y) {
        bool dominated = false;
        for_each_bit(g.neighbors(y), [&](std::size_t x) {
            dominated = dominated || (g.closed_neighborhood(x) & ~g.closed_neighborhood(y)) == 0;
        });
        if (dominated)
            out.push_back(y);
    });
    return out;
}

inline bool is_bipartite(const Graph& g)
{
    std::vector<int> side(g.n(), -1);
    bool ok = true;
    for_each_bit(g.vertices(), [&](std::size_t s) {
        if (side[s] >= 0 || !ok)
            return;
        side[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty() && ok) {
            const auto v = stack.back();
            stack.pop_back();
            for_each_bit(g.neighbors(v), [&](std::size_t u) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    ok = false;
                }
            });
        }
    });
    return ok;
}

class ScmCertificate;
using ScmCertificatePtr = std::shared_ptr<const ScmCertificate>;

/// Recursion record for the sequentially Cohen-Macaulay bipartite test:
/// a leaf (edgeless graph) or the pair (x, y) with certificates for G \ N[x] and G \ N[y].
class ScmCertificate {
public:
    ScmCertificate() = default;
    ScmCertificate(std::size_t x, std::size_t y, ScmCertificatePtr first, ScmCertificatePtr second)
        : x_(x), y_(y), first_(std::move(first)), second_(std::move(second))
    {
    }
    bool is_leaf() const { return !first_; }
    std::size_t x() const { return x_; }
    std::size_t y() const { return y_; }
    const ScmCertificatePtr& without_nx() const { return first_; }
    const ScmCertificatePtr& without_ny() const { return second_; }

private:
    std::size_t x_ = 0, y_ = 0;
    ScmCertificatePtr first_, second_;
};

/**
 * Van Tuyl-Villarreal recursion: a bipartite G is sequentially
 * Cohen-Macaulay iff it is edgeless, or it has adjacent x, y with
 * deg(x) = 1 such that G \ N[x] and G \ N[y] are. Degree-one vertices are
 * tried in ascending order.
 */
class ScmChecker {
public:
    ScmCertificatePtr check(const Graph& g)
    {
        if (g.edge_count() == 0)
            return std::make_shared<const ScmCertificate>();
        if (auto it = memo_.find(g); it != memo_.end())
            return it->second;
        ScmCertificatePtr result;
        for (std::size_t x = 0; x < g.n() && !result; ++x) {
            if (!(g.vertices() & bit(x)) || g.degree(x) != 1)
                continue;
            const auto y = static_cast<std::size_t>(std::countr_zero(g.neighbors(x)));
            auto a = check(g.remove(g.closed_neighborhood(x)));
            if (!a)
                continue;
            auto b = check(g.remove(g.closed_neighborhood(y)));
            if (!b)
                continue;
            result = std::make_shared<const ScmCertificate>(x, y, std::move(a), std::move(b));
        }
        memo_.emplace(g, result);
        return result;
    }

private:
    std::map<Graph, ScmCertificatePtr> memo_;
};

/// Certificate if G is a sequentially Cohen-Macaulay bipartite graph, else nullptr. Throws on non-bipartite input.
inline ScmCertificatePtr is_scm_bipartite(const Graph& g)
{
    if (!is_bipartite(g))
        throw std::invalid_argument("is_scm_bipartite: graph is not bipartite");
    ScmChecker checker;
    return checker.check(g);
}

namespace detail {

inline BettiTable cover_betti_step(const Graph& g, std::size_t v, const Field& field);

/// Table of I(H)^∨, recursing through a shedding vertex whose deletion and
/// link are vertex decomposable when one exists, else by the oracle.
inline BettiTable cover_table(const Graph& h, const Field& field)
{
    if (h.edge_count() == 0) {
        BettiTable unit(BettiSubject::Ideal);
        unit.add(0, 0, 1);
        return unit;
    }
    for (auto y : domination_shedding(h)) {
        if (vertex_decomposable(independence_complex(h.remove(bit(y)))) &&
            vertex_decomposable(independence_complex(h.remove(h.closed_neighborhood(y)))))
            return cover_betti_step(h, y, field);
    }
    if (auto tree = vertex_decomposable(independence_complex(h)); tree && !tree->is_leaf())
        return cover_betti_step(h, tree->vertex(), field);
    return koszul_betti(cover_ideal(h), field);
}

inline BettiTable cover_betti_step(const Graph& g, std::size_t v, const Field& field)
{
    const int t = g.degree(v);
    const auto t1 = cover_table(g.remove(bit(v)), field);
    const auto t2 = cover_table(g.remove(g.closed_neighborhood(v)), field);
    BettiTable out(BettiSubject::Ideal);
    out.add_shifted(t1, 0, 1);
    out.add_shifted(t2, 0, t);
    out.add_shifted(t2, 1, t + 1);
    return out;
}

} // namespace detail

/**
 * Betti table of the cover ideal through a shedding vertex v of Δ_G:
 * beta_{i,j}(I(G)^∨) = beta_{i,j-1}(I(G')^∨) + beta_{i,j-t}(I(G'')^∨) + beta_{i-1,j-t-1}(I(G'')^∨)
 * with G' = G \ v, G'' = G \ N[v], t = deg v.
 */
inline BettiTable cover_betti_recursive(const Graph& g, std::size_t v, const Field& field = Field::rationals())
{
    if (v >= g.n() || !(g.vertices() & bit(v)))
        throw std::invalid_argument("cover_betti_recursive: vertex not in graph");
    if (!is_shedding(independence_complex(g), v))
        throw std::invalid_argument("cover_betti_recursive: vertex " + std::to_string(v) + " is not a shedding vertex");
    return detail::cover_betti_step(g, v, field);
}

namespace detail {

/// Splitting of the ideal generated by the variables in s: x_a * (1) + (remaining variables).
inline SplitTreePtr variables_split(std::size_t n, VarSet s)
{
    const auto first = static_cast<std::size_t>(std::countr_zero(s));
    const VarSet rest = s & ~bit(first);
    if (!rest)
        return SplitTree::leaf(Monomial::variable(n, first));
    return SplitTree::node(first, SplitTree::leaf(Monomial::unit(n)), variables_split(n, rest));
}

inline SplitTreePtr chordal_split_rec(const Graph& h)
{
    const auto ideal = edge_ideal(complement(h));
    if (ideal.is_zero())
        return SplitTree::zero(h.n());
    if (ideal.size() == 1)
        return SplitTree::leaf(ideal.generators().front());
    const auto x = *simplicial_vertex(h);
    const VarSet far = h.vertices() & ~h.closed_neighborhood(x);
    return SplitTree::node(x, variables_split(h.n(), far), chordal_split_rec(h.remove(bit(x))));
}

} // namespace detail

/// For chordal G, the splitting I(G^c) = x (non-neighbours of x) + I((G \ x)^c) at simplicial vertices x.
inline SplitTreePtr chordal_split(const Graph& g)
{
    if (!is_chordal(g))
        throw std::invalid_argument("chordal_split: graph is not chordal");
    return detail::chordal_split_rec(g);
}

struct FrobergReport {
    bool complement_chordal = false;
    bool edge_ideal_linear_resolution = false;
    bool edge_ideal_vertex_splittable = false;
    bool all_agree() const
    {
        return complement_chordal == edge_ideal_linear_resolution &&
               edge_ideal_linear_resolution == edge_ideal_vertex_splittable;
    }
};

inline FrobergReport froberg_equivalence(const Graph& g, const Field& field = Field::rationals())
{
    if (g.edge_count() == 0)
        throw std::invalid_argument("froberg_equivalence: graph has no edges");
    const auto ideal = edge_ideal(g);
    FrobergReport r;
    r.complement_chordal = is_chordal(complement(g));
    r.edge_ideal_linear_resolution = has_linear_resolution(ideal, field);
    r.edge_ideal_vertex_splittable = vertex_split(ideal) != nullptr;
    return r;
}

struct DualComplexReport {
    bool complement_chordal = false;
    bool dual_vertex_decomposable = false;
    bool dual_cohen_macaulay = false;
    bool all_agree() const
    {
        return complement_chordal == dual_vertex_decomposable && dual_vertex_decomposable == dual_cohen_macaulay;
    }
};

/// G^c chordal, Δ_G^∨ vertex decomposable, Δ_G^∨ Cohen-Macaulay, each evaluated independently.
inline DualComplexReport corchor1_equivalence(const Graph& g, const Field& field = Field::rationals())
{
    if (g.edge_count() == 0)
        throw std::invalid_argument("corchor1_equivalence: graph has no edges");
    const auto dual = alexander_dual_complex(independence_complex(g));
    DualComplexReport r;
    r.complement_chordal = is_chordal(complement(g));
    r.dual_vertex_decomposable = vertex_decomposable(dual) != nullptr;
    r.dual_cohen_macaulay = is_cohen_macaulay(dual, field);
    return r;
}

} // namespace vsplit

#endif // VSPLIT_GRAPH_HPP
