#ifndef VSPLIT_CORPUS_HPP
#define VSPLIT_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "vsplit/complex.hpp"
#include "vsplit/graph.hpp"
#include "vsplit/monomial.hpp"
#include "vsplit/splittable.hpp"

namespace vsplit {

/// Seeded generator with platform-independent draws (std distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        if (n == 0)
            throw std::invalid_argument("Rng::below(0)");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    /// A uniformly chosen member of a non-empty set.
    std::size_t pick(VarSet s)
    {
        auto k = below(static_cast<std::uint64_t>(popcount(s)));
        std::size_t chosen = 0;
        for_each_bit(s, [&](std::size_t v) {
            if (k-- == 0)
                chosen = v;
        });
        return chosen;
    }

private:
    std::mt19937_64 engine_;
};

/// Calls f(Δ) for every complex on ground set {0..n-1}, i.e. every non-empty facet antichain.
template <typename F>
void for_each_complex(std::size_t n, F&& f)
{
    if (n > 6)
        throw std::invalid_argument("for_each_complex: exhaustive enumeration is limited to 6 vertices");
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<VarSet> chosen;
    auto rec = [&](auto&& self, std::uint64_t next) -> void {
        if (next == subsets) {
            if (!chosen.empty())
                f(SimplicialComplex::from_facets(chosen, n));
            return;
        }
        self(self, next + 1);
        const VarSet s = next;
        for (VarSet c : chosen)
            if ((c & ~s) == 0 || (s & ~c) == 0)
                return;
        chosen.push_back(s);
        self(self, next + 1);
        chosen.pop_back();
    };
    rec(rec, 0);
}

/// Random complex on {0..n-1} generated by `facets` random faces (each vertex kept with probability 1/2).
inline SimplicialComplex random_complex(std::size_t n, std::size_t facets, Rng& rng)
{
    if (n == 0 || facets == 0)
        throw std::invalid_argument("random_complex: need n >= 1 and at least one facet");
    std::vector<VarSet> faces;
    for (std::size_t k = 0; k < facets; ++k) {
        VarSet s = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (rng.chance(0.5))
                s |= bit(v);
        faces.push_back(s);
    }
    return SimplicialComplex::from_facets(faces, n);
}

/// Erdős–Rényi graph G(n, p).
inline Graph random_graph(std::size_t n, double p, Rng& rng)
{
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_graph: p must lie in [0, 1]");
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.chance(p))
                g.add_edge(u, v);
    return g;
}

/// Calls f(G) for each of the 2^(n(n-1)/2) labelled graphs on n vertices.
template <typename F>
void for_each_graph(std::size_t n, F&& f)
{
    if (n > 7)
        throw std::invalid_argument("for_each_graph: raw enumeration is limited to 7 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask & (std::uint64_t{1} << k))
                g.add_edge(slots[k].first, slots[k].second);
        f(g);
    }
}

struct SplittableParams {
    std::size_t vars = 6;
    int depth = 4;
    std::size_t max_gens = 12;
    double leaf_probability = 0.2;
    double zero_right_probability = 0.15;
    int subideal_attempts = 8;
};

namespace detail {

inline Monomial random_monomial(std::size_t n, VarSet avail, Rng& rng)
{
    std::vector<Monomial::Exponent> e(n, 0);
    for_each_bit(avail, [&](std::size_t v) {
        const double r = rng.unit();
        e[v] = r < 0.5 ? 0 : (r < 0.9 ? 1 : 2);
    });
    return Monomial(std::move(e));
}

inline SplitTreePtr random_split(std::size_t n, VarSet avail, int depth, const SplittableParams& p, Rng& rng)
{
    if (depth <= 0 || avail == 0 || rng.chance(p.leaf_probability))
        return SplitTree::leaf(random_monomial(n, avail, rng));
    const std::size_t x = rng.pick(avail);
    const VarSet rest = avail & ~bit(x);
    auto left = random_split(n, rest, depth - 1, p, rng);
    const auto& i1 = left->ideal();

    auto fits = [&](const MonomialIdeal& i2) {
        if (!is_subideal(i2, i1))
            return false;
        for (const auto& g : i2.generators())
            for (const auto& h : i1.generators())
                if (g == h)
                    return false;
        return true;
    };

    SplitTreePtr right;
    if (rng.chance(p.zero_right_probability)) {
        right = SplitTree::zero(n);
    } else {
        for (int a = 0; a < p.subideal_attempts && !right; ++a) {
            auto cand = random_split(n, rest, depth - 1, p, rng);
            if (fits(cand->ideal()))
                right = std::move(cand);
        }
        if (!right) {
            // A proper multiple of one generator of I1 always fits.
            const auto& g = i1.generators()[rng.below(i1.size())];
            Monomial m = random_monomial(n, rest, rng);
            if (m.is_unit() && rest)
                m = Monomial::variable(n, rng.pick(rest));
            right = m.is_unit() ? SplitTree::zero(n) : SplitTree::leaf(g * m);
        }
    }
    return SplitTree::node(x, std::move(left), std::move(right));
}

} // namespace detail

/**
 * Samples a vertex-splittable ideal together with the certificate it was
 * built from, so the label is known by construction. Retries until the
 * ideal has at most max_gens generators.
 */
inline SplitTreePtr random_splittable(const SplittableParams& p, Rng& rng)
{
    if (p.vars == 0 || p.vars > kMaxVars || p.max_gens == 0)
        throw std::invalid_argument("random_splittable: invalid parameters");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto t = detail::random_split(p.vars, full_set(p.vars), p.depth, p, rng);
        if (t->ideal().size() <= p.max_gens && is_valid_split_tree(*t))
            return t;
    }
    throw std::runtime_error("random_splittable: could not meet the generator cap");
}

} // namespace vsplit

#endif // VSPLIT_CORPUS_HPP
