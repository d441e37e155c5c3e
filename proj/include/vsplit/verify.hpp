#ifndef VSPLIT_VERIFY_HPP
#define VSPLIT_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vsplit/betti.hpp"
#include "vsplit/complex.hpp"
#include "vsplit/corpus.hpp"
#include "vsplit/decomposable.hpp"
#include "vsplit/graph.hpp"
#include "vsplit/homology.hpp"
#include "vsplit/io.hpp"
#include "vsplit/splittable.hpp"

namespace vsplit {

struct VerifyConfig {
    std::size_t max_n = 5;       ///< exhaustive enumeration bound (vertices / variables)
    std::uint64_t seed = 1;
    std::size_t samples = 1000;  ///< size of seeded samples
    std::size_t sample_n = 6;    ///< vertex count of sampled complexes
    std::size_t vars = 7;        ///< variables for random splittable ideals
    std::size_t max_gens = 12;
    int depth = 5;
    Field field = Field::rationals();
};

struct SuiteReport {
    explicit SuiteReport(std::string suite) : name(std::move(suite)) {}

    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;
    std::vector<std::string> counterexamples;

    bool passed() const { return failures == 0; }

    void fail(std::string what)
    {
        ++failures;
        if (counterexamples.size() < 10)
            counterexamples.push_back(std::move(what));
    }

    std::string render() const
    {
        std::ostringstream out;
        out << "suite " << name << ": " << (passed() ? "PASS" : "FAIL") << " (" << checked << " checked, " << failures
            << " failed)\n";
        for (const auto& n : notes)
            out << "  " << n << '\n';
        for (const auto& c : counterexamples)
            out << "  counterexample: " << c << '\n';
        return out.str();
    }
};

/// Memoizes oracle Betti tables of ideals.
class BettiCache {
public:
    explicit BettiCache(Field field) : field_(field) {}

    const BettiTable& operator()(const MonomialIdeal& ideal)
    {
        if (auto it = cache_.find(ideal); it != cache_.end())
            return it->second;
        return cache_.emplace(ideal, koszul_betti(ideal, field_)).first->second;
    }

    const Field& field() const { return field_; }

private:
    Field field_;
    std::unordered_map<MonomialIdeal, BettiTable, IdealHash> cache_;
};

namespace detail {

inline std::string describe(const SimplicialComplex& c) { return format_complex(c, default_names(c.universe())); }
inline std::string describe(const MonomialIdeal& i) { return format_ideal(i, default_names(i.num_vars())); }
inline std::string describe(const Graph& g)
{
    std::string s = "n=" + std::to_string(g.n()) + " edges";
    for (auto [u, v] : g.edges())
        s += " " + std::to_string(u) + "-" + std::to_string(v);
    return s;
}

/// Exhaustive complexes on 1..min(max_n, 5) vertices, then `samples` random complexes on sample_n vertices.
template <typename F>
void complex_corpus(const VerifyConfig& cfg, F&& f)
{
    const std::size_t exhaustive = std::min<std::size_t>(cfg.max_n, 5);
    for (std::size_t n = 1; n <= exhaustive; ++n)
        for_each_complex(n, f);
    if (cfg.samples == 0 || cfg.sample_n == 0)
        return;
    Rng rng(cfg.seed);
    for (std::size_t k = 0; k < cfg.samples; ++k)
        f(random_complex(cfg.sample_n, 1 + rng.below(cfg.sample_n + 2), rng));
}

/// I(Δ^∨) = x·I(del^∨) + I(lk^∨) with I(lk^∨) ⊆ I(del^∨) at every node of a decomposition.
inline bool dual_split_holds(const DecompositionTree& t)
{
    if (t.is_leaf())
        return true;
    const auto whole = dual_facet_ideal(t.complex());
    const auto d = dual_facet_ideal(t.del()->complex());
    const auto l = dual_facet_ideal(t.lk()->complex());
    const auto x = Monomial::variable(t.complex().universe(), t.vertex());
    if (whole != x * d + l || !is_subideal(l, d))
        return false;
    return dual_split_holds(*t.del()) && dual_split_holds(*t.lk());
}

inline bool shedding_by_definition(const SimplicialComplex& c, std::size_t x)
{
    const auto del = deletion(c, x);
    for (VarSet f : del.facets())
        if (!std::binary_search(c.facets().begin(), c.facets().end(), f))
            return false;
    return true;
}

inline void check_split_nodes(const SplitTree& t, BettiCache& oracle, SuiteReport& r, std::size_t& nodes)
{
    if (t.kind() != SplitTree::Kind::Node)
        return;
    ++nodes;
    const auto x = Monomial::variable(t.num_vars(), t.var());
    const auto j = x * t.left()->ideal();
    const auto& k = t.right()->ideal();
    if (!verify_betti_splitting(t.ideal(), j, k, oracle))
        r.fail("Betti splitting fails at x" + std::to_string(t.var()) + " for " + describe(t.ideal()));
    if (intersect(j, k) != x * k)
        r.fail("x*I1 ∩ I2 != x*I2 at x" + std::to_string(t.var()) + " for " + describe(t.ideal()));
    check_split_nodes(*t.left(), oracle, r, nodes);
    check_split_nodes(*t.right(), oracle, r, nodes);
}

} // namespace detail

/// Δ vertex decomposable iff I_{Δ^∨} vertex splittable, with both certificates replayed.
inline SuiteReport verify_duality(const VerifyConfig& cfg)
{
    SuiteReport r{"duality"};
    Decomposer decomposer;
    VertexSplitter splitter;
    std::size_t vd = 0;
    detail::complex_corpus(cfg, [&](const SimplicialComplex& c) {
        ++r.checked;
        const auto tree = decomposer.decompose(c);
        const auto split = splitter.split(dual_facet_ideal(c));
        vd += tree ? 1 : 0;
        if (static_cast<bool>(tree) != static_cast<bool>(split))
            r.fail(detail::describe(c) + (tree ? " is vertex decomposable but its dual ideal does not split"
                                               : " is not vertex decomposable but its dual ideal splits"));
        else if (tree && (!is_valid_decomposition(*tree) || !is_valid_split_tree(*split) ||
                          split->ideal() != dual_facet_ideal(c)))
            r.fail("invalid certificate for " + detail::describe(c));
    });
    r.notes.push_back(std::to_string(vd) + " vertex decomposable complexes");
    return r;
}

/// I_{Δ^∨} = x I_{del^∨} + I_{lk^∨} with I_{lk^∨} ⊆ I_{del^∨} at every certificate node;
/// shedding by definition agrees with the link/deletion facet test.
inline SuiteReport verify_dual_split(const VerifyConfig& cfg)
{
    SuiteReport r{"dual-split"};
    Decomposer decomposer;
    detail::complex_corpus(cfg, [&](const SimplicialComplex& c) {
        ++r.checked;
        for_each_bit(c.vertices(), [&](std::size_t v) {
            if (is_shedding(c, v) != detail::shedding_by_definition(c, v))
                r.fail("shedding tests disagree at " + std::to_string(v) + " in " + detail::describe(c));
        });
        if (auto tree = decomposer.decompose(c); tree && !detail::dual_split_holds(*tree))
            r.fail("dual ideal identity fails for " + detail::describe(c));
    });
    return r;
}

/**
 * Random splittable ideals (known by construction): the recognizer finds a
 * splitting, and the recursive, set-based and oracle Betti tables agree.
 */
inline SuiteReport verify_betti_agreement(const VerifyConfig& cfg)
{
    SuiteReport r{"betti"};
    Rng rng(cfg.seed);
    SplittableParams p;
    p.vars = cfg.vars;
    p.depth = cfg.depth;
    p.max_gens = cfg.max_gens;
    std::size_t non_squarefree = 0, linear = 0;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
        const auto tree = random_splittable(p, rng);
        const auto& ideal = tree->ideal();
        ++r.checked;
        non_squarefree += is_squarefree(ideal) ? 0 : 1;
        VertexSplitter splitter;
        const auto found = splitter.split(ideal);
        if (!found || !is_valid_split_tree(*found) || found->ideal() != ideal) {
            r.fail("recognizer rejects splittable " + detail::describe(ideal));
            continue;
        }
        const auto order = quotient_order_from_split(*tree);
        if (!verify_linear_quotients(order))
            r.fail("quotient order fails colon check for " + detail::describe(ideal));
        const auto recursive = betti_recursive(*tree);
        const auto sets = betti_from_sets(order);
        const auto oracle = koszul_betti(ideal, cfg.field);
        if (recursive != sets || sets != oracle || betti_recursive(*found) != oracle)
            r.fail("tables differ for " + detail::describe(ideal) + ": recursive " + format_inline(recursive) +
                   ", sets " + format_inline(sets) + ", oracle " + format_inline(oracle));
        if (common_degree(ideal) >= 0) {
            ++linear;
            if (!has_linear_resolution(ideal, cfg.field))
                r.fail("equigenerated splittable ideal without linear resolution: " + detail::describe(ideal));
        }
    }
    r.notes.push_back(std::to_string(non_squarefree) + " non-square-free, " + std::to_string(linear) +
                      " equigenerated");
    return r;
}

/// At every node of every certificate in the betti corpus, x I1 + I2 is a Betti splitting.
inline SuiteReport verify_splitting(const VerifyConfig& cfg)
{
    SuiteReport r{"splitting"};
    Rng rng(cfg.seed);
    SplittableParams p;
    p.vars = cfg.vars;
    p.depth = cfg.depth;
    p.max_gens = cfg.max_gens;
    BettiCache oracle(cfg.field);
    std::size_t nodes = 0;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
        const auto tree = random_splittable(p, rng);
        ++r.checked;
        detail::check_split_nodes(*tree, oracle, r, nodes);
    }
    r.notes.push_back(std::to_string(nodes) + " split nodes verified");
    return r;
}

/// pd(R/I_Δ) = bight(I_Δ) on vertex decomposable complexes; counts non-VD complexes where it fails.
inline SuiteReport verify_pd_bight(const VerifyConfig& cfg)
{
    SuiteReport r{"pd-bight"};
    Decomposer decomposer;
    std::size_t vd = 0, non_vd_mismatch = 0;
    detail::complex_corpus(cfg, [&](const SimplicialComplex& c) {
        const auto q = quotient_table(koszul_betti(stanley_reisner_ideal(c), cfg.field));
        const bool equal = pd(q).value() == bight(c);
        if (!decomposer.decompose(c)) {
            non_vd_mismatch += equal ? 0 : 1;
            return;
        }
        ++vd;
        ++r.checked;
        if (!equal)
            r.fail("pd " + std::to_string(*pd(q)) + " != bight " + std::to_string(bight(c)) + " for " +
                   detail::describe(c));
    });
    r.notes.push_back(std::to_string(non_vd_mismatch) + " non-decomposable complexes with pd != bight");
    return r;
}

/// Recursive pd/reg along the decomposition equal the oracle's values.
inline SuiteReport verify_pd_reg(const VerifyConfig& cfg)
{
    SuiteReport r{"pd-reg"};
    Decomposer decomposer;
    detail::complex_corpus(cfg, [&](const SimplicialComplex& c) {
        const auto tree = decomposer.decompose(c);
        if (!tree)
            return;
        ++r.checked;
        const auto rec = pd_reg_recursive(*tree);
        const auto q = quotient_table(hochster_betti(c, cfg.field));
        if (rec.pd != pd(q).value() || rec.reg != reg(q).value())
            r.fail("recursive (pd, reg) = (" + std::to_string(rec.pd) + ", " + std::to_string(rec.reg) +
                   ") but oracle gives (" + std::to_string(*pd(q)) + ", " + std::to_string(*reg(q)) + ") for " +
                   detail::describe(c));
    });
    return r;
}

/// pd(I^∨) = reg(R/I) for square-free I other than 0 and (1).
inline SuiteReport verify_terai(const VerifyConfig& cfg)
{
    SuiteReport r{"terai"};
    detail::complex_corpus(cfg, [&](const SimplicialComplex& c) {
        const auto ideal = stanley_reisner_ideal(c);
        if (ideal.is_zero() || ideal.is_unit())
            return;
        ++r.checked;
        std::vector<VarSet> supports;
        for (const auto& g : ideal.generators())
            supports.push_back(g.support());
        const auto dual = intersect_primes(supports, ideal.num_vars());
        const auto lhs = pd(koszul_betti(dual, cfg.field));
        const auto rhs = reg(quotient_table(koszul_betti(ideal, cfg.field)));
        if (lhs != rhs)
            r.fail("pd(I^v) = " + optional_to_string(lhs) + ", reg(R/I) = " + optional_to_string(rhs) + " for " +
                   detail::describe(ideal));
    });
    return r;
}

/// Hochster and Koszul oracles agree; rational and F_p tables agree; Euler characteristics match.
inline SuiteReport verify_oracles(const VerifyConfig& cfg)
{
    SuiteReport r{"oracles"};
    const Field modp = Field::prime(cfg.field.is_rational() ? 101 : cfg.field.characteristic());
    std::size_t field_mismatch = 0;
    detail::complex_corpus(cfg, [&](const SimplicialComplex& c) {
        ++r.checked;
        const auto h = hochster_betti(c, cfg.field);
        if (h != koszul_betti(stanley_reisner_ideal(c), cfg.field))
            r.fail("Hochster and Koszul tables differ for " + detail::describe(c));
        if (h != hochster_betti(c, modp))
            ++field_mismatch;
        const auto hom = reduced_homology_dims(c, cfg.field);
        long long chi_faces = 0, chi_hom = 0;
        for (std::size_t s = 0; s < hom.faces.size(); ++s)
            chi_faces += (s % 2 ? 1 : -1) * static_cast<long long>(hom.faces[s]);
        for (std::size_t s = 0; s < hom.dims.size(); ++s)
            chi_hom += (s % 2 ? 1 : -1) * static_cast<long long>(hom.dims[s]);
        if (chi_faces != chi_hom)
            r.fail("Euler characteristic mismatch for " + detail::describe(c));
    });
    r.notes.push_back(std::to_string(field_mismatch) + " tables differ between " + cfg.field.name() + " and " +
                      modp.name());
    return r;
}

/// Graph equivalences on every graph with 2..max_n vertices and at least one edge.
inline SuiteReport verify_graph_equivalences(const VerifyConfig& cfg)
{
    SuiteReport r{"froberg"};
    std::size_t chordal_complements = 0;
    for (std::size_t n = 2; n <= cfg.max_n; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            if (g.edge_count() == 0)
                return;
            ++r.checked;
            const auto f = froberg_equivalence(g, cfg.field);
            const auto d = corchor1_equivalence(g, cfg.field);
            chordal_complements += f.complement_chordal ? 1 : 0;
            if (!f.all_agree())
                r.fail("linear-resolution equivalence fails for " + detail::describe(g));
            if (!d.all_agree())
                r.fail("dual-complex equivalence fails for " + detail::describe(g));
        });
    }
    r.notes.push_back(std::to_string(chordal_complements) + " graphs with chordal complement");
    return r;
}

/// chordal_split certificates on a seeded sample of chordal graphs with at most max_n vertices.
inline SuiteReport verify_chordal_split(const VerifyConfig& cfg)
{
    SuiteReport r{"chordal-split"};
    Rng rng(cfg.seed);
    std::size_t drawn = 0;
    while (r.checked < cfg.samples) {
        const std::size_t n = 1 + rng.below(cfg.max_n);
        const double p = rng.unit();
        const auto g = random_graph(n, p, rng);
        ++drawn;
        if (!is_chordal(g))
            continue;
        ++r.checked;
        const auto tree = chordal_split(g);
        const auto target = edge_ideal(complement(g));
        if (!tree || !is_valid_split_tree(*tree) || tree->ideal() != target)
            r.fail("invalid chordal splitting for " + detail::describe(g));
        else if (!verify_linear_quotients(quotient_order_from_split(*tree)))
            r.fail("quotient order from chordal splitting fails for " + detail::describe(g));
    }
    r.notes.push_back(std::to_string(drawn) + " graphs drawn");
    return r;
}

/**
 * Cover-ideal recursion on sequentially Cohen-Macaulay bipartite graphs at
 * the certificate's y, and on chordal graphs at neighbours of simplicial
 * vertices, against the oracle.
 */
inline SuiteReport verify_cover_recursion(const VerifyConfig& cfg)
{
    SuiteReport r{"cover-recursion"};
    std::size_t scm = 0, chordal = 0;
    for (std::size_t n = 2; n <= cfg.max_n; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            if (g.edge_count() == 0)
                return;
            const auto oracle = koszul_betti(cover_ideal(g), cfg.field);
            if (is_bipartite(g)) {
                if (auto cert = is_scm_bipartite(g); cert && !cert->is_leaf()) {
                    ++scm;
                    ++r.checked;
                    const auto y = cert->y();
                    if (cover_ideal(g.remove(g.closed_neighborhood(cert->x()))) != cover_ideal(g.remove(bit(y))))
                        r.fail("I(G \\ N[x])^v != I(G \\ y)^v for " + detail::describe(g));
                    if (cover_betti_recursive(g, y, cfg.field) != oracle)
                        r.fail("SCM cover recursion at " + std::to_string(y) + " fails for " + detail::describe(g));
                }
            }
            if (is_chordal(g)) {
                const auto delta = independence_complex(g);
                VarSet ys = 0;
                for_each_bit(g.vertices(), [&](std::size_t x) {
                    if (g.is_clique(g.neighbors(x)))
                        ys |= g.neighbors(x);
                });
                for_each_bit(ys, [&](std::size_t y) {
                    ++chordal;
                    ++r.checked;
                    if (!is_shedding(delta, y))
                        r.fail("neighbour " + std::to_string(y) + " of a simplicial vertex is not shedding in " +
                               detail::describe(g));
                    else if (cover_betti_recursive(g, y, cfg.field) != oracle)
                        r.fail("chordal cover recursion at " + std::to_string(y) + " fails for " +
                               detail::describe(g));
                });
            }
        });
    }
    r.notes.push_back(std::to_string(scm) + " SCM bipartite graphs, " + std::to_string(chordal) +
                      " chordal (graph, vertex) pairs");
    return r;
}

inline const std::map<std::string, std::function<SuiteReport(const VerifyConfig&)>>& verify_suites()
{
    static const std::map<std::string, std::function<SuiteReport(const VerifyConfig&)>> suites = {
        {"duality", verify_duality},
        {"dual-split", verify_dual_split},
        {"betti", verify_betti_agreement},
        {"splitting", verify_splitting},
        {"pd-bight", verify_pd_bight},
        {"pd-reg", verify_pd_reg},
        {"terai", verify_terai},
        {"oracles", verify_oracles},
        {"froberg", verify_graph_equivalences},
        {"chordal-split", verify_chordal_split},
        {"cover-recursion", verify_cover_recursion},
    };
    return suites;
}

inline SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg)
{
    const auto& suites = verify_suites();
    const auto it = suites.find(name);
    if (it == suites.end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second(cfg);
}

} // namespace vsplit

#endif // VSPLIT_VERIFY_HPP
