#ifndef VSPLIT_SPLITTABLE_HPP
#define VSPLIT_SPLITTABLE_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vsplit/betti.hpp"
#include "vsplit/homology.hpp"
#include "vsplit/monomial.hpp"

namespace vsplit {

class SplitTree;
using SplitTreePtr = std::shared_ptr<const SplitTree>;

/**
 * Certificate that a monomial ideal is vertex splittable.
 *
 * A Node records I = x * I1 + I2 where I1 (left) and I2 (right) do not
 * involve x and I2 is contained in I1. Leaves are principal ideals (u),
 * possibly u = 1, or the zero ideal. Every node caches the ideal it
 * reconstructs.
 */
class SplitTree {
public:
    enum class Kind { Zero, Leaf, Node };

    static SplitTreePtr zero(std::size_t num_vars)
    {
        return SplitTreePtr(new SplitTree(Kind::Zero, MonomialIdeal::zero(num_vars)));
    }

    static SplitTreePtr leaf(const Monomial& u)
    {
        auto t = new SplitTree(Kind::Leaf, minimalize({u}, u.num_vars()));
        return SplitTreePtr(t);
    }

    static SplitTreePtr node(std::size_t var, SplitTreePtr left, SplitTreePtr right)
    {
        if (!left || !right)
            throw std::invalid_argument("split node needs both children");
        const std::size_t n = left->num_vars();
        if (right->num_vars() != n || var >= n)
            throw std::invalid_argument("split node: inconsistent variable counts or split variable out of range");
        auto ideal = Monomial::variable(n, var) * left->ideal() + right->ideal();
        auto t = new SplitTree(Kind::Node, std::move(ideal));
        t->var_ = var;
        t->left_ = std::move(left);
        t->right_ = std::move(right);
        return SplitTreePtr(t);
    }

    Kind kind() const { return kind_; }
    std::size_t num_vars() const { return ideal_.num_vars(); }
    const MonomialIdeal& ideal() const { return ideal_; }

    /// The generator of a Leaf.
    const Monomial& monomial() const
    {
        if (kind_ != Kind::Leaf)
            throw std::logic_error("SplitTree::monomial on a non-leaf");
        return ideal_.generators().front();
    }

    std::size_t var() const { return var_; }
    const SplitTreePtr& left() const { return left_; }
    const SplitTreePtr& right() const { return right_; }

    std::size_t node_count() const
    {
        return kind_ == Kind::Node ? 1 + left_->node_count() + right_->node_count() : 0;
    }

private:
    SplitTree(Kind kind, MonomialIdeal ideal) : kind_(kind), ideal_(std::move(ideal)) {}

    Kind kind_;
    MonomialIdeal ideal_;
    std::size_t var_ = 0;
    SplitTreePtr left_, right_;
};

/// Empty string when the tree is a valid vertex-splitting certificate, else the first defect found.
inline std::string split_tree_defect(const SplitTree& t)
{
    if (t.kind() != SplitTree::Kind::Node)
        return {};
    const auto& l = *t.left();
    const auto& r = *t.right();
    const std::size_t x = t.var();
    if (l.ideal().is_zero())
        return "split at x" + std::to_string(x) + ": I1 is zero";
    if (l.ideal().involves(x) || r.ideal().involves(x))
        return "split at x" + std::to_string(x) + ": I1 or I2 involves the split variable";
    if (!is_subideal(r.ideal(), l.ideal()))
        return "split at x" + std::to_string(x) + ": I2 is not contained in I1";
    // G(I) must be the disjoint union of x*G(I1) and G(I2).
    if (t.ideal().size() != l.ideal().size() + r.ideal().size())
        return "split at x" + std::to_string(x) + ": generators of x*I1 and I2 overlap";
    if (auto d = split_tree_defect(l); !d.empty())
        return d;
    return split_tree_defect(r);
}

inline bool is_valid_split_tree(const SplitTree& t) { return split_tree_defect(t).empty(); }

/**
 * Searches for a vertex splitting, trying split variables in ascending
 * index order. Results (including failures) are memoized per instance, so
 * one splitter can be reused across many related ideals. Not thread-safe;
 * use one instance per thread.
 */
class VertexSplitter {
public:
    /// A certificate, or nullptr when I is not vertex splittable.
    SplitTreePtr split(const MonomialIdeal& ideal)
    {
        if (ideal.is_zero())
            return SplitTree::zero(ideal.num_vars());
        if (ideal.size() == 1)
            return SplitTree::leaf(ideal.generators().front());
        if (auto it = memo_.find(ideal); it != memo_.end())
            return it->second;

        SplitTreePtr result;
        const std::size_t n = ideal.num_vars();
        for (std::size_t x = 0; x < n && !result; ++x) {
            bool candidate = false, squarefree_in_x = true;
            for (const auto& g : ideal.generators()) {
                candidate |= g[x] >= 1;
                squarefree_in_x &= g[x] <= 1;
            }
            if (!candidate || !squarefree_in_x)
                continue;
            auto [with, rest] = x_partition(ideal, x);
            const auto xvar = Monomial::variable(n, x);
            std::vector<Monomial> reduced;
            reduced.reserve(with.size());
            for (const auto& g : with.generators())
                reduced.push_back(quotient(g, xvar));
            auto i1 = minimalize(std::move(reduced), n);
            if (!is_subideal(rest, i1))
                continue;
            auto left = split(i1);
            if (!left)
                continue;
            auto right = split(rest);
            if (!right)
                continue;
            result = SplitTree::node(x, std::move(left), std::move(right));
        }
        memo_.emplace(ideal, result);
        return result;
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    std::map<MonomialIdeal, SplitTreePtr> memo_;
};

/// One-shot vertex splitting search; nullptr when none exists.
inline SplitTreePtr vertex_split(const MonomialIdeal& ideal)
{
    VertexSplitter splitter;
    return splitter.split(ideal);
}

/// Generators f_1 < ... < f_m with set(f_t): the variables generating (f_1..f_{t-1}) : (f_t).
struct LinearQuotientOrder {
    std::size_t num_vars = 0;
    std::vector<Monomial> generators;
    std::vector<VarSet> sets;
};

/// The order x*f_1 < ... < x*f_r < g_1 < ... < g_s built along the tree,
/// with set(x*f) = set_{I1}(f) and set(g) = {x} ∪ set_{I2}(g).
inline LinearQuotientOrder quotient_order_from_split(const SplitTree& t)
{
    if (auto d = split_tree_defect(t); !d.empty())
        throw std::invalid_argument("quotient_order_from_split: malformed tree: " + d);
    LinearQuotientOrder out;
    out.num_vars = t.num_vars();
    switch (t.kind()) {
    case SplitTree::Kind::Zero:
        break;
    case SplitTree::Kind::Leaf:
        out.generators.push_back(t.monomial());
        out.sets.push_back(0);
        break;
    case SplitTree::Kind::Node: {
        const auto xvar = Monomial::variable(t.num_vars(), t.var());
        const auto left = quotient_order_from_split(*t.left());
        const auto right = quotient_order_from_split(*t.right());
        for (std::size_t k = 0; k < left.generators.size(); ++k) {
            out.generators.push_back(xvar * left.generators[k]);
            out.sets.push_back(left.sets[k]);
        }
        for (std::size_t k = 0; k < right.generators.size(); ++k) {
            out.generators.push_back(right.generators[k]);
            out.sets.push_back(right.sets[k] | bit(t.var()));
        }
        break;
    }
    }
    return out;
}

/// Variables generating (prefix) : (f) when that colon is generated by variables; nullopt otherwise.
inline std::optional<VarSet> colon_variables(const std::vector<Monomial>& prefix, const Monomial& f)
{
    std::vector<Monomial> parts;
    parts.reserve(prefix.size());
    VarSet linear = 0;
    for (const auto& g : prefix) {
        parts.push_back(colon_part(g, f));
        const auto& q = parts.back();
        if (q.is_unit())
            return std::nullopt;
        if (q.degree() == 1)
            linear |= q.support();
    }
    for (const auto& q : parts)
        if ((q.support() & linear) == 0)
            return std::nullopt;
    return linear;
}

/// Checks every colon (f_1..f_{t-1}) : (f_t) is generated exactly by the variables in set(f_t).
inline bool verify_linear_quotients(const LinearQuotientOrder& order)
{
    if (order.generators.size() != order.sets.size())
        return false;
    std::vector<Monomial> prefix;
    for (std::size_t t = 0; t < order.generators.size(); ++t) {
        const auto& f = order.generators[t];
        const auto expected = MonomialIdeal::variables(order.num_vars, order.sets[t]);
        const auto actual = colon(minimalize(prefix, order.num_vars), f);
        if (actual != expected)
            return false;
        prefix.push_back(f);
    }
    return true;
}

inline constexpr std::size_t kDefaultLinearQuotientCap = 20;

/**
 * Searches for a linear-quotient order by dynamic programming over
 * generator subsets: a set S can be an initial segment iff some f in S has
 * (S \ f) as a feasible segment and (S \ f) : (f) is generated by variables.
 * Throws std::length_error when |G(I)| exceeds cap.
 */
inline std::optional<LinearQuotientOrder> find_linear_quotients(const MonomialIdeal& ideal,
                                                                std::size_t cap = kDefaultLinearQuotientCap)
{
    const auto& gens = ideal.generators();
    const std::size_t m = gens.size();
    if (m > cap || m > 30)
        throw std::length_error("find_linear_quotients: too large (" + std::to_string(m) + " generators, cap " +
                                std::to_string(cap) + ")");
    LinearQuotientOrder out;
    out.num_vars = ideal.num_vars();
    if (m == 0)
        return out;

    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    // last[S] = index of the generator appended to reach S, or -1 if S is infeasible.
    std::vector<std::int8_t> last(std::size_t{full} + 1, -1);
    last[0] = 127;
    std::vector<Monomial> prefix;
    for (std::uint32_t s = 0; s < full; ++s) {
        if (last[s] < 0)
            continue;
        prefix.clear();
        for (std::size_t k = 0; k < m; ++k)
            if (s & (1u << k))
                prefix.push_back(gens[k]);
        for (std::size_t k = 0; k < m; ++k) {
            const std::uint32_t next = s | (1u << k);
            if (next == s || last[next] >= 0)
                continue;
            if (colon_variables(prefix, gens[k]))
                last[next] = static_cast<std::int8_t>(k);
        }
    }
    if (last[full] < 0)
        return std::nullopt;

    std::vector<std::size_t> reversed;
    for (std::uint32_t s = full; s != 0;) {
        const auto k = static_cast<std::size_t>(last[s]);
        reversed.push_back(k);
        s &= ~(1u << k);
    }
    std::vector<Monomial> seq;
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
        const auto& f = gens[*it];
        out.sets.push_back(*colon_variables(seq, f));
        out.generators.push_back(f);
        seq.push_back(f);
    }
    return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// beta_{i,j}(I) = sum over t with deg f_t = j - i of C(|set(f_t)|, i).
inline BettiTable betti_from_sets(const LinearQuotientOrder& order)
{
    BettiTable table(BettiSubject::Ideal);
    for (std::size_t t = 0; t < order.generators.size(); ++t) {
        const auto d = static_cast<int>(order.generators[t].degree());
        const auto s = static_cast<std::uint64_t>(popcount(order.sets[t]));
        for (std::uint64_t i = 0; i <= s; ++i)
            table.add(static_cast<int>(i), d + static_cast<int>(i), binomial(s, i));
    }
    return table;
}

/// beta_{i,j}(I) = beta_{i,j-1}(I1) + beta_{i,j}(I2) + beta_{i-1,j-1}(I2) along the tree.
inline BettiTable betti_recursive(const SplitTree& t)
{
    BettiTable table(BettiSubject::Ideal);
    switch (t.kind()) {
    case SplitTree::Kind::Zero:
        break;
    case SplitTree::Kind::Leaf:
        table.add(0, static_cast<int>(t.monomial().degree()), 1);
        break;
    case SplitTree::Kind::Node: {
        const auto left = betti_recursive(*t.left());
        const auto right = betti_recursive(*t.right());
        table.add_shifted(left, 0, 1);
        table.add_shifted(right, 0, 0);
        table.add_shifted(right, 1, 1);
        break;
    }
    }
    return table;
}

/// True iff G(I) is the disjoint union of G(J) and G(K).
inline bool is_generator_partition(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k)
{
    require_same_ring(i, j);
    require_same_ring(i, k);
    if (i.size() != j.size() + k.size())
        return false;
    for (const auto& g : j.generators())
        for (const auto& h : k.generators())
            if (g == h)
                return false;
    std::vector<Monomial> all = j.generators();
    all.insert(all.end(), k.generators().begin(), k.generators().end());
    std::sort(all.begin(), all.end(), canonical_less);
    return all == i.generators();
}

/**
 * Checks beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J ∩ K)
 * for all (i, j), with every table taken from the supplied oracle.
 */
template <typename Oracle>
    requires std::invocable<Oracle&, const MonomialIdeal&>
bool verify_betti_splitting(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k, Oracle&& oracle)
{
    if (!is_generator_partition(i, j, k))
        throw std::invalid_argument("verify_betti_splitting: G(I) is not the disjoint union of G(J) and G(K)");
    BettiTable expected(BettiSubject::Ideal);
    expected.add_shifted(oracle(j), 0, 0);
    expected.add_shifted(oracle(k), 0, 0);
    expected.add_shifted(oracle(intersect(j, k)), 1, 0);
    return expected == oracle(i);
}

inline bool verify_betti_splitting(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                                   const Field& field = Field::rationals())
{
    return verify_betti_splitting(i, j, k, [&](const MonomialIdeal& ideal) { return koszul_betti(ideal, field); });
}

} // namespace vsplit

#endif // VSPLIT_SPLITTABLE_HPP
