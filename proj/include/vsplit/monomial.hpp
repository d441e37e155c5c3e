#ifndef VSPLIT_MONOMIAL_HPP
#define VSPLIT_MONOMIAL_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vsplit {

/// Bit set over variable (or vertex) indices. Index i is bit i.
using VarSet = std::uint64_t;

/// Upper bound on the number of variables / vertices handled anywhere.
inline constexpr std::size_t kMaxVars = 64;

inline constexpr VarSet bit(std::size_t i) { return VarSet{1} << i; }
inline int popcount(VarSet s) { return std::popcount(s); }
inline VarSet full_set(std::size_t n) { return n >= 64 ? ~VarSet{0} : bit(n) - 1; }

/// Calls f(i) for every index in s, ascending.
template <typename F>
void for_each_bit(VarSet s, F&& f)
{
    while (s) {
        const int i = std::countr_zero(s);
        f(static_cast<std::size_t>(i));
        s &= s - 1;
    }
}

inline void check_var_count(std::size_t n)
{
    if (n > kMaxVars)
        throw std::invalid_argument("at most 64 variables are supported, got " + std::to_string(n));
}

/**
 * A monomial x^a in k[x_0..x_{n-1}], stored as its exponent vector.
 * The unit monomial (all exponents zero) is a valid value.
 */
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;

    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) { check_var_count(num_vars); }

    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { check_var_count(exps_.size()); }

    static Monomial unit(std::size_t num_vars) { return Monomial(num_vars); }

    static Monomial variable(std::size_t num_vars, std::size_t index)
    {
        if (index >= num_vars)
            throw std::out_of_range("variable index out of range");
        Monomial m(num_vars);
        m.exps_[index] = 1;
        return m;
    }

    /// Square-free monomial whose support is the given set.
    static Monomial from_set(std::size_t num_vars, VarSet s)
    {
        if ((s & ~full_set(num_vars)) != 0)
            throw std::out_of_range("support outside the variable range");
        Monomial m(num_vars);
        for_each_bit(s, [&](std::size_t i) { m.exps_[i] = 1; });
        return m;
    }

    std::size_t num_vars() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const { return exps_; }

    std::uint64_t degree() const
    {
        std::uint64_t d = 0;
        for (Exponent e : exps_)
            d += e;
        return d;
    }

    bool is_unit() const
    {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    bool is_squarefree() const
    {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
    }

    VarSet support() const
    {
        VarSet s = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0)
                s |= bit(i);
        return s;
    }

    bool involves(std::size_t var) const { return var < exps_.size() && exps_[var] != 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

private:
    friend Monomial operator*(const Monomial&, const Monomial&);
    friend Monomial lcm(const Monomial&, const Monomial&);
    friend Monomial gcd(const Monomial&, const Monomial&);
    friend Monomial quotient(const Monomial&, const Monomial&);
    friend Monomial colon_part(const Monomial&, const Monomial&);

    std::vector<Exponent> exps_;
};

namespace detail {
inline void require_same_length(const Monomial& a, const Monomial& b)
{
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("monomials live in rings with different variable counts");
}
} // namespace detail

/// True iff a | b, i.e. every exponent of a is at most the one of b.
inline bool divides(const Monomial& a, const Monomial& b)
{
    detail::require_same_length(a, b);
    for (std::size_t i = 0; i < a.num_vars(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

inline Monomial operator*(const Monomial& a, const Monomial& b)
{
    detail::require_same_length(a, b);
    Monomial r(a.num_vars());
    for (std::size_t i = 0; i < a.num_vars(); ++i) {
        if (a[i] > std::numeric_limits<Monomial::Exponent>::max() - b[i])
            throw std::overflow_error("exponent overflow in monomial product");
        r.exps_[i] = a[i] + b[i];
    }
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b)
{
    detail::require_same_length(a, b);
    Monomial r(a.num_vars());
    for (std::size_t i = 0; i < a.num_vars(); ++i)
        r.exps_[i] = std::max(a[i], b[i]);
    return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b)
{
    detail::require_same_length(a, b);
    Monomial r(a.num_vars());
    for (std::size_t i = 0; i < a.num_vars(); ++i)
        r.exps_[i] = std::min(a[i], b[i]);
    return r;
}

/// a / b; requires b | a.
inline Monomial quotient(const Monomial& a, const Monomial& b)
{
    if (!divides(b, a))
        throw std::invalid_argument("quotient: divisor does not divide dividend");
    Monomial r(a.num_vars());
    for (std::size_t i = 0; i < a.num_vars(); ++i)
        r.exps_[i] = a[i] - b[i];
    return r;
}

/// g / gcd(g, m): the generator of (g) : (m).
inline Monomial colon_part(const Monomial& g, const Monomial& m)
{
    detail::require_same_length(g, m);
    Monomial r(g.num_vars());
    for (std::size_t i = 0; i < g.num_vars(); ++i)
        r.exps_[i] = g[i] > m[i] ? g[i] - m[i] : 0;
    return r;
}

/// Display order: by degree, then x_0 before x_1 (descending lex on exponents).
inline bool canonical_less(const Monomial& a, const Monomial& b)
{
    const auto da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    return b < a;
}

/**
 * A monomial ideal given by its minimal generating set G(I).
 *
 * Generators are kept in canonical order (see canonical_less) so two
 * ideals are equal iff their generator vectors are equal. The zero ideal
 * has no generators and the unit ideal is generated by {1}.
 */
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal zero(std::size_t num_vars) { return MonomialIdeal(num_vars, {}); }
    static MonomialIdeal unit(std::size_t num_vars) { return MonomialIdeal(num_vars, {Monomial::unit(num_vars)}); }

    /// Ideal generated by the given variables.
    static MonomialIdeal variables(std::size_t num_vars, VarSet vars)
    {
        std::vector<Monomial> gens;
        for_each_bit(vars, [&](std::size_t i) { gens.push_back(Monomial::variable(num_vars, i)); });
        return MonomialIdeal(num_vars, std::move(gens));
    }

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

    bool contains(const Monomial& m) const
    {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
    }

    /// True iff some generator is divisible by x_var.
    bool involves(std::size_t var) const
    {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.involves(var); });
    }

    VarSet support() const
    {
        VarSet s = 0;
        for (const auto& g : gens_)
            s |= g.support();
        return s;
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
    friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t num_vars);

    // Trusted constructor: gens must already be a sorted antichain.
    MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens) : num_vars_(num_vars), gens_(std::move(gens))
    {
        check_var_count(num_vars);
    }

    std::size_t num_vars_ = 0;
    std::vector<Monomial> gens_;
};

/// Reduces gens to a divisibility antichain; the generated ideal is unchanged.
inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t num_vars)
{
    for (const auto& g : gens)
        if (g.num_vars() != num_vars)
            throw std::invalid_argument("minimalize: generator has " + std::to_string(g.num_vars()) +
                                        " exponents, expected " + std::to_string(num_vars));
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    // A divisor has degree at most the multiple's, so scanning by degree suffices.
    for (auto& g : gens) {
        const bool redundant =
            std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
        if (!redundant)
            kept.push_back(std::move(g));
    }
    return MonomialIdeal(num_vars, std::move(kept));
}

inline void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("ideals live in rings with different variable counts");
}

/// (I : m), generated by g / gcd(g, m) for g in G(I).
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m)
{
    if (m.num_vars() != ideal.num_vars())
        throw std::invalid_argument("colon: monomial and ideal have different variable counts");
    std::vector<Monomial> parts;
    parts.reserve(ideal.size());
    for (const auto& g : ideal.generators())
        parts.push_back(colon_part(g, m));
    return minimalize(std::move(parts), ideal.num_vars());
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b)
{
    require_same_ring(a, b);
    std::vector<Monomial> lcms;
    lcms.reserve(a.size() * b.size());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators())
            lcms.push_back(lcm(f, g));
    return minimalize(std::move(lcms), a.num_vars());
}

inline MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b)
{
    require_same_ring(a, b);
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return minimalize(std::move(gens), a.num_vars());
}

/// m * I.
inline MonomialIdeal operator*(const Monomial& m, const MonomialIdeal& ideal)
{
    if (m.num_vars() != ideal.num_vars())
        throw std::invalid_argument("product: monomial and ideal have different variable counts");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.generators())
        gens.push_back(m * g);
    return minimalize(std::move(gens), ideal.num_vars());
}

/// A is contained in B iff each generator of A is a multiple of a generator of B.
inline bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b)
{
    require_same_ring(a, b);
    return std::all_of(a.generators().begin(), a.generators().end(),
                       [&](const Monomial& g) { return b.contains(g); });
}

inline bool is_squarefree(const MonomialIdeal& ideal)
{
    return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

/// Degree shared by every generator, or -1 when generators have mixed degrees (or there are none).
inline long long common_degree(const MonomialIdeal& ideal)
{
    if (ideal.is_zero())
        return -1;
    const auto d = ideal.generators().front().degree();
    for (const auto& g : ideal.generators())
        if (g.degree() != d)
            return -1;
    return static_cast<long long>(d);
}

/// Componentwise maximum of the generators' exponents (the lcm of G(I)).
inline Monomial generator_lcm(const MonomialIdeal& ideal)
{
    Monomial r = Monomial::unit(ideal.num_vars());
    for (const auto& g : ideal.generators())
        r = lcm(r, g);
    return r;
}

struct XPartition {
    MonomialIdeal divisible; ///< generators divisible by x
    MonomialIdeal rest;      ///< the remaining generators
};

/// Splits G(I) by divisibility by x_var; G(I) is the disjoint union of the two parts.
inline XPartition x_partition(const MonomialIdeal& ideal, std::size_t var)
{
    if (var >= ideal.num_vars())
        throw std::out_of_range("x_partition: variable index out of range");
    std::vector<Monomial> with, without;
    for (const auto& g : ideal.generators())
        (g.involves(var) ? with : without).push_back(g);
    return {minimalize(std::move(with), ideal.num_vars()), minimalize(std::move(without), ideal.num_vars())};
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (auto e : m.exponents()) {
            h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

struct IdealHash {
    std::size_t operator()(const MonomialIdeal& ideal) const noexcept
    {
        std::size_t h = ideal.num_vars();
        MonomialHash mh;
        for (const auto& g : ideal.generators())
            h ^= mh(g) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace vsplit

#endif // VSPLIT_MONOMIAL_HPP
