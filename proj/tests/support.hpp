#ifndef VSPLIT_TESTS_SUPPORT_HPP
#define VSPLIT_TESTS_SUPPORT_HPP

#include <array>
#include <functional>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vsplit/betti.hpp"
#include "vsplit/complex.hpp"
#include "vsplit/graph.hpp"
#include "vsplit/io.hpp"
#include "vsplit/monomial.hpp"

namespace testing {

using namespace vsplit;

/// ideal("x y z", "xy, yz") in the ring with the listed variables.
inline MonomialIdeal ideal(const std::string& vars, const std::string& gens)
{
    std::string text = "kind: ideal\nvars: " + vars + "\n";
    std::istringstream in(gens);
    std::string g;
    bool any = false;
    while (std::getline(in, g, ',')) {
        text += g + "\n";
        any = true;
    }
    if (!any)
        text += "0\n";
    return parse_ideal(text).ideal;
}

inline Monomial mono(std::initializer_list<Monomial::Exponent> e) { return Monomial(std::vector<Monomial::Exponent>(e)); }

inline BettiTable table(std::initializer_list<std::array<int, 3>> entries)
{
    BettiTable t(BettiSubject::Ideal);
    for (const auto& e : entries)
        t.add(e[0], e[1], static_cast<std::uint64_t>(e[2]));
    return t;
}

inline Graph path(std::size_t n)
{
    Graph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(std::size_t n)
{
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// Every exponent vector in the box [0, bound]^n.
inline void for_each_in_box(std::size_t n, unsigned bound, const std::function<void(const Monomial&)>& f)
{
    std::vector<Monomial::Exponent> e(n, 0);
    while (true) {
        f(Monomial(e));
        std::size_t i = 0;
        while (i < n && e[i] == bound)
            e[i++] = 0;
        if (i == n)
            return;
        ++e[i];
    }
}

/// Membership by direct divisibility scan, independent of MonomialIdeal::contains.
inline bool member(const std::vector<Monomial>& gens, const Monomial& m)
{
    for (const auto& g : gens) {
        bool div = true;
        for (std::size_t i = 0; i < m.num_vars(); ++i)
            div = div && g[i] <= m[i];
        if (div)
            return true;
    }
    return false;
}

/// All faces of a complex given by facets, by subset enumeration.
inline std::set<VarSet> faces_of(const std::vector<VarSet>& facets, VarSet ground)
{
    std::set<VarSet> out;
    for (VarSet s = ground;; s = (s - 1) & ground) {
        for (VarSet f : facets)
            if ((s & ~f) == 0) {
                out.insert(s);
                break;
            }
        if (s == 0)
            break;
    }
    return out;
}

/// Minimal non-faces by enumeration.
inline std::set<VarSet> minimal_nonfaces(const std::set<VarSet>& faces, VarSet ground)
{
    std::set<VarSet> out;
    for (VarSet s = ground;; s = (s - 1) & ground) {
        if (!faces.count(s)) {
            bool minimal = true;
            for_each_bit(s, [&](std::size_t v) { minimal = minimal && faces.count(s & ~bit(v)); });
            if (minimal)
                out.insert(s);
        }
        if (s == 0)
            break;
    }
    return out;
}

/// Maximal members of a face set.
inline std::set<VarSet> maximal_of(const std::set<VarSet>& faces)
{
    std::set<VarSet> out;
    for (VarSet f : faces) {
        bool maximal = true;
        for (VarSet g : faces)
            maximal = maximal && (g == f || (f & ~g) != 0);
        if (maximal)
            out.insert(f);
    }
    return out;
}

/// Vertex decomposability straight from the definition on face sets.
inline bool vd_by_definition(const std::set<VarSet>& faces, VarSet ground)
{
    const auto facets = maximal_of(faces);
    if (facets.size() == 1)
        return true;
    VarSet verts = 0;
    for (VarSet f : faces)
        verts |= f;
    bool found = false;
    for_each_bit(verts, [&](std::size_t x) {
        if (found)
            return;
        std::set<VarSet> del, lk;
        for (VarSet f : faces) {
            if (!(f & bit(x)))
                del.insert(f);
            else
                lk.insert(f & ~bit(x));
        }
        const auto del_facets = maximal_of(del);
        bool shedding = true;
        for (VarSet f : maximal_of(lk))
            shedding = shedding && !del_facets.count(f);
        found = shedding && vd_by_definition(del, ground & ~bit(x)) && vd_by_definition(lk, ground & ~bit(x));
    });
    return found;
}

/// Chordality by searching for an induced cycle on at least four vertices.
inline bool chordal_by_cycles(const Graph& g)
{
    const VarSet vs = g.vertices();
    for (VarSet s = vs; s; s = (s - 1) & vs) {
        if (popcount(s) < 4)
            continue;
        bool all_two = true;
        for_each_bit(s, [&](std::size_t v) { all_two = all_two && popcount(g.neighbors(v) & s) == 2; });
        if (!all_two)
            continue;
        VarSet seen = bit(static_cast<std::size_t>(std::countr_zero(s))), frontier = seen;
        while (frontier) {
            VarSet next = 0;
            for_each_bit(frontier, [&](std::size_t v) { next |= g.neighbors(v) & s; });
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == s)
            return false;
    }
    return true;
}

} // namespace testing

#endif // VSPLIT_TESTS_SUPPORT_HPP
