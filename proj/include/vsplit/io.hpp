#ifndef VSPLIT_IO_HPP
#define VSPLIT_IO_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "vsplit/complex.hpp"
#include "vsplit/decomposable.hpp"
#include "vsplit/graph.hpp"
#include "vsplit/monomial.hpp"
#include "vsplit/splittable.hpp"

namespace vsplit {

/// Raised for malformed text input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Names = std::vector<std::string>;

/// a, b, c, ... for up to 26 variables, else x0, x1, ...
inline Names default_names(std::size_t n)
{
    Names names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
    return names;
}

/// Orders names so that embedded numbers compare numerically (x2 < x10).
inline bool natural_less(const std::string& a, const std::string& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
                ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
                ++je;
            auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
            na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
            nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
            if (na.size() != nb.size())
                return na.size() < nb.size();
            if (na != nb)
                return na < nb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j])
                return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

namespace detail {

inline std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

/// Non-empty lines with '#' comments removed.
inline std::vector<std::string> content_lines(std::string_view text)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        line = trim(line);
        if (!line.empty())
            out.push_back(line);
    }
    return out;
}

inline std::vector<std::string> split_tokens(std::string_view s, std::string_view seps)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (seps.find(ch) != std::string_view::npos) {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

inline bool starts_with_key(const std::string& line, std::string_view key, std::string& rest)
{
    if (line.size() < key.size() || line.compare(0, key.size(), key) != 0)
        return false;
    rest = trim(std::string_view(line).substr(key.size()));
    return true;
}

inline std::uint64_t parse_uint(std::string_view s, std::string_view what)
{
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end)
        throw ParseError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
    return v;
}

inline bool is_uint(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

inline bool is_variable_name(std::string_view s)
{
    return !s.empty() && std::isalpha(static_cast<unsigned char>(s.front())) &&
           std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '_'; });
}

using Factor = std::pair<std::string, std::uint64_t>;

/// Tokenizes "x1^2*x3", "xy^2z", "1". A name is a letter followed by digits or underscores.
inline std::vector<Factor> monomial_factors(std::string_view text)
{
    std::vector<Factor> out;
    std::size_t i = 0;
    const std::string s = trim(text);
    if (s == "1")
        return out;
    if (s.empty())
        throw ParseError("empty monomial");
    while (i < s.size()) {
        const char c = s[i];
        if (c == '*' || c == ' ') {
            ++i;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError("unexpected character '" + std::string(1, c) + "' in monomial '" + s + "'");
        std::size_t j = i + 1;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            ++j;
        std::string name = s.substr(i, j - i);
        std::uint64_t e = 1;
        if (j < s.size() && s[j] == '^') {
            std::size_t k = j + 1;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
                ++k;
            if (k == j + 1)
                throw ParseError("missing exponent after '^' in '" + s + "'");
            e = parse_uint(std::string_view(s).substr(j + 1, k - j - 1), "exponent");
            j = k;
        }
        out.emplace_back(std::move(name), e);
        i = j;
    }
    return out;
}

inline std::size_t index_of(const Names& names, const std::string& name)
{
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        throw ParseError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
}

inline Monomial build_monomial(const std::vector<Factor>& factors, const Names& names)
{
    std::vector<std::uint64_t> exps(names.size(), 0);
    for (const auto& [name, e] : factors) {
        auto& slot = exps[index_of(names, name)];
        if (e > std::numeric_limits<Monomial::Exponent>::max() - slot)
            throw ParseError("exponent of '" + name + "' exceeds the supported width");
        slot += e;
    }
    return Monomial(std::vector<Monomial::Exponent>(exps.begin(), exps.end()));
}

inline bool single_char_names(const Names& names)
{
    return std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
}

} // namespace detail

inline std::string format_monomial(const Monomial& m, const Names& names)
{
    if (m.is_unit())
        return "1";
    const bool compact = detail::single_char_names(names);
    std::string out;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty() && !compact)
            out += '*';
        out += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (m[i] > 1)
            out += "^" + std::to_string(m[i]);
    }
    return out;
}

/// "(g1, g2, ...)", "(0)" for the zero ideal.
inline std::string format_ideal(const MonomialIdeal& ideal, const Names& names)
{
    if (ideal.is_zero())
        return "(0)";
    std::string out = "(";
    for (std::size_t k = 0; k < ideal.size(); ++k) {
        if (k)
            out += ", ";
        out += format_monomial(ideal.generators()[k], names);
    }
    return out + ")";
}

inline std::string format_set(VarSet s, const Names& names)
{
    if (!s)
        return "-";
    std::string out;
    for_each_bit(s, [&](std::size_t v) {
        if (!out.empty())
            out += ',';
        out += v < names.size() ? names[v] : std::to_string(v);
    });
    return out;
}

/// "<{a,b}, {c}>" style listing of facets, larger facets first.
inline std::string format_complex(const SimplicialComplex& c, const Names& names)
{
    auto facets = c.facets();
    std::stable_sort(facets.begin(), facets.end(), [](VarSet a, VarSet b) { return popcount(a) > popcount(b); });
    std::string out = "<";
    for (std::size_t k = 0; k < facets.size(); ++k) {
        if (k)
            out += ", ";
        out += "{" + (facets[k] ? format_set(facets[k], names) : std::string()) + "}";
    }
    return out + ">";
}

struct ParsedIdeal {
    MonomialIdeal ideal;
    Names names;
};

struct ParsedComplex {
    SimplicialComplex complex;
    Names names;
};

struct ParsedGraph {
    Graph graph;
    Names names;
};

using ParsedInput = std::variant<ParsedIdeal, ParsedComplex, ParsedGraph>;

namespace detail {

inline std::string strip_kind(std::vector<std::string>& lines)
{
    std::string kind;
    if (!lines.empty() && starts_with_key(lines.front(), "kind:", kind))
        lines.erase(lines.begin());
    return kind;
}

inline Names sorted_unique(std::vector<std::string> names)
{
    std::sort(names.begin(), names.end(), natural_less);
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

inline ParsedIdeal parse_ideal_lines(const std::vector<std::string>& lines)
{
    Names names;
    bool declared = false;
    std::vector<std::vector<Factor>> monomials;
    for (const auto& line : lines) {
        std::string rest;
        if (starts_with_key(line, "vars:", rest)) {
            names = split_tokens(rest, " ,\t");
            for (const auto& name : names)
                if (!is_variable_name(name))
                    throw ParseError("variable name '" + name + "' must be a letter followed by digits or underscores");
            declared = true;
            continue;
        }
        for (const auto& tok : split_tokens(line, ",")) {
            const auto t = trim(tok);
            if (t == "0")
                continue;
            monomials.push_back(monomial_factors(t));
        }
    }
    if (!declared) {
        std::vector<std::string> seen;
        for (const auto& m : monomials)
            for (const auto& f : m)
                seen.push_back(f.first);
        names = sorted_unique(std::move(seen));
    }
    if (names.size() > kMaxVars)
        throw ParseError("too many variables");
    if (names.empty() && !monomials.empty())
        names = {"x"};
    if (sorted_unique(names).size() != names.size())
        throw ParseError("duplicate variable names");
    std::vector<Monomial> gens;
    for (const auto& m : monomials)
        gens.push_back(build_monomial(m, names));
    const std::size_t n = names.empty() ? 1 : names.size();
    if (names.empty())
        names = {"x"};
    return {minimalize(std::move(gens), n), names};
}

inline ParsedComplex parse_complex_lines(const std::vector<std::string>& lines)
{
    Names names;
    bool declared = false;
    std::vector<std::vector<std::string>> raw;
    for (const auto& line : lines) {
        std::string rest;
        if (starts_with_key(line, "vertices:", rest)) {
            names = split_tokens(rest, " ,\t");
            declared = true;
            continue;
        }
        if (line == "-" || line == "{}") {
            raw.emplace_back();
            continue;
        }
        std::string body = line;
        if (body.front() == '{' && body.back() == '}')
            body = body.substr(1, body.size() - 2);
        raw.push_back(split_tokens(body, ", \t"));
    }
    if (!declared) {
        std::vector<std::string> seen;
        for (const auto& f : raw)
            seen.insert(seen.end(), f.begin(), f.end());
        names = sorted_unique(std::move(seen));
    }
    if (names.size() > kMaxVars)
        throw ParseError("too many vertices");
    if (raw.empty())
        throw ParseError("complex has no facets (the void complex is not representable)");
    std::vector<VarSet> facets;
    for (const auto& f : raw) {
        VarSet s = 0;
        for (const auto& v : f)
            s |= bit(index_of(names, v));
        facets.push_back(s);
    }
    return {SimplicialComplex::from_facets(facets, names.size()), names};
}

inline ParsedGraph parse_graph_lines(const std::vector<std::string>& lines)
{
    std::size_t n = 0;
    bool have_n = false;
    Names names;
    std::vector<std::pair<std::string, std::string>> raw;
    for (const auto& line : lines) {
        std::string rest;
        if (starts_with_key(line, "labels:", rest)) {
            names = split_tokens(rest, " ,\t");
            continue;
        }
        const auto toks = split_tokens(line, " \t");
        if (toks.size() == 2 && toks[0] == "n") {
            n = parse_uint(toks[1], "vertex count");
            have_n = true;
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("edge line must be 'u v': '" + line + "'");
        raw.emplace_back(toks[0], toks[1]);
    }
    if (!have_n)
        throw ParseError("graph file needs a header 'n <count>'");
    if (n > kMaxVars)
        throw ParseError("too many vertices");
    if (names.empty())
        names = default_names(n);
    if (names.size() != n)
        throw ParseError("labels line must name exactly n vertices");
    auto vertex = [&](const std::string& tok) -> std::size_t {
        if (is_uint(tok)) {
            const auto v = parse_uint(tok, "vertex");
            if (v >= n)
                throw ParseError("vertex " + tok + " out of range");
            return static_cast<std::size_t>(v);
        }
        return index_of(names, tok);
    };
    Graph g(n);
    for (const auto& [a, b] : raw) {
        const auto u = vertex(a), v = vertex(b);
        if (u == v)
            throw ParseError("loops are not allowed");
        g.add_edge(u, v);
    }
    return {g, names};
}

} // namespace detail

inline ParsedIdeal parse_ideal(std::string_view text)
{
    auto lines = detail::content_lines(text);
    const auto kind = detail::strip_kind(lines);
    if (!kind.empty() && kind != "ideal")
        throw ParseError("expected kind: ideal, got '" + kind + "'");
    return detail::parse_ideal_lines(lines);
}

inline ParsedComplex parse_complex(std::string_view text)
{
    auto lines = detail::content_lines(text);
    const auto kind = detail::strip_kind(lines);
    if (!kind.empty() && kind != "complex")
        throw ParseError("expected kind: complex, got '" + kind + "'");
    return detail::parse_complex_lines(lines);
}

inline ParsedGraph parse_graph(std::string_view text)
{
    auto lines = detail::content_lines(text);
    const auto kind = detail::strip_kind(lines);
    if (!kind.empty() && kind != "graph")
        throw ParseError("expected kind: graph, got '" + kind + "'");
    return detail::parse_graph_lines(lines);
}

/// Dispatches on the "kind:" header; without one, a leading "n <count>" line means a graph, otherwise an ideal.
inline ParsedInput parse_input(std::string_view text)
{
    auto lines = detail::content_lines(text);
    const auto kind = detail::strip_kind(lines);
    if (kind == "ideal")
        return detail::parse_ideal_lines(lines);
    if (kind == "complex")
        return detail::parse_complex_lines(lines);
    if (kind == "graph")
        return detail::parse_graph_lines(lines);
    if (!kind.empty())
        throw ParseError("unknown kind '" + kind + "'");
    if (!lines.empty() && lines.front().rfind("n ", 0) == 0)
        return detail::parse_graph_lines(lines);
    return detail::parse_ideal_lines(lines);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string write_ideal(const MonomialIdeal& ideal, const Names& names)
{
    std::ostringstream out;
    out << "kind: ideal\nvars:";
    for (const auto& n : names)
        out << ' ' << n;
    out << '\n';
    if (ideal.is_zero())
        out << "0\n";
    for (const auto& g : ideal.generators())
        out << format_monomial(g, names) << '\n';
    return out.str();
}

inline std::string write_complex(const SimplicialComplex& c, const Names& names)
{
    std::ostringstream out;
    out << "kind: complex\nvertices:";
    for_each_bit(c.ground(), [&](std::size_t v) { out << ' ' << names[v]; });
    out << '\n';
    for (VarSet f : c.facets())
        out << format_set(f, names) << '\n';
    return out.str();
}

inline std::string write_graph(const Graph& g)
{
    std::ostringstream out;
    out << "kind: graph\nn " << g.n() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

/// Nested "(x: LEFT | RIGHT)"; leaves are the monomial ("1" for the unit) or "0".
inline std::string format_split_tree(const SplitTree& t, const Names& names)
{
    switch (t.kind()) {
    case SplitTree::Kind::Zero:
        return "0";
    case SplitTree::Kind::Leaf:
        return format_monomial(t.monomial(), names);
    case SplitTree::Kind::Node:
        break;
    }
    return "(" + names.at(t.var()) + ": " + format_split_tree(*t.left(), names) + " | " +
           format_split_tree(*t.right(), names) + ")";
}

namespace detail {

class SplitTreeParser {
public:
    SplitTreeParser(std::string_view text, const Names& names) : s_(text), names_(names) {}

    SplitTreePtr parse()
    {
        auto t = tree();
        skip();
        if (pos_ != s_.size())
            throw ParseError("trailing characters in split tree");
        return t;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("split tree: expected '") + c + "'");
        ++pos_;
    }

    SplitTreePtr tree()
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            skip();
            const auto colon_at = s_.find(':', pos_);
            if (colon_at == std::string_view::npos)
                throw ParseError("split tree: missing ':'");
            const auto var = index_of(names_, trim(s_.substr(pos_, colon_at - pos_)));
            pos_ = colon_at + 1;
            auto left = tree();
            expect('|');
            auto right = tree();
            expect(')');
            return SplitTree::node(var, std::move(left), std::move(right));
        }
        const auto end = s_.find_first_of("|)", pos_);
        const auto tok = trim(s_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_));
        pos_ = end == std::string_view::npos ? s_.size() : end;
        if (tok == "0")
            return SplitTree::zero(names_.size());
        return SplitTree::leaf(build_monomial(monomial_factors(tok), names_));
    }

    std::string_view s_;
    const Names& names_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline SplitTreePtr parse_split_tree(std::string_view text, const Names& names)
{
    return detail::SplitTreeParser(text, names).parse();
}

/// Nested "(v: DEL | LK)"; leaves are the facet ("-" when empty).
inline std::string format_decomposition(const DecompositionTree& t, const Names& names)
{
    if (t.is_leaf())
        return format_set(t.facet(), names);
    return "(" + names.at(t.vertex()) + ": " + format_decomposition(*t.del(), names) + " | " +
           format_decomposition(*t.lk(), names) + ")";
}

/// Nested "(x,y: G\N[x] | G\N[y])"; edgeless leaves are ".".
inline std::string format_scm(const ScmCertificate& c, const Names& names)
{
    if (c.is_leaf())
        return ".";
    return "(" + names.at(c.x()) + "," + names.at(c.y()) + ": " + format_scm(*c.without_nx(), names) + " | " +
           format_scm(*c.without_ny(), names) + ")";
}

inline std::string format_order(const std::vector<std::size_t>& order, const Names& names)
{
    std::string out;
    for (auto v : order) {
        if (!out.empty())
            out += ' ';
        out += names.at(v);
    }
    return out;
}

inline std::string format_quotient_order(const LinearQuotientOrder& order, const Names& names)
{
    std::string out;
    for (std::size_t k = 0; k < order.generators.size(); ++k) {
        if (k)
            out += " < ";
        out += format_monomial(order.generators[k], names) + " [" + format_set(order.sets[k], names) + "]";
    }
    return out.empty() ? "(empty)" : out;
}

} // namespace vsplit

#endif // VSPLIT_IO_HPP
