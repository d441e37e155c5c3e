#ifndef VSPLIT_BETTI_HPP
#define VSPLIT_BETTI_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace vsplit {

/// Whether a table describes an ideal I or the quotient R/I.
enum class BettiSubject { Ideal, Quotient };

/**
 * Graded Betti numbers beta_{i,j}: homological degree i, internal degree j.
 * Only non-zero entries are stored.
 */
class BettiTable {
public:
    using Key = std::pair<int, int>;

    explicit BettiTable(BettiSubject subject = BettiSubject::Ideal) : subject_(subject) {}

    BettiSubject subject() const { return subject_; }
    const std::map<Key, std::uint64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    std::uint64_t get(int i, int j) const
    {
        const auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    void add(int i, int j, std::uint64_t rank)
    {
        if (rank == 0)
            return;
        if (i < 0 || j < 0)
            throw std::invalid_argument("Betti entry with negative index");
        entries_[{i, j}] += rank;
    }

    /// Adds every entry of other at (i + di, j + dj).
    void add_shifted(const BettiTable& other, int di, int dj)
    {
        for (const auto& [key, v] : other.entries_)
            add(key.first + di, key.second + dj, v);
    }

    std::uint64_t total() const
    {
        std::uint64_t t = 0;
        for (const auto& [key, v] : entries_)
            t += v;
        return t;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    BettiSubject subject_;
    std::map<Key, std::uint64_t> entries_;
};

/// max{j - i : beta_{i,j} != 0}; nullopt for the zero module.
inline std::optional<int> reg(const BettiTable& t)
{
    std::optional<int> r;
    for (const auto& [key, v] : t.entries())
        r = std::max(r.value_or(key.second - key.first), key.second - key.first);
    return r;
}

/// max{i : beta_{i,j} != 0}; nullopt for the zero module.
inline std::optional<int> pd(const BettiTable& t)
{
    std::optional<int> r;
    for (const auto& [key, v] : t.entries())
        r = std::max(r.value_or(key.first), key.first);
    return r;
}

/// Table of R/I from the table of I: beta_{0,0} = 1, beta_{i,j}(R/I) = beta_{i-1,j}(I).
inline BettiTable quotient_table(const BettiTable& ideal_table)
{
    if (ideal_table.subject() != BettiSubject::Ideal)
        throw std::invalid_argument("quotient_table expects the table of an ideal");
    BettiTable q(BettiSubject::Quotient);
    q.add(0, 0, 1);
    q.add_shifted(ideal_table, 1, 0);
    return q;
}

inline std::string optional_to_string(const std::optional<int>& v) { return v ? std::to_string(*v) : "undefined"; }

/// Lines "i j rank", sorted by (i, j).
inline std::string format_flat(const BettiTable& t)
{
    std::ostringstream out;
    for (const auto& [key, v] : t.entries())
        out << key.first << ' ' << key.second << ' ' << v << '\n';
    return out.str();
}

/// Grid with one row per homological degree i and one column per j - i.
inline std::string format_grid(const BettiTable& t)
{
    std::ostringstream out;
    if (t.empty()) {
        out << "(zero module: empty table)\n";
        return out.str();
    }
    int min_s = 1 << 30, max_s = -(1 << 30), max_i = 0;
    for (const auto& [key, v] : t.entries()) {
        min_s = std::min(min_s, key.second - key.first);
        max_s = std::max(max_s, key.second - key.first);
        max_i = std::max(max_i, key.first);
    }
    std::size_t width = 3;
    for (const auto& [key, v] : t.entries())
        width = std::max(width, std::to_string(v).size() + 1);
    auto cell = [&](const std::string& s) {
        out << std::string(width > s.size() ? width - s.size() : 0, ' ') << s;
    };
    out << "i \\ j-i |";
    for (int s = min_s; s <= max_s; ++s)
        cell(std::to_string(s));
    out << '\n' << "--------+" << std::string(width * static_cast<std::size_t>(max_s - min_s + 1), '-') << '\n';
    for (int i = 0; i <= max_i; ++i) {
        std::string label = std::to_string(i);
        out << std::string(8 - std::min<std::size_t>(8, label.size()), ' ') << label << '|';
        for (int s = min_s; s <= max_s; ++s) {
            const auto v = t.get(i, i + s);
            cell(v == 0 ? "." : std::to_string(v));
        }
        out << '\n';
    }
    return out.str();
}

/// Compact one-line form, e.g. {(0,2):2, (1,3):1}.
inline std::string format_inline(const BettiTable& t)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [key, v] : t.entries()) {
        if (!first)
            out << ", ";
        first = false;
        out << '(' << key.first << ',' << key.second << "):" << v;
    }
    out << '}';
    return out.str();
}

} // namespace vsplit

#endif // VSPLIT_BETTI_HPP
