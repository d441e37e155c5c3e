#ifndef VSPLIT_LINALG_HPP
#define VSPLIT_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vsplit {

/// Dense row-major integer matrix; only what the rank computations need.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

    template <typename U>
    DenseMatrix<U> convert() const
    {
        DenseMatrix<U> out(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(r, c) = U((*this)(r, c));
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = DenseMatrix<std::int64_t>;

namespace detail {

/*
 * Fraction-free (Bareiss) elimination to row echelon form. Every entry stays
 * a minor of the input, so all divisions are exact. Returns nullopt when an
 * entry leaves the range of T (only possible for fixed-width T).
 */
template <typename T, typename Wide, bool Checked>
std::optional<std::size_t> bareiss_rank(DenseMatrix<T> m)
{
    std::size_t rank = 0;
    T prev = T(1);
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == T(0))
            ++pivot;
        if (pivot == m.rows())
            continue;
        m.swap_rows(rank, pivot);
        const T p = m(rank, col);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const T lead = m(r, col);
            for (std::size_t c = col + 1; c < m.cols(); ++c) {
                Wide v = Wide(p) * Wide(m(r, c)) - Wide(lead) * Wide(m(rank, c));
                v /= Wide(prev);
                if constexpr (Checked) {
                    if (v > Wide(std::numeric_limits<T>::max()) || v < Wide(std::numeric_limits<T>::min()))
                        return std::nullopt;
                }
                m(r, c) = T(v);
            }
            m(r, col) = T(0);
        }
        prev = p;
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Exact rank over the rationals. Runs in 64-bit arithmetic and falls back
/// to arbitrary precision if an intermediate minor overflows.
inline std::size_t rank_rational(const IntMatrix& m)
{
    if (auto r = detail::bareiss_rank<std::int64_t, __int128, true>(m))
        return *r;
    using boost::multiprecision::cpp_int;
    return *detail::bareiss_rank<cpp_int, cpp_int, false>(m.convert<cpp_int>());
}

/// Rank over the prime field F_p (p < 2^31).
inline std::size_t rank_mod_p(const IntMatrix& input, std::uint32_t p)
{
    if (p < 2)
        throw std::invalid_argument("rank_mod_p: modulus must be a prime >= 2");
    const auto P = static_cast<std::int64_t>(p);
    DenseMatrix<std::int64_t> m(input.rows(), input.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = ((input(r, c) % P) + P) % P;

    auto inverse = [P](std::int64_t a) {
        std::int64_t result = 1, base = a, e = P - 2;
        while (e > 0) {
            if (e & 1)
                result = result * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return result;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        m.swap_rows(rank, pivot);
        const std::int64_t inv = inverse(m(rank, col));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const std::int64_t factor = m(r, col) * inv % P;
            if (factor == 0)
                continue;
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) = ((m(r, c) - factor * m(rank, c)) % P + P) % P;
        }
        ++rank;
    }
    return rank;
}

inline bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace vsplit

#endif // VSPLIT_LINALG_HPP
