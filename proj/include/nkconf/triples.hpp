#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nkconf {

/// An unordered point triple stored strictly increasing.
using Triple = std::array<int, 3>;

inline std::int64_t binomial(std::int64_t n, std::int64_t r)
{
    if (r < 0 || n < r)
        return 0;
    if (r > n - r)
        r = n - r;
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= r; ++i)
        result = result * (n - r + i) / i;
    return result;
}

/// Sorts three distinct indices in place and returns the sign of the sorting permutation.
inline int sort_triple(int& a, int& b, int& c)
{
    int sign = 1;
    if (a > b) { std::swap(a, b); sign = -sign; }
    if (b > c) { std::swap(b, c); sign = -sign; }
    if (a > b) { std::swap(a, b); sign = -sign; }
    return sign;
}

/// Rank of a strictly increasing triple (i<j<k) in the lexicographic order of all
/// triples of {0..n-1}. This is the order used by the chirotope file format.
class TripleIndexer {
public:
    TripleIndexer() = default;

    explicit TripleIndexer(int n) :
        n_(n),
        pair_offset_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)
    {
        if (n < 0)
            throw std::invalid_argument("TripleIndexer: negative ground set size");
        std::int64_t offset = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                // offset of (i, j, j+1); rank(i,j,k) = offset + (k - j - 1)
                pair_offset_[static_cast<std::size_t>(i) * n + j] = offset - j - 1;
                offset += n - 1 - j;
            }
        count_ = offset;
    }

    int n() const { return n_; }
    std::int64_t count() const { return count_; }

    std::int64_t operator()(int i, int j, int k) const
    {
        return pair_offset_[static_cast<std::size_t>(i) * n_ + j] + k;
    }

    /// Inverse of operator(); linear in n, intended for reporting only.
    Triple unrank(std::int64_t index) const
    {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                std::int64_t first = (*this)(i, j, j + 1);
                std::int64_t last = (*this)(i, j, n_ - 1);
                if (j + 1 < n_ && index >= first && index <= last)
                    return {i, j, static_cast<int>(index - first) + j + 1};
            }
        throw std::out_of_range("TripleIndexer::unrank");
    }

private:
    int n_ = 0;
    std::int64_t count_ = 0;
    std::vector<std::int64_t> pair_offset_;
};

} // namespace nkconf
