#pragma once

#include <nkconf/triples.hpp>

#include <vector>

namespace nkconf {

/// Simple rank-3 matroid on {0..n-1} given by its dependent (collinear) triples.
/// Every triple not listed is a basis.
class Rank3Matroid {
public:
    Rank3Matroid() = default;

    /// Throws std::invalid_argument on out-of-range or repeated indices, and when two
    /// collinear triples through a common pair are not closed into a single line.
    Rank3Matroid(int n, std::vector<Triple> collinear);

    int n() const { return n_; }
    const std::vector<Triple>& collinear() const { return collinear_; }
    const TripleIndexer& indexer() const { return indexer_; }

    /// Order-insensitive; false for repeated indices.
    bool is_collinear(int a, int b, int c) const;
    bool is_collinear_sorted(int i, int j, int k) const { return dependent_[indexer_(i, j, k)]; }

    /// Rank-2 flats with at least three points, each sorted, in lexicographic order.
    std::vector<std::vector<int>> lines() const;

    friend bool operator==(const Rank3Matroid& a, const Rank3Matroid& b)
    {
        return a.n_ == b.n_ && a.collinear_ == b.collinear_;
    }

private:
    int n_ = 0;
    std::vector<Triple> collinear_;
    TripleIndexer indexer_;
    std::vector<bool> dependent_;
};

/// The free matroid: no collinear triples.
inline Rank3Matroid free_matroid(int n) { return Rank3Matroid(n, {}); }

} // namespace nkconf
