#pragma once

#include <nkconf/incidence.hpp>
#include <nkconf/rank3_matroid.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace nkconf {

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) { return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b)); }
inline int to_int(Sign s) { return static_cast<int>(s); }
char sign_char(Sign s);

using Rational = boost::multiprecision::cpp_rational;

struct RationalPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Rank-3 chirotope: a sign for every strictly increasing triple, extended to ordered
/// triples by alternation. Signs are stored in lexicographic triple order.
class Chirotope {
public:
    Chirotope() = default;
    /// All-zero map on n elements.
    explicit Chirotope(int n);
    Chirotope(int n, std::vector<Sign> signs);

    int n() const { return n_; }
    const TripleIndexer& indexer() const { return indexer_; }
    std::span<const Sign> signs() const { return signs_; }

    /// Sign of an ordered triple; Zero when indices repeat.
    Sign operator()(int a, int b, int c) const;
    Sign sorted(int i, int j, int k) const { return signs_[indexer_(i, j, k)]; }
    /// Sets the value of the ordered triple (a, b, c); the stored sorted sign is adjusted by alternation.
    void set(int a, int b, int c, Sign s);

    friend bool operator==(const Chirotope& a, const Chirotope& b) { return a.n_ == b.n_ && a.signs_ == b.signs_; }

private:
    int n_ = 0;
    TripleIndexer indexer_;
    std::vector<Sign> signs_;
};

/// Checks the zero set against m, the three-term Grassmann-Pluecker sign condition on every
/// 5-subset with every pivot, and non-triviality. At most max_reported GP violations are listed.
/// Throws std::invalid_argument when chi.n() != m.n().
ValidationReport is_chirotope(const Chirotope& chi, const Rank3Matroid& m, std::size_t max_reported = 10);

/// chi(i,j,k) = sign det [x_i y_i 1; x_j y_j 1; x_k y_k 1], exact.
/// Throws std::invalid_argument for fewer than 3 points or repeated points.
Chirotope chirotope_from_points(std::span<const RationalPoint> points);

/// Multiplies chi(a,b,c) by (-1)^{|{a,b,c} cap flip_set|}.
Chirotope reorient(const Chirotope& chi, std::span<const int> flip_set);

/// Matroid whose collinear triples are the zero triples of chi.
Rank3Matroid zero_set_matroid(const Chirotope& chi);

/// Sign of a 3x3 determinant of homogenized rational points.
Sign orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c);

} // namespace nkconf
