#include <nkconf/chirotope.hpp>

#include <algorithm>
#include <sstream>

namespace nkconf {

char sign_char(Sign s)
{
    switch (s) {
    case Sign::Negative: return '-';
    case Sign::Zero: return '0';
    case Sign::Positive: return '+';
    }
    return '?';
}

Chirotope::Chirotope(int n) :
    n_(n),
    indexer_(n),
    signs_(static_cast<std::size_t>(indexer_.count()), Sign::Zero)
{
}

Chirotope::Chirotope(int n, std::vector<Sign> signs) :
    n_(n),
    indexer_(n),
    signs_(std::move(signs))
{
    if (static_cast<std::int64_t>(signs_.size()) != indexer_.count())
        throw std::invalid_argument("Chirotope: expected " + std::to_string(indexer_.count()) + " signs, got " +
                                    std::to_string(signs_.size()));
}

Sign Chirotope::operator()(int a, int b, int c) const
{
    if (a == b || b == c || a == c)
        return Sign::Zero;
    const int parity = sort_triple(a, b, c);
    const Sign s = signs_[indexer_(a, b, c)];
    return parity > 0 ? s : -s;
}

void Chirotope::set(int a, int b, int c, Sign s)
{
    if (a == b || b == c || a == c)
        throw std::invalid_argument("Chirotope::set: repeated index");
    const int parity = sort_triple(a, b, c);
    signs_[indexer_(a, b, c)] = parity > 0 ? s : -s;
}

ValidationReport is_chirotope(const Chirotope& chi, const Rank3Matroid& m, std::size_t max_reported)
{
    if (chi.n() != m.n())
        throw std::invalid_argument("is_chirotope: chirotope has " + std::to_string(chi.n()) +
                                    " elements, matroid has " + std::to_string(m.n()));
    ValidationReport report;
    const int n = chi.n();

    bool any_nonzero = false;
    std::size_t zero_mismatches = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const bool zero = chi.sorted(i, j, k) == Sign::Zero;
                any_nonzero = any_nonzero || !zero;
                if (zero != m.is_collinear_sorted(i, j, k) && zero_mismatches++ < max_reported)
                    report.add("zero-set",
                               zero ? "basis triple has sign 0" : "collinear triple has nonzero sign", {i, j, k});
            }
    if (!any_nonzero && n >= 3)
        report.add("identically-zero", "chirotope is identically zero");

    // Three-term relation: {chi(xab)chi(xcd), -chi(xac)chi(xbd), chi(xad)chi(xbc)}
    // is all zero or contains both signs.
    std::size_t gp_violations = 0;
    std::vector<int> s(5);
    for (s[0] = 0; s[0] < n; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n; ++s[3])
                    for (s[4] = s[3] + 1; s[4] < n; ++s[4])
                        for (int pivot = 0; pivot < 5; ++pivot) {
                            int rest[4];
                            for (int i = 0, r = 0; i < 5; ++i)
                                if (i != pivot)
                                    rest[r++] = s[i];
                            const int x = s[pivot], a = rest[0], b = rest[1], c = rest[2], d = rest[3];
                            const int terms[3] = {to_int(chi(x, a, b) * chi(x, c, d)),
                                                  -to_int(chi(x, a, c) * chi(x, b, d)),
                                                  to_int(chi(x, a, d) * chi(x, b, c))};
                            const bool positive = std::any_of(terms, terms + 3, [](int t) { return t > 0; });
                            const bool negative = std::any_of(terms, terms + 3, [](int t) { return t < 0; });
                            if (positive != negative && gp_violations++ < max_reported) {
                                std::ostringstream detail;
                                detail << "pivot " << x << " with {" << a << "," << b << "," << c << "," << d
                                       << "}: terms " << terms[0] << "," << terms[1] << "," << terms[2];
                                report.add("grassmann-pluecker", detail.str(), {x, a, b, c, d});
                            }
                        }
    if (gp_violations > max_reported)
        report.add("grassmann-pluecker",
                   std::to_string(gp_violations - max_reported) + " further violations not listed");
    return report;
}

Sign orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c)
{
    // Expansion of det [ax ay 1; bx by 1; cx cy 1].
    const Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return det > 0 ? Sign::Positive : (det < 0 ? Sign::Negative : Sign::Zero);
}

Chirotope chirotope_from_points(std::span<const RationalPoint> points)
{
    const int n = static_cast<int>(points.size());
    if (n < 3)
        throw std::invalid_argument("chirotope_from_points: need at least 3 points");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("chirotope_from_points: points " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide");
    Chirotope chi(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                chi.set(i, j, k, orientation(points[i], points[j], points[k]));
    return chi;
}

Chirotope reorient(const Chirotope& chi, std::span<const int> flip_set)
{
    std::vector<bool> flipped(chi.n(), false);
    for (int e : flip_set) {
        if (e < 0 || e >= chi.n())
            throw std::invalid_argument("reorient: element out of range");
        flipped[e] = true;
    }
    std::vector<Sign> signs(chi.signs().begin(), chi.signs().end());
    for (int i = 0; i < chi.n(); ++i)
        for (int j = i + 1; j < chi.n(); ++j)
            for (int k = j + 1; k < chi.n(); ++k) {
                const int flips = flipped[i] + flipped[j] + flipped[k];
                if (flips % 2 == 1) {
                    Sign& s = signs[chi.indexer()(i, j, k)];
                    s = -s;
                }
            }
    return Chirotope(chi.n(), std::move(signs));
}

Rank3Matroid zero_set_matroid(const Chirotope& chi)
{
    std::vector<Triple> zeros;
    for (int i = 0; i < chi.n(); ++i)
        for (int j = i + 1; j < chi.n(); ++j)
            for (int k = j + 1; k < chi.n(); ++k)
                if (chi.sorted(i, j, k) == Sign::Zero)
                    zeros.push_back({i, j, k});
    return Rank3Matroid(chi.n(), std::move(zeros));
}

} // namespace nkconf
