#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace oracle {

using nkconf::Rank3Matroid;
using nkconf::Sign;

namespace {

class NaiveSearch {
public:
    explicit NaiveSearch(const Rank3Matroid& m) : m_(m), n_(m.n())
    {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = j + 1; k < n_; ++k)
                    triples_.push_back({i, j, k});
        value_.assign(triples_.size(), 0);
        index_.assign(static_cast<std::size_t>(n_) * n_ * n_, -1);
        for (std::size_t t = 0; t < triples_.size(); ++t)
            index_[(triples_[t][0] * n_ + triples_[t][1]) * n_ + triples_[t][2]] = static_cast<int>(t);
        bucket_relations();
    }

    NaiveOrientability run()
    {
        NaiveOrientability result;
        result.orientable = assign(0, false);
        result.nodes = nodes_;
        if (result.orientable) {
            std::vector<Sign> signs;
            for (int v : value_)
                signs.push_back(static_cast<Sign>(v));
            result.witness = nkconf::Chirotope(n_, std::move(signs));
        }
        return result;
    }

private:
    int sign(int a, int b, int c) const
    {
        int s = 1;
        if (a > b) std::swap(a, b), s = -s;
        if (b > c) std::swap(b, c), s = -s;
        if (a > b) std::swap(a, b), s = -s;
        return s * value_[index_[(a * n_ + b) * n_ + c]];
    }

    bool relation_holds(int x, int a, int b, int c, int d) const
    {
        const int terms[3] = {sign(x, a, b) * sign(x, c, d), -sign(x, a, c) * sign(x, b, d),
                              sign(x, a, d) * sign(x, b, c)};
        const bool pos = terms[0] > 0 || terms[1] > 0 || terms[2] > 0;
        const bool neg = terms[0] < 0 || terms[1] < 0 || terms[2] < 0;
        return pos == neg;
    }

    int triple_index(int a, int b, int c) const
    {
        int s[3] = {a, b, c};
        std::sort(s, s + 3);
        return index_[(s[0] * n_ + s[1]) * n_ + s[2]];
    }

    // Each relation is checked once, as soon as the last of its six triples is assigned.
    void bucket_relations()
    {
        checks_.resize(triples_.size());
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                for (int c = b + 1; c < n_; ++c)
                    for (int d = c + 1; d < n_; ++d)
                        for (int e = d + 1; e < n_; ++e) {
                            const int s[5] = {a, b, c, d, e};
                            for (int p = 0; p < 5; ++p) {
                                std::array<int, 5> r{s[p]};
                                for (int q = 0, w = 1; q < 5; ++q)
                                    if (q != p)
                                        r[w++] = s[q];
                                const int x = r[0];
                                const int last = std::max({triple_index(x, r[1], r[2]), triple_index(x, r[3], r[4]),
                                                            triple_index(x, r[1], r[3]), triple_index(x, r[2], r[4]),
                                                            triple_index(x, r[1], r[4]), triple_index(x, r[2], r[3])});
                                checks_[last].push_back(r);
                            }
                        }
    }

    bool relations_ok(std::size_t t) const
    {
        for (const auto& r : checks_[t])
            if (!relation_holds(r[0], r[1], r[2], r[3], r[4]))
                return false;
        return true;
    }

    bool assign(std::size_t t, bool fixed_first)
    {
        ++nodes_;
        if (t == triples_.size())
            return fixed_first;
        const auto [i, j, k] = triples_[t];
        std::vector<int> options;
        if (m_.is_collinear_sorted(i, j, k))
            options = {0};
        else if (!fixed_first)
            options = {1};
        else
            options = {1, -1};
        for (int s : options) {
            value_[t] = s;
            if (relations_ok(t) && assign(t + 1, fixed_first || s != 0))
                return true;
        }
        value_[t] = 0;
        return false;
    }

    const Rank3Matroid& m_;
    int n_;
    std::vector<std::array<int, 3>> triples_;
    std::vector<int> value_;
    std::vector<int> index_;
    std::vector<std::vector<std::array<int, 5>>> checks_;
    std::uint64_t nodes_ = 0;
};

} // namespace

NaiveOrientability naive_orientability(const Rank3Matroid& m)
{
    return NaiveSearch(m).run();
}

nkconf::PoincarePolynomial poincare_by_moebius(const Rank3Matroid& m)
{
    const int n = m.n();
    // Flats by rank; the empty flat is the bottom, the ground set the top.
    std::vector<std::vector<int>> flats{{}};
    std::vector<int> rank{0};
    for (int p = 0; p < n; ++p) {
        flats.push_back({p});
        rank.push_back(1);
    }
    std::set<std::vector<int>> lines;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> closure{a, b};
            for (int c = 0; c < n; ++c)
                if (c != a && c != b && m.is_collinear(a, b, c))
                    closure.push_back(c);
            std::sort(closure.begin(), closure.end());
            lines.insert(closure);
        }
    for (const auto& line : lines) {
        flats.push_back(line);
        rank.push_back(2);
    }
    std::vector<long long> mu(flats.size(), 0);
    for (std::size_t x = 0; x < flats.size(); ++x) {
        if (x == 0) {
            mu[x] = 1;
            continue;
        }
        long long sum = 0;
        for (std::size_t y = 0; y < flats.size(); ++y)
            if (rank[y] < rank[x] &&
                std::includes(flats[x].begin(), flats[x].end(), flats[y].begin(), flats[y].end()))
                sum += mu[y];
        mu[x] = -sum;
    }
    nkconf::PoincarePolynomial p;
    p.b0 = 0;
    for (std::size_t x = 0; x < flats.size(); ++x) {
        const long long term = (rank[x] % 2 == 0 ? mu[x] : -mu[x]); // mu(0, X) (-t)^rank
        if (rank[x] == 0)
            p.b0 += term;
        else if (rank[x] == 1)
            p.b1 += term;
        else
            p.b2 += term;
    }
    return p;
}

XmlCheck check_xml(const std::string& text)
{
    XmlCheck check;
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool root_seen = false;
    const auto fail = [&](const std::string& why) {
        check.error = why + " at offset " + std::to_string(i);
        return check;
    };
    const auto is_name_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':'; };
    while (i < text.size()) {
        if (text[i] != '<') {
            if (stack.empty() && !std::isspace(static_cast<unsigned char>(text[i])))
                return fail("text outside the root element");
            if (text[i] == '&') {
                const auto semi = text.find(';', i);
                if (semi == std::string::npos)
                    return fail("unterminated entity");
            }
            ++i;
            continue;
        }
        if (text.compare(i, 5, "<?xml") == 0) {
            if (i != 0)
                return fail("misplaced declaration");
            const auto end = text.find("?>", i);
            if (end == std::string::npos)
                return fail("unterminated declaration");
            i = end + 2;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            const auto end = text.find("-->", i);
            if (end == std::string::npos)
                return fail("unterminated comment");
            i = end + 3;
            continue;
        }
        const bool closing = i + 1 < text.size() && text[i + 1] == '/';
        std::size_t j = i + (closing ? 2 : 1);
        const std::size_t name_start = j;
        while (j < text.size() && is_name_char(text[j]))
            ++j;
        const std::string name = text.substr(name_start, j - name_start);
        if (name.empty())
            return fail("missing element name");
        if (closing) {
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j])))
                ++j;
            if (j >= text.size() || text[j] != '>')
                return fail("malformed end tag");
            if (stack.empty() || stack.back() != name)
                return fail("mismatched end tag </" + name + ">");
            stack.pop_back();
            i = j + 1;
            continue;
        }
        if (stack.empty() && root_seen)
            return fail("second root element");
        // attributes
        std::set<std::string> attributes;
        bool self_closing = false;
        while (true) {
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j])))
                ++j;
            if (j >= text.size())
                return fail("unterminated start tag");
            if (text[j] == '>') {
                ++j;
                break;
            }
            if (text[j] == '/') {
                if (j + 1 >= text.size() || text[j + 1] != '>')
                    return fail("malformed self-closing tag");
                self_closing = true;
                j += 2;
                break;
            }
            const std::size_t attr_start = j;
            while (j < text.size() && is_name_char(text[j]))
                ++j;
            const std::string attr = text.substr(attr_start, j - attr_start);
            if (attr.empty() || j >= text.size() || text[j] != '=')
                return fail("malformed attribute in <" + name + ">");
            if (!attributes.insert(attr).second)
                return fail("duplicate attribute " + attr);
            ++j;
            if (j >= text.size() || (text[j] != '"' && text[j] != '\''))
                return fail("unquoted attribute " + attr);
            const char quote = text[j];
            const auto end = text.find(quote, j + 1);
            if (end == std::string::npos || text.substr(j + 1, end - j - 1).find('<') != std::string::npos)
                return fail("bad attribute value for " + attr);
            j = end + 1;
        }
        ++check.element_counts[name];
        root_seen = true;
        if (!self_closing)
            stack.push_back(name);
        i = j;
    }
    if (!stack.empty())
        return fail("unclosed element <" + stack.back() + ">");
    if (!root_seen)
        return fail("no root element");
    check.well_formed = true;
    return check;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

std::vector<nkconf::RationalPoint> random_points(int count, int range, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> numerator(-range, range);
    std::uniform_int_distribution<int> denominator(1, 3);
    std::vector<nkconf::RationalPoint> points;
    while (static_cast<int>(points.size()) < count) {
        nkconf::RationalPoint p{nkconf::Rational(numerator(rng), denominator(rng)),
                                nkconf::Rational(numerator(rng), denominator(rng))};
        if (std::find(points.begin(), points.end(), p) == points.end())
            points.push_back(p);
    }
    return points;
}

} // namespace oracle
