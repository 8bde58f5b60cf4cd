#include <nkconf/rank3_matroid.hpp>

#include <algorithm>
#include <string>

namespace nkconf {

Rank3Matroid::Rank3Matroid(int n, std::vector<Triple> collinear) :
    n_(n),
    collinear_(std::move(collinear)),
    indexer_(n)
{
    dependent_.assign(static_cast<std::size_t>(indexer_.count()), false);
    for (auto& t : collinear_) {
        for (int x : t)
            if (x < 0 || x >= n)
                throw std::invalid_argument("Rank3Matroid: index out of range");
        sort_triple(t[0], t[1], t[2]);
        if (t[0] == t[1] || t[1] == t[2])
            throw std::invalid_argument("Rank3Matroid: repeated index in triple");
        dependent_[indexer_(t[0], t[1], t[2])] = true;
    }
    std::sort(collinear_.begin(), collinear_.end());
    collinear_.erase(std::unique(collinear_.begin(), collinear_.end()), collinear_.end());

    // {a,b,c} and {a,b,d} dependent forces {a,c,d} dependent (hence {b,c,d} by symmetry).
    for (std::size_t x = 0; x < collinear_.size(); ++x)
        for (std::size_t y = x + 1; y < collinear_.size(); ++y) {
            const Triple& s = collinear_[x];
            const Triple& t = collinear_[y];
            std::vector<int> common;
            std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(common));
            if (common.size() != 2)
                continue;
            std::vector<int> all;
            std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(all));
            for (int drop = 0; drop < 4; ++drop) {
                std::vector<int> rest;
                for (int i = 0; i < 4; ++i)
                    if (i != drop)
                        rest.push_back(all[i]);
                if (!dependent_[indexer_(rest[0], rest[1], rest[2])])
                    throw std::invalid_argument("Rank3Matroid: collinear triples {" + std::to_string(s[0]) + "," +
                                                std::to_string(s[1]) + "," + std::to_string(s[2]) + "} and {" +
                                                std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                                std::to_string(t[2]) + "} do not close into one line");
            }
        }
}

bool Rank3Matroid::is_collinear(int a, int b, int c) const
{
    if (a == b || b == c || a == c)
        return false;
    sort_triple(a, b, c);
    return dependent_[indexer_(a, b, c)];
}

std::vector<std::vector<int>> Rank3Matroid::lines() const
{
    std::vector<std::vector<int>> result;
    for (const Triple& t : collinear_) {
        std::vector<int> line(t.begin(), t.end());
        for (int p = 0; p < n_; ++p)
            if (p != t[0] && p != t[1] && p != t[2] && is_collinear(t[0], t[1], p))
                line.push_back(p);
        std::sort(line.begin(), line.end());
        // Report each line once: from its lexicographically first triple.
        if (line[0] == t[0] && line[1] == t[1] && line[2] == t[2])
            result.push_back(std::move(line));
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace nkconf
