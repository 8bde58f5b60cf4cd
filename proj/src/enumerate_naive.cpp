#include <nkconf/enumerate.hpp>

#include <algorithm>

namespace nkconf {

namespace {

class NaiveSearch {
public:
    NaiveSearch(int n, int k) :
        n_(n),
        k_(k),
        degree_(n, 0),
        covered_(static_cast<std::size_t>(n) * n, false)
    {
    }

    std::vector<std::vector<std::vector<int>>> run()
    {
        // The star of point 0 may be relabeled to consecutive blocks.
        for (int b = 0; b < k_; ++b) {
            std::vector<int> line{0};
            for (int i = 0; i < k_ - 1; ++i)
                line.push_back(1 + b * (k_ - 1) + i);
            if (line.back() >= n_ || !fits(line))
                return {};
            push(line);
        }
        search();
        return std::move(found_);
    }

private:
    bool fits(const std::vector<int>& line) const
    {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (degree_[line[i]] >= k_)
                return false;
            for (std::size_t j = i + 1; j < line.size(); ++j)
                if (covered_[line[i] * n_ + line[j]])
                    return false;
        }
        return true;
    }

    void mark(const std::vector<int>& line, int delta)
    {
        for (std::size_t i = 0; i < line.size(); ++i) {
            degree_[line[i]] += delta;
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                covered_[line[i] * n_ + line[j]] = delta > 0;
                covered_[line[j] * n_ + line[i]] = delta > 0;
            }
        }
    }

    void push(const std::vector<int>& line)
    {
        mark(line, 1);
        lines_.push_back(line);
    }

    void pop()
    {
        mark(lines_.back(), -1);
        lines_.pop_back();
    }

    void search()
    {
        if (static_cast<int>(lines_.size()) == n_) {
            found_.push_back(lines_);
            return;
        }
        int first = 0;
        while (first < n_ && degree_[first] == k_)
            ++first;
        if (first == n_)
            return;
        // Later lines are lexicographically larger, so none of them could reach `first`
        // unless the next one does.
        std::vector<int> line{first};
        extend(line);
    }

    void extend(std::vector<int>& line)
    {
        if (static_cast<int>(line.size()) == k_) {
            if (!lines_.empty() && line <= lines_.back())
                return;
            push(line);
            search();
            pop();
            return;
        }
        for (int p = line.back() + 1; p < n_; ++p) {
            if (degree_[p] >= k_)
                continue;
            bool ok = true;
            for (int q : line)
                if (covered_[q * n_ + p]) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            line.push_back(p);
            extend(line);
            line.pop_back();
        }
    }

    int n_;
    int k_;
    std::vector<int> degree_;
    std::vector<bool> covered_;
    std::vector<std::vector<int>> lines_;
    std::vector<std::vector<std::vector<int>>> found_;
};

class IsomorphismSearch {
public:
    IsomorphismSearch(const Configuration& a, const Configuration& b) :
        a_(a),
        b_(b),
        map_(a.n(), -1),
        used_(b.n(), false)
    {
    }

    std::optional<std::vector<int>> run()
    {
        if (extend(0))
            return map_;
        return std::nullopt;
    }

private:
    bool consistent(int p, int image) const
    {
        for (int q = 0; q < p; ++q) {
            const int la = a_.line_through(p, q);
            const int lb = b_.line_through(image, map_[q]);
            if ((la < 0) != (lb < 0))
                return false;
            if (la < 0)
                continue;
            for (int r = q + 1; r < p; ++r) {
                const bool ca = a_.line_through(p, r) == la;
                const bool cb = b_.line_through(image, map_[r]) == lb;
                if (ca != cb)
                    return false;
            }
        }
        return true;
    }

    bool extend(int p)
    {
        if (p == a_.n())
            return is_isomorphism(a_, b_, map_);
        for (int image = 0; image < b_.n(); ++image) {
            if (used_[image] || !consistent(p, image))
                continue;
            map_[p] = image;
            used_[image] = true;
            if (extend(p + 1))
                return true;
            used_[image] = false;
            map_[p] = -1;
        }
        return false;
    }

    const Configuration& a_;
    const Configuration& b_;
    std::vector<int> map_;
    std::vector<bool> used_;
};

// Cheap isomorphism invariant used only to skip hopeless brute-force calls:
// per point, the number of triangles through it, as a sorted multiset.
std::vector<int> triangle_profile(const Configuration& c)
{
    const int n = c.n();
    std::vector<int> profile(n, 0);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const int pq = c.line_through(p, q);
            if (pq < 0)
                continue;
            for (int r = q + 1; r < n; ++r) {
                const int pr = c.line_through(p, r);
                const int qr = c.line_through(q, r);
                if (pr >= 0 && qr >= 0 && pr != pq && qr != pq) {
                    ++profile[p];
                    ++profile[q];
                    ++profile[r];
                }
            }
        }
    std::sort(profile.begin(), profile.end());
    return profile;
}

} // namespace

std::optional<std::vector<int>> brute_force_isomorphism(const Configuration& a, const Configuration& b)
{
    if (a.n() != b.n() || a.k() != b.k())
        return std::nullopt;
    return IsomorphismSearch(a, b).run();
}

std::vector<Configuration> enumerate_naive(int n, int k)
{
    if (k < 3)
        throw std::invalid_argument("enumerate_naive: k must be at least 3");
    if ((k == 3 && n > 12) || (k == 4 && n > 14))
        throw ResourceLimitExceeded("enumerate_naive: (" + std::to_string(n) + ", " + std::to_string(k) +
                                    ") is beyond the oracle's cap");
    if (n < 1)
        return {};

    struct Representative {
        Configuration configuration;
        std::vector<int> profile;
    };
    std::vector<Representative> classes;
    for (auto& lines : NaiveSearch(n, k).run()) {
        Configuration c = Configuration::from_lines(n, k, std::move(lines));
        std::vector<int> profile = triangle_profile(c);
        const bool seen = std::any_of(classes.begin(), classes.end(), [&](const Representative& r) {
            return r.profile == profile && brute_force_isomorphism(r.configuration, c).has_value();
        });
        if (!seen)
            classes.push_back({std::move(c), std::move(profile)});
    }
    std::vector<Configuration> result;
    for (auto& r : classes)
        result.push_back(std::move(r.configuration));
    return result;
}

} // namespace nkconf
