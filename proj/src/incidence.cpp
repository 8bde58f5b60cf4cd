#include <nkconf/incidence.hpp>

#include <algorithm>
#include <queue>
#include <sstream>

namespace nkconf {

namespace {

std::string set_string(std::span<const int> xs)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? "," : "") << xs[i];
    out << '}';
    return out.str();
}

} // namespace

std::string ValidationReport::summary() const
{
    std::ostringstream out;
    for (const auto& v : violations)
        out << v.rule << ": " << v.detail << '\n';
    return out.str();
}

InvalidConfiguration::InvalidConfiguration(ValidationReport report) :
    std::invalid_argument("invalid configuration:\n" + report.summary()),
    report_(std::move(report))
{
}

ValidationReport validate(const RawConfiguration& raw)
{
    ValidationReport report;
    if (raw.n < 1)
        report.add("n-positive", "n must be positive (got " + std::to_string(raw.n) + ")");
    if (raw.n > kMaxPoints)
        report.add("n-range", "n must be at most " + std::to_string(kMaxPoints));
    if (raw.k < 3)
        report.add("k-range", "k must be at least 3 (got " + std::to_string(raw.k) + ")");
    if (static_cast<std::int64_t>(raw.lines.size()) != raw.n)
        report.add("line-count", "expected " + std::to_string(raw.n) + " lines, got " + std::to_string(raw.lines.size()));

    const bool indices_checkable = raw.n >= 1 && raw.n <= kMaxPoints;
    const int n = indices_checkable ? static_cast<int>(raw.n) : 0;

    std::vector<std::vector<int>> clean;
    bool structural_ok = indices_checkable;
    for (std::size_t li = 0; li < raw.lines.size(); ++li) {
        const auto& line = raw.lines[li];
        const int line_index = static_cast<int>(li);
        if (static_cast<std::int64_t>(line.size()) != raw.k)
            report.add("line-size",
                       "line " + std::to_string(li) + " has " + std::to_string(line.size()) + " points, expected " +
                           std::to_string(raw.k),
                       {line_index});
        std::vector<int> pts;
        for (std::int64_t p : line) {
            if (!indices_checkable || p < 0 || p >= raw.n) {
                report.add("index-range", "line " + std::to_string(li) + " contains point " + std::to_string(p) +
                                              " outside [0, " + std::to_string(raw.n) + ")",
                           {line_index});
                structural_ok = false;
                continue;
            }
            pts.push_back(static_cast<int>(p));
        }
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
            report.add("duplicate-point", "line " + std::to_string(li) + " repeats a point", {line_index});
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        }
        clean.push_back(std::move(pts));
    }
    if (!structural_ok)
        return report;

    std::vector<int> degree(n, 0);
    for (const auto& line : clean)
        for (int p : line)
            ++degree[p];
    for (int p = 0; p < n; ++p)
        if (degree[p] != raw.k)
            report.add("point-degree",
                       "point " + std::to_string(p) + " lies on " + std::to_string(degree[p]) + " lines, expected " +
                           std::to_string(raw.k),
                       {p});

    std::vector<int> pair_owner(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t li = 0; li < clean.size(); ++li) {
        const auto& line = clean[li];
        for (std::size_t a = 0; a < line.size(); ++a)
            for (std::size_t b = a + 1; b < line.size(); ++b) {
                int& owner = pair_owner[static_cast<std::size_t>(line[a]) * n + line[b]];
                if (owner >= 0)
                    report.add("pair-repeated",
                               "pair " + set_string(std::vector<int>{line[a], line[b]}) + " on two lines (" +
                                   std::to_string(owner) + " and " + std::to_string(li) + ")",
                               {line[a], line[b]});
                else
                    owner = static_cast<int>(li);
            }
    }

    std::vector<std::vector<int>> sorted = clean;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            report.add("duplicate-line", "line " + set_string(sorted[i]) + " occurs more than once", sorted[i]);
    return report;
}

Configuration Configuration::from_raw(const RawConfiguration& raw)
{
    ValidationReport report = validate(raw);
    if (!report.valid())
        throw InvalidConfiguration(std::move(report));

    Configuration c;
    c.n_ = static_cast<int>(raw.n);
    c.k_ = static_cast<int>(raw.k);
    for (const auto& line : raw.lines) {
        std::vector<int> pts(line.begin(), line.end());
        std::sort(pts.begin(), pts.end());
        c.lines_.push_back(std::move(pts));
    }
    std::sort(c.lines_.begin(), c.lines_.end());

    c.stars_.assign(c.n_, {});
    c.pair_line_.assign(static_cast<std::size_t>(c.n_) * c.n_, -1);
    for (int li = 0; li < c.n_; ++li) {
        const auto& line = c.lines_[li];
        for (int p : line)
            c.stars_[p].push_back(li);
        for (int a : line)
            for (int b : line)
                if (a != b)
                    c.pair_line_[static_cast<std::size_t>(a) * c.n_ + b] = li;
    }
    return c;
}

Configuration Configuration::from_lines(int n, int k, std::vector<std::vector<int>> lines)
{
    RawConfiguration raw{n, k, {}};
    raw.lines.reserve(lines.size());
    for (const auto& line : lines)
        raw.lines.emplace_back(line.begin(), line.end());
    return from_raw(raw);
}

Configuration dualize(const Configuration& c)
{
    std::vector<std::vector<int>> lines;
    lines.reserve(c.n());
    for (int p = 0; p < c.n(); ++p)
        lines.push_back(c.lines_through(p));
    return Configuration::from_lines(c.n(), c.k(), std::move(lines));
}

Rank3Matroid generalize(const Configuration& c)
{
    std::vector<Triple> triples;
    for (const auto& line : c.lines())
        for (std::size_t a = 0; a < line.size(); ++a)
            for (std::size_t b = a + 1; b < line.size(); ++b)
                for (std::size_t d = b + 1; d < line.size(); ++d)
                    triples.push_back({line[a], line[b], line[d]});
    return Rank3Matroid(c.n(), std::move(triples));
}

LeviGraph levi_graph(const Configuration& c)
{
    LeviGraph g;
    g.n = c.n();
    g.adjacency.assign(2 * static_cast<std::size_t>(c.n()), {});
    for (int li = 0; li < c.n(); ++li)
        for (int p : c.lines()[li]) {
            g.adjacency[p].push_back(c.n() + li);
            g.adjacency[c.n() + li].push_back(p);
        }
    for (auto& adj : g.adjacency)
        std::sort(adj.begin(), adj.end());
    return g;
}

std::int64_t LeviGraph::edge_count() const
{
    std::int64_t degree_sum = 0;
    for (const auto& adj : adjacency)
        degree_sum += static_cast<std::int64_t>(adj.size());
    return degree_sum / 2;
}

int LeviGraph::girth() const
{
    const int v_count = vertex_count();
    int best = -1;
    std::vector<int> dist(v_count), parent(v_count);
    for (int s = 0; s < v_count; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : adjacency[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                }
                else if (w != parent[u]) {
                    int cycle = dist[u] + dist[w] + 1;
                    if (best < 0 || cycle < best)
                        best = cycle;
                }
            }
        }
    }
    return best;
}

Configuration relabel(const Configuration& c, std::span<const int> perm)
{
    if (!is_permutation_of(perm, c.n()))
        throw std::invalid_argument("relabel: not a permutation of the point set");
    std::vector<std::vector<int>> lines;
    lines.reserve(c.n());
    for (const auto& line : c.lines()) {
        std::vector<int> image;
        for (int p : line)
            image.push_back(perm[p]);
        lines.push_back(std::move(image));
    }
    return Configuration::from_lines(c.n(), c.k(), std::move(lines));
}

bool is_permutation_of(std::span<const int> perm, int n)
{
    if (static_cast<int>(perm.size()) != n)
        return false;
    std::vector<bool> seen(n, false);
    for (int x : perm) {
        if (x < 0 || x >= n || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

} // namespace nkconf
