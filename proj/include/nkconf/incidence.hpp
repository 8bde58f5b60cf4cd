#pragma once

#include <nkconf/rank3_matroid.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nkconf {

/// Largest point count accepted by Configuration (canonical codes store indices as bytes).
inline constexpr int kMaxPoints = 255;

struct Violation {
    std::string rule;
    std::string detail;
    std::vector<int> indices;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }

    void add(std::string rule, std::string detail, std::vector<int> indices = {})
    {
        violations.push_back({std::move(rule), std::move(detail), std::move(indices)});
    }

    /// One violation per line, "rule: detail".
    std::string summary() const;
};

/// Unchecked configuration data as it comes from a file or a caller.
struct RawConfiguration {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::vector<std::vector<std::int64_t>> lines;
};

class InvalidConfiguration : public std::invalid_argument {
public:
    explicit InvalidConfiguration(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// An n_k configuration: n points, n lines of k points each, every point on k lines,
/// two lines sharing at most one point. Lines are kept sorted, and the line list is
/// kept in lexicographic order, so two equal incidence structures compare equal.
class Configuration {
public:
    /// Normalizes and validates; throws InvalidConfiguration listing every violation.
    static Configuration from_lines(int n, int k, std::vector<std::vector<int>> lines);
    static Configuration from_raw(const RawConfiguration& raw);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<std::vector<int>>& lines() const { return lines_; }

    /// Indices (into lines()) of the k lines through point p, increasing.
    const std::vector<int>& lines_through(int p) const { return stars_[p]; }

    /// Index of the line through points a and b, or -1.
    int line_through(int a, int b) const { return pair_line_[static_cast<std::size_t>(a) * n_ + b]; }

    friend bool operator==(const Configuration& a, const Configuration& b)
    {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.lines_ == b.lines_;
    }

private:
    Configuration() = default;

    int n_ = 0;
    int k_ = 0;
    std::vector<std::vector<int>> lines_;
    std::vector<std::vector<int>> stars_;
    std::vector<int> pair_line_;
};

/// Bipartite incidence graph: vertices 0..n-1 are points, n..2n-1 are lines.
struct LeviGraph {
    int n = 0;
    std::vector<std::vector<int>> adjacency;

    int vertex_count() const { return static_cast<int>(adjacency.size()); }
    std::int64_t edge_count() const;
    /// Length of the shortest cycle, or -1 when the graph is a forest.
    int girth() const;
};

/// Reports every violated defining property; never throws on malformed data.
ValidationReport validate(const RawConfiguration& raw);

/// Polar configuration: point j of the result is line j of c, and line p of the
/// result is the set of lines of c through point p.
Configuration dualize(const Configuration& c);

/// General-position matroid: the collinear triples are exactly the 3-subsets of lines.
Rank3Matroid generalize(const Configuration& c);

LeviGraph levi_graph(const Configuration& c);

/// Image of c under the point map p -> perm[p].
Configuration relabel(const Configuration& c, std::span<const int> perm);

/// True when perm is a bijection of {0..n-1}.
bool is_permutation_of(std::span<const int> perm, int n);

} // namespace nkconf
