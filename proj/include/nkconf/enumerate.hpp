#pragma once

#include <nkconf/incidence.hpp>
#include <nkconf/matroid.hpp>
#include <nkconf/orientability.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nkconf {

struct CensusEntry {
    Configuration configuration;
    CanonicalCode code;
    std::optional<OrientabilityResult> orientability;
};

struct EnumerateOptions {
    int workers = 1;
    /// Search depth (in lines) at which the tree is cut into independent subtrees.
    int split_depth = 6;
    /// Largest n*k accepted without allow_large.
    int max_incidences = 64;
    bool allow_large = false;
    /// Receives warnings (duplicate classes after merging); defaults to stderr.
    std::function<void(const std::string&)> warn;
};

struct EnumerationStatistics {
    std::int64_t nodes = 0;
    std::int64_t canonicity_tests = 0;
    std::int64_t subtrees = 0;
    std::int64_t duplicates_dropped = 0;
    double elapsed_seconds = 0.0;
};

struct Census {
    int n = 0;
    int k = 0;
    std::vector<CensusEntry> entries; ///< sorted by canonical code, pairwise non-isomorphic
    EnumerationStatistics stats;
};

class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Orderly generation: lines are added in lexicographic order, and a partial line set is
/// kept only if it is the lexicographically least image of itself under point relabeling.
/// Every isomorphism class of n_k configurations appears exactly once.
/// Throws ResourceLimitExceeded when n*k exceeds the ceiling (and allow_large is unset) or n > 32.
Census enumerate_configurations(int n, int k, const EnumerateOptions& options = {});

/// True when the line list (in the given order, each line sorted) is the least image of itself.
bool is_lex_least(int n, const std::vector<std::vector<int>>& lines);

/// Independent oracle: exhaustive depth-first search over lexicographically increasing line
/// sets (the lines through point 0 fixed to consecutive blocks), with only degree and
/// pair-coverage pruning, then de-duplication by brute-force isomorphism search.
/// Caps: n <= 12 for k = 3, n <= 14 for k = 4, nothing for other k. Throws
/// ResourceLimitExceeded beyond the caps.
std::vector<Configuration> enumerate_naive(int n, int k);

/// Backtracking search for a point bijection mapping a's lines onto b's, extending a partial
/// map one point at a time and checking collinearity of every mapped pair and triple.
std::optional<std::vector<int>> brute_force_isomorphism(const Configuration& a, const Configuration& b);

struct ClassificationSummary {
    int classes = 0;
    int orientable = 0;
    int non_orientable = 0;
    int budget_exceeded = 0;

    friend bool operator==(const ClassificationSummary&, const ClassificationSummary&) = default;
};

/// Runs generalize + orientability on every census entry, filling the orientability column.
/// Budget exhaustion is recorded per entry and never aborts the batch. Entries are
/// distributed over `workers` threads; results do not depend on the worker count.
ClassificationSummary classify_orientability(Census& census, const OrientabilityOptions& options = {},
                                             int workers = 1);

/// Enumerates (n, k) and classifies every class, both with enumerate_options.workers threads.
Census classify_orientability(int n, int k, const OrientabilityOptions& options = {},
                              const EnumerateOptions& enumerate_options = {});

/// Counts outcomes over the entries that carry an orientability result.
ClassificationSummary summarize(const Census& census);

} // namespace nkconf
