// Orderly generation of n_k configurations.
//
// A configuration is written as its list of lines, each a sorted point tuple, in
// lexicographic order. Its canonical form is the least such list over all point
// relabelings. Every prefix of a canonical list is itself canonical (a smaller image of
// the prefix would extend to a smaller image of the whole), so a depth-first search that
// appends lines in increasing order and discards non-canonical prefixes visits each
// isomorphism class exactly once.
//
// The canonicity test works on the incidence matrix with one row per line: choosing an
// order of the rows fixes, greedily, the best column (point) order, so the test is a
// search over row orders that stops as soon as a strictly better row appears.

#include <nkconf/enumerate.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <mutex>
#include <thread>

namespace nkconf {

namespace {

using Mask = std::uint32_t;
constexpr int kMaxEnumeratedPoints = 32;

class LexLeastTest {
public:
    explicit LexLeastTest(int n) : n_(n) {}

    bool operator()(std::span<const Mask> lines)
    {
        ++calls_;
        const int r = static_cast<int>(lines.size());
        lines_ = lines;
        rows_.resize(r);
        for (int i = 0; i < r; ++i)
            rows_[i] = as_row(lines[i]);
        blocks_.resize(r + 1);
        blocks_[0].assign(1, n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1);
        return search(0, 0);
    }

    std::int64_t calls() const { return calls_; }

private:
    // Point j becomes bit n-1-j, so integer order equals lexicographic tuple order reversed.
    Mask as_row(Mask line) const
    {
        Mask row = 0;
        while (line) {
            const int j = std::countr_zero(line);
            line &= line - 1;
            row |= Mask{1} << (n_ - 1 - j);
        }
        return row;
    }

    bool search(int depth, std::uint64_t used)
    {
        const int r = static_cast<int>(rows_.size());
        if (depth == r)
            return true;
        const std::vector<Mask>& blocks = blocks_[depth];
        for (int i = 0; i < r; ++i) {
            if (used >> i & 1)
                continue;
            const Mask line = lines_[i];
            Mask pattern = 0;
            int pos = 0;
            for (Mask b : blocks) {
                const int ones = std::popcount(b & line);
                if (ones)
                    pattern |= ((Mask{1} << ones) - 1) << (n_ - pos - ones);
                pos += std::popcount(b);
            }
            if (pattern > rows_[depth])
                return false;
            if (pattern < rows_[depth])
                continue;
            std::vector<Mask>& next = blocks_[depth + 1];
            next.clear();
            for (Mask b : blocks) {
                if (Mask in = b & line)
                    next.push_back(in);
                if (Mask out = b & ~line)
                    next.push_back(out);
            }
            if (!search(depth + 1, used | (std::uint64_t{1} << i)))
                return false;
        }
        return true;
    }

    int n_;
    std::span<const Mask> lines_;
    std::vector<Mask> rows_;
    std::vector<std::vector<Mask>> blocks_;
    std::int64_t calls_ = 0;
};

bool lex_greater(Mask a, Mask b)
{
    // Compare as sorted tuples: the first differing element decides.
    const Mask diff = a ^ b;
    if (!diff)
        return false;
    const Mask lowest = diff & (~diff + 1);
    return (b & lowest) != 0;
}

class OrderlyGenerator {
public:
    OrderlyGenerator(int n, int k) : n_(n), k_(k), test_(n) {}

    // Searches below `prefix` (assumed canonical). Prefixes reaching `stop_depth` lines are
    // reported to `frontier` instead of being expanded; completed configurations go to `leaves`.
    void run(const std::vector<Mask>& prefix, int stop_depth, std::vector<std::vector<Mask>>* frontier,
             std::vector<std::vector<Mask>>* leaves)
    {
        stop_depth_ = stop_depth;
        frontier_ = frontier;
        leaves_ = leaves;
        lines_.clear();
        degree_.assign(n_, 0);
        collinear_.assign(n_, 0);
        touched_ = 0;
        for (Mask line : prefix)
            push_line(line);
        search();
    }

    std::int64_t nodes() const { return nodes_; }
    std::int64_t tests() const { return test_.calls(); }

private:
    void push_line(Mask line)
    {
        lines_.push_back(line);
        for (Mask rest = line; rest; rest &= rest - 1) {
            const int p = std::countr_zero(rest);
            ++degree_[p];
            collinear_[p] |= line & ~(Mask{1} << p);
            touched_ = std::max(touched_, p + 1);
        }
    }

    void pop_line(int saved_touched)
    {
        const Mask line = lines_.back();
        lines_.pop_back();
        for (Mask rest = line; rest; rest &= rest - 1) {
            const int p = std::countr_zero(rest);
            --degree_[p];
            collinear_[p] &= ~(line & ~(Mask{1} << p));
        }
        touched_ = saved_touched;
    }

    void search()
    {
        ++nodes_;
        const int r = static_cast<int>(lines_.size());
        if (r == n_) {
            if (leaves_)
                leaves_->push_back(lines_);
            return;
        }
        if (frontier_ && r == stop_depth_) {
            frontier_->push_back(lines_);
            return;
        }

        Mask unsaturated = 0;
        for (int p = 0; p < n_; ++p)
            if (degree_[p] < k_)
                unsaturated |= Mask{1} << p;
        if (!unsaturated)
            return;
        // Each missing line through p needs k-1 fresh partners.
        for (int p = 0; p < n_; ++p)
            if (degree_[p] < k_) {
                const int available = std::popcount(unsaturated & ~collinear_[p] & ~(Mask{1} << p));
                if (available < (k_ - degree_[p]) * (k_ - 1))
                    return;
            }

        // Lines are sorted, so the next line starts at the smallest unsaturated point.
        const int first = std::countr_zero(unsaturated);
        const Mask above = first + 1 >= 32 ? 0 : ~((Mask{2} << first) - 1);
        const Mask candidates = unsaturated & ~collinear_[first] & above;
        choose(Mask{1} << first, candidates, k_ - 1, std::max(touched_, first + 1));
    }

    // New (never used) points must be taken in increasing order without gaps; any other
    // choice has a smaller relabeling.
    void choose(Mask chosen, Mask candidates, int needed, int next_fresh)
    {
        if (needed == 0) {
            if (!lines_.empty() && !lex_greater(chosen, lines_.back()))
                return;
            const int saved = touched_;
            push_line(chosen);
            if (test_(lines_))
                search();
            pop_line(saved);
            return;
        }
        for (Mask rest = candidates; rest; rest &= rest - 1) {
            const int p = std::countr_zero(rest);
            if (p > next_fresh)
                break;
            if (std::popcount(rest) < needed)
                break;
            const Mask bit = Mask{1} << p;
            choose(chosen | bit, (rest & ~bit) & ~collinear_[p], needed - 1,
                   p == next_fresh ? next_fresh + 1 : next_fresh);
        }
    }

    int n_;
    int k_;
    LexLeastTest test_;
    int stop_depth_ = 0;
    std::vector<std::vector<Mask>>* frontier_ = nullptr;
    std::vector<std::vector<Mask>>* leaves_ = nullptr;
    std::vector<Mask> lines_;
    std::vector<int> degree_;
    std::vector<Mask> collinear_;
    int touched_ = 0;
    std::int64_t nodes_ = 0;
};

std::vector<std::vector<int>> to_lines(const std::vector<Mask>& masks)
{
    std::vector<std::vector<int>> lines;
    for (Mask m : masks) {
        std::vector<int> line;
        for (; m; m &= m - 1)
            line.push_back(std::countr_zero(m));
        lines.push_back(std::move(line));
    }
    return lines;
}

// Runs `work` on `workers` threads (inline for one) and rethrows the first exception.
void run_parallel(int workers, const std::function<void()>& work)
{
    if (workers <= 1) {
        work();
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                try {
                    work();
                }
                catch (...) {
                    const std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace

bool is_lex_least(int n, const std::vector<std::vector<int>>& lines)
{
    if (n < 1 || n > kMaxEnumeratedPoints || lines.size() > 64)
        throw std::invalid_argument("is_lex_least: supports 1..32 points and at most 64 lines");
    std::vector<Mask> masks;
    for (const auto& line : lines) {
        Mask m = 0;
        for (int p : line) {
            if (p < 0 || p >= n)
                throw std::invalid_argument("is_lex_least: point out of range");
            m |= Mask{1} << p;
        }
        masks.push_back(m);
    }
    LexLeastTest test(n);
    return test(masks);
}

Census enumerate_configurations(int n, int k, const EnumerateOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    Census census;
    census.n = n;
    census.k = k;
    if (k < 3)
        throw std::invalid_argument("enumerate_configurations: k must be at least 3");
    if (n < k)
        return census;
    if (n > kMaxEnumeratedPoints)
        throw ResourceLimitExceeded("enumerate_configurations: n > 32 is not supported");
    if (static_cast<std::int64_t>(n) * k > options.max_incidences && !options.allow_large)
        throw ResourceLimitExceeded("enumerate_configurations: n*k = " + std::to_string(n * k) +
                                    " exceeds the ceiling of " + std::to_string(options.max_incidences) +
                                    " (override required)");

    std::vector<std::vector<Mask>> frontier;
    std::vector<std::vector<Mask>> shallow_leaves;
    OrderlyGenerator root(n, k);
    root.run({}, std::max(options.split_depth, 1), &frontier, &shallow_leaves);
    census.stats.nodes += root.nodes();
    census.stats.canonicity_tests += root.tests();
    census.stats.subtrees = static_cast<std::int64_t>(frontier.size());

    std::vector<std::vector<std::vector<Mask>>> results(frontier.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::int64_t> nodes{0}, tests{0};
    auto worker = [&] {
        OrderlyGenerator gen(n, k);
        for (std::size_t i = next++; i < frontier.size(); i = next++)
            gen.run(frontier[i], 0, nullptr, &results[i]);
        nodes += gen.nodes();
        tests += gen.tests();
    };
    run_parallel(options.workers, worker);
    census.stats.nodes += nodes;
    census.stats.canonicity_tests += tests;

    std::vector<std::vector<Mask>> leaves = std::move(shallow_leaves);
    for (auto& part : results)
        for (auto& leaf : part)
            leaves.push_back(std::move(leaf));

    for (const auto& leaf : leaves) {
        Configuration c = Configuration::from_lines(n, k, to_lines(leaf));
        CanonicalCode code = canonical_code(c);
        census.entries.push_back({std::move(c), std::move(code), std::nullopt});
    }
    std::sort(census.entries.begin(), census.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.code < b.code; });
    const auto last = std::unique(census.entries.begin(), census.entries.end(),
                                  [](const CensusEntry& a, const CensusEntry& b) { return a.code == b.code; });
    census.stats.duplicates_dropped = std::distance(last, census.entries.end());
    if (census.stats.duplicates_dropped > 0) {
        const std::string message = "enumerate_configurations: dropped " +
                                    std::to_string(census.stats.duplicates_dropped) +
                                    " duplicate classes; the canonicity test is inconsistent";
        if (options.warn)
            options.warn(message);
        else
            std::cerr << "warning: " << message << '\n';
    }
    census.entries.erase(last, census.entries.end());
    census.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return census;
}

ClassificationSummary classify_orientability(Census& census, const OrientabilityOptions& options, int workers)
{
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < census.entries.size(); i = next++) {
            CensusEntry& entry = census.entries[i];
            entry.orientability = orientability(generalize(entry.configuration), options);
        }
    };
    run_parallel(std::min<std::size_t>(workers, census.entries.size()), worker);
    return summarize(census);
}

Census classify_orientability(int n, int k, const OrientabilityOptions& options,
                              const EnumerateOptions& enumerate_options)
{
    Census census = enumerate_configurations(n, k, enumerate_options);
    classify_orientability(census, options, enumerate_options.workers);
    return census;
}

ClassificationSummary summarize(const Census& census)
{
    ClassificationSummary summary;
    summary.classes = static_cast<int>(census.entries.size());
    for (const auto& entry : census.entries) {
        if (!entry.orientability)
            continue;
        switch (entry.orientability->outcome) {
        case Orientability::Orientable: ++summary.orientable; break;
        case Orientability::NonOrientable: ++summary.non_orientable; break;
        case Orientability::BudgetExceeded: ++summary.budget_exceeded; break;
        }
    }
    return summary;
}

} // namespace nkconf
