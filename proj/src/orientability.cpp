#include <nkconf/orientability.hpp>

#include <bitset>
#include <chrono>

namespace nkconf {

namespace {

// One three-term relation for a fixed (5-subset, pivot) with the collinear terms dropped.
// Each remaining term is coef * s[var0] * s[var1]. Two terms: they must have opposite
// signs. Three terms: they must not all agree.
struct GpConstraint {
    int terms = 0;
    int var[3][2] = {};
    std::int8_t coef[3] = {};
};

class OrientabilitySolver {
public:
    OrientabilitySolver(const Rank3Matroid& m, const OrientabilityOptions& options) :
        m_(m),
        options_(options),
        indexer_(m.n()),
        value_(static_cast<std::size_t>(indexer_.count()), 0),
        occurrences_(static_cast<std::size_t>(indexer_.count())),
        is_zero_(static_cast<std::size_t>(indexer_.count()), false)
    {
        for (const Triple& t : m.collinear())
            is_zero_[indexer_(t[0], t[1], t[2])] = true;
    }

    OrientabilityResult solve()
    {
        const auto start = std::chrono::steady_clock::now();
        OrientabilityResult result;
        result.outcome = run();
        if (result.outcome == Orientability::Orientable)
            result.witness = witness();
        stats_.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.stats = stats_;
        return result;
    }

private:
    struct BudgetExhausted {};

    Orientability run()
    {
        if (!build_constraints())
            return Orientability::NonOrientable;
        const std::vector<std::int64_t> fixed = fixed_triples();
        if (fixed.empty())
            return Orientability::NonOrientable; // no basis: every sign map would be identically zero
        for (std::int64_t v : fixed)
            if (!assign(v, 1))
                return Orientability::NonOrientable;
        if (!propagate(0))
            return Orientability::NonOrientable;
        try {
            return search() ? Orientability::Orientable : Orientability::NonOrientable;
        }
        catch (const BudgetExhausted&) {
            return Orientability::BudgetExceeded;
        }
    }

    int term_sign(const GpConstraint& c, int t) const
    {
        return c.coef[t] * value_[c.var[t][0]] * value_[c.var[t][1]];
    }

    bool build_constraints()
    {
        const int n = m_.n();
        int s[5];
        for (s[0] = 0; s[0] < n; ++s[0])
            for (s[1] = s[0] + 1; s[1] < n; ++s[1])
                for (s[2] = s[1] + 1; s[2] < n; ++s[2])
                    for (s[3] = s[2] + 1; s[3] < n; ++s[3])
                        for (s[4] = s[3] + 1; s[4] < n; ++s[4])
                            for (int pivot = 0; pivot < 5; ++pivot)
                                if (!add_constraint(s, pivot))
                                    return false;
        return true;
    }

    // Returns false when the relation has exactly one nonzero term, which no sign map can satisfy.
    bool add_constraint(const int (&s)[5], int pivot)
    {
        int rest[4];
        for (int i = 0, r = 0; i < 5; ++i)
            if (i != pivot)
                rest[r++] = s[i];
        const int x = s[pivot];
        const int pairs[3][4] = {{rest[0], rest[1], rest[2], rest[3]},
                                 {rest[0], rest[2], rest[1], rest[3]},
                                 {rest[0], rest[3], rest[1], rest[2]}};
        const int base_coef[3] = {1, -1, 1};
        GpConstraint c;
        for (int q = 0; q < 3; ++q) {
            int a = x, b = pairs[q][0], d = pairs[q][1];
            int e = x, f = pairs[q][2], g = pairs[q][3];
            const int parity = sort_triple(a, b, d) * sort_triple(e, f, g);
            if (m_.is_collinear_sorted(a, b, d) || m_.is_collinear_sorted(e, f, g))
                continue;
            c.var[c.terms][0] = static_cast<int>(indexer_(a, b, d));
            c.var[c.terms][1] = static_cast<int>(indexer_(e, f, g));
            c.coef[c.terms] = static_cast<std::int8_t>(base_coef[q] * parity);
            ++c.terms;
        }
        if (c.terms == 0)
            return true;
        if (c.terms == 1)
            return false;
        const int id = static_cast<int>(constraints_.size());
        constraints_.push_back(c);
        for (int t = 0; t < c.terms; ++t) {
            occurrences_[c.var[t][0]].push_back(id);
            occurrences_[c.var[t][1]].push_back(id);
        }
        return true;
    }

    std::vector<std::int64_t> fixed_triples() const
    {
        std::vector<std::int64_t> fixed;
        const int n = m_.n();
        using Row = std::bitset<kMaxPoints + 1>;
        std::vector<Row> basis_by_pivot(n);
        std::vector<bool> has_pivot(n, false);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    if (m_.is_collinear_sorted(i, j, k))
                        continue;
                    if (options_.symmetry == SymmetryBreaking::Negation)
                        return {indexer_(i, j, k)};
                    Row row;
                    row.set(i);
                    row.set(j);
                    row.set(k);
                    for (int bit = n - 1; bit >= 0; --bit) {
                        if (!row.test(bit))
                            continue;
                        if (!has_pivot[bit]) {
                            has_pivot[bit] = true;
                            basis_by_pivot[bit] = row;
                            fixed.push_back(indexer_(i, j, k));
                            break;
                        }
                        row ^= basis_by_pivot[bit];
                    }
                    if (static_cast<int>(fixed.size()) == n)
                        return fixed;
                }
        return fixed;
    }

    bool assign(std::int64_t v, int s)
    {
        if (value_[v] != 0)
            return value_[v] == s;
        value_[v] = static_cast<std::int8_t>(s);
        trail_.push_back(v);
        return true;
    }

    // Forces the unknown factor of term t so that the term takes the value `wanted`.
    // Does nothing unless exactly one factor is known.
    bool force_term(const GpConstraint& c, int t, int wanted)
    {
        const int a = value_[c.var[t][0]];
        const int b = value_[c.var[t][1]];
        if (a != 0 && b == 0)
            return assign(c.var[t][1], wanted * c.coef[t] * a);
        if (b != 0 && a == 0)
            return assign(c.var[t][0], wanted * c.coef[t] * b);
        return true;
    }

    bool propagate(std::size_t head)
    {
        while (head < trail_.size()) {
            const std::int64_t v = trail_[head++];
            for (int id : occurrences_[v]) {
                ++stats_.propagations;
                const GpConstraint& c = constraints_[id];
                int known[3];
                int known_count = 0;
                int unknown = -1;
                for (int t = 0; t < c.terms; ++t) {
                    known[t] = term_sign(c, t);
                    if (known[t] != 0)
                        ++known_count;
                    else
                        unknown = t;
                }
                if (c.terms == 2) {
                    if (known_count == 2) {
                        if (known[0] == known[1])
                            return false;
                    }
                    else if (known_count == 1) {
                        if (!force_term(c, unknown, -known[1 - unknown]))
                            return false;
                    }
                }
                else {
                    if (known_count == 3) {
                        if (known[0] == known[1] && known[1] == known[2])
                            return false;
                    }
                    else if (known_count == 2) {
                        const int p = known[(unknown + 1) % 3];
                        const int q = known[(unknown + 2) % 3];
                        if (p == q && !force_term(c, unknown, -p))
                            return false;
                    }
                }
            }
        }
        return true;
    }

    std::int64_t pick_variable() const
    {
        std::int64_t best = -1;
        long best_score = -1;
        const std::int64_t count = indexer_.count();
        for (std::int64_t v = 0; v < count; ++v) {
            if (value_[v] != 0 || is_zero_[v])
                continue;
            if (options_.order == VariableOrder::Lexicographic)
                return v;
            long score = 0;
            for (int id : occurrences_[v]) {
                const GpConstraint& c = constraints_[id];
                for (int t = 0; t < c.terms; ++t)
                    score += (value_[c.var[t][0]] != 0) + (value_[c.var[t][1]] != 0);
            }
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        return best;
    }

    bool search()
    {
        ++stats_.nodes;
        if (options_.node_budget != 0 && stats_.nodes > options_.node_budget)
            throw BudgetExhausted{};
        const std::int64_t v = pick_variable();
        if (v < 0)
            return true;
        for (int s : {1, -1}) {
            const std::size_t mark = trail_.size();
            assign(v, s);
            if (propagate(mark) && search())
                return true;
            while (trail_.size() > mark) {
                value_[trail_.back()] = 0;
                trail_.pop_back();
            }
        }
        return false;
    }

    Chirotope witness() const
    {
        std::vector<Sign> signs(value_.size());
        for (std::size_t v = 0; v < value_.size(); ++v)
            signs[v] = static_cast<Sign>(value_[v]);
        Chirotope chi(m_.n(), std::move(signs));
        const ValidationReport check = is_chirotope(chi, m_, 1);
        if (!check.valid())
            throw std::logic_error("orientability: witness failed verification: " + check.summary());
        return chi;
    }

    const Rank3Matroid& m_;
    OrientabilityOptions options_;
    TripleIndexer indexer_;
    std::vector<std::int8_t> value_;
    std::vector<std::vector<int>> occurrences_;
    std::vector<GpConstraint> constraints_;
    std::vector<std::int64_t> trail_;
    std::vector<bool> is_zero_;
    SearchStatistics stats_;
};

} // namespace

OrientabilityResult orientability(const Rank3Matroid& m, const OrientabilityOptions& options)
{
    if (m.n() < 3)
        throw std::invalid_argument("orientability: need at least 3 elements");
    return OrientabilitySolver(m, options).solve();
}

std::string_view to_string(Orientability o)
{
    switch (o) {
    case Orientability::Orientable: return "Orientable";
    case Orientability::NonOrientable: return "NonOrientable";
    case Orientability::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

} // namespace nkconf
