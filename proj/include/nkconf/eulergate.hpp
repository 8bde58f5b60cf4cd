#pragma once

#include <cstdint>
#include <string_view>

namespace nkconf {

/// Cell counts of an arrangement drawn on the sphere (each projective crossing doubled).
struct EulerCounts {
    std::int64_t f0 = 0; ///< vertices
    std::int64_t f1 = 0; ///< edges
    std::int64_t f2 = 0; ///< cells
    std::int64_t digon_slack = 0; ///< 2*f1 - 3*f2; negative iff a digon-free drawing is impossible

    friend bool operator==(const EulerCounts&, const EulerCounts&) = default;
};

/// Gate outcomes. There is deliberately no "Possible": passing the gate is only necessary.
enum class Verdict { Impossible, Unresolved };

struct GateVerdict {
    Verdict verdict = Verdict::Unresolved;
    std::int64_t expression_value = 0; ///< -n^2 - 5n + n k^2 + n k + 6
    std::int64_t threshold = 0;        ///< k^2 + k - 5

    friend bool operator==(const GateVerdict&, const GateVerdict&) = default;
};

/// Completes (f0, f1) with f2 = f1 - f0 + 2 and the digon slack.
EulerCounts counts_from_graph(std::int64_t f0, std::int64_t f1);

/// Counts for a pl-realization of a general-position n_k configuration:
/// f0 = n(n - k(k-1) + 1), f1 = 2n(n - k^2 + 2k - 1).
/// Throws std::invalid_argument for k < 3 or n < 1, std::overflow_error when a count leaves int64.
EulerCounts euler_counts(std::int64_t n, std::int64_t k);

/// -n^2 - 5n + n k^2 + n k + 6, the digon inequality 3 f2 <= 2 f1 rearranged.
std::int64_t gate_expression(std::int64_t n, std::int64_t k);

/// Impossible iff gate_expression(n, k) > 0, equivalently n <= k^2 + k - 5.
GateVerdict feasibility_gate(std::int64_t n, std::int64_t k);

/// k^2 + k - 4: the smallest n that passes the gate.
std::int64_t min_gate_passing_n(std::int64_t k);

std::string_view to_string(Verdict v);

} // namespace nkconf
