#pragma once

#include <nkconf/incidence.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nkconf {

/// Opaque isomorphism-class certificate. Equal codes <=> isomorphic configurations
/// (point relabeling plus line relabeling; points and lines are never swapped).
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::string hex() const;
    static CanonicalCode from_hex(std::string_view hex);

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

private:
    std::vector<std::uint8_t> bytes_;
};

struct CanonicalForm {
    CanonicalCode code;
    /// labeling[p] is the canonical label of point p; relabel(c, labeling) is the canonical representative.
    std::vector<int> labeling;
    /// Leaves visited by the search (diagnostics).
    std::int64_t leaves = 0;
};

/// Canonical labeling by partition refinement and individualization on the Levi graph,
/// starting from the point/line bipartition, with automorphism pruning.
CanonicalForm canonical_form(const Configuration& c);
CanonicalCode canonical_code(const Configuration& c);

struct IsomorphismResult {
    bool isomorphic = false;
    /// Point permutation sigma with relabel(a, sigma) == b, verified before being returned.
    std::optional<std::vector<int>> witness;
};

IsomorphismResult are_isomorphic(const Configuration& a, const Configuration& b);

/// Checks that perm maps the line set of a onto the line set of b.
bool is_isomorphism(const Configuration& a, const Configuration& b, std::span<const int> perm);

/// 1 + b1 t + b2 t^2 of the general-position arrangement.
struct PoincarePolynomial {
    std::int64_t b0 = 1;
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;

    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
};

/// b2 = n(k-1) + C(n,2) - n C(k,2). Throws std::invalid_argument when C(n,2) < n C(k,2).
PoincarePolynomial poincare_polynomial(const Configuration& c);
PoincarePolynomial poincare_polynomial(std::int64_t n, std::int64_t k);

std::string to_string(const PoincarePolynomial& p);

} // namespace nkconf
