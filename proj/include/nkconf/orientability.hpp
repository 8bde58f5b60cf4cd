#pragma once

#include <nkconf/chirotope.hpp>

#include <cstdint>
#include <optional>
#include <string_view>

namespace nkconf {

enum class Orientability { Orientable, NonOrientable, BudgetExceeded };

/// How sign symmetries are broken before the search starts.
enum class SymmetryBreaking {
    /// Fix the lexicographically first basis triple to +1 (removes chi <-> -chi only).
    Negation,
    /// Fix a maximal set of basis triples whose element sets are independent over GF(2)
    /// to +1; every reorientation class keeps a representative.
    Reorientation,
};

enum class VariableOrder {
    /// Unassigned triple sharing the most GP constraints with assigned triples; ties lexicographic.
    MostConstrained,
    Lexicographic,
};

struct OrientabilityOptions {
    std::uint64_t node_budget = 0; ///< 0 means unlimited
    SymmetryBreaking symmetry = SymmetryBreaking::Reorientation;
    VariableOrder order = VariableOrder::MostConstrained;
};

struct SearchStatistics {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    double elapsed_seconds = 0.0;
};

struct OrientabilityResult {
    Orientability outcome = Orientability::BudgetExceeded;
    /// Present iff outcome is Orientable; always passes is_chirotope against the input matroid.
    std::optional<Chirotope> witness;
    SearchStatistics stats;
};

/// Backtracking search for a chirotope with zero set m.collinear(), with unit propagation
/// of the three-term Grassmann-Pluecker sign constraints. NonOrientable is only reported
/// after the search space is exhausted. Throws std::invalid_argument when m.n() < 3.
OrientabilityResult orientability(const Rank3Matroid& m, const OrientabilityOptions& options = {});

std::string_view to_string(Orientability o);

} // namespace nkconf
