#pragma once

// Independent reference implementations used only by the tests.

#include <nkconf/chirotope.hpp>
#include <nkconf/matroid.hpp>
#include <nkconf/rank3_matroid.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

struct NaiveOrientability {
    bool orientable = false;
    std::optional<nkconf::Chirotope> witness;
    std::uint64_t nodes = 0;
};

// Depth-first search over the signs of all triples in lexicographic order, with only the
// first basis triple fixed to +1. Each (5-subset, pivot) relation is checked once all six of
// its triples are assigned; there is no propagation.
NaiveOrientability naive_orientability(const nkconf::Rank3Matroid& m);

// Poincare polynomial from the Moebius function of the lattice of flats (rank 2 flats are
// closures of point pairs), without using the closed form.
nkconf::PoincarePolynomial poincare_by_moebius(const nkconf::Rank3Matroid& m);

struct XmlCheck {
    bool well_formed = false;
    std::string error;
    std::map<std::string, int> element_counts;
};

// Minimal XML checker: declaration, nested elements with quoted attributes, text.
XmlCheck check_xml(const std::string& text);

std::vector<int> random_permutation(int n, std::mt19937_64& rng);

// Distinct points with small rational coordinates (collinear triples likely when the range is small).
std::vector<nkconf::RationalPoint> random_points(int count, int range, std::mt19937_64& rng);

} // namespace oracle
