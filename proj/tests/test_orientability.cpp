#include "fixtures.hpp"
#include "oracles.hpp"

#include <nkconf/enumerate.hpp>
#include <nkconf/orientability.hpp>

#include <gtest/gtest.h>

using namespace nkconf;

namespace {

const std::vector<OrientabilityOptions>& all_modes()
{
    static const std::vector<OrientabilityOptions> modes = [] {
        std::vector<OrientabilityOptions> out;
        for (auto s : {SymmetryBreaking::Reorientation, SymmetryBreaking::Negation})
            for (auto o : {VariableOrder::MostConstrained, VariableOrder::Lexicographic}) {
                OrientabilityOptions opt;
                opt.symmetry = s;
                opt.order = o;
                out.push_back(opt);
            }
        return out;
    }();
    return modes;
}

void expect_sound(const Rank3Matroid& m, const OrientabilityResult& r)
{
    if (r.outcome != Orientability::Orientable) {
        EXPECT_FALSE(r.witness.has_value());
        return;
    }
    ASSERT_TRUE(r.witness.has_value());
    const ValidationReport check = is_chirotope(*r.witness, m);
    EXPECT_TRUE(check.valid()) << check.summary();
}

void expect_matches_oracle(const Configuration& c)
{
    const Rank3Matroid m = generalize(c);
    const oracle::NaiveOrientability expected = oracle::naive_orientability(m);
    if (expected.orientable) {
        EXPECT_TRUE(is_chirotope(*expected.witness, m).valid());
    }
    for (const auto& opt : all_modes()) {
        const OrientabilityResult r = orientability(m, opt);
        EXPECT_EQ(r.outcome == Orientability::Orientable, expected.orientable) << c.n() << "_" << c.k();
        EXPECT_NE(r.outcome, Orientability::BudgetExceeded);
        expect_sound(m, r);
    }
}

} // namespace

TEST(Orientability, FanoIsNotOrientable)
{
    const Rank3Matroid m = generalize(fixtures::fano());
    for (const auto& opt : all_modes())
        EXPECT_EQ(orientability(m, opt).outcome, Orientability::NonOrientable);
    EXPECT_FALSE(oracle::naive_orientability(m).orientable);
}

TEST(Orientability, MobiusKantorIsNotOrientable)
{
    const Rank3Matroid m = generalize(fixtures::mobius_kantor());
    for (const auto& opt : all_modes())
        EXPECT_EQ(orientability(m, opt).outcome, Orientability::NonOrientable);
    EXPECT_FALSE(oracle::naive_orientability(m).orientable);
}

TEST(Orientability, FreeMatroidsAreOrientable)
{
    for (int n = 3; n <= 8; ++n)
        for (const auto& opt : all_modes()) {
            const Rank3Matroid m = free_matroid(n);
            const OrientabilityResult r = orientability(m, opt);
            EXPECT_EQ(r.outcome, Orientability::Orientable) << n;
            expect_sound(m, r);
        }
}

TEST(Orientability, FreeFiveMatroidHasPointWitness)
{
    std::mt19937_64 rng(17);
    std::vector<RationalPoint> points;
    Chirotope chi;
    do {
        points = oracle::random_points(5, 20, rng);
        chi = chirotope_from_points(points);
    } while (zero_set_matroid(chi).collinear().size() != 0);
    EXPECT_TRUE(is_chirotope(chi, free_matroid(5)).valid());
    EXPECT_EQ(orientability(free_matroid(5)).outcome, Orientability::Orientable);
}

TEST(Orientability, CoordinateBackedConfigurationsAreOrientable)
{
    for (const std::string name : {"pappus", "desargues"}) {
        const Configuration c = fixtures::load(name + ".json");
        const auto points = parse_points(read_file(fixtures::data_path(name + ".points.json")));
        const Chirotope chi = chirotope_from_points(points);
        const Rank3Matroid m = generalize(c);
        EXPECT_TRUE(is_chirotope(chi, m).valid()) << name;
        for (const auto& opt : all_modes()) {
            const OrientabilityResult r = orientability(m, opt);
            EXPECT_EQ(r.outcome, Orientability::Orientable) << name;
            expect_sound(m, r);
        }
    }
}

TEST(Orientability, MatchesNaiveOracleOnSmallCensus)
{
    for (int n = 7; n <= 9; ++n)
        for (const auto& c : enumerate_naive(n, 3))
            expect_matches_oracle(c);
}

TEST(Orientability, MatchesNaiveOracleBeyondTheSmallCensus)
{
    for (int n : {10, 11})
        for (const auto& e : enumerate_configurations(n, 3).entries)
            expect_matches_oracle(e.configuration);
    expect_matches_oracle(fixtures::cyclic(13, {0, 1, 3, 9}));
}

TEST(Orientability, VerdictsIndependentOfHeuristicsOnLargerCensus)
{
    for (int n : {10, 11, 12}) {
        for (const auto& e : enumerate_configurations(n, 3).entries) {
            const Rank3Matroid m = generalize(e.configuration);
            OrientabilityOptions a;
            OrientabilityOptions b;
            b.order = VariableOrder::Lexicographic;
            const OrientabilityResult ra = orientability(m, a);
            const OrientabilityResult rb = orientability(m, b);
            EXPECT_EQ(ra.outcome, rb.outcome);
            expect_sound(m, ra);
            expect_sound(m, rb);
        }
    }
}

TEST(Orientability, DegenerateMatroids)
{
    EXPECT_EQ(orientability(Rank3Matroid(3, {{0, 1, 2}})).outcome, Orientability::NonOrientable);
    EXPECT_EQ(orientability(Rank3Matroid(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})).outcome,
              Orientability::NonOrientable);
    const Rank3Matroid near_pencil(5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    const OrientabilityResult r = orientability(near_pencil);
    EXPECT_EQ(r.outcome, Orientability::Orientable);
    expect_sound(near_pencil, r);
}

TEST(Orientability, BudgetIsReportedNotMistakenForNonOrientable)
{
    OrientabilityOptions opt;
    opt.node_budget = 1;
    opt.symmetry = SymmetryBreaking::Negation;
    opt.order = VariableOrder::Lexicographic;
    const OrientabilityResult r = orientability(generalize(fixtures::cyclic(13, {0, 1, 3, 9})), opt);
    EXPECT_EQ(r.outcome, Orientability::BudgetExceeded);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_LE(r.stats.nodes, 2u);
}

TEST(Orientability, StatisticsArePopulated)
{
    const OrientabilityResult r = orientability(generalize(fixtures::load("pappus.json")));
    EXPECT_GT(r.stats.nodes, 0u);
    EXPECT_GT(r.stats.propagations, 0u);
    EXPECT_GE(r.stats.elapsed_seconds, 0.0);
    EXPECT_EQ(to_string(Orientability::Orientable), "Orientable");
    EXPECT_EQ(to_string(Orientability::NonOrientable), "NonOrientable");
    EXPECT_EQ(to_string(Orientability::BudgetExceeded), "BudgetExceeded");
}
