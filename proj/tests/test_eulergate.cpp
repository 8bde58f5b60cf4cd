#include <nkconf/eulergate.hpp>

#include <gtest/gtest.h>

using namespace nkconf;

namespace {

// Direct count of a pl-realization of a general-position n_k configuration, on the sphere:
// every projective crossing appears twice. n points of multiplicity k, the remaining line
// pairs meet in simple crossings; each line carries k + (simple crossings on it) vertices.
EulerCounts counted(std::int64_t n, std::int64_t k)
{
    const std::int64_t pairs = n * (n - 1) / 2;
    const std::int64_t simple = pairs - n * (k * (k - 1) / 2);
    const std::int64_t per_line = k + (n - 1 - k * (k - 1));
    const std::int64_t f0 = 2 * (n + simple);
    const std::int64_t f1 = 2 * n * per_line;
    const std::int64_t f2 = f1 - f0 + 2;
    return {f0, f1, f2, 2 * f1 - 3 * f2};
}

} // namespace

TEST(EulerCounts, Examples)
{
    EXPECT_EQ(euler_counts(16, 4), (EulerCounts{80, 224, 146, 10}));
    EXPECT_EQ(euler_counts(15, 4), (EulerCounts{60, 180, 122, -6}));
    EXPECT_EQ(euler_counts(21, 4), (EulerCounts{210, 504, 296, 120}));
}

TEST(EulerCounts, MatchDirectCount)
{
    for (std::int64_t k = 3; k <= 8; ++k)
        for (std::int64_t n = k * (k - 1) + 1; n <= 60; ++n)
            EXPECT_EQ(euler_counts(n, k), counted(n, k)) << n << "_" << k;
}

TEST(EulerCounts, EulerIdentityFromFields)
{
    for (std::int64_t k = 3; k <= 12; ++k)
        for (std::int64_t n = 1; n <= 400; ++n) {
            const EulerCounts c = euler_counts(n, k);
            EXPECT_EQ(c.f0 - c.f1 + c.f2, 2);
            EXPECT_EQ(c.digon_slack, 2 * c.f1 - 3 * c.f2);
        }
}

TEST(EulerCounts, RejectsOutsideDomain)
{
    EXPECT_THROW(euler_counts(16, 2), std::invalid_argument);
    EXPECT_THROW(euler_counts(0, 4), std::invalid_argument);
    EXPECT_THROW(euler_counts(-5, 4), std::invalid_argument);
    EXPECT_THROW(feasibility_gate(16, 2), std::invalid_argument);
    EXPECT_THROW(min_gate_passing_n(2), std::invalid_argument);
    EXPECT_THROW(euler_counts(std::int64_t{1} << 50, 4), std::overflow_error);
}

TEST(EulerCounts, LargeValuesStayExact)
{
    const std::int64_t n = 2'000'000'000;
    const EulerCounts c = euler_counts(n, 4);
    EXPECT_EQ(c.f0, n * (n - 11));
    EXPECT_EQ(c.f0 - c.f1 + c.f2, 2);
    EXPECT_THROW(euler_counts(3'000'000'000, 4), std::overflow_error);
}

TEST(Gate, Examples)
{
    const GateVerdict g15 = feasibility_gate(15, 4);
    EXPECT_EQ(g15.verdict, Verdict::Impossible);
    EXPECT_EQ(g15.threshold, 15);
    EXPECT_EQ(g15.expression_value, 6);
    EXPECT_EQ(feasibility_gate(16, 4).verdict, Verdict::Unresolved);
    EXPECT_EQ(feasibility_gate(7, 3).verdict, Verdict::Impossible);
    EXPECT_EQ(feasibility_gate(8, 3).verdict, Verdict::Unresolved);
    EXPECT_EQ(to_string(Verdict::Impossible), "Impossible");
    EXPECT_EQ(to_string(Verdict::Unresolved), "Unresolved");
}

TEST(Gate, MinPassingN)
{
    EXPECT_EQ(min_gate_passing_n(4), 16);
    EXPECT_EQ(min_gate_passing_n(3), 8);
    EXPECT_EQ(min_gate_passing_n(5), 26);
}

TEST(Gate, BoundarySweep)
{
    for (std::int64_t k = 3; k <= 12; ++k) {
        EXPECT_EQ(feasibility_gate(k * k + k - 5, k).verdict, Verdict::Impossible) << k;
        EXPECT_EQ(feasibility_gate(k * k + k - 4, k).verdict, Verdict::Unresolved) << k;
        EXPECT_EQ(min_gate_passing_n(k), k * k + k - 4);
    }
}

TEST(Gate, VerdictEquivalencesEverywhere)
{
    for (std::int64_t k = 3; k <= 12; ++k)
        for (std::int64_t n = 1; n <= 10 * k * k; ++n) {
            const GateVerdict g = feasibility_gate(n, k);
            const bool impossible = g.verdict == Verdict::Impossible;
            EXPECT_EQ(impossible, g.expression_value > 0);
            EXPECT_EQ(impossible, n <= k * k + k - 5);
            EXPECT_EQ(impossible, euler_counts(n, k).digon_slack < 0) << n << "_" << k;
            EXPECT_EQ(euler_counts(n, k).digon_slack, -g.expression_value);
        }
}

TEST(Gate, ExpressionDecreasesOnConfigurationSizes)
{
    // An n_k configuration needs n >= k(k-1)+1, which lies past the vertex of the parabola.
    for (std::int64_t k = 3; k <= 12; ++k)
        for (std::int64_t n = k * (k - 1) + 1; n < 10 * k * k; ++n)
            EXPECT_LT(gate_expression(n + 1, k), gate_expression(n, k)) << n << "_" << k;
}

TEST(Gate, ExpressionIsNotMonotoneBelowTheVertex)
{
    EXPECT_EQ(gate_expression(1, 4), 20);
    EXPECT_EQ(gate_expression(2, 4), 32);
}
