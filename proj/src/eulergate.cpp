#include <nkconf/eulergate.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace nkconf {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide value, const char* what)
{
    if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(value);
}

void check_domain(std::int64_t n, std::int64_t k)
{
    if (k < 3)
        throw std::invalid_argument("k must be at least 3 (got " + std::to_string(k) + ")");
    if (n < 1)
        throw std::invalid_argument("n must be positive (got " + std::to_string(n) + ")");
    // Keeps every intermediate product well inside 128 bits.
    constexpr std::int64_t limit = std::int64_t{1} << 40;
    if (n > limit || k > limit)
        throw std::overflow_error("n or k too large for exact counting");
}

} // namespace

EulerCounts counts_from_graph(std::int64_t f0, std::int64_t f1)
{
    EulerCounts c;
    c.f0 = f0;
    c.f1 = f1;
    c.f2 = narrow(Wide{f1} - f0 + 2, "f2");
    c.digon_slack = narrow(Wide{2} * f1 - Wide{3} * c.f2, "digon slack");
    return c;
}

EulerCounts euler_counts(std::int64_t n, std::int64_t k)
{
    check_domain(n, k);
    const Wide wn = n, wk = k;
    const std::int64_t f0 = narrow(wn * (wn - wk * (wk - 1) + 1), "f0");
    const std::int64_t f1 = narrow(2 * wn * (wn - wk * wk + 2 * wk - 1), "f1");
    return counts_from_graph(f0, f1);
}

std::int64_t gate_expression(std::int64_t n, std::int64_t k)
{
    check_domain(n, k);
    const Wide wn = n, wk = k;
    return narrow(-wn * wn - 5 * wn + wn * wk * wk + wn * wk + 6, "gate expression");
}

GateVerdict feasibility_gate(std::int64_t n, std::int64_t k)
{
    GateVerdict g;
    g.expression_value = gate_expression(n, k);
    g.threshold = narrow(Wide{k} * k + k - 5, "threshold");
    g.verdict = g.expression_value > 0 ? Verdict::Impossible : Verdict::Unresolved;
    return g;
}

std::int64_t min_gate_passing_n(std::int64_t k)
{
    check_domain(1, k);
    return narrow(Wide{k} * k + k - 4, "k^2 + k - 4");
}

std::string_view to_string(Verdict v)
{
    return v == Verdict::Impossible ? "Impossible" : "Unresolved";
}

} // namespace nkconf
