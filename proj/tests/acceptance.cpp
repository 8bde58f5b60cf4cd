// Acceptance checks: one line per criterion, nonzero exit if any fails.

#include "fixtures.hpp"
#include "oracles.hpp"

#include <nkconf/enumerate.hpp>
#include <nkconf/eulergate.hpp>
#include <nkconf/matroid.hpp>
#include <nkconf/orientability.hpp>
#include <nkconf/wiring.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace nkconf;

namespace {

// Time limits, in seconds.
constexpr double kGateLimit = 1.0;
constexpr double kCensusLimit = 30 * 60.0;
constexpr double kPerClassLimit = 60.0;

constexpr int kRelabelingsPerEntry = 100;
constexpr int kRandomPointSets = 200;
constexpr int kMaxRandomPoints = 8;

class Clock {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& failure)
    {
        if (!condition && pass) {
            pass = false;
            detail.str("");
            detail << failure;
        }
    }
};

// The 16_4 census is needed by several criteria; compute it once.
const Census& census_16_4(double* elapsed = nullptr)
{
    static double seconds = 0.0;
    static const Census census = [] {
        Clock clock;
        Census c = enumerate_configurations(16, 4);
        seconds = clock.seconds();
        return c;
    }();
    if (elapsed)
        *elapsed = seconds;
    return census;
}

std::vector<CanonicalCode> codes_of(const Census& census)
{
    std::vector<CanonicalCode> codes;
    for (const auto& e : census.entries)
        codes.push_back(e.code);
    return codes;
}

void gate_reproduction(Outcome& o)
{
    Clock clock;
    o.require(feasibility_gate(15, 4).verdict == Verdict::Impossible, "(15,4) not Impossible");
    o.require(feasibility_gate(16, 4).verdict == Verdict::Unresolved, "(16,4) not Unresolved");
    for (std::int64_t k = 3; k <= 12; ++k) {
        o.require(feasibility_gate(k * k + k - 5, k).verdict == Verdict::Impossible,
                  "n = k^2+k-5 not Impossible at k = " + std::to_string(k));
        o.require(feasibility_gate(k * k + k - 4, k).verdict == Verdict::Unresolved,
                  "n = k^2+k-4 not Unresolved at k = " + std::to_string(k));
    }
    const double t = clock.seconds();
    o.require(t < kGateLimit, "took " + std::to_string(t) + " s");
    if (o.pass)
        o.detail << "(15,4) Impossible, (16,4) Unresolved, boundary exact for k = 3..12 in " << t << " s";
}

void census_reproduction(Outcome& o)
{
    double t = 0.0;
    const Census& census = census_16_4(&t);
    o.require(census.entries.size() == 19, std::to_string(census.entries.size()) + " classes");
    o.require(t < kCensusLimit, "took " + std::to_string(t) + " s");
    if (o.pass)
        o.detail << "19 classes in " << t << " s";
}

void orientability_reproduction(Outcome& o)
{
    const Census& census = census_16_4();
    double slowest = 0.0;
    std::uint64_t nodes = 0;
    int non_orientable = 0;
    for (std::size_t i = 0; i < census.entries.size(); ++i) {
        Clock clock;
        const OrientabilityResult r = orientability(generalize(census.entries[i].configuration));
        const double t = clock.seconds();
        slowest = std::max(slowest, t);
        nodes += r.stats.nodes;
        o.require(r.outcome == Orientability::NonOrientable,
                  "class " + std::to_string(i + 1) + " is " + std::string(to_string(r.outcome)));
        o.require(t < kPerClassLimit, "class " + std::to_string(i + 1) + " took " + std::to_string(t) + " s");
        non_orientable += r.outcome == Orientability::NonOrientable;
    }
    o.require(census.entries.size() == 19, "census has " + std::to_string(census.entries.size()) + " classes");
    if (o.pass)
        o.detail << non_orientable << "/19 NonOrientable, 0 BudgetExceeded, " << nodes
                 << " search nodes, slowest class " << slowest << " s";
}

void gate_orientability_consistency(Outcome& o)
{
    Census census = enumerate_configurations(15, 4);
    const ClassificationSummary s = classify_orientability(census);
    o.require(s.classes > 0, "empty 15_4 census");
    o.require(s.non_orientable == s.classes,
              std::to_string(s.orientable) + " Orientable, " + std::to_string(s.budget_exceeded) + " BudgetExceeded");
    if (o.pass)
        o.detail << s.classes << " classes of 15_4, all NonOrientable";
}

void oracle_equivalence(Outcome& o)
{
    std::ostringstream counts;
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}, {9, 3}, {10, 3}, {13, 4}}) {
        std::set<CanonicalCode> naive;
        for (const auto& c : enumerate_naive(n, k))
            naive.insert(canonical_code(c));
        const auto fast = codes_of(enumerate_configurations(n, k));
        const std::set<CanonicalCode> fast_set(fast.begin(), fast.end());
        o.require(fast_set == naive && fast.size() == fast_set.size(),
                  "class sets differ at (" + std::to_string(n) + "," + std::to_string(k) + ")");
        counts << ' ' << n << '_' << k << '=' << naive.size();
    }
    if (o.pass)
        o.detail << "identical class sets:" << counts.str();
}

void positive_controls(Outcome& o)
{
    for (int n = 5; n <= 8; ++n) {
        const OrientabilityResult r = orientability(free_matroid(n));
        o.require(r.outcome == Orientability::Orientable && r.witness &&
                      is_chirotope(*r.witness, free_matroid(n)).valid(),
                  "free matroid on " + std::to_string(n) + " points");
    }

    const Configuration pappus = fixtures::load("pappus.json");
    const auto points = parse_points(read_file(fixtures::data_path("pappus.points.json")));
    const Rank3Matroid m = generalize(pappus);
    o.require(is_chirotope(chirotope_from_points(points), m).valid(), "Pappus coordinates give no witness");
    const OrientabilityResult r = orientability(m);
    o.require(r.outcome == Orientability::Orientable && r.witness && is_chirotope(*r.witness, m).valid(),
              "Pappus 9_3 not Orientable");

    std::mt19937_64 rng(2024);
    int accepted = 0;
    for (int trial = 0; trial < kRandomPointSets; ++trial) {
        const int count = 3 + trial % (kMaxRandomPoints - 2);
        // Fully collinear sets have no chirotope at all, so they are redrawn.
        Chirotope chi;
        do
            chi = chirotope_from_points(oracle::random_points(count, 3, rng));
        while (std::all_of(chi.signs().begin(), chi.signs().end(), [](Sign s) { return s == Sign::Zero; }));
        const ValidationReport report = is_chirotope(chi, zero_set_matroid(chi));
        o.require(report.valid(), "random point set " + std::to_string(trial) + ": " + report.summary());
        accepted += report.valid();
    }
    if (o.pass)
        o.detail << "free 5..8 and Pappus Orientable; " << accepted << "/" << kRandomPointSets
                 << " random point chirotopes accepted";
}

void geometry_consistency(Outcome& o)
{
    int checked = 0;
    for (const auto& entry : std::filesystem::directory_iterator(NKCONF_DATA_DIR)) {
        if (entry.path().extension() != ".wiring")
            continue;
        const WiringFile file = parse_wiring(read_file(entry.path()));
        if (!validate_wiring(file.diagram).valid() || file.wire_to_line.empty())
            continue;
        const auto config_path = std::filesystem::path(entry.path()).replace_extension(".json");
        const Configuration c = fixtures::load(config_path.filename().string());
        const std::string name = entry.path().filename().string();
        o.require(realizes(file.diagram, c, file.wire_to_line).realized, name + " does not realize its configuration");
        const EulerCounts counts = cell_counts(file.diagram);
        o.require(counts == euler_counts(c.n(), c.k()), name + ": counts differ from euler_counts");
        o.require(counts.f0 - counts.f1 + counts.f2 == 2, name + ": Euler characteristic");
        o.require(3 * counts.f2 <= 2 * counts.f1, name + ": 3 f2 > 2 f1");
        ++checked;
    }
    o.require(checked >= 2, "only " + std::to_string(checked) + " realizing diagrams bundled");
    if (o.pass)
        o.detail << checked << " bundled realizing diagrams match euler_counts field by field";
}

void invariant_suites(Outcome& o)
{
    std::mt19937_64 rng(8);
    std::vector<const Census*> censuses{&census_16_4()};
    const Census c12 = enumerate_configurations(12, 3);
    censuses.push_back(&c12);

    std::size_t relabelings = 0;
    std::size_t classes = 0;
    for (const Census* census : censuses)
        for (const auto& e : census->entries) {
            for (int t = 0; t < kRelabelingsPerEntry; ++t) {
                const auto perm = oracle::random_permutation(e.configuration.n(), rng);
                o.require(canonical_code(relabel(e.configuration, perm)) == e.code, "code changed under relabeling");
                ++relabelings;
            }
            const Configuration dd = dualize(dualize(e.configuration));
            o.require(are_isomorphic(dd, e.configuration).isomorphic, "dualize is not an involution");
            ++classes;
        }

    std::size_t reorientations = 0;
    for (const auto& e : c12.entries) {
        const Rank3Matroid m = generalize(e.configuration);
        const OrientabilityResult r = orientability(m);
        if (!r.witness)
            continue;
        for (int t = 0; t < 5; ++t) {
            std::vector<int> flips;
            for (int p = 0; p < m.n(); ++p)
                if (rng() & 1)
                    flips.push_back(p);
            o.require(is_chirotope(reorient(*r.witness, flips), m).valid(), "reorientation broke a witness");
            ++reorientations;
        }
    }
    o.require(reorientations > 0, "no witnesses to reorient");

    const auto reference = codes_of(census_16_4());
    for (int workers : {1, 2, 8}) {
        EnumerateOptions opt;
        opt.workers = workers;
        o.require(codes_of(enumerate_configurations(16, 4, opt)) == reference,
                  "16_4 census differs with " + std::to_string(workers) + " workers");
    }
    if (o.pass)
        o.detail << relabelings << " relabelings, " << reorientations
                 << " reoriented witnesses, dual involution on " << classes
                 << " classes, 16_4 census identical for 1/2/8 workers";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"gate reproduction", gate_reproduction},
        {"census reproduction", census_reproduction},
        {"orientability reproduction", orientability_reproduction},
        {"gate/orientability consistency", gate_orientability_consistency},
        {"oracle equivalence", oracle_equivalence},
        {"positive controls", positive_controls},
        {"geometry/counting consistency", geometry_consistency},
        {"invariant suites", invariant_suites},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        }
        catch (const std::exception& e) {
            o.pass = false;
            o.detail.str("");
            o.detail << "exception: " << e.what();
        }
        failures += !o.pass;
        std::cout << "[PRIMARY] " << i + 1 << ' ' << criteria[i].first << ": " << (o.pass ? "PASS" : "FAIL") << " ("
                  << o.detail.str() << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
