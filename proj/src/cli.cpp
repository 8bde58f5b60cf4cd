#include <nkconf/cli.hpp>

#include <nkconf/enumerate.hpp>
#include <nkconf/eulergate.hpp>
#include <nkconf/io.hpp>
#include <nkconf/matroid.hpp>
#include <nkconf/orientability.hpp>
#include <nkconf/wiring.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <map>
#include <thread>

namespace nkconf {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Globals {
    bool json = false;
    int workers = 0;

    int worker_count() const
    {
        if (workers > 0)
            return workers;
        return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
};

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct RunManifest {
    std::string command;
    json parameters = json::object();
    json input_digests = json::object();
    json elapsed_seconds = json::object();
    json result = json::object();

    json to_json() const
    {
        return {{"command", command},
                {"parameters", parameters},
                {"version", kToolVersion},
                {"input_digests", input_digests},
                {"elapsed_seconds", elapsed_seconds},
                {"result", result}};
    }
};

struct LoadedConfiguration {
    Configuration configuration;
    std::string digest;
};

LoadedConfiguration load_configuration(const std::string& path)
{
    const std::string text = read_file(path);
    return {Configuration::from_raw(parse_configuration(text)), digest_hex(text)};
}

json census_codes(const Census& census)
{
    json codes = json::array();
    for (const auto& entry : census.entries)
        codes.push_back(entry.code.hex());
    return codes;
}

json entry_json(const CensusEntry& entry)
{
    json j = {{"code", entry.code.hex()}, {"lines", entry.configuration.lines()}};
    if (entry.orientability) {
        j["orientability"] = std::string(to_string(entry.orientability->outcome));
        j["search_nodes"] = entry.orientability->stats.nodes;
    }
    return j;
}

json summary_json(const ClassificationSummary& s)
{
    return {{"classes", s.classes},
            {"orientable", s.orientable},
            {"non_orientable", s.non_orientable},
            {"budget_exceeded", s.budget_exceeded}};
}

std::string summary_line(const ClassificationSummary& s)
{
    std::string line = std::to_string(s.classes) + " classes, " + std::to_string(s.non_orientable) +
                       " non-orientable, " + std::to_string(s.orientable) + " orientable";
    if (s.budget_exceeded > 0)
        line += ", " + std::to_string(s.budget_exceeded) + " budget exceeded";
    return line;
}

// One file per class named by its code, then the manifest last so that a complete
// manifest implies complete class files.
void write_census(const fs::path& dir, const Census& census, const RunManifest& manifest, bool classified)
{
    fs::create_directories(dir);
    for (const auto& entry : census.entries)
        atomic_write(dir / (entry.code.hex() + ".json"), format_configuration_json(entry.configuration));
    json doc = {{"n", census.n}, {"k", census.k}, {"count", census.entries.size()}, {"codes", census_codes(census)}};
    if (classified) {
        json column = json::array();
        for (const auto& entry : census.entries)
            column.push_back(entry_json(entry));
        doc["classes"] = column;
        doc["summary"] = summary_json(summarize(census));
    }
    doc["manifest"] = manifest.to_json();
    atomic_write(dir / (classified ? "classification.json" : "census.json"), doc.dump(2) + "\n");
}

void add_symmetry_option(CLI::App* cmd, SymmetryBreaking& symmetry)
{
    static const std::map<std::string, SymmetryBreaking> names = {{"reorientation", SymmetryBreaking::Reorientation},
                                                                  {"negation", SymmetryBreaking::Negation}};
    cmd->add_option("--symmetry", symmetry, "Sign symmetry breaking: reorientation or negation")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

int euler_gate_command(const Globals& g, std::int64_t n, std::int64_t k, std::ostream& out)
{
    const GateVerdict verdict = feasibility_gate(n, k);
    const EulerCounts counts = euler_counts(n, k);
    if (g.json) {
        out << json{{"n", n},
                    {"k", k},
                    {"verdict", std::string(to_string(verdict.verdict))},
                    {"threshold", verdict.threshold},
                    {"expression", verdict.expression_value},
                    {"f0", counts.f0},
                    {"f1", counts.f1},
                    {"f2", counts.f2},
                    {"digon_slack", counts.digon_slack}}
                   .dump(2)
            << '\n';
        return kExitOk;
    }
    out << "n = " << n << ", k = " << k << '\n'
        << "verdict:    " << to_string(verdict.verdict) << '\n'
        << "threshold:  " << verdict.threshold << "  (Impossible iff n <= threshold)\n"
        << "expression: " << verdict.expression_value << "  (-n^2 - 5n + n k^2 + n k + 6)\n"
        << "cells:      f0 = " << counts.f0 << ", f1 = " << counts.f1 << ", f2 = " << counts.f2 << '\n'
        << "slack:      " << counts.digon_slack << "  (2 f1 - 3 f2)\n";
    return kExitOk;
}

struct CensusArgs {
    int n = 0;
    int k = 0;
    std::string out_dir;
    bool allow_large = false;
    int split_depth = EnumerateOptions{}.split_depth;
    std::uint64_t budget = 0;
    SymmetryBreaking symmetry = SymmetryBreaking::Reorientation;
};

EnumerateOptions enumerate_options(const Globals& g, const CensusArgs& a, std::ostream& err)
{
    EnumerateOptions options;
    options.workers = g.worker_count();
    options.split_depth = a.split_depth;
    options.allow_large = a.allow_large;
    options.warn = [&err](const std::string& message) { err << "warning: " << message << '\n'; };
    return options;
}

RunManifest census_manifest(const std::string& command, const CensusArgs& a)
{
    RunManifest manifest;
    manifest.command = command;
    manifest.parameters = {{"n", a.n}, {"k", a.k}, {"split_depth", a.split_depth}, {"allow_large", a.allow_large}};
    return manifest;
}

int enumerate_command(const Globals& g, const CensusArgs& a, std::ostream& out, std::ostream& err)
{
    Stopwatch clock;
    const Census census = enumerate_configurations(a.n, a.k, enumerate_options(g, a, err));
    RunManifest manifest = census_manifest("enumerate", a);
    manifest.elapsed_seconds["enumerate"] = clock.seconds();
    manifest.result = {{"classes", census.entries.size()}, {"codes", census_codes(census)}};
    if (!a.out_dir.empty())
        write_census(a.out_dir, census, manifest, false);
    if (g.json) {
        out << manifest.to_json().dump(2) << '\n';
        return kExitOk;
    }
    out << a.n << '_' << a.k << ": " << census.entries.size() << " classes\n";
    for (const auto& entry : census.entries)
        out << entry.code.hex() << '\n';
    err << "enumerated in " << manifest.elapsed_seconds["enumerate"].get<double>() << " s ("
        << census.stats.nodes << " nodes)\n";
    return kExitOk;
}

struct Classified {
    Census census;
    ClassificationSummary summary;
    RunManifest manifest;
};

Classified run_classification(const Globals& g, const CensusArgs& a, const std::string& command, std::ostream& err)
{
    Classified c;
    c.manifest = census_manifest(command, a);
    c.manifest.parameters["budget"] = a.budget;
    c.manifest.parameters["symmetry"] = a.symmetry == SymmetryBreaking::Negation ? "negation" : "reorientation";
    Stopwatch clock;
    c.census = enumerate_configurations(a.n, a.k, enumerate_options(g, a, err));
    c.manifest.elapsed_seconds["enumerate"] = clock.seconds();
    Stopwatch classify_clock;
    OrientabilityOptions options;
    options.node_budget = a.budget;
    options.symmetry = a.symmetry;
    c.summary = classify_orientability(c.census, options, g.worker_count());
    c.manifest.elapsed_seconds["classify"] = classify_clock.seconds();
    json column = json::array();
    for (const auto& entry : c.census.entries)
        column.push_back(entry_json(entry));
    c.manifest.result = {{"summary", summary_json(c.summary)}, {"classes", column}};
    if (!a.out_dir.empty())
        write_census(a.out_dir, c.census, c.manifest, true);
    return c;
}

void print_classification(const Classified& c, std::ostream& out)
{
    out << "#   code                                      outcome          nodes\n";
    for (std::size_t i = 0; i < c.census.entries.size(); ++i) {
        const CensusEntry& e = c.census.entries[i];
        std::string code = e.code.hex();
        if (code.size() > 40)
            code = code.substr(0, 37) + "...";
        char row[160];
        std::snprintf(row, sizeof row, "%-3zu %-41s %-16s %llu\n", i + 1, code.c_str(),
                      std::string(to_string(e.orientability->outcome)).c_str(),
                      static_cast<unsigned long long>(e.orientability->stats.nodes));
        out << row;
    }
    out << summary_line(c.summary) << '\n';
}

int classify_command(const Globals& g, const CensusArgs& a, std::ostream& out, std::ostream& err)
{
    const Classified c = run_classification(g, a, "classify", err);
    if (g.json)
        out << c.manifest.to_json().dump(2) << '\n';
    else
        print_classification(c, out);
    err << "enumerated in " << c.manifest.elapsed_seconds["enumerate"].get<double>() << " s, classified in "
        << c.manifest.elapsed_seconds["classify"].get<double>() << " s\n";
    return c.summary.budget_exceeded > 0 ? kExitBudget : kExitOk;
}

int reproduce_command(const Globals& g, const std::string& target, const CensusArgs& base, std::ostream& out,
                      std::ostream& err)
{
    CensusArgs a = base;
    a.k = 4;
    a.n = target == "15_4" ? 15 : 16;
    const GateVerdict gate = feasibility_gate(a.n, a.k);
    const Classified c = run_classification(g, a, "reproduce " + target, err);
    // 15_4 is ruled out by the gate, so nothing may be orientable; 16_4 passes the gate
    // and the census must consist of exactly 19 non-orientable classes.
    const bool matches = a.n == 15
                             ? gate.verdict == Verdict::Impossible && c.summary.orientable == 0 &&
                                   c.summary.budget_exceeded == 0
                             : gate.verdict == Verdict::Unresolved && c.summary.classes == 19 &&
                                   c.summary.non_orientable == 19 && c.summary.orientable == 0;
    if (g.json) {
        json doc = c.manifest.to_json();
        doc["gate"] = {{"verdict", std::string(to_string(gate.verdict))}, {"threshold", gate.threshold}};
        doc["reproduced"] = matches;
        out << doc.dump(2) << '\n';
    }
    else {
        out << "gate (" << a.n << ", " << a.k << "): " << to_string(gate.verdict) << ", threshold " << gate.threshold
            << '\n';
        out << summary_line(c.summary) << '\n';
        out << (matches ? "reproduced" : "NOT reproduced") << '\n';
    }
    if (c.summary.budget_exceeded > 0)
        return kExitBudget;
    return matches ? kExitOk : kExitNegative;
}

int orientable_command(const Globals& g, const std::string& path, std::uint64_t budget, SymmetryBreaking symmetry,
                       const std::string& witness_path, std::ostream& out)
{
    const LoadedConfiguration input = load_configuration(path);
    OrientabilityOptions options;
    options.node_budget = budget;
    options.symmetry = symmetry;
    const OrientabilityResult result = orientability(generalize(input.configuration), options);
    if (result.witness && !witness_path.empty())
        atomic_write(witness_path, format_chirotope(*result.witness));
    if (g.json) {
        json doc = {{"outcome", std::string(to_string(result.outcome))},
                    {"nodes", result.stats.nodes},
                    {"propagations", result.stats.propagations},
                    {"input_digest", input.digest}};
        if (result.witness)
            doc["witness"] = format_chirotope(*result.witness);
        out << doc.dump(2) << '\n';
    }
    else {
        out << to_string(result.outcome) << " (" << result.stats.nodes << " nodes)\n";
    }
    switch (result.outcome) {
    case Orientability::Orientable: return kExitOk;
    case Orientability::NonOrientable: return kExitNegative;
    case Orientability::BudgetExceeded: return kExitBudget;
    }
    return kExitNegative;
}

int canon_command(const Globals& g, const std::string& path, std::ostream& out)
{
    const LoadedConfiguration input = load_configuration(path);
    const CanonicalCode code = canonical_code(input.configuration);
    if (g.json)
        out << json{{"code", code.hex()}, {"input_digest", input.digest}}.dump(2) << '\n';
    else
        out << code.hex() << '\n';
    return kExitOk;
}

int iso_command(const Globals& g, const std::string& a_path, const std::string& b_path, std::ostream& out)
{
    const LoadedConfiguration a = load_configuration(a_path);
    const LoadedConfiguration b = load_configuration(b_path);
    const IsomorphismResult result = are_isomorphic(a.configuration, b.configuration);
    if (g.json) {
        json doc = {{"isomorphic", result.isomorphic}};
        if (result.witness)
            doc["witness"] = *result.witness;
        out << doc.dump(2) << '\n';
    }
    else if (result.isomorphic) {
        out << "isomorphic\nwitness:";
        for (int image : *result.witness)
            out << ' ' << image;
        out << '\n';
    }
    else {
        out << "not isomorphic\n";
    }
    return result.isomorphic ? kExitOk : kExitNegative;
}

int dual_command(const Globals& g, const std::string& path, const std::string& out_path, std::ostream& out)
{
    const Configuration dual = dualize(load_configuration(path).configuration);
    const std::string text = format_configuration_json(dual);
    if (!out_path.empty())
        atomic_write(out_path, text);
    if (g.json || out_path.empty())
        out << text;
    return kExitOk;
}

int poincare_command(const Globals& g, const std::string& path, std::ostream& out)
{
    const PoincarePolynomial p = poincare_polynomial(load_configuration(path).configuration);
    if (g.json)
        out << json{{"b0", p.b0}, {"b1", p.b1}, {"b2", p.b2}}.dump(2) << '\n';
    else
        out << to_string(p) << '\n';
    return kExitOk;
}

int verify_wiring_command(const Globals& g, const std::string& path, const std::string& config_path,
                          std::ostream& out)
{
    const WiringFile file = parse_wiring(read_file(path));
    const ValidationReport report = validate_wiring(file.diagram);
    json doc = {{"valid", report.valid()}};
    bool ok = report.valid();
    if (report.valid()) {
        const EulerCounts counts = cell_counts(file.diagram);
        doc["counts"] = {{"f0", counts.f0}, {"f1", counts.f1}, {"f2", counts.f2}, {"digon_slack", counts.digon_slack}};
        if (!config_path.empty()) {
            const Configuration c = load_configuration(config_path).configuration;
            const RealizationResult r = realizes(file.diagram, c, file.wire_to_line);
            doc["realizes"] = r.realized;
            if (r.realized) {
                doc["point_to_event"] = r.point_to_event;
                doc["matches_euler_counts"] = counts == euler_counts(c.n(), c.k());
            }
            else {
                doc["reason"] = r.reason;
            }
            ok = r.realized;
        }
    }
    else {
        json violations = json::array();
        for (const Violation& v : report.violations)
            violations.push_back(v.rule + ": " + v.detail);
        doc["violations"] = violations;
    }
    if (g.json) {
        out << doc.dump(2) << '\n';
        return ok ? kExitOk : kExitNegative;
    }
    if (!report.valid()) {
        out << "invalid wiring diagram\n" << report.summary();
        return kExitNegative;
    }
    out << "valid wiring diagram: " << file.diagram.n << " wires, " << file.diagram.events.size() << " events\n";
    out << "cells: f0 = " << doc["counts"]["f0"] << ", f1 = " << doc["counts"]["f1"] << ", f2 = " << doc["counts"]["f2"]
        << ", digon slack = " << doc["counts"]["digon_slack"] << '\n';
    if (doc.contains("realizes")) {
        if (doc["realizes"].get<bool>()) {
            out << "realizes the configuration\n";
            out << "cell counts " << (doc["matches_euler_counts"].get<bool>() ? "match" : "differ from")
                << " the general-position counts\n";
        }
        else {
            out << "does not realize the configuration: " << doc["reason"].get<std::string>() << '\n';
        }
    }
    return ok ? kExitOk : kExitNegative;
}

int render_command(const std::string& path, const std::string& out_path, int highlight, std::ostream& out)
{
    const WiringFile file = parse_wiring(read_file(path));
    const ValidationReport report = validate_wiring(file.diagram);
    if (!report.valid())
        throw ParseError("render: invalid wiring diagram\n" + report.summary());
    const std::string svg = render_svg(file.diagram, highlight);
    if (out_path.empty())
        out << svg;
    else
        atomic_write(out_path, svg);
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"n_k configurations: Euler gate, census enumeration and orientability", "nkconf"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--workers", g.workers, "Worker threads (default: hardware concurrency)")
        ->check(CLI::NonNegativeNumber);

    std::int64_t gate_n = 0, gate_k = 0;
    auto* gate = app.add_subcommand("euler-gate", "Euler-count feasibility gate for (n, k)");
    gate->add_option("--n", gate_n)->required();
    gate->add_option("--k", gate_k)->required();

    CensusArgs census_args;
    const auto add_census_options = [&](CLI::App* cmd, bool with_nk) {
        if (with_nk) {
            cmd->add_option("--n", census_args.n)->required();
            cmd->add_option("--k", census_args.k)->required();
        }
        cmd->add_option("--out", census_args.out_dir, "Directory for class files and the manifest");
        cmd->add_flag("--allow-large", census_args.allow_large, "Lift the n*k ceiling");
        cmd->add_option("--split-depth", census_args.split_depth, "Lines fixed before work is split")
            ->check(CLI::Range(1, 64));
    };
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate n_k configurations up to isomorphism");
    add_census_options(enumerate, true);
    auto* classify = app.add_subcommand("classify", "Enumerate and decide orientability of every class");
    add_census_options(classify, true);
    classify->add_option("--budget", census_args.budget, "Search node budget per class (0: unlimited)");
    add_symmetry_option(classify, census_args.symmetry);

    std::string target;
    auto* reproduce = app.add_subcommand("reproduce", "Reproduce the 15_4 or 16_4 result");
    reproduce->add_option("target", target)->required()->check(CLI::IsMember({"15_4", "16_4"}));
    add_census_options(reproduce, false);
    reproduce->add_option("--budget", census_args.budget, "Search node budget per class (0: unlimited)");
    add_symmetry_option(reproduce, census_args.symmetry);

    std::string input, second, witness_path, out_path;
    std::uint64_t budget = 0;
    SymmetryBreaking symmetry = SymmetryBreaking::Reorientation;
    auto* orientable = app.add_subcommand("orientable", "Decide orientability of a configuration's matroid");
    orientable->add_option("config", input)->required();
    orientable->add_option("--budget", budget, "Search node budget (0: unlimited)");
    orientable->add_option("--witness", witness_path, "Write the chirotope here when orientable");
    add_symmetry_option(orientable, symmetry);

    auto* canon = app.add_subcommand("canon", "Print the canonical code");
    canon->add_option("config", input)->required();

    auto* iso = app.add_subcommand("iso", "Test two configurations for isomorphism");
    iso->add_option("a", input)->required();
    iso->add_option("b", second)->required();

    auto* dual = app.add_subcommand("dual", "Print the dual configuration");
    dual->add_option("config", input)->required();
    dual->add_option("-o,--output", out_path);

    auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of the general-position arrangement");
    poincare->add_option("config", input)->required();

    std::string config_path;
    auto* verify = app.add_subcommand("verify-wiring", "Validate a wiring diagram, optionally against a configuration");
    verify->add_option("wiring", input)->required();
    verify->add_option("--config", config_path);

    int highlight = 0;
    auto* render = app.add_subcommand("render", "Draw a wiring diagram as SVG");
    render->add_option("wiring", input)->required();
    render->add_option("-o,--output", out_path);
    render->add_option("--highlight", highlight, "Fill events of at least this size (default: largest, if >= 3)");

    for (CLI::App* cmd : app.get_subcommands({}))
        cmd->fallthrough();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*gate)
            return euler_gate_command(g, gate_n, gate_k, out);
        if (*enumerate)
            return enumerate_command(g, census_args, out, err);
        if (*classify)
            return classify_command(g, census_args, out, err);
        if (*reproduce)
            return reproduce_command(g, target, census_args, out, err);
        if (*orientable)
            return orientable_command(g, input, budget, symmetry, witness_path, out);
        if (*canon)
            return canon_command(g, input, out);
        if (*iso)
            return iso_command(g, input, second, out);
        if (*dual)
            return dual_command(g, input, out_path, out);
        if (*poincare)
            return poincare_command(g, input, out);
        if (*verify)
            return verify_wiring_command(g, input, config_path, out);
        if (*render)
            return render_command(input, out_path, highlight, out);
    }
    catch (const InvalidConfiguration& e) {
        err << "error: invalid configuration\n" << e.report().summary();
        return kExitBadInput;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}

} // namespace nkconf
