#include <nkconf/io.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unistd.h>

namespace nkconf {

namespace {

using nlohmann::json;

// Splits into whitespace-separated tokens per non-empty line, dropping '#' comments.
std::vector<std::vector<std::string>> token_lines(std::string_view text)
{
    std::vector<std::vector<std::string>> result;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string token; fields >> token;)
            tokens.push_back(token);
        if (!tokens.empty())
            result.push_back(std::move(tokens));
    }
    return result;
}

std::int64_t parse_integer(const std::string& token, const char* what)
{
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    }
    catch (const std::exception&) {
        throw ParseError(std::string(what) + ": expected an integer, got '" + token + "'");
    }
    if (used != token.size())
        throw ParseError(std::string(what) + ": expected an integer, got '" + token + "'");
    return value;
}

int parse_int(const std::string& token, const char* what)
{
    const std::int64_t value = parse_integer(token, what);
    if (value < INT32_MIN || value > INT32_MAX)
        throw ParseError(std::string(what) + ": '" + token + "' is out of range");
    return static_cast<int>(value);
}

std::int64_t json_integer(const json& value, const char* what)
{
    if (!value.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return value.get<std::int64_t>();
}

json parse_json(std::string_view text, const char* what)
{
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

RawConfiguration configuration_from_json(std::string_view text)
{
    const json doc = parse_json(text, "configuration");
    if (!doc.is_object())
        throw ParseError("configuration: expected a JSON object");
    for (const char* key : {"n", "k", "lines"})
        if (!doc.contains(key))
            throw ParseError(std::string("configuration: missing \"") + key + "\"");
    RawConfiguration raw;
    raw.n = json_integer(doc["n"], "configuration: \"n\"");
    raw.k = json_integer(doc["k"], "configuration: \"k\"");
    if (!doc["lines"].is_array())
        throw ParseError("configuration: \"lines\" must be an array");
    for (const json& line : doc["lines"]) {
        if (!line.is_array())
            throw ParseError("configuration: every line must be an array of point indices");
        std::vector<std::int64_t> points;
        for (const json& p : line)
            points.push_back(json_integer(p, "configuration: point index"));
        raw.lines.push_back(std::move(points));
    }
    return raw;
}

RawConfiguration configuration_from_text(std::string_view text)
{
    const auto rows = token_lines(text);
    if (rows.empty() || rows[0].size() != 2)
        throw ParseError("configuration: first line must be \"n k\"");
    RawConfiguration raw;
    raw.n = parse_integer(rows[0][0], "configuration: n");
    raw.k = parse_integer(rows[0][1], "configuration: k");
    for (std::size_t r = 1; r < rows.size(); ++r) {
        std::vector<std::int64_t> points;
        for (const std::string& token : rows[r])
            points.push_back(parse_integer(token, "configuration: point index"));
        raw.lines.push_back(std::move(points));
    }
    return raw;
}

} // namespace

RawConfiguration parse_configuration(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw ParseError("configuration: empty input");
    return text[first] == '{' ? configuration_from_json(text) : configuration_from_text(text);
}

std::string format_configuration_json(const Configuration& c)
{
    std::ostringstream out;
    out << "{\"n\": " << c.n() << ", \"k\": " << c.k() << ", \"lines\": [";
    for (std::size_t i = 0; i < c.lines().size(); ++i) {
        out << (i ? ", " : "") << '[';
        for (std::size_t j = 0; j < c.lines()[i].size(); ++j)
            out << (j ? ", " : "") << c.lines()[i][j];
        out << ']';
    }
    out << "]}\n";
    return out.str();
}

std::string format_configuration_text(const Configuration& c)
{
    std::ostringstream out;
    out << c.n() << ' ' << c.k() << '\n';
    for (const auto& line : c.lines()) {
        for (std::size_t j = 0; j < line.size(); ++j)
            out << (j ? " " : "") << line[j];
        out << '\n';
    }
    return out.str();
}

Chirotope parse_chirotope(std::string_view text)
{
    const auto rows = token_lines(text);
    if (rows.empty() || rows[0].size() != 1)
        throw ParseError("chirotope: first line must be the element count");
    const int n = parse_int(rows[0][0], "chirotope: n");
    if (n < 3 || n > kMaxPoints)
        throw ParseError("chirotope: element count must lie in 3.." + std::to_string(kMaxPoints));
    std::string signs;
    for (std::size_t r = 1; r < rows.size(); ++r)
        for (const std::string& token : rows[r])
            signs += token;
    const std::int64_t expected = binomial(n, 3);
    if (static_cast<std::int64_t>(signs.size()) != expected)
        throw ParseError("chirotope: expected " + std::to_string(expected) + " signs, got " +
                         std::to_string(signs.size()));
    std::vector<Sign> values;
    values.reserve(signs.size());
    for (char ch : signs) {
        switch (ch) {
        case '+': values.push_back(Sign::Positive); break;
        case '-': values.push_back(Sign::Negative); break;
        case '0': values.push_back(Sign::Zero); break;
        default: throw ParseError(std::string("chirotope: unexpected character '") + ch + "'");
        }
    }
    return Chirotope(n, std::move(values));
}

std::string format_chirotope(const Chirotope& chi)
{
    std::string out = std::to_string(chi.n()) + '\n';
    for (Sign s : chi.signs())
        out += sign_char(s);
    out += '\n';
    return out;
}

WiringFile parse_wiring(std::string_view text)
{
    const auto rows = token_lines(text);
    if (rows.empty() || rows[0].size() != 2)
        throw ParseError("wiring: first line must be \"n m\"");
    WiringFile file;
    file.diagram.n = parse_int(rows[0][0], "wiring: n");
    const int m = parse_int(rows[0][1], "wiring: m");
    if (file.diagram.n < 0 || m < 0)
        throw ParseError("wiring: counts must be non-negative");
    if (file.diagram.n > kMaxPoints)
        throw ParseError("wiring: at most " + std::to_string(kMaxPoints) + " wires are supported");
    if (static_cast<int>(rows.size()) < 1 + m)
        throw ParseError("wiring: expected " + std::to_string(m) + " event lines, got " +
                         std::to_string(rows.size() - 1));
    for (int e = 1; e <= m; ++e) {
        if (rows[e].size() != 2)
            throw ParseError("wiring: event line " + std::to_string(e) + " must be \"p s\"");
        file.diagram.events.push_back(
            {parse_int(rows[e][0], "wiring: position"), parse_int(rows[e][1], "wiring: size")});
    }
    std::size_t r = 1 + m;
    if (r == rows.size())
        return file;
    if (rows[r][0] != "map")
        throw ParseError("wiring: unexpected content after the events: '" + rows[r][0] + "'");
    for (std::size_t i = 1; i < rows[r].size(); ++i)
        file.wire_to_line.push_back(parse_int(rows[r][i], "wiring: map entry"));
    for (++r; r < rows.size(); ++r)
        for (const std::string& token : rows[r])
            file.wire_to_line.push_back(parse_int(token, "wiring: map entry"));
    if (static_cast<int>(file.wire_to_line.size()) != file.diagram.n)
        throw ParseError("wiring: map has " + std::to_string(file.wire_to_line.size()) + " entries for " +
                         std::to_string(file.diagram.n) + " wires");
    return file;
}

std::string format_wiring(const WiringDiagram& w, std::span<const int> wire_to_line)
{
    std::ostringstream out;
    out << w.n << ' ' << w.events.size() << '\n';
    for (const CrossingEvent& e : w.events)
        out << e.position << ' ' << e.size << '\n';
    if (!wire_to_line.empty()) {
        out << "map";
        for (int line : wire_to_line)
            out << ' ' << line;
        out << '\n';
    }
    return out.str();
}

Rational parse_rational(std::string_view text)
{
    using boost::multiprecision::cpp_int;
    const auto slash = text.find('/');
    const auto integer = [&](std::string_view part) {
        const bool negative = !part.empty() && part[0] == '-';
        if (!part.empty() && (part[0] == '-' || part[0] == '+'))
            part.remove_prefix(1);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos)
            throw ParseError("rational: malformed number '" + std::string(text) + "'");
        const cpp_int value(std::string{part});
        return negative ? cpp_int(-value) : value;
    };
    if (slash == std::string_view::npos)
        return Rational(integer(text));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("rational: signed denominator in '" + std::string(text) + "'");
    const cpp_int den = integer(den_text);
    if (den == 0)
        throw ParseError("rational: zero denominator in '" + std::string(text) + "'");
    return Rational(integer(text.substr(0, slash)), den);
}

std::string format_rational(const Rational& r)
{
    return r.str();
}

std::vector<RationalPoint> parse_points(std::string_view text)
{
    const json doc = parse_json(text, "points");
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw ParseError("points: expected {\"points\": [[x, y], ...]}");
    const auto coordinate = [](const json& v) {
        if (v.is_number_integer())
            return Rational(v.get<std::int64_t>());
        if (v.is_string())
            return parse_rational(v.get<std::string>());
        throw ParseError("points: coordinates must be integers or \"p/q\" strings");
    };
    std::vector<RationalPoint> points;
    for (const json& p : doc["points"]) {
        if (!p.is_array() || p.size() != 2)
            throw ParseError("points: every point must be a pair [x, y]");
        points.push_back({coordinate(p[0]), coordinate(p[1])});
    }
    return points;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read " + path.string());
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

void atomic_write(const std::filesystem::path& path, std::string_view content)
{
    std::filesystem::path temp = path;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + temp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            throw std::runtime_error("write failed for " + temp.string());
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::filesystem::remove(temp);
        throw std::runtime_error("cannot rename " + temp.string() + " to " + path.string() + ": " + ec.message());
    }
}

std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char ch : data) {
        hash ^= ch;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string digest_hex(std::string_view data)
{
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(data);
    return out.str();
}

} // namespace nkconf
