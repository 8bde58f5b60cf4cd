#include <nkconf/wiring.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace nkconf {

namespace {

void require_valid(const WiringDiagram& w, const char* what)
{
    const ValidationReport report = validate_wiring(w);
    if (!report.valid())
        throw std::invalid_argument(std::string(what) + ": invalid wiring diagram: " + report.summary());
}

// meet[a * n + b]: index of the event where wires a and b cross (-1 if they never do).
std::vector<int> meeting_events(const WiringDiagram& w, const std::vector<std::vector<int>>& blocks)
{
    std::vector<int> meet(static_cast<std::size_t>(w.n) * w.n, -1);
    for (std::size_t t = 0; t < blocks.size(); ++t)
        for (int a : blocks[t])
            for (int b : blocks[t])
                if (a != b)
                    meet[static_cast<std::size_t>(a) * w.n + b] = static_cast<int>(t);
    return meet;
}

} // namespace

std::vector<std::vector<int>> event_wires(const WiringDiagram& w)
{
    std::vector<int> order(std::max(w.n, 0));
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(w.events.size());
    for (const CrossingEvent& e : w.events) {
        if (e.position < 0 || e.size < 0 || e.position + e.size > w.n)
            throw std::invalid_argument("event_wires: event (" + std::to_string(e.position) + ", " +
                                        std::to_string(e.size) + ") leaves the " + std::to_string(w.n) + " wires");
        const auto first = order.begin() + e.position;
        blocks.emplace_back(first, first + e.size);
        std::reverse(first, first + e.size);
    }
    return blocks;
}

ValidationReport validate_wiring(const WiringDiagram& w)
{
    ValidationReport report;
    if (w.n < 2) {
        report.add("wire-count", "need at least 2 wires, got " + std::to_string(w.n));
        return report;
    }
    bool in_range = true;
    for (std::size_t t = 0; t < w.events.size(); ++t) {
        const CrossingEvent& e = w.events[t];
        const int id = static_cast<int>(t);
        if (e.size < 2) {
            report.add("event-size", "event " + std::to_string(t) + " has size " + std::to_string(e.size), {id});
            in_range = in_range && e.size >= 0;
        }
        if (e.position < 0 || e.position + e.size > w.n) {
            report.add("event-range",
                       "event " + std::to_string(t) + " covers positions " + std::to_string(e.position) + ".." +
                           std::to_string(e.position + e.size - 1) + " of " + std::to_string(w.n),
                       {id});
            in_range = false;
        }
    }
    if (!in_range)
        return report;

    const std::vector<std::vector<int>> blocks = event_wires(w);
    std::vector<int> crossings(static_cast<std::size_t>(w.n) * w.n, 0);
    for (const auto& block : blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                const int a = std::min(block[i], block[j]);
                const int b = std::max(block[i], block[j]);
                ++crossings[static_cast<std::size_t>(a) * w.n + b];
            }
    for (int a = 0; a < w.n; ++a)
        for (int b = a + 1; b < w.n; ++b) {
            const int times = crossings[static_cast<std::size_t>(a) * w.n + b];
            if (times != 1)
                report.add("pair-crossings",
                           "wires " + std::to_string(a) + " and " + std::to_string(b) + " cross " +
                               std::to_string(times) + " times",
                           {a, b});
        }

    std::vector<int> order(w.n);
    std::iota(order.begin(), order.end(), 0);
    for (const CrossingEvent& e : w.events)
        std::reverse(order.begin() + e.position, order.begin() + e.position + e.size);
    if (!std::is_sorted(order.rbegin(), order.rend()))
        report.add("final-order", "the sweep does not end with the reversed wire order");
    return report;
}

EulerCounts cell_counts(const WiringDiagram& w)
{
    require_valid(w, "cell_counts");
    std::int64_t incidences = 0;
    for (const CrossingEvent& e : w.events)
        incidences += e.size;
    return counts_from_graph(2 * static_cast<std::int64_t>(w.events.size()), 2 * incidences);
}

RealizationResult realizes(const WiringDiagram& w, const std::vector<std::vector<int>>& stars, int line_count,
                           std::span<const int> wire_to_line)
{
    require_valid(w, "realizes");
    if (w.n != line_count)
        throw std::invalid_argument("realizes: diagram has " + std::to_string(w.n) + " wires, structure has " +
                                    std::to_string(line_count) + " lines");
    std::vector<int> line_of(w.n);
    if (wire_to_line.empty())
        std::iota(line_of.begin(), line_of.end(), 0);
    else if (is_permutation_of(wire_to_line, w.n))
        line_of.assign(wire_to_line.begin(), wire_to_line.end());
    else
        throw std::invalid_argument("realizes: wire-to-line map is not a permutation of the lines");

    std::map<std::vector<int>, int> point_of_star;
    for (std::size_t p = 0; p < stars.size(); ++p) {
        std::vector<int> star = stars[p];
        std::sort(star.begin(), star.end());
        point_of_star.emplace(std::move(star), static_cast<int>(p));
    }

    RealizationResult result;
    result.point_to_event.assign(stars.size(), -1);
    const std::vector<std::vector<int>> blocks = event_wires(w);
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        std::vector<int> lines;
        for (int wire : blocks[t])
            lines.push_back(line_of[wire]);
        std::sort(lines.begin(), lines.end());
        const auto it = point_of_star.find(lines);
        if (it == point_of_star.end()) {
            if (lines.size() == 2)
                continue;
            result.reason = "event " + std::to_string(t) + " joins " + std::to_string(lines.size()) +
                            " lines that share no point";
            return result;
        }
        int& slot = result.point_to_event[it->second];
        if (slot >= 0) {
            result.reason = "point " + std::to_string(it->second) + " is met by events " + std::to_string(slot) +
                            " and " + std::to_string(t);
            return result;
        }
        slot = static_cast<int>(t);
    }
    for (std::size_t p = 0; p < stars.size(); ++p)
        if (result.point_to_event[p] < 0) {
            result.reason = "point " + std::to_string(p) + " has no event";
            return result;
        }
    result.realized = true;
    return result;
}

RealizationResult realizes(const WiringDiagram& w, const Configuration& c, std::span<const int> wire_to_line)
{
    std::vector<std::vector<int>> stars;
    for (int p = 0; p < c.n(); ++p)
        stars.push_back(c.lines_through(p));
    return realizes(w, stars, c.n(), wire_to_line);
}

Chirotope chirotope_of_wiring(const WiringDiagram& w)
{
    require_valid(w, "chirotope_of_wiring");
    if (w.n < 3)
        throw std::invalid_argument("chirotope_of_wiring: need at least 3 wires");
    const std::vector<int> meet = meeting_events(w, event_wires(w));
    const auto at = [&](int a, int b) { return meet[static_cast<std::size_t>(a) * w.n + b]; };
    Chirotope chi(w.n);
    for (int i = 0; i < w.n; ++i)
        for (int j = i + 1; j < w.n; ++j)
            for (int k = j + 1; k < w.n; ++k) {
                const int ji = at(j, i);
                const int jk = at(j, k);
                chi.set(i, j, k, ji == jk ? Sign::Zero : (ji < jk ? Sign::Positive : Sign::Negative));
            }
    return chi;
}

std::string render_svg(const WiringDiagram& w, int highlight_size)
{
    require_valid(w, "render_svg");
    constexpr int dx = 40;
    constexpr int dy = 30;
    constexpr int margin = 30;
    const int columns = static_cast<int>(w.events.size());
    const int width = 2 * margin + (columns + 1) * dx;
    const int height = 2 * margin + (w.n - 1) * dy;
    if (highlight_size == 0) {
        for (const CrossingEvent& e : w.events)
            highlight_size = std::max(highlight_size, e.size);
        if (highlight_size < 3)
            highlight_size = w.n + 1;
    }
    const auto x_of = [&](double column) { return margin + dx * column; };
    const auto y_of = [&](double position) { return margin + dy * (w.n - 1 - position); };

    std::vector<std::vector<std::pair<double, double>>> paths(w.n);
    std::vector<int> order(w.n);
    std::iota(order.begin(), order.end(), 0);
    for (int p = 0; p < w.n; ++p)
        paths[p].emplace_back(x_of(0), y_of(p));
    std::vector<std::pair<double, double>> nodes;
    for (int t = 0; t < columns; ++t) {
        const CrossingEvent& e = w.events[t];
        const double column = t + 1;
        const double centre = e.position + (e.size - 1) / 2.0;
        nodes.emplace_back(x_of(column), y_of(centre));
        for (int i = 0; i < e.size; ++i) {
            const int wire = order[e.position + i];
            const int after = e.position + e.size - 1 - i;
            paths[wire].emplace_back(x_of(column - 0.4), y_of(e.position + i));
            paths[wire].emplace_back(x_of(column), y_of(centre));
            paths[wire].emplace_back(x_of(column + 0.4), y_of(after));
        }
        std::reverse(order.begin() + e.position, order.begin() + e.position + e.size);
    }
    for (int p = 0; p < w.n; ++p)
        paths[order[p]].emplace_back(x_of(columns + 1), y_of(p));

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "  <g fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\">\n";
    for (int wire = 0; wire < w.n; ++wire) {
        svg << "    <polyline data-wire=\"" << wire << "\" points=\"";
        for (std::size_t i = 0; i < paths[wire].size(); ++i)
            svg << (i ? " " : "") << paths[wire][i].first << ',' << paths[wire][i].second;
        svg << "\"/>\n";
    }
    svg << "  </g>\n  <g stroke=\"#000000\">\n";
    for (int t = 0; t < columns; ++t) {
        const bool highlighted = w.events[t].size >= highlight_size;
        svg << "    <circle data-event=\"" << t << "\" cx=\"" << nodes[t].first << "\" cy=\"" << nodes[t].second
            << "\" r=\"" << (highlighted ? 5 : 3) << "\" fill=\"" << (highlighted ? "#d62728" : "#ffffff")
            << "\"/>\n";
    }
    svg << "  </g>\n  <g font-family=\"monospace\" font-size=\"10\">\n";
    for (int p = 0; p < w.n; ++p)
        svg << "    <text x=\"4\" y=\"" << y_of(p) + 3 << "\">" << p << "</text>\n";
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

SweptArrangement sweep_lines(std::span<const AffineLine> lines)
{
    const int n = static_cast<int>(lines.size());
    if (n < 2)
        throw std::invalid_argument("sweep_lines: need at least 2 lines");
    std::vector<int> line_of_wire(n);
    std::iota(line_of_wire.begin(), line_of_wire.end(), 0);
    // At x = -inf the steepest line is lowest.
    std::sort(line_of_wire.begin(), line_of_wire.end(),
              [&](int a, int b) { return lines[a].slope > lines[b].slope; });
    for (int w = 0; w + 1 < n; ++w)
        if (lines[line_of_wire[w]].slope == lines[line_of_wire[w + 1]].slope)
            throw std::invalid_argument("sweep_lines: lines " + std::to_string(line_of_wire[w]) + " and " +
                                        std::to_string(line_of_wire[w + 1]) + " are parallel");

    std::map<std::pair<Rational, Rational>, std::vector<int>> points;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const AffineLine& la = lines[line_of_wire[a]];
            const AffineLine& lb = lines[line_of_wire[b]];
            const Rational x = (lb.intercept - la.intercept) / (la.slope - lb.slope);
            const Rational y = la.slope * x + la.intercept;
            std::vector<int>& wires = points[{x, y}];
            for (int w : {a, b})
                if (std::find(wires.begin(), wires.end(), w) == wires.end())
                    wires.push_back(w);
        }

    SweptArrangement result;
    result.diagram.n = n;
    result.wire_to_line = line_of_wire;
    std::vector<int> order(n), position(n);
    std::iota(order.begin(), order.end(), 0);
    std::iota(position.begin(), position.end(), 0);
    for (const auto& [where, wires] : points) {
        int low = n, high = -1;
        for (int w : wires) {
            low = std::min(low, position[w]);
            high = std::max(high, position[w]);
        }
        const int size = static_cast<int>(wires.size());
        if (high - low + 1 != size)
            throw std::logic_error("sweep_lines: wires through a point are not adjacent");
        result.diagram.events.push_back({low, size});
        std::reverse(order.begin() + low, order.begin() + high + 1);
        for (int p = low; p <= high; ++p)
            position[order[p]] = p;
    }
    return result;
}

SweptArrangement sweep_configuration(const Configuration& c, std::span<const RationalPoint> points)
{
    if (static_cast<int>(points.size()) != c.n())
        throw std::invalid_argument("sweep_configuration: " + std::to_string(points.size()) +
                                    " coordinates for " + std::to_string(c.n()) + " points");
    std::vector<AffineLine> lines;
    for (std::size_t l = 0; l < c.lines().size(); ++l) {
        const auto& line = c.lines()[l];
        const RationalPoint& a = points[line[0]];
        const RationalPoint& b = points[line[1]];
        if (a.x == b.x)
            throw std::invalid_argument("sweep_configuration: line " + std::to_string(l) + " is vertical");
        const Rational slope = (b.y - a.y) / (b.x - a.x);
        const Rational intercept = a.y - slope * a.x;
        for (int p : line)
            if (points[p].y != slope * points[p].x + intercept)
                throw std::invalid_argument("sweep_configuration: point " + std::to_string(p) +
                                            " is off line " + std::to_string(l));
        lines.push_back({slope, intercept});
    }
    return sweep_lines(lines);
}

} // namespace nkconf
