#pragma once

#include <nkconf/chirotope.hpp>
#include <nkconf/eulergate.hpp>
#include <nkconf/incidence.hpp>

#include <span>
#include <string>
#include <vector>

namespace nkconf {

/// The wires at positions position..position+size-1 meet in one point and reverse their order.
struct CrossingEvent {
    int position = 0;
    int size = 2;

    friend bool operator==(const CrossingEvent&, const CrossingEvent&) = default;
};

/// A pseudoline arrangement swept left to right. Wire w starts at position w; positions are
/// 0-based from the bottom. The sweep line stands for the line at infinity and is not a wire.
struct WiringDiagram {
    int n = 0;
    std::vector<CrossingEvent> events;

    friend bool operator==(const WiringDiagram&, const WiringDiagram&) = default;
};

/// Positions in range, sizes at least 2, every wire pair crossing exactly once, and the
/// final order equal to the reversal of the initial one.
ValidationReport validate_wiring(const WiringDiagram& w);

/// For every event, the wires taking part, bottom to top as they enter it.
/// Throws std::invalid_argument when an event leaves the wire range.
std::vector<std::vector<int>> event_wires(const WiringDiagram& w);

/// Cells of the arrangement on the sphere (double cover): f0 = 2 * events,
/// f1 = 2 * sum of event sizes. Throws std::invalid_argument for an invalid diagram.
EulerCounts cell_counts(const WiringDiagram& w);

struct RealizationResult {
    bool realized = false;
    /// point_to_event[p] is the event realizing point p (filled when realized).
    std::vector<int> point_to_event;
    /// Why the check failed; empty when realized.
    std::string reason;
};

/// Checks that the points of the incidence structure correspond bijectively to events whose
/// wires are exactly the lines through the point (wire w carries line wire_to_line[w], the
/// identity when empty), and that every other event is a plain 2-crossing.
/// `stars[p]` lists the lines through point p. Throws std::invalid_argument when the wire
/// count differs from line_count, the map is not a permutation, or w is invalid.
RealizationResult realizes(const WiringDiagram& w, const std::vector<std::vector<int>>& stars, int line_count,
                           std::span<const int> wire_to_line = {});

RealizationResult realizes(const WiringDiagram& w, const Configuration& c, std::span<const int> wire_to_line = {});

/// Sign of wires i < j < k: Zero when the three meet in one event, Positive when wire j meets
/// wire i before wire k, Negative otherwise. Throws std::invalid_argument for an invalid diagram.
Chirotope chirotope_of_wiring(const WiringDiagram& w);

/// Deterministic drawing: one polyline per wire through evenly spaced event columns, one
/// node per event, events of size >= highlight_size filled (0: the largest size present, if >= 3).
std::string render_svg(const WiringDiagram& w, int highlight_size = 0);

/// y = slope * x + intercept.
struct AffineLine {
    Rational slope;
    Rational intercept;
};

struct SweptArrangement {
    WiringDiagram diagram;
    /// wire_to_line[w] is the index of the input line carried by wire w.
    std::vector<int> wire_to_line;
};

/// Sweeps a straight-line arrangement with pairwise distinct slopes from x = -inf to x = +inf,
/// creating one event per intersection point (same x: increasing y).
/// Throws std::invalid_argument for fewer than 2 lines, repeated slopes or repeated lines.
SweptArrangement sweep_lines(std::span<const AffineLine> lines);

/// Sweeps the straight lines spanned by the configuration's lines at the given coordinates;
/// wire_to_line refers to indices into c.lines(). Throws std::invalid_argument when the point
/// count differs from c.n(), a line's points are not collinear, or a line is vertical.
SweptArrangement sweep_configuration(const Configuration& c, std::span<const RationalPoint> points);

} // namespace nkconf
