#pragma once

#include <nkconf/chirotope.hpp>
#include <nkconf/incidence.hpp>
#include <nkconf/wiring.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nkconf {

/// Text that does not follow a file format (as opposed to well-formed data violating a
/// mathematical property, which is reported by the validators).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON {"n", "k", "lines"} when the first non-blank character is '{', otherwise the text
/// form: "n k" followed by one line of point indices per configuration line. '#' starts a comment.
RawConfiguration parse_configuration(std::string_view text);

std::string format_configuration_json(const Configuration& c);
std::string format_configuration_text(const Configuration& c);

/// "n" then a string of C(n,3) characters over {+,-,0} in lexicographic triple order.
Chirotope parse_chirotope(std::string_view text);
std::string format_chirotope(const Chirotope& chi);

struct WiringFile {
    WiringDiagram diagram;
    /// From the optional "map" section: the configuration line carried by each wire; empty when absent.
    std::vector<int> wire_to_line;
};

/// "n m", then m lines "p s", then optionally "map" followed by n line indices.
WiringFile parse_wiring(std::string_view text);
std::string format_wiring(const WiringDiagram& w, std::span<const int> wire_to_line = {});

/// {"points": [[x, y], ...]} with coordinates as integers or strings "p/q".
std::vector<RationalPoint> parse_points(std::string_view text);
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Throws ParseError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

/// Writes to a temporary file in the same directory, then renames it over `path`.
void atomic_write(const std::filesystem::path& path, std::string_view content);

std::uint64_t fnv1a64(std::string_view data);
/// 16 lowercase hex digits of fnv1a64.
std::string digest_hex(std::string_view data);

} // namespace nkconf
