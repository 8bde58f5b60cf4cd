// Writes the wiring diagram swept from a straight-line realization:
//   make_wiring <config-file> <points-file>
#include <nkconf/io.hpp>
#include <nkconf/wiring.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    if (argc != 3) {
        std::cerr << "usage: make_wiring <config-file> <points-file>\n";
        return 2;
    }
    try {
        const auto c = nkconf::Configuration::from_raw(nkconf::parse_configuration(nkconf::read_file(argv[1])));
        const auto points = nkconf::parse_points(nkconf::read_file(argv[2]));
        const auto swept = nkconf::sweep_configuration(c, points);
        const auto check = nkconf::realizes(swept.diagram, c, swept.wire_to_line);
        if (!check.realized) {
            std::cerr << "the coordinates have extra incidences: " << check.reason << '\n';
            return 1;
        }
        std::cout << nkconf::format_wiring(swept.diagram, swept.wire_to_line);
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
