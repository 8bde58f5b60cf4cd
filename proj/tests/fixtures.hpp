#pragma once

#include <nkconf/incidence.hpp>
#include <nkconf/io.hpp>

#include <string>
#include <vector>

namespace fixtures {

inline std::string data_path(const std::string& name)
{
    return std::string(NKCONF_DATA_DIR) + "/" + name;
}

inline nkconf::Configuration load(const std::string& name)
{
    return nkconf::Configuration::from_raw(nkconf::parse_configuration(nkconf::read_file(data_path(name))));
}

inline nkconf::Configuration fano()
{
    return nkconf::Configuration::from_lines(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

// Translates of a base block modulo n.
inline nkconf::Configuration cyclic(int n, const std::vector<int>& base)
{
    std::vector<std::vector<int>> lines;
    for (int t = 0; t < n; ++t) {
        std::vector<int> line;
        for (int b : base)
            line.push_back((b + t) % n);
        lines.push_back(line);
    }
    return nkconf::Configuration::from_lines(n, static_cast<int>(base.size()), lines);
}

inline nkconf::Configuration mobius_kantor()
{
    return cyclic(8, {0, 1, 3});
}

// {0, 1, 4, 14} has pairwise distinct differences modulo 21.
inline nkconf::Configuration cyclic_21_4()
{
    return cyclic(21, {0, 1, 4, 14});
}

// The affine plane of order 4 without its vertical lines: points (x, y) over GF(4),
// lines y = m x + b.
inline nkconf::Configuration affine_16_4()
{
    const int mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    std::vector<std::vector<int>> lines;
    for (int m = 0; m < 4; ++m)
        for (int b = 0; b < 4; ++b) {
            std::vector<int> line;
            for (int x = 0; x < 4; ++x)
                line.push_back(4 * x + (mul[m][x] ^ b));
            lines.push_back(line);
        }
    return nkconf::Configuration::from_lines(16, 4, lines);
}

} // namespace fixtures
