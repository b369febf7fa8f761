#pragma once

#include "zernike/surd.hpp"

#include <string>
#include <vector>

namespace zern {

// One transcribed table row: "family | key ints | value-text".
struct FixtureEntry {
    std::string family;
    std::vector<long long> key;
    ComplexSurd value;
};

// Value grammar: sum of terms "[+-][i*]num[/den][*K^(1/2)]" with factors in
// any order, e.g. "-1/105*i*210^(1/2) +2/3".
ComplexSurd parse_surd_text(const std::string& text);

FixtureEntry parse_fixture_line(const std::string& line);

// Loads a .fix file; skips blank lines and '#' comments.
std::vector<FixtureEntry> load_fixture_file(const std::string& path);

} // namespace zern
