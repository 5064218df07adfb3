#pragma once

#include <array>
#include <string>
#include <vector>

namespace cdc {

// Loaders for the bundled reference data. All files are whitespace-separated
// integers with '#' line comments.

using IntMatrix = std::vector<std::vector<int>>;

// A bare matrix file: one row per line.
IntMatrix load_matrix_file(const std::string& path);

struct GoldenOrbitMatrix {
    int index = 0;
    std::array<long long, 3> rep_exponents{};
    long long orbit_length = 0;
    IntMatrix matrix;
};

std::vector<GoldenOrbitMatrix> load_orbit_matrices(const std::string& path);

struct Table1Row {
    int v = 0;
    int n = 0;
    long long orbits = 0;
    long long net_gain = 0;
    std::array<long long, 3> rep_exponents{};
};

std::vector<Table1Row> load_table1(const std::string& path);

struct Table2Row {
    int n = 0;
    std::array<long long, 5> counts{};  // mu = 3..7
};

std::vector<Table2Row> load_table2(const std::string& path);

}  // namespace cdc
