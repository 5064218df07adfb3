#include "cdc/golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cdc {

namespace {

// All lines of the file with comments stripped, blank lines dropped.
std::vector<std::string> data_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) lines.push_back(line);
    }
    return lines;
}

std::vector<long long> numbers(const std::string& line) {
    std::istringstream in(line);
    std::vector<long long> out;
    long long x;
    while (in >> x) out.push_back(x);
    return out;
}

}  // namespace

IntMatrix load_matrix_file(const std::string& path) {
    IntMatrix m;
    for (const auto& line : data_lines(path)) {
        std::vector<int> row;
        for (long long x : numbers(line)) row.push_back(static_cast<int>(x));
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<GoldenOrbitMatrix> load_orbit_matrices(const std::string& path) {
    std::vector<GoldenOrbitMatrix> out;
    for (const auto& line : data_lines(path)) {
        std::istringstream in(line);
        std::string head;
        in >> head;
        if (head == "matrix") {
            GoldenOrbitMatrix g;
            in >> g.index;
            out.push_back(std::move(g));
        } else if (head == "rep") {
            if (out.empty()) throw std::runtime_error("rep before matrix");
            in >> out.back().rep_exponents[0] >> out.back().rep_exponents[1] >>
                out.back().rep_exponents[2];
        } else if (head == "length") {
            if (out.empty()) throw std::runtime_error("length before matrix");
            in >> out.back().orbit_length;
        } else {
            if (out.empty()) throw std::runtime_error("row before matrix");
            std::vector<int> row;
            for (long long x : numbers(line)) row.push_back(static_cast<int>(x));
            out.back().matrix.push_back(std::move(row));
        }
    }
    return out;
}

std::vector<Table1Row> load_table1(const std::string& path) {
    std::vector<Table1Row> rows;
    for (const auto& line : data_lines(path)) {
        const auto xs = numbers(line);
        if (xs.size() != 7) throw std::runtime_error("table1: bad row");
        Table1Row r;
        r.v = static_cast<int>(xs[0]);
        r.n = static_cast<int>(xs[1]);
        r.orbits = xs[2];
        r.net_gain = xs[3];
        r.rep_exponents = {xs[4], xs[5], xs[6]};
        rows.push_back(r);
    }
    return rows;
}

std::vector<Table2Row> load_table2(const std::string& path) {
    std::vector<Table2Row> rows;
    for (const auto& line : data_lines(path)) {
        const auto xs = numbers(line);
        if (xs.size() != 6) throw std::runtime_error("table2: bad row");
        Table2Row r;
        r.n = static_cast<int>(xs[0]);
        for (int i = 0; i < 5; ++i) r.counts[i] = xs[i + 1];
        rows.push_back(r);
    }
    return rows;
}

}  // namespace cdc
