#include "cdc/serialize.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cdc {

namespace {

std::string join_rows(const Subspace& U) {
    std::string out;
    for (std::size_t i = 0; i < U.rows().size(); ++i) {
        if (i) out += ':';
        out += hex_mask(U.rows()[i]);
    }
    return out;
}

std::uint32_t parse_hex(const std::string& s) {
    std::size_t used = 0;
    unsigned long val = 0;
    try {
        val = std::stoul(s, &used, 16);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad hex mask: " + s);
    }
    if (used != s.size() || val > 0xffffffffull)
        throw std::invalid_argument("bad hex mask: " + s);
    return static_cast<std::uint32_t>(val);
}

}  // namespace

std::string hex_mask(std::uint32_t mask) {
    std::ostringstream os;
    os << std::hex << mask;
    return os.str();
}

std::string element_text(const FieldContext& F, gf x) {
    return F.to_alpha(x);
}

nlohmann::json to_json(const Subspace& U) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint32_t r : U.rows()) rows.push_back(hex_mask(r));
    return {{"n", U.n()}, {"dim", U.dim()}, {"rows", rows}};
}

Subspace subspace_from_json(const nlohmann::json& j) {
    std::vector<gf> rows;
    for (const auto& r : j.at("rows")) rows.push_back(parse_hex(r));
    Subspace out(j.at("n").get<int>(), rows);
    if (out.dim() != j.at("dim").get<int>())
        throw std::invalid_argument("subspace_from_json: rows not independent");
    return out;
}

nlohmann::json to_json(const LinPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (gf c : p.coeffs) coeffs.push_back(hex_mask(c));
    return coeffs;
}

nlohmann::json to_json(const FieldContext& F, const CollisionMatrix& cm) {
    nlohmann::json rows = nlohmann::json::array();
    for (gf u : cm.row_labels) rows.push_back(F.to_alpha(u));
    nlohmann::json cols = nlohmann::json::array();
    for (gf c : cm.col_labels) cols.push_back(F.to_alpha(c));
    return {{"n", cm.n},
            {"W", to_json(cm.W)},
            {"rows", rows},
            {"cols", cols},
            {"entries", cm.entries}};
}

std::string matrix_text(const FieldContext& F, const CollisionMatrix& cm) {
    std::size_t label_w = 0;
    for (gf u : cm.row_labels)
        label_w = std::max(label_w, F.to_alpha(u).size());
    std::size_t cell_w = 1;
    for (gf c : cm.col_labels)
        cell_w = std::max(cell_w, F.to_alpha(c).size());

    std::ostringstream os;
    os << std::string(label_w, ' ');
    for (gf c : cm.col_labels)
        os << "  " << std::setw(static_cast<int>(cell_w)) << F.to_alpha(c);
    os << '\n';
    for (int i = 0; i < cm.m(); ++i) {
        os << std::setw(static_cast<int>(label_w)) << F.to_alpha(cm.row_labels[i]);
        for (int e : cm.entries[i])
            os << "  " << std::setw(static_cast<int>(cell_w)) << e;
        os << '\n';
    }
    return os.str();
}

nlohmann::json solution_json(const FieldContext& F, const Subspace& W,
                             const CollisionMatrix& cm, const RrpSolution& sol,
                             const GainBounds& bounds) {
    nlohmann::json reps = nlohmann::json::array();
    for (int i : sol.rows) reps.push_back(F.to_alpha(cm.row_labels[i]));
    return {{"n", F.n()},
            {"W", to_json(W)},
            {"I", reps},
            {"N1", sol.value},
            {"proven", sol.proven},
            {"bounds", {bounds.lower, bounds.upper}}};
}

nlohmann::json orbit_json(const FieldContext& F, const Orbit& orbit) {
    const auto missing = missing_points(F, orbit.representative);
    nlohmann::json spectrum = nlohmann::json::object();
    for (auto [sum, count] : row_sum_spectrum(collision_matrix(F, orbit.representative)))
        spectrum[std::to_string(sum)] = count;
    return {{"n", F.n()},
            {"representative", to_json(orbit.representative)},
            {"orbit_size", orbit.size},
            {"mu", missing.mu},
            {"row_sum_spectrum", spectrum}};
}

std::string orbit_csv_header() {
    return "n,representative,orbit_size,mu,row_sum_spectrum";
}

std::string orbit_csv_row(const FieldContext& F, const Orbit& orbit) {
    const auto missing = missing_points(F, orbit.representative);
    std::ostringstream os;
    os << F.n() << ',' << join_rows(orbit.representative) << ',' << orbit.size
       << ',' << missing.mu << ',';
    bool first = true;
    for (auto [sum, count] : row_sum_spectrum(collision_matrix(F, orbit.representative))) {
        if (!first) os << ' ';
        os << sum << ':' << count;
        first = false;
    }
    return os.str();
}

void write_code_text(std::ostream& os, const FieldContext& F, const Subspace& W,
                     const std::vector<Subspace>& words) {
    os << (F.n() + 3) << ' ' << F.n() << ' ' << join_rows(W) << '\n';
    for (const Subspace& w : words) {
        if (w.dim() != 3)
            throw std::invalid_argument("write_code_text: want planes");
        os << hex_mask(w.rows()[0]) << ' ' << hex_mask(w.rows()[1]) << ' '
           << hex_mask(w.rows()[2]) << '\n';
    }
}

std::vector<Subspace> read_code_text(std::istream& is, int& v_out) {
    int v = 0, n = 0;
    std::string wspec;
    if (!(is >> v >> n >> wspec) || v != n + 3)
        throw std::invalid_argument("read_code_text: bad header");
    std::vector<Subspace> words;
    std::string a, b, c;
    while (is >> a) {
        if (!(is >> b >> c))
            throw std::invalid_argument("read_code_text: truncated row");
        words.emplace_back(v, std::vector<gf>{parse_hex(a), parse_hex(b), parse_hex(c)});
    }
    v_out = v;
    return words;
}

nlohmann::json code_json(const FieldContext& F, const Subspace& W,
                         const AssembledCode& code, bool verified_distance) {
    nlohmann::json words = nlohmann::json::array();
    for (const Subspace& w : code.words) {
        words.push_back({hex_mask(w.rows()[0]), hex_mask(w.rows()[1]),
                         hex_mask(w.rows()[2])});
    }
    return {{"v", code.v},
            {"n", F.n()},
            {"W", to_json(W)},
            {"size", code.words.size()},
            {"N1", code.n1},
            {"expurgated", code.expurgated},
            {"new_planes", code.new_planes},
            {"verified_distance", verified_distance},
            {"words", words}};
}

}  // namespace cdc
