#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "cdc/codegen.hpp"
#include "cdc/field.hpp"
#include "cdc/geometry.hpp"
#include "cdc/linpoly.hpp"
#include "cdc/orbits.hpp"
#include "cdc/rrp.hpp"
#include "cdc/sigma.hpp"

namespace cdc {

std::string hex_mask(std::uint32_t mask);

// "0" or "a^k" with k the discrete log.
std::string element_text(const FieldContext& F, gf x);

nlohmann::json to_json(const Subspace& U);
Subspace subspace_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LinPoly& p);  // coefficients a_0..a_k

nlohmann::json to_json(const FieldContext& F, const CollisionMatrix& cm);

// Aligned grid with exponent labels, for eyeballing against the figures.
std::string matrix_text(const FieldContext& F, const CollisionMatrix& cm);

nlohmann::json solution_json(const FieldContext& F, const Subspace& W,
                             const CollisionMatrix& cm, const RrpSolution& sol,
                             const GainBounds& bounds);

nlohmann::json orbit_json(const FieldContext& F, const Orbit& orbit);
std::string orbit_csv_header();
std::string orbit_csv_row(const FieldContext& F, const Orbit& orbit);

// Text code file: header "v n W-rows", then one codeword per line as three
// hex row masks.
void write_code_text(std::ostream& os, const FieldContext& F, const Subspace& W,
                     const std::vector<Subspace>& words);
std::vector<Subspace> read_code_text(std::istream& is, int& v_out);

nlohmann::json code_json(const FieldContext& F, const Subspace& W,
                         const AssembledCode& code, bool verified_distance);

}  // namespace cdc
