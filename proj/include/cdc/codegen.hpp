#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cdc/field.hpp"
#include "cdc/geometry.hpp"
#include "cdc/rrp.hpp"
#include "cdc/sigma.hpp"

namespace cdc {

// Codewords are planes in the ambient space F_2^(n+3). A vector (e, y) with
// W-coordinate e and field part y is packed as the mask (e << n) | y. The
// W-coordinate of an element of W is its coefficient vector over the
// echelon basis, W.rows()[0] giving the top bit.

std::uint32_t w_coordinates(const Subspace& W, gf w);

// The lifted plane {(e, a0 w_e + a1 w_e^2) : e in F_2^3} where e -> w_e is
// the linear extension of the basis identification.
Subspace lifted_plane(const FieldContext& F, const Subspace& W, gf a0, gf a1);

// All 4^n lifted planes; pairwise subspace distance 4.
std::vector<Subspace> lifted_gabidulin(const FieldContext& F, const Subspace& W);

// Binomial pairs (a0, a1) = (r c^2, r c), r != 0, c in u + W: the lifted
// planes that must leave the code when the solid through u is reworked.
std::vector<std::pair<gf, gf>> expurgation_set(const FieldContext& F,
                                               const Subspace& W, gf u);

struct NewPlane {
    Subspace line;                 // Z <= W
    gf param = 0;                  // class representative x of (u + W) mod Z
    gf value = 0;                  // s_Z(x) / delta(Z)^2
    bool collision_value = false;  // value lies in the collision space
};

// The 14 candidate planes attached to the solid through u (u outside W),
// ordered by line, then by class representative.
std::vector<NewPlane> new_planes_local(const FieldContext& F, const Subspace& W,
                                       gf u);

// Ambient realization {(z, rho delta(x, z))} + F_2 (0, rho delta(Z)).
Subspace new_plane_subspace(const FieldContext& F, const Subspace& W,
                            const Subspace& Z, gf x, gf rho);

struct AssembledCode {
    int v = 0;
    std::vector<Subspace> words;  // sorted, duplicate-free
    long long n1 = 0;             // realized net gain
    std::size_t expurgated = 0;
    std::size_t new_planes = 0;   // kept base planes, before rotation
};

// Expurgate-and-augment for the solved row selection: remove the lifted
// planes of every chosen solid, then insert all rotations of the surviving
// candidates, keeping one representative per covered collision value.
AssembledCode assemble_code(const FieldContext& F, const Subspace& W,
                            const RrpSolution& sol);

// Distance check via line keys: a pair at subspace distance two shares a
// line, so d >= 4 holds exactly when all 7 |C| lines are distinct. On
// failure an offending word pair is reported through witness if given.
bool min_distance_at_least_4(const std::vector<Subspace>& words,
                             std::pair<std::size_t, std::size_t>* witness = nullptr);

// Quadratic cross-check of the same property.
bool min_distance_at_least_4_pairwise(const std::vector<Subspace>& words);

struct LineCoverReport {
    bool distance_ok = false;
    unsigned long long lines_used = 0;         // distinct lines inside codewords
    unsigned long long lines_total = 0;        // lines of the ambient space
    unsigned long long off_special_used = 0;   // covered lines disjoint from S
    unsigned long long off_special_total = 0;  // all such lines
};
// n is the field degree; the ambient dimension is n + 3 and S = {(0, y)}.
LineCoverReport line_cover_check(int n, const std::vector<Subspace>& words);

// All k-subspaces of the field with a prescribed Moore determinant. Any two
// share no (k-1)-subspace, so each bucket is a distance-4 code.
std::vector<Subspace> fixed_dickson_code(const FieldContext& F, int k, gf a);

// Subfield rearrangement for 3 | n, built on W = F_8: lifted planes with
// a0 != a1^2 survive and every rotated coset piece contributes 14 planes.
// Size 4^n + (3/7)(4^(n-1) - 9 2^(n-2) + 16).
std::vector<Subspace> remove_iii_code(const FieldContext& F);

// The 77-word code at v = 6: the rearrangement plus, for each nonzero x,
// the plane joining (x, x^3) to the line {(0, y) : Tr(x^4 y) = 0}.
std::vector<Subspace> v6_optimal_code(const FieldContext& F);

// Every codeword mapped by (e, y) -> (e, rho y).
std::vector<Subspace> rotate_words(const FieldContext& F,
                                   const std::vector<Subspace>& words, gf rho);

}  // namespace cdc
