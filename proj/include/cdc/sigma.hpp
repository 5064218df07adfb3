#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cdc/field.hpp"
#include "cdc/geometry.hpp"

namespace cdc {

// Invariant of a plane E meeting the reference plane W in a line Z:
// delta(E) / delta(Z)^3. Requires dim(E meet W) = 2 and E != W; for the
// value attached to W itself along a fixed line use sigma_line_value with
// an argument from W \ Z.
gf sigma_invariant(const FieldContext& F, const Subspace& W, const Subspace& E);

// Restriction of the invariant to planes through the line Z, evaluated at
// x outside Z: s_Z(x) / delta(Z)^2. Constant on cosets of Z.
gf sigma_line_value(const FieldContext& F, const Subspace& Z, gf x);

// (W^2)-trace-orthogonal space; dimension n - 3. Invariant values landing
// here are exactly the values attained more than once.
Subspace collision_space(const FieldContext& F, const Subspace& W);

struct MissingPoints {
    std::vector<gf> values;    // the 7 values delta(W)/delta(Z)^3, sorted,
                               // kept with multiplicity
    int mu = 0;                // how many lie in the collision space
    std::uint64_t image_size;  // number of distinct attained invariant values
};

MissingPoints missing_points(const FieldContext& F, const Subspace& W);

// The hyperplane attached to a line Z <= W: kernel of
// x -> Tr(sqrt(delta(W)/delta(Z)^3) * x). Contains Z; contains W exactly
// when the missing value of Z lies in the collision space.
Subspace hyperplane_HZ(const FieldContext& F, const Subspace& W,
                       const Subspace& Z);

struct CollisionMatrix {
    int n = 0;
    Subspace W;
    std::vector<gf> row_labels;  // solid coset representatives, ascending
    std::vector<gf> col_labels;  // nonzero collision-space points, ascending
    std::vector<std::vector<int>> entries;

    int m() const { return static_cast<int>(row_labels.size()); }
    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;
};

CollisionMatrix collision_matrix(const FieldContext& F, const Subspace& W);

struct ColumnInfo {
    int support_size = 0;  // 7, 3 or 1
    int entry = 0;         // 1, 2 or 4
    Subspace support;      // span of the supporting coset representatives
};

struct ColumnTypeReport {
    std::vector<ColumnInfo> columns;
    int n_entry1 = 0, n_entry2 = 0, n_entry4 = 0;
    int row_parity = 0;  // common parity of all row sums
};

// Classifies every column; throws std::logic_error when a column violates
// the structural constraints (support sizes, entry values, subspace
// supports, unique even-n quadruple column, row parity).
ColumnTypeReport column_types(const FieldContext& F, const CollisionMatrix& cm);

struct AssociatedCode {
    int mu = 0;  // code length; 0 when no missing value is collision-bound
    int k = 0;   // code dimension = dim of the hull
    Subspace hull;
    std::vector<std::uint32_t> columns;  // hull-basis coordinates, one per value
    std::vector<long long> weights;      // A_0 .. A_mu
};

AssociatedCode associated_code(const FieldContext& F, const Subspace& W);

// Row-sum distribution (sum -> number of rows), tallied from the matrix.
std::map<int, long long> row_sum_spectrum(const CollisionMatrix& cm);

// The same distribution predicted from the associated code of W.
std::map<int, long long> row_sum_spectrum(const FieldContext& F,
                                          const AssociatedCode& code);

// Are two integer matrices equal up to independent row and column
// permutations? Exact decision via refinement plus backtracking.
bool matrix_equivalent(const std::vector<std::vector<int>>& A,
                       const std::vector<std::vector<int>>& B);

}  // namespace cdc
