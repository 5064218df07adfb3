#pragma once

#include <vector>

#include "cdc/field.hpp"
#include "cdc/geometry.hpp"

namespace cdc {

// Linearized polynomial sum_i coeffs[i] * X^(2^i). coeffs[0] is the
// coefficient of X. Trailing zero coefficients are trimmed, except that the
// zero polynomial keeps a single zero entry.
struct LinPoly {
    std::vector<gf> coeffs;

    int qdeg() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const LinPoly&) const = default;
};

LinPoly lp_trim(LinPoly p);
LinPoly lp_add(const LinPoly& f, const LinPoly& g);

gf evaluate(const FieldContext& F, const LinPoly& p, gf x);

// Monic linearized polynomial of q-degree dim(U) whose root set is exactly
// U, built through the chain of degree-one factors.
LinPoly subspace_polynomial(const FieldContext& F, const Subspace& U);

// Composition f(g(X)). Exponents are not reduced unless reduce_mod_field is
// set, in which case X^(2^n) is folded onto X.
LinPoly symbolic_compose(const FieldContext& F, const LinPoly& f,
                         const LinPoly& g, bool reduce_mod_field = false);

// Determinant of the matrix (elems[j]^(2^i)), 0 <= i, j < k.
gf moore_determinant(const FieldContext& F, const std::vector<gf>& elems);

// Invariants (d_1, ..., d_k) of U read off the subspace polynomial:
// d_i is the coefficient of X^(2^(k-i)). d_k is the product of the nonzero
// elements of U.
std::vector<gf> dickson_invariants(const FieldContext& F, const Subspace& U);

// Last invariant d_k; 1 for the zero subspace.
gf delta(const FieldContext& F, const Subspace& U);

// Root space and image of the F_2-linear map induced by p.
Subspace kernel(const FieldContext& F, const LinPoly& p);
Subspace image(const FieldContext& F, const LinPoly& p);

// U-degree-reversed polynomial sum_i (a_i X)^(2^(k-i)) of a q-degree-k p.
LinPoly reciprocal(const FieldContext& F, const LinPoly& p);

// Image of the subspace map of U; dimension n - dim U.
Subspace opposite_subspace(const FieldContext& F, const Subspace& U);

// The dim(U)-dimensional companion space generated by the quotients
// delta(basis minus one element) / delta(U); equal to the square root of
// the root space of the reversed subspace polynomial.
Subspace adjoint_subspace(const FieldContext& F, const Subspace& U);

// For a plane E, the plane formed by 0 and the seven values delta(L) over
// the lines L of E.
Subspace delta_line_map(const FieldContext& F, const Subspace& E);

}  // namespace cdc
