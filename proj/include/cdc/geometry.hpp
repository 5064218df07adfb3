#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "cdc/field.hpp"

namespace cdc {

// An F_2-subspace of GF(2^n), held in reduced row echelon form. Rows are
// ordered by descending pivot position, so rows()[0] carries the highest
// pivot. Equal subspaces always compare equal.
class Subspace {
public:
    Subspace() : n_(0) {}
    Subspace(int n, const std::vector<gf>& generators);
    Subspace(int n, std::initializer_list<gf> generators);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<gf>& rows() const { return rows_; }

    bool contains(gf x) const { return reduce(x) == 0; }
    bool contains(const Subspace& other) const;

    // Canonical coset representative: x with every pivot bit cleared. This
    // is the minimal element of x + U under the integer order.
    gf reduce(gf x) const;

    // The 2^dim - 1 nonzero elements, ascending.
    std::vector<gf> points() const;

    // Rows concatenated into one integer, rows()[0] most significant, n bits
    // per row. Requires n * dim <= 64.
    std::uint64_t key() const;

    bool operator==(const Subspace& o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }
    // Orders first by dimension, then by the concatenated-row bit pattern.
    std::strong_ordering operator<=>(const Subspace& o) const;

private:
    int n_;
    std::vector<gf> rows_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// { x : Tr(x*u) = 0 for all u in U }.
Subspace trace_orthogonal(const FieldContext& F, const Subspace& U);

Subspace scale(const FieldContext& F, const Subspace& U, gf r);      // r*U
Subspace frobenius_image(const FieldContext& F, const Subspace& U);  // U^2

// All k-dimensional subspaces, ascending in the canonical order.
std::vector<Subspace> all_subspaces(const FieldContext& F, int k);

// Same collection, streamed without materialization. Enumeration order is
// unspecified; the callback returns false to stop early.
void for_each_subspace(const FieldContext& F, int k,
                       const std::function<bool(const Subspace&)>& fn);

// All k-dimensional subspaces containing U, ascending.
std::vector<Subspace> superspaces(const FieldContext& F, const Subspace& U,
                                  int k);

// All j-dimensional subspaces of U, ascending (j <= dim U).
std::vector<Subspace> subspaces_of(const Subspace& U, int j);

// Canonical representatives of the nonzero cosets of U, ascending. Each
// representative is the minimal element of its coset.
std::vector<gf> quotient_reps(const FieldContext& F, const Subspace& U);

// Gaussian binomial [n, k]_2. Must fit in 64 bits.
unsigned long long gaussian_binomial(int n, int k);

// Raw RREF enumeration over F_2^m: every k-row reduced echelon pattern.
// Used by the enumeration routines and the orbit machinery.
void rref_patterns(int m, int k,
                   const std::function<bool(const std::vector<std::uint32_t>&)>& fn);

}  // namespace cdc
