#pragma once

#include <cstdint>
#include <vector>

#include "cdc/field.hpp"
#include "cdc/sigma.hpp"

namespace cdc {

// Selecting a row set I of a collision matrix yields a net gain of
//   sum_{i in I} (6 - r_i)  +  #{columns covered by I},
// where r_i is the row sum. The solvers below maximize this quantity.

struct RrpSolution {
    std::vector<int> rows;  // chosen row indices, ascending
    long long value = 0;
    bool proven = true;  // false when the branch and bound hit its budget
    unsigned long long nodes = 0;
};

long long rrp_objective(const CollisionMatrix& cm, const std::vector<int>& rows);

// Exact maximum via branch and bound. Rows with sum below six are always
// beneficial and rows at exactly six never hurt, so both are taken up
// front; the search only branches on the remaining rows.
RrpSolution solve_rrp(const CollisionMatrix& cm,
                      unsigned long long node_budget = 1ull << 26);

// Forced rows plus best-marginal additions while the marginal is positive.
RrpSolution greedy_rrp(const CollisionMatrix& cm);

struct GainBounds {
    long long lower = 0;  // greedy value
    long long upper = 0;  // admissible root bound
};
GainBounds gain_bounds(const CollisionMatrix& cm);

// sum_w A_w max(0, 2w - mu - 1) for the weight distribution of the code.
long long code_gain_sum(const AssociatedCode& code);

// Net-gain bound implied by the associated code alone:
//   2^(n-3-k) code_gain_sum + 2^(n-3) - 1.
long long upper_bound_from_code(int n, const AssociatedCode& code);

// Largest possible code_gain_sum over the projective binary [mu, k] codes
// (distinct nonzero generator columns), by exhausting the k-dimensional
// subspaces of F_2^mu. gamma is the bound normalized by 2^k.
struct CodeSumBound {
    long long bound = 0;
    double gamma = 0.0;
};
CodeSumBound code_sum_bound(int mu, int k);

struct ReferenceBounds {
    int v = 0;
    int n = 0;                              // v - 3
    unsigned long long lifted_mrd = 0;      // 4^n
    unsigned long long lmrd_code_bound = 0; // 4^n + [n, 2]
    unsigned long long ambient_upper = 0;   // floor((2^v-1)(2^(v-1)-1)/21)
    long long min_n1_beating_lmrd = 0;      // least N1 exceeding the code bound
    long long family_n1_lower = 0;          // congruence-family gain, 0 if none
    long long asymptotic_n1_lower = 0;      // (1 + gamma) 2^(n-3), 0 for n < 8
};

ReferenceBounds reference_bounds(int v);  // 6 <= v <= 16

// 4^(v-3) + n1 (2^(v-3) - 1).
unsigned long long code_size_from_n1(int v, long long n1);

}  // namespace cdc
