#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cdc/field.hpp"
#include "cdc/geometry.hpp"

namespace cdc {

struct Orbit {
    Subspace representative;  // member with the smallest key
    std::uint64_t size = 0;
};

// Orbits of k-dimensional subspaces under the group generated by scalar
// multiplication with alpha and the Frobenius map (order n (2^n - 1)).
// Exhaustive sweep; cost grows with the Gaussian binomial [n, k].
// Requires n * k <= 64 so subspace keys fit one word.
std::vector<Orbit> orbit_representatives(const FieldContext& F, int k);

// Every member of the orbit of U, in canonical order.
std::vector<Subspace> orbit_of(const FieldContext& F, const Subspace& U);

// Planes <1, a, b> with b^2 + b = omega (a^2 + a) for a fixed primitive cube
// root omega, one plane per solution class. Defined for even n; for odd n
// there is no cube root and the list is empty.
std::vector<Subspace> special_planes(const FieldContext& F);

// Distribution of mu over the special planes: map from mu to plane count.
std::map<int, long long> mu_distribution(const FieldContext& F);

}  // namespace cdc
