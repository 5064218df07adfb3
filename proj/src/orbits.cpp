#include "cdc/orbits.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <stdexcept>

#include "cdc/sigma.hpp"

namespace cdc {

namespace {

constexpr int kMaxK = 8;

// In-place reduced echelon form for a handful of rows. Inputs are always
// images of a basis under invertible semilinear maps, so rank stays k.
void rref_small(std::uint32_t* r, int k) {
    for (int i = 0; i < k; ++i) {
        int best = i;
        for (int j = i + 1; j < k; ++j) {
            if (r[j] > r[best]) best = j;
        }
        std::swap(r[i], r[best]);
        const std::uint32_t piv = std::bit_floor(r[i]);
        for (int j = 0; j < k; ++j) {
            if (j != i && (r[j] & piv)) r[j] ^= r[i];
        }
    }
}

std::uint64_t fold_key(const std::uint32_t* r, int k, int n) {
    std::uint64_t key = 0;
    for (int t = 0; t < k; ++t) key = (key << n) | r[t];
    return key;
}

void unfold_key(std::uint64_t key, std::uint32_t* r, int k, int n) {
    const std::uint32_t mask = (n < 32 ? (1u << n) : 0u) - 1u;
    for (int t = k - 1; t >= 0; --t) {
        r[t] = static_cast<std::uint32_t>(key) & mask;
        key >>= n;
    }
}

}  // namespace

std::vector<Orbit> orbit_representatives(const FieldContext& F, int k) {
    const int n = F.n();
    if (k < 1 || k > n || k > kMaxK || n * k > 64) {
        throw std::invalid_argument("orbit_representatives: unsupported k");
    }

    std::vector<std::uint64_t> keys;
    rref_patterns(n, k, [&](const std::vector<std::uint32_t>& rows) {
        keys.push_back(fold_key(rows.data(), k, n));
        return true;
    });
    std::sort(keys.begin(), keys.end());
    const auto index_of = [&](std::uint64_t key) {
        const auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it == keys.end() || *it != key) {
            throw std::logic_error("orbit image is not an enumerated subspace");
        }
        return static_cast<std::size_t>(it - keys.begin());
    };

    // Flood each orbit under the two group generators. Scanning keys in
    // ascending order makes the first unvisited member the orbit minimum.
    const gf alpha = F.alpha();
    std::vector<bool> visited(keys.size(), false);
    std::vector<Orbit> out;
    std::vector<std::uint64_t> stack;
    std::array<std::uint32_t, kMaxK> rows, image;
    for (std::size_t start = 0; start < keys.size(); ++start) {
        if (visited[start]) continue;
        visited[start] = true;
        std::uint64_t members = 0;
        stack.assign(1, keys[start]);
        while (!stack.empty()) {
            const std::uint64_t key = stack.back();
            stack.pop_back();
            ++members;
            unfold_key(key, rows.data(), k, n);
            for (int g = 0; g < 2; ++g) {
                for (int t = 0; t < k; ++t) {
                    image[t] = g ? F.mul(rows[t], rows[t])
                                 : F.mul(rows[t], alpha);
                }
                rref_small(image.data(), k);
                const std::size_t at = index_of(fold_key(image.data(), k, n));
                if (!visited[at]) {
                    visited[at] = true;
                    stack.push_back(keys[at]);
                }
            }
        }
        unfold_key(keys[start], rows.data(), k, n);
        out.push_back({Subspace(n, std::vector<gf>(rows.begin(),
                                                   rows.begin() + k)),
                       members});
    }
    std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) {
        return a.representative < b.representative;
    });
    return out;
}

std::vector<Subspace> orbit_of(const FieldContext& F, const Subspace& U) {
    if (U.dim() == 0 || U.n() != F.n()) {
        throw std::invalid_argument("orbit_of: bad subspace");
    }
    std::vector<Subspace> work{U};
    std::set<std::uint64_t> seen{U.key()};
    for (std::size_t head = 0; head < work.size(); ++head) {
        const Subspace X = work[head];
        for (int g = 0; g < 2; ++g) {
            Subspace Y = g ? frobenius_image(F, X) : scale(F, X, F.alpha());
            if (seen.insert(Y.key()).second) work.push_back(Y);
        }
    }
    std::sort(work.begin(), work.end());
    return work;
}

std::vector<Subspace> special_planes(const FieldContext& F) {
    std::vector<Subspace> out;
    const int n = F.n();
    if (n % 2) return out;
    const gf omega = F.alpha_pow(F.order() / 3);
    std::set<std::uint64_t> seen;
    for (gf a = 2; a < F.size(); ++a) {
        const gf y = F.mul(omega, F.mul(a, a ^ 1u));
        if (F.trace(y)) continue;
        const auto roots = F.hilbert90_solve(y);
        if (!roots) throw std::logic_error("trace-zero value without roots");
        Subspace W(n, {1, a, roots->first});
        if (W.dim() == 3 && seen.insert(W.key()).second) out.push_back(W);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, long long> mu_distribution(const FieldContext& F) {
    std::map<int, long long> out;
    for (const auto& W : special_planes(F)) {
        ++out[missing_points(F, W).mu];
    }
    return out;
}

}  // namespace cdc
