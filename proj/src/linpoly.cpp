#include "cdc/linpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdc {

LinPoly lp_trim(LinPoly p) {
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    if (p.coeffs.empty()) p.coeffs.push_back(0);
    return p;
}

LinPoly lp_add(const LinPoly& f, const LinPoly& g) {
    LinPoly r;
    r.coeffs.resize(std::max(f.coeffs.size(), g.coeffs.size()), 0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) r.coeffs[i] ^= f.coeffs[i];
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) r.coeffs[i] ^= g.coeffs[i];
    return lp_trim(r);
}

gf evaluate(const FieldContext& F, const LinPoly& p, gf x) {
    gf acc = 0, t = x;
    for (gf c : p.coeffs) {
        acc ^= F.mul(c, t);
        t = F.mul(t, t);
    }
    return acc;
}

LinPoly subspace_polynomial(const FieldContext& F, const Subspace& U) {
    if (U.n() != F.n()) {
        throw std::invalid_argument("subspace_polynomial: ambient mismatch");
    }
    LinPoly p{{1}};  // X
    for (gf b : U.rows()) {
        const gf c = evaluate(F, p, b);
        // (X^2 + c X) o p
        LinPoly q;
        q.coeffs.assign(p.coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
            q.coeffs[i] ^= F.mul(c, p.coeffs[i]);
            q.coeffs[i + 1] ^= F.mul(p.coeffs[i], p.coeffs[i]);
        }
        p = std::move(q);
    }
    return p;
}

LinPoly symbolic_compose(const FieldContext& F, const LinPoly& f,
                         const LinPoly& g, bool reduce_mod_field) {
    const int n = F.n();
    LinPoly r;
    const std::size_t len = reduce_mod_field
                                ? std::min<std::size_t>(
                                      f.coeffs.size() + g.coeffs.size() - 1, n)
                                : f.coeffs.size() + g.coeffs.size() - 1;
    r.coeffs.assign(len, 0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            if (g.coeffs[j] == 0) continue;
            const gf term = F.mul(f.coeffs[i], F.frobenius_iter(g.coeffs[j],
                                                                static_cast<int>(i)));
            std::size_t k = i + j;
            if (reduce_mod_field && k >= static_cast<std::size_t>(n)) k -= n;
            r.coeffs[k] ^= term;
        }
    }
    return lp_trim(r);
}

gf moore_determinant(const FieldContext& F, const std::vector<gf>& elems) {
    const std::size_t k = elems.size();
    if (k == 0) return 1;
    std::vector<std::vector<gf>> m(k, std::vector<gf>(k));
    for (std::size_t j = 0; j < k; ++j) {
        gf t = elems[j];
        for (std::size_t i = 0; i < k; ++i) {
            m[i][j] = t;
            t = F.mul(t, t);
        }
    }
    gf det = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != col) std::swap(m[piv], m[col]);
        det = F.mul(det, m[col][col]);
        const gf ipiv = F.inv(m[col][col]);
        for (std::size_t r = col + 1; r < k; ++r) {
            if (m[r][col] == 0) continue;
            const gf f = F.mul(m[r][col], ipiv);
            for (std::size_t c = col; c < k; ++c) {
                m[r][c] ^= F.mul(f, m[col][c]);
            }
        }
    }
    return det;
}

std::vector<gf> dickson_invariants(const FieldContext& F, const Subspace& U) {
    const LinPoly s = subspace_polynomial(F, U);
    const int k = U.dim();
    std::vector<gf> d(k);
    for (int i = 1; i <= k; ++i) d[i - 1] = s.coeffs[k - i];
    return d;
}

gf delta(const FieldContext& F, const Subspace& U) {
    if (U.dim() == 0) return 1;
    return dickson_invariants(F, U).back();
}

Subspace kernel(const FieldContext& F, const LinPoly& p) {
    const int n = F.n();
    // Track preimages while reducing the images of the standard basis.
    std::vector<gf> img_basis, pre_basis, gens;
    for (int j = 0; j < n; ++j) {
        gf x = gf(1) << j;
        gf y = evaluate(F, p, x);
        for (std::size_t i = 0; i < img_basis.size(); ++i) {
            const gf hi = img_basis[i];
            std::uint32_t top = hi;
            int b = -1;
            while (top) {
                ++b;
                top >>= 1;
            }
            if (y & (1u << b)) {
                y ^= hi;
                x ^= pre_basis[i];
            }
        }
        if (y == 0) {
            gens.push_back(x);
        } else {
            // Keep image rows pivot-sorted for deterministic reduction.
            img_basis.push_back(y);
            pre_basis.push_back(x);
            for (std::size_t i = img_basis.size(); i-- > 1;) {
                if (img_basis[i] > img_basis[i - 1]) {
                    std::swap(img_basis[i], img_basis[i - 1]);
                    std::swap(pre_basis[i], pre_basis[i - 1]);
                }
            }
        }
    }
    return Subspace(n, gens);
}

Subspace image(const FieldContext& F, const LinPoly& p) {
    const int n = F.n();
    std::vector<gf> gens;
    for (int j = 0; j < n; ++j) {
        gens.push_back(evaluate(F, p, gf(1) << j));
    }
    return Subspace(n, gens);
}

LinPoly reciprocal(const FieldContext& F, const LinPoly& p) {
    const int k = p.qdeg();
    LinPoly r;
    r.coeffs.assign(k + 1, 0);
    for (int i = 0; i <= k; ++i) {
        r.coeffs[k - i] = F.frobenius_iter(p.coeffs[i], k - i);
    }
    return lp_trim(r);
}

Subspace opposite_subspace(const FieldContext& F, const Subspace& U) {
    return image(F, subspace_polynomial(F, U));
}

Subspace adjoint_subspace(const FieldContext& F, const Subspace& U) {
    const int k = U.dim();
    if (k == 0) return Subspace(F.n(), {});
    if (k <= 3) {
        const gf d = delta(F, U);
        std::vector<gf> gens;
        for (int j = 0; j < k; ++j) {
            std::vector<gf> rest;
            for (int i = 0; i < k; ++i) {
                if (i != j) rest.push_back(U.rows()[i]);
            }
            gens.push_back(F.div(moore_determinant(F, rest), d));
        }
        return Subspace(F.n(), gens);
    }
    // Square root of the root space of the reversed subspace polynomial.
    const Subspace sq = kernel(F, reciprocal(F, subspace_polynomial(F, U)));
    std::vector<gf> gens;
    for (gf r : sq.rows()) gens.push_back(F.sqrt(r));
    return Subspace(F.n(), gens);
}

Subspace delta_line_map(const FieldContext& F, const Subspace& E) {
    if (E.dim() != 3) throw std::invalid_argument("delta_line_map: need a plane");
    std::vector<gf> vals;
    for (const Subspace& L : subspaces_of(E, 2)) {
        vals.push_back(delta(F, L));
    }
    Subspace P(F.n(), vals);
    auto pts = P.points();
    std::sort(vals.begin(), vals.end());
    if (P.dim() != 3 || pts != vals) {
        throw std::logic_error("delta_line_map: line values do not fill a plane");
    }
    return P;
}

}  // namespace cdc
