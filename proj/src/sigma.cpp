#include "cdc/sigma.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cdc/linpoly.hpp"

namespace cdc {

gf sigma_invariant(const FieldContext& F, const Subspace& W,
                   const Subspace& E) {
    if (W.dim() != 3 || E.dim() != 3) {
        throw std::invalid_argument("sigma_invariant: need planes");
    }
    if (E == W) {
        throw std::domain_error(
            "sigma_invariant: E = W has one value per line; use "
            "sigma_line_value on W \\ Z");
    }
    Subspace Z = intersect(E, W);
    if (Z.dim() != 2) {
        throw std::invalid_argument("sigma_invariant: E must meet W in a line");
    }
    const gf dZ = delta(F, Z);
    return F.div(delta(F, E), F.mul(dZ, F.mul(dZ, dZ)));
}

gf sigma_line_value(const FieldContext& F, const Subspace& Z, gf x) {
    if (Z.dim() != 2) throw std::invalid_argument("sigma_line_value: need a line");
    if (Z.contains(x)) {
        throw std::invalid_argument("sigma_line_value: x lies on the line");
    }
    const gf dZ = delta(F, Z);
    return F.div(evaluate(F, subspace_polynomial(F, Z), x), F.mul(dZ, dZ));
}

Subspace collision_space(const FieldContext& F, const Subspace& W) {
    return trace_orthogonal(F, frobenius_image(F, W));
}

MissingPoints missing_points(const FieldContext& F, const Subspace& W) {
    if (W.dim() != 3) throw std::invalid_argument("missing_points: need a plane");
    MissingPoints mp;
    const Subspace cs = collision_space(F, W);
    const gf dW = delta(F, W);
    for (const Subspace& Z : subspaces_of(W, 2)) {
        const gf dZ = delta(F, Z);
        const gf val = F.div(dW, F.mul(dZ, F.mul(dZ, dZ)));
        mp.values.push_back(val);
        if (cs.contains(val)) ++mp.mu;
    }
    std::sort(mp.values.begin(), mp.values.end());
    mp.image_size = F.order() - (7 - mp.mu);
    return mp;
}

Subspace hyperplane_HZ(const FieldContext& F, const Subspace& W,
                       const Subspace& Z) {
    if (!W.contains(Z) || Z.dim() != 2) {
        throw std::invalid_argument("hyperplane_HZ: Z must be a line of W");
    }
    const gf dZ = delta(F, Z);
    const gf mval = F.div(delta(F, W), F.mul(dZ, F.mul(dZ, dZ)));
    return trace_orthogonal(F, Subspace(F.n(), {F.sqrt(mval)}));
}

std::vector<int> CollisionMatrix::row_sums() const {
    std::vector<int> s;
    for (const auto& row : entries) {
        int acc = 0;
        for (int e : row) acc += e;
        s.push_back(acc);
    }
    return s;
}

std::vector<int> CollisionMatrix::col_sums() const {
    std::vector<int> s(col_labels.size(), 0);
    for (const auto& row : entries) {
        for (std::size_t j = 0; j < row.size(); ++j) s[j] += row[j];
    }
    return s;
}

CollisionMatrix collision_matrix(const FieldContext& F, const Subspace& W) {
    if (W.dim() != 3) throw std::invalid_argument("collision_matrix: need a plane");
    CollisionMatrix cm;
    cm.n = F.n();
    cm.W = W;
    cm.row_labels = quotient_reps(F, W);
    cm.col_labels = collision_space(F, W).points();
    cm.entries.assign(cm.row_labels.size(),
                      std::vector<int>(cm.col_labels.size(), 0));

    const auto wpts = W.points();
    struct LineData {
        LinPoly s;
        gf inv_d2;
        gf c;  // a point of W off the line
    };
    std::vector<LineData> lines;
    for (const Subspace& Z : subspaces_of(W, 2)) {
        LineData ld;
        ld.s = subspace_polynomial(F, Z);
        const gf dZ = delta(F, Z);
        ld.inv_d2 = F.inv(F.mul(dZ, dZ));
        ld.c = 0;
        for (gf w : wpts) {
            if (!Z.contains(w)) {
                ld.c = w;
                break;
            }
        }
        lines.push_back(std::move(ld));
    }

    for (std::size_t i = 0; i < cm.row_labels.size(); ++i) {
        const gf u = cm.row_labels[i];
        for (const auto& ld : lines) {
            for (const gf x : {u, gf(u ^ ld.c)}) {
                const gf s = F.mul(evaluate(F, ld.s, x), ld.inv_d2);
                const auto it = std::lower_bound(cm.col_labels.begin(),
                                                 cm.col_labels.end(), s);
                if (it != cm.col_labels.end() && *it == s) {
                    ++cm.entries[i][it - cm.col_labels.begin()];
                }
            }
        }
    }
    return cm;
}

ColumnTypeReport column_types(const FieldContext& F, const CollisionMatrix& cm) {
    ColumnTypeReport rep;
    const int m = cm.m();
    for (std::size_t j = 0; j < cm.col_labels.size(); ++j) {
        ColumnInfo info;
        std::vector<gf> sup;
        int entry = 0;
        for (int i = 0; i < m; ++i) {
            const int e = cm.entries[i][j];
            if (e == 0) continue;
            if (entry == 0) entry = e;
            if (e != entry) {
                throw std::logic_error("column_types: mixed entries in a column");
            }
            sup.push_back(cm.row_labels[i]);
        }
        info.entry = entry;
        info.support_size = static_cast<int>(sup.size());
        const bool shape_ok = (entry == 1 && sup.size() == 7) ||
                              (entry == 2 && sup.size() == 3) ||
                              (entry == 4 && sup.size() == 1);
        if (!shape_ok) {
            throw std::logic_error("column_types: column is not of type 1/2/4");
        }
        info.support = Subspace(cm.n, sup);
        // The supporting representatives together with 0 must form a
        // subspace of the quotient space.
        if ((1u << info.support.dim()) != sup.size() + 1 ||
            info.support.points() != [&] {
                std::vector<gf> s = sup;
                std::sort(s.begin(), s.end());
                return s;
            }()) {
            throw std::logic_error("column_types: support is not a subspace");
        }
        if (entry == 1) ++rep.n_entry1;
        if (entry == 2) ++rep.n_entry2;
        if (entry == 4) ++rep.n_entry4;
        rep.columns.push_back(std::move(info));
    }
    if (rep.n_entry4 > 1 || (rep.n_entry4 == 1 && F.n() % 2 != 0)) {
        throw std::logic_error("column_types: illegal quadruple column");
    }
    const auto sums = cm.row_sums();
    for (int s : sums) {
        if ((s & 1) != (sums[0] & 1)) {
            throw std::logic_error("column_types: row sums of mixed parity");
        }
    }
    if (!sums.empty() && (sums[0] & 1) != (rep.n_entry1 & 1)) {
        throw std::logic_error("column_types: parity does not match 1-columns");
    }
    rep.row_parity = sums.empty() ? 0 : (sums[0] & 1);
    return rep;
}

AssociatedCode associated_code(const FieldContext& F, const Subspace& W) {
    AssociatedCode code;
    const Subspace cs = collision_space(F, W);
    std::vector<gf> pts;
    for (gf v : missing_points(F, W).values) {
        if (cs.contains(v)) pts.push_back(v);
    }
    code.mu = static_cast<int>(pts.size());
    code.hull = Subspace(F.n(), pts);
    code.k = code.hull.dim();
    if (code.mu == 0) return code;

    std::vector<int> pivots;
    for (gf r : code.hull.rows()) {
        int b = -1;
        for (gf t = r; t; t >>= 1) ++b;
        pivots.push_back(b);
    }
    for (gf p : pts) {
        std::uint32_t coord = 0;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if ((p >> pivots[i]) & 1) coord |= 1u << i;
        }
        code.columns.push_back(coord);
    }
    code.weights.assign(code.mu + 1, 0);
    for (std::uint32_t lambda = 0; lambda < (1u << code.k); ++lambda) {
        int wt = 0;
        for (std::uint32_t col : code.columns) {
            wt += std::popcount(lambda & col) & 1;
        }
        ++code.weights[wt];
    }
    return code;
}

std::map<int, long long> row_sum_spectrum(const CollisionMatrix& cm) {
    std::map<int, long long> spec;
    for (int s : cm.row_sums()) ++spec[s];
    return spec;
}

std::map<int, long long> row_sum_spectrum(const FieldContext& F,
                                          const AssociatedCode& code) {
    std::map<int, long long> spec;
    const int n = F.n();
    if (code.mu == 0) {
        spec[7] = (1ll << (n - 3)) - 1;
        return spec;
    }
    const long long scale = 1ll << (n - 3 - code.k);
    for (int i = 0; i <= code.mu; ++i) {
        if (code.weights[i] == 0) continue;
        spec[code.mu + 7 - 2 * i] += code.weights[i] * scale;
    }
    // The zero codeword accounts for one solid fewer than its class size.
    if (--spec[code.mu + 7] == 0) spec.erase(code.mu + 7);
    return spec;
}

namespace {

using Mat = std::vector<std::vector<int>>;
using Sig = std::pair<int, std::vector<std::pair<int, int>>>;

struct ColorState {
    std::vector<int> rA, cA, rB, cB;
};

int distinct_count(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

// One joint recoloring pass; false when the color histograms diverge.
bool refine(const Mat& A, const Mat& B, ColorState& st) {
    const int R = static_cast<int>(A.size());
    const int C = static_cast<int>(A[0].size());
    for (;;) {
        const int before =
            distinct_count(st.rA, st.rB) + distinct_count(st.cA, st.cB);

        std::map<Sig, int> row_ids;
        auto row_sig = [&](const Mat& M, const std::vector<int>& rc,
                           const std::vector<int>& cc, int i) {
            Sig s;
            s.first = rc[i];
            s.second.reserve(C);
            for (int j = 0; j < C; ++j) s.second.emplace_back(cc[j], M[i][j]);
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::vector<int> nrA(R), nrB(R);
        for (int i = 0; i < R; ++i) {
            nrA[i] = row_ids.emplace(row_sig(A, st.rA, st.cA, i),
                                     static_cast<int>(row_ids.size()))
                         .first->second;
        }
        for (int i = 0; i < R; ++i) {
            auto it = row_ids.find(row_sig(B, st.rB, st.cB, i));
            if (it == row_ids.end()) return false;
            nrB[i] = it->second;
        }
        std::map<Sig, int> col_ids;
        auto col_sig = [&](const Mat& M, const std::vector<int>& rc,
                           const std::vector<int>& cc, int j) {
            Sig s;
            s.first = cc[j];
            s.second.reserve(R);
            for (int i = 0; i < R; ++i) s.second.emplace_back(rc[i], M[i][j]);
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::vector<int> ncA(C), ncB(C);
        for (int j = 0; j < C; ++j) {
            ncA[j] = col_ids.emplace(col_sig(A, nrA, st.cA, j),
                                     static_cast<int>(col_ids.size()))
                         .first->second;
        }
        for (int j = 0; j < C; ++j) {
            auto it = col_ids.find(col_sig(B, nrB, st.cB, j));
            if (it == col_ids.end()) return false;
            ncB[j] = it->second;
        }

        auto histogram_ok = [](const std::vector<int>& a,
                               const std::vector<int>& b) {
            std::vector<int> ha = a, hb = b;
            std::sort(ha.begin(), ha.end());
            std::sort(hb.begin(), hb.end());
            return ha == hb;
        };
        if (!histogram_ok(nrA, nrB) || !histogram_ok(ncA, ncB)) return false;

        st.rA = std::move(nrA);
        st.rB = std::move(nrB);
        st.cA = std::move(ncA);
        st.cB = std::move(ncB);
        const int after =
            distinct_count(st.rA, st.rB) + distinct_count(st.cA, st.cB);
        if (after == before) return true;
    }
}

bool search(const Mat& A, const Mat& B, ColorState st) {
    if (!refine(A, B, st)) return false;
    const int R = static_cast<int>(A.size());
    const int C = static_cast<int>(A[0].size());

    // Smallest non-singleton color class, rows preferred.
    auto pick = [](const std::vector<int>& colors) {
        std::map<int, int> cnt;
        for (int c : colors) ++cnt[c];
        int best = -1, size = 1 << 30;
        for (auto [c, k] : cnt) {
            if (k > 1 && k < size) {
                best = c;
                size = k;
            }
        }
        return best;
    };
    int fresh = 0;
    for (int c : st.rA) fresh = std::max(fresh, c + 1);
    for (int c : st.cA) fresh = std::max(fresh, c + 1);

    if (int cls = pick(st.rA); cls >= 0) {
        int a = -1;
        for (int i = 0; i < R; ++i) {
            if (st.rA[i] == cls) {
                a = i;
                break;
            }
        }
        for (int b = 0; b < R; ++b) {
            if (st.rB[b] != cls) continue;
            ColorState next = st;
            next.rA[a] = fresh;
            next.rB[b] = fresh;
            if (search(A, B, std::move(next))) return true;
        }
        return false;
    }
    if (int cls = pick(st.cA); cls >= 0) {
        int a = -1;
        for (int j = 0; j < C; ++j) {
            if (st.cA[j] == cls) {
                a = j;
                break;
            }
        }
        for (int b = 0; b < C; ++b) {
            if (st.cB[b] != cls) continue;
            ColorState next = st;
            next.cA[a] = fresh;
            next.cB[b] = fresh;
            if (search(A, B, std::move(next))) return true;
        }
        return false;
    }

    // Discrete coloring: read off the permutations and verify.
    std::vector<int> rperm(R, -1), cperm(C, -1);
    for (int i = 0; i < R; ++i) {
        for (int b = 0; b < R; ++b) {
            if (st.rB[b] == st.rA[i]) rperm[i] = b;
        }
    }
    for (int j = 0; j < C; ++j) {
        for (int b = 0; b < C; ++b) {
            if (st.cB[b] == st.cA[j]) cperm[j] = b;
        }
    }
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) {
            if (A[i][j] != B[rperm[i]][cperm[j]]) return false;
        }
    }
    return true;
}

}  // namespace

bool matrix_equivalent(const Mat& A, const Mat& B) {
    if (A.size() != B.size()) return false;
    if (A.empty()) return true;
    if (A[0].size() != B[0].size()) return false;
    for (const auto& r : A) {
        if (r.size() != A[0].size()) throw std::invalid_argument("ragged matrix");
    }
    for (const auto& r : B) {
        if (r.size() != B[0].size()) throw std::invalid_argument("ragged matrix");
    }
    ColorState st;
    st.rA.assign(A.size(), 0);
    st.rB.assign(B.size(), 0);
    st.cA.assign(A[0].size(), 0);
    st.cB.assign(B[0].size(), 0);
    return search(A, B, std::move(st));
}

}  // namespace cdc
