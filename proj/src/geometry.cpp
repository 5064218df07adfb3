#include "cdc/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdc {

namespace {

int top_bit(std::uint64_t x) {
    int b = -1;
    while (x) {
        ++b;
        x >>= 1;
    }
    return b;
}

// In-place RREF over GF(2); rows end up sorted by descending pivot.
void rref_rows(std::vector<std::uint64_t>& rows) {
    std::vector<std::uint64_t> out;
    for (auto g : rows) {
        for (auto r : out) {
            if (g & (1ull << top_bit(r))) g ^= r;
        }
        if (!g) continue;
        const int p = top_bit(g);
        for (auto& r : out) {
            if (r & (1ull << p)) r ^= g;
        }
        out.push_back(g);
        std::sort(out.begin(), out.end(), std::greater<>());
    }
    rows = std::move(out);
}

}  // namespace

Subspace::Subspace(int n, const std::vector<gf>& generators) : n_(n) {
    std::vector<std::uint64_t> rows(generators.begin(), generators.end());
    for (auto g : rows) {
        if (g >= (1ull << n_)) {
            throw std::invalid_argument("Subspace: generator out of range");
        }
    }
    rref_rows(rows);
    rows_.assign(rows.begin(), rows.end());
}

Subspace::Subspace(int n, std::initializer_list<gf> generators)
    : Subspace(n, std::vector<gf>(generators)) {}

gf Subspace::reduce(gf x) const {
    for (gf r : rows_) {
        const int p = top_bit(r);
        if (x & (1u << p)) x ^= r;
    }
    return x;
}

bool Subspace::contains(const Subspace& other) const {
    for (gf r : other.rows_) {
        if (!contains(r)) return false;
    }
    return true;
}

std::vector<gf> Subspace::points() const {
    std::vector<gf> pts{0};
    pts.reserve(1u << rows_.size());
    for (gf r : rows_) {
        const std::size_t sz = pts.size();
        for (std::size_t i = 0; i < sz; ++i) pts.push_back(pts[i] ^ r);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(pts.begin());  // drop 0
    return pts;
}

std::uint64_t Subspace::key() const {
    if (n_ * dim() > 64) {
        throw std::logic_error("Subspace::key: pattern exceeds 64 bits");
    }
    std::uint64_t k = 0;
    for (gf r : rows_) k = (k << n_) | r;
    return k;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
    if (auto c = dim() <=> o.dim(); c != 0) return c;
    for (int i = 0; i < dim(); ++i) {
        if (auto c = rows_[i] <=> o.rows_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.n() != b.n()) throw std::invalid_argument("intersect: mixed ambients");
    const int n = a.n();
    // Zassenhaus: reduce rows (x | x) for x in A and (y | 0) for y in B; the
    // rows whose left half vanishes have right halves spanning the meet.
    std::vector<std::uint64_t> rows;
    for (gf x : a.rows()) rows.push_back((std::uint64_t(x) << n) | x);
    for (gf y : b.rows()) rows.push_back(std::uint64_t(y) << n);
    rref_rows(rows);
    std::vector<gf> gens;
    for (auto r : rows) {
        if ((r >> n) == 0 && r) gens.push_back(static_cast<gf>(r));
    }
    return Subspace(n, gens);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.n() != b.n()) throw std::invalid_argument("sum: mixed ambients");
    std::vector<gf> gens = a.rows();
    gens.insert(gens.end(), b.rows().begin(), b.rows().end());
    return Subspace(a.n(), gens);
}

Subspace trace_orthogonal(const FieldContext& F, const Subspace& U) {
    const int n = F.n();
    if (U.n() != n) throw std::invalid_argument("trace_orthogonal: ambient");
    // Constraint row per basis element u: bit j set iff Tr(alpha^j * u) = 1.
    std::vector<std::uint64_t> cons;
    for (gf u : U.rows()) {
        std::uint64_t c = 0;
        for (int j = 0; j < n; ++j) {
            if (F.trace(F.mul(F.alpha_pow(j), u)) == 1) c |= 1ull << j;
        }
        cons.push_back(c);
    }
    rref_rows(cons);
    // Null space basis: one generator per free column.
    std::vector<int> pivots;
    for (auto r : cons) pivots.push_back(top_bit(r));
    std::vector<gf> gens;
    for (int f = 0; f < n; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        gf v = gf(1) << f;
        for (std::size_t i = 0; i < cons.size(); ++i) {
            if ((cons[i] >> f) & 1) v ^= gf(1) << pivots[i];
        }
        gens.push_back(v);
    }
    return Subspace(n, gens);
}

Subspace scale(const FieldContext& F, const Subspace& U, gf r) {
    if (r == 0) throw std::invalid_argument("scale: zero multiplier");
    std::vector<gf> gens;
    for (gf u : U.rows()) gens.push_back(F.mul(r, u));
    return Subspace(U.n(), gens);
}

Subspace frobenius_image(const FieldContext& F, const Subspace& U) {
    std::vector<gf> gens;
    for (gf u : U.rows()) gens.push_back(F.frobenius(u));
    return Subspace(U.n(), gens);
}

void rref_patterns(
    int m, int k,
    const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
    if (k < 0 || k > m) return;
    std::vector<std::uint32_t> rows(k, 0);
    std::vector<int> piv(k, 0);

    // free_pos[i]: non-pivot positions below piv[i], fixed once pivots chosen.
    std::vector<std::vector<int>> free_pos(k);
    bool stop = false;

    std::function<void(int)> fill_rows = [&](int i) {
        if (stop) return;
        if (i == k) {
            if (!fn(rows)) stop = true;
            return;
        }
        const auto& fp = free_pos[i];
        const std::uint32_t lim = 1u << fp.size();
        for (std::uint32_t mask = 0; mask < lim && !stop; ++mask) {
            std::uint32_t row = 1u << piv[i];
            for (std::size_t t = 0; t < fp.size(); ++t) {
                if ((mask >> t) & 1) row |= 1u << fp[t];
            }
            rows[i] = row;
            fill_rows(i + 1);
        }
    };

    std::function<void(int, int)> choose_piv = [&](int i, int hi) {
        if (stop) return;
        if (i == k) {
            for (int r = 0; r < k; ++r) {
                free_pos[r].clear();
                for (int p = 0; p < piv[r]; ++p) {
                    bool is_piv = false;
                    for (int t = 0; t < k; ++t) {
                        if (piv[t] == p) is_piv = true;
                    }
                    if (!is_piv) free_pos[r].push_back(p);
                }
            }
            fill_rows(0);
            return;
        }
        // Row i needs pivot below hi while leaving room for k-1-i more rows.
        for (int p = hi - 1; p >= k - 1 - i; --p) {
            piv[i] = p;
            choose_piv(i + 1, p);
        }
    };

    if (k == 0) {
        fn(rows);
        return;
    }
    choose_piv(0, m);
}

std::vector<Subspace> all_subspaces(const FieldContext& F, int k) {
    std::vector<Subspace> out;
    out.reserve(gaussian_binomial(F.n(), k));
    rref_patterns(F.n(), k, [&](const std::vector<std::uint32_t>& rows) {
        out.emplace_back(F.n(), std::vector<gf>(rows.begin(), rows.end()));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_subspace(const FieldContext& F, int k,
                       const std::function<bool(const Subspace&)>& fn) {
    rref_patterns(F.n(), k, [&](const std::vector<std::uint32_t>& rows) {
        return fn(Subspace(F.n(), std::vector<gf>(rows.begin(), rows.end())));
    });
}

std::vector<Subspace> superspaces(const FieldContext& F, const Subspace& U,
                                  int k) {
    const int n = F.n();
    if (U.n() != n || k < U.dim() || k > n) {
        throw std::invalid_argument("superspaces: bad arguments");
    }
    std::vector<int> free_positions;
    std::vector<int> pivots;
    for (gf r : U.rows()) pivots.push_back(top_bit(r));
    for (int p = 0; p < n; ++p) {
        if (std::find(pivots.begin(), pivots.end(), p) == pivots.end()) {
            free_positions.push_back(p);
        }
    }
    std::vector<Subspace> out;
    rref_patterns(static_cast<int>(free_positions.size()), k - U.dim(),
                  [&](const std::vector<std::uint32_t>& rows) {
                      std::vector<gf> gens = U.rows();
                      for (auto r : rows) {
                          gf v = 0;
                          for (std::size_t t = 0; t < free_positions.size(); ++t) {
                              if ((r >> t) & 1) v |= gf(1) << free_positions[t];
                          }
                          gens.push_back(v);
                      }
                      out.emplace_back(n, gens);
                      return true;
                  });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> subspaces_of(const Subspace& U, int j) {
    if (j < 0 || j > U.dim()) {
        throw std::invalid_argument("subspaces_of: bad dimension");
    }
    std::vector<Subspace> out;
    rref_patterns(U.dim(), j, [&](const std::vector<std::uint32_t>& rows) {
        std::vector<gf> gens;
        for (auto r : rows) {
            gf v = 0;
            for (int t = 0; t < U.dim(); ++t) {
                if ((r >> t) & 1) v ^= U.rows()[t];
            }
            gens.push_back(v);
        }
        out.emplace_back(U.n(), gens);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<gf> quotient_reps(const FieldContext& F, const Subspace& U) {
    const int n = F.n();
    if (U.n() != n) throw std::invalid_argument("quotient_reps: ambient");
    std::vector<int> free_positions;
    std::vector<int> pivots;
    for (gf r : U.rows()) pivots.push_back(top_bit(r));
    for (int p = 0; p < n; ++p) {
        if (std::find(pivots.begin(), pivots.end(), p) == pivots.end()) {
            free_positions.push_back(p);
        }
    }
    std::vector<gf> reps;
    const std::uint32_t lim = 1u << free_positions.size();
    reps.reserve(lim - 1);
    for (std::uint32_t mask = 1; mask < lim; ++mask) {
        gf v = 0;
        for (std::size_t t = 0; t < free_positions.size(); ++t) {
            if ((mask >> t) & 1) v |= gf(1) << free_positions[t];
        }
        reps.push_back(v);
    }
    return reps;
}

unsigned long long gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    using u128 = unsigned __int128;
    // [n, k] = [n-1, k-1] + 2^k * [n-1, k], row by row.
    std::vector<u128> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            row[j] = (u128(1) << j) * row[j] + row[j - 1];
        }
    }
    if (row[k] > u128(~0ull)) {
        throw std::overflow_error("gaussian_binomial: result exceeds 64 bits");
    }
    return static_cast<unsigned long long>(row[k]);
}

}  // namespace cdc
