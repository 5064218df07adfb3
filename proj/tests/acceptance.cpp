// Acceptance gate: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure. Desk scale by default; --long-run adds the expensive rows.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cdc/codegen.hpp"
#include "cdc/field.hpp"
#include "cdc/geometry.hpp"
#include "cdc/golden.hpp"
#include "cdc/linpoly.hpp"
#include "cdc/orbits.hpp"
#include "cdc/rrp.hpp"
#include "cdc/sigma.hpp"

using namespace cdc;

namespace {

const std::string kData = CDC_DATA_DIR;

bool g_long_run = false;
bool g_all_ok = true;
std::chrono::steady_clock::time_point g_mark;

void start() { g_mark = std::chrono::steady_clock::now(); }

void report(int index, const std::string& name, bool ok,
            const std::string& detail) {
    const double dt = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - g_mark)
                          .count();
    std::printf("[%s] %2d. %s — %s\n", ok ? "PASS" : "FAIL", index,
                name.c_str(), detail.c_str());
    std::fprintf(stderr, "    criterion %d took %.1fs\n", index, dt);
    g_all_ok = g_all_ok && ok;
}

Subspace plane_from_exponents(const FieldContext& F,
                              const std::array<long long, 3>& e) {
    return Subspace(F.n(),
                    {F.alpha_pow(e[0]), F.alpha_pow(e[1]), F.alpha_pow(e[2])});
}

std::set<gf> point_set(const Subspace& U) {
    const auto pts = U.points();
    return {pts.begin(), pts.end()};
}

gf product_of_points(const FieldContext& F, const Subspace& U) {
    gf prod = 1;
    for (gf p : U.points()) prod = F.mul(prod, p);
    return prod;
}

// Orbit representatives and exhaustive sweep values, cached across
// criteria.
std::map<int, std::vector<Orbit>> g_orbits;

const std::vector<Orbit>& orbits_at(int n) {
    auto it = g_orbits.find(n);
    if (it == g_orbits.end()) {
        it = g_orbits.emplace(n, orbit_representatives(FieldContext(n), 3))
                 .first;
    }
    return it->second;
}

// The sweep certifies the maximum: each orbit is either solved to proven
// optimality, or its root upper bound must stay at or below the maximum
// found elsewhere, so it cannot raise the sweep value.
struct SweepResult {
    long long best = 0;
    long long loose_upper = -1;  // largest upper bound among unproven orbits
    bool certified() const { return loose_upper <= best; }
};

SweepResult sweep(int n) {
    FieldContext F(n);
    SweepResult out;
    for (const auto& o : orbits_at(n)) {
        const auto cm = collision_matrix(F, o.representative);
        const auto sol = solve_rrp(cm);
        out.best = std::max(out.best, sol.value);
        if (!sol.proven) {
            out.loose_upper = std::max(out.loose_upper, gain_bounds(cm).upper);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

void criterion1_net_gains() {
    start();
    const std::map<int, long long> want_desk{
        {4, 3}, {5, 3}, {6, 12}, {7, 20}, {8, 54}};
    const std::map<int, long long> want_long{{9, 93}, {10, 234}};
    bool ok = true;
    std::ostringstream detail;
    detail << "N1";
    for (auto [n, want] : want_desk) {
        const auto got = sweep(n);
        ok = ok && got.certified() && got.best == want;
        detail << ' ' << got.best << '/' << want;
    }
    if (g_long_run) {
        for (auto [n, want] : want_long) {
            const auto got = sweep(n);
            ok = ok && got.certified() && got.best == want;
            detail << ' ' << got.best << '/' << want;
        }
    } else {
        detail << " (v=12,13 need --long-run)";
    }
    report(1, "maximum net gains, exhaustive orbit sweeps", ok, detail.str());
}

void criterion2_orbit_counts() {
    start();
    const std::size_t want[]{1, 1, 7, 15, 53, 177, 633};
    bool ok = true;
    std::ostringstream detail;
    detail << "n=4..10:";
    for (int n = 4; n <= 10; ++n) {
        const std::size_t got = orbits_at(n).size();
        ok = ok && got == want[n - 4];
        detail << ' ' << got << '/' << want[n - 4];
    }
    report(2, "plane orbit counts", ok, detail.str());
}

void criterion3_golden_matrices() {
    start();
    bool ok = true;
    std::ostringstream detail;

    {
        FieldContext F(5);
        const auto cm = collision_matrix(F, Subspace(5, {1, 2, 4}));
        const auto golden = load_matrix_file(kData + "/matrix_v8.txt");
        ok = ok && matrix_equivalent(cm.entries, golden);
        detail << "v=8 3x3 " << (ok ? "ok" : "DIFF");
    }
    {
        FieldContext F(6);
        const auto& orbits = orbits_at(6);
        std::vector<int> assigned(orbits.size(), 0);
        int matched = 0;
        for (const auto& g : load_orbit_matrices(kData + "/matrices_v9.txt")) {
            for (std::size_t i = 0; i < orbits.size(); ++i) {
                if (static_cast<long long>(orbits[i].size) != g.orbit_length)
                    continue;
                const auto cm = collision_matrix(F, orbits[i].representative);
                if (!matrix_equivalent(cm.entries, g.matrix)) continue;
                ++assigned[i];
                ++matched;
                break;
            }
        }
        bool one_to_one = matched == 7 && orbits.size() == 7;
        for (int a : assigned) one_to_one = one_to_one && a == 1;
        ok = ok && one_to_one;
        detail << ", v=9 matched " << matched << "/7";
    }
    {
        FieldContext F(8);
        const auto cm =
            collision_matrix(F, plane_from_exponents(F, {0, 17, 34}));
        const auto golden = load_matrix_file(kData + "/figure1.txt");
        const bool fig = cm.m() == 31 && matrix_equivalent(cm.entries, golden);
        ok = ok && fig;
        detail << ", v=11 31x31 " << (fig ? "ok" : "DIFF");
    }
    report(3, "golden collision matrices up to row/column permutation", ok,
           detail.str());
}

void criterion4_missing_points() {
    start();
    bool ok = true;
    std::ostringstream detail;
    {
        FieldContext F(5);
        const auto missing = missing_points(F, Subspace(5, {1, 2, 4}));
        std::vector<gf> want;
        for (long long e : {4, 5, 21, 23, 25, 28, 30})
            want.push_back(F.alpha_pow(e));
        std::sort(want.begin(), want.end());
        ok = ok && missing.values == want;
        detail << "v=8 missing set " << (ok ? "ok" : "DIFF");
    }
    {
        FieldContext F(8);
        const Subspace W = plane_from_exponents(F, {0, 17, 34});
        const auto missing = missing_points(F, W);
        const auto code = associated_code(F, W);
        const std::vector<long long> weights{1, 0, 6, 0, 5, 0, 4, 0};
        const bool good = missing.mu == 7 && code.mu == 7 && code.k == 4 &&
                          code.weights == weights;
        ok = ok && good;
        detail << ", v=11 mu=" << missing.mu << " [7,4] weights "
               << (good ? "ok" : "DIFF");
    }
    report(4, "missing points and the associated code", ok, detail.str());
}

void criterion5_table2() {
    start();
    bool ok = true;
    std::ostringstream detail;
    detail << "n:";
    for (const auto& row : load_table2(kData + "/table2.txt")) {
        if (row.n > 16) continue;
        if (row.n > 12 && !g_long_run) continue;
        const FieldContext F = row.n <= 13 ? FieldContext(row.n)
                                           : FieldContext::internal(row.n);
        const auto dist = mu_distribution(F);
        std::array<long long, 5> got{};
        bool row_ok = true;
        for (auto [mu, count] : dist) {
            if (mu < 3 || mu > 7)
                row_ok = false;
            else
                got[mu - 3] = count;
        }
        for (int i = 0; i < 5; ++i) row_ok = row_ok && got[i] == row.counts[i];
        ok = ok && row_ok;
        detail << ' ' << row.n << (row_ok ? "" : "=DIFF");
    }
    if (!g_long_run) detail << " (14,16 need --long-run)";
    report(5, "special plane invariant distribution", ok, detail.str());
}

void criterion6_codes() {
    start();
    bool ok = true;
    std::ostringstream detail;

    const auto build_and_check = [&](int v, std::size_t want_size) {
        FieldContext F(v - 3);
        const Subspace W = plane_from_exponents(
            F, [&] {
                for (const auto& row : load_table1(kData + "/table1.txt"))
                    if (row.v == v) return row.rep_exponents;
                throw std::logic_error("missing reference row");
            }());
        const auto sol = solve_rrp(collision_matrix(F, W));
        const auto code = assemble_code(F, W, sol);
        const bool good = code.words.size() == want_size &&
                          min_distance_at_least_4(code.words);
        ok = ok && good;
        detail << " v=" << v << ":" << code.words.size() << '/' << want_size
               << (good ? "" : "=FAIL");
    };

    build_and_check(7, 301);
    build_and_check(8, 1117);
    build_and_check(9, 4852);
    if (g_long_run)
        build_and_check(10, 18924);
    else
        detail << " (v=10 needs --long-run)";

    {
        FieldContext F(3);
        const auto base = remove_iii_code(F);
        const auto best = v6_optimal_code(F);
        const bool good = base.size() == 70 && best.size() == 77 &&
                          min_distance_at_least_4(base) &&
                          min_distance_at_least_4(best);
        ok = ok && good;
        detail << " v=6:" << base.size() << "+" << best.size()
               << (good ? "" : "=FAIL");
    }
    report(6, "assembled codes verified at distance 4", ok, detail.str());
}

void criterion7_theorem_bounds() {
    start();
    bool ok = true;
    std::ostringstream detail;

    // Congruence families: attained gains at the smallest members.
    {
        const auto s4 = sweep(4);
        const bool good = s4.best == 3 && s4.certified();  // 3 * 2^(n-4)
        ok = ok && good;
        detail << "family gain n=4: " << s4.best << "/3";
    }
    {
        const auto s8 = sweep(8);
        const bool good = s8.best == 54 && s8.certified();  // 54 * 2^(n-8)
        ok = ok && good;
        detail << ", n=8: " << s8.best << "/54";
    }
    if (g_long_run) {
        FieldContext F(12);
        const auto sol = solve_rrp(
            collision_matrix(F, plane_from_exponents(F, {0, 195, 1170})),
            1ull << 20);
        const bool good = sol.value >= 3 * 256;  // 3 * 2^(n-4) at n = 12
        ok = ok && good;
        detail << ", n=12 solver " << sol.value << ">=768";
    } else {
        detail << ", (n=12 needs --long-run)";
    }

    // Worst-case projective code sums drive the asymptotic coefficients.
    const auto odd = code_sum_bound(4, 4);
    const auto even = code_sum_bound(5, 4);
    const long long v14 = (1ll << 8) + odd.bound * (1ll << 4);
    const long long v15 = (1ll << 9) + even.bound * (1ll << 5);
    const bool arith = v14 == 368 && v15 == 832 &&
                       reference_bounds(14).asymptotic_n1_lower == 368 &&
                       reference_bounds(15).asymptotic_n1_lower == 832;
    ok = ok && arith;
    detail << ", asymptotic " << v14 << "/368 " << v15 << "/832";
    report(7, "theorem gain bounds", ok, detail.str());
}

void criterion8_algebra() {
    start();
    long long violations = 0;
    std::ostringstream detail;

    // Moore determinant = product of nonzero combinations, exhaustive then
    // sampled.
    for (int n : {3, 4, 5}) {
        FieldContext F(n);
        for (gf a = 1; a < F.size(); ++a)
            for (gf b = 1; b < F.size(); ++b)
                for (gf c = 1; c < F.size(); ++c) {
                    const gf det = moore_determinant(F, {a, b, c});
                    Subspace U(n, {a, b, c});
                    const gf want =
                        U.dim() < 3 ? 0 : product_of_points(F, U);
                    violations += det != want;
                }
    }
    std::uint32_t seed = 2026;
    const auto rnd = [&seed](std::uint32_t mod) {
        seed = seed * 1664525u + 1013904223u;
        return (seed >> 7) % mod;
    };
    for (int n = 6; n <= 10; ++n) {
        FieldContext F(n);
        for (int t = 0; t < 2000; ++t) {
            const gf a = 1 + rnd(F.order()), b = 1 + rnd(F.order()),
                     c = 1 + rnd(F.order());
            const gf det = moore_determinant(F, {a, b, c});
            Subspace U(n, {a, b, c});
            const gf want = U.dim() < 3 ? 0 : product_of_points(F, U);
            violations += det != want;
        }
    }
    detail << "moore";

    // Opposite composition and the adjoint complement identity, all
    // subspaces of dimension <= 3.
    for (int n : {4, 5, 6}) {
        FieldContext F(n);
        LinPoly full;
        full.coeffs.assign(n + 1, 0);
        full.coeffs[0] = full.coeffs[n] = 1;
        for (int k = 0; k <= 3; ++k) {
            for (const auto& U : all_subspaces(F, k)) {
                const Subspace Uo = opposite_subspace(F, U);
                violations += symbolic_compose(F, subspace_polynomial(F, Uo),
                                               subspace_polynomial(F, U)) !=
                              full;
                if (k >= 1) {
                    violations += frobenius_image(F, adjoint_subspace(F, U)) !=
                                  trace_orthogonal(F, Uo);
                }
            }
        }
    }
    detail << ", opposite/adjoint";

    // Interval delta maps are bijections onto the companion spaces.
    for (int n : {4, 5, 6}) {
        FieldContext F(n);
        for (int k : {1, 2}) {
            for (const auto& U : all_subspaces(F, k)) {
                const gf dU = delta(F, U);
                std::set<gf> up, down;
                for (const auto& V : superspaces(F, U, k + 1))
                    up.insert(delta(F, V));
                for (const auto& V : subspaces_of(U, k - 1))
                    down.insert(delta(F, V));
                violations +=
                    up != point_set(scale(F, opposite_subspace(F, U), dU));
                violations +=
                    down != point_set(scale(F, adjoint_subspace(F, U), dU));
            }
        }
    }
    detail << ", delta maps";

    // Equal last invariant forces distance 4 between planes.
    for (int n : {5, 6}) {
        FieldContext F(n);
        std::map<gf, std::vector<const Subspace*>> buckets;
        const auto planes = all_subspaces(F, 3);
        for (const auto& U : planes) buckets[delta(F, U)].push_back(&U);
        for (const auto& [val, bucket] : buckets) {
            for (std::size_t i = 0; i < bucket.size(); ++i)
                for (std::size_t j = i + 1; j < bucket.size(); ++j)
                    violations += intersect(*bucket[i], *bucket[j]).dim() > 1;
        }
    }
    detail << ", fixed-invariant distance";

    // Rearranged planes collide exactly on equal sigma values.
    for (int n : {4, 5}) {
        FieldContext F(n);
        const Subspace W(n, {1, 2, 4});
        struct Cand {
            Subspace base;
            gf value;
        };
        std::vector<Cand> all;
        for (gf u : quotient_reps(F, W))
            for (const NewPlane& np : new_planes_local(F, W, u))
                all.push_back({new_plane_subspace(F, W, np.line, np.param, 1),
                               np.value});
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (gf rho = 2; rho < F.size(); ++rho) {
                const auto rot = rotate_words(F, {all[i].base}, rho);
                violations += intersect(all[i].base, rot[0]).dim() > 1;
            }
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                bool meet = false;
                for (gf rho = 1; rho < F.size() && !meet; ++rho) {
                    const auto rot = rotate_words(F, {all[j].base}, rho);
                    meet = intersect(all[i].base, rot[0]).dim() >= 2;
                }
                violations += meet != (all[i].value == all[j].value);
            }
        }
    }
    detail << ", collision criterion: " << violations << " violations";
    report(8, "algebra property suites", violations == 0, detail.str());
}

void criterion9_optimizer_oracle() {
    start();
    int checked = 0;
    long long mismatches = 0;
    for (int n = 4; n <= 8; ++n) {
        FieldContext F(n);
        for (const auto& o : orbits_at(n)) {
            const auto cm = collision_matrix(F, o.representative);
            const int m = cm.m();
            if (m > 15) continue;
            long long brute = 0;
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                std::vector<int> rows;
                for (int i = 0; i < m; ++i)
                    if (mask >> i & 1u) rows.push_back(i);
                brute = std::max(brute, rrp_objective(cm, rows));
            }
            const auto sol = solve_rrp(cm);
            mismatches += !sol.proven || sol.value != brute;
            ++checked;
        }
    }
    std::ostringstream detail;
    detail << checked << " matrices of order <= 15 against full enumeration";
    report(9, "exact optimizer against subset brute force", mismatches == 0,
           detail.str());
}

void criterion10_exclusions() {
    start();
    bool ok = true;
    std::ostringstream detail;
    if (g_long_run) {
        const auto check = [&](int n, std::array<long long, 3> gens,
                               long long published) {
            FieldContext F(n);
            const auto sol = solve_rrp(
                collision_matrix(F, plane_from_exponents(F, gens)),
                1ull << 20);
            ok = ok && sol.value >= published;
            detail << "v=" << n + 3 << " solver " << sol.value
                   << ">=" << published
                   << (sol.proven ? " (proven) " : " (lower bound) ");
        };
        check(11, {0, 3, 419}, 379);
        check(12, {0, 195, 1170}, 924);
        detail << "; v=16 excluded";
    } else {
        detail << "v=14,15 maximality beyond the bound arithmetic and all "
                  "v=16 results are out of scope; published generators are "
                  "re-solved as lower bounds under --long-run";
    }
    report(10, "published values beyond desk scale", ok, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--long-run") g_long_run = true;
    }
    std::printf("acceptance checks, %s scale\n",
                g_long_run ? "long-run" : "desk");

    criterion1_net_gains();
    criterion2_orbit_counts();
    criterion3_golden_matrices();
    criterion4_missing_points();
    criterion5_table2();
    criterion6_codes();
    criterion7_theorem_bounds();
    criterion8_algebra();
    criterion9_optimizer_oracle();
    criterion10_exclusions();

    std::printf("%s\n", g_all_ok ? "all criteria passed" : "FAILURES present");
    return g_all_ok ? 0 : 1;
}
