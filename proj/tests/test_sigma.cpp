#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "cdc/field.hpp"
#include "cdc/geometry.hpp"
#include "cdc/golden.hpp"
#include "cdc/linpoly.hpp"
#include "cdc/sigma.hpp"

using namespace cdc;

namespace {

const std::string kData = CDC_DATA_DIR;

Subspace plane_from_exponents(const FieldContext& F,
                              const std::array<long long, 3>& e) {
    return Subspace(F.n(),
                    {F.alpha_pow(e[0]), F.alpha_pow(e[1]), F.alpha_pow(e[2])});
}

Subspace trace_zero_plane_gf16(const FieldContext& F) {
    // Elements of the GF(16) subfield whose internal trace vanishes.
    const std::uint32_t step = F.order() / 15;
    std::vector<gf> gens;
    for (int j = 1; j < 15; ++j) {
        const gf x = F.alpha_pow(static_cast<long long>(step) * j);
        gf t = x;
        gf tr = 0;
        for (int i = 0; i < 4; ++i) {
            tr ^= t;
            t = F.mul(t, t);
        }
        if (tr == 0) gens.push_back(x);
    }
    return Subspace(F.n(), gens);
}

}  // namespace

TEST_CASE("invariant of scaled planes in GF(16)") {
    FieldContext F(4);
    Subspace W = trace_orthogonal(F, Subspace(4, {1}));
    int ones = 0;
    std::set<gf> one_scalars;
    for (gf a = 2; a < F.size(); ++a) {
        Subspace E = scale(F, W, a);
        REQUIRE(intersect(E, W).dim() == 2);
        const gf expect = a ^ F.pow(a, 2) ^ F.pow(a, 3) ^ F.pow(a, 4);
        const gf got = sigma_invariant(F, W, E);
        CHECK(got == expect);
        // a (1 + a)^3 in closed form.
        CHECK(got == F.mul(a, F.pow(a ^ 1, 3)));
        if (got == 1) {
            ++ones;
            one_scalars.insert(a);
        }
    }
    CHECK(ones == 4);
    CHECK(one_scalars == std::set<gf>{F.alpha_pow(3), F.alpha_pow(6),
                                      F.alpha_pow(9), F.alpha_pow(12)});
    CHECK_THROWS_AS(sigma_invariant(F, W, W), std::domain_error);
}

TEST_CASE("invariant is covariant under the group action") {
    FieldContext F(5);
    Subspace W(5, {1, 2, 4});
    auto planes = all_subspaces(F, 3);
    for (std::size_t i = 0; i < planes.size(); i += 3) {
        const auto& E = planes[i];
        if (E == W || intersect(E, W).dim() != 2) continue;
        const gf s = sigma_invariant(F, W, E);
        for (int e : {1, 7, 19}) {
            // delta(rE) = r^7 delta(E) against delta(rZ)^3 = r^9 delta(Z)^3.
            const gf r = F.alpha_pow(e);
            CHECK(sigma_invariant(F, scale(F, W, r), scale(F, E, r)) ==
                  F.div(s, F.mul(r, r)));
        }
        CHECK(sigma_invariant(F, frobenius_image(F, W), frobenius_image(F, E)) ==
              F.mul(s, s));
        // Line restriction agrees with the plane invariant.
        Subspace Z = intersect(E, W);
        gf x = 0;
        for (gf p : E.points()) {
            if (!Z.contains(p)) {
                x = p;
                break;
            }
        }
        CHECK(sigma_line_value(F, Z, x) == s);
    }
}

TEST_CASE("image and multiplicities of the invariant at n = 5") {
    FieldContext F(5);
    Subspace W(5, {1, 2, 4});
    const Subspace cs = collision_space(F, W);
    const MissingPoints mp = missing_points(F, W);

    std::set<gf> missing_set(mp.values.begin(), mp.values.end());
    std::set<gf> expect_missing;
    for (int k : {4, 5, 21, 23, 25, 28, 30}) expect_missing.insert(F.alpha_pow(k));
    CHECK(missing_set == expect_missing);
    CHECK(mp.values.size() == 7);  // multiplicity one each here
    CHECK(mp.mu == 3);
    CHECK(mp.image_size == 27);

    std::map<gf, int> mult;
    for (const auto& E : all_subspaces(F, 3)) {
        if (E == W || intersect(E, W).dim() != 2) continue;
        ++mult[sigma_invariant(F, W, E)];
    }
    CHECK(mult.size() == mp.image_size);
    std::set<gf> unattained;
    for (gf y = 1; y < F.size(); ++y) {
        if (!mult.count(y)) unattained.insert(y);
    }
    std::set<gf> expect_unattained{F.alpha_pow(4), F.alpha_pow(5),
                                   F.alpha_pow(21), F.alpha_pow(30)};
    CHECK(unattained == expect_unattained);
    for (auto [y, m] : mult) {
        if (cs.contains(y)) {
            CHECK(m == 6);  // column sum: 7 minus multiplicity as missing value
        } else {
            CHECK(m == 1);
        }
    }
}

TEST_CASE("restricted invariant images meet exactly in the collision space") {
    for (int n : {5, 6}) {
        FieldContext F(n);
        Subspace W(n, {1, 2, 4});
        Subspace common;
        bool first = true;
        for (const auto& Z : subspaces_of(W, 2)) {
            const gf d2 = F.pow(delta(F, Z), 2);
            Subspace img = scale(F, opposite_subspace(F, Z), F.inv(d2));
            CHECK(img == trace_orthogonal(F, frobenius_image(F, Z)));
            common = first ? img : intersect(common, img);
            first = false;
        }
        CHECK(common == collision_space(F, W));
    }
}

TEST_CASE("one-by-one collision matrix at n = 4") {
    FieldContext F(4);
    Subspace W = trace_orthogonal(F, Subspace(4, {1}));
    CollisionMatrix cm = collision_matrix(F, W);
    REQUIRE(cm.m() == 1);
    REQUIRE(cm.col_labels.size() == 1);
    CHECK(cm.col_labels[0] == 1);
    CHECK(cm.entries[0][0] == 4);
    const MissingPoints mp = missing_points(F, W);
    CHECK(mp.mu == 3);
    std::vector<gf> expect{1, 1, 1,
                           F.alpha_pow(3), F.alpha_pow(6),
                           F.alpha_pow(9), F.alpha_pow(12)};
    std::sort(expect.begin(), expect.end());
    CHECK(mp.values == expect);
}

TEST_CASE("golden collision matrix at n = 5") {
    FieldContext F(5);
    Subspace W(5, {1, 2, 4});
    CollisionMatrix cm = collision_matrix(F, W);
    const IntMatrix golden = load_matrix_file(kData + "/matrix_v8.txt");
    REQUIRE(golden.size() == 3);
    CHECK(cm.entries == golden);  // all-2 matrix is permutation invariant
    CHECK(matrix_equivalent(cm.entries, golden));
    CHECK(cm.row_sums() == std::vector<int>{6, 6, 6});
}

TEST_CASE("golden collision matrices at n = 6") {
    FieldContext F(6);
    const auto blocks = load_orbit_matrices(kData + "/matrices_v9.txt");
    REQUIRE(blocks.size() == 7);
    for (const auto& g : blocks) {
        CAPTURE(g.index);
        Subspace W = plane_from_exponents(F, g.rep_exponents);
        CollisionMatrix cm = collision_matrix(F, W);
        CHECK(matrix_equivalent(cm.entries, g.matrix));
        // Row-sum spectra must agree even before permutation matching.
        std::map<int, long long> want;
        for (const auto& row : g.matrix) {
            int s = 0;
            for (int x : row) s += x;
            ++want[s];
        }
        CHECK(row_sum_spectrum(cm) == want);
    }
}

TEST_CASE("golden collision matrix at n = 8") {
    FieldContext F(8);
    Subspace W = plane_from_exponents(F, {0, 17, 34});
    CHECK(W == trace_zero_plane_gf16(F));
    CollisionMatrix cm = collision_matrix(F, W);
    REQUIRE(cm.m() == 31);
    const IntMatrix golden = load_matrix_file(kData + "/figure1.txt");
    REQUIRE(golden.size() == 31);
    CHECK(matrix_equivalent(cm.entries, golden));

    const std::map<int, long long> expect{{2, 8}, {6, 10}, {10, 12}, {14, 1}};
    CHECK(row_sum_spectrum(cm) == expect);
}

TEST_CASE("associated code of the subfield trace-zero plane at n = 8") {
    FieldContext F(8);
    Subspace W = trace_zero_plane_gf16(F);
    const AssociatedCode code = associated_code(F, W);
    CHECK(code.mu == 7);
    CHECK(code.k == 4);
    CHECK(code.weights == std::vector<long long>{1, 0, 6, 0, 5, 0, 4, 0});
    CHECK(row_sum_spectrum(F, code) == row_sum_spectrum(collision_matrix(F, W)));
}

TEST_CASE("row-sum spectra from matrix and code agree on every orbit, n = 6") {
    FieldContext F(6);
    const auto blocks = load_orbit_matrices(kData + "/matrices_v9.txt");
    std::vector<int> mus;
    for (const auto& g : blocks) {
        Subspace W = plane_from_exponents(F, g.rep_exponents);
        CHECK(row_sum_spectrum(F, associated_code(F, W)) ==
              row_sum_spectrum(collision_matrix(F, W)));
        mus.push_back(associated_code(F, W).mu);
    }
    CHECK(mus == std::vector<int>{5, 3, 1, 2, 5, 6, 7});
}

TEST_CASE("column types and structural checks across small orbits") {
    for (int n : {4, 5, 6}) {
        FieldContext F(n);
        // A spread of planes: scaled/frobenius images are enough variety.
        std::vector<Subspace> planes;
        planes.emplace_back(n, std::vector<gf>{1, 2, 4});
        if (n == 6) {
            planes.push_back(Subspace(6, {1, F.alpha_pow(3), F.alpha_pow(18)}));
            planes.push_back(Subspace(6, {1, F.alpha_pow(9), F.alpha_pow(18)}));
            planes.push_back(Subspace(6, {1, F.alpha_pow(1), F.alpha_pow(22)}));
        }
        if (n == 4) {
            planes.push_back(trace_orthogonal(F, Subspace(4, {1})));
        }
        for (const auto& W : planes) {
            CollisionMatrix cm = collision_matrix(F, W);
            ColumnTypeReport rep;
            REQUIRE_NOTHROW(rep = column_types(F, cm));
            const int m = cm.m();
            CHECK(rep.n_entry1 + rep.n_entry2 + rep.n_entry4 ==
                  static_cast<int>(cm.col_labels.size()));
            const int mu = associated_code(F, W).mu;
            CHECK(rep.n_entry2 + 3 * rep.n_entry4 == mu);
            CHECK(rep.n_entry1 == m - mu + 2 * rep.n_entry4);
            CHECK(rep.row_parity == (rep.n_entry1 & 1));
            if (n % 2 == 1) CHECK(rep.n_entry4 == 0);
        }
    }
}

TEST_CASE("attached hyperplanes: containment criteria and row sums") {
    for (int n : {5, 6}) {
        FieldContext F(n);
        std::vector<Subspace> planes{Subspace(n, {1, 2, 4})};
        if (n == 6) {
            planes.push_back(Subspace(6, {1, F.alpha_pow(3), F.alpha_pow(18)}));
            planes.push_back(Subspace(6, {1, F.alpha_pow(9), F.alpha_pow(18)}));
        }
        for (const auto& W : planes) {
            const Subspace cs = collision_space(F, W);
            const gf dW = delta(F, W);
            const auto lines = subspaces_of(W, 2);
            std::vector<Subspace> hz;
            for (const auto& Z : lines) {
                Subspace H = hyperplane_HZ(F, W, Z);
                CHECK(H.dim() == n - 1);
                CHECK(H.contains(Z));
                const gf dZ = delta(F, Z);
                const gf missing = F.div(dW, F.pow(dZ, 3));
                gf c = 0;
                for (gf w : W.points()) {
                    if (!Z.contains(w)) {
                        c = w;
                        break;
                    }
                }
                const auto d = dickson_invariants(F, Z);
                const gf quad = F.div(F.mul(d[0], F.pow(c, 4)), F.pow(d[1], 2));
                CHECK(H.contains(W) == cs.contains(missing));
                CHECK(H.contains(W) == (F.trace(quad) == 0));
                hz.push_back(H);
            }
            // Row sums follow the hyperplane count at each solid.
            CollisionMatrix cm = collision_matrix(F, W);
            const int mu = associated_code(F, W).mu;
            const auto sums = cm.row_sums();
            for (int i = 0; i < cm.m(); ++i) {
                Subspace T = sum(W, Subspace(n, {cm.row_labels[i]}));
                int nu = 0;
                for (const auto& H : hz) {
                    if (H.contains(T)) ++nu;
                }
                CHECK(sums[i] == 7 - mu + 2 * nu);
            }
        }
    }
}

TEST_CASE("matrix equivalence decision") {
    IntMatrix A{{1, 2, 0}, {0, 1, 1}, {2, 0, 1}};
    IntMatrix B{{0, 2, 1}, {2, 1, 0}, {1, 0, 1}};  // A with rows+cols permuted
    CHECK(matrix_equivalent(A, A));
    CHECK(matrix_equivalent(A, B));

    IntMatrix C{{0, 2, 1}, {2, 1, 0}, {1, 1, 0}};  // same entry multiset, no match
    CHECK_FALSE(matrix_equivalent(A, C));
    CHECK_FALSE(matrix_equivalent(A, IntMatrix{{1, 2}, {0, 1}}));

    // Same row and column sums, different structure.
    IntMatrix D{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}};
    IntMatrix E{{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
    CHECK_FALSE(matrix_equivalent(D, E));
    CHECK(matrix_equivalent(E, IntMatrix{{0, 0, 1, 1},
                                         {1, 0, 1, 0},
                                         {0, 1, 0, 1},
                                         {1, 1, 0, 0}}));
}
