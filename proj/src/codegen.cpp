#include "cdc/codegen.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "cdc/linpoly.hpp"

namespace cdc {

namespace {

gf delta_pair(const FieldContext& F, gf x, gf z) {
    return F.mul(F.mul(x, z), x ^ z);
}

std::uint64_t binomial_key(gf a0, gf a1) {
    return (static_cast<std::uint64_t>(a0) << 16) | a1;
}

// Representatives of the two classes of (u + W) mod Z, smallest element of
// each class. u = 0 is allowed and yields the classes of W itself.
std::array<gf, 2> coset_class_reps(const Subspace& W, const Subspace& Z, gf u) {
    gf r0 = u;
    for (gf z : Z.points()) r0 = std::min(r0, u ^ z);
    gf r1 = 0;
    bool have = false;
    for (gf w : W.points()) {
        const gf x = u ^ w;
        if (Z.contains(x ^ r0)) continue;
        if (!have || x < r1) r1 = x, have = true;
    }
    if (!have) throw std::logic_error("coset_class_reps: degenerate line");
    return {r0, r1};
}

// RREF key of the span of two distinct nonzero vectors.
std::uint64_t line_key(std::uint32_t x, std::uint32_t y, int v) {
    if (std::bit_floor(x) == std::bit_floor(y)) y ^= x;
    if (y > x) std::swap(x, y);
    if (x & std::bit_floor(y)) x ^= y;
    return (static_cast<std::uint64_t>(x) << v) | y;
}

void append_line_keys(const Subspace& word, int v, std::vector<std::uint64_t>& out) {
    const std::vector<gf> pts = word.points();
    std::array<std::uint64_t, 21> keys;
    std::size_t cnt = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            keys[cnt++] = line_key(pts[i], pts[j], v);
    std::sort(keys.begin(), keys.begin() + cnt);
    const auto end = std::unique(keys.begin(), keys.begin() + cnt);
    out.insert(out.end(), keys.begin(), end);
}

void sort_check_distinct(std::vector<Subspace>& words, const char* who) {
    std::sort(words.begin(), words.end(),
              [](const Subspace& a, const Subspace& b) { return a.key() < b.key(); });
    for (std::size_t i = 1; i < words.size(); ++i)
        if (words[i].key() == words[i - 1].key())
            throw std::logic_error(std::string(who) + ": duplicate codeword");
}

}  // namespace

std::uint32_t w_coordinates(const Subspace& W, gf w) {
    if (!W.contains(w)) throw std::invalid_argument("w_coordinates: not in W");
    std::uint32_t e = 0;
    const int k = W.dim();
    for (int i = 0; i < k; ++i)
        if (w & std::bit_floor(W.rows()[i])) e |= 1u << (k - 1 - i);
    return e;
}

Subspace lifted_plane(const FieldContext& F, const Subspace& W, gf a0, gf a1) {
    const int n = F.n();
    std::vector<std::uint32_t> rows(3);
    for (int i = 0; i < 3; ++i) {
        const gf w = W.rows()[i];
        const gf fw = F.mul(a0, w) ^ F.mul(a1, F.mul(w, w));
        rows[i] = (std::uint32_t(4 >> i) << n) | fw;
    }
    return Subspace(n + 3, rows);
}

std::vector<Subspace> lifted_gabidulin(const FieldContext& F, const Subspace& W) {
    std::vector<Subspace> out;
    out.reserve(std::size_t(F.size()) * F.size());
    for (gf a0 = 0; a0 < F.size(); ++a0)
        for (gf a1 = 0; a1 < F.size(); ++a1)
            out.push_back(lifted_plane(F, W, a0, a1));
    return out;
}

std::vector<std::pair<gf, gf>> expurgation_set(const FieldContext& F,
                                               const Subspace& W, gf u) {
    if (W.contains(u)) throw std::invalid_argument("expurgation_set: u in W");
    std::vector<std::pair<gf, gf>> out;
    out.reserve(8 * (F.size() - 1));
    std::vector<gf> coset{u};
    for (gf w : W.points()) coset.push_back(u ^ w);
    for (gf r = 1; r < F.size(); ++r)
        for (gf c : coset)
            out.emplace_back(F.mul(r, F.mul(c, c)), F.mul(r, c));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<NewPlane> new_planes_local(const FieldContext& F, const Subspace& W,
                                       gf u) {
    if (W.contains(u)) throw std::invalid_argument("new_planes_local: u in W");
    const Subspace cspace = collision_space(F, W);
    std::vector<NewPlane> out;
    out.reserve(14);
    for (const Subspace& Z : subspaces_of(W, 2)) {
        auto reps = coset_class_reps(W, Z, u);
        std::sort(reps.begin(), reps.end());
        for (gf x : reps) {
            NewPlane np;
            np.line = Z;
            np.param = x;
            np.value = sigma_line_value(F, Z, x);
            np.collision_value = cspace.contains(np.value);
            out.push_back(std::move(np));
        }
    }
    return out;
}

Subspace new_plane_subspace(const FieldContext& F, const Subspace& W,
                            const Subspace& Z, gf x, gf rho) {
    const int n = F.n();
    std::vector<std::uint32_t> rows;
    rows.reserve(3);
    for (gf z : Z.rows())
        rows.push_back((w_coordinates(W, z) << n) |
                       F.mul(rho, delta_pair(F, x, z)));
    rows.push_back(F.mul(rho, delta(F, Z)));
    return Subspace(n + 3, rows);
}

AssembledCode assemble_code(const FieldContext& F, const Subspace& W,
                            const RrpSolution& sol) {
    const int n = F.n();
    const std::vector<gf> reps = quotient_reps(F, W);

    std::unordered_set<std::uint64_t> removed;
    std::vector<NewPlane> candidates;
    for (int i : sol.rows) {
        if (i < 0 || std::size_t(i) >= reps.size())
            throw std::invalid_argument("assemble_code: row out of range");
        for (auto [a0, a1] : expurgation_set(F, W, reps[i]))
            removed.insert(binomial_key(a0, a1));
        for (NewPlane& np : new_planes_local(F, W, reps[i]))
            candidates.push_back(std::move(np));
    }

    AssembledCode code;
    code.v = n + 3;
    code.expurgated = removed.size();
    code.words.reserve(std::size_t(F.size()) * F.size());
    for (gf a0 = 0; a0 < F.size(); ++a0)
        for (gf a1 = 0; a1 < F.size(); ++a1)
            if (!removed.count(binomial_key(a0, a1)))
                code.words.push_back(lifted_plane(F, W, a0, a1));

    // Candidates with values outside the collision space never meet another
    // codeword; covered collision values admit exactly one representative.
    std::vector<const NewPlane*> keep;
    std::map<gf, const NewPlane*> covered;
    for (const NewPlane& np : candidates) {
        if (!np.collision_value) {
            keep.push_back(&np);
            continue;
        }
        auto [it, fresh] = covered.try_emplace(np.value, &np);
        if (!fresh) {
            const auto key = [&](const NewPlane* p) {
                return new_plane_subspace(F, W, p->line, p->param, 1).key();
            };
            if (key(&np) < key(it->second)) it->second = &np;
        }
    }
    for (auto& [value, np] : covered) keep.push_back(np);
    code.new_planes = keep.size();

    for (const NewPlane* np : keep)
        for (gf rho = 1; rho < F.size(); ++rho)
            code.words.push_back(new_plane_subspace(F, W, np->line, np->param, rho));

    sort_check_distinct(code.words, "assemble_code");
    const long long total = static_cast<long long>(code.words.size());
    const long long lifted = 1ll << (2 * n);
    if ((total - lifted) % (F.order()) != 0)
        throw std::logic_error("assemble_code: size accounting failed");
    code.n1 = (total - lifted) / F.order();
    return code;
}

bool min_distance_at_least_4(const std::vector<Subspace>& words,
                             std::pair<std::size_t, std::size_t>* witness) {
    if (words.empty()) return true;
    const int v = words.front().n();
    std::vector<std::uint64_t> keys;
    keys.reserve(words.size() * 7);
    for (const Subspace& w : words) {
        if (w.dim() != 3 || w.n() != v)
            throw std::invalid_argument("min_distance_at_least_4: want planes");
        append_line_keys(w, v, keys);
    }
    std::sort(keys.begin(), keys.end());
    const auto dup = std::adjacent_find(keys.begin(), keys.end());
    if (dup == keys.end()) return true;
    if (witness) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < words.size() && hits.size() < 2; ++i) {
            std::vector<std::uint64_t> local;
            append_line_keys(words[i], v, local);
            if (std::find(local.begin(), local.end(), *dup) != local.end())
                hits.push_back(i);
        }
        *witness = {hits[0], hits.size() > 1 ? hits[1] : hits[0]};
    }
    return false;
}

bool min_distance_at_least_4_pairwise(const std::vector<Subspace>& words) {
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (intersect(words[i], words[j]).dim() >= 2) return false;
    return true;
}

LineCoverReport line_cover_check(int n, const std::vector<Subspace>& words) {
    const int v = n + 3;
    LineCoverReport rep;
    std::vector<std::uint64_t> keys;
    keys.reserve(words.size() * 7);
    for (const Subspace& w : words) append_line_keys(w, v, keys);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    rep.distance_ok = keys.size() == words.size() * 7;
    rep.lines_used = keys.size();
    rep.lines_total = gaussian_binomial(v, 2);
    for (std::uint64_t key : keys) {
        const auto a = static_cast<std::uint32_t>(key >> v);
        const auto b = static_cast<std::uint32_t>(key & ((1u << v) - 1));
        if ((a >> n) && (b >> n) && ((a ^ b) >> n)) ++rep.off_special_used;
    }
    // Lines disjoint from the n-dimensional S: pick any point off S, then a
    // second one off S and off the first point's S-coset.
    const unsigned long long pv = 1ull << v, pn = 1ull << n;
    rep.off_special_total = (pv - pn) * (pv - 2 * pn) / 6;
    return rep;
}

std::vector<Subspace> fixed_dickson_code(const FieldContext& F, int k, gf a) {
    if (a == 0 || a >= F.size())
        throw std::invalid_argument("fixed_dickson_code: need a != 0");
    std::vector<Subspace> out;
    for (const Subspace& U : all_subspaces(F, k))
        if (delta(F, U) == a) out.push_back(U);
    return out;
}

std::vector<Subspace> remove_iii_code(const FieldContext& F) {
    const int n = F.n();
    if (n % 3 != 0) throw std::invalid_argument("remove_iii_code: need 3 | n");
    const std::uint32_t s = F.order() / 7;
    const gf beta = F.alpha_pow(s);
    const Subspace W(n, {1, beta, F.mul(beta, beta)});

    std::unordered_set<std::uint64_t> removed;
    std::vector<Subspace> words;
    const auto piece = [&](gf rho, gf u) {
        std::vector<gf> coset{u};
        for (gf w : W.points()) coset.push_back(u ^ w);
        for (gf c : coset)
            removed.insert(binomial_key(F.mul(rho, F.mul(c, c)), F.mul(rho, c)));
        for (const Subspace& Z : subspaces_of(W, 2))
            for (gf x : coset_class_reps(W, Z, u))
                words.push_back(new_plane_subspace(F, W, Z, x, rho));
    };

    const std::vector<gf> reps = quotient_reps(F, W);
    piece(1, 0);
    for (std::uint32_t i = 0; i < s; ++i) {
        const gf rho = F.alpha_pow(i);
        for (gf u : reps) piece(rho, u);
    }

    for (gf a0 = 0; a0 < F.size(); ++a0)
        for (gf a1 = 0; a1 < F.size(); ++a1)
            if (!removed.count(binomial_key(a0, a1)))
                words.push_back(lifted_plane(F, W, a0, a1));

    sort_check_distinct(words, "remove_iii_code");
    return words;
}

std::vector<Subspace> v6_optimal_code(const FieldContext& F) {
    if (F.n() != 3) throw std::invalid_argument("v6_optimal_code: need n = 3");
    std::vector<Subspace> words = remove_iii_code(F);
    const Subspace W(3, {1, 2, 4});
    for (gf x = 1; x < F.size(); ++x) {
        const Subspace ker = trace_orthogonal(F, Subspace(3, {F.pow(x, 4)}));
        std::vector<std::uint32_t> rows{(w_coordinates(W, x) << 3) | F.pow(x, 3)};
        for (gf h : ker.rows()) rows.push_back(h);
        words.emplace_back(6, rows);
    }
    sort_check_distinct(words, "v6_optimal_code");
    return words;
}

std::vector<Subspace> rotate_words(const FieldContext& F,
                                   const std::vector<Subspace>& words, gf rho) {
    const std::uint32_t low = F.size() - 1;
    std::vector<Subspace> out;
    out.reserve(words.size());
    for (const Subspace& w : words) {
        std::vector<std::uint32_t> rows;
        rows.reserve(w.dim());
        for (std::uint32_t r : w.rows())
            rows.push_back((r & ~low) | F.mul(r & low, rho));
        out.emplace_back(w.n(), rows);
    }
    return out;
}

}  // namespace cdc
