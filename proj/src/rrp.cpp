#include "cdc/rrp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "cdc/geometry.hpp"

namespace cdc {

namespace {

struct Prepared {
    std::vector<int> rowsum;
    std::vector<std::vector<int>> supp;
    int cols = 0;
};

Prepared prepare(const CollisionMatrix& cm) {
    Prepared p;
    p.cols = static_cast<int>(cm.col_labels.size());
    p.rowsum.resize(cm.m());
    p.supp.resize(cm.m());
    for (int i = 0; i < cm.m(); ++i) {
        int s = 0;
        for (int j = 0; j < p.cols; ++j) {
            const int c = cm.entries[i][j];
            s += c;
            if (c) p.supp[i].push_back(j);
        }
        p.rowsum[i] = s;
    }
    return p;
}

// Rows that are always worth taking, the columns they cover, and the base
// value.
struct ForcedCover {
    std::vector<int> rows;
    std::vector<char> covered;
    long long value = 0;
};

ForcedCover forced_cover(const Prepared& p) {
    ForcedCover out;
    out.covered.assign(p.cols, 0);
    for (std::size_t i = 0; i < p.rowsum.size(); ++i) {
        if (p.rowsum[i] <= 6) {
            out.rows.push_back(static_cast<int>(i));
            out.value += 6 - p.rowsum[i];
            for (int j : p.supp[i]) out.covered[j] = 1;
        }
    }
    for (char c : out.covered) out.value += c;
    return out;
}

// Branch and bound over the rows with sum above six. Column sets live in
// 64-bit words so cover updates and fresh counts are a few popcounts. Each
// node rescans its candidate list against the current cover: rows whose
// marginal has gone nonpositive stay nonpositive as the cover grows, so
// they are dropped for the whole subtree, and the row with the largest
// marginal is branched on first.
struct Searcher {
    static constexpr int kMaxWords = 16;
    static constexpr int kMaxFresh = 63;

    int words = 0;
    std::vector<std::uint64_t> supp;  // candidate supports, flattened
    std::vector<int> cost;            // rowsum - 6 per candidate
    std::vector<int> candrow;         // original row indices

    std::vector<std::uint64_t> covered;
    std::vector<std::uint64_t> saved;     // per-depth cover snapshots
    std::vector<std::vector<int>> avail;  // per-depth candidate lists
    std::vector<int> freshv;              // fresh counts, parallel to a scan
    std::vector<int> chosen;
    long long value = 0;  // objective of forced + chosen
    long long best = -1;
    std::vector<int> best_rows;
    unsigned long long nodes = 0;
    unsigned long long budget = 0;
    bool exhausted = false;

    Searcher(const Prepared& p, const ForcedCover& base) {
        words = (p.cols + 63) / 64;
        if (words > kMaxWords) {
            throw std::invalid_argument("solve_rrp: matrix too wide");
        }
        covered.assign(words, 0);
        for (int j = 0; j < p.cols; ++j) {
            if (base.covered[j])
                covered[j >> 6] |= 1ull << (j & 63);
        }
        value = base.value;
        for (std::size_t i = 0; i < p.rowsum.size(); ++i) {
            if (p.rowsum[i] <= 6) continue;
            if (p.supp[i].size() > static_cast<std::size_t>(kMaxFresh)) {
                throw std::invalid_argument("solve_rrp: row support too wide");
            }
            std::vector<std::uint64_t> mask(words, 0);
            int fresh = 0;
            for (int j : p.supp[i]) {
                mask[j >> 6] |= 1ull << (j & 63);
                fresh += !base.covered[j];
            }
            if (6 - p.rowsum[i] + fresh <= 0) continue;
            candrow.push_back(static_cast<int>(i));
            cost.push_back(p.rowsum[i] - 6);
            supp.insert(supp.end(), mask.begin(), mask.end());
        }
        const std::size_t k = size();
        saved.assign((k + 2) * words, 0);
        avail.assign(k + 2, {});
        for (auto& a : avail) a.reserve(k);
        for (std::size_t t = 0; t < k; ++t) {
            avail[0].push_back(static_cast<int>(t));
        }
    }

    std::size_t size() const { return candrow.size(); }

    // Filters `in` down to rows that still have a positive marginal and
    // bounds the gain any subset of them can add: the sum of positive
    // marginals, and the curve where k rows cover at most min(top-k fresh
    // counts, all fresh columns) while costing at least the k smallest
    // costs. Every survivor has fresh count above its cost, hence >= 2.
    long long filter_and_bound(const std::vector<int>& in,
                               std::vector<int>& alive) {
        std::array<int, kMaxFresh + 1> fb{}, cb{};
        std::array<std::uint64_t, kMaxWords> uni{};
        std::array<std::uint64_t, kMaxWords> m;
        long long slack = 0;
        int maxf = 0;
        alive.clear();
        freshv.clear();
        for (int t : in) {
            int f = 0;
            for (int w = 0; w < words; ++w) {
                m[w] = supp[t * static_cast<std::size_t>(words) + w] &
                       ~covered[w];
                f += std::popcount(m[w]);
            }
            if (f <= cost[t]) continue;
            for (int w = 0; w < words; ++w) uni[w] |= m[w];
            alive.push_back(t);
            freshv.push_back(f);
            slack += f - cost[t];
            ++fb[f];
            ++cb[cost[t]];
            maxf = std::max(maxf, f);
        }
        long long total = 0;
        for (int w = 0; w < words; ++w) total += std::popcount(uni[w]);
        long long curve = 0, fp = 0, cp = 0;
        int ci = 1;
        for (int f = maxf; f >= 2 && fp < total; --f) {
            for (int c = 0; c < fb[f] && fp < total; ++c) {
                while (!cb[ci]) ++ci;
                --cb[ci];
                fp += f;
                cp += ci;
                curve = std::max(curve, std::min(fp, total) - cp);
            }
        }
        return std::min(slack, curve);
    }

    void record(const std::vector<int>& forced) {
        if (value <= best) return;
        best = value;
        best_rows = forced;
        best_rows.insert(best_rows.end(), chosen.begin(), chosen.end());
        std::sort(best_rows.begin(), best_rows.end());
    }

    void dfs(std::size_t depth, const std::vector<int>& forced) {
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        record(forced);
        std::vector<int>& alive = avail[depth + 1];
        const long long bound = filter_and_bound(avail[depth], alive);
        if (value + bound <= best) return;

        std::size_t pos = 0;
        for (std::size_t i = 1; i < alive.size(); ++i) {
            if (freshv[i] - cost[alive[i]] > freshv[pos] - cost[alive[pos]])
                pos = i;
        }
        const int t = alive[pos];
        const long long gain = freshv[pos] - cost[t];
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pos));

        std::copy_n(covered.begin(), words, saved.begin() + depth * words);
        for (int w = 0; w < words; ++w)
            covered[w] |= supp[t * static_cast<std::size_t>(words) + w];
        value += gain;
        chosen.push_back(candrow[t]);
        dfs(depth + 1, forced);
        chosen.pop_back();
        value -= gain;
        std::copy_n(saved.begin() + depth * words, words, covered.begin());
        if (exhausted) return;

        dfs(depth + 1, forced);
    }
};

}  // namespace

long long rrp_objective(const CollisionMatrix& cm, const std::vector<int>& rows) {
    const Prepared p = prepare(cm);
    std::set<int> uniq(rows.begin(), rows.end());
    if (uniq.size() != rows.size()) {
        throw std::invalid_argument("rrp_objective: repeated row");
    }
    long long value = 0;
    std::vector<char> covered(p.cols, 0);
    for (int i : rows) {
        if (i < 0 || i >= cm.m()) {
            throw std::invalid_argument("rrp_objective: row out of range");
        }
        value += 6 - p.rowsum[i];
        for (int j : p.supp[i]) covered[j] = 1;
    }
    for (int j = 0; j < p.cols; ++j) value += covered[j];
    return value;
}

RrpSolution solve_rrp(const CollisionMatrix& cm,
                      unsigned long long node_budget) {
    const Prepared p = prepare(cm);
    const ForcedCover base = forced_cover(p);
    Searcher s(p, base);
    s.budget = node_budget;

    // Seed the incumbent with the greedy solution so a budget cutoff can
    // never fall below it.
    const RrpSolution seed = greedy_rrp(cm);
    s.best = seed.value;
    s.best_rows = seed.rows;

    s.dfs(0, base.rows);

    RrpSolution out;
    out.rows = s.best_rows;
    out.value = s.best;
    out.proven = !s.exhausted;
    out.nodes = s.nodes;
    return out;
}

RrpSolution greedy_rrp(const CollisionMatrix& cm) {
    const Prepared p = prepare(cm);
    ForcedCover fc = forced_cover(p);
    std::vector<int> rows = fc.rows;
    long long value = fc.value;
    const auto marginal = [&](int i) {
        long long f = 0;
        for (int j : p.supp[i]) f += !fc.covered[j];
        return 6ll - p.rowsum[i] + f;
    };
    std::vector<char> used(cm.m(), 0);
    for (int i : rows) used[i] = 1;
    for (;;) {
        int pick = -1;
        long long pickgain = 0;
        for (int i = 0; i < cm.m(); ++i) {
            if (used[i]) continue;
            const long long g = marginal(i);
            if (g > pickgain) {
                pickgain = g;
                pick = i;
            }
        }
        if (pick < 0) break;
        used[pick] = 1;
        rows.push_back(pick);
        value += pickgain;
        for (int j : p.supp[pick]) fc.covered[j] = 1;
    }
    std::sort(rows.begin(), rows.end());
    RrpSolution out;
    out.rows = std::move(rows);
    out.value = value;
    out.nodes = 0;
    return out;
}

GainBounds gain_bounds(const CollisionMatrix& cm) {
    GainBounds gb;
    gb.lower = greedy_rrp(cm).value;

    const Prepared p = prepare(cm);
    const ForcedCover base = forced_cover(p);
    Searcher s(p, base);
    std::vector<int> alive;
    gb.upper = base.value + s.filter_and_bound(s.avail[0], alive);
    return gb;
}

long long code_gain_sum(const AssociatedCode& code) {
    long long total = 0;
    for (std::size_t w = 0; w < code.weights.size(); ++w) {
        const long long gain = 2ll * static_cast<long long>(w) - code.mu - 1;
        if (gain > 0) total += code.weights[w] * gain;
    }
    return total;
}

long long upper_bound_from_code(int n, const AssociatedCode& code) {
    if (n < 4 || code.k > n - 3) {
        throw std::invalid_argument("upper_bound_from_code: bad dimensions");
    }
    return (1ll << (n - 3 - code.k)) * code_gain_sum(code) +
           (1ll << (n - 3)) - 1;
}

CodeSumBound code_sum_bound(int mu, int k) {
    if (mu < 1 || k < 1 || k > mu || mu > 12) {
        throw std::invalid_argument("code_sum_bound: bad parameters");
    }
    if (static_cast<unsigned>(mu) > (1u << k) - 1) {
        throw std::domain_error("code_sum_bound: no projective code");
    }
    long long best = -1;
    rref_patterns(mu, k, [&](const std::vector<std::uint32_t>& gen) {
        std::bitset<4096> seen;  // generator columns, as k-bit masks
        for (int j = 0; j < mu; ++j) {
            std::uint32_t col = 0;
            for (int t = 0; t < k; ++t) {
                col |= ((gen[t] >> j) & 1u) << t;
            }
            if (col == 0 || seen[col]) return true;
            seen[col] = true;
        }
        long long total = 0;
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::uint32_t word = 0;
            for (int t = 0; t < k; ++t) {
                if (mask & (1u << t)) word ^= gen[t];
            }
            const long long gain = 2ll * std::popcount(word) - mu - 1;
            if (gain > 0) total += gain;
        }
        best = std::max(best, total);
        return true;
    });
    if (best < 0) throw std::logic_error("code_sum_bound: enumeration empty");
    CodeSumBound out;
    out.bound = best;
    out.gamma = static_cast<double>(best) / static_cast<double>(1u << k);
    return out;
}

ReferenceBounds reference_bounds(int v) {
    if (v < 6 || v > 16) {
        throw std::invalid_argument("reference_bounds: v out of range");
    }
    ReferenceBounds rb;
    rb.v = v;
    rb.n = v - 3;
    const int n = rb.n;
    rb.lifted_mrd = 1ull << (2 * n);
    rb.lmrd_code_bound = rb.lifted_mrd + gaussian_binomial(n, 2);
    rb.ambient_upper =
        ((1ull << v) - 1) * ((1ull << (v - 1)) - 1) / 21;
    rb.min_n1_beating_lmrd = ((1ll << (n - 1)) - 1) / 3 + 1;
    if (n % 8 == 4) {
        rb.family_n1_lower = 3ll << (n - 4);
    } else if (n % 8 == 0 && n >= 8) {
        rb.family_n1_lower = 54ll << (n - 8);
    }
    if (n >= 8) {
        rb.asymptotic_n1_lower =
            n % 2 ? (1ll << (n - 3)) + 7ll * (1ll << (n - 7))
                  : (1ll << (n - 3)) + 5ll * (1ll << (n - 6));
    }
    return rb;
}

unsigned long long code_size_from_n1(int v, long long n1) {
    if (v < 6 || v > 35) {
        throw std::invalid_argument("code_size_from_n1: v out of range");
    }
    return (1ull << (2 * (v - 3))) +
           static_cast<unsigned long long>(n1) * ((1ull << (v - 3)) - 1);
}

}  // namespace cdc
