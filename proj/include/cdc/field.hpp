#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cdc {

// Element of GF(2^n), stored as a polynomial bit mask over GF(2).
// Bit i is the coefficient of alpha^i, where alpha is the class of x
// modulo the Conway polynomial of degree n.
using gf = std::uint32_t;

// Conway polynomial of degree n over GF(2), as a bit mask including the
// leading term. Tabulated for 3 <= n <= 16; the table is re-derived from
// scratch by tools/conway_check.
std::uint32_t conway_modulus(int n);

class FieldContext {
public:
    // Supported degrees: 3 <= n <= 13.
    explicit FieldContext(int n);

    // Extended constructor for the large-degree tables reachable only
    // through long-run reproduction paths (n = 14 and n = 16).
    static FieldContext internal(int n);

    int n() const { return n_; }
    std::uint32_t modulus() const { return mod_; }
    std::uint32_t size() const { return 1u << n_; }          // 2^n
    std::uint32_t order() const { return (1u << n_) - 1; }   // 2^n - 1
    gf alpha() const { return 2; }

    gf mul(gf a, gf b) const;
    gf inv(gf a) const;                 // a != 0
    gf div(gf a, gf b) const;           // b != 0
    gf pow(gf a, long long e) const;    // 0^e = 0 for e > 0
    gf alpha_pow(long long e) const;    // alpha^e, e arbitrary
    int log(gf a) const;                // discrete log base alpha, a != 0
    gf frobenius(gf a) const { return mul(a, a); }
    gf frobenius_iter(gf a, int i) const;   // a^(2^i), i >= 0
    gf sqrt(gf a) const;                    // a^(2^(n-1))

    // Trace onto the subfield GF(2^s); s must divide n. s = 1 gives the
    // absolute trace with values in {0, 1}.
    gf trace(gf x, int s = 1) const;

    // Solutions u of u^2 + u = y. Exists iff trace(y) = 0; the two
    // solutions differ by 1.
    std::optional<std::pair<gf, gf>> hilbert90_solve(gf y) const;

    std::string to_hex(gf a) const;     // lowercase hex, no prefix
    std::string to_alpha(gf a) const;   // "0", "1", "a", or "a^k"

    // Accepts the forms produced by to_hex ("0x" optional) and to_alpha,
    // plus plain decimal integers read as alpha exponents.
    gf parse(const std::string& token) const;

private:
    FieldContext(int n, bool extended);

    int n_;
    std::uint32_t mod_;
    std::vector<gf> exp_;       // exp_[i] = alpha^i, doubled for wraparound
    std::vector<int> log_;
    std::vector<gf> h90_;       // one solution of u^2+u=y per y in the image
    std::vector<std::uint8_t> h90_ok_;
};

}  // namespace cdc
