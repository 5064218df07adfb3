#include "cdc/field.hpp"

#include <cctype>
#include <stdexcept>

namespace cdc {

namespace {

struct ConwayEntry {
    int n;
    std::uint32_t mod;
};

// Lexicographically minimal primitive polynomials compatible with the
// subfield tower (Conway polynomials). Verified independently by
// tools/conway_check, which re-derives every entry by brute force.
constexpr ConwayEntry kConway[] = {
    {3, 0xB},      {4, 0x13},    {5, 0x25},    {6, 0x5B},
    {7, 0x83},     {8, 0x11D},   {9, 0x211},   {10, 0x46F},
    {11, 0x805},   {12, 0x10EB}, {13, 0x201B}, {14, 0x40A9},
    {15, 0x8035},  {16, 0x1002D},
};

}  // namespace

std::uint32_t conway_modulus(int n) {
    for (const auto& e : kConway) {
        if (e.n == n) return e.mod;
    }
    throw std::out_of_range("conway_modulus: degree " + std::to_string(n) +
                            " not tabulated");
}

FieldContext::FieldContext(int n) : FieldContext(n, false) {}

FieldContext FieldContext::internal(int n) { return FieldContext(n, true); }

FieldContext::FieldContext(int n, bool extended) : n_(n) {
    const int hi = extended ? 16 : 13;
    if (n < 3 || n > hi) {
        throw std::out_of_range("FieldContext: degree " + std::to_string(n) +
                                " outside supported range 3.." +
                                std::to_string(hi));
    }
    mod_ = conway_modulus(n);

    const std::uint32_t q = 1u << n_;
    const std::uint32_t ord = q - 1;
    exp_.assign(2 * ord, 0);
    log_.assign(q, -1);

    gf x = 1;
    for (std::uint32_t i = 0; i < ord; ++i) {
        if (log_[x] != -1) {
            throw std::logic_error("FieldContext: modulus is not primitive");
        }
        exp_[i] = x;
        exp_[i + ord] = x;
        log_[x] = static_cast<int>(i);
        x <<= 1;
        if (x & q) x ^= mod_;
    }
    if (x != 1) {
        throw std::logic_error("FieldContext: alpha order mismatch");
    }

    h90_.assign(q, 0);
    h90_ok_.assign(q, 0);
    for (gf u = 0; u < q; ++u) {
        const gf y = mul(u, u) ^ u;
        if (!h90_ok_[y]) {
            h90_ok_[y] = 1;
            h90_[y] = u;
        }
    }
}

gf FieldContext::mul(gf a, gf b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
}

gf FieldContext::inv(gf a) const {
    if (a == 0) throw std::domain_error("FieldContext::inv: zero element");
    const std::uint32_t ord = order();
    return exp_[(ord - log_[a]) % ord];
}

gf FieldContext::div(gf a, gf b) const { return mul(a, inv(b)); }

gf FieldContext::pow(gf a, long long e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("FieldContext::pow: 0^(e<=0)");
        return 0;
    }
    const long long ord = order();
    long long k = (static_cast<long long>(log_[a]) * (e % ord)) % ord;
    if (k < 0) k += ord;
    return exp_[k];
}

gf FieldContext::alpha_pow(long long e) const {
    const long long ord = order();
    long long k = e % ord;
    if (k < 0) k += ord;
    return exp_[k];
}

int FieldContext::log(gf a) const {
    if (a == 0) throw std::domain_error("FieldContext::log: zero element");
    return log_[a];
}

gf FieldContext::frobenius_iter(gf a, int i) const {
    for (int t = 0; t < i; ++t) a = mul(a, a);
    return a;
}

gf FieldContext::sqrt(gf a) const { return frobenius_iter(a, n_ - 1); }

gf FieldContext::trace(gf x, int s) const {
    if (s <= 0 || n_ % s != 0) {
        throw std::domain_error("FieldContext::trace: s must divide n");
    }
    gf acc = 0;
    gf t = x;
    for (int i = 0; i < n_ / s; ++i) {
        acc ^= t;
        t = frobenius_iter(t, s);
    }
    return acc;
}

std::optional<std::pair<gf, gf>> FieldContext::hilbert90_solve(gf y) const {
    if (!h90_ok_[y]) return std::nullopt;
    const gf u = h90_[y];
    return std::make_pair(u, u ^ 1);
}

std::string FieldContext::to_hex(gf a) const {
    static const char* digits = "0123456789abcdef";
    if (a == 0) return "0";
    std::string s;
    while (a) {
        s.insert(s.begin(), digits[a & 0xF]);
        a >>= 4;
    }
    return s;
}

std::string FieldContext::to_alpha(gf a) const {
    if (a == 0) return "0";
    const int k = log_[a];
    if (k == 0) return "1";
    if (k == 1) return "a";
    return "a^" + std::to_string(k);
}

gf FieldContext::parse(const std::string& token) const {
    if (token.empty()) throw std::invalid_argument("empty field element");
    if (token == "0") return 0;
    if (token == "1") return 1;
    if (token == "a") return 2;

    auto finish_mask = [&](std::uint32_t v) -> gf {
        if (v >= size()) {
            throw std::invalid_argument("field element mask out of range: " +
                                        token);
        }
        return static_cast<gf>(v);
    };

    if (token.rfind("a^", 0) == 0) {
        return alpha_pow(std::stoll(token.substr(2)));
    }
    if (token.rfind("0x", 0) == 0 || token.rfind("0X", 0) == 0) {
        return finish_mask(
            static_cast<std::uint32_t>(std::stoul(token.substr(2), nullptr, 16)));
    }
    bool all_digits = true;
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c))) all_digits = false;
    }
    if (all_digits) {
        return alpha_pow(std::stoll(token));
    }
    throw std::invalid_argument("cannot parse field element: " + token);
}

}  // namespace cdc
