#include "baer/gf.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace baer {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, lowest first

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1;
    std::uint32_t e = p - 2;
    std::uint64_t b = a % p;
    while (e) {
        if (e & 1) r = static_cast<std::uint32_t>(r * b % p);
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Remainder of f modulo g (g nonzero) over GF(p).
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::uint32_t lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint32_t c = static_cast<std::uint32_t>(
            std::uint64_t(f.back()) * lead_inv % p);
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            f[shift + i] = static_cast<std::uint32_t>(
                (f[shift + i] + std::uint64_t(p - c) * g[i]) % p);
        }
        trim(f);
    }
    return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            Poly g(d + 1, 0);
            std::uint64_t x = c;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

QuadClass operator*(QuadClass a, QuadClass b) {
    if (a == QuadClass::Zero || b == QuadClass::Zero) return QuadClass::Zero;
    return a == b ? QuadClass::Square : QuadClass::NonSquare;
}

const char* to_string(QuadClass c) {
    switch (c) {
        case QuadClass::Zero: return "zero";
        case QuadClass::Square: return "square";
        case QuadClass::NonSquare: return "nonsquare";
    }
    return "?";
}

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t k) {
    if (p == 2) throw std::invalid_argument("even characteristic is not supported");
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds size bound");
    }

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.k_ = k;
    ctx.q_ = static_cast<std::uint32_t>(q);

    // Least monic irreducible polynomial, ordered by the integer encoding of
    // its lower coefficients.
    for (std::uint32_t c = 0; c < ctx.q_; ++c) {
        Poly f(k + 1, 0);
        std::uint32_t x = c;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = x % p;
            x /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) {
            ctx.modulus_ = f;
            break;
        }
    }

    ctx.neg_.resize(ctx.q_);
    for (std::uint32_t a = 0; a < ctx.q_; ++a) {
        std::uint32_t r = 0;
        std::uint32_t place = 1;
        std::uint32_t x = a;
        for (std::uint32_t i = 0; i < k; ++i) {
            r += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        ctx.neg_[a] = r;
    }
    if (ctx.q_ <= 1024) {
        ctx.add_.resize(std::size_t(ctx.q_) * ctx.q_);
        for (std::uint32_t a = 0; a < ctx.q_; ++a)
            for (std::uint32_t b = 0; b < ctx.q_; ++b)
                ctx.add_[std::size_t(a) * ctx.q_ + b] = ctx.digit_add(a, b);
    }

    // Primitive element: least g with g^((q-1)/r) != 1 for every prime r | q-1.
    const auto factors = prime_factors(ctx.q_ - 1);
    auto slow_pow = [&](std::uint32_t g, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = ctx.poly_mul_mod(r, g);
            g = ctx.poly_mul_mod(g, g);
            e >>= 1;
        }
        return r;
    };
    std::uint32_t gen = 0;
    for (std::uint32_t g = 2; g < ctx.q_; ++g) {
        bool primitive = true;
        for (auto r : factors) {
            if (slow_pow(g, (ctx.q_ - 1) / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = g;
            break;
        }
    }

    ctx.exp_.resize(ctx.q_ - 1);
    ctx.log_.assign(ctx.q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < ctx.q_ - 1; ++i) {
        ctx.exp_[i] = cur;
        ctx.log_[cur] = i;
        cur = ctx.poly_mul_mod(cur, gen);
    }

    // Squares are the even powers of the generator.
    ctx.chi_.assign(ctx.q_, static_cast<std::uint8_t>(QuadClass::NonSquare));
    ctx.chi_[0] = static_cast<std::uint8_t>(QuadClass::Zero);
    for (std::uint32_t i = 0; i < ctx.q_ - 1; i += 2)
        ctx.chi_[ctx.exp_[i]] = static_cast<std::uint8_t>(QuadClass::Square);

    for (std::uint32_t a = 1; a < ctx.q_; ++a) {
        if (ctx.chi_[a] == static_cast<std::uint8_t>(QuadClass::NonSquare)) {
            ctx.omega_ = FieldElem{a};
            break;
        }
    }

    // Self-test: table character agrees with exponentiation.
    for (std::uint32_t a = 0; a < std::min<std::uint32_t>(ctx.q_, 4096); ++a) {
        if (ctx.character(FieldElem{a}) != ctx.character_by_power(FieldElem{a}))
            throw std::logic_error("character table disagrees with Euler criterion");
    }
    return ctx;
}

std::uint32_t FieldCtx::digit_add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return (a + b) % p_;
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

std::uint32_t FieldCtx::poly_mul_mod(std::uint32_t a, std::uint32_t b) const {
    Poly fa(k_), fb(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        fa[i] = a % p_;
        a /= p_;
        fb[i] = b % p_;
        b /= p_;
    }
    Poly prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + std::uint64_t(fa[i]) * fb[j]) % p_);
    Poly r = poly_rem(prod, modulus_, p_);
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        out += r[i] * place;
        place *= p_;
    }
    return out;
}

FieldElem FieldCtx::elem(std::uint32_t i) const {
    if (i >= q_) throw std::out_of_range("field element index out of range");
    return FieldElem{i};
}

FieldElem FieldCtx::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return FieldElem{static_cast<std::uint32_t>(r)};
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    if (!add_.empty()) return FieldElem{add_[std::size_t(a.v) * q_ + b.v]};
    return FieldElem{digit_add(a.v, b.v)};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t l = log_[a.v];
    return FieldElem{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

QuadClass FieldCtx::character_by_power(FieldElem a) const {
    if (a.v == 0) return QuadClass::Zero;
    // Square-and-multiply on polynomial arithmetic, independent of the tables.
    std::uint32_t r = 1;
    std::uint32_t b = a.v;
    std::uint64_t e = (q_ - 1) / 2;
    while (e) {
        if (e & 1) r = poly_mul_mod(r, b);
        b = poly_mul_mod(b, b);
        e >>= 1;
    }
    return r == 1 ? QuadClass::Square : QuadClass::NonSquare;
}

ExtElem FieldCtx::ext_elem(std::uint32_t index) const {
    if (index >= q_ * q_) throw std::out_of_range("extension element index out of range");
    return ExtElem{FieldElem{index % q_}, FieldElem{index / q_}};
}

ExtElem FieldCtx::inv(const ExtElem& a) const {
    // a^{-1} = a^q / a^{q+1}
    const FieldElem n = norm(a);
    if (n.v == 0) throw std::domain_error("inverse of zero");
    return mul(frobenius(a), inv(n));
}

ExtElem FieldCtx::pow(const ExtElem& a, std::uint64_t e) const {
    ExtElem r = embed(one());
    ExtElem b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

QuadClass FieldCtx::character_by_power(const ExtElem& z) const {
    if (is_zero(z)) return QuadClass::Zero;
    const ExtElem r = pow(z, (std::uint64_t(q_) * q_ - 1) / 2);
    if (r == embed(one())) return QuadClass::Square;
    if (r == embed(neg(one()))) return QuadClass::NonSquare;
    throw std::logic_error("Euler criterion produced a value other than +-1");
}

std::string FieldCtx::format(FieldElem a) const { return std::to_string(a.v); }

std::string FieldCtx::format(const ExtElem& z) const {
    if (z.z2.v == 0) return std::to_string(z.z1.v);
    return std::to_string(z.z1.v) + "+e*" + std::to_string(z.z2.v);
}

ExtElem FieldCtx::parse_ext(const std::string& text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto parse_uint = [&](const std::string& part) -> FieldElem {
        if (part.empty() || !std::all_of(part.begin(), part.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed field element '" + text + "'");
        const unsigned long v = std::stoul(part);
        if (v >= q_)
            throw std::invalid_argument("field element '" + text + "' out of range for q=" +
                                        std::to_string(q_));
        return FieldElem{static_cast<std::uint32_t>(v)};
    };
    if (s.starts_with("e*")) return ExtElem{FieldElem{0}, parse_uint(s.substr(2))};
    const auto plus = s.find("+e*");
    if (plus == std::string::npos) return embed(parse_uint(s));
    return ExtElem{parse_uint(s.substr(0, plus)), parse_uint(s.substr(plus + 3))};
}

}  // namespace baer
