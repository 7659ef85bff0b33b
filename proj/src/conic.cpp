#include "baer/conic.hpp"

#include <sstream>
#include <stdexcept>

namespace baer {

const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::OnConic: return "on_conic";
        case PointClass::External: return "external";
        case PointClass::Internal: return "internal";
    }
    return "?";
}

Conic::Matrix conic_matrix(const FieldCtx& ctx, const std::array<ExtElem, 6>& coef) {
    const FieldElem half = ctx.inv(ctx.from_int(2));
    const auto& [a, b, c, d, e, f] = coef;
    const ExtElem hb = ctx.mul(b, half);
    const ExtElem hd = ctx.mul(d, half);
    const ExtElem he = ctx.mul(e, half);
    return Conic::Matrix{{{a, hb, hd}, {hb, c, he}, {hd, he, f}}};
}

ExtElem conic_determinant(const FieldCtx& ctx, const Conic::Matrix& m) {
    return determinant<ExtElem>(ctx, m);
}

Conic make_conic(const FieldCtx& ctx, const std::array<ExtElem, 6>& coef) {
    Conic c{coef, conic_matrix(ctx, coef)};
    if (FieldCtx::is_zero(conic_determinant(ctx, c.matrix)))
        throw std::invalid_argument("singular conic");
    return c;
}

namespace {

std::array<ExtElem, 3> mat_vec(const FieldCtx& ctx, const Conic::Matrix& m, const PointQ2& p) {
    std::array<ExtElem, 3> out{};
    for (std::size_t r = 0; r < 3; ++r) {
        ExtElem acc = ctx.mul(m[r][0], p.c[0]);
        acc = ctx.add(acc, ctx.mul(m[r][1], p.c[1]));
        acc = ctx.add(acc, ctx.mul(m[r][2], p.c[2]));
        out[r] = acc;
    }
    return out;
}

ExtElem dot(const FieldCtx& ctx, const std::array<ExtElem, 3>& u, const PointQ2& p) {
    ExtElem acc = ctx.mul(u[0], p.c[0]);
    acc = ctx.add(acc, ctx.mul(u[1], p.c[1]));
    return ctx.add(acc, ctx.mul(u[2], p.c[2]));
}

}  // namespace

ExtElem bilinear(const FieldCtx& ctx, const Conic& c, const PointQ2& p, const PointQ2& q) {
    return dot(ctx, mat_vec(ctx, c.matrix, q), p);
}

ExtElem quadratic_value(const FieldCtx& ctx, const Conic& c, const PointQ2& p) {
    return bilinear(ctx, c, p, p);
}

LineQ2 polar_line(const FieldCtx& ctx, const Conic& c, const PointQ2& p) {
    return normalize_line(ctx, mat_vec(ctx, c.matrix, p));
}

PointClass classify_point(const FieldCtx& ctx, const Conic& c, const PointQ2& p) {
    const auto l = mat_vec(ctx, c.matrix, p);
    if (FieldCtx::is_zero(dot(ctx, l, p))) return PointClass::OnConic;

    // Two distinct points U, V spanning the polar line.
    std::size_t i = 0;
    while (FieldCtx::is_zero(l[i])) ++i;
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    PointQ2 u{}, v{};
    u.c[j] = l[i];
    u.c[i] = ctx.neg(l[j]);
    v.c[k] = l[i];
    v.c[i] = ctx.neg(l[k]);

    // The line meets the conic where Q(U) x^2 + 2 B(U,V) x y + Q(V) y^2 = 0;
    // the number of roots follows the class of B(U,V)^2 - Q(U) Q(V).
    const ExtElem quu = quadratic_value(ctx, c, u);
    const ExtElem qvv = quadratic_value(ctx, c, v);
    const ExtElem buv = bilinear(ctx, c, u, v);
    const ExtElem disc = ctx.sub(ctx.sqr(buv), ctx.mul(quu, qvv));
    switch (ctx.character(disc)) {
        case QuadClass::Square: return PointClass::External;
        case QuadClass::NonSquare: return PointClass::Internal;
        case QuadClass::Zero: break;
    }
    throw std::logic_error("polar line of an off-conic point is tangent");
}

QuadClass joachimsthal_class(const FieldCtx& ctx, const Conic& c, const PointQ2& p) {
    return ctx.character(quadratic_value(ctx, c, p));
}

SubplaneCount count_externals_in_subplane(const FieldCtx& ctx, const Conic& c,
                                          std::span<const PointQ> subplane) {
    SubplaneCount out;
    for (const auto& p : subplane) {
        switch (classify_point(ctx, c, embed(ctx, p))) {
            case PointClass::OnConic: ++out.on_conic; break;
            case PointClass::External: ++out.externals; break;
            case PointClass::Internal: break;
        }
    }
    return out;
}

SubplaneCount count_externals_in_subplane(const FieldCtx& ctx, const Conic& c) {
    const auto pts = enumerate_pg2q(ctx);
    return count_externals_in_subplane(ctx, c, pts);
}

std::optional<PointQ> find_subplane_point(const FieldCtx& ctx, const Conic& c) {
    for (const auto& p : enumerate_pg2q(ctx))
        if (FieldCtx::is_zero(quadratic_value(ctx, c, embed(ctx, p)))) return p;
    return std::nullopt;
}

bool is_defined_over_fq(const FieldCtx& ctx, const Conic& c) {
    std::size_t lead = 0;
    while (lead < 6 && FieldCtx::is_zero(c.coef[lead])) ++lead;
    if (lead == 6) return true;
    const ExtElem s = ctx.inv(c.coef[lead]);
    for (std::size_t i = lead + 1; i < 6; ++i)
        if (!FieldCtx::in_base(ctx.mul(c.coef[i], s))) return false;
    return true;
}

Conic pullback(const FieldCtx& ctx, const Conic& c, const CollineationQ& m) {
    // A' = M^t A M
    Conic::Matrix am{};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t col = 0; col < 3; ++col) {
            ExtElem acc{};
            for (std::size_t t = 0; t < 3; ++t)
                acc = ctx.add(acc, ctx.mul(c.matrix[r][t], m.at(t, col)));
            am[r][col] = acc;
        }
    Conic::Matrix out{};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t col = 0; col < 3; ++col) {
            ExtElem acc{};
            for (std::size_t t = 0; t < 3; ++t)
                acc = ctx.add(acc, ctx.mul(am[t][col], m.at(t, r)));
            out[r][col] = acc;
        }
    const FieldElem two = ctx.from_int(2);
    return make_conic(ctx, {out[0][0], ctx.mul(out[0][1], two), out[1][1],
                            ctx.mul(out[0][2], two), ctx.mul(out[1][2], two), out[2][2]});
}

Conic scale(const FieldCtx& ctx, const Conic& c, const ExtElem& s) {
    std::array<ExtElem, 6> coef{};
    for (std::size_t i = 0; i < 6; ++i) coef[i] = ctx.mul(c.coef[i], s);
    return make_conic(ctx, coef);
}

ExtElem external_value(const FieldCtx& ctx, const std::array<ExtElem, 5>& coef) {
    const auto& [a, b, c, d, e] = coef;
    ExtElem v = ctx.neg(ctx.mul(ctx.mul(b, c), d));
    v = ctx.add(v, ctx.mul(a, ctx.sqr(d)));
    return ctx.add(v, ctx.mul(ctx.sqr(b), e));
}

ExtElem fixed_nonsquare(const FieldCtx& ctx) {
    for (std::uint32_t i = 1; i < ctx.ext_order(); ++i) {
        const ExtElem z = ctx.ext_elem(i);
        if (ctx.character(z) == QuadClass::NonSquare) return z;
    }
    throw std::logic_error("GF(q^2) has no non-square");
}

std::array<ExtElem, 6> general_form(const std::array<ExtElem, 5>& eq1) {
    // aX^2 + bXY + cXZ + dYZ + eZ^2 has no Y^2 term.
    return {eq1[0], eq1[1], ExtElem{}, eq1[2], eq1[3], eq1[4]};
}

Conic to_conic(const FieldCtx& ctx, const NormalizedConic& nc) {
    return make_conic(ctx, general_form(nc.coef));
}

NormalizedConic normalize(const FieldCtx& ctx, const Conic& c) {
    const FieldElem one = ctx.one();
    const PointQ base{{FieldElem{0}, one, FieldElem{0}}};
    std::optional<PointQ> found;
    if (FieldCtx::is_zero(quadratic_value(ctx, c, embed(ctx, base))))
        found = base;
    else
        found = find_subplane_point(ctx, c);
    if (!found) throw std::invalid_argument("conic has no point in PG(2,q)");

    // Column 1 is the found point; columns 0 and 2 are the first pair of
    // standard basis vectors that keeps the matrix invertible.
    std::optional<CollineationQ> m;
    constexpr std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [i, j] : pairs) {
        CollineationQ::Matrix mat{};
        for (std::size_t r = 0; r < 3; ++r) mat[r][1] = found->c[r];
        mat[i][0] = one;
        mat[j][2] = one;
        if (determinant<FieldElem>(ctx, mat).v != 0) {
            m = CollineationQ::make(ctx, mat);
            break;
        }
    }

    Conic moved = pullback(ctx, c, *m);
    bool swapped = false;
    if (FieldCtx::is_zero(moved.coef[1])) {
        CollineationQ::Matrix sw{};
        sw[0][2] = one;
        sw[1][1] = one;
        sw[2][0] = one;
        CollineationQ::Matrix prod{};
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t col = 0; col < 3; ++col) {
                FieldElem acc{};
                for (std::size_t t = 0; t < 3; ++t)
                    acc = ctx.add(acc, ctx.mul(m->at(r, t), sw[t][col]));
                prod[r][col] = acc;
            }
        m = CollineationQ::make(ctx, prod);
        moved = pullback(ctx, c, *m);
        swapped = true;
    }
    if (!FieldCtx::is_zero(moved.coef[2]))
        throw std::logic_error("normalized conic does not pass through (0:1:0)");
    if (FieldCtx::is_zero(moved.coef[1]))
        throw std::logic_error("normalized conic has b = d = 0");

    std::array<ExtElem, 5> eq1{moved.coef[0], moved.coef[1], moved.coef[3], moved.coef[4],
                               moved.coef[5]};
    ExtElem scalar = ctx.embed(one);
    if (ctx.character(external_value(ctx, eq1)) == QuadClass::NonSquare) {
        scalar = fixed_nonsquare(ctx);
        for (auto& x : eq1) x = ctx.mul(x, scalar);
    }
    return NormalizedConic{eq1, *m, swapped, scalar};
}

std::string format_conic(const FieldCtx& ctx, const Conic& c) {
    std::string out;
    for (std::size_t i = 0; i < 6; ++i) {
        if (i) out += ',';
        out += ctx.format(c.coef[i]);
    }
    return out;
}

std::array<ExtElem, 6> parse_coefficients(const FieldCtx& ctx, const std::string& text) {
    std::array<ExtElem, 6> coef{};
    std::stringstream ss(text);
    std::string item;
    std::size_t n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 6) throw std::invalid_argument("conic needs exactly six coefficients");
        coef[n++] = ctx.parse_ext(item);
    }
    if (n != 6) throw std::invalid_argument("conic needs exactly six coefficients");
    return coef;
}

}  // namespace baer
