#include "baer/surface.hpp"

#include <stdexcept>
#include <vector>

namespace baer {

const char* to_string(ConeKind k) {
    switch (k) {
        case ConeKind::QuadricCone: return "quadric_cone";
        case ConeKind::PlanePairRational: return "plane_pair_rational";
        case ConeKind::PlanePairConjugate: return "plane_pair_conjugate";
    }
    return "?";
}

ComponentCoeffs decompose_conic(const NormalizedConic& nc) {
    return ComponentCoeffs{nc.a().z1, nc.a().z2, nc.b().z1, nc.b().z2, nc.c().z1,
                           nc.c().z2, nc.d().z1, nc.d().z2, nc.e().z1, nc.e().z2};
}

CubicSurface build_surface(const FieldCtx& ctx, const ComponentCoeffs& cc) {
    auto m = [&](FieldElem x, FieldElem y) { return ctx.mul(x, y); };
    CubicSurface s{};
    s.b1 = cc.b1;
    s.b2 = cc.b2;
    s.d1 = cc.d1;
    s.d2 = cc.d2;
    s.omega = ctx.omega();
    s.A = ctx.sub(m(cc.a1, cc.b2), m(cc.a2, cc.b1));
    s.B = ctx.add(ctx.sub(m(cc.b2, cc.c1), m(cc.b1, cc.c2)),
                  ctx.sub(m(cc.a1, cc.d2), m(cc.a2, cc.d1)));
    s.C = ctx.add(ctx.sub(m(cc.c1, cc.d2), m(cc.c2, cc.d1)),
                  ctx.sub(m(cc.b2, cc.e1), m(cc.b1, cc.e2)));
    s.D = ctx.sub(m(cc.d2, cc.e1), m(cc.d1, cc.e2));
    if (s.A.v == 0 && s.B.v == 0 && s.C.v == 0 && s.D.v == 0)
        throw std::invalid_argument("A = B = C = D = 0: the conic is singular");
    return s;
}

FieldElem evaluate(const FieldCtx& ctx, const CubicSurface& s, const Point3Q& p) {
    const auto [t1, t2, x, z] = p.c;
    const FieldElem l1 = ctx.add(ctx.mul(s.b1, x), ctx.mul(s.d1, z));
    const FieldElem l2 = ctx.add(ctx.mul(s.b2, x), ctx.mul(s.d2, z));
    const FieldElem tt = ctx.mul(t1, t2);
    const FieldElem nt = ctx.add(ctx.sqr(t1), ctx.mul(s.omega, ctx.sqr(t2)));
    FieldElem v = ctx.sub(ctx.mul(ctx.add(tt, tt), l1), ctx.mul(nt, l2));
    // Horner in X with Z as the second variable.
    FieldElem g = s.A;
    g = ctx.add(ctx.mul(g, x), ctx.mul(s.B, z));
    g = ctx.add(ctx.mul(g, x), ctx.mul(s.C, ctx.sqr(z)));
    g = ctx.add(ctx.mul(g, x), ctx.mul(s.D, ctx.mul(z, ctx.sqr(z))));
    return ctx.add(v, g);
}

bool is_reducible(const FieldCtx& ctx, const CubicSurface& s) {
    return ctx.mul(s.b1, s.d2) == ctx.mul(s.b2, s.d1);
}

SurfaceCounts count_points(const FieldCtx& ctx, const CubicSurface& s,
                           std::span<const Point3Q> pg3q) {
    SurfaceCounts out;
    for (const auto& p : pg3q) {
        if (evaluate(ctx, s, p).v != 0) continue;
        ++out.S_q;
        if (p.c[0].v == 0 && p.c[1].v == 0) ++out.n0;
        if (p.c[2].v == 0 && p.c[3].v == 0) ++out.n_inf;
    }
    return out;
}

SurfaceCounts count_points(const FieldCtx& ctx, const CubicSurface& s) {
    const auto pts = enumerate_pg3q(ctx);
    return count_points(ctx, s, pts);
}

namespace {

FieldElem binary_cubic(const FieldCtx& ctx, const CubicSurface& s, FieldElem x, FieldElem z) {
    FieldElem g = s.A;
    g = ctx.add(ctx.mul(g, x), ctx.mul(s.B, z));
    g = ctx.add(ctx.mul(g, x), ctx.mul(s.C, ctx.sqr(z)));
    return ctx.add(ctx.mul(g, x), ctx.mul(s.D, ctx.mul(z, ctx.sqr(z))));
}

// dG/dX = 3A X^2 + 2B X Z + C Z^2
FieldElem cubic_dx(const FieldCtx& ctx, const CubicSurface& s, FieldElem x, FieldElem z) {
    const FieldElem three = ctx.from_int(3);
    const FieldElem two = ctx.from_int(2);
    FieldElem v = ctx.mul(ctx.mul(three, s.A), ctx.sqr(x));
    v = ctx.add(v, ctx.mul(ctx.mul(two, s.B), ctx.mul(x, z)));
    return ctx.add(v, ctx.mul(s.C, ctx.sqr(z)));
}

// dG/dZ = B X^2 + 2C X Z + 3D Z^2
FieldElem cubic_dz(const FieldCtx& ctx, const CubicSurface& s, FieldElem x, FieldElem z) {
    const FieldElem three = ctx.from_int(3);
    const FieldElem two = ctx.from_int(2);
    FieldElem v = ctx.mul(s.B, ctx.sqr(x));
    v = ctx.add(v, ctx.mul(ctx.mul(two, s.C), ctx.mul(x, z)));
    return ctx.add(v, ctx.mul(ctx.mul(three, s.D), ctx.sqr(z)));
}

FieldElem ternary(const FieldCtx& ctx, FieldElem omega, FieldElem m1, FieldElem m2,
                  FieldElem t1, FieldElem t2) {
    const FieldElem tt = ctx.mul(t1, t2);
    const FieldElem nt = ctx.add(ctx.sqr(t1), ctx.mul(omega, ctx.sqr(t2)));
    return ctx.sub(ctx.mul(m1, ctx.add(tt, tt)), ctx.mul(m2, nt));
}

}  // namespace

std::size_t binary_cubic_roots(const FieldCtx& ctx, const CubicSurface& s) {
    std::size_t n = s.A.v == 0 ? 1 : 0;  // (1:0)
    for (std::uint32_t i = 0; i < ctx.q(); ++i)
        if (binary_cubic(ctx, s, FieldElem{i}, ctx.one()).v == 0) ++n;
    return n;
}

SingularityInfo find_singularity(const FieldCtx& ctx, const CubicSurface& s) {
    if (is_reducible(ctx, s)) throw std::invalid_argument("surface is reducible");

    // Off t1 = t2 = 0 the t-partials force X = Z = 0, and there the X- and
    // Z-partials force t1 = t2 = 0; so singular points are (0:0:X:Z) with
    // G, dG/dX, dG/dZ all vanishing.
    struct Candidate {
        bool at_infinity;
        FieldElem beta;
    };
    std::vector<Candidate> found;
    const FieldElem zero = ctx.zero();
    const FieldElem one = ctx.one();
    if (s.A.v == 0 && s.B.v == 0) found.push_back({true, zero});
    for (std::uint32_t i = 0; i < ctx.q(); ++i) {
        const FieldElem beta{i};
        if (binary_cubic(ctx, s, beta, one).v == 0 && cubic_dx(ctx, s, beta, one).v == 0 &&
            cubic_dz(ctx, s, beta, one).v == 0)
            found.push_back({false, beta});
    }
    if (found.size() > 1) throw std::logic_error("cubic surface has two singular points");

    SingularityInfo info;
    if (found.empty()) return info;
    info.singular = true;
    info.at_infinity = found[0].at_infinity;
    info.beta = found[0].beta;

    LocalForms& f = info.forms;
    if (info.at_infinity) {
        // X = W, Z = U
        info.point = Point3Q{{zero, zero, one, zero}};
        f = LocalForms{s.b1, s.b2, s.C, s.d1, s.d2, s.D};
    } else {
        // X = U + beta W, Z = W
        const FieldElem beta = info.beta;
        info.point = *normalize(ctx, std::array<FieldElem, 4>{zero, zero, beta, one});
        f.m1 = ctx.add(ctx.mul(s.b1, beta), s.d1);
        f.m2 = ctx.add(ctx.mul(s.b2, beta), s.d2);
        f.k = ctx.add(ctx.mul(ctx.mul(ctx.from_int(3), s.A), beta), s.B);
        f.n1 = s.b1;
        f.n2 = s.b2;
        f.h = s.A;
    }
    info.beta1 = ctx.sub(ctx.sqr(f.m1), ctx.mul(s.omega, ctx.sqr(f.m2)));
    if (info.beta1.v == 0) throw std::logic_error("tangent cone has rank below 2");

    if (f.k.v != 0)
        info.cone_kind = ConeKind::QuadricCone;
    else if (ctx.character(info.beta1) == QuadClass::Square)
        info.cone_kind = ConeKind::PlanePairRational;
    else
        info.cone_kind = ConeKind::PlanePairConjugate;

    // Lines through P correspond to points (t1:t2:U) of PG(2,q).
    for (const auto& pt : enumerate_pg2q(ctx)) {
        const auto [t1, t2, u] = pt.c;
        const FieldElem uu = ctx.sqr(u);
        const FieldElem phi2 =
            ctx.add(ternary(ctx, s.omega, f.m1, f.m2, t1, t2), ctx.mul(f.k, uu));
        if (phi2.v != 0) continue;
        ++info.cone_lines;
        const FieldElem phi3 = ctx.mul(
            u, ctx.add(ternary(ctx, s.omega, f.n1, f.n2, t1, t2), ctx.mul(f.h, uu)));
        if (phi3.v == 0) ++info.alpha_lines;
    }

    const std::size_t q = ctx.q();
    const std::size_t expected_cone_lines = info.cone_kind == ConeKind::QuadricCone ? q + 1
                                            : info.cone_kind == ConeKind::PlanePairRational
                                                ? 2 * q + 1
                                                : 1;
    if (info.cone_lines != expected_cone_lines)
        throw std::logic_error("tangent cone line count disagrees with its rank");
    return info;
}

}  // namespace baer
