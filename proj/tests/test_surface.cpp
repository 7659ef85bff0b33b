#include <doctest.h>

#include <random>

#include "baer/surface.hpp"
#include "oracles.hpp"

using namespace baer;
using namespace baer::testing;

TEST_CASE("component decomposition") {
    const FieldCtx f = FieldCtx::make(3, 1);
    const ExtElem one = f.embed(f.one()), zero{};
    // A conic over GF(q) through (0:1:0) normalizes to GF(q) coefficients.
    const NormalizedConic fq = normalize(f, make_conic(f, general_form({one, one, zero, one, zero})));
    const ComponentCoeffs cf = decompose_conic(fq);
    if (fq.scalar == one) {
        CHECK(cf.a2.v == 0);
        CHECK(cf.b2.v == 0);
        CHECK(cf.c2.v == 0);
        CHECK(cf.d2.v == 0);
        CHECK(cf.e2.v == 0);
    }
    const NormalizedConic eps = normalize(f, make_conic(f, general_form({one, f.epsilon(), zero, one, zero})));
    CHECK(eps.scalar == one);
    const ComponentCoeffs ce = decompose_conic(eps);
    CHECK(ce.b1.v == 0);
    CHECK(ce.b2.v == 1);

    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
        const FieldCtx g = field_for_order(q);
        const NormalizedConic nc = normalize(g, example_family(g));
        CHECK(nc.scalar == g.embed(g.one()));
        const ComponentCoeffs cc = decompose_conic(nc);
        CHECK(cc.a2.v == 0);
        CHECK(cc.c1.v == 0);
        CHECK(cc.c2.v == 0);
        CHECK(cc.e1.v == 0);
        CHECK(cc.e2.v == 0);
        CHECK(cc.d2.v == 0);
        CHECK(cc.d1 == g.one());
        CHECK(cc.b2.v != 0);
        const CubicSurface s = build_surface(g, cc);
        CHECK(s.A == g.mul(cc.a1, cc.b2));
        CHECK(s.B.v == 0);
        CHECK(s.C.v == 0);
        CHECK(s.D.v == 0);
        CHECK(!is_reducible(g, s));
    }
}

TEST_CASE("cubic coefficients and reducibility") {
    const FieldCtx f = FieldCtx::make(3, 1);
    ComponentCoeffs cc{};
    cc.a2 = f.one();  // a = e
    cc.b1 = f.one();  // b = 1
    const CubicSurface s = build_surface(f, cc);
    CHECK(s.A == f.neg(f.one()));
    CHECK_THROWS_AS(build_surface(f, ComponentCoeffs{}), std::invalid_argument);

    CubicSurface r{};
    r.omega = f.omega();
    r.b2 = f.one();
    r.d2 = f.one();  // b = d = e
    CHECK(is_reducible(f, r));
    r = CubicSurface{};
    r.b1 = FieldElem{2};
    r.d1 = f.one();  // b, d in GF(q)
    CHECK(is_reducible(f, r));
}

TEST_CASE("point counts") {
    const FieldCtx f = FieldCtx::make(3, 1);
    const CubicSurface ex = surface_of(f, example_family(f));
    const SurfaceCounts c = count_points(f, ex);
    CHECK(c.S_q == 19);
    CHECK(c.n0 == 1);
    CHECK(c.n_inf == 4);

    const auto pg3 = enumerate_pg3q(f);
    for (const auto& s : q3_surfaces(f, true)) {
        SurfaceCounts brute;
        for (const auto& p : pg3) {
            if (evaluate(f, s, p).v != 0) continue;
            ++brute.S_q;
            brute.n0 += p.c[0].v == 0 && p.c[1].v == 0;
            brute.n_inf += p.c[2].v == 0 && p.c[3].v == 0;
        }
        const SurfaceCounts got = count_points(f, s, pg3);
        CHECK(got.S_q == brute.S_q);
        CHECK(got.n0 == brute.n0);
        CHECK(got.n_inf == 4);
        CHECK(binary_cubic_roots(f, s) == got.n0);
    }
}

TEST_CASE("double point and local forms") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
        const FieldCtx f = field_for_order(q);
        const SingularityInfo ex = find_singularity(f, surface_of(f, example_family(f)));
        CHECK(ex.singular);
        CHECK(!ex.at_infinity);
        CHECK(ex.beta.v == 0);
        CHECK(ex.point == Point3Q{{FieldElem{0}, FieldElem{0}, FieldElem{0}, f.one()}});
        CHECK(ex.cone_kind == ConeKind::PlanePairRational);
        CHECK(ex.alpha_lines == 4);
    }

    const FieldCtx f = FieldCtx::make(3, 1);
    const auto plane = enumerate_pg2q(f);
    const auto pg3 = enumerate_pg3q(f);
    std::size_t singular = 0, smooth = 0;
    for (const auto& s : q3_surfaces(f, true)) {
        const SingularityInfo info = find_singularity(f, s);
        // Singular points over GF(q) by a full gradient scan.
        std::vector<Point3Q> scan;
        for (const auto& p : pg3) {
            std::array<ExtElem, 4> e;
            for (std::size_t i = 0; i < 4; ++i) e[i] = f.embed(p.c[i]);
            if (gradient(f, s, e).all_zero()) scan.push_back(p);
        }
        CHECK(scan.size() <= 1);
        CHECK(info.singular == !scan.empty());
        if (!info.singular) {
            ++smooth;
            continue;
        }
        ++singular;
        CHECK(scan.front() == info.point);

        // F(t1, t2, U + beta W, W) = W phi2 + phi3, or with (X, Z) = (W, U)
        // at infinity.
        const LocalForms& m = info.forms;
        const FieldElem two = f.from_int(2);
        auto binary = [&](FieldElem u, FieldElem v, FieldElem t1, FieldElem t2) {
            return f.sub(f.mul(two, f.mul(u, f.mul(t1, t2))),
                         f.mul(v, f.add(f.sqr(t1), f.mul(f.omega(), f.sqr(t2)))));
        };
        auto phi2 = [&](FieldElem t1, FieldElem t2, FieldElem u) {
            return f.add(binary(m.m1, m.m2, t1, t2), f.mul(m.k, f.sqr(u)));
        };
        auto phi3 = [&](FieldElem t1, FieldElem t2, FieldElem u) {
            return f.mul(u, f.add(binary(m.n1, m.n2, t1, t2), f.mul(m.h, f.sqr(u))));
        };
        for (std::uint32_t t1 = 0; t1 < 3; ++t1)
            for (std::uint32_t t2 = 0; t2 < 3; ++t2)
                for (std::uint32_t u = 0; u < 3; ++u)
                    for (std::uint32_t w = 0; w < 3; ++w) {
                        const FieldElem T1{t1}, T2{t2}, U{u}, W{w};
                        const Point3Q p =
                            info.at_infinity
                                ? Point3Q{{T1, T2, W, U}}
                                : Point3Q{{T1, T2, f.add(U, f.mul(info.beta, W)), W}};
                        const FieldElem local = f.add(f.mul(W, phi2(T1, T2, U)), phi3(T1, T2, U));
                        CHECK(evaluate(f, s, p) == local);
                    }

        std::size_t cone = 0, lines = 0;
        for (const auto& p : plane) {
            if (phi2(p.c[0], p.c[1], p.c[2]).v != 0) continue;
            ++cone;
            lines += phi3(p.c[0], p.c[1], p.c[2]).v == 0;
        }
        CHECK(cone == info.cone_lines);
        CHECK(lines == info.alpha_lines);
        const bool rank3 = m.k.v != 0;
        CHECK((info.cone_kind == ConeKind::QuadricCone) == rank3);
        if (info.cone_kind == ConeKind::QuadricCone) CHECK(cone == 4);
        if (info.cone_kind == ConeKind::PlanePairRational) CHECK(cone == 7);
        if (info.cone_kind == ConeKind::PlanePairConjugate) CHECK(cone == 1);
    }
    CHECK(singular > 0);
    CHECK(smooth > 0);
}

TEST_CASE("no singular points outside GF(q)") {
    const FieldCtx f = FieldCtx::make(3, 1);
    const auto surfaces = q3_surfaces(f, true);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, surfaces.size() - 1);
    for (int i = 0; i < 40; ++i) {
        const CubicSurface& s = surfaces[pick(rng)];
        const auto pts = singular_points_q2(f, s);
        CHECK(pts.size() <= 1);
        for (const auto& p : pts)
            for (const auto& z : p) CHECK(FieldCtx::in_base(z));
        CHECK(find_singularity(f, s).singular == !pts.empty());
    }
    CHECK_THROWS_AS(find_singularity(f, surface_of(f, make_conic(f, general_form(
                        {f.epsilon(), f.embed(f.one()), ExtElem{}, f.embed(f.one()), ExtElem{}})))),
                    std::invalid_argument);
}
