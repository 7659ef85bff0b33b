#include "baer/classifier.hpp"

#include <algorithm>

namespace baer {

const char* to_string(Case c) {
    switch (c) {
        case Case::DefinedOverFq: return "defined_over_fq";
        case Case::IrreducibleNonsingular: return "irreducible_nonsingular";
        case Case::IrreducibleSingular: return "irreducible_singular";
        case Case::ReducibleCone: return "reducible_cone";
        case Case::ReducibleNonsingularQuadric: return "reducible_nonsingular_quadric";
    }
    return "?";
}

ReducibleDiscriminants reducible_discriminants(const FieldCtx& ctx, const ComponentCoeffs& cc) {
    auto m = [&](FieldElem x, FieldElem y) { return ctx.mul(x, y); };
    if (m(cc.b1, cc.d2) != m(cc.b2, cc.d1))
        throw std::invalid_argument("surface is irreducible");
    ReducibleDiscriminants rd{};
    rd.a_prime = ctx.sub(m(cc.b1, cc.a2), m(cc.a1, cc.b2));
    rd.c_prime = ctx.sub(m(cc.b1, cc.c2), m(cc.b2, cc.c1));
    rd.e_prime = ctx.sub(m(cc.b1, cc.e2), m(cc.b2, cc.e1));
    rd.delta_prime = ctx.sub(ctx.sqr(rd.c_prime),
                             m(ctx.from_int(4), m(rd.a_prime, rd.e_prime)));
    rd.delta = ctx.sub(m(ctx.sqr(cc.b2), ctx.omega()), ctx.sqr(cc.b1));
    // Pi is b1 X + d1 Z = 0, or b2 X + d2 Z = 0 when b1 = d1 = 0; it meets
    // t1 = t2 = 0 in (0:0:v:-u).
    FieldElem u = cc.b1, v = cc.d1;
    if (u.v == 0 && v.v == 0) {
        u = cc.b2;
        v = cc.d2;
    }
    rd.kappa = ctx.add(ctx.sub(m(rd.a_prime, ctx.sqr(v)), m(rd.c_prime, m(u, v))),
                       m(rd.e_prime, ctx.sqr(u)));
    return rd;
}

std::size_t reducible_predict(const FieldCtx& ctx, const ReducibleDiscriminants& rd) {
    const std::size_t q = ctx.q();
    const std::size_t q2 = q * q;
    // b2 t1^2 - 2 b1 t1 t2 + b2 w t2^2 has rational zeros iff -delta, the
    // norm of b, is a square of GF(q).
    const bool t_isotropic = ctx.character(ctx.neg(rd.delta)) == QuadClass::Square;
    const bool kappa_zero = rd.kappa.v == 0;
    const QuadClass dp = ctx.character(rd.delta_prime);

    if (dp == QuadClass::Zero) {
        if (!kappa_zero) return (q2 - 1) / 2 + q;
        return t_isotropic ? (q2 - q) / 2 + q : (q2 + q) / 2 + q;
    }
    if (kappa_zero) {
        if (dp != QuadClass::Square)
            throw std::logic_error("kappa = 0 with delta' a non-square");
        return (q2 - 1) / 2 + q;
    }
    if (dp == QuadClass::Square) return t_isotropic ? (q2 + q - 2) / 2 + q : (q2 - q - 2) / 2 + q;
    return t_isotropic ? (q2 - q) / 2 + q : (q2 + q) / 2 + q;
}

std::set<std::size_t> theorem_value_set(std::uint32_t q) {
    if (q == 3) return {3, 4, 5, 6, 7, 8, 9};
    if (q == 5) return {11, 12, 14, 15, 16, 17, 19, 20, 21, 22, 25};
    std::set<std::size_t> out{std::size_t(q) * q};
    const long lq = q;
    for (long alpha : {1, 2, 3, 4, 5, 7})
        for (long n0 = 0; n0 <= 3; ++n0)
            if ((alpha - n0) % 2 == 0)
                out.insert(static_cast<std::size_t>((lq * lq + (alpha - 1) * lq - n0) / 2));
    return out;
}

bool in_weil_set(long alpha) {
    constexpr long weil[] = {-2, -1, 0, 1, 2, 3, 4, 5, 7};
    return std::find(std::begin(weil), std::end(weil), alpha) != std::end(weil);
}

Predictor::Predictor(const FieldCtx& ctx)
    : ctx_(ctx),
      subplane_(enumerate_pg2q(ctx)),
      pg3q_(enumerate_pg3q(ctx)),
      value_set_(theorem_value_set(ctx.q())) {}

Report Predictor::predict(const Conic& c) const {
    if (FieldCtx::is_zero(conic_determinant(ctx_, c.matrix)))
        throw Refusal("singular conic");

    Report r;
    r.q = ctx_.q();
    r.conic = format_conic(ctx_, c);

    const SubplaneCount oracle = count_externals_in_subplane(ctx_, c, subplane_);
    r.oracle = oracle.externals;
    r.k = oracle.on_conic;

    if (is_defined_over_fq(ctx_, c)) {
        r.kase = Case::DefinedOverFq;
        r.predicted = std::size_t(r.q) * r.q;
    } else {
        NormalizedConic nc = [&] {
            try {
                return normalize(ctx_, c);
            } catch (const std::invalid_argument& e) {
                throw Refusal(e.what());
            }
        }();
        const ComponentCoeffs cc = decompose_conic(nc);
        const CubicSurface s = build_surface(ctx_, cc);
        if (is_reducible(ctx_, s))
            predict_reducible(nc, cc, r);
        else
            predict_irreducible(s, r);
    }
    r.match = r.predicted == r.oracle;
    check_common(c, r);
    return r;
}

void Predictor::predict_reducible(const NormalizedConic& nc, const ComponentCoeffs& cc,
                                  Report& r) const {
    const ReducibleDiscriminants rd = reducible_discriminants(ctx_, cc);
    if (rd.a_prime.v == 0 && rd.c_prime.v == 0 && rd.e_prime.v == 0)
        r.violations.push_back("reducible branch: a' = c' = e' = 0 for a conic not over GF(q)");
    if (rd.delta.v == 0) r.violations.push_back("reducible branch: delta = 0");

    r.kase = rd.delta_prime.v == 0 ? Case::ReducibleCone : Case::ReducibleNonsingularQuadric;
    r.delta_class = ctx_.character(rd.delta);
    r.delta_prime_class = ctx_.character(rd.delta_prime);
    r.kappa_zero = rd.kappa.v == 0;
    try {
        r.predicted = reducible_predict(ctx_, rd);
    } catch (const std::logic_error& e) {
        r.violations.push_back(std::string("reducible branch: ") + e.what());
    }

    // The tangent line at (0:1:0) is X + lambda Z = 0 with lambda = d/b in
    // GF(q); its q + 1 subplane points are (0:1:0) and q externals.
    const Conic normalized = to_conic(ctx_, nc);
    const ExtElem lambda = ctx_.div(nc.d(), nc.b());
    if (!FieldCtx::in_base(lambda)) {
        r.violations.push_back("reducible branch: d/b not in GF(q)");
        return;
    }
    std::size_t externals = 0, on_conic = 0;
    const ExtElem one = ctx_.embed(ctx_.one());
    on_conic += classify_point(ctx_, normalized, PointQ2{{ExtElem{}, one, ExtElem{}}}) ==
                PointClass::OnConic;
    for (std::uint32_t y = 0; y < ctx_.q(); ++y) {
        const PointQ2 p{{ctx_.neg(lambda), ctx_.embed(FieldElem{y}), one}};
        const PointClass pc = classify_point(ctx_, normalized, p);
        externals += pc == PointClass::External;
        on_conic += pc == PointClass::OnConic;
    }
    if (externals != ctx_.q() || on_conic != 1)
        r.violations.push_back("reducible branch: tangent line at (0:1:0) does not carry q externals");
}

void Predictor::predict_irreducible(const CubicSurface& s, Report& r) const {
    const std::size_t q = ctx_.q();
    const SurfaceCounts counts = count_points(ctx_, s, pg3q_);
    r.S_q = counts.S_q;
    r.n0 = counts.n0;
    r.n_inf = counts.n_inf;

    if (counts.n_inf != q + 1) r.violations.push_back("n_inf != q + 1");
    if (counts.n0 > 3) r.violations.push_back("n0 > 3");
    if (counts.n0 != binary_cubic_roots(ctx_, s))
        r.violations.push_back("n0 differs from the number of roots of A X^3 + ... + D Z^3");
    const std::size_t removed = counts.n0 + q + 1;
    if (counts.S_q < removed || (counts.S_q - removed) % 2 != 0) {
        r.violations.push_back("S_q - n0 - q - 1 is negative or odd");
        return;
    }
    r.predicted = (counts.S_q - removed) / 2;

    const long diff = static_cast<long>(counts.S_q) - static_cast<long>(q * q + 1);
    if (diff % static_cast<long>(q) != 0) {
        r.violations.push_back("S_q is not of the form q^2 + alpha q + 1");
    } else {
        r.alpha = diff / static_cast<long>(q);
    }

    const SingularityInfo sing = find_singularity(ctx_, s);
    const long n0 = static_cast<long>(counts.n0);
    if (!sing.singular) {
        r.kase = Case::IrreducibleNonsingular;
        if (!r.alpha) return;
        const long a = *r.alpha;
        if (!in_weil_set(a)) r.violations.push_back("smooth surface with alpha outside the Weil set");
        if (q <= 5 && a > 5) r.violations.push_back("alpha > 5 for q <= 5");
        if ((a - n0) % 2 != 0) r.violations.push_back("alpha - n0 is odd");
        if (q > 3 && a <= 0) r.violations.push_back("alpha in {-2,-1,0} for q > 3");
        return;
    }

    r.kase = Case::IrreducibleSingular;
    r.singularity = sing;
    if (sing.alpha_lines != 0 && sing.alpha_lines != 2 && sing.alpha_lines != 4)
        r.violations.push_back("number of lines through the double point not in {0,2,4}");
    // Projecting from the double point: q^2+q+1 lines, each off the tangent
    // cone adds one point, each on S adds q.
    const std::size_t expected = q * q + q + 2 - sing.cone_lines + q * sing.alpha_lines;
    if (counts.S_q != expected)
        r.violations.push_back("S_q disagrees with the tangent-cone line count");
    switch (sing.cone_kind) {
        case ConeKind::QuadricCone:
            break;
        case ConeKind::PlanePairRational:
            if (sing.alpha_lines != 4 || counts.S_q != q * q + 3 * q + 1)
                r.violations.push_back("rational plane pair without S_q = q^2 + 3q + 1");
            break;
        case ConeKind::PlanePairConjugate:
            if (counts.S_q != q * q + q + 1)
                r.violations.push_back("conjugate plane pair without S_q = q^2 + q + 1");
            break;
    }
    if (r.alpha && (*r.alpha - n0) % 2 != 0) r.violations.push_back("alpha - n0 is odd");
}

void Predictor::check_common(const Conic&, Report& r) const {
    const std::size_t q = r.q;
    const std::size_t q2 = q * q;
    if (r.kase == Case::DefinedOverFq) {
        if (r.k != q + 1) r.violations.push_back("conic over GF(q) without q + 1 rational points");
    } else {
        if (r.k > 4) r.violations.push_back("conic not over GF(q) with more than 4 rational points");
        if (r.predicted >= q2 && q >= 5)
            r.violations.push_back("E_q = q^2 for a conic not over GF(q)");
        if (!value_set_.contains(r.predicted) || (q >= 5 && r.predicted == q2))
            r.violations.push_back("E_q outside the admissible value set");
    }
    if (q > 3 && 2 * r.oracle + 3 < q2) r.violations.push_back("E_q < (q^2 - 3)/2");
}

Report predict(const FieldCtx& ctx, const Conic& c) { return Predictor(ctx).predict(c); }

}  // namespace baer
