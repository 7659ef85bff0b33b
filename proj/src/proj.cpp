#include "baer/proj.hpp"

#include <stdexcept>
#include <type_traits>

namespace baer {

namespace {

// Appends every normalized point of PG(N-1, F) with F of order `order`,
// where element(i) returns the i-th element in canonical order.
template <class E, std::size_t N, class ElemFn>
void enumerate_into(std::vector<ProjPoint<E, N>>& out, std::uint32_t order, ElemFn element) {
    for (std::size_t lead = 0; lead < N; ++lead) {
        const std::size_t free = N - 1 - lead;
        std::size_t count = 1;
        for (std::size_t i = 0; i < free; ++i) count *= order;
        for (std::size_t idx = 0; idx < count; ++idx) {
            ProjPoint<E, N> p{};
            p.c[lead] = element(1);
            // Most significant digit first gives lexicographic order.
            std::size_t x = idx;
            for (std::size_t j = N; j-- > lead + 1;) {
                p.c[j] = element(static_cast<std::uint32_t>(x % order));
                x /= order;
            }
            out.push_back(p);
        }
    }
}

}  // namespace

std::size_t space_size(const FieldCtx& ctx, Space s) {
    const std::size_t q = ctx.q();
    switch (s) {
        case Space::PG2q: return q * q + q + 1;
        case Space::PG2q2: return q * q * q * q + q * q + 1;
        case Space::PG3q: return q * q * q + q * q + q + 1;
    }
    return 0;
}

LineQ2 normalize_line(const FieldCtx& ctx, std::array<ExtElem, 3> coords) {
    auto p = normalize(ctx, coords);
    if (!p) throw std::invalid_argument("zero vector is not a line");
    return LineQ2{p->c};
}

std::vector<PointQ> enumerate_pg2q(const FieldCtx& ctx) {
    std::vector<PointQ> out;
    out.reserve(space_size(ctx, Space::PG2q));
    enumerate_into(out, ctx.q(), [](std::uint32_t i) { return FieldElem{i}; });
    return out;
}

std::vector<PointQ2> enumerate_pg2q2(const FieldCtx& ctx) {
    std::vector<PointQ2> out;
    out.reserve(space_size(ctx, Space::PG2q2));
    enumerate_into(out, ctx.ext_order(), [&](std::uint32_t i) { return ctx.ext_elem(i); });
    return out;
}

std::vector<Point3Q> enumerate_pg3q(const FieldCtx& ctx) {
    std::vector<Point3Q> out;
    out.reserve(space_size(ctx, Space::PG3q));
    enumerate_into(out, ctx.q(), [](std::uint32_t i) { return FieldElem{i}; });
    return out;
}

PointQ2 embed(const FieldCtx& ctx, const PointQ& p) {
    return PointQ2{{ctx.embed(p.c[0]), ctx.embed(p.c[1]), ctx.embed(p.c[2])}};
}

bool is_subplane_point(const PointQ2& p) {
    return FieldCtx::in_base(p.c[0]) && FieldCtx::in_base(p.c[1]) && FieldCtx::in_base(p.c[2]);
}

std::optional<PointQ> to_subplane(const PointQ2& p) {
    if (!is_subplane_point(p)) return std::nullopt;
    return PointQ{{p.c[0].z1, p.c[1].z1, p.c[2].z1}};
}

template <class E>
E determinant(const FieldCtx& ctx, const typename Collineation<E>::Matrix& m) {
    auto minor = [&](std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
        return ctx.sub(ctx.mul(m[r1][c1], m[r2][c2]), ctx.mul(m[r1][c2], m[r2][c1]));
    };
    E d = ctx.mul(m[0][0], minor(1, 2, 1, 2));
    d = ctx.sub(d, ctx.mul(m[0][1], minor(1, 2, 0, 2)));
    d = ctx.add(d, ctx.mul(m[0][2], minor(1, 2, 0, 1)));
    return d;
}

template <class E>
Collineation<E> Collineation<E>::make(const FieldCtx& ctx, const Matrix& m) {
    if (determinant<E>(ctx, m) == E{}) throw std::invalid_argument("singular collineation matrix");
    return Collineation(m);
}

template <class E>
Collineation<E> Collineation<E>::identity(const FieldCtx&) {
    Matrix m{};
    if constexpr (std::is_same_v<E, FieldElem>) {
        for (std::size_t i = 0; i < 3; ++i) m[i][i] = FieldElem{1};
    } else {
        for (std::size_t i = 0; i < 3; ++i) m[i][i] = ExtElem{FieldElem{1}, FieldElem{0}};
    }
    return Collineation(m);
}

template <class E>
ProjPoint<E, 3> Collineation<E>::apply(const FieldCtx& ctx, const ProjPoint<E, 3>& p) const {
    std::array<E, 3> out{};
    for (std::size_t r = 0; r < 3; ++r) {
        E acc{};
        for (std::size_t c = 0; c < 3; ++c) acc = ctx.add(acc, ctx.mul(m_[r][c], p.c[c]));
        out[r] = acc;
    }
    auto n = normalize(ctx, out);
    if (!n) throw std::logic_error("invertible map sent a point to zero");
    return *n;
}

template class Collineation<FieldElem>;
template class Collineation<ExtElem>;
template FieldElem determinant<FieldElem>(const FieldCtx&, const Collineation<FieldElem>::Matrix&);
template ExtElem determinant<ExtElem>(const FieldCtx&, const Collineation<ExtElem>::Matrix&);

CollineationQ2 lift(const FieldCtx& ctx, const CollineationQ& m) {
    CollineationQ2::Matrix out{};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) out[r][c] = ctx.embed(m.at(r, c));
    return CollineationQ2::make(ctx, out);
}

bool incident(const FieldCtx& ctx, const LineQ2& l, const PointQ2& p) {
    ExtElem acc{};
    for (std::size_t i = 0; i < 3; ++i) acc = ctx.add(acc, ctx.mul(l.c[i], p.c[i]));
    return FieldCtx::is_zero(acc);
}

std::size_t line_conic_style_intersection(const FieldCtx& ctx, const LineQ2& l,
                                          std::span<const PointQ2> points) {
    std::size_t n = 0;
    for (const auto& p : points)
        if (incident(ctx, l, p)) ++n;
    return n;
}

}  // namespace baer
