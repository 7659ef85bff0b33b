#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "baer/gf.hpp"

namespace baer {

/// Homogeneous coordinates, normalized so the first nonzero entry is 1.
template <class E, std::size_t N>
struct ProjPoint {
    std::array<E, N> c{};
    friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

using PointQ = ProjPoint<FieldElem, 3>;   // PG(2,q)
using PointQ2 = ProjPoint<ExtElem, 3>;    // PG(2,q^2)
using Point3Q = ProjPoint<FieldElem, 4>;  // PG(3,q)

/// Line of a projective plane in dual coordinates; P lies on it iff l.P = 0.
template <class E>
struct ProjLine {
    std::array<E, 3> c{};
    friend constexpr auto operator<=>(const ProjLine&, const ProjLine&) = default;
};

using LineQ2 = ProjLine<ExtElem>;

enum class Space { PG2q, PG2q2, PG3q };

/// q^2+q+1, q^4+q^2+1 or q^3+q^2+q+1.
std::size_t space_size(const FieldCtx& ctx, Space s);

/// Scales coords so the first nonzero entry is 1; nullopt for the zero vector.
template <class E, std::size_t N>
std::optional<ProjPoint<E, N>> normalize(const FieldCtx& ctx, std::array<E, N> coords) {
    for (std::size_t i = 0; i < N; ++i) {
        if (coords[i] != E{}) {
            const E s = ctx.inv(coords[i]);
            for (std::size_t j = i; j < N; ++j) coords[j] = ctx.mul(coords[j], s);
            return ProjPoint<E, N>{coords};
        }
    }
    return std::nullopt;
}

/// Lines share the normalization of points.
LineQ2 normalize_line(const FieldCtx& ctx, std::array<ExtElem, 3> coords);

// Enumeration order: points are grouped by the position of their leading 1
// (position 0 first); within a group the trailing coordinates run
// lexicographically in the canonical element order.
std::vector<PointQ> enumerate_pg2q(const FieldCtx& ctx);
std::vector<PointQ2> enumerate_pg2q2(const FieldCtx& ctx);
std::vector<Point3Q> enumerate_pg3q(const FieldCtx& ctx);

PointQ2 embed(const FieldCtx& ctx, const PointQ& p);

/// True iff every coordinate of the normalized representative lies in GF(q).
bool is_subplane_point(const PointQ2& p);
/// Restriction of a subplane point to PG(2,q); nullopt if not a subplane point.
std::optional<PointQ> to_subplane(const PointQ2& p);

/// Invertible 3x3 matrix acting on column vectors.
template <class E>
class Collineation {
public:
    using Matrix = std::array<std::array<E, 3>, 3>;

    /// Throws std::invalid_argument when m is singular.
    static Collineation make(const FieldCtx& ctx, const Matrix& m);
    static Collineation identity(const FieldCtx& ctx);

    const Matrix& matrix() const { return m_; }
    E at(std::size_t r, std::size_t c) const { return m_[r][c]; }

    /// Normalized M.P.
    ProjPoint<E, 3> apply(const FieldCtx& ctx, const ProjPoint<E, 3>& p) const;

private:
    explicit Collineation(const Matrix& m) : m_(m) {}
    Matrix m_;
};

template <class E>
E determinant(const FieldCtx& ctx, const typename Collineation<E>::Matrix& m);

using CollineationQ = Collineation<FieldElem>;
using CollineationQ2 = Collineation<ExtElem>;

/// Image of a GF(q) collineation acting on PG(2,q^2).
CollineationQ2 lift(const FieldCtx& ctx, const CollineationQ& m);

bool incident(const FieldCtx& ctx, const LineQ2& l, const PointQ2& p);

/// Number of points of the sequence on l.
std::size_t line_conic_style_intersection(const FieldCtx& ctx, const LineQ2& l,
                                          std::span<const PointQ2> points);

}  // namespace baer
