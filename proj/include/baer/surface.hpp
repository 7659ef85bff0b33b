#pragma once

#include <optional>
#include <span>

#include "baer/conic.hpp"
#include "baer/gf.hpp"
#include "baer/proj.hpp"

namespace baer {

/// GF(q) components of the normalized conic coefficients: z = z1 + eps*z2.
struct ComponentCoeffs {
    FieldElem a1, a2, b1, b2, c1, c2, d1, d2, e1, e2;
};

/// The cubic surface of PG(3,q), coordinates (t1:t2:X:Z),
///
///   2 t1 t2 (b1 X + d1 Z) - (t1^2 + w t2^2)(b2 X + d2 Z)
///       + A X^3 + B X^2 Z + C X Z^2 + D Z^3 = 0,
///
/// whose rational points with (X,Z) != (0,0) and (t1,t2) != (0,0) come in
/// +-(t1,t2) pairs over the PG(2,q) points P with P^t A P a nonzero square.
struct CubicSurface {
    FieldElem b1, b2, d1, d2;
    FieldElem A, B, C, D;
    FieldElem omega;
};

ComponentCoeffs decompose_conic(const NormalizedConic& nc);

/// Throws std::invalid_argument when (A,B,C,D) = 0 (the conic is singular).
CubicSurface build_surface(const FieldCtx& ctx, const ComponentCoeffs& cc);

FieldElem evaluate(const FieldCtx& ctx, const CubicSurface& s, const Point3Q& p);

/// b1 d2 - b2 d1 = 0: the plane b1 X + d1 Z = 0 (or b2 X + d2 Z = 0) splits off.
bool is_reducible(const FieldCtx& ctx, const CubicSurface& s);

struct SurfaceCounts {
    std::size_t S_q = 0;    // rational points
    std::size_t n0 = 0;     // points with t1 = t2 = 0
    std::size_t n_inf = 0;  // points with X = Z = 0
};

SurfaceCounts count_points(const FieldCtx& ctx, const CubicSurface& s);
SurfaceCounts count_points(const FieldCtx& ctx, const CubicSurface& s,
                           std::span<const Point3Q> pg3q);

/// Number of GF(q) roots of A X^3 + B X^2 Z + C X Z^2 + D Z^3 on PG(1,q).
std::size_t binary_cubic_roots(const FieldCtx& ctx, const CubicSurface& s);

enum class ConeKind { QuadricCone, PlanePairRational, PlanePairConjugate };
const char* to_string(ConeKind k);

/// Ternary forms in (t1, t2, U) describing S after moving its double point P
/// to (0:0:0:1), with W the coordinate along P:
///   F = W * phi2 + phi3,
///   phi2 = 2 m1 t1 t2 - m2 (t1^2 + w t2^2) + k U^2,
///   phi3 = U (2 n1 t1 t2 - n2 (t1^2 + w t2^2) + h U^2).
/// phi2 = 0 is the tangent cone; common zeros of phi2, phi3 are the lines of
/// S through P.
struct LocalForms {
    FieldElem m1, m2, k;
    FieldElem n1, n2, h;
};

struct SingularityInfo {
    bool singular = false;
    Point3Q point{};          // (0:0:beta:1) normalized, or (0:0:1:0) when at_infinity
    bool at_infinity = false;
    FieldElem beta{};
    FieldElem beta1{};        // m1^2 - w m2^2
    ConeKind cone_kind = ConeKind::QuadricCone;
    LocalForms forms{};
    std::size_t cone_lines = 0;   // rational lines through P in the tangent cone
    std::size_t alpha_lines = 0;  // rational lines through P on S
};

/// Locates the double point of an irreducible surface from the gradient
/// system restricted to t1 = t2 = 0, and classifies its tangent cone.
/// Throws std::invalid_argument for reducible surfaces and std::logic_error
/// if more than one singular point is found.
SingularityInfo find_singularity(const FieldCtx& ctx, const CubicSurface& s);

}  // namespace baer
