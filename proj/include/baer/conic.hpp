#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "baer/gf.hpp"
#include "baer/proj.hpp"

namespace baer {

/// Nonsingular conic aX^2 + bXY + cY^2 + dXZ + eYZ + fZ^2 = 0 over GF(q^2).
struct Conic {
    using Matrix = std::array<std::array<ExtElem, 3>, 3>;

    std::array<ExtElem, 6> coef;  // a, b, c, d, e, f
    Matrix matrix;                // symmetric; off-diagonal entries are halved
};

enum class PointClass { OnConic, External, Internal };
const char* to_string(PointClass c);

/// Throws std::invalid_argument if the conic is singular.
Conic make_conic(const FieldCtx& ctx, const std::array<ExtElem, 6>& coef);
/// Unchecked; det may be zero. Used to filter coefficient vectors.
Conic::Matrix conic_matrix(const FieldCtx& ctx, const std::array<ExtElem, 6>& coef);
ExtElem conic_determinant(const FieldCtx& ctx, const Conic::Matrix& m);

/// P^t A Q.
ExtElem bilinear(const FieldCtx& ctx, const Conic& c, const PointQ2& p, const PointQ2& q);
/// P^t A P.
ExtElem quadratic_value(const FieldCtx& ctx, const Conic& c, const PointQ2& p);
LineQ2 polar_line(const FieldCtx& ctx, const Conic& c, const PointQ2& p);

/// On the conic, or external/internal by the number of points in which the
/// polar line of P meets the conic (2 or 0). Throws std::logic_error if the
/// polar line of an off-conic point turns out tangent.
PointClass classify_point(const FieldCtx& ctx, const Conic& c, const PointQ2& p);

/// Square class of P^t A P.
QuadClass joachimsthal_class(const FieldCtx& ctx, const Conic& c, const PointQ2& p);

struct SubplaneCount {
    std::size_t externals = 0;  // E_q
    std::size_t on_conic = 0;   // k = |C cap PG(2,q)|
};

/// Brute-force classification of every point of PG(2,q).
SubplaneCount count_externals_in_subplane(const FieldCtx& ctx, const Conic& c);
/// Same, over a precomputed enumeration of PG(2,q).
SubplaneCount count_externals_in_subplane(const FieldCtx& ctx, const Conic& c,
                                          std::span<const PointQ> subplane);

/// First point of PG(2,q), in enumeration order, on the conic.
std::optional<PointQ> find_subplane_point(const FieldCtx& ctx, const Conic& c);

/// True iff some scalar multiple of the coefficient vector lies in GF(q)^6.
bool is_defined_over_fq(const FieldCtx& ctx, const Conic& c);

/// The conic x -> F(M x); E_q is unchanged when M has entries in GF(q).
Conic pullback(const FieldCtx& ctx, const Conic& c, const CollineationQ& m);
Conic scale(const FieldCtx& ctx, const Conic& c, const ExtElem& s);

/// aX^2 + bXY + cXZ + dYZ + eZ^2 = 0: a conic through (0:1:0) with b != 0
/// and -bcd + ad^2 + b^2 e a square of GF(q^2).
///
/// Related to the source conic by F_norm(x) = scalar * F_src(transform * x).
struct NormalizedConic {
    std::array<ExtElem, 5> coef;  // a, b, c, d, e
    CollineationQ transform;
    bool swapped = false;    // (X:Y:Z) -> (Z:Y:X) was applied to get b != 0
    ExtElem scalar;          // 1, or the fixed non-square of GF(q^2)

    const ExtElem& a() const { return coef[0]; }
    const ExtElem& b() const { return coef[1]; }
    const ExtElem& c() const { return coef[2]; }
    const ExtElem& d() const { return coef[3]; }
    const ExtElem& e() const { return coef[4]; }
};

/// -bcd + ad^2 + b^2 e: P^t A P at the external point (-d/b : 0 : 1), times b^2.
ExtElem external_value(const FieldCtx& ctx, const std::array<ExtElem, 5>& coef);

/// Least non-square of GF(q^2) in canonical order; the rescaling factor.
ExtElem fixed_nonsquare(const FieldCtx& ctx);

/// Moves a subplane point of the conic to (0:1:0) by a GF(q) collineation
/// (keeping (0:1:0) itself when it is already on the conic), swaps X and Z
/// when b = 0, and rescales by a non-square when needed.
/// Throws std::invalid_argument when the conic has no subplane point.
NormalizedConic normalize(const FieldCtx& ctx, const Conic& c);

/// Six-coefficient form of (a, b, c, d, e) for aX^2 + bXY + cXZ + dYZ + eZ^2.
std::array<ExtElem, 6> general_form(const std::array<ExtElem, 5>& eq1);
Conic to_conic(const FieldCtx& ctx, const NormalizedConic& nc);

/// Six comma-separated elements, each "z1" or "z1+e*z2".
std::string format_conic(const FieldCtx& ctx, const Conic& c);
std::array<ExtElem, 6> parse_coefficients(const FieldCtx& ctx, const std::string& text);

}  // namespace baer
