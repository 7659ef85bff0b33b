#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "baer/conic.hpp"
#include "baer/gf.hpp"
#include "baer/proj.hpp"
#include "baer/surface.hpp"

namespace baer {

enum class Case {
    DefinedOverFq,
    IrreducibleNonsingular,
    IrreducibleSingular,
    ReducibleCone,
    ReducibleNonsingularQuadric,
};
const char* to_string(Case c);

/// Raised when a conic lies outside the hypotheses of the prediction
/// (singular, or without a point in PG(2,q)).
class Refusal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invariants of the quadric Q of S = Pi u Q when b1 d2 = b2 d1.
struct ReducibleDiscriminants {
    FieldElem a_prime, c_prime, e_prime;  // b1 a2 - a1 b2, b1 c2 - b2 c1, b1 e2 - b2 e1
    FieldElem delta_prime;                // c'^2 - 4 a' e'
    FieldElem delta;                      // b2^2 w - b1^2
    FieldElem kappa;                      // a' v^2 - c' u v + e' u^2, Pi: uX + vZ = 0
};

/// Throws std::invalid_argument when the surface is irreducible.
ReducibleDiscriminants reducible_discriminants(const FieldCtx& ctx, const ComponentCoeffs& cc);

/// Closed-form E_q for the reducible branch: the q externals on the tangent
/// line at (0:1:0) plus half the points of Q off Pi and off t1 = t2 = 0.
/// Throws std::logic_error for kappa = 0 with delta' a non-zero non-square.
std::size_t reducible_predict(const FieldCtx& ctx, const ReducibleDiscriminants& rd);

/// Admissible E_q values for conics not over GF(q) with a rational point,
/// together with q^2 (the GF(q) case).
std::set<std::size_t> theorem_value_set(std::uint32_t q);

/// Weil coefficient set for smooth cubic surfaces.
bool in_weil_set(long alpha);

struct Report {
    Case kase = Case::DefinedOverFq;
    std::uint32_t q = 0;
    std::string conic;  // text form of the input conic
    std::size_t k = 0;

    std::optional<std::size_t> S_q;
    std::optional<std::size_t> n0;
    std::optional<std::size_t> n_inf;
    std::optional<long> alpha;  // S_q = q^2 + alpha q + 1
    std::optional<SingularityInfo> singularity;

    std::optional<QuadClass> delta_class;
    std::optional<QuadClass> delta_prime_class;
    std::optional<bool> kappa_zero;

    std::size_t predicted = 0;
    std::size_t oracle = 0;
    bool match = false;
    /// Failed structural or value-set checks; empty on a clean run.
    std::vector<std::string> violations;

    bool ok() const { return match && violations.empty(); }
};

/// Runs the brute-force count and the surface pipeline on conics over one
/// field, reusing the point enumerations.
class Predictor {
public:
    explicit Predictor(const FieldCtx& ctx);

    const FieldCtx& field() const { return ctx_; }
    std::span<const PointQ> subplane() const { return subplane_; }
    std::span<const Point3Q> pg3q() const { return pg3q_; }

    /// Throws Refusal for singular conics and conics without a rational point.
    Report predict(const Conic& c) const;

private:
    void predict_reducible(const NormalizedConic& nc, const ComponentCoeffs& cc,
                           Report& r) const;
    void predict_irreducible(const CubicSurface& s, Report& r) const;
    void check_common(const Conic& c, Report& r) const;

    const FieldCtx& ctx_;
    std::vector<PointQ> subplane_;
    std::vector<Point3Q> pg3q_;
    std::set<std::size_t> value_set_;
};

Report predict(const FieldCtx& ctx, const Conic& c);

}  // namespace baer
