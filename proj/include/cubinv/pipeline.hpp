#ifndef CUBINV_PIPELINE_HPP
#define CUBINV_PIPELINE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "differential.hpp"
#include "errors.hpp"
#include "graded_form.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "transfer.hpp"

namespace cubinv {

struct InvariantVector {
    Rational I8, I16, I24, I32, I40;
    std::optional<Rational> I100;

    std::array<const Rational*, 5> primary() const { return {&I8, &I16, &I24, &I32, &I40}; }
};

struct LinearCovariants {
    GradedForm C11, C19, C27, C43;
};

/// Coefficients of a linear form in variable order (x, y, z, w).
inline std::array<Rational, 4> linear_coefficients(const GradedForm& g) {
    if (g.order != 0 && g.order != 1) throw error("expected a linear form");
    std::array<Rational, 4> out{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (std::size_t i = 0; i < 4; ++i) {
        Exponents e(4, 0);
        e[i] = 1;
        out[i] = g.poly.coefficient(e);
    }
    return out;
}

inline void validate_cubic_surface(const SparsePoly& f) {
    if (f.space()->arity() != 4)
        throw invalid_form("a cubic surface needs 4 variables");
    if (f.is_zero()) throw zero_form("the zero form does not define a surface");
    if (!f.is_homogeneous() || f.total_degree() != 3)
        throw invalid_form("expected a homogeneous cubic");
}

/// Everything the chain produces in one pass: the transfer contravariant and
/// Hessian, the five invariants, the four linear covariants, and the
/// determinant invariant built from their coefficient matrix.
struct PipelineResult {
    GradedForm s_tilde;   // C_{4,0,4}
    GradedForm hessian;   // C_{4,4}
    InvariantVector invariants;
    LinearCovariants covariants;
    Rational i100;
};

namespace detail {

/// The head of the chain: everything the five invariants need.
struct InvariantChain {
    GradedForm C404, C44, fc, C62, C1002, C111a, C142;
    InvariantVector inv;
};

inline InvariantChain invariant_chain(const SparsePoly& f, std::uint64_t point_seed) {
    validate_cubic_surface(f);

    GradedForm C404 = s_tilde(f, point_seed);
    GradedForm C44 = hessian(f);
    GradedForm fc = form_as_covariant(f);
    const GradedForm f2 = gf_mul(fc, fc);

    GradedForm C62 = apply_contravariant_to_covariant(C404, f2);
    GradedForm C1002 = apply_covariant_to_contravariant(C62, C404);
    GradedForm C111a = apply_contravariant_to_covariant(C1002, fc);
    GradedForm C142 = apply_contravariant_to_covariant(C1002, C44);

    const Rational I8 =
        apply_contravariant_to_covariant(C404, C44).value() / pow23(11, 9);
    const Rational I16 =
        apply_covariant_to_contravariant(C62, C1002).value() / pow23(30, 22);
    const Rational I24 =
        apply_contravariant_to_covariant(C1002, C142).value() / pow23(41, 33);
    const Rational I32a =
        apply_contravariant_to_covariant(C1002, gf_mul(C111a, C111a)).value();
    const Rational I32 =
        Rational(2, 5) * (I16 * I16 - I32a / pow23(60, 44));
    const Rational I40a =
        apply_contravariant_to_covariant(C404, gf_mul(gf_mul(C111a, C111a), C142))
            .value();
    const Rational I40 = Rational(-1, 100) * I8 * I32 -
                         Rational(1, 50) * I16 * I24 -
                         I40a / pow23(72, 53, 25);

    return InvariantChain{std::move(C404), std::move(C44),  std::move(fc),
                          std::move(C62),  std::move(C1002), std::move(C111a),
                          std::move(C142), InvariantVector{I8, I16, I24, I32, I40, {}}};
}

} // namespace detail

/// Runs the differential-pairing chain on a nonzero quaternary cubic.
///
/// Chain layout (degree, order / dual order):
///   C_{6,2}    = C_{4,0,4} |- f^2          C_{9,3}    = C_{4,0,4} |- (f H)
///   C_{10,0,2} = C_{6,2} |- C_{4,0,4}      C_{11,1a}  = C_{10,0,2} |- f
///   C_{13,0,1} = C_{9,3} |- C_{4,0,4}      C_{14,2}   = C_{10,0,2} |- C_{4,4}
///   C_{14,2a}  = C_{13,0,1} |- f           C_{19,1a}  = C_{13,0,1} |- C_{6,2}
/// followed by exact rational combinations with fixed 2^a 3^b 5^c constants.
inline PipelineResult run_pipeline(const SparsePoly& f,
                                   std::uint64_t point_seed = kDefaultPointSeed) {
    detail::InvariantChain chain = detail::invariant_chain(f, point_seed);
    const GradedForm& C404 = chain.C404;
    const GradedForm& C44 = chain.C44;
    const GradedForm& fc = chain.fc;
    const GradedForm& C62 = chain.C62;
    const GradedForm& C111a = chain.C111a;
    const GradedForm& C142 = chain.C142;
    const Rational& I8 = chain.inv.I8;
    const Rational& I16 = chain.inv.I16;
    const Rational& I24 = chain.inv.I24;

    const GradedForm C93 = apply_contravariant_to_covariant(C404, gf_mul(fc, C44));
    const GradedForm C1301 = apply_covariant_to_contravariant(C93, C404);
    const GradedForm C142a = apply_contravariant_to_covariant(C1301, fc);
    const GradedForm C191a = apply_contravariant_to_covariant(C1301, C62);

    const GradedForm C11 = gf_scale(C111a, Rational(1) / pow23(20, 15));
    const GradedForm C19 =
        gf_scale(gf_add(C191a, gf_scale(gf_scale_by_invariant(C11, I8, 8, 6), pow23(32, 24))),
                 Rational(1) / pow23(33, 24, 5));
    const GradedForm C271a = gf_scale(apply_contravariant_to_covariant(C1301, C142a),
                                      Rational(1) / pow23(42, 33));
    const GradedForm C27 = gf_add(
        gf_scale_by_invariant(C11, I16, 16, 12),
        gf_scale(gf_add(gf_add(C271a, gf_scale_by_invariant(C11, Rational(-2) * I8 * I8, 16, 12)),
                        gf_scale_by_invariant(C19, Rational(-10) * I8, 8, 6)),
                 Rational(1, 200)));
    const GradedForm C431a = gf_scale(
        apply_contravariant_to_covariant(
            C1301, apply_contravariant_to_covariant(
                       C1301, apply_contravariant_to_covariant(C1301, C44))),
        Rational(1) / pow23(68, 53));
    GradedForm C43 = gf_scale(C431a, Rational(-1, 1000));
    C43 = gf_add(C43, gf_scale_by_invariant(C27, Rational(-1, 200) * I8 * I8, 16, 12));
    C43 = gf_add(C43, gf_scale_by_invariant(C27, I16, 16, 12));
    C43 = gf_add(C43, gf_scale_by_invariant(C19, Rational(1, 1000) * I8.pow(3), 24, 18));
    C43 = gf_add(C43, gf_scale_by_invariant(C19, Rational(-1, 10) * I8 * I16, 24, 18));
    C43 = gf_add(C43, gf_scale_by_invariant(C19, -I24, 24, 18));
    C43 = gf_add(C43, gf_scale_by_invariant(C11, Rational(1, 200) * I8 * I8 * I16, 32, 24));
    C43 = gf_add(C43, gf_scale_by_invariant(C11, Rational(3, 20) * I8 * I24, 32, 24));

    RatMatrix cov(4, 4);
    const GradedForm* rows[4] = {&C11, &C19, &C27, &C43};
    for (std::size_t r = 0; r < 4; ++r) {
        auto coeffs = linear_coefficients(*rows[r]);
        for (std::size_t c = 0; c < 4; ++c) cov.at(r, c) = coeffs[c];
    }
    const Rational i100 = cov.determinant();

    InvariantVector inv = chain.inv;
    inv.I100 = i100;
    return PipelineResult{std::move(chain.C404), std::move(chain.C44), std::move(inv),
                          LinearCovariants{C11, C19, C27, C43}, i100};
}

/// The five generating invariants (no determinant invariant). Skips the
/// covariant tail of the chain, so it is noticeably cheaper than a full run.
inline InvariantVector clebsch_salmon_invariants(const SparsePoly& f,
                                                 std::uint64_t point_seed = kDefaultPointSeed) {
    return detail::invariant_chain(f, point_seed).inv;
}

inline LinearCovariants linear_covariants(const SparsePoly& f,
                                          std::uint64_t point_seed = kDefaultPointSeed) {
    return run_pipeline(f, point_seed).covariants;
}

/// The invariants together with both transfers and the dual surface; the
/// unit of work the timing harness runs per surface.
struct FullEvaluation {
    InvariantVector invariants;
    GradedForm s_tilde, t_tilde, dual;
};

inline FullEvaluation evaluate_full(const SparsePoly& f,
                                    std::uint64_t point_seed = kDefaultPointSeed) {
    detail::InvariantChain chain = detail::invariant_chain(f, point_seed);
    GradedForm t = t_tilde(f, point_seed);
    GradedForm d = dual_surface(chain.C404, t);
    return FullEvaluation{std::move(chain.inv), std::move(chain.C404), std::move(t),
                          std::move(d)};
}

/// Determinant of the 4x4 matrix whose rows are the linear covariants in
/// degree order (11, 19, 27, 43) and whose columns are the coefficients of
/// (x, y, z, w). Row or column permutations would flip the sign; this layout
/// is the fixed convention.
inline Rational invariant_I100(const SparsePoly& f,
                               std::uint64_t point_seed = kDefaultPointSeed) {
    return run_pipeline(f, point_seed).i100;
}

/// A smooth surface carries a non-trivial automorphism group (equivalently,
/// an Eckardt point) exactly when the determinant invariant vanishes.
inline bool has_automorphism_certificate(const SparsePoly& f,
                                         std::uint64_t point_seed = kDefaultPointSeed) {
    return invariant_I100(f, point_seed).is_zero();
}

enum class Verdict { equivalent, not_equivalent, indeterminate };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::equivalent: return "equivalent";
        case Verdict::not_equivalent: return "not-equivalent";
        default: return "indeterminate";
    }
}

/// Decides whether two invariant vectors define the same point of the
/// weighted projective space with (reduced) weights (1, 2, 3, 4, 5).
///
/// Zero patterns must match. When I8 is nonzero the scale is forced by the
/// weight-1 coordinate and every other coordinate is checked exactly. When
/// I8 vanishes, only the pairwise cross-power proportionality test is
/// available; it is necessary but can miss a root-of-unity obstruction, so a
/// pass without a forced scale reports indeterminate rather than guessing.
inline Verdict compare_invariant_vectors(const InvariantVector& a,
                                         const InvariantVector& b) {
    const std::array<const Rational*, 5> u = a.primary();
    const std::array<const Rational*, 5> v = b.primary();
    constexpr std::array<unsigned, 5> weights{1, 2, 3, 4, 5};

    for (std::size_t i = 0; i < 5; ++i)
        if (u[i]->is_zero() != v[i]->is_zero()) return Verdict::not_equivalent;

    if (!u[0]->is_zero()) {
        const Rational mu = *v[0] / *u[0];
        for (std::size_t i = 1; i < 5; ++i)
            if (*v[i] != mu.pow(weights[i]) * *u[i]) return Verdict::not_equivalent;
        return Verdict::equivalent;
    }

    for (std::size_t i = 0; i < 5; ++i) {
        if (u[i]->is_zero()) continue;
        for (std::size_t j = i + 1; j < 5; ++j) {
            if (u[j]->is_zero()) continue;
            const Rational lhs = v[i]->pow(weights[j]) * u[j]->pow(weights[i]);
            const Rational rhs = v[j]->pow(weights[i]) * u[i]->pow(weights[j]);
            if (lhs != rhs) return Verdict::not_equivalent;
        }
    }
    return Verdict::indeterminate;
}

inline Verdict equivalent_over_closure(const SparsePoly& f, const SparsePoly& g) {
    validate_cubic_surface(f);
    validate_cubic_surface(g);
    return compare_invariant_vectors(clebsch_salmon_invariants(f),
                                     clebsch_salmon_invariants(g));
}

} // namespace cubinv

#endif
