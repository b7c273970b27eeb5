#ifndef CUBINV_PENTAHEDRAL_HPP
#define CUBINV_PENTAHEDRAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "pipeline.hpp"
#include "polynomial.hpp"
#include "prng.hpp"

namespace cubinv {

/// Coefficients of the pentahedral form
///   a0 x^3 + a1 y^3 + a2 z^3 + a3 w^3 + a4 (-x-y-z-w)^3.
struct PentahedralCoeffs {
    std::array<Rational, 5> a;

    /// Elementary symmetric functions sigma_1..sigma_5 of a0..a4.
    std::array<Rational, 5> sigma() const {
        std::array<Rational, 5> e{Rational(0), Rational(0), Rational(0), Rational(0),
                                  Rational(0)};
        // e_k built incrementally: multiplying in (1 + a_i t)
        for (const Rational& ai : a)
            for (std::size_t k = 6; k-- > 1;) e[k - 1] += (k >= 2 ? e[k - 2] : Rational(1)) * ai;
        return e;
    }

    bool all_nonzero() const {
        for (const auto& ai : a)
            if (ai.is_zero()) return false;
        return true;
    }
};

/// Expands the pentahedral data to a quaternary cubic in x, y, z, w.
inline SparsePoly expand_pentahedral(const PentahedralCoeffs& p) {
    SpacePtr space = primal_quaternary();
    SparsePoly f(space);
    for (std::size_t i = 0; i < 4; ++i) {
        Exponents e(4, 0);
        e[i] = 3;
        f.add_term(e, p.a[i]);
    }
    if (!p.a[4].is_zero()) {
        SparsePoly s(space);
        for (std::size_t i = 0; i < 4; ++i) {
            Exponents e(4, 0);
            e[i] = 1;
            s.add_term(e, Rational(-1));
        }
        f += s.pow(3).scaled(p.a[4]);
    }
    if (f.is_zero()) throw zero_form("all pentahedral coefficients are zero");
    return f;
}

/// Closed formulas for the five invariants:
///   I8 = s4^2 - 4 s3 s5, I16 = s1 s5^3, I24 = s4 s5^4,
///   I32 = s2 s5^6, I40 = s5^8.
inline InvariantVector salmon_invariants(const PentahedralCoeffs& p) {
    const auto s = p.sigma();
    InvariantVector v;
    v.I8 = s[3] * s[3] - Rational(4) * s[2] * s[4];
    v.I16 = s[0] * s[4].pow(3);
    v.I24 = s[3] * s[4].pow(4);
    v.I32 = s[1] * s[4].pow(6);
    v.I40 = s[4].pow(8);
    return v;
}

namespace detail {

/// The five linear forms (x, y, z, w, -x-y-z-w) as coefficient rows.
inline std::array<std::array<Rational, 4>, 5> pentahedral_linear_forms() {
    std::array<std::array<Rational, 4>, 5> l{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t c = 0; c < 4; ++c) l[i][c] = Rational(c == i ? 1 : 0);
        l[4][i] = Rational(-1);
    }
    return l;
}

inline GradedForm weighted_linear_form(const PentahedralCoeffs& p,
                                       const std::function<Rational(const Rational&)>& weight_of,
                                       const Rational& prefactor, int degree, int wt) {
    const auto l = pentahedral_linear_forms();
    SparsePoly form(primal_quaternary());
    for (std::size_t i = 0; i < 5; ++i) {
        const Rational wi = weight_of(p.a[i]) * prefactor;
        for (std::size_t c = 0; c < 4; ++c) {
            if (l[i][c].is_zero()) continue;
            Exponents e(4, 0);
            e[c] = 1;
            form.add_term(e, wi * l[i][c]);
        }
    }
    return make_covariant(std::move(form), degree, 1, wt);
}

} // namespace detail

/// Salmon's four linear covariants on the pentahedral family:
///   L11 = s5^2 sum a_i l_i,  L19 = s5^4 sum (1/a_i) l_i,
///   L27 = s5^5 sum a_i^2 l_i,  L43 = s5^8 sum a_i^3 l_i,
/// with l = (x, y, z, w, -x-y-z-w). L19 needs every a_i nonzero.
inline LinearCovariants salmon_linear_covariants(const PentahedralCoeffs& p) {
    if (!p.all_nonzero())
        throw oracle_domain_error(
            "a pentahedral coefficient is zero; the degree-19 covariant divides by it");
    const auto s = p.sigma();
    const Rational s5 = s[4];
    return LinearCovariants{
        detail::weighted_linear_form(p, [](const Rational& a) { return a; }, s5.pow(2), 11, 8),
        detail::weighted_linear_form(p, [](const Rational& a) { return Rational(1) / a; },
                                     s5.pow(4), 19, 14),
        detail::weighted_linear_form(p, [](const Rational& a) { return a * a; }, s5.pow(5), 27,
                                     20),
        detail::weighted_linear_form(p, [](const Rational& a) { return a.pow(3); }, s5.pow(8),
                                     43, 32),
    };
}

/// Determinant of Salmon's covariant coefficient matrix, rows in degree
/// order, columns in variable order; the oracle-side value of I100.
inline Rational salmon_I100(const PentahedralCoeffs& p) {
    const LinearCovariants cov = salmon_linear_covariants(p);
    RatMatrix m(4, 4);
    const GradedForm* rows[4] = {&cov.C11, &cov.C19, &cov.C27, &cov.C43};
    for (std::size_t r = 0; r < 4; ++r) {
        auto coeffs = linear_coefficients(*rows[r]);
        for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = coeffs[c];
    }
    return m.determinant();
}

/// Minimal interface the cross-check needs from a pipeline: the six
/// invariants and the covariant coefficient rows. Injectable so a harness
/// sensitivity test can feed a deliberately perturbed pipeline.
struct PipelineOutputs {
    InvariantVector invariants;
    std::array<std::array<Rational, 4>, 4> covariant_rows;
};

using PipelineFn = std::function<PipelineOutputs(const SparsePoly&)>;

inline PipelineOutputs default_pipeline_outputs(const SparsePoly& f) {
    PipelineResult r = run_pipeline(f);
    PipelineOutputs out;
    out.invariants = r.invariants;
    const GradedForm* rows[4] = {&r.covariants.C11, &r.covariants.C19, &r.covariants.C27,
                                 &r.covariants.C43};
    for (std::size_t i = 0; i < 4; ++i) out.covariant_rows[i] = linear_coefficients(*rows[i]);
    return out;
}

struct CrossCheckSample {
    PentahedralCoeffs coeffs;
    bool invariants_match = false;
    bool covariants_match = false;
    bool i100_match = false;
    bool pass() const { return invariants_match && covariants_match && i100_match; }
};

struct CrossCheckReport {
    std::vector<CrossCheckSample> samples;
    bool all_pass = true;
    std::size_t passed = 0;
};

/// Replays the defining comparison on the pentahedral family: expands each
/// sample, runs the pipeline, and compares invariants, covariants, and I100
/// to the closed formulas with exact equality. The equal-coefficient sample
/// (1,1,1,1,1) is always included ahead of `sample_count` seeded random
/// samples with nonzero entries in [-99, 99] and sigma5 != 0.
inline CrossCheckReport cross_check(int sample_count, std::uint64_t seed,
                                    const PipelineFn& pipeline = default_pipeline_outputs) {
    std::vector<PentahedralCoeffs> samples;
    samples.push_back(PentahedralCoeffs{{Rational(1), Rational(1), Rational(1), Rational(1),
                                         Rational(1)}});
    Prng rng(seed);
    while (samples.size() < static_cast<std::size_t>(sample_count) + 1) {
        PentahedralCoeffs p;
        for (auto& ai : p.a) ai = Rational(rng.nonzero_int(-99, 99));
        if (p.sigma()[4].is_zero()) continue;
        samples.push_back(p);
    }

    CrossCheckReport report;
    for (const PentahedralCoeffs& p : samples) {
        CrossCheckSample row;
        row.coeffs = p;

        const SparsePoly f = expand_pentahedral(p);
        const PipelineOutputs got = pipeline(f);
        const InvariantVector want = salmon_invariants(p);
        const LinearCovariants want_cov = salmon_linear_covariants(p);

        row.invariants_match = got.invariants.I8 == want.I8 &&
                               got.invariants.I16 == want.I16 &&
                               got.invariants.I24 == want.I24 &&
                               got.invariants.I32 == want.I32 &&
                               got.invariants.I40 == want.I40;

        const GradedForm* wrows[4] = {&want_cov.C11, &want_cov.C19, &want_cov.C27,
                                      &want_cov.C43};
        row.covariants_match = true;
        for (std::size_t r = 0; r < 4; ++r) {
            const auto want_row = linear_coefficients(*wrows[r]);
            for (std::size_t c = 0; c < 4; ++c)
                if (got.covariant_rows[r][c] != want_row[c]) row.covariants_match = false;
        }

        RatMatrix m(4, 4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = got.covariant_rows[r][c];
        row.i100_match = got.invariants.I100.has_value() &&
                         *got.invariants.I100 == salmon_I100(p) &&
                         *got.invariants.I100 == m.determinant();

        report.all_pass = report.all_pass && row.pass();
        if (row.pass()) ++report.passed;
        report.samples.push_back(std::move(row));
    }
    return report;
}

} // namespace cubinv

#endif
