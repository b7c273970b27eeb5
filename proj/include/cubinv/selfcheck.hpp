#ifndef CUBINV_SELFCHECK_HPP
#define CUBINV_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "actions.hpp"
#include "matrix.hpp"
#include "pentahedral.hpp"
#include "pipeline.hpp"
#include "polynomial.hpp"
#include "prng.hpp"
#include "transfer.hpp"

namespace cubinv {

/// Frozen determinant exponents of the transformation laws, validated by the
/// equivariance suite on every run: I_D scales by det(M)^(3D/4), the linear
/// covariants carry weights (8, 14, 20, 32), the transfers (4, 6).
struct FrozenWeights {
    static constexpr int I8 = 6, I16 = 12, I24 = 18, I32 = 24, I40 = 30, I100 = 75;
    static constexpr int hessian = 2;
    static constexpr int s_tilde = 4, t_tilde = 6;
    static constexpr int C11 = 8, C19 = 14, C27 = 20, C43 = 32;
};

/// Random nonzero form with integer coefficients in [lo, hi].
inline SparsePoly random_form(Prng& rng, const SpacePtr& space, std::int32_t degree,
                              long lo, long hi) {
    for (;;) {
        SparsePoly f(space);
        for (const Exponents& e : monomial_basis(space->arity(), degree)) {
            long c = rng.uniform_int(lo, hi);
            if (c != 0) f.add_term(e, Rational(c));
        }
        if (!f.is_zero()) return f;
    }
}

/// Random integer matrix with nonzero determinant, entries in [lo, hi].
inline RatMatrix random_invertible_matrix(Prng& rng, std::size_t n, long lo, long hi) {
    for (;;) {
        RatMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = Rational(rng.uniform_int(lo, hi));
        if (!m.determinant().is_zero()) return m;
    }
}

struct EquivarianceConfig {
    int invariant_forms = 10;
    int invariant_matrices = 10;
    int covariant_pairs = 3;  // full pipeline including I100
    int s_tilde_pairs = 3;
    int t_tilde_pairs = 2;
};

struct EquivarianceReport {
    int checks = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Verifies every transformation law with the frozen exponents on seeded
/// random (form, matrix) pairs, exactly.
inline EquivarianceReport equivariance_suite(const EquivarianceConfig& cfg,
                                             std::uint64_t seed) {
    EquivarianceReport report;
    Prng rng(seed);
    const SpacePtr primal = primal_quaternary();

    auto check = [&](bool ok, const std::string& what) {
        ++report.checks;
        if (!ok) report.failures.push_back(what);
    };

    // invariant laws on the full pair grid
    for (int fi = 0; fi < cfg.invariant_forms; ++fi) {
        const SparsePoly f = random_form(rng, primal, 3, -9, 9);
        const InvariantVector base = clebsch_salmon_invariants(f);
        for (int mi = 0; mi < cfg.invariant_matrices; ++mi) {
            const RatMatrix M = random_invertible_matrix(rng, 4, -5, 5);
            const Rational d = M.determinant();
            const InvariantVector moved = clebsch_salmon_invariants(act_primal(M, f));
            const std::string tag =
                " law failed for form " + std::to_string(fi) + ", matrix " + std::to_string(mi);
            check(moved.I8 == d.pow(FrozenWeights::I8) * base.I8, "I8" + tag);
            check(moved.I16 == d.pow(FrozenWeights::I16) * base.I16, "I16" + tag);
            check(moved.I24 == d.pow(FrozenWeights::I24) * base.I24, "I24" + tag);
            check(moved.I32 == d.pow(FrozenWeights::I32) * base.I32, "I32" + tag);
            check(moved.I40 == d.pow(FrozenWeights::I40) * base.I40, "I40" + tag);
        }
    }

    // Hessian and covariant laws, and the determinant invariant, on full
    // pipeline runs
    for (int pi = 0; pi < cfg.covariant_pairs; ++pi) {
        const SparsePoly f = random_form(rng, primal, 3, -9, 9);
        const RatMatrix M = random_invertible_matrix(rng, 4, -5, 5);
        const Rational d = M.determinant();
        const PipelineResult base = run_pipeline(f);
        const PipelineResult moved = run_pipeline(act_primal(M, f));
        const std::string tag = " law failed for pair " + std::to_string(pi);

        check(moved.hessian.poly ==
                  act_primal(M, base.hessian.poly).scaled(d.pow(FrozenWeights::hessian)),
              "hessian" + tag);
        check(moved.covariants.C11.poly ==
                  act_primal(M, base.covariants.C11.poly).scaled(d.pow(FrozenWeights::C11)),
              "C11" + tag);
        check(moved.covariants.C19.poly ==
                  act_primal(M, base.covariants.C19.poly).scaled(d.pow(FrozenWeights::C19)),
              "C19" + tag);
        check(moved.covariants.C27.poly ==
                  act_primal(M, base.covariants.C27.poly).scaled(d.pow(FrozenWeights::C27)),
              "C27" + tag);
        check(moved.covariants.C43.poly ==
                  act_primal(M, base.covariants.C43.poly).scaled(d.pow(FrozenWeights::C43)),
              "C43" + tag);
        check(moved.i100 == d.pow(FrozenWeights::I100) * base.i100, "I100" + tag);
        check(moved.s_tilde.poly ==
                  act_dual(M, base.s_tilde.poly).scaled(d.pow(FrozenWeights::s_tilde)),
              "transfer S" + tag);
    }

    // dual law for the degree-6 transfer (the expensive one, so few pairs)
    for (int pi = 0; pi < cfg.t_tilde_pairs; ++pi) {
        const SparsePoly f = random_form(rng, primal, 3, -9, 9);
        const RatMatrix M = random_invertible_matrix(rng, 4, -5, 5);
        const Rational d = M.determinant();
        const GradedForm base = t_tilde(f);
        const GradedForm moved = t_tilde(act_primal(M, f));
        check(moved.poly == act_dual(M, base.poly).scaled(d.pow(FrozenWeights::t_tilde)),
              "transfer T law failed for pair " + std::to_string(pi));
    }

    // extra standalone pairs for the degree-4 transfer
    for (int pi = 0; pi < cfg.s_tilde_pairs; ++pi) {
        const SparsePoly f = random_form(rng, primal, 3, -9, 9);
        const RatMatrix M = random_invertible_matrix(rng, 4, -5, 5);
        const Rational d = M.determinant();
        check(s_tilde(act_primal(M, f)).poly ==
                  act_dual(M, s_tilde(f).poly).scaled(d.pow(FrozenWeights::s_tilde)),
              "transfer S law failed for standalone pair " + std::to_string(pi));
    }

    return report;
}

struct SelftestReport {
    CrossCheckReport cross;
    EquivarianceReport equivariance;
    bool pass() const { return cross.all_pass && equivariance.pass(); }
};

/// The CLI selftest payload: pentahedral cross-check plus a reduced
/// equivariance sweep.
inline SelftestReport run_selftest(int samples, std::uint64_t seed) {
    SelftestReport r{cross_check(samples, seed), {}};
    EquivarianceConfig cfg;
    cfg.invariant_forms = 2;
    cfg.invariant_matrices = 2;
    cfg.covariant_pairs = 1;
    cfg.s_tilde_pairs = 1;
    cfg.t_tilde_pairs = 1;
    r.equivariance = equivariance_suite(cfg, seed + 1);
    return r;
}

} // namespace cubinv

#endif
