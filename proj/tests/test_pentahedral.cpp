#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "cubinv/parser.hpp"
#include "cubinv/pentahedral.hpp"

using namespace cubinv;

namespace {

PentahedralCoeffs penta(long a0, long a1, long a2, long a3, long a4) {
    return PentahedralCoeffs{{Rational(a0), Rational(a1), Rational(a2), Rational(a3),
                              Rational(a4)}};
}

} // namespace

TEST_CASE("elementary symmetric functions") {
    const auto s = penta(1, 2, 3, 4, 5).sigma();
    CHECK(s[0] == Rational(15));
    CHECK(s[1] == Rational(85));
    CHECK(s[2] == Rational(225));
    CHECK(s[3] == Rational(274));
    CHECK(s[4] == Rational(120));

    const auto t = penta(0, 0, 0, 0, 7).sigma();
    CHECK(t[0] == Rational(7));
    CHECK(t[4] == Rational(0));
}

TEST_CASE("pentahedral expansion") {
    CHECK((expand_pentahedral(penta(1, 1, 1, 1, 0)) -
           parse_cubic_surface("x^3+y^3+z^3+w^3"))
              .is_zero());

    // the fifth plane enters through (-x-y-z-w)^3
    SparsePoly f = expand_pentahedral(penta(0, 0, 0, 0, 1));
    Exponents xyz{1, 1, 1, 0};
    CHECK(f.coefficient(xyz) == Rational(-6));
    Exponents x3{3, 0, 0, 0};
    CHECK(f.coefficient(x3) == Rational(-1));

    CHECK_THROWS_AS(expand_pentahedral(penta(0, 0, 0, 0, 0)), zero_form);
}

TEST_CASE("closed invariant formulas") {
    const InvariantVector clebsch = salmon_invariants(penta(1, 1, 1, 1, 1));
    CHECK(clebsch.I8 == Rational(-15));
    CHECK(clebsch.I16 == Rational(5));
    CHECK(clebsch.I24 == Rational(5));
    CHECK(clebsch.I32 == Rational(10));
    CHECK(clebsch.I40 == Rational(1));

    const InvariantVector v = salmon_invariants(penta(1, 2, 3, 4, 5));
    CHECK(v.I8 == Rational(-32924));
    CHECK(v.I16 == Rational(25920000));
    CHECK(v.I24 == Rational(56816640000));
    CHECK(v.I32 == Rational(253808640000000));
    CHECK(v.I40 == Rational(42998169600000000));
}

TEST_CASE("invariants are symmetric in the coefficients") {
    const InvariantVector a = salmon_invariants(penta(3, -7, 2, 9, -4));
    const InvariantVector b = salmon_invariants(penta(9, 2, -4, 3, -7));
    CHECK(a.I8 == b.I8);
    CHECK(a.I16 == b.I16);
    CHECK(a.I24 == b.I24);
    CHECK(a.I32 == b.I32);
    CHECK(a.I40 == b.I40);
}

TEST_CASE("covariant formulas on the diagonal surface") {
    const LinearCovariants cov = salmon_linear_covariants(penta(1, 1, 1, 1, 1));
    CHECK(cov.C11.poly.is_zero());
    CHECK(cov.C19.poly.is_zero());
    CHECK(cov.C27.poly.is_zero());
    CHECK(cov.C43.poly.is_zero());
    CHECK(salmon_I100(penta(1, 1, 1, 1, 1)) == Rational(0));
}

TEST_CASE("covariant rows for distinct coefficients") {
    const LinearCovariants cov = salmon_linear_covariants(penta(1, 2, 3, 4, 5));
    const auto c11 = linear_coefficients(cov.C11);
    CHECK(c11[0] == Rational(-57600));
    CHECK(c11[3] == Rational(-14400));
    const auto c19 = linear_coefficients(cov.C19);
    CHECK(c19[0] == Rational(165888000));
    CHECK(c19[3] == Rational(10368000));
    CHECK(cov.C43.degree == 43);
    CHECK(cov.C43.weight == 32);
    CHECK(salmon_I100(penta(1, 2, 3, 4, 5)) ==
          Rational::from_string("7667519984894950244352000000000000000000"));
}

TEST_CASE("degree-19 covariant needs nonzero coefficients") {
    CHECK_THROWS_AS(salmon_linear_covariants(penta(1, 1, 0, 1, 1)), oracle_domain_error);
    CHECK_THROWS_AS(salmon_I100(penta(0, 2, 3, 4, 5)), oracle_domain_error);
}

TEST_CASE("cross check agrees on seeded samples") {
    const CrossCheckReport report = cross_check(2, 91);
    REQUIRE(report.samples.size() == 3);
    for (const Rational& ai : report.samples[0].coeffs.a) CHECK(ai == Rational(1));
    CHECK(report.all_pass);
    CHECK(report.passed == 3);
    for (const auto& row : report.samples) {
        CHECK(row.invariants_match);
        CHECK(row.covariants_match);
        CHECK(row.i100_match);
        CHECK(std::all_of(row.coeffs.a.begin(), row.coeffs.a.end(),
                          [](const Rational& ai) { return !ai.is_zero(); }));
    }
}

TEST_CASE("cross check detects a perturbed pipeline") {
    const PipelineFn bad_invariant = [](const SparsePoly& f) {
        PipelineOutputs out = default_pipeline_outputs(f);
        out.invariants.I8 += Rational(1);
        return out;
    };
    const CrossCheckReport r1 = cross_check(0, 7, bad_invariant);
    CHECK_FALSE(r1.all_pass);
    CHECK(r1.passed == 0);
    CHECK_FALSE(r1.samples[0].invariants_match);
    CHECK(r1.samples[0].covariants_match);

    const PipelineFn bad_covariant = [](const SparsePoly& f) {
        PipelineOutputs out = default_pipeline_outputs(f);
        out.covariant_rows[1][2] += Rational(1, 3);
        return out;
    };
    const CrossCheckReport r2 = cross_check(0, 7, bad_covariant);
    CHECK_FALSE(r2.all_pass);
    CHECK_FALSE(r2.samples[0].covariants_match);
    CHECK(r2.samples[0].invariants_match);
}
