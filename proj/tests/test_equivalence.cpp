#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "cubinv/actions.hpp"
#include "cubinv/parser.hpp"
#include "cubinv/pentahedral.hpp"
#include "cubinv/pipeline.hpp"

using namespace cubinv;

namespace {

InvariantVector vec(long i8, long i16, long i24, long i32, long i40) {
    InvariantVector v;
    v.I8 = Rational(i8);
    v.I16 = Rational(i16);
    v.I24 = Rational(i24);
    v.I32 = Rational(i32);
    v.I40 = Rational(i40);
    return v;
}

} // namespace

TEST_CASE("vector comparison under the weighted scaling") {
    CHECK(compare_invariant_vectors(vec(1, 1, 1, 1, 1), vec(1, 1, 1, 1, 1)) ==
          Verdict::equivalent);

    // mu = 2 acting with reduced weights (1, 2, 3, 4, 5)
    CHECK(compare_invariant_vectors(vec(1, 1, 1, 1, 1), vec(2, 4, 8, 16, 32)) ==
          Verdict::equivalent);

    // a negative scale is just as valid
    CHECK(compare_invariant_vectors(vec(3, 5, -7, 11, 2), vec(-6, 20, 56, 176, -64)) ==
          Verdict::equivalent);

    CHECK(compare_invariant_vectors(vec(1, 1, 1, 1, 1), vec(2, 4, 8, 16, 31)) ==
          Verdict::not_equivalent);
    CHECK(compare_invariant_vectors(vec(1, 0, 1, 1, 1), vec(1, 1, 1, 1, 1)) ==
          Verdict::not_equivalent);
}

TEST_CASE("vanishing first coordinate leaves the scale unpinned") {
    // consistent cross powers, but no weight-1 coordinate to force mu
    CHECK(compare_invariant_vectors(vec(0, 1, 1, 1, 1), vec(0, 4, 8, 16, 32)) ==
          Verdict::indeterminate);
    CHECK(compare_invariant_vectors(vec(0, 1, 1, 1, 1), vec(0, 4, 8, 16, 33)) ==
          Verdict::not_equivalent);
    CHECK(compare_invariant_vectors(vec(0, 0, 0, 0, 0), vec(0, 0, 0, 0, 0)) ==
          Verdict::indeterminate);
}

TEST_CASE("verdict names") {
    CHECK(std::string(verdict_name(Verdict::equivalent)) == "equivalent");
    CHECK(std::string(verdict_name(Verdict::not_equivalent)) == "not-equivalent");
    CHECK(std::string(verdict_name(Verdict::indeterminate)) == "indeterminate");
}

TEST_CASE("a form is equivalent to its rescalings and substitutions") {
    SparsePoly f = expand_pentahedral(
        PentahedralCoeffs{{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)}});
    CHECK(equivalent_over_closure(f, f) == Verdict::equivalent);
    CHECK(equivalent_over_closure(f, f.scaled(Rational(3))) == Verdict::equivalent);
    CHECK(equivalent_over_closure(f, f.scaled(Rational(-1, 2))) == Verdict::equivalent);

    RatMatrix m(4, 4);
    const long entries[4][4] = {{1, 2, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {2, 0, 0, 1}};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = Rational(entries[r][c]);
    REQUIRE(!m.determinant().is_zero());
    CHECK(equivalent_over_closure(f, act_primal(m, f)) == Verdict::equivalent);
}

TEST_CASE("distinct surfaces are told apart") {
    SparsePoly fermat = parse_cubic_surface("x^3+y^3+z^3+w^3");
    SparsePoly clebsch = expand_pentahedral(
        PentahedralCoeffs{{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)}});
    CHECK(equivalent_over_closure(fermat, clebsch) == Verdict::not_equivalent);
}

TEST_CASE("comparison validates its inputs") {
    SparsePoly f = parse_cubic_surface("x^3+y^3+z^3+w^3");
    CHECK_THROWS_AS(equivalent_over_closure(SparsePoly::zero(primal_quaternary()), f),
                    zero_form);
    CHECK_THROWS_AS(equivalent_over_closure(f, parse_form("x^3 + x^2", primal_quaternary())),
                    invalid_form);
}
