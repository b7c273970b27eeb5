#include <catch2/catch_amalgamated.hpp>

#include "cubinv/actions.hpp"
#include "cubinv/differential.hpp"
#include "cubinv/parser.hpp"
#include "cubinv/selfcheck.hpp"

using namespace cubinv;

namespace {

GradedForm cov(const char* text, int degree, int order, int weight) {
    return make_covariant(parse_form(text, primal_quaternary()), degree, order, weight);
}

GradedForm con(const char* text, int degree, int order, int weight) {
    return make_contravariant(parse_form(text, dual_quaternary()), degree, order, weight);
}

} // namespace

TEST_CASE("dual monomials act as plain derivative operators") {
    // y1^2 applied to x^2 is d^2/dx^2 (x^2) = 2, no factorial normalization
    GradedForm r = apply_contravariant_to_covariant(con("y1^2", 1, 2, 1), cov("x^2", 1, 2, 1));
    CHECK(r.order == 0);
    CHECK(r.value() == Rational(2));

    // y1^3 on x^3 gives 3! = 6
    CHECK(apply_contravariant_to_covariant(con("y1^3", 1, 3, 1), cov("x^3", 1, 3, 1)).value() ==
          Rational(6));

    // mixed: y1*y2 on x*y gives 1
    CHECK(apply_contravariant_to_covariant(con("y1*y2", 1, 2, 1), cov("x*y", 1, 2, 1)).value() ==
          Rational(1));

    // partial application leaves a form of the order difference
    GradedForm partial =
        apply_contravariant_to_covariant(con("y1", 1, 1, 1), cov("x^3 + x*z^2", 1, 3, 1));
    CHECK(partial.order == 2);
    CHECK(partial.poly.str() == "3*x^2 + z^2");
}

TEST_CASE("pairing works in both directions") {
    // x1 x2 acting on the dual side: d^2/dy1 dy2 (y1 y2) = 1
    GradedForm r = apply_covariant_to_contravariant(cov("x*y", 1, 2, 1), con("y1*y2", 1, 2, 1));
    CHECK(r.space == FormSpace::dual);
    CHECK(r.value() == Rational(1));

    GradedForm partial =
        apply_covariant_to_contravariant(cov("x", 1, 1, 0), con("y1^2*y4", 2, 3, 2));
    CHECK(partial.order == 2);
    CHECK(partial.space == FormSpace::dual);
    CHECK(partial.poly.str() == "2*y1*y4");
}

TEST_CASE("pairing metadata: degrees and weights add, orders subtract") {
    GradedForm r = apply_contravariant_to_covariant(con("y1*y2", 3, 2, 4), cov("x^2*y", 5, 3, 2));
    CHECK(r.degree == 8);
    CHECK(r.order == 1);
    CHECK(r.weight == 6);
    CHECK(r.space == FormSpace::primal);
}

TEST_CASE("pairing rejects bad operands") {
    CHECK_THROWS_AS(
        apply_contravariant_to_covariant(con("y1^3", 1, 3, 1), cov("x^2", 1, 2, 1)),
        order_mismatch);
    CHECK_THROWS_AS(
        apply_contravariant_to_covariant(cov("x", 1, 1, 1), cov("x^2", 1, 2, 1)),
        space_mismatch);
    CHECK_THROWS_AS(
        apply_covariant_to_contravariant(con("y1", 1, 1, 1), con("y1^2", 1, 2, 1)),
        space_mismatch);
}

TEST_CASE("contraction of equal orders is the apolar pairing") {
    // <sum a_e X^e, sum b_e Y^e> = sum a_e b_e e! with plain substitution
    GradedForm a = cov("x*y*z*w", 1, 4, 0);
    GradedForm b = con("y1*y2*y3*y4", 1, 4, 0);
    CHECK(apply_contravariant_to_covariant(b, a).value() == Rational(1));
    CHECK(apply_covariant_to_contravariant(a, b).value() == Rational(1));
}

TEST_CASE("Hessian of the Fermat cubic") {
    SparsePoly f = parse_cubic_surface("x^3+y^3+z^3+w^3");
    GradedForm h = hessian(f);
    CHECK(h.poly.str() == "1296*x*y*z*w");
    CHECK(h.degree == 4);
    CHECK(h.order == 4);
    CHECK(h.weight == 2);
    CHECK(h.space == FormSpace::primal);
}

TEST_CASE("Hessian equivariance with determinant weight two") {
    Prng rng(4001);
    SpacePtr s = primal_quaternary();
    for (int trial = 0; trial < 3; ++trial) {
        SparsePoly f = random_form(rng, s, 3, -6, 6);
        if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 3) continue;
        RatMatrix m = random_invertible_matrix(rng, 4, -4, 4);
        const Rational det = m.determinant();
        GradedForm lhs = hessian(act_primal(m, f));
        SparsePoly rhs = act_primal(m, hessian(f).poly).scaled(det * det);
        CHECK((lhs.poly - rhs).is_zero());
    }
}

TEST_CASE("Hessian rejects non-cubic input") {
    CHECK_THROWS_AS(hessian(parse_form("x^2 + y^2", primal_quaternary())), invalid_form);
    CHECK_THROWS_AS(hessian(parse_form("u1^3", ternary())), invalid_form);
}

TEST_CASE("a cubic viewed as its own covariant") {
    SparsePoly f = parse_cubic_surface("x^3 + 2*y^2*z");
    GradedForm c = form_as_covariant(f);
    CHECK(c.degree == 1);
    CHECK(c.order == 3);
    CHECK(c.weight == 0);
    CHECK((c.poly - f).is_zero());
}

TEST_CASE("value() requires order zero") {
    CHECK_THROWS_AS(cov("x^2", 1, 2, 1).value(), error);
}
