#include <catch2/catch_amalgamated.hpp>

#include "cubinv/actions.hpp"
#include "cubinv/parser.hpp"
#include "cubinv/prng.hpp"
#include "cubinv/selfcheck.hpp"

using namespace cubinv;

namespace {

RatMatrix rand_gl4(Prng& rng) { return random_invertible_matrix(rng, 4, -5, 5); }

} // namespace

TEST_CASE("the identity acts trivially") {
    SparsePoly f = parse_cubic_surface("x^3 + 2*x*y*z - w^3");
    CHECK((act_primal(RatMatrix::identity(4), f) - f).is_zero());
    CHECK((act_dual(RatMatrix::identity(4), parse_form("y1^2*y2", dual_quaternary())) -
           parse_form("y1^2*y2", dual_quaternary()))
              .is_zero());
}

TEST_CASE("diagonal substitution rescales monomials") {
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m.at(i, i) = Rational(static_cast<long>(i) + 1);
    SparsePoly f = parse_cubic_surface("x^3 + x*y*z + w^3");
    SparsePoly g = act_primal(m, f);
    CHECK(g.coefficient({3, 0, 0, 0}) == Rational(1));
    CHECK(g.coefficient({1, 1, 1, 0}) == Rational(6));
    CHECK(g.coefficient({0, 0, 0, 3}) == Rational(64));
}

TEST_CASE("a permutation matrix permutes the variables") {
    // cycle x -> y -> z -> x, w fixed: variable j maps to sum_i M(i,j) v_i
    RatMatrix m(4, 4);
    m.at(1, 0) = Rational(1);
    m.at(2, 1) = Rational(1);
    m.at(0, 2) = Rational(1);
    m.at(3, 3) = Rational(1);
    SparsePoly f = parse_cubic_surface("x^2*y + w^3");
    SparsePoly g = act_primal(m, f);
    CHECK((g - parse_cubic_surface("y^2*z + w^3")).is_zero());
}

TEST_CASE("substitution action is multiplicative in the matrix") {
    Prng rng(555);
    SpacePtr s = primal_quaternary();
    for (int trial = 0; trial < 8; ++trial) {
        SparsePoly f = random_form(rng, s, 3, -9, 9);
        RatMatrix m1 = rand_gl4(rng);
        RatMatrix m2 = rand_gl4(rng);
        SparsePoly lhs = act_primal(m1, act_primal(m2, f));
        SparsePoly rhs = act_primal(m1 * m2, f);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("dual action composes and inverts cleanly") {
    Prng rng(556);
    for (int trial = 0; trial < 5; ++trial) {
        RatMatrix m1 = rand_gl4(rng);
        RatMatrix m2 = rand_gl4(rng);
        SparsePoly g = random_form(rng, dual_quaternary(), 2, -9, 9);

        SparsePoly back = act_dual(m1.inverse(), act_dual(m1, g));
        CHECK((back - g).is_zero());

        SparsePoly lhs = act_dual(m1, act_dual(m2, g));
        SparsePoly rhs = act_dual(m1 * m2, g);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("singular matrices are rejected") {
    RatMatrix zero(4, 4);
    SparsePoly f = parse_cubic_surface("x^3 + y^3 + z^3 + w^3");
    CHECK_THROWS_AS(act_primal(zero, f), singular_matrix);
    CHECK_THROWS_AS(act_dual(zero, parse_form("y1", dual_quaternary())), singular_matrix);
}
