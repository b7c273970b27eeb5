#include <catch2/catch_amalgamated.hpp>

#include "cubinv/polynomial.hpp"
#include "cubinv/varspace.hpp"

using namespace cubinv;

namespace {

SparsePoly var(const SpacePtr& s, std::size_t i) { return SparsePoly::variable(s, i); }

} // namespace

TEST_CASE("terms print in graded lexicographic order, highest first") {
    SpacePtr s = primal_quaternary();
    SparsePoly f(s);
    f.add_term({0, 0, 0, 1}, Rational(5));
    f.add_term({3, 0, 0, 0}, Rational(1));
    f.add_term({1, 1, 0, 0}, Rational(-2));
    CHECK(f.str() == "x^3 - 2*x*y + 5*w");
}

TEST_CASE("addition cancels exactly") {
    SpacePtr s = primal_quaternary();
    SparsePoly x3 = var(s, 0).pow(3);
    SparsePoly f = x3 + var(s, 1).pow(3);
    SparsePoly g = f - x3;
    CHECK(g.str() == "y^3");
    CHECK((g - var(s, 1).pow(3)).is_zero());
    CHECK((f - f).str() == "0");
}

TEST_CASE("multiplication expands the cube of a sum") {
    SpacePtr s = primal_quaternary();
    SparsePoly sum = var(s, 0) + var(s, 1);
    SparsePoly cube = sum.pow(3);
    CHECK(cube.str() == "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
    CHECK(cube.total_degree() == 3);
    CHECK(cube.is_homogeneous());
}

TEST_CASE("scaling by zero clears the polynomial") {
    SpacePtr s = ternary();
    SparsePoly f = var(s, 0) * var(s, 1) * var(s, 2);
    CHECK(f.scaled(Rational(0)).is_zero());
    CHECK(f.scaled(Rational(-1, 3)).str() == "-1/3*u1*u2*u3");
}

TEST_CASE("derivatives follow the power rule") {
    SpacePtr s = primal_quaternary();
    SparsePoly f = var(s, 0).pow(3) + var(s, 0) * var(s, 1).scaled(Rational(2));
    CHECK(f.derivative(0).str() == "3*x^2 + 2*y");
    CHECK(f.derivative(2).is_zero());
    CHECK(f.derivative(0).derivative(0).str() == "6*x");
}

TEST_CASE("evaluation is exact substitution") {
    SpacePtr s = primal_quaternary();
    SparsePoly f = var(s, 0).pow(3) + var(s, 1).pow(3);
    std::vector<Rational> p{Rational(1, 2), Rational(-1), Rational(0), Rational(0)};
    CHECK(f.evaluate(p) == Rational(-7, 8));
}

TEST_CASE("substitution maps into another space") {
    SpacePtr s3 = ternary();
    SpacePtr s4 = primal_quaternary();
    SparsePoly f = var(s3, 0).pow(2) + var(s3, 1) * var(s3, 2);
    // u1 -> x + y, u2 -> z, u3 -> w
    std::vector<SparsePoly> images{var(s4, 0) + var(s4, 1), var(s4, 2), var(s4, 3)};
    SparsePoly g = f.substituted(s4, images);
    CHECK(g.str() == "x^2 + 2*x*y + y^2 + z*w");
    CHECK(same_space(g.space(), s4));
}

TEST_CASE("homogeneity detection") {
    SpacePtr s = primal_quaternary();
    CHECK(var(s, 0).pow(3).is_homogeneous());
    CHECK_FALSE((var(s, 0).pow(3) + var(s, 0).pow(2)).is_homogeneous());
    CHECK(SparsePoly::zero(s).is_homogeneous());
}

TEST_CASE("constant extraction accepts constants only") {
    SpacePtr s = ternary();
    CHECK(SparsePoly::constant(s, Rational(7, 3)).constant_value() == Rational(7, 3));
    CHECK(SparsePoly::zero(s).constant_value() == Rational(0));
    CHECK_THROWS_AS(var(s, 0).constant_value(), error);
}

TEST_CASE("coefficient lookup") {
    SpacePtr s = primal_quaternary();
    SparsePoly f = var(s, 0).pow(2) * var(s, 1).scaled(Rational(5, 2));
    CHECK(f.coefficient({2, 1, 0, 0}) == Rational(5, 2));
    CHECK(f.coefficient({1, 2, 0, 0}) == Rational(0));
}

TEST_CASE("monomial basis sizes and order") {
    const auto cubic4 = monomial_basis(4, 3);
    CHECK(cubic4.size() == 20);
    CHECK(cubic4.front() == Exponents{3, 0, 0, 0});
    CHECK(cubic4.back() == Exponents{0, 0, 0, 3});

    const auto cubic3 = monomial_basis(3, 3);
    CHECK(cubic3.size() == 10);

    const auto quartic3 = monomial_basis(3, 4);
    CHECK(quartic3.size() == 15);
}

TEST_CASE("mixed-space arithmetic is rejected") {
    SparsePoly a = var(primal_quaternary(), 0);
    SparsePoly b = var(dual_quaternary(), 0);
    CHECK_THROWS_AS(a + b, space_mismatch);
    CHECK_THROWS_AS(a * b, space_mismatch);
}
