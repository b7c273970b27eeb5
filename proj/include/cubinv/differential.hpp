#ifndef CUBINV_DIFFERENTIAL_HPP
#define CUBINV_DIFFERENTIAL_HPP

#include <array>
#include <vector>

#include "errors.hpp"
#include "graded_form.hpp"
#include "polynomial.hpp"
#include "varspace.hpp"

namespace cubinv {

namespace detail {

/// Core of both pairings: reads the operator polynomial as a constant-
/// coefficient differential operator (variable i of the operator's space
/// becomes d/d(variable i) of the target's space, monomials becoming plain
/// compositions with no extra normalization) and applies it to the target.
inline SparsePoly differentiate_by(const SparsePoly& op, const SparsePoly& target) {
    SparsePoly acc(target.space());
    for (const auto& [exps, c] : op.terms()) {
        SparsePoly t = target;
        for (std::size_t v = 0; v < exps.size() && !t.is_zero(); ++v)
            for (std::int32_t k = 0; k < exps[v]; ++k) t = t.derivative(v);
        acc += t.scaled(c);
    }
    return acc;
}

inline GradedForm pair_forms(const GradedForm& op, const GradedForm& target) {
    if (op.space == target.space)
        throw space_mismatch("pairing requires one primal and one dual form");
    if (op.order > target.order)
        throw order_mismatch("operator order exceeds target order");
    if (op.poly.space()->arity() != target.poly.space()->arity())
        throw dimension_mismatch("pairing across different arities");
    return GradedForm{differentiate_by(op.poly, target.poly),
                      op.degree + target.degree, target.order - op.order,
                      op.weight + target.weight, target.space};
}

} // namespace detail

/// c |- C: a contravariant acting on a covariant through the substitution
/// Y_i -> d/dX_i. Result order is C.order - c.order; degrees and weights add.
/// Order-0 results are invariant scalars.
inline GradedForm apply_contravariant_to_covariant(const GradedForm& c,
                                                   const GradedForm& C) {
    if (c.space != FormSpace::dual || C.space != FormSpace::primal)
        throw space_mismatch("expected a dual operator and a primal target");
    return detail::pair_forms(c, C);
}

/// C |- c: the dual-side pairing through X_i -> d/dY_i.
inline GradedForm apply_covariant_to_contravariant(const GradedForm& C,
                                                   const GradedForm& c) {
    if (C.space != FormSpace::primal || c.space != FormSpace::dual)
        throw space_mismatch("expected a primal operator and a dual target");
    return detail::pair_forms(C, c);
}

/// Determinant of the matrix of second partials: for a quaternary cubic a
/// covariant of degree 4, order 4, weight 2.
inline GradedForm hessian(const SparsePoly& f) {
    const std::size_t n = f.space()->arity();
    if (n != 4) throw invalid_form("hessian expects a quaternary form");
    if (!f.is_homogeneous() || f.total_degree() != 3)
        throw invalid_form("hessian expects a homogeneous cubic");

    std::array<std::array<SparsePoly, 4>, 4> h{{
        {SparsePoly(f.space()), SparsePoly(f.space()), SparsePoly(f.space()), SparsePoly(f.space())},
        {SparsePoly(f.space()), SparsePoly(f.space()), SparsePoly(f.space()), SparsePoly(f.space())},
        {SparsePoly(f.space()), SparsePoly(f.space()), SparsePoly(f.space()), SparsePoly(f.space())},
        {SparsePoly(f.space()), SparsePoly(f.space()), SparsePoly(f.space()), SparsePoly(f.space())},
    }};
    for (std::size_t i = 0; i < 4; ++i) {
        SparsePoly di = f.derivative(i);
        for (std::size_t j = i; j < 4; ++j) {
            h[i][j] = di.derivative(j);
            if (j != i) h[j][i] = h[i][j];
        }
    }

    // 4x4 polynomial determinant via Laplace expansion along the first row,
    // with 3x3 minors expanded directly
    auto det3 = [&](std::size_t r0, std::size_t r1, std::size_t r2, std::size_t c0,
                    std::size_t c1, std::size_t c2) {
        return h[r0][c0] * (h[r1][c1] * h[r2][c2] - h[r1][c2] * h[r2][c1]) -
               h[r0][c1] * (h[r1][c0] * h[r2][c2] - h[r1][c2] * h[r2][c0]) +
               h[r0][c2] * (h[r1][c0] * h[r2][c1] - h[r1][c1] * h[r2][c0]);
    };
    SparsePoly det = h[0][0] * det3(1, 2, 3, 1, 2, 3) - h[0][1] * det3(1, 2, 3, 0, 2, 3) +
                     h[0][2] * det3(1, 2, 3, 0, 1, 3) - h[0][3] * det3(1, 2, 3, 0, 1, 2);
    return make_covariant(std::move(det), 4, 4, 2);
}

/// The input form itself as a graded quantity (degree 1, order 3, weight 0).
inline GradedForm form_as_covariant(const SparsePoly& f) {
    return make_covariant(f, 1, 3, 0);
}

} // namespace cubinv

#endif
