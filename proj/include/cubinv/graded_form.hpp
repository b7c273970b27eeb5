#ifndef CUBINV_GRADED_FORM_HPP
#define CUBINV_GRADED_FORM_HPP

#include <string>
#include <utility>

#include "errors.hpp"
#include "polynomial.hpp"

namespace cubinv {

enum class FormSpace { primal, dual };

/// A covariant or contravariant value together with its bookkeeping: degree
/// in the input form's coefficients, order (degree in the output variables),
/// and weight (the determinant power in the transformation law). Order 0
/// means the value is an invariant scalar.
struct GradedForm {
    SparsePoly poly;
    int degree = 0;
    int order = 0;
    int weight = 0;
    FormSpace space = FormSpace::primal;

    bool is_zero() const { return poly.is_zero(); }

    /// Scalar payload of an order-0 result.
    Rational value() const {
        if (order != 0) throw error("value() on a form of positive order");
        return poly.constant_value();
    }
};

inline GradedForm make_covariant(SparsePoly p, int degree, int order, int weight) {
    return GradedForm{std::move(p), degree, order, weight, FormSpace::primal};
}

inline GradedForm make_contravariant(SparsePoly p, int degree, int order, int weight) {
    return GradedForm{std::move(p), degree, order, weight, FormSpace::dual};
}

/// Product of forms on the same side; degrees, orders, and weights add.
inline GradedForm gf_mul(const GradedForm& a, const GradedForm& b) {
    if (a.space != b.space) throw space_mismatch("product of forms on opposite sides");
    return GradedForm{a.poly * b.poly, a.degree + b.degree, a.order + b.order,
                      a.weight + b.weight, a.space};
}

/// Multiplies by an invariant scalar of known degree and weight (an order-0
/// graded quantity); the order is unchanged.
inline GradedForm gf_scale_by_invariant(const GradedForm& g, const Rational& value,
                                        int inv_degree, int inv_weight) {
    return GradedForm{g.poly.scaled(value), g.degree + inv_degree, g.order,
                      g.weight + inv_weight, g.space};
}

/// Plain rational rescaling (a normalization constant); metadata unchanged.
inline GradedForm gf_scale(const GradedForm& g, const Rational& c) {
    return GradedForm{g.poly.scaled(c), g.degree, g.order, g.weight, g.space};
}

/// Sum of forms with identical bookkeeping.
inline GradedForm gf_add(const GradedForm& a, const GradedForm& b) {
    if (a.space != b.space || a.degree != b.degree || a.order != b.order ||
        a.weight != b.weight)
        throw error("sum of graded forms with mismatched metadata");
    return GradedForm{a.poly + b.poly, a.degree, a.order, a.weight, a.space};
}

} // namespace cubinv

#endif
