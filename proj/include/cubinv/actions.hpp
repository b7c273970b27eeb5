#ifndef CUBINV_ACTIONS_HPP
#define CUBINV_ACTIONS_HPP

#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace cubinv {

namespace detail {

/// Substitutes variable j by the linear form sum_i M(i,j) * v_i, i.e. the
/// row-vector substitution X -> X * M, within the polynomial's own space.
inline SparsePoly substitute_matrix(const RatMatrix& M, const SparsePoly& f) {
    const std::size_t n = f.space()->arity();
    if (M.rows() != n || M.cols() != n)
        throw dimension_mismatch("matrix size does not match variable count");
    std::vector<SparsePoly> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        SparsePoly img(f.space());
        for (std::size_t i = 0; i < n; ++i) {
            if (M.at(i, j).is_zero()) continue;
            Exponents e(n, 0);
            e[i] = 1;
            img.add_term(e, M.at(i, j));
        }
        images.push_back(std::move(img));
    }
    return f.substituted(f.space(), images);
}

} // namespace detail

/// (M . f)(X) := f(X M) for row vectors X; requires M invertible. Composition
/// satisfies act_primal(M1, act_primal(M2, f)) == act_primal(M1 * M2, f).
inline SparsePoly act_primal(const RatMatrix& M, const SparsePoly& f) {
    if (M.determinant().is_zero()) throw singular_matrix("group action needs invertible matrix");
    return detail::substitute_matrix(M, f);
}

/// Action on the dual space: (M . g)(Y) := g(Y (M^{-1})^T).
inline SparsePoly act_dual(const RatMatrix& M, const SparsePoly& g) {
    RatMatrix a = M.inverse().transposed();
    return detail::substitute_matrix(a, g);
}

} // namespace cubinv

#endif
