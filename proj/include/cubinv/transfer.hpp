#ifndef CUBINV_TRANSFER_HPP
#define CUBINV_TRANSFER_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graded_form.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "prng.hpp"
#include "transvection.hpp"
#include "varspace.hpp"

namespace cubinv {

/// Point-set seed used by every interpolation unless a caller overrides it.
/// The interpolated contravariant is unique, so the seed never changes any
/// result, only which linear system produces it.
inline constexpr std::uint64_t kDefaultPointSeed = 20240917;

inline constexpr int kResampleAttempts = 10;

/// Three spanning vectors of the plane annihilated by a linear functional,
/// scaled so their wedge maps back to exactly that functional.
struct PlaneFrame {
    std::array<std::vector<Rational>, 3> v;
};

/// The functional v -> det(v, v1, v2, v3) as a coefficient vector.
inline std::vector<Rational> phi(const PlaneFrame& frame) {
    RatMatrix m(4, 4);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c) m.at(r + 1, c) = frame.v[r][c];
    std::vector<Rational> l(4, Rational(0));
    for (std::size_t i = 0; i < 4; ++i) {
        RatMatrix mi = m;
        for (std::size_t c = 0; c < 4; ++c) mi.at(0, c) = Rational(c == i ? 1 : 0);
        l[i] = mi.determinant();
    }
    return l;
}

/// Inverts phi: produces a frame whose wedge image equals l exactly,
/// including scale. Built from the kernel basis of l with one basis vector
/// rescaled by the exact ratio.
inline PlaneFrame phi_inverse(const std::vector<Rational>& l) {
    if (l.size() != 4) throw dimension_mismatch("functional must have 4 coefficients");
    std::size_t pivot = 4;
    for (std::size_t i = 0; i < 4; ++i)
        if (!l[i].is_zero()) { pivot = i; break; }
    if (pivot == 4) throw error("zero functional has no plane");

    PlaneFrame frame;
    std::size_t slot = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        if (j == pivot) continue;
        std::vector<Rational> b(4, Rational(0));
        b[j] = Rational(1);
        b[pivot] = -l[j] / l[pivot];
        frame.v[slot++] = std::move(b);
    }

    std::vector<Rational> image = phi(frame);
    if (image[pivot].is_zero()) throw error("degenerate frame in phi_inverse");
    Rational ratio = l[pivot] / image[pivot];
    for (auto& c : frame.v[0]) c *= ratio;

    image = phi(frame);
    for (std::size_t i = 0; i < 4; ++i)
        if (image[i] != l[i]) throw error("phi_inverse round-trip failed");
    return frame;
}

/// f(U1 v1 + U2 v2 + U3 v3): the exact ternary restriction of a quaternary
/// form to the plane spanned by the frame.
inline SparsePoly restrict_to_plane(const SparsePoly& f, const PlaneFrame& frame) {
    if (f.space()->arity() != 4)
        throw dimension_mismatch("restriction expects a quaternary form");
    SpacePtr tern = ternary();
    std::vector<SparsePoly> images;
    images.reserve(4);
    for (std::size_t i = 0; i < 4; ++i) {
        SparsePoly img(tern);
        for (std::size_t j = 0; j < 3; ++j) {
            if (frame.v[j][i].is_zero()) continue;
            Exponents e(3, 0);
            e[j] = 1;
            img.add_term(e, frame.v[j][i]);
        }
        images.push_back(std::move(img));
    }
    return f.substituted(tern, images);
}

using TernaryInvariant = std::function<Rational(const SparsePoly&)>;

/// Transfers a ternary invariant of degree D and weight w to a contravariant
/// of quaternary cubics: the unique order-w dual form g with
/// g(l) = invariant(f restricted to the plane of l) for every functional l.
/// Computed by exact interpolation at seeded integer functionals; a singular
/// sample configuration triggers a full resample.
inline GradedForm clebsch_transfer(const SparsePoly& f, const TernaryInvariant& invariant,
                                   int degree, int weight,
                                   std::uint64_t point_seed = kDefaultPointSeed) {
    if (f.space()->arity() != 4)
        throw dimension_mismatch("transfer expects a quaternary form");
    SpacePtr dual = dual_quaternary();
    const std::vector<Exponents> basis = monomial_basis(4, weight);
    const std::size_t dim = basis.size();

    Prng rng(point_seed);
    for (int attempt = 0; attempt < kResampleAttempts; ++attempt) {
        std::vector<std::vector<Rational>> points;
        points.reserve(dim);
        while (points.size() < dim) {
            std::vector<Rational> p(4);
            bool nonzero = false;
            for (auto& c : p) {
                long v = rng.uniform_int(-20, 20);
                c = Rational(v);
                nonzero = nonzero || v != 0;
            }
            if (nonzero) points.push_back(std::move(p));
        }

        RatMatrix A(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                Rational v(1);
                for (std::size_t i = 0; i < 4; ++i)
                    if (basis[c][i] != 0)
                        v *= points[r][i].pow(static_cast<unsigned long>(basis[c][i]));
                A.at(r, c) = v;
            }

        std::vector<Rational> rhs;
        rhs.reserve(dim);
        for (std::size_t r = 0; r < dim; ++r)
            rhs.push_back(invariant(restrict_to_plane(f, phi_inverse(points[r]))));

        std::vector<Rational> coeffs;
        try {
            coeffs = A.solve(rhs);
        } catch (const singular_matrix&) {
            continue;
        }

        SparsePoly g(dual);
        for (std::size_t c = 0; c < dim; ++c) g.add_term(basis[c], coeffs[c]);
        return make_contravariant(std::move(g), degree, weight, weight);
    }
    throw interpolation_exhausted("interpolation points stayed degenerate after " +
                                  std::to_string(kResampleAttempts) + " resamples");
}

/// Transfer of the degree-4 ternary invariant: contravariant of degree 4,
/// order 4, weight 4.
inline GradedForm s_tilde(const SparsePoly& f, std::uint64_t point_seed = kDefaultPointSeed) {
    return clebsch_transfer(f, [](const SparsePoly& t) { return aronhold_S(t); }, 4, 4,
                            point_seed);
}

/// Transfer of the degree-6 ternary invariant: contravariant of degree 6,
/// order 6, weight 6.
inline GradedForm t_tilde(const SparsePoly& f, std::uint64_t point_seed = kDefaultPointSeed) {
    return clebsch_transfer(f, [](const SparsePoly& t) { return aronhold_T(t); }, 6, 6,
                            point_seed);
}

/// The dual surface S~(f)^3 - 6 T~(f)^2, an order-12 dual form that vanishes
/// exactly on the tangent planes of the surface f = 0.
/// Combines already-computed transfers into the dual surface S^3 - 6 T^2.
inline GradedForm dual_surface(const GradedForm& s, const GradedForm& t) {
    GradedForm s3 = gf_mul(gf_mul(s, s), s);
    GradedForm t2 = gf_mul(t, t);
    return gf_add(s3, gf_scale(t2, Rational(-6)));
}

inline GradedForm dual_surface(const SparsePoly& f, std::uint64_t point_seed = kDefaultPointSeed) {
    return dual_surface(s_tilde(f, point_seed), t_tilde(f, point_seed));
}

} // namespace cubinv

#endif
