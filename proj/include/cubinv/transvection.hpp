#ifndef CUBINV_TRANSVECTION_HPP
#define CUBINV_TRANSVECTION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "varspace.hpp"

namespace cubinv {

/// The bracket operator (i j k) over replicated ternary variable triples:
/// the 3x3 determinant of partial derivatives whose rows are the letters
/// X, Y, Z and whose columns are the replicas i, j, k.
struct BracketOp {
    int i, j, k;
};

namespace detail {

// Signed permutation patterns of the determinant expansion: entry
// {a, b, c, sign} contributes sign * dX_{col a} dY_{col b} dZ_{col c}.
inline constexpr std::array<std::array<int, 4>, 6> kBracketPatterns{{
    {0, 1, 2, +1},
    {0, 2, 1, -1},
    {1, 0, 2, -1},
    {1, 2, 0, +1},
    {2, 0, 1, +1},
    {2, 1, 0, -1},
}};

inline std::size_t replica_var(int replica, int letter) {
    return static_cast<std::size_t>(3 * replica + letter);
}

} // namespace detail

/// Applies one bracket operator to a polynomial over a replicated space.
inline SparsePoly apply_bracket(const BracketOp& op, const SparsePoly& p) {
    const std::size_t arity = p.space()->arity();
    const int cols[3] = {op.i, op.j, op.k};
    for (int c : cols)
        if (detail::replica_var(c, 2) >= arity)
            throw dimension_mismatch("bracket replica outside the variable space");
    if (op.i == op.j || op.j == op.k || op.i == op.k)
        throw error("bracket replicas must be pairwise distinct");

    SparsePoly acc(p.space());
    for (const auto& pat : detail::kBracketPatterns) {
        SparsePoly t = p.derivative(detail::replica_var(cols[pat[0]], 0));
        t = t.derivative(detail::replica_var(cols[pat[1]], 1));
        t = t.derivative(detail::replica_var(cols[pat[2]], 2));
        if (pat[3] < 0)
            acc -= t;
        else
            acc += t;
    }
    return acc;
}

/// Copies a ternary form into replica slot r of a replicated space.
inline SparsePoly embed_replica(const SparsePoly& f, int replica, const SpacePtr& target) {
    if (f.space()->arity() != 3)
        throw dimension_mismatch("embed_replica expects a ternary form");
    SparsePoly out(target);
    Exponents e(target->arity(), 0);
    for (const auto& [exps, c] : f.terms()) {
        for (int v = 0; v < 3; ++v) e[detail::replica_var(replica, v)] = exps[static_cast<std::size_t>(v)];
        out.add_term(e, c);
        for (int v = 0; v < 3; ++v) e[detail::replica_var(replica, v)] = 0;
    }
    return out;
}

/// One step of a transvection schedule: either multiply in the next replica
/// of the input form, or apply a bracket operator.
struct PlanStep {
    enum class Kind { multiply_factor, apply_bracket };
    Kind kind;
    int factor = 0;
    BracketOp bracket{0, 1, 2};

    static PlanStep mul(int factor) { return {Kind::multiply_factor, factor, {0, 1, 2}}; }
    static PlanStep br(int i, int j, int k) { return {Kind::apply_bracket, 0, {i, j, k}}; }
};

struct TransvectionPlan {
    int replicas;
    std::vector<PlanStep> steps;
};

/// Interleaved schedule for the degree-4 invariant: each bracket is applied
/// as soon as all three of its replicas are present, which keeps intermediate
/// term counts small. The step order is a fixed constant so results are
/// reproducible bit for bit.
inline const TransvectionPlan& aronhold_S_plan() {
    static const TransvectionPlan plan{
        4,
        {PlanStep::mul(0), PlanStep::mul(1), PlanStep::mul(2), PlanStep::br(0, 1, 2),
         PlanStep::mul(3), PlanStep::br(1, 2, 3), PlanStep::br(2, 3, 0),
         PlanStep::br(3, 0, 1)}};
    return plan;
}

/// Interleaved schedule for the degree-6 invariant; the final bracket is
/// applied twice.
inline const TransvectionPlan& aronhold_T_plan() {
    static const TransvectionPlan plan{
        6,
        {PlanStep::mul(0), PlanStep::mul(1), PlanStep::mul(2), PlanStep::br(0, 1, 2),
         PlanStep::mul(3), PlanStep::br(0, 1, 3), PlanStep::mul(4),
         PlanStep::br(1, 2, 4), PlanStep::mul(5), PlanStep::br(2, 0, 5),
         PlanStep::br(3, 4, 5), PlanStep::br(3, 4, 5)}};
    return plan;
}

/// Runs a schedule on a ternary cubic and returns the resulting constant.
inline Rational run_transvection(const TransvectionPlan& plan, const SparsePoly& f) {
    if (f.space()->arity() != 3)
        throw dimension_mismatch("transvection expects a ternary form");
    if (f.is_zero()) return Rational(0);
    SpacePtr space = replicated_ternary(plan.replicas);
    SparsePoly cur = SparsePoly::constant(space, Rational(1));
    for (const PlanStep& step : plan.steps) {
        if (step.kind == PlanStep::Kind::multiply_factor)
            cur *= embed_replica(f, step.factor, space);
        else
            cur = apply_bracket(step.bracket, cur);
    }
    if (!cur.is_zero() && cur.total_degree() != 0)
        throw error("transvection schedule did not reduce to a constant");
    return cur.is_zero() ? Rational(0) : cur.constant_value();
}

/// Degree-4, weight-4 invariant of a ternary cubic.
inline Rational aronhold_S(const SparsePoly& f) {
    return run_transvection(aronhold_S_plan(), f);
}

/// Degree-6, weight-6 invariant of a ternary cubic.
inline Rational aronhold_T(const SparsePoly& f) {
    return run_transvection(aronhold_T_plan(), f);
}

/// S^3 - 6 T^2; vanishes exactly when the cubic curve is singular.
inline Rational discriminant_ternary(const SparsePoly& f) {
    Rational s = aronhold_S(f);
    Rational t = aronhold_T(f);
    return s.pow(3) - Rational(6) * t.pow(2);
}

} // namespace cubinv

#endif
