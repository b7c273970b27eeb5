#ifndef CUBINV_POLYNOMIAL_HPP
#define CUBINV_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "varspace.hpp"

namespace cubinv {

using Exponents = std::vector<std::int32_t>;

inline std::int32_t total_degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::int32_t{0});
}

/// Graded lexicographic order, highest terms first: larger total degree wins,
/// ties broken by lexicographically larger exponent vector. Map iteration
/// order doubles as the canonical serialization order.
struct GradedLexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const {
        std::int32_t da = total_degree_of(a), db = total_degree_of(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed variable space. Zero coefficients are never stored.
class SparsePoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

    explicit SparsePoly(SpacePtr space) : space_(std::move(space)) {}

    static SparsePoly zero(SpacePtr space) { return SparsePoly(std::move(space)); }

    static SparsePoly constant(SpacePtr space, Rational c) {
        SparsePoly p(std::move(space));
        if (!c.is_zero()) p.terms_.emplace(Exponents(p.space_->arity(), 0), std::move(c));
        return p;
    }

    static SparsePoly monomial(SpacePtr space, Exponents exps, Rational c) {
        SparsePoly p(std::move(space));
        if (exps.size() != p.space_->arity())
            throw dimension_mismatch("monomial exponent count != space arity");
        if (!c.is_zero()) p.terms_.emplace(std::move(exps), std::move(c));
        return p;
    }

    static SparsePoly variable(SpacePtr space, std::size_t index) {
        Exponents e(space->arity(), 0);
        e.at(index) = 1;
        return monomial(std::move(space), std::move(e), Rational(1));
    }

    const SpacePtr& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c * X^exps in place, erasing the term if the sum cancels.
    void add_term(const Exponents& exps, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::int32_t total_degree() const {
        // ordering is graded: the first term has maximal degree
        return terms_.empty() ? -1 : total_degree_of(terms_.begin()->first);
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        std::int32_t d = total_degree_of(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total_degree_of(e) != d) return false;
        return true;
    }

    Rational coefficient(const Exponents& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// The coefficient of an order-0 (constant) polynomial.
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() != 1 || total_degree() != 0)
            throw error("constant_value on a non-constant polynomial");
        return terms_.begin()->second;
    }

    SparsePoly operator-() const {
        SparsePoly r(space_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        require_same_space(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& o) {
        require_same_space(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { a += b; return a; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { a -= b; return a; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        a.require_same_space(b);
        SparsePoly r(a.space_);
        Exponents e(a.space_->arity());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    SparsePoly scaled(const Rational& c) const {
        SparsePoly r(space_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    SparsePoly pow(unsigned e) const {
        SparsePoly r = constant(space_, Rational(1));
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    SparsePoly derivative(std::size_t var) const {
        if (var >= space_->arity()) throw dimension_mismatch("derivative: variable index out of range");
        SparsePoly r(space_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            --d[var];
            r.terms_.emplace(std::move(d), c * Rational(e[var]));
        }
        return r;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != space_->arity())
            throw dimension_mismatch("evaluate: point length != arity");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < point.size(); ++i)
                if (e[i] != 0) t *= point[i].pow(static_cast<unsigned long>(e[i]));
            acc += t;
        }
        return acc;
    }

    /// Substitutes variable i by images[i] (all images over `target`), the
    /// exact analogue of composing with a linear or polynomial change of
    /// variables. Powers of each image are cached up to the largest exponent
    /// that actually occurs.
    SparsePoly substituted(const SpacePtr& target,
                           const std::vector<SparsePoly>& images) const {
        if (images.size() != space_->arity())
            throw dimension_mismatch("substituted: one image per variable required");
        for (const auto& img : images)
            if (!same_space(img.space(), target))
                throw space_mismatch("substituted: image outside target space");

        std::vector<std::int32_t> max_exp(space_->arity(), 0);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i)
                max_exp[i] = std::max(max_exp[i], e[i]);

        std::vector<std::vector<SparsePoly>> powers;
        powers.reserve(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) {
            std::vector<SparsePoly> ladder;
            ladder.push_back(constant(target, Rational(1)));
            for (std::int32_t k = 1; k <= max_exp[i]; ++k)
                ladder.push_back(ladder.back() * images[i]);
            powers.push_back(std::move(ladder));
        }

        SparsePoly r(target);
        for (const auto& [e, c] : terms_) {
            SparsePoly t = constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= powers[i][static_cast<std::size_t>(e[i])];
            r += t;
        }
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return same_space(a.space_, b.space_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    /// Canonical text form under the CLI grammar: terms in graded-lex
    /// descending order, explicit '*' between factors, '^' for exponents.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational mag = c.abs();
            if (first) {
                if (c.sign() < 0) out += "-";
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            std::string mono = monomial_str(e);
            if (mono.empty()) {
                out += mag.str();
            } else if (mag == Rational(1)) {
                out += mono;
            } else {
                out += mag.str() + "*" + mono;
            }
        }
        return out;
    }

private:
    void require_same_space(const SparsePoly& o) const {
        if (!same_space(space_, o.space_))
            throw space_mismatch("polynomials from different variable spaces");
    }

    std::string monomial_str(const Exponents& e) const {
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += space_->labels[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
        return out;
    }

    SpacePtr space_;
    TermMap terms_;
};

/// All exponent vectors of the given arity and total degree, graded-lex
/// descending (the canonical basis order used for interpolation).
inline std::vector<Exponents> monomial_basis(std::size_t arity, std::int32_t degree) {
    std::vector<Exponents> out;
    Exponents cur(arity, 0);
    // recursive enumeration in lex-descending order of the leading positions
    auto rec = [&](auto&& self, std::size_t pos, std::int32_t remaining) -> void {
        if (pos + 1 == arity) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (std::int32_t e = remaining; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    if (arity == 0) return out;
    rec(rec, 0, degree);
    return out;
}

} // namespace cubinv

#endif
