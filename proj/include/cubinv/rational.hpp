#ifndef CUBINV_RATIONAL_HPP
#define CUBINV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "errors.hpp"

namespace cubinv {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Thin value wrapper around a GMP rational.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(int n) : v_(n) {}           // NOLINT
    Rational(long num, long den) {
        if (den == 0) throw error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p" or "p/q" with optional leading '-' on p; q must be a
    /// positive integer literal.
    static Rational from_string(const std::string& text) {
        const auto bad = [&] { return error("malformed rational '" + text + "'"); };
        std::size_t slash = text.find('/');
        std::string num = text.substr(0, slash == std::string::npos ? text.size() : slash);
        if (!is_integer_literal(num, true)) throw bad();
        mpz_class n(num, 10);
        mpz_class d(1);
        if (slash != std::string::npos) {
            std::string den = text.substr(slash + 1);
            if (!is_integer_literal(den, false)) throw bad();
            d = mpz_class(den, 10);
            if (d == 0) throw bad();
        }
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(unsigned long e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        mpq_class r(n, d);
        // num/den of a canonical rational stay coprime under powers
        return Rational(std::move(r));
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    static bool is_integer_literal(const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    }

    mpq_class v_;
};

/// 2^a * 3^b * extra as an exact rational; the pipeline's normalization
/// constants are all of this shape.
inline Rational pow23(unsigned a, unsigned b, long extra = 1) {
    mpz_class p2, p3;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, a);
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, b);
    mpq_class r(p2 * p3 * extra);
    return Rational(std::move(r));
}

} // namespace cubinv

#endif
