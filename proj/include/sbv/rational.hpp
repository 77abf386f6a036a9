#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sbv {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. This is the exact scalar used by the oracle and by every
// templated kernel when run in exact mode.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long value) : q_(static_cast<long>(value)) {}
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Exact conversion: every finite double is a dyadic rational.
    static Rational from_double(double value);

    // Accepts `[-]digits[.digits]` or `[-]digits/digits`. Decimal literals are
    // exact (scaled by a power of ten). Throws format_error on malformed text
    // and on a zero denominator.
    static Rational parse(std::string_view text);

    // "p/q", or just "p" when the denominator is 1. parse(str(x)) == x.
    std::string str() const;

    // Nearest double (ties need not be broken evenly; the result is always
    // one of the two doubles bracketing the exact value, whichever is closer).
    double to_double() const;

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    const mpq_class& raw() const { return q_; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// C(m, k) computed by the multiplicative recurrence in exact arithmetic.
Rational binomial_rational(unsigned long m, unsigned long k);

} // namespace sbv
