#pragma once

#include "sbv/rational.hpp"

#include <concepts>

namespace sbv {

// Arithmetic contract the numerical kernels are written against. A scalar is
// an ordered field type; `exact` distinguishes the rational instantiation
// (field axioms hold exactly) from floating ones (axioms hold to roundoff).
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double from_ratio(long long num, long long den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static double from_rational(const Rational& r) { return r.to_double(); }
    static double to_double(double v) { return v; }
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_ratio(long long num, long long den) { return Rational(num, den); }
    static Rational from_rational(const Rational& r) { return r; }
    static double to_double(const Rational& v) { return v.to_double(); }
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
};

template <class S>
concept Scalar = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a < b } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { scalar_traits<S>::exact } -> std::convertible_to<bool>;
};

// x^e by repeated multiplication. No pow/log, so the exact and audited
// instantiations stay clean.
template <Scalar S>
S power(const S& x, std::size_t e) {
    S acc = scalar_traits<S>::one();
    for (std::size_t k = 0; k < e; ++k) acc = acc * x;
    return acc;
}

// C(m, k) evaluated exactly, converted to the target scalar once.
template <Scalar S>
S binomial_as(unsigned long m, unsigned long k) {
    return scalar_traits<S>::from_rational(binomial_rational(m, k));
}

} // namespace sbv
