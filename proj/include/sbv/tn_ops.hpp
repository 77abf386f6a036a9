#pragma once

#include "sbv/bd.hpp"
#include "sbv/errors.hpp"
#include "sbv/matrix.hpp"
#include "sbv/sb_basis.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

namespace sbv {

template <Scalar S>
struct SolveReport {
    Vector<S> x;
    double residual_norm = 0.0;
    // ||x - x_e||_2 / ||x_e||_2 against an exact solution; present only when
    // an oracle comparison was requested by the caller.
    std::optional<double> relative_error;
};

// x = A^{-1} b applied factor by factor: the n lower bidiagonal factors, then
// the pivot divisions, then the n upper factors. Never materializes A or
// A^{-1}; O(n^2) flops, touching at most two entries per row per factor.
template <Scalar S>
Vector<S> apply_inverse(const BDFactorization<S>& bd, Vector<S> v) {
    const std::size_t N = bd.order;
    if (v.size() != N)
        throw format_error("right-hand side has length " + std::to_string(v.size()) +
                           ", expected " + std::to_string(N));
    for (std::size_t i = 1; i + 1 <= N; ++i)
        for (std::size_t r = N; r >= i + 1; --r)
            v[r - 1] = v[r - 1] - bd.m(r - 1, i - 1) * v[r - 2];
    for (std::size_t r = 0; r < N; ++r) v[r] = v[r] / bd.pivot(r);
    for (std::size_t i = N - 1; i >= 1; --i)
        for (std::size_t j = i; j + 1 <= N; ++j)
            v[j - 1] = v[j - 1] - bd.mt(j, i - 1) * v[j];
    return v;
}

// Rebuilds the dense collocation matrix from its decomposition. The factor
// entries here are the positive multipliers arranged along antidiagonals
// (one per factor), so the assembly is subtraction-free: products and sums of
// positive quantities only, and every entry keeps high relative accuracy.
template <Scalar S>
Matrix<S> reconstruct(const BDFactorization<S>& bd) {
    const std::size_t N = bd.order;
    Matrix<S> a(N, N);
    for (std::size_t i = 0; i < N; ++i) a(i, i) = bd.pivot(i);
    for (std::size_t k = 1; k + 1 <= N; ++k)
        for (std::size_t c = N; c >= k + 1; --c) {
            const S& w = bd.mt(c - 1, c - k - 1);
            for (std::size_t r = 0; r < N; ++r) a(r, c - 1) = a(r, c - 1) + a(r, c - 2) * w;
        }
    for (std::size_t k = 1; k + 1 <= N; ++k)
        for (std::size_t r = N; r >= k + 1; --r) {
            const S& w = bd.m(r - 1, r - k - 1);
            for (std::size_t c = 0; c < N; ++c) a(r - 1, c) = a(r - 1, c) + a(r - 2, c) * w;
        }
    return a;
}

namespace detail {

// Neumaier accumulator.
struct CompensatedSum {
    double sum = 0.0, comp = 0.0;
    void add(double t) {
        const double s = sum + t;
        if (std::abs(sum) >= std::abs(t))
            comp += (sum - s) + t;
        else
            comp += (t - s) + sum;
        sum = s;
    }
    double value() const { return sum + comp; }
};

// sum_j a_j x_j - b with every product split exactly via fma, so the result
// is accurate to ~u|r| even under heavy cancellation.
inline double compensated_residual_entry(const double* a, const double* x, std::size_t n,
                                         double b) {
    CompensatedSum acc;
    for (std::size_t j = 0; j < n; ++j) {
        const double p = a[j] * x[j];
        acc.add(p);
        acc.add(std::fma(a[j], x[j], -p));
    }
    acc.add(-b);
    return acc.value();
}

} // namespace detail

// ||A x - b||_2 with A rebuilt from the decomposition. Exact accumulation in
// exact mode; compensated summation otherwise, so the report stays
// trustworthy even when the residual is far below the working precision.
template <Scalar S>
double residual_norm(const BDFactorization<S>& bd, const Vector<S>& x, const Vector<S>& b) {
    const Matrix<S> a = reconstruct(bd);
    if constexpr (scalar_traits<S>::exact) {
        S sumsq = scalar_traits<S>::zero();
        for (std::size_t i = 0; i < bd.order; ++i) {
            S r = -b[i];
            for (std::size_t j = 0; j < bd.order; ++j) r += a(i, j) * x[j];
            sumsq += r * r;
        }
        return std::sqrt(scalar_traits<S>::to_double(sumsq));
    } else {
        std::vector<double> row(bd.order), xs(bd.order);
        for (std::size_t j = 0; j < bd.order; ++j) xs[j] = scalar_traits<S>::to_double(x[j]);
        double sumsq = 0.0;
        for (std::size_t i = 0; i < bd.order; ++i) {
            for (std::size_t j = 0; j < bd.order; ++j)
                row[j] = scalar_traits<S>::to_double(a(i, j));
            const double r = detail::compensated_residual_entry(
                row.data(), xs.data(), bd.order, scalar_traits<S>::to_double(b[i]));
            sumsq += r * r;
        }
        return std::sqrt(sumsq);
    }
}

template <Scalar S>
SolveReport<S> solve(const BDFactorization<S>& bd, const Vector<S>& b) {
    SolveReport<S> report;
    report.x = apply_inverse(bd, b);
    report.residual_norm = residual_norm(bd, report.x, b);
    return report;
}

// Said-Ball coefficients of the interpolant p with p(t_i) = values[i];
// evaluate with eval_poly.
template <Scalar S>
Vector<S> interpolate(const NodeSet<S>& nodes, const Vector<S>& values) {
    if (values.size() != nodes.size())
        throw format_error("value vector has length " + std::to_string(values.size()) +
                           ", expected " + std::to_string(nodes.size()));
    return apply_inverse(decompose(nodes), values);
}

} // namespace sbv
