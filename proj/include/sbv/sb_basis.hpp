#pragma once

#include "sbv/errors.hpp"
#include "sbv/matrix.hpp"
#include "sbv/nodes.hpp"
#include "sbv/scalar.hpp"

#include <cstddef>
#include <string>

namespace sbv {

// Value of the degree-n Said-Ball basis function s_i^n at t. The basis has a
// binomial-weighted lower half in powers of t, a mirrored upper half in
// powers of 1-t, and (for even n) a central Bernstein-like term.
template <Scalar S>
S eval_basis(std::size_t n, std::size_t i, const S& t) {
    if (i > n)
        throw format_error("basis index " + std::to_string(i) + " out of range for degree " +
                           std::to_string(n));
    const std::size_t half = n / 2;
    const S one = scalar_traits<S>::one();
    const S omt = one - t;
    if (n % 2 == 0 && i == half)
        return binomial_as<S>(n, half) * power(t, half) * power(omt, half);
    if (2 * i + 1 <= n)
        return binomial_as<S>(half + i, i) * power(t, i) * power(omt, half + 1);
    return binomial_as<S>(half + n - i, n - i) * power(t, half + 1) * power(omt, n - i);
}

// Collocation matrix A[i][j] = s_j^n(t_i), rows indexed by nodes. Strictly
// totally positive for any valid node set; rows sum to one.
template <Scalar S>
Matrix<S> build_matrix(const NodeSet<S>& nodes) {
    const std::size_t n = nodes.degree();
    Matrix<S> a(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) a(i, j) = eval_basis(n, j, nodes[i]);
    return a;
}

// p(t) = sum_k a_k s_k^n(t) for coefficients a_0..a_n.
template <Scalar S>
S eval_poly(const Vector<S>& coefficients, const S& t) {
    if (coefficients.empty()) throw format_error("empty coefficient vector");
    const std::size_t n = coefficients.size() - 1;
    S acc = scalar_traits<S>::zero();
    for (std::size_t k = 0; k <= n; ++k) acc += coefficients[k] * eval_basis(n, k, t);
    return acc;
}

} // namespace sbv
