#pragma once

#include "sbv/errors.hpp"
#include "sbv/matrix.hpp"
#include "sbv/nodes.hpp"
#include "sbv/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace sbv {

// Bidiagonal decomposition of a Said-Ball collocation matrix, packed into one
// order x order array:
//   - strictly lower part: Neville multipliers m(i,j) of A,
//   - diagonal: diagonal pivots p(i),
//   - strictly upper part at (j,i): Neville multipliers mt(i,j) of A^T.
// All indices 0-based. Every stored entry is strictly positive for a valid
// node set, and the pivot product equals det A.
template <Scalar S>
struct BDFactorization {
    std::size_t order = 0;
    Parity parity = Parity::odd;
    Matrix<S> entries;

    std::size_t degree() const { return order - 1; }

    const S& m(std::size_t i, std::size_t j) const { return entries(i, j); }
    const S& mt(std::size_t i, std::size_t j) const { return entries(j, i); }
    const S& pivot(std::size_t i) const { return entries(i, i); }

    S det() const {
        S d = scalar_traits<S>::one();
        for (std::size_t i = 0; i < order; ++i) d = d * entries(i, i);
        return d;
    }
};

namespace detail {

// Shared regime constants. The lower regime (powers of t) spans the first
// u = ceil(n/2) rows/columns; the (1-t)-exponent there is h = floor(n/2)+1.
struct BdLayout {
    std::size_t u, h;
    long long low_half; // floor(n/2)
    bool even;
};

inline BdLayout bd_layout(std::size_t n) {
    return {(n + 1) / 2, n / 2 + 1, static_cast<long long>(n / 2), n % 2 == 0};
}

inline void check_pair(std::size_t order, std::size_t i, std::size_t j) {
    if (i >= order || j >= i)
        throw format_error("multiplier index (" + std::to_string(i) + "," + std::to_string(j) +
                           ") out of range for order " + std::to_string(order));
}

} // namespace detail

// Computes the full decomposition directly from the nodes in O(n^2) flops.
// The only subtractions performed are t_i - t_j (i > j) and 1 - t_k, so every
// entry is obtained with high relative accuracy in floating arithmetic.
template <Scalar S>
BDFactorization<S> decompose(const NodeSet<S>& nodes) {
    const std::size_t n = nodes.degree();
    const std::size_t N = n + 1;
    BDFactorization<S> bd{N, nodes.parity(), Matrix<S>(N, N)};
    auto& B = bd.entries;
    const S one = scalar_traits<S>::one();

    if (n == 0) { // single node: empty products force the 1x1 pivot to 1
        B(0, 0) = one;
        return bd;
    }

    const auto [u, h, L, even] = detail::bd_layout(n);
    auto t = [&](std::size_t i) -> const S& { return nodes[i - 1]; }; // 1-based view

    std::vector<S> omt(N + 1, one), pw(N + 1, one);
    for (std::size_t k = 1; k <= N; ++k) {
        omt[k] = one - t(k);
        pw[k] = power(omt[k], h);
    }

    // Multipliers of A, row by row as ratio recurrences: within the lower
    // regime each step appends one node difference to numerator and
    // denominator; crossing into the upper regime trades one power of
    // (1 - t_i) for the (1 - t_{i-j}) factors.
    for (std::size_t i = 2; i <= N; ++i) {
        S cur = pw[i] / pw[i - 1];
        B(i - 1, 0) = cur;
        const std::size_t last_low = std::min(i - 1, u);
        for (std::size_t j = 2; j <= last_low; ++j) {
            cur = cur * ((t(i) - t(i - j + 1)) / (t(i - 1) - t(i - j)));
            B(i - 1, j - 1) = cur;
        }
        if (i >= u + 2) {
            cur = cur * (omt[i - u - 1] * (t(i) - t(i - u)) /
                         (omt[i] * (t(i - 1) - t(i - u - 1))));
            B(i - 1, u) = cur;
            for (std::size_t j = u + 2; j <= i - 1; ++j) {
                cur = cur * (omt[i - 1] * omt[i - j] * (t(i) - t(i - j + 1)) /
                             (omt[i] * omt[i - j + 1] * (t(i - 1) - t(i - j))));
                B(i - 1, j - 1) = cur;
            }
        }
    }

    // Multipliers of A^T, stored above the diagonal: row i of the elimination
    // of A^T lands in column i. Row u+1 divides by the running product of
    // (1 - t_k); later rows split between the 1/(1-t_j) and t_j/(1-t_j) forms
    // at column i - h.
    for (std::size_t i = 2; i <= u; ++i) {
        const S aux = scalar_traits<S>::from_ratio(L + static_cast<long long>(i) - 1,
                                                   static_cast<long long>(i) - 1);
        for (std::size_t j = 1; j < i; ++j) B(j - 1, i - 1) = aux * t(j);
    }
    {
        const std::size_t i = u + 1;
        S acc = one;
        for (std::size_t j = 1; j < i; ++j) {
            acc = acc * omt[j];
            S v = t(j) / acc;
            if (even) v = scalar_traits<S>::from_ratio(2, 1) * v;
            B(j - 1, i - 1) = v;
        }
    }
    for (std::size_t i = u + 2; i <= N; ++i) {
        const long long nu = static_cast<long long>(n) - static_cast<long long>(i) + 2;
        const S aux = scalar_traits<S>::from_ratio(nu, L + nu);
        const std::size_t split = i - h; // first column of the t_j/(1-t_j) form
        for (std::size_t j = 1; j < split; ++j) B(j - 1, i - 1) = aux / omt[j];
        for (std::size_t j = split; j < i; ++j) B(j - 1, i - 1) = aux * (t(j) / omt[j]);
    }

    // Diagonal pivots, with the binomial coefficient carried as a running
    // factor q. Crossing into the upper regime divides q by the accumulated
    // (1 - t_k) product; the even case also picks up the central binomial
    // step C(n, n/2) = 2 C(n-1, n/2 - 1).
    B(0, 0) = pw[1];
    S q = one;
    for (std::size_t i = 1; i + 1 <= u; ++i) {
        q = q * scalar_traits<S>::from_ratio(L + static_cast<long long>(i),
                                             static_cast<long long>(i));
        S aux = one;
        for (std::size_t k = 1; k <= i; ++k) aux = aux * (t(i + 1) - t(k));
        B(i, i) = q * pw[i + 1] * aux;
    }
    {
        S den = one;
        for (std::size_t k = 1; k <= u; ++k) den = den * omt[k];
        q = q / den;
        if (even) q = q * scalar_traits<S>::from_ratio(2, 1);
        S aux = one;
        for (std::size_t k = 1; k <= u; ++k) aux = aux * (t(u + 1) - t(k));
        B(u, u) = q * power(omt[u + 1], n - u) * aux;
    }
    for (std::size_t i = u + 1; i <= n; ++i) {
        const long long ni = static_cast<long long>(n) - static_cast<long long>(i) + 1;
        q = q * scalar_traits<S>::from_ratio(ni, L + ni);
        q = q / omt[i];
        S aux = one;
        for (std::size_t k = 1; k <= i; ++k) aux = aux * (t(i + 1) - t(k));
        B(i, i) = q * power(omt[i + 1], n - i) * aux;
    }
    return bd;
}

// Closed-form Neville multiplier m(i,j) of A, 0-based with j < i < order.
template <Scalar S>
S multiplier(const NodeSet<S>& nodes, std::size_t i, std::size_t j) {
    detail::check_pair(nodes.size(), i, j);
    const std::size_t n = nodes.degree();
    const auto [u, h, L, even] = detail::bd_layout(n);
    const std::size_t i1 = i + 1, j1 = j + 1; // 1-based row/column
    auto t = [&](std::size_t k) -> const S& { return nodes[k - 1]; };
    const S one = scalar_traits<S>::one();

    S num, den;
    if (j1 <= u) {
        num = power(one - t(i1), h);
        den = power(one - t(i1 - 1), h);
    } else {
        num = power(one - t(i1), n - j1 + 1) * (one - t(i1 - j1));
        den = power(one - t(i1 - 1), n - j1 + 2);
    }
    for (std::size_t k = 1; k <= j1 - 1; ++k) num = num * (t(i1) - t(i1 - k));
    for (std::size_t k = 2; k <= j1; ++k) den = den * (t(i1 - 1) - t(i1 - k));
    return num / den;
}

// Closed-form Neville multiplier mt(i,j) of A^T, 0-based with j < i < order.
template <Scalar S>
S transpose_multiplier(const NodeSet<S>& nodes, std::size_t i, std::size_t j) {
    detail::check_pair(nodes.size(), i, j);
    const std::size_t n = nodes.degree();
    const auto [u, h, L, even] = detail::bd_layout(n);
    const std::size_t i1 = i + 1, j1 = j + 1;
    auto t = [&](std::size_t k) -> const S& { return nodes[k - 1]; };
    const S one = scalar_traits<S>::one();

    if (i1 <= u)
        return scalar_traits<S>::from_ratio(L + static_cast<long long>(i1) - 1,
                                            static_cast<long long>(i1) - 1) *
               t(j1);
    if (i1 == u + 1) {
        S den = one;
        for (std::size_t k = 1; k <= j1; ++k) den = den * (one - t(k));
        S v = t(j1) / den;
        if (even) v = scalar_traits<S>::from_ratio(2, 1) * v;
        return v;
    }
    const long long nu = static_cast<long long>(n) - static_cast<long long>(i1) + 2;
    const S aux = scalar_traits<S>::from_ratio(nu, L + nu);
    if (j1 + h <= i1 - 1) return aux / (one - t(j1));
    return aux * (t(j1) / (one - t(j1)));
}

// Closed-form diagonal pivot p(i) of the Neville elimination of A, 0-based.
template <Scalar S>
S pivot(const NodeSet<S>& nodes, std::size_t i) {
    if (i >= nodes.size())
        throw format_error("pivot index " + std::to_string(i) + " out of range for order " +
                           std::to_string(nodes.size()));
    const std::size_t n = nodes.degree();
    const auto [u, h, L, even] = detail::bd_layout(n);
    const std::size_t i1 = i + 1;
    auto t = [&](std::size_t k) -> const S& { return nodes[k - 1]; };
    const S one = scalar_traits<S>::one();

    S v;
    if (i1 <= u) {
        v = binomial_as<S>(static_cast<unsigned long>(L) + i1 - 1, i1 - 1) *
            power(one - t(i1), h);
    } else {
        v = binomial_as<S>(static_cast<unsigned long>(L) + n - i1 + 1, n - i1 + 1) *
            power(one - t(i1), n - i1 + 1);
        for (std::size_t k = 1; k <= i1 - 1; ++k) v = v / (one - t(k));
    }
    for (std::size_t k = 1; k <= i1 - 1; ++k) v = v * (t(i1) - t(k));
    return v;
}

// det A as the squared-binomial prefactor times the Vandermonde product of
// node differences; the even case carries the extra central C(n, n/2).
template <Scalar S>
S determinant_closed_form(const NodeSet<S>& nodes) {
    const std::size_t n = nodes.degree();
    Rational pref(1);
    if (n % 2 == 1) {
        for (unsigned long k = 0; 2 * k + 1 <= n; ++k) {
            const Rational b = binomial_rational((n - 1) / 2 + k, k);
            pref *= b * b;
        }
    } else {
        for (unsigned long k = 0; 2 * k < n; ++k) {
            const Rational b = binomial_rational(n / 2 + k, k);
            pref *= b * b;
        }
        pref *= binomial_rational(n, n / 2);
    }
    S det = scalar_traits<S>::from_rational(pref);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            det = det * (nodes[j] - nodes[i]);
    return det;
}

} // namespace sbv
