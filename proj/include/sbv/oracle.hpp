#pragma once

#include "sbv/bd.hpp"
#include "sbv/matrix.hpp"
#include "sbv/rational.hpp"

#include <cstddef>
#include <vector>

namespace sbv {

// Ground truth in exact rational arithmetic. Everything here favours
// robustness and certifiability over speed; inputs are expected at desk scale
// (order <= ~20, see kOracleMaxOrder).
inline constexpr std::size_t kOracleMaxOrder = 20;

// Tables produced by one-sided Neville elimination: pivots p(i,j) (j <= i)
// and multipliers m(i,j) (j < i), both 0-based lower triangular, plus the
// surviving upper triangular factor.
struct NevilleRecord {
    Matrix<Rational> pivots;
    Matrix<Rational> multipliers;
    Matrix<Rational> upper;
    bool exchange_free = true;
};

// Eliminates with the row below subtracting a multiple of the row above.
// An entry that is already zero gets multiplier 0 and no row operation; a
// nonzero entry above a zero one means a row exchange would be required,
// which raises numeric_error.
NevilleRecord neville_eliminate(Matrix<Rational> a);

struct OracleDecomposition {
    NevilleRecord record; // elimination of A itself
    BDFactorization<Rational> bd;
};

// Complete Neville elimination: eliminate A, then the transpose of the
// resulting upper triangular factor; packs multipliers and diagonal pivots in
// the same layout as decompose().
OracleDecomposition neville_bd(const Matrix<Rational>& a);

// Exact solution of M x = b by rational Gaussian elimination.
Vector<Rational> exact_solve(const Matrix<Rational>& m, const Vector<Rational>& b);

// Polynomials are coefficient vectors, ascending degree.
using Poly = std::vector<Rational>;

int poly_degree(const Poly& p); // -1 for the zero polynomial
Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_derivative(const Poly& p);

// Coefficients of det(lambda I - M), monic, exact (Faddeev-LeVerrier).
Poly char_poly(const Matrix<Rational>& m);

// Open-bounded interval (lo, hi) containing exactly one real root, with
// p(lo) and p(hi) nonzero and of opposite signs.
struct IsolatedRoot {
    Rational lo, hi;
    Rational mid() const { return (lo + hi) / Rational(2); }
};

// Sturm-sequence isolation of all real roots of a squarefree polynomial,
// each interval refined to width <= tol * max(1, |root|). Roots are returned
// in increasing order with pairwise disjoint intervals. Raises numeric_error
// when gcd(p, p') is nonconstant.
std::vector<IsolatedRoot> isolate_real_roots(const Poly& p, const Rational& tol);

// Shrinks an isolating interval until hi - lo <= rel * lo. Requires the
// bracketed root to be positive.
IsolatedRoot refine_to_relative(const Poly& p, IsolatedRoot root, const Rational& rel);

// kappa_2(M) = sqrt(lambda_max / lambda_min) of M^T M, with the extreme
// eigenvalues certified by exact root isolation; correct to `digits`
// significant digits.
double condition_2(const Matrix<Rational>& m, int digits);

// ||x - x_exact||_2 / ||x_exact||_2 with the difference accumulated exactly.
double relative_error_vs_exact(const Vector<double>& x, const Vector<Rational>& x_exact);

// Entrywise conversion helpers between the exact and floating worlds.
Matrix<double> to_double_matrix(const Matrix<Rational>& m);
Vector<double> to_double_vector(const Vector<Rational>& v);

} // namespace sbv
