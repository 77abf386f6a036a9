#pragma once

#include "sbv/bd.hpp"
#include "sbv/matrix.hpp"

#include <optional>
#include <vector>

namespace sbv {

struct Spectrum {
    std::vector<double> values; // descending
    // Per-eigenvalue relative error against the exact oracle, same order as
    // `values`; filled only when verification was requested.
    std::optional<std::vector<double>> relative_errors;
};

// Eigenvalues of a real square matrix: Householder reduction to Hessenberg
// form, then Wilkinson-shifted QR with deflation. The spectrum must be real;
// a trailing 2x2 block with complex roots raises numeric_error, as does
// exceeding `max_iter` QR steps for a single eigenvalue.
std::vector<double> qr_eigen(const Matrix<double>& m, int max_iter = 100);

// Spectrum of the collocation matrix represented by `bd`: subtraction-free
// reconstruction followed by the QR baseline. Sorted descending; strict
// positivity is checked on every output.
Spectrum eigenvalues(const BDFactorization<double>& bd);

// Largest singular value, via the symmetric eigenproblem for M^T M.
double spectral_norm(const Matrix<double>& m);

} // namespace sbv
