#include "sbv/eigen.hpp"

#include "sbv/errors.hpp"
#include "sbv/tn_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sbv {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

void hessenberg_reduce(Matrix<double>& h) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    std::vector<double> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - (k + 1); // length of the Householder vector
        double norm = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = h(k + 1 + i, k);
            norm += v[i] * v[i];
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = v[0] >= 0.0 ? -norm : norm;
        v[0] -= alpha;
        double vnorm = 0.0;
        for (std::size_t i = 0; i < m; ++i) vnorm += v[i] * v[i];
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) continue;
        for (std::size_t i = 0; i < m; ++i) v[i] /= vnorm;
        // (I - 2vv^T) H (I - 2vv^T)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < m; ++i) s += v[i] * h(k + 1 + i, j);
            for (std::size_t i = 0; i < m; ++i) h(k + 1 + i, j) -= 2.0 * s * v[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) s += v[j] * h(i, k + 1 + j);
            for (std::size_t j = 0; j < m; ++j) h(i, k + 1 + j) -= 2.0 * s * v[j];
        }
    }
}

// Real eigenvalues of the trailing 2x2 [[a,b],[c,d]]; nullopt when complex.
struct Pair2 {
    double l1, l2;
};
std::optional<Pair2> eig2(double a, double b, double c, double d) {
    const double half_diff = (a - d) / 2.0;
    const double disc = half_diff * half_diff + b * c;
    if (disc < 0.0) return std::nullopt;
    const double s = std::sqrt(disc);
    const double mid = (a + d) / 2.0;
    return Pair2{mid + s, mid - s};
}

} // namespace

std::vector<double> qr_eigen(const Matrix<double>& m, int max_iter) {
    if (m.rows() != m.cols()) throw format_error("qr_eigen requires a square matrix");
    const std::size_t n = m.rows();
    std::vector<double> eigs;
    eigs.reserve(n);
    if (n == 0) return eigs;

    Matrix<double> h = m;
    hessenberg_reduce(h);

    std::size_t hi = n - 1;
    int iters = 0;
    while (true) {
        if (hi == 0) {
            eigs.push_back(h(0, 0));
            break;
        }
        // Deflate any negligible subdiagonal entry.
        bool deflated = false;
        for (std::size_t k = hi; k >= 1; --k) {
            if (std::abs(h(k, k - 1)) <=
                kUnitRoundoff * (std::abs(h(k - 1, k - 1)) + std::abs(h(k, k)))) {
                h(k, k - 1) = 0.0;
                if (k == hi) {
                    eigs.push_back(h(hi, hi));
                    --hi;
                    iters = 0;
                    deflated = true;
                }
                break;
            }
        }
        if (deflated) continue;

        std::size_t lo = 0;
        for (std::size_t k = hi; k >= 1; --k) {
            if (h(k, k - 1) == 0.0) {
                lo = k;
                break;
            }
        }
        if (hi - lo == 1) {
            const auto p = eig2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
            if (!p)
                throw numeric_error("QR: trailing 2x2 block has complex eigenvalues");
            eigs.push_back(p->l1);
            eigs.push_back(p->l2);
            if (hi < 2) break;
            hi -= 2;
            iters = 0;
            continue;
        }

        if (++iters > max_iter)
            throw numeric_error("QR did not converge within " + std::to_string(max_iter) +
                                " iterations per eigenvalue");

        // Wilkinson shift: the eigenvalue of the trailing 2x2 closest to the
        // corner entry; the real part when that block is numerically complex.
        double mu;
        if (const auto p = eig2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi))) {
            mu = std::abs(p->l1 - h(hi, hi)) < std::abs(p->l2 - h(hi, hi)) ? p->l1 : p->l2;
        } else {
            mu = (h(hi - 1, hi - 1) + h(hi, hi)) / 2.0;
        }

        // One shifted QR sweep on the active window via Givens rotations.
        for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;
        std::vector<double> cs(hi), sn(hi);
        for (std::size_t k = lo; k < hi; ++k) {
            const double xa = h(k, k), xb = h(k + 1, k);
            const double r = std::hypot(xa, xb);
            if (r == 0.0) {
                cs[k] = 1.0;
                sn[k] = 0.0;
                continue;
            }
            cs[k] = xa / r;
            sn[k] = xb / r;
            for (std::size_t j = k; j <= hi; ++j) {
                const double t1 = h(k, j), t2 = h(k + 1, j);
                h(k, j) = cs[k] * t1 + sn[k] * t2;
                h(k + 1, j) = -sn[k] * t1 + cs[k] * t2;
            }
        }
        for (std::size_t k = lo; k < hi; ++k) {
            const std::size_t top = std::min(k + 2, hi);
            for (std::size_t i = lo; i <= top; ++i) {
                const double t1 = h(i, k), t2 = h(i, k + 1);
                h(i, k) = cs[k] * t1 + sn[k] * t2;
                h(i, k + 1) = -sn[k] * t1 + cs[k] * t2;
            }
        }
        for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
    }

    std::sort(eigs.begin(), eigs.end(), std::greater<>());
    return eigs;
}

Spectrum eigenvalues(const BDFactorization<double>& bd) {
    Spectrum s;
    s.values = qr_eigen(reconstruct(bd));
    for (double v : s.values)
        if (!(v > 0.0))
            throw numeric_error("spectrum of a strictly totally positive matrix "
                                "must be strictly positive");
    return s;
}

double spectral_norm(const Matrix<double>& m) {
    const auto gram = mat_mul(transpose(m), m);
    const auto eigs = qr_eigen(gram);
    double lmax = 0.0;
    for (double v : eigs) lmax = std::max(lmax, v);
    return std::sqrt(std::max(lmax, 0.0));
}

} // namespace sbv
