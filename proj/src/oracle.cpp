#include "sbv/oracle.hpp"

#include "sbv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace sbv {

NevilleRecord neville_eliminate(Matrix<Rational> a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw format_error("Neville elimination requires a square matrix");
    NevilleRecord rec{Matrix<Rational>(n, n), Matrix<Rational>(n, n), Matrix<Rational>(n, n), true};
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = col; i < n; ++i) rec.pivots(i, col) = a(i, col);
        for (std::size_t i = n; i-- > col + 1;) { // bottom-up, so row i-1 is still A_t
            const Rational& target = a(i, col);
            if (target.is_zero()) continue; // multiplier 0, no row operation
            const Rational& above = a(i - 1, col);
            if (above.is_zero())
                throw numeric_error("Neville elimination requires a row exchange at column " +
                                    std::to_string(col + 1));
            const Rational mult = target / above;
            rec.multipliers(i, col) = mult;
            for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= mult * a(i - 1, j);
            a(i, col) = Rational(0);
        }
    }
    rec.upper = std::move(a);
    return rec;
}

OracleDecomposition neville_bd(const Matrix<Rational>& a) {
    const std::size_t n = a.rows();
    OracleDecomposition out{neville_eliminate(a),
                            BDFactorization<Rational>{n, (n - 1) % 2 == 1 ? Parity::odd : Parity::even,
                                                      Matrix<Rational>(n, n)}};
    // Completing the elimination on U^T yields the multipliers of the
    // elimination of A^T (they coincide; asserted against the direct route in
    // the tests).
    const NevilleRecord upper = neville_eliminate(transpose(out.record.upper));
    auto& b = out.bd.entries;
    for (std::size_t i = 0; i < n; ++i) b(i, i) = out.record.pivots(i, i);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            b(i, j) = out.record.multipliers(i, j);
            b(j, i) = upper.multipliers(i, j);
        }
    return out;
}

Vector<Rational> exact_solve(const Matrix<Rational>& m, const Vector<Rational>& b) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw format_error("exact_solve requires a square matrix");
    if (b.size() != n)
        throw format_error("right-hand side has length " + std::to_string(b.size()) +
                           ", expected " + std::to_string(n));
    Matrix<Rational> a = m;
    Vector<Rational> rhs = b;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(perm[piv], col).is_zero()) ++piv;
        if (piv == n) throw numeric_error("exact_solve: singular matrix");
        std::swap(perm[col], perm[piv]);
        const Rational& d = a(perm[col], col);
        for (std::size_t i = col + 1; i < n; ++i) {
            const Rational f = a(perm[i], col) / d;
            if (f.is_zero()) continue;
            for (std::size_t j = col + 1; j < n; ++j) a(perm[i], j) -= f * a(perm[col], j);
            rhs[perm[i]] -= f * rhs[perm[col]];
            a(perm[i], col) = Rational(0);
        }
    }
    Vector<Rational> x(n, Rational(0));
    for (std::size_t col = n; col-- > 0;) {
        Rational acc = rhs[perm[col]];
        for (std::size_t j = col + 1; j < n; ++j) acc -= a(perm[col], j) * x[j];
        x[col] = acc / a(perm[col], col);
    }
    return x;
}

// ---------------------------------------------------------------------------
// polynomials

namespace {

Poly trimmed(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly poly_rem(Poly num, const Poly& den) {
    num = trimmed(std::move(num));
    const Poly d = trimmed(den);
    if (d.empty()) throw numeric_error("polynomial division by zero");
    while (num.size() >= d.size()) {
        const Rational f = num.back() / d.back();
        const std::size_t off = num.size() - d.size();
        for (std::size_t k = 0; k < d.size(); ++k) num[off + k] -= f * d[k];
        num.pop_back();
        num = trimmed(std::move(num));
    }
    return num;
}

// Exact quotient num / den; the remainder must vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
    num = trimmed(std::move(num));
    const Poly d = trimmed(den);
    if (d.empty()) throw numeric_error("polynomial division by zero");
    if (num.size() < d.size()) throw numeric_error("poly_div_exact: quotient is not polynomial");
    Poly q(num.size() - d.size() + 1, Rational(0));
    while (num.size() >= d.size()) {
        const Rational f = num.back() / d.back();
        const std::size_t off = num.size() - d.size();
        q[off] = f;
        for (std::size_t k = 0; k < d.size(); ++k) num[off + k] -= f * d[k];
        num.pop_back();
        num = trimmed(std::move(num));
    }
    if (!num.empty()) throw numeric_error("poly_div_exact: nonzero remainder");
    return q;
}

// Positive rescale to a primitive integer polynomial; root set and all signs
// are unchanged.
Poly primitive(Poly p) {
    p = trimmed(std::move(p));
    if (p.empty()) return p;
    mpz_class den_lcm(1);
    for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                    c.raw().get_den().get_mpz_t());
    mpz_class num_gcd(0);
    for (const auto& c : p) {
        mpz_class scaled = c.raw().get_num() * (den_lcm / c.raw().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    if (num_gcd == 0) return p;
    const Rational scale{mpq_class(den_lcm) / mpq_class(num_gcd)};
    for (auto& c : p) c *= scale;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    a = trimmed(std::move(a));
    b = trimmed(std::move(b));
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = primitive(std::move(r));
    }
    return a;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(primitive(p));
    chain.push_back(primitive(poly_derivative(p)));
    while (poly_degree(chain.back()) > 0) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        r = trimmed(std::move(r));
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(primitive(std::move(r)));
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int variations = 0, prev = 0;
    for (const auto& q : chain) {
        const int s = poly_eval(q, x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

// Midpoint of (lo, hi) adjusted to avoid the finitely many roots of p.
Rational nonroot_midpoint(const Poly& p, const Rational& lo, const Rational& hi) {
    const Rational two(2);
    Rational mid = (lo + hi) / two;
    Rational step = (hi - lo) / Rational(4);
    while (poly_eval(p, mid).is_zero()) {
        mid += step;
        step /= two;
    }
    return mid;
}

Rational cauchy_bound(const Poly& p) {
    Rational maxabs(0);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        const Rational a = (p[k] / p.back()).abs();
        if (a > maxabs) maxabs = a;
    }
    return Rational(1) + maxabs;
}

IsolatedRoot bisect_once(const Poly& p, const IsolatedRoot& iv) {
    const Rational mid = nonroot_midpoint(p, iv.lo, iv.hi);
    const int slo = poly_eval(p, iv.lo).sign();
    if (slo * poly_eval(p, mid).sign() < 0) return {iv.lo, mid};
    return {mid, iv.hi};
}

} // namespace

int poly_degree(const Poly& p) {
    for (std::size_t k = p.size(); k-- > 0;)
        if (!p[k].is_zero()) return static_cast<int>(k);
    return -1;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Rational(static_cast<long long>(k)) * p[k]);
    return d;
}

Poly char_poly(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw format_error("char_poly requires a square matrix");
    auto trace = [&](const Matrix<Rational>& mm) {
        Rational t(0);
        for (std::size_t i = 0; i < mm.rows(); ++i) t += mm(i, i);
        return t;
    };
    Poly c(n + 1, Rational(0));
    c[n] = Rational(1);
    Matrix<Rational> b = m;
    c[n - 1] = -trace(b);
    for (std::size_t k = 2; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) b(i, i) += c[n - k + 1];
        b = mat_mul(m, b);
        c[n - k] = -(trace(b) / Rational(static_cast<long long>(k)));
    }
    return c;
}

std::vector<IsolatedRoot> isolate_real_roots(const Poly& p_in, const Rational& tol) {
    const Poly p = trimmed(p_in);
    if (poly_degree(p) <= 0) return {};
    {
        const Poly g = poly_gcd(p, poly_derivative(p));
        if (poly_degree(g) > 0)
            throw numeric_error("isolate_real_roots requires a squarefree polynomial");
    }
    const auto chain = sturm_chain(p);
    const Rational bound = cauchy_bound(p);

    struct Segment {
        Rational lo, hi;
        int roots;
    };
    std::deque<Segment> queue;
    {
        const Rational lo = -bound, hi = bound;
        const int count = sign_variations(chain, lo) - sign_variations(chain, hi);
        if (count > 0) queue.push_back({lo, hi, count});
    }
    std::vector<IsolatedRoot> roots;
    while (!queue.empty()) {
        const Segment seg = queue.front();
        queue.pop_front();
        if (seg.roots == 1) {
            roots.push_back({seg.lo, seg.hi});
            continue;
        }
        const Rational mid = nonroot_midpoint(p, seg.lo, seg.hi);
        const int left = sign_variations(chain, seg.lo) - sign_variations(chain, mid);
        const int right = seg.roots - left;
        if (left > 0) queue.push_back({seg.lo, mid, left});
        if (right > 0) queue.push_back({mid, seg.hi, right});
    }
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });

    for (auto& r : roots) {
        while (true) {
            const Rational width = r.hi - r.lo;
            Rational target = r.mid().abs();
            if (target < Rational(1)) target = Rational(1);
            if (width <= tol * target) break;
            r = bisect_once(p, r);
        }
    }
    return roots;
}

IsolatedRoot refine_to_relative(const Poly& p, IsolatedRoot root, const Rational& rel) {
    if (root.hi.sign() <= 0)
        throw numeric_error("refine_to_relative requires a positive root");
    while (root.lo.sign() <= 0 || root.hi - root.lo > rel * root.lo)
        root = bisect_once(p, root);
    return root;
}

double condition_2(const Matrix<Rational>& m, int digits) {
    if (m.rows() != m.cols()) throw format_error("condition_2 requires a square matrix");
    const Matrix<Rational> gram = mat_mul(transpose(m), m);
    Poly p = char_poly(gram);
    if (p.front().is_zero()) throw numeric_error("condition_2: singular matrix");
    // Repeated singular values make the characteristic polynomial non-
    // squarefree; the squarefree part has the same root set.
    {
        const Poly g = poly_gcd(p, poly_derivative(p));
        if (poly_degree(g) > 0) p = poly_div_exact(p, g);
    }
    auto roots = isolate_real_roots(p, Rational(1, 4));
    if (roots.empty()) throw numeric_error("condition_2: no real eigenvalues found");

    const Rational guard = Rational(1) / power(Rational(10), static_cast<std::size_t>(digits + 3));
    const IsolatedRoot smallest = refine_to_relative(p, roots.front(), guard);
    const IsolatedRoot largest = refine_to_relative(p, roots.back(), guard);
    const double lo = std::sqrt((largest.lo / smallest.hi).to_double());
    const double hi = std::sqrt((largest.hi / smallest.lo).to_double());
    return (lo + hi) / 2.0;
}

double relative_error_vs_exact(const Vector<double>& x, const Vector<Rational>& x_exact) {
    if (x.size() != x_exact.size())
        throw format_error("relative_error_vs_exact: length mismatch");
    Rational diff2(0), ref2(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Rational d = Rational::from_double(x[i]) - x_exact[i];
        diff2 += d * d;
        ref2 += x_exact[i] * x_exact[i];
    }
    if (ref2.is_zero()) throw numeric_error("relative_error_vs_exact: zero reference");
    return std::sqrt((diff2 / ref2).to_double());
}

Matrix<double> to_double_matrix(const Matrix<Rational>& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

Vector<double> to_double_vector(const Vector<Rational>& v) {
    Vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_double();
    return out;
}

} // namespace sbv
