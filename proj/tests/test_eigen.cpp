#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sbv/bd.hpp"
#include "sbv/eigen.hpp"
#include "sbv/errors.hpp"
#include "sbv/tn_ops.hpp"

#include <cmath>
#include <random>

using namespace sbv;
using sbv::testing::random_rational_nodes;

namespace {

Matrix<double> diag(std::initializer_list<double> values) {
    Matrix<double> m(values.size(), values.size());
    std::size_t i = 0;
    for (double v : values) m(i, i) = v, ++i;
    return m;
}

} // namespace

TEST_CASE("identity and triangular inputs") {
    const auto id = qr_eigen(Matrix<double>::identity(3));
    REQUIRE(id.size() == 3);
    for (double v : id) CHECK(v == 1.0);

    const auto d = qr_eigen(diag({3.0, 2.0, 1.0}));
    CHECK(d == std::vector<double>{3.0, 2.0, 1.0});
}

TEST_CASE("2x2 closed-form spectrum") {
    Matrix<double> a(2, 2);
    a(0, 0) = 0.75;
    a(0, 1) = 0.25;
    a(1, 0) = 0.5;
    a(1, 1) = 0.5;
    const auto e = qr_eigen(a); // trace 5/4, determinant 1/4
    REQUIRE(e.size() == 2);
    CHECK(std::abs(e[0] - 1.0) <= 4e-16);
    CHECK(std::abs(e[1] - 0.25) <= 4e-16);
}

TEST_CASE("similarity-transformed triangular matrix") {
    std::mt19937_64 rng(41);
    const std::size_t n = 8;
    Matrix<double> t(n, n);
    std::vector<double> expected;
    for (std::size_t i = 0; i < n; ++i) {
        t(i, i) = 1.0 + static_cast<double>(i) + static_cast<double>(rng() % 100) / 1000.0;
        expected.push_back(t(i, i));
        for (std::size_t j = i + 1; j < n; ++j)
            t(i, j) = -1.0 + static_cast<double>(rng() % 2000) / 1000.0;
    }
    // Givens similarity preserves the spectrum while filling the lower part.
    const double c = std::cos(0.7), s = std::sin(0.7);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = t(k, j), y = t(k + 1, j);
            t(k, j) = c * x + s * y;
            t(k + 1, j) = -s * x + c * y;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double x = t(i, k), y = t(i, k + 1);
            t(i, k) = c * x + s * y;
            t(i, k + 1) = -s * x + c * y;
        }
    }
    auto eigs = qr_eigen(t);
    std::sort(expected.begin(), expected.end(), std::greater<>());
    REQUIRE(eigs.size() == expected.size());
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(eigs[i] - expected[i]) <= 1e-10 * std::abs(expected[i]));
}

TEST_CASE("complex spectrum is rejected") {
    Matrix<double> rot(2, 2);
    rot(0, 1) = -1.0;
    rot(1, 0) = 1.0;
    CHECK_THROWS_AS(qr_eigen(rot), numeric_error);
}

TEST_CASE("spectrum of the 2x2 collocation matrix") {
    const auto bd =
        decompose(to_double_nodes(NodeSet<Rational>({Rational(1, 4), Rational(1, 2)})));
    const auto spec = eigenvalues(bd);
    REQUIRE(spec.values.size() == 2);
    CHECK(std::abs(spec.values[0] - 1.0) <= 1e-15);
    CHECK(std::abs(spec.values[1] - 0.25) <= 1e-15);
    CHECK_FALSE(spec.relative_errors.has_value());
}

TEST_CASE("spectrum invariants on random node sets") {
    std::mt19937_64 rng(42);
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto nodes = to_double_nodes(random_rational_nodes(rng, n));
        const auto bd = decompose(nodes);
        const auto spec = eigenvalues(bd);
        REQUIRE(spec.values.size() == n + 1);

        for (std::size_t i = 0; i + 1 < spec.values.size(); ++i)
            REQUIRE(spec.values[i] >= spec.values[i + 1]); // sorted descending
        for (double v : spec.values) REQUIRE(v > 0.0);

        // the rows sum to one, so 1 is always an eigenvalue
        double dist_to_one = 1e300;
        for (double v : spec.values) dist_to_one = std::min(dist_to_one, std::abs(v - 1.0));
        CHECK(dist_to_one <= 1e-12);

        // trace and determinant cross-checks against independent routes
        const auto a = reconstruct(bd);
        double trace = 0.0;
        for (std::size_t i = 0; i <= n; ++i) trace += a(i, i);
        double sum = 0.0, prod = 1.0;
        for (double v : spec.values) sum += v, prod *= v;
        CHECK(std::abs(sum - trace) <= 1e-12 * std::abs(trace));
        const double pivot_product = bd.det();
        CHECK(std::abs(prod - pivot_product) <= 1e-10 * std::abs(pivot_product));
    }
}

TEST_CASE("spectral norm") {
    CHECK(spectral_norm(diag({3.0, -4.0})) == doctest::Approx(4.0).epsilon(1e-12));
    Matrix<double> shear(2, 2);
    shear(0, 1) = 2.0; // singular values {2, 0}
    CHECK(spectral_norm(shear) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(spectral_norm(Matrix<double>::identity(5)) == doctest::Approx(1.0).epsilon(1e-12));
}
