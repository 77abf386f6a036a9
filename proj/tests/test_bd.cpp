#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sbv/bd.hpp"
#include "sbv/errors.hpp"
#include "sbv/io.hpp"
#include "sbv/oracle.hpp"
#include "sbv/sb_basis.hpp"

#include <cmath>
#include <random>

using namespace sbv;
using sbv::testing::random_rational_nodes;

namespace {

NodeSet<Rational> quarters() { return NodeSet<Rational>({Rational(1, 4), Rational(1, 2)}); }

NodeSet<Rational> fifths() {
    return NodeSet<Rational>({Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)});
}

} // namespace

TEST_CASE("2x2 closed form") {
    const auto bd = decompose(quarters());
    CHECK(bd.order == 2);
    CHECK(bd.parity == Parity::odd);
    CHECK(bd.m(1, 0) == Rational(2, 3));
    CHECK(bd.mt(1, 0) == Rational(1, 3));
    CHECK(bd.pivot(0) == Rational(3, 4));
    CHECK(bd.pivot(1) == Rational(1, 3));
}

TEST_CASE("degree-3 hand-evaluated entries") {
    const auto bd = decompose(fifths());
    CHECK(bd.m(1, 0) == Rational(9, 16));
    CHECK(bd.m(2, 1) == Rational(4, 9));
    CHECK(bd.mt(2, 0) == Rational(1, 4));
    CHECK(bd.mt(2, 1) == Rational(5, 6));
    CHECK(bd.mt(1, 0) == Rational(2, 5));
    CHECK(bd.pivot(0) == Rational(16, 25));
    CHECK(bd.pivot(1) == Rational(18, 125));
}

TEST_CASE("closed-form queries match the hand values") {
    const auto nodes = fifths();
    CHECK(multiplier(nodes, 1, 0) == Rational(9, 16));
    CHECK(multiplier(nodes, 2, 1) == Rational(4, 9));
    CHECK(transpose_multiplier(nodes, 2, 0) == Rational(1, 4));
    CHECK(transpose_multiplier(nodes, 2, 1) == Rational(5, 6));
    CHECK(transpose_multiplier(nodes, 1, 0) == Rational(2, 5));
    CHECK(pivot(nodes, 0) == Rational(16, 25));
    CHECK(pivot(nodes, 1) == Rational(18, 125));
    const auto q = quarters();
    CHECK(multiplier(q, 1, 0) == Rational(2, 3));
    CHECK(transpose_multiplier(q, 1, 0) == Rational(1, 3));
    CHECK(pivot(q, 0) == Rational(3, 4));
}

TEST_CASE("index validation") {
    const auto nodes = fifths();
    CHECK_THROWS_AS(multiplier(nodes, 0, 0), format_error);
    CHECK_THROWS_AS(multiplier(nodes, 4, 0), format_error);
    CHECK_THROWS_AS(transpose_multiplier(nodes, 1, 2), format_error);
    CHECK_THROWS_AS(pivot(nodes, 4), format_error);
}

TEST_CASE("decompose equals the closed forms, exactly over rationals") {
    std::mt19937_64 rng(21);
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto nodes = random_rational_nodes(rng, n);
        const auto bd = decompose(nodes);
        for (std::size_t i = 0; i < bd.order; ++i) {
            REQUIRE(bd.pivot(i) == pivot(nodes, i));
            for (std::size_t j = 0; j < i; ++j) {
                REQUIRE(bd.m(i, j) == multiplier(nodes, i, j));
                REQUIRE(bd.mt(i, j) == transpose_multiplier(nodes, i, j));
            }
        }
    }
}

TEST_CASE("decompose equals the closed forms within 1e-13 in floating point") {
    std::mt19937_64 rng(22);
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto exact = random_rational_nodes(rng, n);
        const auto nodes = to_double_nodes(exact);
        const auto bd = decompose(nodes);
        for (std::size_t i = 0; i < bd.order; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                const double lhs = j == i ? bd.pivot(i) : bd.m(i, j);
                const double rhs = j == i ? pivot(nodes, i) : multiplier(nodes, i, j);
                REQUIRE(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));
                if (j < i) {
                    const double l2 = bd.mt(i, j), r2 = transpose_multiplier(nodes, i, j);
                    REQUIRE(std::abs(l2 - r2) <= 1e-13 * std::abs(r2));
                }
            }
        }
    }
}

TEST_CASE("decompose equals exact Neville elimination, both parities") {
    std::mt19937_64 rng(23);
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto nodes = random_rational_nodes(rng, n);
        const auto bd = decompose(nodes);
        const auto oracle = neville_bd(build_matrix(nodes));
        REQUIRE(bd.entries == oracle.bd.entries);
    }
}

TEST_CASE("all entries strictly positive") {
    std::mt19937_64 rng(24);
    for (int k = 0; k < 20; ++k) {
        const auto nodes = random_rational_nodes(rng, 1 + rng() % 10);
        const auto bd = decompose(nodes);
        for (const auto& e : bd.entries.data()) REQUIRE(e.sign() > 0);
    }
}

TEST_CASE("determinant closed form") {
    CHECK(determinant_closed_form(quarters()) == Rational(1, 4));
    const NodeSet<Rational> even_nodes({Rational(1, 4), Rational(1, 2), Rational(3, 4)});
    CHECK(determinant_closed_form(even_nodes) == Rational(1, 16));
    // independent route: cofactor expansion of the exact 3x3 matrix
    const auto a = build_matrix(even_nodes);
    const Rational det3 = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                          a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                          a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    CHECK(det3 == Rational(1, 16));
}

TEST_CASE("pivot product equals the determinant closed form") {
    std::mt19937_64 rng(25);
    for (std::size_t n = 0; n <= 10; ++n) {
        const auto nodes = random_rational_nodes(rng, n);
        CHECK(decompose(nodes).det() == determinant_closed_form(nodes));
    }
}

TEST_CASE("single node") {
    const NodeSet<Rational> one_node({Rational(3, 7)});
    const auto bd = decompose(one_node);
    CHECK(bd.order == 1);
    CHECK(bd.pivot(0) == Rational(1));
    CHECK(determinant_closed_form(one_node) == Rational(1));
    CHECK(build_matrix(one_node)(0, 0) == Rational(1));
}

TEST_CASE("instrumented decompose matches plain double bit for bit") {
    std::mt19937_64 rng(26);
    for (std::size_t n : {3u, 6u, 9u}) {
        const auto exact = random_rational_nodes(rng, n);
        const auto nodes = to_double_nodes(exact);
        const auto plain = decompose(nodes);
        TraceSession session;
        const auto traced = decompose(to_tracked_nodes(nodes));
        for (std::size_t i = 0; i < plain.order; ++i)
            for (std::size_t j = 0; j < plain.order; ++j)
                REQUIRE(traced.entries(i, j).value() == plain.entries(i, j));
    }
}

TEST_CASE("decompose passes the subtraction audit") {
    std::mt19937_64 rng(27);
    for (std::size_t n : {4u, 7u, 8u, 11u}) {
        const auto nodes = to_double_nodes(random_rational_nodes(rng, n));
        TraceSession session;
        (void)decompose(to_tracked_nodes(nodes));
        const auto report = audit_subtractions(session.trace(), decompose_policy());
        CHECK(report.pass);
        CHECK(report.events_checked == session.counts().subs);
        CHECK(report.events_checked > 0);
    }
}

TEST_CASE("serialization round trip") {
    std::mt19937_64 rng(28);
    const auto exact_nodes = random_rational_nodes(rng, 5);
    SUBCASE("float") {
        const auto bd = decompose(to_double_nodes(exact_nodes));
        const auto back = bd_from_json_double(bd_to_json(bd));
        CHECK(back.order == bd.order);
        CHECK(back.parity == bd.parity);
        CHECK(back.entries == bd.entries);
    }
    SUBCASE("exact") {
        const auto bd = decompose(exact_nodes);
        const auto back = bd_from_json_rational(bd_to_json(bd));
        CHECK(back.entries == bd.entries);
    }
    SUBCASE("malformed") {
        CHECK_THROWS_AS(bd_from_json_double(nlohmann::json{{"order", 2}}), format_error);
        CHECK_THROWS_AS(bd_from_json_double(nlohmann::json{
                            {"order", 2}, {"parity", "odd"}, {"rows", {1.0, 2.0}}}),
                        format_error);
        CHECK_THROWS_AS(bd_from_json_double(nlohmann::json{
                            {"order", 2}, {"parity", "even"}, {"rows", {1.0, 2.0, 3.0, 4.0}}}),
                        format_error);
    }
}
