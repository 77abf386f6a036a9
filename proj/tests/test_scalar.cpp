#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbv/errors.hpp"
#include "sbv/instrumented.hpp"
#include "sbv/rational.hpp"
#include "sbv/scalar.hpp"

#include <random>

using namespace sbv;

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("1/16") == Rational(1, 16));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("20/21") == Rational(20, 21));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("-0.125") == Rational(-1, 8));
    CHECK(Rational::parse("0.1") == Rational(1, 10)); // exact, unlike the double 0.1
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("2/4").str() == "1/2");
}

TEST_CASE("rational parse errors") {
    for (const char* bad : {"", "-", "1/0", "abc", "1.2.3", "+5", "1 / 2", "--1", "1/-2",
                            "1e-3", "0x10", "3/", "/3", "."})
        CHECK_THROWS_AS(Rational::parse(bad), format_error);
}

TEST_CASE("print/parse round trip") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 500; ++k) {
        const long long num = static_cast<long long>(rng() % 2000001) - 1000000;
        const long long den = 1 + static_cast<long long>(rng() % 999983);
        const Rational r(num, den);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("field behaviour") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        const Rational a(static_cast<long long>(rng() % 20001) - 10000,
                         1 + static_cast<long long>(rng() % 997));
        const Rational b(static_cast<long long>(rng() % 20001) - 10000,
                         1 + static_cast<long long>(rng() % 997));
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), numeric_error);
    CHECK_THROWS_AS(Rational(1, 0), format_error);
}

TEST_CASE("conversion to double is nearest") {
    CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
    CHECK(Rational(1, 10).to_double() == 0.1);
    CHECK(Rational(2, 3).to_double() == 2.0 / 3.0);
    std::mt19937_64 rng(99);
    for (int k = 0; k < 500; ++k) {
        const double d = static_cast<double>(static_cast<std::int64_t>(rng())) / 3.0e9;
        CHECK(Rational::from_double(d).to_double() == d); // exact dyadic round trip
    }
}

TEST_CASE("binomial recurrence") {
    CHECK(binomial_rational(0, 0) == Rational(1));
    CHECK(binomial_rational(4, 2) == Rational(6));
    CHECK(binomial_rational(14, 7) == Rational(3432));
    CHECK(binomial_rational(3, 5) == Rational(0));
    CHECK(binomial_rational(64, 32) == Rational::parse("1832624140942590534"));
}

TEST_CASE("instrumented scalar is bit-identical to double") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    TraceSession session;
    for (int k = 0; k < 200; ++k) {
        const double a = dist(rng), b = dist(rng);
        const Tracked ta = Tracked::constant(a), tb = Tracked::constant(b);
        CHECK((ta + tb).value() == a + b);
        CHECK((ta - tb).value() == a - b);
        CHECK((ta * tb).value() == a * b);
        CHECK((ta / tb).value() == a / b);
    }
}

TEST_CASE("trace records every subtraction") {
    TraceSession session;
    const Tracked one = Tracked::one();
    const Tracked t0 = Tracked::node(0.25, 0);
    const Tracked t1 = Tracked::node(0.5, 1);
    (void)(one - t0);
    (void)(t1 - t0);
    (void)(t1 * t0);
    CHECK(session.counts().subs == 2);
    CHECK(session.counts().muls == 1);
    CHECK(session.trace().events.size() == 2);
    CHECK(session.trace().events[0].lhs.kind == Provenance::one);
    CHECK(session.trace().events[0].rhs.kind == Provenance::node);
    CHECK(session.trace().events[1].lhs.index == 1);
    CHECK(session.trace().events[1].rhs.index == 0);
}

TEST_CASE("audit: empty trace passes any policy") {
    const SubtractionTrace empty;
    const auto report = audit_subtractions(empty, decompose_policy());
    CHECK(report.pass);
    CHECK(report.events_checked == 0);
}

TEST_CASE("audit: one-minus-node membership") {
    SubtractionTrace trace;
    trace.events.push_back({Tag{Provenance::one, -1}, Tag{Provenance::node, 0}});
    CHECK(audit_subtractions(trace, decompose_policy()).pass);
}

TEST_CASE("audit: derived-minus-derived violates the decompose policy") {
    // stands for a p22 - p11 style cancellation
    SubtractionTrace trace;
    trace.events.push_back({Tag{Provenance::derived, -1}, Tag{Provenance::derived, -1}});
    const auto report = audit_subtractions(trace, decompose_policy());
    CHECK_FALSE(report.pass);
    CHECK(report.violations.size() == 1);
    CHECK(report.violations[0].event_index == 0);
    // but the solve policy admits it (derived quantities carry the data path)
    CHECK(audit_subtractions(trace, solve_policy()).pass);
}

TEST_CASE("audit: node order matters") {
    SubtractionTrace good, bad;
    good.events.push_back({Tag{Provenance::node, 3}, Tag{Provenance::node, 1}});
    bad.events.push_back({Tag{Provenance::node, 1}, Tag{Provenance::node, 3}});
    CHECK(audit_subtractions(good, decompose_policy()).pass);
    CHECK_FALSE(audit_subtractions(bad, decompose_policy()).pass);
}

TEST_CASE("from_ratio tags the literal one") {
    CHECK(scalar_traits<Tracked>::from_ratio(1, 1).tag().kind == Provenance::one);
    CHECK(scalar_traits<Tracked>::from_ratio(3, 2).tag().kind == Provenance::constant);
    CHECK(scalar_traits<Tracked>::from_ratio(3, 2).value() == 1.5);
}
