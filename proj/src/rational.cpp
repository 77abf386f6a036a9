#include "sbv/rational.hpp"

#include "sbv/errors.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

namespace sbv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw format_error("rational with zero denominator");
    q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q_.canonicalize();
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw format_error("non-finite value is not a rational");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), value);
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw numeric_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    if (s.empty()) throw format_error("empty scalar literal: '" + std::string(text) + "'");

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw format_error("malformed rational literal: '" + std::string(text) + "'");
        mpz_class p(std::string(num), 10), q(std::string(den), 10);
        if (q == 0) throw format_error("zero denominator in '" + std::string(text) + "'");
        value = mpq_class(p) / mpq_class(q);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp))
            throw format_error("malformed decimal literal: '" + std::string(text) + "'");
        mpz_class scaled(std::string(ip) + std::string(fp), 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        value = mpq_class(scaled) / mpq_class(scale);
    } else {
        if (!all_digits(s))
            throw format_error("malformed integer literal: '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(s), 10));
    }
    if (negative) value = -value;
    value.canonicalize();
    return Rational(value);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

double Rational::to_double() const {
    // mpq_get_d truncates toward zero; pick the closer of the truncated
    // double and its two neighbours by exact comparison.
    double d = mpq_get_d(q_.get_mpq_t());
    if (!std::isfinite(d)) return d;
    const double inf = std::numeric_limits<double>::infinity();
    double best = d;
    mpq_class best_err;
    {
        mpq_class cand;
        mpq_set_d(cand.get_mpq_t(), d);
        best_err = ::abs(mpq_class(q_ - cand));
    }
    for (double c : {std::nextafter(d, inf), std::nextafter(d, -inf)}) {
        if (!std::isfinite(c)) continue;
        mpq_class cand;
        mpq_set_d(cand.get_mpq_t(), c);
        mpq_class err = ::abs(mpq_class(q_ - cand));
        if (err < best_err) {
            best_err = err;
            best = c;
        }
    }
    return best;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial_rational(unsigned long m, unsigned long k) {
    if (k > m) return Rational(0);
    if (k > m - k) k = m - k;
    Rational c(1);
    for (unsigned long j = 1; j <= k; ++j)
        c *= Rational(static_cast<long long>(m - k + j), static_cast<long long>(j));
    return c;
}

} // namespace sbv
