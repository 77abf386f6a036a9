#include "sbv/io.hpp"

#include "sbv/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sbv {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::vector<Rational> read_scalar_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open '" + path + "'");
    std::vector<Rational> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string token, extra;
        if (!(ls >> token)) continue;
        if (ls >> extra)
            throw format_error(path + ":" + std::to_string(lineno) +
                               ": expected one scalar per line");
        try {
            values.push_back(Rational::parse(token));
        } catch (const format_error& e) {
            throw format_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return values;
}

namespace {

nlohmann::json bd_meta(std::size_t order, Parity parity) {
    return {{"order", order}, {"parity", to_string(parity)}};
}

template <class S, class ToJson>
nlohmann::json bd_json_impl(const BDFactorization<S>& bd, ToJson&& to_json) {
    nlohmann::json j = bd_meta(bd.order, bd.parity);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < bd.order; ++i)
        for (std::size_t k = 0; k < bd.order; ++k) rows.push_back(to_json(bd.entries(i, k)));
    j["rows"] = std::move(rows);
    return j;
}

void check_bd_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("parity") || !j.contains("rows"))
        throw format_error("bd json must have order, parity and rows");
    if (!j["order"].is_number_unsigned() || j["order"].get<std::size_t>() == 0)
        throw format_error("bd json: order must be a positive integer");
    const std::string parity = j["parity"].get<std::string>();
    if (parity != "odd" && parity != "even")
        throw format_error("bd json: parity must be 'odd' or 'even'");
    const std::size_t order = j["order"].get<std::size_t>();
    if (!j["rows"].is_array() || j["rows"].size() != order * order)
        throw format_error("bd json: rows must hold order^2 scalars");
    if ((parity == "odd") != ((order - 1) % 2 == 1))
        throw format_error("bd json: parity does not match order");
}

Rational scalar_from_json(const nlohmann::json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) return Rational::from_double(v.get<double>());
    throw format_error("bd json: scalar entries must be numbers or strings");
}

} // namespace

nlohmann::json bd_to_json(const BDFactorization<double>& bd) {
    return bd_json_impl(bd, [](double v) { return nlohmann::json(v); });
}

nlohmann::json bd_to_json(const BDFactorization<Rational>& bd) {
    return bd_json_impl(bd, [](const Rational& v) { return nlohmann::json(v.str()); });
}

BDFactorization<Rational> bd_from_json_rational(const nlohmann::json& j) {
    check_bd_json(j);
    const std::size_t order = j["order"].get<std::size_t>();
    BDFactorization<Rational> bd{order,
                                 j["parity"].get<std::string>() == "odd" ? Parity::odd : Parity::even,
                                 Matrix<Rational>(order, order)};
    std::size_t k = 0;
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t c = 0; c < order; ++c) bd.entries(i, c) = scalar_from_json(j["rows"][k++]);
    return bd;
}

BDFactorization<double> bd_from_json_double(const nlohmann::json& j) {
    const auto exact = bd_from_json_rational(j);
    BDFactorization<double> bd{exact.order, exact.parity, Matrix<double>(exact.order, exact.order)};
    for (std::size_t i = 0; i < exact.order; ++i)
        for (std::size_t c = 0; c < exact.order; ++c)
            bd.entries(i, c) = exact.entries(i, c).to_double();
    return bd;
}

namespace {

template <class S, class Fmt>
std::string bd_text_impl(const BDFactorization<S>& bd, Fmt&& fmt) {
    std::ostringstream os;
    os << "order " << bd.order << "\n" << "parity " << to_string(bd.parity) << "\n" << "bd\n";
    for (std::size_t i = 0; i < bd.order; ++i) {
        for (std::size_t k = 0; k < bd.order; ++k) {
            if (k) os << ' ';
            os << fmt(bd.entries(i, k));
        }
        os << "\n";
    }
    return os.str();
}

} // namespace

std::string bd_to_text(const BDFactorization<double>& bd) {
    return bd_text_impl(bd, [](double v) { return format_double(v); });
}

std::string bd_to_text(const BDFactorization<Rational>& bd) {
    return bd_text_impl(bd, [](const Rational& v) { return v.str(); });
}

} // namespace sbv
