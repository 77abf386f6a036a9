// sbv: bidiagonal-decomposition toolkit for Said-Ball collocation matrices.
// Subcommands: decompose | solve | eig | det | interp | verify.
// Exit codes: 0 success, 1 usage/format error, 2 invalid node set,
// 3 numerical failure.

#include "sbv/bd.hpp"
#include "sbv/eigen.hpp"
#include "sbv/errors.hpp"
#include "sbv/io.hpp"
#include "sbv/nodes.hpp"
#include "sbv/oracle.hpp"
#include "sbv/sb_basis.hpp"
#include "sbv/tn_ops.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace sbv;

constexpr int kExitUsage = 1;
constexpr int kExitNodes = 2;
constexpr int kExitNumeric = 3;

struct Options {
    std::string nodes_path;
    std::string rhs_path;
    std::string values_path;
    std::string bd_in_path;
    std::string mode = "float";
    std::string out = "text";
    bool verify = false;
    bool sort = false;
    double tol = 0.0; // 0 = no tolerance judgement in the verify report
};

struct NodeData {
    NodeSet<Rational> exact;
    NodeSet<double> fl;
};

NodeData load_nodes(const Options& opt) {
    if (opt.nodes_path.empty()) throw format_error("--nodes is required for this command");
    auto values = read_scalar_file(opt.nodes_path);
    if (opt.sort) std::sort(values.begin(), values.end());
    NodeSet<Rational> exact(std::move(values));
    NodeSet<double> fl = to_double_nodes(exact);
    return {std::move(exact), std::move(fl)};
}

Vector<Rational> load_vector(const std::string& path, const char* what) {
    if (path.empty())
        throw format_error(std::string("--") + what + " is required for this command");
    return read_scalar_file(path);
}

void enforce_oracle_cap(std::size_t order) {
    if (order > kOracleMaxOrder)
        throw format_error("--verify runs the exact oracle and supports order <= " +
                           std::to_string(kOracleMaxOrder) + "; got order " +
                           std::to_string(order));
}

void emit(const json& j, const std::string& text, const Options& opt) {
    if (opt.out == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open '" + path + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw format_error("bad json in '" + path + "': " + e.what());
    }
}

// Relative spectral-norm error of the floating decomposition against the
// exact one.
double bd_relative_error(const BDFactorization<double>& bd, const Matrix<Rational>& exact_a) {
    const auto exact_bd = neville_bd(exact_a).bd;
    const Matrix<double> be = to_double_matrix(exact_bd.entries);
    Matrix<double> diff(bd.order, bd.order);
    for (std::size_t i = 0; i < bd.order; ++i)
        for (std::size_t j = 0; j < bd.order; ++j) diff(i, j) = bd.entries(i, j) - be(i, j);
    return spectral_norm(diff) / spectral_norm(be);
}

// Oracle eigenvalue references, descending, refined well below double
// precision.
std::vector<double> oracle_eigenvalues(const Matrix<Rational>& a) {
    const auto roots = isolate_real_roots(char_poly(a), Rational(1) / power(Rational(10), 30));
    std::vector<double> refs;
    refs.reserve(roots.size());
    for (std::size_t k = roots.size(); k-- > 0;) refs.push_back(roots[k].mid().to_double());
    return refs;
}

int cmd_decompose(const Options& opt) {
    const NodeData nd = load_nodes(opt);
    json j;
    std::string text;
    if (opt.mode == "exact") {
        const auto bd = decompose(nd.exact);
        j = bd_to_json(bd);
        text = bd_to_text(bd);
    } else {
        const auto bd = decompose(nd.fl);
        j = bd_to_json(bd);
        text = bd_to_text(bd);
    }
    if (opt.verify) {
        enforce_oracle_cap(nd.exact.size());
        const double err = bd_relative_error(decompose(nd.fl), build_matrix(nd.exact));
        j["bd_relative_error"] = err;
        text += "bd_relative_error " + format_double(err) + "\n";
    }
    emit(j, text, opt);
    return 0;
}

int cmd_solve(const Options& opt) {
    std::optional<NodeData> nd;
    if (!opt.nodes_path.empty() || opt.bd_in_path.empty()) nd = load_nodes(opt);
    const auto b_exact = load_vector(opt.rhs_path, "rhs");

    json j;
    std::string text;
    if (opt.mode == "exact") {
        const auto bd = !opt.bd_in_path.empty() ? bd_from_json_rational(read_json_file(opt.bd_in_path))
                                                : decompose(nd->exact);
        const auto report = solve(bd, b_exact);
        j["x"] = json::array();
        text = "x\n";
        for (const auto& v : report.x) {
            j["x"].push_back(v.str());
            text += v.str() + "\n";
        }
        j["residual_norm"] = report.residual_norm;
        text += "residual_norm " + format_double(report.residual_norm) + "\n";
        emit(j, text, opt);
        return 0;
    }

    const auto bd = !opt.bd_in_path.empty() ? bd_from_json_double(read_json_file(opt.bd_in_path))
                                            : decompose(nd->fl);
    auto report = solve(bd, to_double_vector(b_exact));
    if (opt.verify) {
        if (!nd) throw format_error("--verify requires --nodes");
        enforce_oracle_cap(nd->exact.size());
        const auto x_exact = exact_solve(build_matrix(nd->exact), b_exact);
        report.relative_error = relative_error_vs_exact(report.x, x_exact);
    }
    j["x"] = report.x;
    text = "x\n";
    for (double v : report.x) text += format_double(v) + "\n";
    j["residual_norm"] = report.residual_norm;
    text += "residual_norm " + format_double(report.residual_norm) + "\n";
    if (report.relative_error) {
        j["relative_error"] = *report.relative_error;
        text += "relative_error " + format_double(*report.relative_error) + "\n";
    }
    emit(j, text, opt);
    return 0;
}

int cmd_eig(const Options& opt) {
    std::optional<NodeData> nd;
    if (!opt.nodes_path.empty() || opt.bd_in_path.empty()) nd = load_nodes(opt);
    const auto bd = !opt.bd_in_path.empty() ? bd_from_json_double(read_json_file(opt.bd_in_path))
                                            : decompose(nd->fl);
    Spectrum spec = eigenvalues(bd);
    if (opt.verify) {
        if (!nd) throw format_error("--verify requires --nodes");
        enforce_oracle_cap(nd->exact.size());
        const auto refs = oracle_eigenvalues(build_matrix(nd->exact));
        if (refs.size() != spec.values.size())
            throw numeric_error("oracle found " + std::to_string(refs.size()) +
                                " eigenvalues, QR found " + std::to_string(spec.values.size()));
        std::vector<double> errs(spec.values.size());
        for (std::size_t k = 0; k < refs.size(); ++k)
            errs[k] = std::abs(spec.values[k] - refs[k]) / std::abs(refs[k]);
        spec.relative_errors = std::move(errs);
    }
    json j = json::array();
    std::string text = "eigenvalues\n";
    for (std::size_t k = 0; k < spec.values.size(); ++k) {
        if (spec.relative_errors) {
            j.push_back({{"value", spec.values[k]},
                         {"relative_error", (*spec.relative_errors)[k]}});
            text += format_double(spec.values[k]) + " " +
                    format_double((*spec.relative_errors)[k]) + "\n";
        } else {
            j.push_back(spec.values[k]);
            text += format_double(spec.values[k]) + "\n";
        }
    }
    emit(j, text, opt);
    return 0;
}

int cmd_det(const Options& opt) {
    const NodeData nd = load_nodes(opt);
    json j;
    std::string text;
    if (opt.mode == "exact") {
        const Rational d = determinant_closed_form(nd.exact);
        const Rational pp = decompose(nd.exact).det();
        j["determinant"] = d.str();
        j["pivot_product"] = pp.str();
        text = "determinant " + d.str() + "\npivot_product " + pp.str() + "\n";
    } else {
        const double d = determinant_closed_form(nd.fl);
        const double pp = decompose(nd.fl).det();
        j["determinant"] = d;
        j["pivot_product"] = pp;
        text = "determinant " + format_double(d) + "\npivot_product " + format_double(pp) + "\n";
        if (opt.verify) {
            enforce_oracle_cap(nd.exact.size());
            const Rational exact = determinant_closed_form(nd.exact);
            const double err =
                (Rational::from_double(d) - exact).abs().to_double() / exact.abs().to_double();
            j["relative_error"] = err;
            text += "relative_error " + format_double(err) + "\n";
        }
    }
    emit(j, text, opt);
    return 0;
}

int cmd_interp(const Options& opt) {
    const NodeData nd = load_nodes(opt);
    const auto values = load_vector(opt.values_path, "values");
    if (values.size() != nd.exact.size())
        throw format_error("value vector has length " + std::to_string(values.size()) +
                           ", expected " + std::to_string(nd.exact.size()));
    json j;
    std::string text = "coefficients\n";
    if (opt.mode == "exact") {
        const auto coeff = interpolate(nd.exact, values);
        j["coefficients"] = json::array();
        for (const auto& c : coeff) {
            j["coefficients"].push_back(c.str());
            text += c.str() + "\n";
        }
        Rational max_res(0);
        for (std::size_t i = 0; i < nd.exact.size(); ++i) {
            const Rational r = (eval_poly(coeff, nd.exact[i]) - values[i]).abs();
            if (r > max_res) max_res = r;
        }
        j["max_residual"] = max_res.to_double();
        text += "max_residual " + format_double(max_res.to_double()) + "\n";
    } else {
        const auto coeff = interpolate(nd.fl, to_double_vector(values));
        j["coefficients"] = coeff;
        for (double c : coeff) text += format_double(c) + "\n";
        double max_res = 0.0;
        for (std::size_t i = 0; i < nd.fl.size(); ++i)
            max_res =
                std::max(max_res, std::abs(eval_poly(coeff, nd.fl[i]) - values[i].to_double()));
        j["max_residual"] = max_res;
        text += "max_residual " + format_double(max_res) + "\n";
    }
    emit(j, text, opt);
    return 0;
}

int cmd_verify(const Options& opt) {
    const NodeData nd = load_nodes(opt);
    enforce_oracle_cap(nd.exact.size());
    const Matrix<Rational> a_exact = build_matrix(nd.exact);

    json j;
    std::string text;
    j["order"] = nd.exact.size();
    text += "order " + std::to_string(nd.exact.size()) + "\n";

    const auto bd = decompose(nd.fl);
    const auto oracle = neville_bd(a_exact);
    const Matrix<double> be = to_double_matrix(oracle.bd.entries);
    Matrix<double> diff(bd.order, bd.order);
    double max_comp = 0.0;
    for (std::size_t i = 0; i < bd.order; ++i)
        for (std::size_t k = 0; k < bd.order; ++k) {
            diff(i, k) = bd.entries(i, k) - be(i, k);
            if (be(i, k) != 0.0)
                max_comp = std::max(max_comp, std::abs(diff(i, k) / be(i, k)));
        }
    const double bd_err = spectral_norm(diff) / spectral_norm(be);
    j["bd_relative_error"] = bd_err;
    j["bd_max_componentwise_error"] = max_comp;
    text += "bd_relative_error " + format_double(bd_err) + "\n";
    text += "bd_max_componentwise_error " + format_double(max_comp) + "\n";

    if (!opt.rhs_path.empty()) {
        const auto b_exact = load_vector(opt.rhs_path, "rhs");
        const auto report = solve(bd, to_double_vector(b_exact));
        const auto x_exact = exact_solve(a_exact, b_exact);
        const double err = relative_error_vs_exact(report.x, x_exact);
        j["solve_relative_error"] = err;
        text += "solve_relative_error " + format_double(err) + "\n";
    }

    {
        const double d = determinant_closed_form(nd.fl);
        const Rational exact = determinant_closed_form(nd.exact);
        const double derr =
            (Rational::from_double(d) - exact).abs().to_double() / exact.abs().to_double();
        j["determinant_relative_error"] = derr;
        text += "determinant_relative_error " + format_double(derr) + "\n";
    }

    {
        const Spectrum spec = eigenvalues(bd);
        const auto refs = oracle_eigenvalues(a_exact);
        json eig = json::array();
        text += "eigenvalues\n";
        for (std::size_t k = 0; k < spec.values.size() && k < refs.size(); ++k) {
            const double err = std::abs(spec.values[k] - refs[k]) / std::abs(refs[k]);
            eig.push_back({{"value", spec.values[k]}, {"relative_error", err}});
            text += format_double(spec.values[k]) + " " + format_double(err) + "\n";
        }
        j["eigenvalues"] = std::move(eig);
    }

    if (opt.tol > 0.0) {
        bool ok = j["bd_relative_error"].get<double>() <= opt.tol &&
                  j["determinant_relative_error"].get<double>() <= opt.tol;
        if (j.contains("solve_relative_error"))
            ok = ok && j["solve_relative_error"].get<double>() <= opt.tol;
        j["tolerance"] = opt.tol;
        j["within_tolerance"] = ok;
        text += std::string("within_tolerance ") + (ok ? "true" : "false") + "\n";
    }

    emit(j, text, opt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Accurate bidiagonal-decomposition computations for Said-Ball "
                 "collocation matrices"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool rhs, bool values, bool bd_in) {
        sub->add_option("--nodes", opt.nodes_path, "node file, one scalar per line");
        if (rhs) sub->add_option("--rhs", opt.rhs_path, "right-hand-side file");
        if (values) sub->add_option("--values", opt.values_path, "interpolation data file");
        if (bd_in) sub->add_option("--bd-in", opt.bd_in_path, "reuse a serialized decomposition");
        sub->add_option("--mode", opt.mode, "float|exact")
            ->check(CLI::IsMember({"float", "exact"}));
        sub->add_option("--out", opt.out, "text|json")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--verify", opt.verify, "compare against the exact oracle");
        sub->add_flag("--sort", opt.sort, "sort the node file before validation");
    };

    add_common(app.add_subcommand("decompose", "compute the bidiagonal decomposition"),
               false, false, false);
    add_common(app.add_subcommand("solve", "solve A x = b through the decomposition"),
               true, false, true);
    add_common(app.add_subcommand("eig", "eigenvalues of the collocation matrix"),
               false, false, true);
    add_common(app.add_subcommand("det", "determinant (closed form and pivot product)"),
               false, false, false);
    add_common(app.add_subcommand("interp", "Said-Ball interpolation coefficients"),
               false, true, false);
    auto* verify_cmd = app.add_subcommand("verify", "full float-vs-oracle report");
    add_common(verify_cmd, true, false, false);
    verify_cmd->add_option("--tol", opt.tol, "flag the report when any error exceeds this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "decompose") return cmd_decompose(opt);
        if (cmd == "solve") return cmd_solve(opt);
        if (cmd == "eig") return cmd_eig(opt);
        if (cmd == "det") return cmd_det(opt);
        if (cmd == "interp") return cmd_interp(opt);
        if (cmd == "verify") return cmd_verify(opt);
        std::cerr << "unknown command\n";
        return kExitUsage;
    } catch (const node_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNodes;
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
