#ifndef POLYDECOMP_CLI_HPP
#define POLYDECOMP_CLI_HPP

#include <polydecomp/io.hpp>

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace polydecomp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_not_decomposable = 2;

struct Command {
    std::string subcommand; ///< root | decompose | check | variety
    std::string polynomial_text;
    unsigned d = 0;
    std::string field_spec = "Q";
    std::vector<std::string> vars{"x"};
    std::optional<std::string> main_var; ///< defaults to vars.front()
    bool json = false;
    bool verify = false;
    unsigned n = 0;
};

struct Outcome {
    int status = exit_ok;
    std::string out;
    std::string err;
};

namespace detail {

inline std::string error_text(ErrorCode code, const std::string& message, bool json)
{
    if (json)
        return nlohmann::json{{"error", {{"code", std::string(name(code))}, {"message", message}}}}.dump() + "\n";
    return "error[" + std::string(name(code)) + "]: " + message + "\n";
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
    return out;
}

inline void require_d(const Command& cmd)
{
    if (cmd.d == 0) throw Error(ErrorCode::InvalidD, "--d is required");
}

inline std::string main_var_of(const Command& cmd) { return cmd.main_var.value_or(cmd.vars.front()); }

inline Poly parse_input(const Command& cmd, const std::string& main_var)
{
    return parse_poly(cmd.polynomial_text, parse_field(cmd.field_spec), cmd.vars, main_var);
}

inline std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

inline Outcome run_root(const Command& cmd)
{
    require_d(cmd);
    const Poly P = parse_input(cmd, main_var_of(cmd));
    const Poly Q = approx_root(P, cmd.d);
    if (cmd.json) return {exit_ok, nlohmann::json{{"Q", poly_to_json(Q)}, {"d", cmd.d}}.dump() + "\n", {}};
    return {exit_ok, "Q = " + format_poly(Q) + "\n", {}};
}

inline Outcome run_decompose(const Command& cmd)
{
    require_d(cmd);
    const Poly P = parse_input(cmd, main_var_of(cmd));
    const Decomposition dec = decompose(P, cmd.d);
    if (cmd.json) return {exit_ok, decomposition_to_json(P, dec).dump() + "\n", {}};

    std::ostringstream out;
    out << "h = " << format_poly(dec.h) << "\n"
        << "Q = " << format_poly(dec.Q) << "\n"
        << "R = " << format_poly(dec.R) << "\n";
    if (cmd.verify) {
        const VerifyReport r = verify(P, dec);
        out << "monic: " << pass_fail(r.monic) << "\n"
            << "degree_bound: " << pass_fail(r.degree_bound) << "\n"
            << "index_condition: " << pass_fail(r.index_condition) << "\n"
            << "reconstruction: " << pass_fail(r.reconstruction) << "\n";
    }
    return {exit_ok, out.str(), {}};
}

// With several variables and no --main-var, the first variable in which the
// input is monic becomes the main one.
inline DecomposabilityVerdict check_multi(const Command& cmd)
{
    const Domain field = parse_field(cmd.field_spec);
    std::vector<std::string> candidates =
        cmd.main_var ? std::vector<std::string>{*cmd.main_var} : cmd.vars;
    for (const auto& v : candidates) {
        const Poly P = parse_poly(cmd.polynomial_text, field, cmd.vars, v);
        if (P.is_monic()) return is_decomposable_multi(P, cmd.d, v);
    }
    throw Error(ErrorCode::NotMonicInMainVar, "polynomial is not monic in any of: " + join(candidates, ", "));
}

inline Outcome run_check(const Command& cmd)
{
    require_d(cmd);
    const DecomposabilityVerdict v = cmd.vars.size() == 1
                                         ? is_decomposable_uni(parse_input(cmd, main_var_of(cmd)), cmd.d)
                                         : check_multi(cmd);
    const int status = v.decomposable ? exit_ok : exit_not_decomposable;
    if (cmd.json) return {status, verdict_to_json(v).dump() + "\n", {}};

    std::ostringstream out;
    out << "decomposable: " << (v.decomposable ? "yes" : "no") << "\n";
    if (v.normalization) out << "normalized: divided by " << format_element(*v.normalization) << "\n";
    if (v.witness)
        out << "h = " << format_poly(v.witness->h) << "\n"
            << "Q = " << format_poly(v.witness->Q) << "\n";
    if (!v.h_in_ground_field && v.decomposition)
        out << "h has non-constant coefficients: h = " << format_poly(v.decomposition->h) << "\n";
    if (v.residual) out << "R = " << format_poly(*v.residual) << "\n";
    return {status, out.str(), {}};
}

inline Outcome run_variety(const Command& cmd)
{
    if (cmd.n == 0) throw Error(ErrorCode::InvalidArgument, "--n is required");
    require_d(cmd);
    if (!parse_field(cmd.field_spec).is_rationals())
        throw Error(ErrorCode::InvalidArgument, "variety equations are generated over Q only");
    const VarietySystem s = variety_equations(cmd.n, cmd.d);
    if (cmd.json) return {exit_ok, variety_to_json(s).dump() + "\n", {}};
    std::string out;
    for (const auto& eq : s.equations) out += format_element(eq.polynomial) + "\n";
    return {exit_ok, out, {}};
}

} // namespace detail

/// Executes one command; library errors become exit status 1 with a coded
/// message on the error stream.
inline Outcome run(const Command& cmd)
{
    try {
        if (cmd.vars.empty()) throw Error(ErrorCode::InvalidArgument, "--vars must name at least one variable");
        if (cmd.subcommand == "root") return detail::run_root(cmd);
        if (cmd.subcommand == "decompose") return detail::run_decompose(cmd);
        if (cmd.subcommand == "check") return detail::run_check(cmd);
        if (cmd.subcommand == "variety") return detail::run_variety(cmd);
        throw Error(ErrorCode::InvalidArgument, "unknown subcommand '" + cmd.subcommand + "'");
    } catch (const Error& e) {
        return {exit_error, {}, detail::error_text(e.code(), e.what(), cmd.json)};
    }
}

/// Parses argv into a Command and runs it. --help prints usage with status 0.
inline Outcome run(int argc, const char* const* argv)
{
    CLI::App app{"Decomposition P = h(Q) + R, approximate roots and decomposability of polynomials"};
    app.require_subcommand(1);
    Command cmd;
    std::string vars = "x";
    std::string main_var;

    auto add_common = [&](CLI::App* sub, bool needs_poly) {
        sub->add_option("--d", cmd.d, "degree of h (d >= 2)");
        sub->add_option("--field", cmd.field_spec, "Q or gf:<p>")->capture_default_str();
        sub->add_option("--vars", vars, "comma-separated variables")->capture_default_str();
        sub->add_option("--main-var", main_var, "main variable (default: first of --vars)");
        sub->add_flag("--json", cmd.json, "machine-readable output");
        if (needs_poly) sub->add_option("polynomial", cmd.polynomial_text, "polynomial expression")->required();
    };
    add_common(app.add_subcommand("root", "approximate d-th root"), true);
    auto* dec = app.add_subcommand("decompose", "compute h, Q, R");
    add_common(dec, true);
    dec->add_flag("--verify", cmd.verify, "check every condition of the decomposition");
    add_common(app.add_subcommand("check", "decide d-decomposability"), true);
    auto* var = app.add_subcommand("variety", "equations of the d-decomposable monic polynomials of degree n");
    add_common(var, false);
    var->add_option("--n", cmd.n, "degree n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        return {exit_ok, app.help(), {}};
    } catch (const CLI::CallForAllHelp&) {
        return {exit_ok, app.help("", CLI::AppFormatMode::All), {}};
    } catch (const CLI::ParseError& e) {
        return {exit_error, {}, detail::error_text(ErrorCode::InvalidArgument, e.what(), false)};
    }

    cmd.subcommand = app.get_subcommands().front()->get_name();
    cmd.vars.clear();
    std::stringstream ss(vars);
    for (std::string v; std::getline(ss, v, ',');) {
        v.erase(0, v.find_first_not_of(" \t"));
        v.erase(v.find_last_not_of(" \t") + 1);
        cmd.vars.push_back(v);
    }
    if (!main_var.empty()) cmd.main_var = main_var;
    return run(cmd);
}

} // namespace polydecomp::cli

#endif // POLYDECOMP_CLI_HPP
