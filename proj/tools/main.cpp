#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "powersum/degree_counter.hpp"
#include "powersum/errors.hpp"
#include "powersum/factor.hpp"
#include "powersum/function_field.hpp"
#include "powersum/serialize.hpp"
#include "verify_suite.hpp"

using namespace powersum;

namespace {

enum ExitCode { exit_ok = 0, exit_internal = 1, exit_validation = 2, exit_resource = 3 };

struct Config {
    std::string system_path;
    std::string format; // empty: command default
    std::size_t budget_bits = default_coefficient_budget_bits;
    int factor_cap = default_factor_degree_cap;
    bool include_zero_exponent = false;
    unsigned threads = 1;

    std::int64_t d = 0;
    std::vector<std::int64_t> d_list;
    std::int64_t n = 0, m = 0;
    std::int64_t genus = 0;
    std::string rf_path;
    std::string poly_text;
    std::uint64_t seed = 20240601;
    std::size_t samples = 1000;
};

int report_error(const std::string& kind, const std::string& message, int code)
{
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
    return code;
}

PowerSumSystem system_of(const Config& c)
{
    if (c.system_path.empty()) throw ValidationError("--system is required for this command");
    auto sys = load_system(c.system_path);
    return c.include_zero_exponent ? sys.with_exponent_base(0) : sys;
}

void require_json(const Config& c, const char* command)
{
    if (!c.format.empty() && c.format != "json")
        throw ValidationError(std::string(command) + " only supports --format json");
}

CountOptions count_options(const Config& c) { return {c.threads, c.budget_bits}; }

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string run_count(const Config& c)
{
    require_json(c, "count");
    if (c.d < 0) throw ValidationError("--d must be nonnegative");
    return count_report_to_json(count_certified(system_of(c), c.d, count_options(c))).dump(2);
}

std::string run_dvalue(const Config& c)
{
    require_json(c, "dvalue");
    const auto sys = system_of(c);
    if (c.n < sys.exponent_base() || c.m < sys.exponent_base())
        throw ValidationError("--n and --m must be at least exponent_base " + std::to_string(sys.exponent_base()));
    DegreeEvaluator ev(sys, c.budget_bits);
    return degree_to_json(ev.d_value(c.n, c.m)).dump();
}

std::string run_series(const Config& c)
{
    const auto rows = asymptotic_series(system_of(c), c.d_list, count_options(c));
    if (c.format.empty() || c.format == "csv") return series_to_csv(rows);
    return series_to_json(rows).dump(2);
}

std::string run_bm(const Config& c)
{
    require_json(c, "bm");
    if (c.d < 0) throw ValidationError("--d must be nonnegative");
    const auto ctx = BMContext::from_system(system_of(c), c.d, c.genus);
    return json{{"c_bm", c_bm(ctx)}, {"s_size_bound", s_size_bound(ctx)}}.dump(2);
}

std::string run_height(const Config& c)
{
    require_json(c, "height");
    const auto f = rf_from_json(read_json_file(c.rf_path));
    return json{{"height", height_to_json(height(f, c.factor_cap))}}.dump(2);
}

std::string run_factor(const Config& c)
{
    require_json(c, "factor");
    return factorization_to_json(factor(parse_polynomial(c.poly_text), c.factor_cap)).dump(2);
}

int run_verify_command(const Config& c)
{
    require_json(c, "verify");
    tools::VerifyOptions vo;
    vo.seed = c.seed;
    vo.samples = c.samples;
    vo.threads = c.threads;
    vo.factor_cap = c.factor_cap;
    vo.budget_bits = c.budget_bits;
    const auto results = tools::run_verify(vo);

    json suites = json::array();
    std::size_t passed = 0, failed = 0;
    for (const auto& r : results) {
        suites.push_back({{"name", r.name}, {"passed", r.passed}, {"failed", r.failed},
                          {"failures", r.first_failures}});
        passed += r.passed;
        failed += r.failed;
    }
    std::cout << json{{"suites", suites}, {"passed", passed}, {"failed", failed}, {"ok", failed == 0}}.dump(2)
              << '\n';
    return failed == 0 ? exit_ok : exit_internal;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Degree counting for sums of polynomial power sums"};
    app.require_subcommand(1);
    app.fallthrough();

    Config c;
    app.add_option("--system", c.system_path, "System JSON file");
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--coeff-budget", c.budget_bits, "Coefficient size budget in bits")
        ->envname("POWERSUM_COEFF_BUDGET_BITS");
    app.add_option("--factor-cap", c.factor_cap, "Largest degree the factorizer attempts")
        ->envname("POWERSUM_FACTOR_CAP")
        ->check(CLI::Range(1, 64));
    app.add_flag("--include-zero-exponent", c.include_zero_exponent, "Count exponents from 0");
    app.add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* count = app.add_subcommand("count", "Certified A_d with region breakdown");
    count->add_option("--d", c.d)->required();
    auto* dvalue = app.add_subcommand("dvalue", "deg(L(n) + R(m))");
    dvalue->add_option("--n", c.n)->required();
    dvalue->add_option("--m", c.m)->required();
    auto* series = app.add_subcommand("series", "A_d against d^2 / (deg p_1 deg q_1)");
    series->add_option("--d-list", c.d_list)->required()->delimiter(',');
    auto* bm = app.add_subcommand("bm", "Brownawell-Masser constants for a system");
    bm->add_option("--d", c.d)->required();
    bm->add_option("--genus", c.genus)->check(CLI::NonNegativeNumber);
    auto* height_cmd = app.add_subcommand("height", "Height of a rational function");
    height_cmd->add_option("--rf", c.rf_path, "Rational function JSON file")->required();
    auto* verify = app.add_subcommand("verify", "Run the built-in invariant suites");
    verify->add_option("--seed", c.seed);
    verify->add_option("--samples", c.samples)->check(CLI::PositiveNumber);
    auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial over Q");
    factor_cmd->add_option("--poly", c.poly_text, "Polynomial, e.g. \"x^4 - 1\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("usage", e.what(), exit_validation);
    }

    try {
        std::string out;
        if (count->parsed()) out = run_count(c);
        else if (dvalue->parsed()) out = run_dvalue(c);
        else if (series->parsed()) out = run_series(c);
        else if (bm->parsed()) out = run_bm(c);
        else if (height_cmd->parsed()) out = run_height(c);
        else if (factor_cmd->parsed()) out = run_factor(c);
        else if (verify->parsed()) return run_verify_command(c);
        std::cout << out;
        if (!out.empty() && out.back() != '\n') std::cout << '\n';
        return exit_ok;
    } catch (const FactorizationInfeasible& e) {
        return report_error("factorization_infeasible", e.what(), exit_resource);
    } catch (const ResourceCapError& e) {
        return report_error("resource_cap", e.what(), exit_resource);
    } catch (const ValidationError& e) {
        return report_error("validation", e.what(), exit_validation);
    } catch (const json::exception& e) {
        return report_error("validation", e.what(), exit_validation);
    } catch (const std::exception& e) {
        return report_error("internal", e.what(), exit_internal);
    }
}
