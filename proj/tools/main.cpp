// ratrec -- exact rational recovery from decimal approximations.
//
// Subcommands: plan, recover, expand, eval, poly-recover, sweep.
// Exit codes: 0 success, 2 usage or precondition error, 3 recovery
// contract violation / failed verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <ratrec/ratrec.hpp>

namespace {

using nlohmann::json;
using namespace ratrec;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_contract = 3;

bigint parse_bound(const std::string& text) {
    rational r = rational::from_string(text);
    if (!r.is_integer())
        throw std::invalid_argument("bound must be an integer, got '" + text + "'");
    return r.numerator();
}

std::vector<rational> parse_scale_list(const std::string& text) {
    std::vector<rational> scales;
    std::stringstream ss{text};
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) scales.push_back(rational::from_string(tok));
    if (scales.empty()) throw std::invalid_argument("empty scale list");
    return scales;
}

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    return read_stream(f);
}

json quotients_json(const continued_fraction& cf) {
    json arr = json::array();
    for (const bigint& a : cf.quotients()) arr.push_back(a.str());
    return arr;
}

void print_plan(const precision_plan& p, bool as_json) {
    if (as_json) {
        json j{{"n_bound", p.n_bound.str()},
               {"k_threshold", p.k_threshold.str()},
               {"delta", p.delta.to_string()},
               {"epsilon_stop", p.epsilon_stop.to_string()},
               {"decimal_digits", p.decimal_digits}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "n_bound = " << p.n_bound << "\n"
              << "k_threshold = " << p.k_threshold << "\n"
              << "delta = " << p.delta << "\n"
              << "epsilon_stop = " << p.epsilon_stop << "\n"
              << "decimal_digits = " << p.decimal_digits << "\n";
}

void print_recovery(const recovery_result& r, bool as_json) {
    if (as_json) {
        json j{{"value", r.value.to_string()},
               {"quotients_used", quotients_json(r.quotients_used)},
               {"terminating_quotient",
                r.terminating_quotient ? json(r.terminating_quotient->str())
                                       : json(nullptr)},
               {"collapsed_trailing_one", r.collapsed_trailing_one}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "value = " << r.value << "\n"
              << "quotients_used = " << r.quotients_used << "\n"
              << "terminating_quotient = "
              << (r.terminating_quotient ? r.terminating_quotient->str() : "none")
              << "\n"
              << "collapsed_trailing_one = "
              << (r.collapsed_trailing_one ? "true" : "false") << "\n";
}

struct poly_job {
    bigint n_bound;
    rational accuracy;
    std::vector<std::string> factor_texts;
    rational scalar{1};
};

// "key = value" lines; '#' comments and blank lines ignored
poly_job parse_poly_job(const std::string& text) {
    std::optional<bigint> n_bound;
    std::optional<rational> accuracy;
    poly_job job;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "n_bound") {
            n_bound = parse_bound(value);
        } else if (key == "accuracy") {
            accuracy = value.find('.') != std::string::npos
                           ? decimal_approx::parse(value).to_rational()
                           : rational::from_string(value);
        } else if (key == "factor") {
            job.factor_texts.push_back(value);
        } else if (key == "scalar") {
            job.scalar = rational::from_string(value);
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    if (!n_bound) throw std::invalid_argument("missing 'n_bound' line");
    if (!accuracy) throw std::invalid_argument("missing 'accuracy' line");
    if (job.factor_texts.empty())
        throw std::invalid_argument("no 'factor' lines given");
    job.n_bound = *n_bound;
    job.accuracy = *accuracy;
    return job;
}

void print_sweep(const sweep_report& report, bool as_json) {
    if (!as_json) {
        std::cout << to_csv(report);
        return;
    }
    json rows = json::array();
    for (const sweep_row& r : report.rows)
        rows.push_back(json{{"n_bound", r.n_bound.str()},
                            {"scale", r.scale.to_string()},
                            {"trials", r.trials},
                            {"successes", r.successes}});
    json j{{"metadata",
            json{{"seed", report.seed},
                 {"timestamp", report.timestamp},
                 {"tool_version", report.tool_version}}},
           {"rows", rows}};
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational recovery from decimal approximations"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "random seed for sweeps")
        ->capture_default_str();

    std::string plan_bound;
    auto* cmd_plan = app.add_subcommand(
        "plan", "precision plan for a denominator bound");
    cmd_plan->add_option("-N,--n-bound", plan_bound, "denominator bound (>= 2)")
        ->required();

    std::string rec_approx, rec_bound;
    auto* cmd_recover = app.add_subcommand(
        "recover", "recover the exact rational near a decimal approximation");
    cmd_recover->add_option("approx", rec_approx, "decimal literal")->required();
    cmd_recover->add_option("-N,--n-bound", rec_bound, "denominator bound (>= 2)")
        ->required();

    std::string expand_value;
    auto* cmd_expand =
        app.add_subcommand("expand", "continued fraction of a rational");
    cmd_expand->add_option("rational", expand_value, "value as p/q")->required();

    std::string eval_cf;
    auto* cmd_eval =
        app.add_subcommand("eval", "exact value of a continued fraction");
    cmd_eval->add_option("cf", eval_cf, "quotients, e.g. \"[0; 1, 4]\" or 0,1,4")
        ->required();

    std::string poly_input = "-";
    std::string verify_path;
    auto* cmd_poly = app.add_subcommand(
        "poly-recover", "recover exact factors from approximate ones");
    cmd_poly->add_option("input", poly_input,
                         "job file ('-' for stdin; keys n_bound, accuracy, "
                         "factor..., scalar)");
    cmd_poly->add_option("--verify", verify_path,
                         "polynomial file; checks scalar * product(factors)");

    std::string sweep_max = "25", sweep_scales = "1/2,1,2,10,50";
    std::uint64_t sweep_trials = 20;
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "empirical recovery-rate sweep over perturbation scales");
    cmd_sweep->add_option("--n-max", sweep_max, "largest denominator bound")
        ->capture_default_str();
    cmd_sweep
        ->add_option("--scales", sweep_scales,
                     "comma-separated multiples of delta")
        ->capture_default_str();
    cmd_sweep->add_option("--trials", sweep_trials, "trials per (N, scale)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    const bool as_json = format == "json";

    try {
        if (*cmd_plan) {
            print_plan(plan_for_denominator_bound(parse_bound(plan_bound)), as_json);
        } else if (*cmd_recover) {
            precision_plan plan = plan_for_denominator_bound(parse_bound(rec_bound));
            print_recovery(recover(decimal_approx::parse(rec_approx), plan),
                           as_json);
        } else if (*cmd_expand) {
            continued_fraction cf = cf_expand(rational::from_string(expand_value));
            if (as_json)
                std::cout << json{{"quotients", quotients_json(cf)}}.dump(2) << "\n";
            else
                std::cout << cf << "\n";
        } else if (*cmd_eval) {
            rational v = cf_eval(continued_fraction::from_string(eval_cf));
            if (as_json)
                std::cout << json{{"value", v.to_string()}}.dump(2) << "\n";
            else
                std::cout << v << "\n";
        } else if (*cmd_poly) {
            poly_job job = parse_poly_job(read_input(poly_input));
            std::vector<exact_polynomial> factors;
            for (const std::string& text : job.factor_texts)
                factors.push_back(recover_polynomial(
                    parse_approx_polynomial(text, job.accuracy), job.n_bound));
            std::optional<bool> verified;
            if (!verify_path.empty()) {
                exact_polynomial original = parse_polynomial(read_input(verify_path));
                verified = verify_factorization(original, factors, job.scalar);
            }
            if (as_json) {
                json jf = json::array();
                for (const exact_polynomial& f : factors)
                    jf.push_back(f.to_string());
                json j{{"factors", jf},
                       {"verified", verified ? json(*verified) : json(nullptr)}};
                std::cout << j.dump(2) << "\n";
            } else {
                for (const exact_polynomial& f : factors)
                    std::cout << "factor = " << f << "\n";
                if (verified)
                    std::cout << "verification = "
                              << (*verified ? "VERIFIED" : "VERIFICATION FAILED")
                              << "\n";
            }
            if (verified && !*verified) return exit_contract;
        } else if (*cmd_sweep) {
            print_sweep(run_sweep(parse_bound(sweep_max),
                                  parse_scale_list(sweep_scales), sweep_trials,
                                  seed),
                        as_json);
        }
    } catch (const contract_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_contract;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}
