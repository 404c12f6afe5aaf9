#include "sojourn/asymptotics.hpp"
#include "sojourn/distribution.hpp"
#include "sojourn/io.hpp"
#include "sojourn/oracle.hpp"
#include "sojourn/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sojourn;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

std::vector<WalkParams> parse_p_list(const std::string& text) {
    std::vector<WalkParams> ps;
    for (const std::string& item : split(text, ','))
        ps.emplace_back(parse_rational(item));
    if (ps.empty()) throw std::invalid_argument("empty probability list");
    return ps;
}

Conditioning parse_cond(const std::string& text) {
    auto cond = Conditioning::parse(text);
    if (!cond)
        throw std::invalid_argument(
            "unknown conditioning \"" + text +
            "\" (expected free|bridge|positive|negative|pinned:<nonzero j>)");
    return *cond;
}

// "start:end:count" -> `count` equally spaced values from start to end.
std::vector<double> parse_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("grid must be start:end:count");
    const double start = std::stod(parts[0]);
    const double end = std::stod(parts[1]);
    const long count = std::stol(parts[2]);
    if (count < 1 || end < start) throw std::invalid_argument("bad grid " + text);
    std::vector<double> grid;
    for (long i = 0; i < count; ++i)
        grid.push_back(count == 1 ? start
                                  : start + (end - start) * static_cast<double>(i) /
                                        static_cast<double>(count - 1));
    return grid;
}

int run_dist(const std::string& p_text, long n, const std::string& cond_text,
             const std::string& format) {
    const WalkParams w(parse_rational(p_text));
    const Conditioning cond = parse_cond(cond_text);
    const MassTable table = exact_distribution(w, n, cond);
    const auto records = records_from(table);
    if (format == "json")
        write_dist_json(std::cout, records);
    else
        write_dist_csv(std::cout, records);
    return 0;
}

int run_verify(const std::string& p_text, long n_max, const std::string& suites_text) {
    const std::vector<WalkParams> ps = parse_p_list(p_text);
    bool ok = true;
    for (const std::string& suite : split(suites_text, ',')) {
        std::vector<CheckResult> results;
        if (suite == "routes") {
            results = verify_routes(ps, n_max);
        } else if (suite == "identities") {
            results = verify_identities(ps, n_max);
        } else if (suite == "oracle") {
            if (n_max > oracle_cap())
                throw std::invalid_argument("oracle suite: n-max " + std::to_string(n_max) +
                                            " exceeds the enumeration cap " +
                                            std::to_string(oracle_cap()));
            results = verify_oracle(ps, n_max);
        } else if (suite == "genfun") {
            results = verify_genfun(ps, n_max);
        } else {
            throw std::invalid_argument("unknown suite \"" + suite +
                                        "\" (routes, identities, oracle, genfun)");
        }
        for (const CheckResult& r : results) {
            if (r.pass)
                std::cout << "PASS " << suite << '/' << r.name << '\n';
            else
                std::cout << "FAIL " << suite << '/' << r.name << ": " << r.counterexample
                          << '\n';
            ok = ok && r.pass;
        }
    }
    return ok ? 0 : 1;
}

int run_limit(double rho, double t, const std::string& n_list_text,
              const std::string& grid_text, const std::string& format) {
    LimitReport report{rho, t, parse_grid(grid_text), {}};
    for (const std::string& item : split(n_list_text, ','))
        report.convergence.push_back(
            convergence_experiment(rho, t, std::stol(item), report.grid));
    if (format == "json")
        write_limit_json(std::cout, report);
    else
        write_limit_csv(std::cout, report);
    return 0;
}

int run_simulate(const std::string& p_text, long n, std::uint64_t trials,
                 std::uint64_t seed, const std::string& cond_text,
                 const std::string& format) {
    const WalkParams w(parse_rational(p_text));
    const Conditioning cond = parse_cond(cond_text);
    const SimulationResult sim = simulate(w, n, trials, seed, cond);
    const MassTable exact = exact_distribution(w, n, cond);
    const double deviation = max_abs_deviation(sim, exact);
    if (format == "json") {
        write_simulation_json(std::cout, sim, exact, deviation);
    } else {
        write_simulation_csv(std::cout, sim, exact);
    }
    std::cerr << "max abs deviation: " << format_double(deviation) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sojourn-time distributions of the asymmetric +-1 random walk"};
    app.require_subcommand(1);

    std::string p_text = "1/2";
    std::string cond_text = "free";
    std::string format = "csv";
    std::string suites = "routes,identities,oracle,genfun";
    std::string grid_text = "0.1:0.9:9";
    std::string n_list_text;
    long n = 0;
    long n_max = 12;
    double rho = 0.0;
    double t = 1.0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;

    auto* dist = app.add_subcommand("dist", "Exact distribution table for one (p, n, F)");
    dist->add_option("--p", p_text, "step-up probability, rational num/den")->required();
    dist->add_option("--n", n, "walk length")->required()->check(CLI::NonNegativeNumber);
    dist->add_option("--cond", cond_text, "free|bridge|positive|negative|pinned:<j>");
    dist->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Run exhaustive identity suites");
    verify->add_option("--p", p_text, "comma-separated rational probabilities")->required();
    verify->add_option("--n-max", n_max, "sweep horizon")->check(CLI::NonNegativeNumber);
    verify->add_option("--suites", suites, "subset of routes,identities,oracle,genfun");

    auto* limit = app.add_subcommand("limit", "Brownian-limit densities and CDF gaps");
    limit->add_option("--rho", rho, "drift of the rescaled walk")->required();
    limit->add_option("--t", t, "horizon (default 1)");
    limit->add_option("--N", n_list_text, "comma-separated scaling parameters")->required();
    limit->add_option("--grid", grid_text, "interior evaluation grid start:end:count");
    limit->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo cross-check");
    simulate->add_option("--p", p_text, "step-up probability, rational num/den")->required();
    simulate->add_option("--n", n, "walk length")->required()->check(CLI::NonNegativeNumber);
    simulate->add_option("--trials", trials);
    simulate->add_option("--seed", seed);
    simulate->add_option("--cond", cond_text, "free|bridge|positive|negative|pinned:<j>");
    simulate->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
        if (dist->parsed()) return run_dist(p_text, n, cond_text, format);
        if (verify->parsed()) return run_verify(p_text, n_max, suites);
        if (limit->parsed()) return run_limit(rho, t, n_list_text, grid_text, format);
        if (simulate->parsed())
            return run_simulate(p_text, n, trials, seed, cond_text, format);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const sojourn::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
