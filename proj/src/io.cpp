#include "sojourn/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace sojourn {

namespace {

using nlohmann::json;

// Rational columns go into JSON as decimal strings: they routinely exceed
// 64-bit range and must round-trip exactly.
json record_to_json(const OutputRecord& r) {
    return json{{"k", r.k},
                {"n", r.n},
                {"cond", r.cond},
                {"mass_num", r.num.str()},
                {"mass_den", r.den.str()},
                {"mass_float", r.value}};
}

json density_rows(const LimitReport& report) {
    json rows = json::array();
    const LimitParams lp{report.rho, report.t};
    for (double s : report.grid) {
        json row{{"s", s},
                 {"psi", sojourn_density(lp, s)},
                 {"chi_minus", conditioned_density(lp, s, Sign::minus)},
                 {"chi_plus", conditioned_density(lp, s, Sign::plus)}};
        if (report.rho < 0) row["total_sojourn"] = total_sojourn_density(report.rho, s);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<OutputRecord> records_from(const MassTable& table) {
    std::vector<OutputRecord> records;
    records.reserve(table.masses.size());
    for (long k = 0; k <= table.n; ++k) {
        const Rat& mass = table.masses[static_cast<size_t>(k)];
        records.push_back({k, table.n, table.cond.tag(), numerator(mass),
                           denominator(mass), to_double(mass)});
    }
    return records;
}

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

void write_dist_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
    out << "k,n,cond,mass_num,mass_den,mass_float\n";
    for (const auto& r : records)
        out << r.k << ',' << r.n << ',' << r.cond << ',' << r.num << ',' << r.den << ','
            << format_double(r.value) << '\n';
}

void write_dist_json(std::ostream& out, const std::vector<OutputRecord>& records) {
    json rows = json::array();
    for (const auto& r : records) rows.push_back(record_to_json(r));
    out << rows.dump(2) << '\n';
}

double max_abs_deviation(const SimulationResult& sim, const MassTable& exact) {
    double worst = 0.0;
    for (size_t k = 0; k < sim.freq.size(); ++k)
        worst = std::max(worst, std::fabs(sim.freq[k] - to_double(exact.masses[k])));
    return worst;
}

void write_simulation_csv(std::ostream& out, const SimulationResult& sim,
                          const MassTable& exact) {
    out << "k,n,cond,mass_num,mass_den,mass_float,empirical_freq,retained_trials\n";
    for (long k = 0; k <= sim.n; ++k) {
        const Rat& mass = exact.masses[static_cast<size_t>(k)];
        out << k << ',' << sim.n << ',' << sim.cond.tag() << ',' << numerator(mass) << ','
            << denominator(mass) << ',' << format_double(to_double(mass)) << ','
            << format_double(sim.freq[static_cast<size_t>(k)]) << ',' << sim.retained
            << '\n';
    }
}

void write_simulation_json(std::ostream& out, const SimulationResult& sim,
                           const MassTable& exact, double max_dev) {
    json rows = json::array();
    for (long k = 0; k <= sim.n; ++k) {
        const Rat& mass = exact.masses[static_cast<size_t>(k)];
        rows.push_back({{"k", k},
                        {"mass_num", numerator(mass).str()},
                        {"mass_den", denominator(mass).str()},
                        {"mass_float", to_double(mass)},
                        {"empirical_freq", sim.freq[static_cast<size_t>(k)]}});
    }
    json doc{{"n", sim.n},          {"cond", sim.cond.tag()},
             {"trials", sim.trials}, {"seed", sim.seed},
             {"retained", sim.retained}, {"rows", std::move(rows)},
             {"max_abs_deviation", max_dev}};
    out << doc.dump(2) << '\n';
}

void write_limit_csv(std::ostream& out, const LimitReport& report) {
    for (const auto& conv : report.convergence) {
        out << "N,s,discrete_cdf,limit_cdf,gap\n";
        for (const auto& pt : conv.points)
            out << conv.big_n << ',' << format_double(pt.s) << ','
                << format_double(pt.discrete_cdf) << ',' << format_double(pt.limit_cdf)
                << ',' << format_double(pt.gap) << '\n';
        out << '\n';
    }
    out << (report.rho < 0 ? "s,psi,chi_minus,chi_plus,total_sojourn\n"
                           : "s,psi,chi_minus,chi_plus\n");
    const LimitParams lp{report.rho, report.t};
    for (double s : report.grid) {
        out << format_double(s) << ',' << format_double(sojourn_density(lp, s)) << ','
            << format_double(conditioned_density(lp, s, Sign::minus)) << ','
            << format_double(conditioned_density(lp, s, Sign::plus));
        if (report.rho < 0) out << ',' << format_double(total_sojourn_density(report.rho, s));
        out << '\n';
    }
}

void write_limit_json(std::ostream& out, const LimitReport& report) {
    json conv = json::array();
    for (const auto& c : report.convergence) {
        json points = json::array();
        for (const auto& pt : c.points)
            points.push_back({{"s", pt.s},
                              {"discrete_cdf", pt.discrete_cdf},
                              {"limit_cdf", pt.limit_cdf},
                              {"gap", pt.gap}});
        conv.push_back({{"N", c.big_n},
                        {"steps", c.steps},
                        {"p_N", c.p_n},
                        {"points", std::move(points)},
                        {"sup_gap", c.sup_gap}});
    }
    json doc{{"rho", report.rho},
             {"t", report.t},
             {"convergence", std::move(conv)},
             {"density", density_rows(report)}};
    out << doc.dump(2) << '\n';
}

}  // namespace sojourn
