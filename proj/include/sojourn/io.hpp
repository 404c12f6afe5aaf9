#pragma once

#include "sojourn/asymptotics.hpp"
#include "sojourn/distribution.hpp"
#include "sojourn/oracle.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sojourn {

/// One emitted mass: reduced fraction num/den plus its double rounding.
struct OutputRecord {
    long k;
    long n;
    std::string cond;
    Int num;
    Int den;
    double value;
};

std::vector<OutputRecord> records_from(const MassTable& table);

/// "%.17g": round-trippable and stable across runs.
std::string format_double(double v);

void write_dist_csv(std::ostream& out, const std::vector<OutputRecord>& records);
void write_dist_json(std::ostream& out, const std::vector<OutputRecord>& records);

void write_simulation_csv(std::ostream& out, const SimulationResult& sim,
                          const MassTable& exact);
void write_simulation_json(std::ostream& out, const SimulationResult& sim,
                           const MassTable& exact, double max_abs_deviation);

double max_abs_deviation(const SimulationResult& sim, const MassTable& exact);

struct LimitReport {
    double rho;
    double t;
    std::vector<double> grid;
    std::vector<ConvergenceReport> convergence;
};

void write_limit_csv(std::ostream& out, const LimitReport& report);
void write_limit_json(std::ostream& out, const LimitReport& report);

}  // namespace sojourn
