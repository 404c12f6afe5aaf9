#pragma once

#include "sojourn/walk_laws.hpp"

#include <string>
#include <vector>

namespace sojourn {

/// Outcome of one exhaustive identity sweep; `counterexample` holds the first
/// failing instance, empty when the sweep passed.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string counterexample;
};

bool all_pass(const std::vector<CheckResult>& results);

/// Recurrence route against the closed forms, every conditioning (pinned over
/// |j| <= n_max), exact equality.
std::vector<CheckResult> verify_routes(const std::vector<WalkParams>& ps, long n_max);

/// Structural identities: normalization, sign/bridge decomposition, pinned
/// endpoint sum, product law, odd-index stitching, bridge uniformity, the
/// symmetric-case binomial product, duality, boundary columns, total-sojourn
/// partial sums.
std::vector<CheckResult> verify_identities(const std::vector<WalkParams>& ps, long n_max);

/// Exhaustive 2^n enumeration against the closed forms, every conditioning.
std::vector<CheckResult> verify_oracle(const std::vector<WalkParams>& ps, long n_max);

/// Generating-function coefficients against the closed forms, plus the
/// even-part factorization, the G^+ + G^- + G^0 = G sum, and boundary slices.
std::vector<CheckResult> verify_genfun(const std::vector<WalkParams>& ps, long n_max);

}  // namespace sojourn
