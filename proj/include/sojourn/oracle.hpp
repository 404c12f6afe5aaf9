#pragma once

#include "sojourn/conditioning.hpp"
#include "sojourn/distribution.hpp"
#include "sojourn/walk_laws.hpp"

#include <cstdint>
#include <vector>

namespace sojourn {

/// Thrown when an exhaustive enumeration would exceed the configured cap.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Outcome of a single sign sequence: the counted sojourn steps, the final
/// position, and the path weight p^{#up} q^{#down}.
struct PathOutcome {
    long t;
    long endpoint;
    Rat weight;
};

/// Applies the counting rule step by step: a step j is counted when S_j > 0,
/// or when S_j = 0 arrived from S_{j-1} > 0.
PathOutcome path_outcome(const WalkParams& w, const std::vector<int>& steps);

/// Census of all 2^n sign sequences. counts[t][u] is the number of paths
/// with sojourn count t and u up-steps; the endpoint is 2u - n, so the path
/// weight within a bucket is constant and masses stay exact.
struct PathCounts {
    long n;
    std::vector<std::vector<std::uint64_t>> counts;

    std::uint64_t count(long t, long endpoint) const;
};

/// Enumeration cap: 16 by default, raisable through SOJOURN_ORACLE_CAP up to
/// a hard stop of 24.
long oracle_cap();

PathCounts enumerate_counts(long n);

MassTable masses_from_counts(const PathCounts& census, const WalkParams& w,
                             const Conditioning& cond);

/// Exhaustive ground truth for the joint law (T_n, S_n in F).
MassTable enumerate(const WalkParams& w, long n, const Conditioning& cond);

/// Seeded Monte Carlo estimate. freq[k] is the joint relative frequency of
/// {T_n = k, S_n in F} over all trials; `retained` counts the trials whose
/// endpoint satisfied the conditioning. Bit-reproducible for a fixed seed:
/// one mt19937_64 draw per step, up-step iff draw < floor(p * 2^64).
struct SimulationResult {
    long n;
    Conditioning cond;
    std::uint64_t trials;
    std::uint64_t seed;
    std::uint64_t retained;
    std::vector<double> freq;
};

SimulationResult simulate(const WalkParams& w, long n, std::uint64_t trials,
                          std::uint64_t seed, const Conditioning& cond);

}  // namespace sojourn
