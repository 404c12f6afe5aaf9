#include "sojourn/oracle.hpp"

#include <cstdlib>
#include <random>
#include <string>

namespace sojourn {

namespace {

constexpr long kDefaultCap = 16;
constexpr long kHardCap = 24;

// Counting rule for one step; requires the previous position when landing
// on zero (landing on zero implies the previous position was +-1).
inline bool step_counts(long pos, long prev) {
    if (pos > 0) return true;
    if (pos < 0) return false;
    if (prev != 1 && prev != -1)
        throw std::logic_error("sojourn rule: reached 0 from a non-adjacent level");
    return prev > 0;
}

}  // namespace

PathOutcome path_outcome(const WalkParams& w, const std::vector<int>& steps) {
    long pos = 0;
    long t = 0;
    long ups = 0;
    for (int s : steps) {
        if (s != 1 && s != -1) throw std::domain_error("path_outcome: steps must be +-1");
        const long prev = pos;
        pos += s;
        if (s == 1) ++ups;
        if (step_counts(pos, prev)) ++t;
    }
    const long n = static_cast<long>(steps.size());
    return {t, pos, rat_pow(w.p, ups) * rat_pow(w.q, n - ups)};
}

std::uint64_t PathCounts::count(long t, long endpoint) const {
    if (t < 0 || t > n) return 0;
    if (endpoint < -n || endpoint > n || (endpoint + n) % 2 != 0) return 0;
    return counts[static_cast<size_t>(t)][static_cast<size_t>((endpoint + n) / 2)];
}

long oracle_cap() {
    long cap = kDefaultCap;
    if (const char* env = std::getenv("SOJOURN_ORACLE_CAP")) {
        try {
            cap = std::max(cap, std::stol(env));
        } catch (const std::exception&) {
            // Unparsable value: keep the default.
        }
    }
    return std::min(cap, kHardCap);
}

PathCounts enumerate_counts(long n) {
    if (n < 0) throw std::domain_error("enumerate_counts: negative n");
    if (n > oracle_cap())
        throw ResourceLimitError("enumerate_counts: n=" + std::to_string(n) +
                                 " exceeds the enumeration cap " +
                                 std::to_string(oracle_cap()));
    PathCounts census{n, std::vector<std::vector<std::uint64_t>>(
                             static_cast<size_t>(n) + 1,
                             std::vector<std::uint64_t>(static_cast<size_t>(n) + 1, 0))};
    // Depth-first over sign prefixes with incremental (position, count, ups).
    struct Walker {
        long n;
        PathCounts& census;
        void descend(long depth, long pos, long t, long ups) {
            if (depth == n) {
                ++census.counts[static_cast<size_t>(t)][static_cast<size_t>(ups)];
                return;
            }
            const long up = pos + 1;
            descend(depth + 1, up, t + (step_counts(up, pos) ? 1 : 0), ups + 1);
            const long down = pos - 1;
            descend(depth + 1, down, t + (step_counts(down, pos) ? 1 : 0), ups);
        }
    };
    Walker{n, census}.descend(0, 0, 0, 0);
    return census;
}

MassTable masses_from_counts(const PathCounts& census, const WalkParams& w,
                             const Conditioning& cond) {
    const long n = census.n;
    // weight[u] = p^u q^{n-u}.
    std::vector<Rat> weight(static_cast<size_t>(n) + 1);
    weight[0] = rat_pow(w.q, n);
    for (long u = 1; u <= n; ++u)
        weight[static_cast<size_t>(u)] = weight[static_cast<size_t>(u - 1)] * w.p / w.q;
    MassTable table{n, cond, {}, prob_S_in(w, n, cond)};
    table.masses.assign(static_cast<size_t>(n) + 1, Rat(0));
    Rat sum(0);
    for (long t = 0; t <= n; ++t) {
        Rat mass(0);
        for (long u = 0; u <= n; ++u) {
            const std::uint64_t c = census.counts[static_cast<size_t>(t)][static_cast<size_t>(u)];
            if (c == 0) continue;
            if (!cond.contains(2 * u - n)) continue;
            mass += Rat(Int(c)) * weight[static_cast<size_t>(u)];
        }
        table.masses[static_cast<size_t>(t)] = mass;
        sum += mass;
    }
    if (sum != table.total_target)
        throw std::logic_error("oracle: enumerated masses do not sum to P{S_n in F}");
    return table;
}

MassTable enumerate(const WalkParams& w, long n, const Conditioning& cond) {
    return masses_from_counts(enumerate_counts(n), w, cond);
}

SimulationResult simulate(const WalkParams& w, long n, std::uint64_t trials,
                          std::uint64_t seed, const Conditioning& cond) {
    if (n < 0) throw std::domain_error("simulate: negative n");
    if (trials == 0) throw std::domain_error("simulate: need at least one trial");
    // Up-step threshold floor(p * 2^64) on raw 64-bit draws.
    const Int threshold_big = (numerator(w.p) << 64) / denominator(w.p);
    const std::uint64_t threshold = threshold_big.convert_to<std::uint64_t>();

    std::mt19937_64 engine(seed);
    std::vector<std::uint64_t> hits(static_cast<size_t>(n) + 1, 0);
    std::uint64_t retained = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        long pos = 0;
        long t = 0;
        for (long step = 0; step < n; ++step) {
            const long prev = pos;
            pos += engine() < threshold ? 1 : -1;
            if (step_counts(pos, prev)) ++t;
        }
        if (cond.contains(pos)) {
            ++hits[static_cast<size_t>(t)];
            ++retained;
        }
    }
    SimulationResult result{n, cond, trials, seed, retained, {}};
    result.freq.reserve(hits.size());
    for (std::uint64_t h : hits)
        result.freq.push_back(static_cast<double>(h) / static_cast<double>(trials));
    return result;
}

}  // namespace sojourn
