#pragma once

#include "sojourn/conditioning.hpp"
#include "sojourn/rational.hpp"

namespace sojourn {

/// Step law of the +-1 walk: p = P{X = +1}, q = 1 - p, both exact rationals
/// with 0 < p < 1.
struct WalkParams {
    Rat p;
    Rat q;

    explicit WalkParams(Rat p_up) : p(std::move(p_up)), q(1 - p) {
        if (p <= 0 || p >= 1)
            throw std::domain_error("WalkParams: p must satisfy 0 < p < 1");
    }

    Rat pq() const { return p * q; }
    WalkParams swapped() const { return WalkParams(q); }
};

/// P{S_k = j}. 0 whenever |j| > k or k - j is odd; no index is an error.
Rat prob_S(const WalkParams& w, long k, long j);

/// P{S_k >= c} and P{S_k <= c}.
Rat prob_S_at_least(const WalkParams& w, long k, long c);
Rat prob_S_at_most(const WalkParams& w, long k, long c);

/// P{S_k in F} for the walk started at `start` (0, +1 or -1 in practice).
Rat prob_S_in(const WalkParams& w, long k, const Conditioning& cond, long start = 0);

/// P{tau_a = k}, the first hitting time of level a (a = 0 is the first
/// return to the origin). 0 outside the reachable parity/range.
Rat prob_tau(const WalkParams& w, long a, long k);

/// P{tau_0 = k, S_1 > 0} = P{tau_0 = k, S_1 < 0} = pi_k / 2.
Rat prob_tau0_with_sign(const WalkParams& w, long k);

}  // namespace sojourn
