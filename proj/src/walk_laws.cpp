#include "sojourn/walk_laws.hpp"

#include "sojourn/combinatorics.hpp"

#include <algorithm>

namespace sojourn {

Rat prob_S(const WalkParams& w, long k, long j) {
    if (k < 0) return Rat(0);
    if (j > k || j < -k) return Rat(0);
    if ((k - j) % 2 != 0) return Rat(0);
    const long ups = (k + j) / 2;
    return Rat(binomial(k, ups)) * rat_pow(w.p, ups) * rat_pow(w.q, k - ups);
}

Rat prob_S_at_least(const WalkParams& w, long k, long c) {
    Rat total(0);
    for (long j = std::max(c, -k); j <= k; ++j) total += prob_S(w, k, j);
    return total;
}

Rat prob_S_at_most(const WalkParams& w, long k, long c) {
    Rat total(0);
    for (long j = -k; j <= std::min(c, k); ++j) total += prob_S(w, k, j);
    return total;
}

Rat prob_S_in(const WalkParams& w, long k, const Conditioning& cond, long start) {
    // The walk started at i lands in F iff the increment lands in F - i.
    switch (cond.kind()) {
        case Conditioning::Kind::free: return Rat(1);
        case Conditioning::Kind::bridge: return prob_S(w, k, -start);
        case Conditioning::Kind::positive: return prob_S_at_least(w, k, 1 - start);
        case Conditioning::Kind::negative: return prob_S_at_most(w, k, -1 - start);
        case Conditioning::Kind::pinned: return prob_S(w, k, cond.pin() - start);
    }
    return Rat(0);
}

Rat prob_tau(const WalkParams& w, long a, long k) {
    if (k <= 0) return Rat(0);
    if (a == 0) {
        // pi_k = 4 a_{k-2} (pq)^{k/2}, even k >= 2 only.
        if (k % 2 != 0) return Rat(0);
        return 4 * a_coeff(EvenIndex(k - 2)) * rat_pow(w.pq(), k / 2);
    }
    const long abs_a = a > 0 ? a : -a;
    if (k < abs_a || (k - a) % 2 != 0) return Rat(0);
    return Rat(Int(abs_a), Int(k)) * prob_S(w, k, a);
}

Rat prob_tau0_with_sign(const WalkParams& w, long k) {
    return prob_tau(w, 0, k) / 2;
}

}  // namespace sojourn
