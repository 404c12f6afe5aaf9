#pragma once

#include "sojourn/conditioning.hpp"
#include "sojourn/rational.hpp"
#include "sojourn/walk_laws.hpp"

#include <utility>
#include <vector>

namespace sojourn {

enum class Boundary { start, end };  // the events {T_n = 0} and {T_n = n}

/// Closed-form evaluator for r^F_{k,n} = P{T_n = k, S_n in F}, sharing the
/// alpha_i = a_i (pq)^{i/2} table and its prefix sums across calls so a whole
/// (k, n) sweep costs O(n) rational operations per entry.
///
/// Out-of-parity (k, n) combinations return 0; only k > n, k < 0 and a pinned
/// endpoint of 0 are errors.
class ClosedForm {
  public:
    ClosedForm(WalkParams w, long n_max);

    Rat free(long k, long n) const;
    Rat bridge(long k, long n) const;
    Rat signed_mass(long k, long n, Sign sign) const;
    Rat pinned(long k, long n, long j) const;
    Rat mass(long k, long n, const Conditioning& cond) const;

    const WalkParams& params() const { return w_; }

  private:
    void require_range(long k, long n) const;
    const Rat& alpha(long i) const;  // i even, 0 <= i <= n_max
    Rat prefix(long m) const;        // sum_{i in E, i <= m} alpha_i (0 for m < 0)

    WalkParams w_;
    long n_max_;
    std::vector<Rat> alpha_;
    std::vector<Rat> prefix_;
};

/// One-off conveniences over ClosedForm.
Rat r_free(const WalkParams& w, long k, long n);
Rat r_bridge(const WalkParams& w, long k, long n);
Rat r_signed(const WalkParams& w, long k, long n, Sign sign);
Rat r_pinned(const WalkParams& w, long k, long n, long j);

/// r_{0,n} / r_{n,n}: the walk never positive (resp. never negative) up to n.
Rat r_boundary(const WalkParams& w, long n, Boundary which);
/// r_{1,n} / r_{n-1,n}: exactly one step counted (resp. all but one); zero
/// for even n.
Rat r_near_boundary(const WalkParams& w, long n, Boundary which);

/// Exact joint distribution of (T_n, S_n in F) with its declared total mass
/// P{S_n in F}; construction verifies the total exactly.
struct MassTable {
    long n;
    Conditioning cond;
    std::vector<Rat> masses;  // index k = 0..n
    Rat total_target;
};

MassTable exact_distribution(const WalkParams& w, long n, const Conditioning& cond);

/// Dynamic program over the first-return decomposition
///   r_{k,n} = (1/2) [ sum_{j even <= k} pi_j r_{k-j,n-j}
///                   + sum_{j even <= n-k} pi_j r_{k,n-j} ]
/// with hitting-time boundary rows for k = 0 and k = n. Route-independent of
/// ClosedForm: it touches only walk_laws masses.
class RecurrenceTable {
  public:
    RecurrenceTable(WalkParams w, Conditioning cond, long n_max);
    const Rat& at(long k, long n) const;
    long n_max() const { return n_max_; }

  private:
    long n_max_;
    std::vector<std::vector<Rat>> rows_;  // rows_[n][k]
};

Rat r_recursive(const WalkParams& w, long k, long n, const Conditioning& cond);

/// (r_{k,n}, r_{k,k} r_{0,n-k}) for even k <= n; the two agree.
std::pair<Rat, Rat> product_law_check(const WalkParams& w, long k, long n);

/// (r_{k,n} + r_{k+1,n}, r_{k+1,n+1}) for odd k <= n-1 with n odd.
std::pair<Rat, Rat> stitch_check(const WalkParams& w, long k, long n);

/// C(k, k/2) C(n-k, (n-k)/2) / 2^n: the symmetric-walk law for even k, n
/// (0 when either index is odd).
Rat chung_feller_symmetric(long k, long n);

/// P{T_infinity = k}: the total time ever spent on the positive side. Zero
/// for every finite k when p >= 1/2.
Rat limit_masses(const WalkParams& w, long k);

}  // namespace sojourn
