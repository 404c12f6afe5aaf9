#include "sojourn/verify.hpp"

#include "sojourn/distribution.hpp"
#include "sojourn/oracle.hpp"
#include "sojourn/series.hpp"

#include <algorithm>
#include <sstream>

namespace sojourn {

namespace {

std::string p_tag(const WalkParams& w) { return "p=" + to_string(w.p); }

std::vector<Conditioning> all_conditionings(long pin_reach) {
    std::vector<Conditioning> conds{Conditioning::free(), Conditioning::bridge(),
                                    Conditioning::positive(), Conditioning::negative()};
    for (long j = 1; j <= pin_reach; ++j) {
        conds.push_back(Conditioning::pinned(j));
        conds.push_back(Conditioning::pinned(-j));
    }
    return conds;
}

// Records only the first counterexample.
void record(CheckResult& check, const std::string& instance) {
    if (!check.pass) return;
    check.pass = false;
    check.counterexample = instance;
}

template <class T>
std::string instance_str(const WalkParams& w, const Conditioning& cond, long k, long n,
                         const T& lhs, const T& rhs) {
    std::ostringstream out;
    out << p_tag(w) << " cond=" << cond.tag() << " k=" << k << " n=" << n << ": " << lhs
        << " != " << rhs;
    return out.str();
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::vector<CheckResult> verify_routes(const std::vector<WalkParams>& ps, long n_max) {
    CheckResult check{"recurrence-vs-closed", true, {}};
    for (const WalkParams& w : ps) {
        const ClosedForm cf(w, n_max);
        for (const Conditioning& cond : all_conditionings(n_max)) {
            const RecurrenceTable rec(w, cond, n_max);
            for (long n = 0; n <= n_max; ++n)
                for (long k = 0; k <= n; ++k)
                    if (rec.at(k, n) != cf.mass(k, n, cond))
                        record(check, instance_str(w, cond, k, n, rec.at(k, n),
                                                   cf.mass(k, n, cond)));
        }
    }
    return {check};
}

std::vector<CheckResult> verify_identities(const std::vector<WalkParams>& ps, long n_max) {
    CheckResult normalization{"normalization", true, {}};
    CheckResult decomposition{"sign-bridge-decomposition", true, {}};
    CheckResult pinned_sum{"pinned-endpoint-sum", true, {}};
    CheckResult product{"product-law", true, {}};
    CheckResult stitch{"odd-index-stitch", true, {}};
    CheckResult uniform{"bridge-uniformity", true, {}};
    CheckResult symmetric{"symmetric-binomial-product", true, {}};
    CheckResult duality{"duality", true, {}};
    CheckResult boundary{"boundary-columns", true, {}};
    CheckResult total_sojourn{"total-sojourn-partial-sums", true, {}};

    const long pinned_horizon = std::min<long>(n_max, 16);
    for (const WalkParams& w : ps) {
        const ClosedForm cf(w, n_max + 1);
        const ClosedForm dual(w.swapped(), n_max);
        const auto free_cond = Conditioning::free();
        for (long n = 0; n <= n_max; ++n) {
            Rat total(0);
            for (long k = 0; k <= n; ++k) {
                const Rat mass = cf.free(k, n);
                total += mass;
                const Rat split = cf.signed_mass(k, n, Sign::plus) +
                                  cf.signed_mass(k, n, Sign::minus) + cf.bridge(k, n);
                if (split != mass)
                    record(decomposition, instance_str(w, free_cond, k, n, split, mass));
                if (dual.free(n - k, n) != mass)
                    record(duality, instance_str(w, free_cond, k, n, dual.free(n - k, n), mass));
                if (dual.signed_mass(n - k, n, Sign::minus) != cf.signed_mass(k, n, Sign::plus))
                    record(duality, instance_str(w, Conditioning::positive(), k, n,
                                                 dual.signed_mass(n - k, n, Sign::minus),
                                                 cf.signed_mass(k, n, Sign::plus)));
                if (n <= pinned_horizon) {
                    Rat endpoint_total = cf.bridge(k, n);
                    for (long j = 1; j <= n; ++j)
                        endpoint_total += cf.pinned(k, n, j) + cf.pinned(k, n, -j);
                    if (endpoint_total != mass)
                        record(pinned_sum, instance_str(w, free_cond, k, n, endpoint_total, mass));
                    for (long j = 1; j <= n; ++j)
                        if (cf.pinned(k, n, j) != dual.pinned(n - k, n, -j))
                            record(duality,
                                   instance_str(w, Conditioning::pinned(j), k, n,
                                                dual.pinned(n - k, n, -j), cf.pinned(k, n, j)));
                }
                if (k % 2 == 0 && n % 2 == 0) {
                    const auto sides = product_law_check(w, k, n);
                    if (sides.first != sides.second)
                        record(product,
                               instance_str(w, free_cond, k, n, sides.first, sides.second));
                    if (w.p == Rat(1, 2) &&
                        chung_feller_symmetric(k, n) != cf.free(k, n))
                        record(symmetric, instance_str(w, free_cond, k, n,
                                                       chung_feller_symmetric(k, n),
                                                       cf.free(k, n)));
                }
                if (k % 2 == 1 && n % 2 == 1 && k <= n - 1) {
                    const auto sides = stitch_check(w, k, n);
                    if (sides.first != sides.second)
                        record(stitch,
                               instance_str(w, free_cond, k, n, sides.first, sides.second));
                }
                if (k % 2 == 0 && n % 2 == 0 && n >= 2) {
                    // r^0_{k,n} / P{S_n = 0} = 2/(n+2) independent of k and p.
                    const Rat conditional = cf.bridge(k, n) / prob_S(w, n, 0);
                    if (conditional != Rat(Int(2), Int(n + 2)))
                        record(uniform, instance_str(w, Conditioning::bridge(), k, n,
                                                     conditional, Rat(Int(2), Int(n + 2))));
                }
            }
            if (total != 1)
                record(normalization, instance_str(w, free_cond, -1, n, total, Rat(1)));
            if (cf.free(0, n) != r_boundary(w, n, Boundary::start))
                record(boundary, instance_str(w, free_cond, 0, n, cf.free(0, n),
                                              r_boundary(w, n, Boundary::start)));
            if (cf.free(n, n) != r_boundary(w, n, Boundary::end))
                record(boundary, instance_str(w, free_cond, n, n, cf.free(n, n),
                                              r_boundary(w, n, Boundary::end)));
            if (n >= 1 && cf.free(1, n) != r_near_boundary(w, n, Boundary::start))
                record(boundary, instance_str(w, free_cond, 1, n, cf.free(1, n),
                                              r_near_boundary(w, n, Boundary::start)));
        }
        // Total sojourn time: partial sums must be nondecreasing and <= 1;
        // every finite mass is zero when p >= 1/2.
        Rat partial(0);
        for (long k = 0; k <= 60; k += 2) {
            const Rat mass = limit_masses(w, k);
            if (mass < 0 || (w.p >= Rat(1, 2) && mass != 0))
                record(total_sojourn,
                       instance_str(w, free_cond, k, -1, mass, Rat(0)));
            partial += mass;
            if (partial > 1)
                record(total_sojourn, instance_str(w, free_cond, k, -1, partial, Rat(1)));
        }
    }
    return {normalization, decomposition, pinned_sum, product,   stitch,
            uniform,       symmetric,     duality,    boundary, total_sojourn};
}

std::vector<CheckResult> verify_oracle(const std::vector<WalkParams>& ps, long n_max) {
    CheckResult check{"enumeration-vs-closed", true, {}};
    for (long n = 0; n <= n_max; ++n) {
        const PathCounts census = enumerate_counts(n);
        for (const WalkParams& w : ps) {
            const ClosedForm cf(w, n);
            for (const Conditioning& cond : all_conditionings(n)) {
                const MassTable table = masses_from_counts(census, w, cond);
                for (long k = 0; k <= n; ++k)
                    if (table.masses[static_cast<size_t>(k)] != cf.mass(k, n, cond))
                        record(check,
                               instance_str(w, cond, k, n,
                                            table.masses[static_cast<size_t>(k)],
                                            cf.mass(k, n, cond)));
            }
        }
    }
    return {check};
}

std::vector<CheckResult> verify_genfun(const std::vector<WalkParams>& ps, long n_max) {
    CheckResult coeffs{"genfun-vs-closed", true, {}};
    CheckResult factorization{"even-part-factorization", true, {}};
    CheckResult sum_identity{"genfun-sum-identity", true, {}};
    CheckResult slices{"boundary-slices", true, {}};
    const long order = n_max;
    for (const WalkParams& w : ps) {
        const ClosedForm cf(w, order);
        for (const Conditioning& cond : all_conditionings(order)) {
            const BiSeries g = gf_master(w, cond, order);
            for (long n = 0; n <= order; ++n)
                for (long k = 0; k <= n; ++k)
                    if (g.at(k, n - k) != cf.mass(k, n, cond))
                        record(coeffs, instance_str(w, cond, k, n, g.at(k, n - k),
                                                    cf.mass(k, n, cond)));
        }

        const BiSeries even = gf_even_part(w, order);
        const BiSeries residual =
            even - lift_x(even.slice_y0(), order) * lift_y(even.slice_x0(), order);
        if (!residual.is_zero())
            record(factorization, p_tag(w) + ": even-part factorization residual nonzero");

        const BiSeries total = gf_master(w, Conditioning::positive(), order) +
                               gf_master(w, Conditioning::negative(), order) +
                               gf_master(w, Conditioning::bridge(), order);
        if (!(total == gf_master(w, Conditioning::free(), order)))
            record(sum_identity, p_tag(w) + ": G+ + G- + G0 != G");

        const BiSeries g_free = gf_master(w, Conditioning::free(), order);
        const UniSeries by_len = g_free.slice_x0();   // r_{0,n} y^n
        const UniSeries by_full = g_free.slice_y0();  // r_{n,n} x^n
        for (long n = 0; n <= order; ++n) {
            if (by_len.at(n) != r_boundary(w, n, Boundary::start))
                record(slices, instance_str(w, Conditioning::free(), 0, n, by_len.at(n),
                                            r_boundary(w, n, Boundary::start)));
            if (by_full.at(n) != r_boundary(w, n, Boundary::end))
                record(slices, instance_str(w, Conditioning::free(), n, n, by_full.at(n),
                                            r_boundary(w, n, Boundary::end)));
        }
    }
    return {coeffs, factorization, sum_identity, slices};
}

}  // namespace sojourn
