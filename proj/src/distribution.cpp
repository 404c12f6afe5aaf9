#include "sojourn/distribution.hpp"

#include "sojourn/combinatorics.hpp"

#include <string>

namespace sojourn {

ClosedForm::ClosedForm(WalkParams w, long n_max) : w_(std::move(w)), n_max_(n_max) {
    if (n_max < 0) throw std::domain_error("ClosedForm: negative horizon");
    const Rat pq = w_.pq();
    Rat power(1);
    alpha_.reserve(static_cast<size_t>(n_max / 2) + 1);
    prefix_.reserve(alpha_.capacity());
    Rat running(0);
    for (long i = 0; i <= n_max; i += 2) {
        alpha_.push_back(a_coeff(EvenIndex(i)) * power);
        running += alpha_.back();
        prefix_.push_back(running);
        power *= pq;
    }
}

void ClosedForm::require_range(long k, long n) const {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("sojourn mass: need 0 <= k <= n");
    if (n > n_max_)
        throw std::domain_error("ClosedForm: n exceeds the table horizon");
}

const Rat& ClosedForm::alpha(long i) const {
    return alpha_[static_cast<size_t>(i / 2)];
}

Rat ClosedForm::prefix(long m) const {
    if (m < 0) return Rat(0);
    const long u = std::min(m, n_max_) / 2;
    return prefix_[static_cast<size_t>(u)];
}

Rat ClosedForm::free(long k, long n) const {
    require_range(k, n);
    const Rat pq = w_.pq();
    Rat total(0);
    if ((n - k) % 2 == 0) {
        Rat conv(0);
        for (long u = 0; u <= k - 2; u += 2) conv += alpha(n - k + u) * prefix(k - 2 - u);
        total += 2 * w_.p * (prefix(n) - prefix(n - k - 2)) - 4 * pq * conv;
    }
    if (k % 2 == 0) {
        Rat conv(0);
        for (long u = 0; u <= n - k - 2; u += 2) conv += alpha(k + u) * prefix(n - k - 2 - u);
        total += 2 * w_.q * (prefix(n) - prefix(k - 2)) - 4 * pq * conv;
    }
    return total;
}

Rat ClosedForm::bridge(long k, long n) const {
    require_range(k, n);
    if (n % 2 != 0 || k % 2 != 0) return Rat(0);
    return 2 * alpha(n);
}

Rat ClosedForm::signed_mass(long k, long n, Sign sign) const {
    require_range(k, n);
    const Rat pq = w_.pq();
    if (sign == Sign::plus) {
        if ((n - k) % 2 != 0) return Rat(0);
        Rat conv(0);
        for (long u = 0; u <= k - 2; u += 2) conv += alpha(n - k + u) * prefix(k - 2 - u);
        return 2 * w_.p * (prefix(n - 1) - prefix(n - k - 2)) - 4 * pq * conv;
    }
    if (k % 2 != 0) return Rat(0);
    Rat conv(0);
    for (long u = 0; u <= n - k - 2; u += 2) conv += alpha(k + u) * prefix(n - k - 2 - u);
    return 2 * w_.q * (prefix(n - 1) - prefix(k - 2)) - 4 * pq * conv;
}

namespace {

// r^j_{k,n} for j >= 1:
//   2j sum_{i = j, j+2, ..., k} (a_{n-i}/i) C(i, (i+j)/2) p^{(n+j)/2} q^{(n-j)/2}
// gated by j <= k, k - j even, n - k even. The j <= -1 case is the dual walk:
// swap p and q, reflect k to n - k, negate j.
Rat pinned_mass(const WalkParams& w, long k, long n, long j) {
    if (j == 0) throw std::domain_error("pinned endpoint 0 is the bridge");
    if (j < 0) return pinned_mass(w.swapped(), n - k, n, -j);
    if ((n - k) % 2 != 0 || (k - j) % 2 != 0 || j > k) return Rat(0);
    Rat sum(0);
    for (long i = j; i <= k; i += 2)
        sum += a_coeff(EvenIndex(n - i)) * Rat(binomial(i, (i + j) / 2), Int(i));
    return 2 * j * sum * rat_pow(w.p, (n + j) / 2) * rat_pow(w.q, (n - j) / 2);
}

}  // namespace

Rat ClosedForm::pinned(long k, long n, long j) const {
    require_range(k, n);
    return pinned_mass(w_, k, n, j);
}

Rat ClosedForm::mass(long k, long n, const Conditioning& cond) const {
    switch (cond.kind()) {
        case Conditioning::Kind::free: return free(k, n);
        case Conditioning::Kind::bridge: return bridge(k, n);
        case Conditioning::Kind::positive: return signed_mass(k, n, Sign::plus);
        case Conditioning::Kind::negative: return signed_mass(k, n, Sign::minus);
        case Conditioning::Kind::pinned: return pinned(k, n, cond.pin());
    }
    throw std::logic_error("ClosedForm::mass: unreachable");
}

Rat r_free(const WalkParams& w, long k, long n) { return ClosedForm(w, n).free(k, n); }
Rat r_bridge(const WalkParams& w, long k, long n) { return ClosedForm(w, n).bridge(k, n); }
Rat r_signed(const WalkParams& w, long k, long n, Sign sign) {
    return ClosedForm(w, n).signed_mass(k, n, sign);
}
Rat r_pinned(const WalkParams& w, long k, long n, long j) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("sojourn mass: need 0 <= k <= n");
    return pinned_mass(w, k, n, j);
}

Rat r_boundary(const WalkParams& w, long n, Boundary which) {
    if (n < 0) throw std::domain_error("r_boundary: negative n");
    // r_{0,n} = 1 - 2p sum_{i in E, i <= n-1} alpha_i, and p <-> q for r_{n,n}.
    const Rat& step = which == Boundary::start ? w.p : w.q;
    Rat tail(0);
    for (long i = 0; i <= n - 1; i += 2) tail += a_coeff(EvenIndex(i)) * rat_pow(w.pq(), i / 2);
    return 1 - 2 * step * tail;
}

Rat r_near_boundary(const WalkParams& w, long n, Boundary which) {
    if (n < 1) throw std::domain_error("r_near_boundary: need n >= 1");
    if (n % 2 == 0) return Rat(0);
    const Rat base = 2 * a_coeff(EvenIndex(n - 1));
    if (which == Boundary::start)
        return base * rat_pow(w.p, (n + 1) / 2) * rat_pow(w.q, (n - 1) / 2);
    return base * rat_pow(w.p, (n - 1) / 2) * rat_pow(w.q, (n + 1) / 2);
}

MassTable exact_distribution(const WalkParams& w, long n, const Conditioning& cond) {
    if (n < 0) throw std::domain_error("exact_distribution: negative n");
    const ClosedForm cf(w, n);
    MassTable table{n, cond, {}, prob_S_in(w, n, cond)};
    table.masses.reserve(static_cast<size_t>(n) + 1);
    Rat sum(0);
    for (long k = 0; k <= n; ++k) {
        table.masses.push_back(cf.mass(k, n, cond));
        if (table.masses.back() < 0)
            throw std::logic_error("exact_distribution: negative mass at k=" + std::to_string(k));
        sum += table.masses.back();
    }
    if (sum != table.total_target)
        throw std::logic_error("exact_distribution: masses do not sum to P{S_n in F}");
    return table;
}

RecurrenceTable::RecurrenceTable(WalkParams w, Conditioning cond, long n_max)
    : n_max_(n_max) {
    if (n_max < 0) throw std::domain_error("RecurrenceTable: negative horizon");
    // First-return masses pi_j, even j.
    std::vector<Rat> pi(static_cast<size_t>(n_max) + 1, Rat(0));
    for (long j = 2; j <= n_max; j += 2) pi[static_cast<size_t>(j)] = prob_tau(w, 0, j);

    rows_.resize(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        auto& row = rows_[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, Rat(0));
        if (n == 0) {
            row[0] = cond.contains(0) ? Rat(1) : Rat(0);
            continue;
        }
        // Boundary columns from the hitting-time representation.
        Rat start_sum(0);
        Rat end_sum(0);
        for (long j = 1; j <= n; j += 2) {
            const Rat pi_next = j + 1 <= n_max ? pi[static_cast<size_t>(j + 1)]
                                               : prob_tau(w, 0, j + 1);
            start_sum += pi_next * prob_S_in(w, n - j, cond, +1);
            end_sum += pi_next * prob_S_in(w, n - j, cond, -1);
        }
        const Rat in_f = prob_S_in(w, n, cond);
        row[0] = in_f - start_sum / (2 * w.q);
        row[static_cast<size_t>(n)] = in_f - end_sum / (2 * w.p);
        for (long k = 1; k <= n - 1; ++k) {
            Rat acc(0);
            for (long j = 2; j <= k; j += 2)
                acc += pi[static_cast<size_t>(j)] *
                       rows_[static_cast<size_t>(n - j)][static_cast<size_t>(k - j)];
            for (long j = 2; j <= n - k; j += 2)
                acc += pi[static_cast<size_t>(j)] *
                       rows_[static_cast<size_t>(n - j)][static_cast<size_t>(k)];
            row[static_cast<size_t>(k)] = acc / 2;
        }
    }
}

const Rat& RecurrenceTable::at(long k, long n) const {
    if (n < 0 || n > n_max_ || k < 0 || k > n)
        throw std::domain_error("RecurrenceTable::at: need 0 <= k <= n <= n_max");
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Rat r_recursive(const WalkParams& w, long k, long n, const Conditioning& cond) {
    return RecurrenceTable(w, cond, n).at(k, n);
}

std::pair<Rat, Rat> product_law_check(const WalkParams& w, long k, long n) {
    if (k % 2 != 0 || n % 2 != 0)
        throw std::domain_error("product_law_check: k and n must be even");
    const ClosedForm cf(w, n);
    return {cf.free(k, n), cf.free(k, k) * cf.free(0, n - k)};
}

std::pair<Rat, Rat> stitch_check(const WalkParams& w, long k, long n) {
    if (k % 2 == 0 || n % 2 == 0)
        throw std::domain_error("stitch_check: k and n must be odd");
    if (k > n - 1) throw std::domain_error("stitch_check: need k <= n - 1");
    const ClosedForm cf(w, n + 1);
    return {cf.free(k, n) + cf.free(k + 1, n), cf.free(k + 1, n + 1)};
}

Rat chung_feller_symmetric(long k, long n) {
    if (k < 0 || n < 0 || k > n)
        throw std::domain_error("chung_feller_symmetric: need 0 <= k <= n");
    if (k % 2 != 0 || n % 2 != 0) return Rat(0);
    const Rat numer(binomial(k, k / 2) * binomial(n - k, (n - k) / 2));
    return numer / rat_pow(Rat(2), n);
}

Rat limit_masses(const WalkParams& w, long k) {
    if (k < 0) throw std::domain_error("limit_masses: negative k");
    if (w.p >= Rat(1, 2)) return Rat(0);  // mass escapes to infinity
    if (k % 2 != 0) return Rat(0);
    // r_{k,k} = (2 - 1/p)^+ + 2q sum_{i in E, i >= k} alpha_i, with the full
    // alpha sum in closed form (1 - |p - q|)/(4pq); here p < 1/2 kills the
    // (2 - 1/p)^+ term and the closed form is 1/(2q).
    const Rat full = (1 - (w.q - w.p)) / (4 * w.pq());
    Rat head(0);
    for (long i = 0; i <= k - 2; i += 2)
        head += a_coeff(EvenIndex(i)) * rat_pow(w.pq(), i / 2);
    const Rat r_kk = 2 * w.q * (full - head);
    return (2 - 1 / w.q) * r_kk;
}

}  // namespace sojourn
