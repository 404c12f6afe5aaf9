#include "sojourn/series.hpp"

#include "sojourn/combinatorics.hpp"

#include <algorithm>
#include <ostream>

namespace sojourn {

namespace {

long common_order(long a, long b) { return std::min(a, b); }

}  // namespace

UniSeries UniSeries::operator+(const UniSeries& other) const {
    UniSeries out(common_order(order(), other.order()));
    for (long k = 0; k <= out.order(); ++k) out.set(k, at(k) + other.at(k));
    return out;
}

UniSeries UniSeries::operator-(const UniSeries& other) const {
    UniSeries out(common_order(order(), other.order()));
    for (long k = 0; k <= out.order(); ++k) out.set(k, at(k) - other.at(k));
    return out;
}

UniSeries UniSeries::operator*(const UniSeries& other) const {
    UniSeries out(common_order(order(), other.order()));
    for (long i = 0; i <= out.order(); ++i) {
        if (at(i).is_zero()) continue;
        for (long j = 0; i + j <= out.order(); ++j) {
            if (other.at(j).is_zero()) continue;
            out.set(i + j, out.at(i + j) + at(i) * other.at(j));
        }
    }
    return out;
}

UniSeries UniSeries::scaled(const Rat& factor) const {
    UniSeries out(order());
    for (long k = 0; k <= order(); ++k) out.set(k, at(k) * factor);
    return out;
}

UniSeries UniSeries::pow(long e) const {
    if (e < 0) throw std::domain_error("UniSeries::pow: negative exponent");
    UniSeries acc = UniSeries::constant(Rat(1), order());
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

UniSeries UniSeries::shifted_down() const {
    if (!at(0).is_zero())
        throw std::domain_error("UniSeries::shifted_down: nonzero constant term");
    UniSeries out(order());
    for (long k = 1; k <= order(); ++k) out.set(k - 1, at(k));
    return out;
}

BiSeries::BiSeries(long order) : order_(order) {
    if (order < 0) throw std::domain_error("BiSeries: negative order");
    coeffs_.assign(static_cast<size_t>((order + 1) * (order + 2) / 2), Rat(0));
}

size_t BiSeries::index(long k, long m) const {
    if (k < 0 || m < 0 || k + m > order_)
        throw std::out_of_range("BiSeries: index outside truncation");
    // Row k holds m = 0 .. order-k.
    const long base = k * (order_ + 1) - k * (k - 1) / 2;
    return static_cast<size_t>(base + m);
}

BiSeries BiSeries::operator+(const BiSeries& other) const {
    BiSeries out(common_order(order_, other.order_));
    for (long k = 0; k <= out.order_; ++k)
        for (long m = 0; k + m <= out.order_; ++m) out.set(k, m, at(k, m) + other.at(k, m));
    return out;
}

BiSeries BiSeries::operator-(const BiSeries& other) const {
    BiSeries out(common_order(order_, other.order_));
    for (long k = 0; k <= out.order_; ++k)
        for (long m = 0; k + m <= out.order_; ++m) out.set(k, m, at(k, m) - other.at(k, m));
    return out;
}

BiSeries BiSeries::operator*(const BiSeries& other) const {
    BiSeries out(common_order(order_, other.order_));
    const long d = out.order_;
    for (long k1 = 0; k1 <= d; ++k1) {
        for (long m1 = 0; k1 + m1 <= d; ++m1) {
            const Rat& c1 = at(k1, m1);
            if (c1.is_zero()) continue;
            const long budget = d - k1 - m1;
            for (long k2 = 0; k2 <= budget; ++k2) {
                for (long m2 = 0; k2 + m2 <= budget; ++m2) {
                    const Rat& c2 = other.at(k2, m2);
                    if (c2.is_zero()) continue;
                    out.set(k1 + k2, m1 + m2, out.at(k1 + k2, m1 + m2) + c1 * c2);
                }
            }
        }
    }
    return out;
}

BiSeries BiSeries::scaled(const Rat& factor) const {
    BiSeries out(order_);
    for (long k = 0; k <= order_; ++k)
        for (long m = 0; k + m <= order_; ++m) out.set(k, m, at(k, m) * factor);
    return out;
}

BiSeries BiSeries::negated_vars() const {
    BiSeries out(order_);
    for (long k = 0; k <= order_; ++k)
        for (long m = 0; k + m <= order_; ++m)
            out.set(k, m, (k + m) % 2 == 0 ? at(k, m) : -at(k, m));
    return out;
}

UniSeries BiSeries::slice_y0() const {
    UniSeries out(order_);
    for (long k = 0; k <= order_; ++k) out.set(k, at(k, 0));
    return out;
}

UniSeries BiSeries::slice_x0() const {
    UniSeries out(order_);
    for (long m = 0; m <= order_; ++m) out.set(m, at(0, m));
    return out;
}

bool BiSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return c.is_zero(); });
}

void BiSeries::dump_csv(std::ostream& out) const {
    out << "k,m,num,den\n";
    for (long k = 0; k <= order_; ++k)
        for (long m = 0; k + m <= order_; ++m) {
            const Rat& c = at(k, m);
            if (c.is_zero()) continue;
            out << k << ',' << m << ',' << numerator(c) << ',' << denominator(c) << '\n';
        }
}

UniSeries series_A(const WalkParams& w, long order) {
    UniSeries out(order);
    out.set(0, Rat(1));
    const Rat pq = w.pq();
    Rat power = pq;  // (pq)^{i/2} for i = 2, 4, ...
    for (long i = 2; i <= order; i += 2) {
        out.set(i, -4 * a_coeff(EvenIndex(i - 2)) * power);
        power *= pq;
    }
    return out;
}

UniSeries series_inv_A(const WalkParams& w, long order) {
    UniSeries out(order);
    const Rat pq = w.pq();
    Rat power(1);
    for (long i = 0; i <= order; i += 2) {
        out.set(i, b_coeff(EvenIndex(i)) * power);
        power *= pq;
    }
    return out;
}

UniSeries geometric_series(long order) {
    UniSeries out(order);
    for (long k = 0; k <= order; ++k) out.set(k, Rat(1));
    return out;
}

BiSeries inv_A_sum(const WalkParams& w, long order) {
    BiSeries out(order);
    const Rat pq = w.pq();
    // alpha[u] = a_{2u} (pq)^u; coefficient (i, j) (both even) is alpha[(i+j)/2].
    std::vector<Rat> alpha;
    Rat power(1);
    for (long i = 0; i <= order; i += 2) {
        alpha.push_back(a_coeff(EvenIndex(i)) * power);
        power *= pq;
    }
    for (long i = 0; i <= order; i += 2)
        for (long j = 0; i + j <= order; j += 2) out.set(i, j, alpha[static_cast<size_t>((i + j) / 2)]);
    return out;
}

BiSeries lift_x(const UniSeries& s, long order) {
    BiSeries out(order);
    for (long k = 0; k <= std::min(order, s.order()); ++k) out.set(k, 0, s.at(k));
    return out;
}

BiSeries lift_y(const UniSeries& s, long order) {
    BiSeries out(order);
    for (long m = 0; m <= std::min(order, s.order()); ++m) out.set(0, m, s.at(m));
    return out;
}

UniSeries gf_H(const WalkParams& w, long j, long order) {
    UniSeries out(order);
    for (long k = 0; k <= order; ++k) out.set(k, prob_S(w, k, j));
    return out;
}

UniSeries gf_H_closed(const WalkParams& w, long j, long order) {
    const UniSeries one_minus_A =
        UniSeries::constant(Rat(1), order) - series_A(w, order);
    const Rat half_step = j >= 0 ? 2 * w.q : 2 * w.p;
    // (1 - Abar)/(2qz) (or 2pz): shift down one power, scale.
    const UniSeries ladder = one_minus_A.shifted_down().scaled(Rat(1) / half_step);
    const long reach = j >= 0 ? j : -j;
    return series_inv_A(w, order) * ladder.pow(reach);
}

UniSeries gf_K(const WalkParams& w, long a, long order) {
    UniSeries out(order);
    for (long k = 1; k <= order; ++k) out.set(k, prob_tau(w, a, k));
    return out;
}

UniSeries gf_K_closed(const WalkParams& w, long a, long order) {
    const UniSeries one_minus_A =
        UniSeries::constant(Rat(1), order) - series_A(w, order);
    if (a == 0) return one_minus_A;
    const Rat half_step = a >= 1 ? 2 * w.q : 2 * w.p;
    const UniSeries ladder = one_minus_A.shifted_down().scaled(Rat(1) / half_step);
    return ladder.pow(a >= 1 ? a : -a);
}

BiSeries gf_master(const WalkParams& w, const Conditioning& cond, long order) {
    const BiSeries kernel = inv_A_sum(w, order);
    switch (cond.kind()) {
        case Conditioning::Kind::bridge:
            return kernel.scaled(Rat(2));
        case Conditioning::Kind::free: {
            // [(2p-1+Abar(x))/(1-x) + (2q-1+Abar(y))/(1-y)] / (Abar(x)+Abar(y)).
            const UniSeries geom = geometric_series(order);
            const UniSeries a_series = series_A(w, order);
            const UniSeries ux =
                (a_series + UniSeries::constant(2 * w.p - 1, order)) * geom;
            const UniSeries uy =
                (a_series + UniSeries::constant(2 * w.q - 1, order)) * geom;
            return kernel * (lift_x(ux, order) + lift_y(uy, order));
        }
        case Conditioning::Kind::positive: {
            // (2px - 1 + Abar(x)) / [(1-x)(Abar(x)+Abar(y))].
            UniSeries numer = series_A(w, order) - UniSeries::constant(Rat(1), order);
            if (order >= 1) numer.set(1, numer.at(1) + 2 * w.p);
            return kernel * lift_x(numer * geometric_series(order), order);
        }
        case Conditioning::Kind::negative: {
            UniSeries numer = series_A(w, order) - UniSeries::constant(Rat(1), order);
            if (order >= 1) numer.set(1, numer.at(1) + 2 * w.q);
            return kernel * lift_y(numer * geometric_series(order), order);
        }
        case Conditioning::Kind::pinned: {
            const long j = cond.pin();
            const UniSeries hitting = gf_K(w, j, order);
            const BiSeries lifted =
                j > 0 ? lift_x(hitting, order) : lift_y(hitting, order);
            return kernel.scaled(Rat(2)) * lifted;
        }
    }
    throw std::logic_error("gf_master: unreachable");
}

BiSeries gf_even_part(const WalkParams& w, long order) {
    const BiSeries g = gf_master(w, Conditioning::free(), order);
    return (g + g.negated_vars()).scaled(Rat(1, 2));
}

}  // namespace sojourn
