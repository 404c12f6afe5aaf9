// Acceptance suite: every criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any criterion fails.

#include "sojourn/asymptotics.hpp"
#include "sojourn/distribution.hpp"
#include "sojourn/io.hpp"
#include "sojourn/oracle.hpp"
#include "sojourn/series.hpp"

#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sojourn;

struct Failure {
    std::string detail;
};

void expect(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

std::string rat_str(const Rat& r) { return to_string(r); }

// ---------------------------------------------------------------------------
// Criterion 1: the worked tables for n = 1..8, exact equality at four p's.

using Poly = std::function<Rat(const Rat&, const Rat&)>;

struct GoldenEntry {
    long n;
    long k;
    char cond;  // 'f' free, 'b' bridge, '+' positive
    Poly value;
};

std::vector<GoldenEntry> golden_entries() {
    std::vector<GoldenEntry> e;
    auto add = [&e](long n, long k, char cond, Poly f) { e.push_back({n, k, cond, f}); };

    // Unconditioned distributions.
    add(1, 0, 'f', [](const Rat&, const Rat& q) { return q; });
    add(1, 1, 'f', [](const Rat& p, const Rat&) { return p; });
    add(2, 0, 'f', [](const Rat&, const Rat& q) { return q; });
    add(2, 1, 'f', [](const Rat&, const Rat&) { return Rat(0); });
    add(2, 2, 'f', [](const Rat& p, const Rat&) { return p; });
    add(3, 0, 'f', [](const Rat& p, const Rat& q) { return q * q * (p + 1); });
    add(3, 1, 'f', [](const Rat& p, const Rat& q) { return p * p * q; });
    add(3, 2, 'f', [](const Rat& p, const Rat& q) { return p * q * q; });
    add(3, 3, 'f', [](const Rat& p, const Rat& q) { return p * p * (q + 1); });
    add(4, 0, 'f', [](const Rat& p, const Rat& q) { return q * q * (p + 1); });
    add(4, 1, 'f', [](const Rat&, const Rat&) { return Rat(0); });
    add(4, 2, 'f', [](const Rat& p, const Rat& q) { return p * q; });
    add(4, 3, 'f', [](const Rat&, const Rat&) { return Rat(0); });
    add(4, 4, 'f', [](const Rat& p, const Rat& q) { return p * p * (q + 1); });
    add(5, 0, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(q, 3) * (2 * p * p + 2 * p + 1);
    });
    add(5, 1, 'f', [](const Rat& p, const Rat& q) { return 2 * rat_pow(p, 3) * q * q; });
    add(5, 2, 'f', [](const Rat& p, const Rat& q) { return p * rat_pow(q, 3) * (2 * p + 1); });
    add(5, 3, 'f', [](const Rat& p, const Rat& q) { return rat_pow(p, 3) * q * (2 * q + 1); });
    add(5, 4, 'f', [](const Rat& p, const Rat& q) { return 2 * p * p * rat_pow(q, 3); });
    add(5, 5, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 3) * (2 * q * q + 2 * q + 1);
    });
    add(6, 0, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(q, 3) * (2 * p * p + 2 * p + 1);
    });
    add(6, 1, 'f', [](const Rat&, const Rat&) { return Rat(0); });
    add(6, 2, 'f', [](const Rat& p, const Rat& q) { return p * q * q * (p + 1); });
    add(6, 3, 'f', [](const Rat&, const Rat&) { return Rat(0); });
    add(6, 4, 'f', [](const Rat& p, const Rat& q) { return p * p * q * (q + 1); });
    add(6, 5, 'f', [](const Rat&, const Rat&) { return Rat(0); });
    add(6, 6, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 3) * (2 * q * q + 2 * q + 1);
    });
    add(7, 0, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(q, 4) * (5 * rat_pow(p, 3) + 5 * p * p + 3 * p + 1);
    });
    add(7, 1, 'f', [](const Rat& p, const Rat& q) { return 5 * rat_pow(p, 4) * rat_pow(q, 3); });
    add(7, 2, 'f', [](const Rat& p, const Rat& q) {
        return p * rat_pow(q, 4) * (5 * p * p + 3 * p + 1);
    });
    add(7, 3, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 4) * q * q * (5 * q + 2);
    });
    add(7, 4, 'f', [](const Rat& p, const Rat& q) {
        return p * p * rat_pow(q, 4) * (5 * p + 2);
    });
    add(7, 5, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 4) * q * (5 * q * q + 3 * q + 1);
    });
    add(7, 6, 'f', [](const Rat& p, const Rat& q) { return 5 * rat_pow(p, 3) * rat_pow(q, 4); });
    add(7, 7, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 4) * (5 * rat_pow(q, 3) + 5 * q * q + 3 * q + 1);
    });
    add(8, 0, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(q, 4) * (5 * rat_pow(p, 3) + 5 * p * p + 3 * p + 1);
    });
    add(8, 1, 'f', [](const Rat&, const Rat&) { return Rat(0); });
    add(8, 2, 'f', [](const Rat& p, const Rat& q) {
        return p * rat_pow(q, 3) * (2 * p * p + 2 * p + 1);
    });
    add(8, 3, 'f', [](const Rat&, const Rat&) { return Rat(0); });
    add(8, 4, 'f', [](const Rat& p, const Rat& q) {
        return p * p * q * q * (-(p * p) + p + 2);
    });
    add(8, 5, 'f', [](const Rat&, const Rat&) { return Rat(0); });
    add(8, 6, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 3) * q * (2 * q * q + 2 * q + 1);
    });
    add(8, 7, 'f', [](const Rat&, const Rat&) { return Rat(0); });
    add(8, 8, 'f', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 4) * (5 * rat_pow(q, 3) + 5 * q * q + 3 * q + 1);
    });

    // Bridge entries (even n, the constant row).
    for (long k = 0; k <= 2; k += 2)
        add(2, k, 'b', [](const Rat& p, const Rat& q) { return p * q; });
    for (long k = 0; k <= 4; k += 2)
        add(4, k, 'b', [](const Rat& p, const Rat& q) { return 2 * p * p * q * q; });
    for (long k = 0; k <= 6; k += 2)
        add(6, k, 'b', [](const Rat& p, const Rat& q) {
            return 5 * rat_pow(p, 3) * rat_pow(q, 3);
        });
    for (long k = 0; k <= 8; k += 2)
        add(8, k, 'b', [](const Rat& p, const Rat& q) {
            return 14 * rat_pow(p, 4) * rat_pow(q, 4);
        });

    // Positive-endpoint entries.
    add(1, 0, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(1, 1, '+', [](const Rat& p, const Rat&) { return p; });
    add(2, 0, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(2, 1, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(2, 2, '+', [](const Rat& p, const Rat&) { return p * p; });
    add(3, 0, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(3, 1, '+', [](const Rat& p, const Rat& q) { return p * p * q; });
    add(3, 2, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(3, 3, '+', [](const Rat& p, const Rat& q) { return p * p * (q + 1); });
    add(4, 0, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(4, 1, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(4, 2, '+', [](const Rat& p, const Rat& q) { return rat_pow(p, 3) * q; });
    add(4, 3, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(4, 4, '+', [](const Rat& p, const Rat& q) { return rat_pow(p, 3) * (2 * q + 1); });
    add(5, 0, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(5, 1, '+', [](const Rat& p, const Rat& q) { return 2 * rat_pow(p, 3) * q * q; });
    add(5, 2, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(5, 3, '+', [](const Rat& p, const Rat& q) { return rat_pow(p, 3) * q * (2 * q + 1); });
    add(5, 4, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(5, 5, '+', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 3) * (2 * q * q + 2 * q + 1);
    });
    add(6, 0, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(6, 1, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(6, 2, '+', [](const Rat& p, const Rat& q) { return 2 * rat_pow(p, 4) * q * q; });
    add(6, 3, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(6, 4, '+', [](const Rat& p, const Rat& q) { return rat_pow(p, 4) * q * (3 * q + 1); });
    add(6, 5, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(6, 6, '+', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 4) * (5 * q * q + 3 * q + 1);
    });
    add(7, 0, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(7, 1, '+', [](const Rat& p, const Rat& q) { return 5 * rat_pow(p, 4) * rat_pow(q, 3); });
    add(7, 2, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(7, 3, '+', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 4) * q * q * (5 * q + 2);
    });
    add(7, 4, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(7, 5, '+', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 4) * q * (5 * q * q + 3 * q + 1);
    });
    add(7, 6, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(7, 7, '+', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 4) * (5 * rat_pow(q, 3) + 5 * q * q + 3 * q + 1);
    });
    add(8, 0, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(8, 1, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(8, 2, '+', [](const Rat& p, const Rat& q) { return 5 * rat_pow(p, 5) * rat_pow(q, 3); });
    add(8, 3, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(8, 4, '+', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 5) * q * q * (7 * q + 2);
    });
    add(8, 5, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(8, 6, '+', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 5) * q * (9 * q * q + 4 * q + 1);
    });
    add(8, 7, '+', [](const Rat&, const Rat&) { return Rat(0); });
    add(8, 8, '+', [](const Rat& p, const Rat& q) {
        return rat_pow(p, 5) * (14 * rat_pow(q, 3) + 9 * q * q + 4 * q + 1);
    });
    return e;
}

void criterion_golden_tables() {
    const auto entries = golden_entries();
    long checked = 0;
    for (const Rat& p : {Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3)}) {
        const WalkParams w{p};
        const ClosedForm cf(w, 8);
        for (const GoldenEntry& entry : entries) {
            const Rat expected = entry.value(w.p, w.q);
            Rat actual;
            switch (entry.cond) {
                case 'f': actual = cf.free(entry.k, entry.n); break;
                case 'b': actual = cf.bridge(entry.k, entry.n); break;
                default: actual = cf.signed_mass(entry.k, entry.n, Sign::plus); break;
            }
            expect(actual == expected,
                   "p=" + rat_str(w.p) + " cond=" + entry.cond + std::string(" k=") +
                       std::to_string(entry.k) + " n=" + std::to_string(entry.n) + ": got " +
                       rat_str(actual) + ", table says " + rat_str(expected));
            ++checked;
        }
    }
    expect(checked == 4 * 102, "expected 408 table assertions, ran " + std::to_string(checked));
}

// ---------------------------------------------------------------------------
// Criterion 2: exhaustive enumeration vs closed forms, n <= 14.

void criterion_oracle() {
    for (long n = 0; n <= 14; ++n) {
        const PathCounts census = enumerate_counts(n);
        for (const Rat& p : {Rat(1, 4), Rat(1, 2), Rat(2, 3)}) {
            const WalkParams w{p};
            const ClosedForm cf(w, n);
            std::vector<Conditioning> conds{Conditioning::free(), Conditioning::bridge(),
                                            Conditioning::positive(),
                                            Conditioning::negative()};
            for (long j = 1; j <= n; ++j) {
                conds.push_back(Conditioning::pinned(j));
                conds.push_back(Conditioning::pinned(-j));
            }
            for (const Conditioning& cond : conds) {
                const MassTable table = masses_from_counts(census, w, cond);
                for (long k = 0; k <= n; ++k)
                    expect(table.masses[static_cast<size_t>(k)] == cf.mass(k, n, cond),
                           "p=" + rat_str(p) + " cond=" + cond.tag() + " k=" +
                               std::to_string(k) + " n=" + std::to_string(n));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 3: generating-function route, n <= 24.

void criterion_genfun() {
    const long order = 24;
    for (const Rat& p : {Rat(1, 3), Rat(1, 2)}) {
        const WalkParams w{p};
        const ClosedForm cf(w, order);
        std::vector<Conditioning> conds{Conditioning::free(), Conditioning::bridge(),
                                        Conditioning::positive(), Conditioning::negative()};
        for (long j = 1; j <= order; ++j) {
            conds.push_back(Conditioning::pinned(j));
            conds.push_back(Conditioning::pinned(-j));
        }
        for (const Conditioning& cond : conds) {
            const BiSeries g = gf_master(w, cond, order);
            for (long n = 0; n <= order; ++n)
                for (long k = 0; k <= n; ++k)
                    expect(g.at(k, n - k) == cf.mass(k, n, cond),
                           "p=" + rat_str(p) + " cond=" + cond.tag() + " (k,n)=(" +
                               std::to_string(k) + "," + std::to_string(n) + ")");
        }
        const BiSeries even = gf_even_part(w, order);
        const BiSeries residual =
            even - lift_x(even.slice_y0(), order) * lift_y(even.slice_x0(), order);
        expect(residual.is_zero(), "even-part factorization residual nonzero at p=" + rat_str(p));
        const BiSeries total = gf_master(w, Conditioning::positive(), order) +
                               gf_master(w, Conditioning::negative(), order) +
                               gf_master(w, Conditioning::bridge(), order);
        expect(total == gf_master(w, Conditioning::free(), order),
               "G+ + G- + G0 != G at p=" + rat_str(p));
    }
}

// ---------------------------------------------------------------------------
// Criterion 4: exact identity suites.

void criterion_identities() {
    const std::vector<Rat> ps{Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(3, 4)};
    for (const Rat& p : ps) {
        const WalkParams w{p};
        // Recurrence route, every conditioning, n <= 20.
        const long rec_n = 20;
        const ClosedForm cf(w, 30);
        std::vector<Conditioning> conds{Conditioning::free(), Conditioning::bridge(),
                                        Conditioning::positive(), Conditioning::negative()};
        for (long j = 1; j <= rec_n; ++j) {
            conds.push_back(Conditioning::pinned(j));
            conds.push_back(Conditioning::pinned(-j));
        }
        for (const Conditioning& cond : conds) {
            const RecurrenceTable rec(w, cond, rec_n);
            for (long n = 0; n <= rec_n; ++n)
                for (long k = 0; k <= n; ++k)
                    expect(rec.at(k, n) == cf.mass(k, n, cond),
                           "recurrence p=" + rat_str(p) + " cond=" + cond.tag() + " (k,n)=(" +
                               std::to_string(k) + "," + std::to_string(n) + ")");
        }
        // Product law on even indices up to 30.
        for (long n = 0; n <= 30; n += 2)
            for (long k = 0; k <= n; k += 2) {
                const auto sides = product_law_check(w, k, n);
                expect(sides.first == sides.second,
                       "product law p=" + rat_str(p) + " (k,n)=(" + std::to_string(k) + "," +
                           std::to_string(n) + ")");
            }
        // Stitch identity on odd indices, k < n <= 29.
        for (long n = 1; n <= 29; n += 2)
            for (long k = 1; k < n; k += 2) {
                const auto sides = stitch_check(w, k, n);
                expect(sides.first == sides.second,
                       "stitch p=" + rat_str(p) + " (k,n)=(" + std::to_string(k) + "," +
                           std::to_string(n) + ")");
            }
        // Bridge conditional mass 2/(n+2).
        for (long n = 2; n <= 30; n += 2)
            for (long k = 0; k <= n; k += 2)
                expect(cf.bridge(k, n) / prob_S(w, n, 0) == Rat(Int(2), Int(n + 2)),
                       "bridge uniformity p=" + rat_str(p) + " n=" + std::to_string(n));
        // Duality against the reflected walk, n <= 20.
        const ClosedForm dual(w.swapped(), 20);
        for (long n = 0; n <= 20; ++n)
            for (long k = 0; k <= n; ++k)
                expect(cf.free(k, n) == dual.free(n - k, n),
                       "duality p=" + rat_str(p) + " (k,n)=(" + std::to_string(k) + "," +
                           std::to_string(n) + ")");
    }
    // Symmetric-case product form at p = 1/2.
    const ClosedForm half(WalkParams{Rat(1, 2)}, 30);
    for (long n = 0; n <= 30; n += 2)
        for (long k = 0; k <= n; k += 2)
            expect(chung_feller_symmetric(k, n) == half.free(k, n),
                   "symmetric case (k,n)=(" + std::to_string(k) + "," +
                       std::to_string(n) + ")");
}

// ---------------------------------------------------------------------------
// Criterion 5: total sojourn time masses.

void criterion_total_sojourn() {
    for (const Rat& p : {Rat(1, 3), Rat(1, 4)}) {
        const WalkParams w{p};
        Rat partial(0);
        Rat prev(-1);
        for (long k = 0; k <= 400; k += 2) {
            const Rat mass = limit_masses(w, k);
            expect(mass >= 0, "negative mass at p=" + rat_str(p) + " k=" + std::to_string(k));
            partial += mass;
            expect(partial >= prev, "partial sums not monotone at k=" + std::to_string(k));
            expect(partial <= 1, "partial sums exceed 1 at k=" + std::to_string(k));
            prev = partial;
        }
        expect(partial > Rat(999, 1000),
               "p=" + rat_str(p) + ": partial sum up to 400 is " +
                   format_double(to_double(partial)) + " <= 0.999");
    }
    for (const Rat& p : {Rat(1, 2), Rat(2, 3), Rat(3, 4)}) {
        const WalkParams w{p};
        for (long k = 0; k <= 100; ++k)
            expect(limit_masses(w, k) == 0,
                   "p=" + rat_str(p) + ": finite mass not exactly 0 at k=" + std::to_string(k));
    }
}

// ---------------------------------------------------------------------------
// Criterion 6: limit-law checks.

void criterion_limit_laws() {
    constexpr double pi = 3.1415926535897932384626433832795;
    // rho = 0 reduces to the arcsine density, relative 1e-9.
    for (double t : {1.0, 2.0}) {
        const LimitParams lp{0.0, t};
        for (double frac = 0.01; frac <= 0.99; frac += 0.01) {
            const double s = frac * t;
            const double arcsine = 1.0 / (pi * std::sqrt(s * (t - s)));
            const double got = sojourn_density(lp, s);
            expect(std::fabs(got - arcsine) / arcsine <= 1e-9,
                   "arcsine mismatch at t=" + format_double(t) + " s=" + format_double(s));
        }
    }
    // Unit mass for each drift.
    for (double rho : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const double mass = density_normalization({rho, 1.0});
        expect(std::fabs(mass - 1.0) <= 1e-6,
               "density mass " + format_double(mass) + " at rho=" + format_double(rho));
    }
    // Erfc closed form vs quadrature, relative 1e-10 on the stated box.
    for (double sigma : {1e-3, 1e-2, 0.1, 0.5, 1.0, 3.0, 10.0})
        for (double rho : {-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
            const double closed = phi_tail(sigma, rho);
            const double quad = phi_tail_quadrature(sigma, rho);
            expect(std::fabs(closed - quad) / closed <= 1e-10,
                   "phi_tail routes disagree at sigma=" + format_double(sigma) +
                       " rho=" + format_double(rho));
        }
    // Conditioned densities sum to the unconditioned one, 1e-8.
    for (double rho : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const LimitParams lp{rho, 1.0};
        for (double s = 0.05; s < 1.0; s += 0.05) {
            const double split = conditioned_density(lp, s, Sign::plus) +
                                 conditioned_density(lp, s, Sign::minus);
            expect(std::fabs(split - sojourn_density(lp, s)) <= 1e-8,
                   "conditioned split off at rho=" + format_double(rho) +
                       " s=" + format_double(s));
        }
    }
    // rho = 0 conditioned closed forms, relative 1e-9.
    const LimitParams flat{0.0, 1.0};
    for (double s = 0.02; s < 1.0; s += 0.02) {
        const double minus_form = std::sqrt((1.0 - s) / s) / pi;
        const double got = conditioned_density(flat, s, Sign::minus);
        expect(std::fabs(got - minus_form) / minus_form <= 1e-9,
               "chi-minus at s=" + format_double(s));
    }
}

// ---------------------------------------------------------------------------
// Criterion 7: CDF convergence at N = 2000 vs N = 8000.

void criterion_convergence() {
    std::vector<double> grid;
    for (double s = 0.05; s < 0.96; s += 0.05) grid.push_back(s);
    for (double rho : {0.0, 0.5, -1.0}) {
        const ConvergenceReport coarse = convergence_experiment(rho, 1.0, 2000, grid);
        const ConvergenceReport fine = convergence_experiment(rho, 1.0, 8000, grid);
        expect(coarse.sup_gap <= 0.05, "rho=" + format_double(rho) + ": sup gap at N=2000 is " +
                                           format_double(coarse.sup_gap));
        expect(fine.sup_gap < coarse.sup_gap,
               "rho=" + format_double(rho) + ": gap did not shrink (" +
                   format_double(coarse.sup_gap) + " -> " + format_double(fine.sup_gap) + ")");
    }
}

// ---------------------------------------------------------------------------
// Criterion 8: tail-sum asymptotics.

void criterion_tail_asymptotics() {
    for (double rho : {0.5, 1.0}) {
        double previous = 1e9;
        for (long n : {1000L, 10000L, 100000L}) {
            const long k = n / 2;
            const TailAsymptotic result = tail_sum_asymptotic(rho, n, k);
            expect(result.rel_err < previous,
                   "rho=" + format_double(rho) + ": relative error not decreasing at N=" +
                       std::to_string(n));
            previous = result.rel_err;
            if (n == 100000)
                expect(result.rel_err <= 0.02,
                       "rho=" + format_double(rho) + ": rel err " +
                           format_double(result.rel_err) + " > 0.02 at N=1e5");
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 9: seeded Monte Carlo.

void criterion_monte_carlo() {
    const WalkParams half{Rat(1, 2)};
    const SimulationResult run = simulate(half, 4, 1000000, 7, Conditioning::free());
    expect(std::fabs(run.freq[2] - 0.25) <= 0.002,
           "P{T_4 = 2} frequency " + format_double(run.freq[2]) + " outside 1/4 +- 0.002");
    const SimulationResult rerun = simulate(half, 4, 1000000, 7, Conditioning::free());
    const MassTable exact = exact_distribution(half, 4, Conditioning::free());
    std::ostringstream once, twice;
    write_simulation_csv(once, run, exact);
    write_simulation_csv(twice, rerun, exact);
    expect(once.str() == twice.str(), "rerun under the same seed is not byte-identical");
}

struct Criterion {
    int id;
    std::string label;
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden tables n=1..8, exact at four p", criterion_golden_tables},
        {2, "enumeration oracle == closed forms, n<=14", criterion_oracle},
        {3, "generating-function route, n<=24", criterion_genfun},
        {4, "exact identity suites", criterion_identities},
        {5, "total sojourn-time masses", criterion_total_sojourn},
        {6, "limit-law densities", criterion_limit_laws},
        {7, "CDF convergence N=2000 vs N=8000", criterion_convergence},
        {8, "tail-sum asymptotics", criterion_tail_asymptotics},
        {9, "seeded Monte Carlo", criterion_monte_carlo},
    };
    int failures = 0;
    for (const Criterion& criterion : criteria) {
        try {
            criterion.run();
            std::cout << "PASS criterion " << criterion.id << ": " << criterion.label << '\n';
        } catch (const Failure& failure) {
            ++failures;
            std::cout << "FAIL criterion " << criterion.id << ": " << criterion.label << ": "
                      << failure.detail << '\n';
        } catch (const std::exception& error) {
            ++failures;
            std::cout << "FAIL criterion " << criterion.id << ": " << criterion.label
                      << " : unexpected exception: " << error.what() << '\n';
        }
    }
    return failures == 0 ? 0 : 1;
}
