#pragma once

#include "sojourn/conditioning.hpp"
#include "sojourn/rational.hpp"
#include "sojourn/walk_laws.hpp"

#include <iosfwd>
#include <vector>

namespace sojourn {

/// Truncated power series sum_{k<=order} c_k z^k over exact rationals.
/// Arithmetic truncates: nothing beyond `order` is ever read or written.
class UniSeries {
  public:
    explicit UniSeries(long order) : coeffs_(static_cast<size_t>(order) + 1, Rat(0)) {
        if (order < 0) throw std::domain_error("UniSeries: negative order");
    }
    static UniSeries constant(const Rat& c, long order) {
        UniSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rat& at(long k) const { return coeffs_.at(static_cast<size_t>(k)); }
    void set(long k, Rat v) { coeffs_.at(static_cast<size_t>(k)) = std::move(v); }

    UniSeries operator+(const UniSeries& other) const;
    UniSeries operator-(const UniSeries& other) const;
    UniSeries operator*(const UniSeries& other) const;
    UniSeries scaled(const Rat& factor) const;
    UniSeries pow(long e) const;

    /// Divides by z: requires a zero constant term.
    UniSeries shifted_down() const;

    bool operator==(const UniSeries& other) const { return coeffs_ == other.coeffs_; }

  private:
    std::vector<Rat> coeffs_;
};

/// Truncated bivariate series sum_{k+m<=order} c_{k,m} x^k y^m, total-degree
/// truncation. Coefficient (k, m) carries the walk-length pair (k, n-k) with
/// n = k + m.
class BiSeries {
  public:
    explicit BiSeries(long order);

    long order() const { return order_; }
    const Rat& at(long k, long m) const { return coeffs_[index(k, m)]; }
    void set(long k, long m, Rat v) { coeffs_[index(k, m)] = std::move(v); }

    BiSeries operator+(const BiSeries& other) const;
    BiSeries operator-(const BiSeries& other) const;
    BiSeries operator*(const BiSeries& other) const;
    BiSeries scaled(const Rat& factor) const;

    /// (x, y) -> (-x, -y): coefficient (k, m) picks up (-1)^{k+m}.
    BiSeries negated_vars() const;

    /// Boundary slices G(x, 0) and G(0, y).
    UniSeries slice_y0() const;
    UniSeries slice_x0() const;

    bool operator==(const BiSeries& other) const {
        return order_ == other.order_ && coeffs_ == other.coeffs_;
    }
    bool is_zero() const;

    /// CSV rows "k,m,num,den", header included; zero coefficients skipped.
    void dump_csv(std::ostream& out) const;

  private:
    size_t index(long k, long m) const;
    long order_;
    std::vector<Rat> coeffs_;
};

/// Abar(z) = sqrt(1 - 4pq z^2) = 1 - 4 sum_{i in E*} a_{i-2} (pq)^{i/2} z^i.
UniSeries series_A(const WalkParams& w, long order);

/// 1/Abar(z) = sum_{i in E} b_i (pq)^{i/2} z^i.
UniSeries series_inv_A(const WalkParams& w, long order);

/// 1/(1 - z) truncated.
UniSeries geometric_series(long order);

/// 1/(Abar(x) + Abar(y)) = sum_{i,j in E} a_{i+j} (pq)^{(i+j)/2} x^i y^j.
BiSeries inv_A_sum(const WalkParams& w, long order);

/// Embeddings x^k -> x^k y^0 and y^m -> x^0 y^m.
BiSeries lift_x(const UniSeries& s, long order);
BiSeries lift_y(const UniSeries& s, long order);

/// H_j(z) = sum_k P{S_k = j} z^k, built by direct summation of the marginal
/// law (the definitional route).
UniSeries gf_H(const WalkParams& w, long j, long order);
/// Same function rebuilt from the algebraic closed form
/// (1/Abar) ((1-Abar)/(2qz))^j (p <-> q for j < 0).
UniSeries gf_H_closed(const WalkParams& w, long j, long order);

/// K_a(z) = sum_k P{tau_a = k} z^k, definitional route.
UniSeries gf_K(const WalkParams& w, long a, long order);
/// Closed form ((1-Abar)/(2qz))^a for a >= 1, ((1-Abar)/(2pz))^{|a|} for
/// a <= -1, 1 - Abar for a = 0.
UniSeries gf_K_closed(const WalkParams& w, long a, long order);

/// The master generating function G^F(x, y) = sum r^F_{k,n} x^k y^{n-k},
/// assembled from the closed forms specialized per conditioning. Division by
/// Abar(x) + Abar(y) is realized by multiplying with inv_A_sum.
BiSeries gf_master(const WalkParams& w, const Conditioning& cond, long order);

/// Even-index part (G(x,y) + G(-x,-y)) / 2 of the unconditioned function;
/// factorizes as the product of its own boundary slices.
BiSeries gf_even_part(const WalkParams& w, long order);

}  // namespace sojourn
