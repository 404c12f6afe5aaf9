#pragma once

#include <cmath>
#include <utility>

namespace sojourn {

/// Adaptive Simpson integration on [a, b] to absolute tolerance `tol`.
/// The integrand must be finite on the closed interval.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 52) {
    struct Recurse {
        const F& f;
        double operator()(double lo, double flo, double hi, double fhi, double mid,
                          double fmid, double whole, double eps, int depth) const {
            const double lmid = 0.5 * (lo + mid);
            const double rmid = 0.5 * (mid + hi);
            const double flm = f(lmid);
            const double frm = f(rmid);
            const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
            const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
            const double delta = left + right - whole;
            if (depth <= 0 || std::fabs(delta) <= 15.0 * eps)
                return left + right + delta / 15.0;
            return (*this)(lo, flo, mid, fmid, lmid, flm, left, 0.5 * eps, depth - 1) +
                   (*this)(mid, fmid, hi, fhi, rmid, frm, right, 0.5 * eps, depth - 1);
        }
    };
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Recurse{f}(a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace sojourn
