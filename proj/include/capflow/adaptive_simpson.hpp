#pragma once

#include <cmath>
#include <limits>

namespace capflow {

struct QuadratureEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    bool converged = true;
    long evaluations = 0;
};

namespace detail {

template <class F>
class AdaptiveSimpson {
public:
    AdaptiveSimpson(const F& f, int max_depth) : f_(f), max_depth_(max_depth) {}

    QuadratureEstimate run(double lo, double hi, double abs_tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_lo = eval(lo);
        const double f_mid = eval(mid);
        const double f_hi = eval(hi);
        const double whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
        result_.value = recurse(lo, hi, f_lo, f_mid, f_hi, whole, abs_tol, 0);
        return result_;
    }

private:
    double eval(double x) {
        ++result_.evaluations;
        return f_(x);
    }

    // Bisect until |S2 - S1| <= 15 tol, then add the Richardson correction (S2 - S1)/15.
    double recurse(double lo, double hi, double f_lo, double f_mid, double f_hi, double whole,
                   double tol, int depth) {
        const double mid = 0.5 * (lo + hi);
        const double left_mid = 0.5 * (lo + mid);
        const double right_mid = 0.5 * (mid + hi);
        const double f_lm = eval(left_mid);
        const double f_rm = eval(right_mid);
        const double left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_lm + f_mid);
        const double right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_rm + f_hi);
        const double delta = left + right - whole;
        const bool resolvable = mid > lo && mid < hi;
        if (std::abs(delta) <= 15.0 * tol || !resolvable) {
            result_.error_bound += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        if (depth + 1 >= max_depth_) {
            result_.converged = false;
            result_.error_bound += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        return recurse(lo, mid, f_lo, f_lm, f_mid, left, 0.5 * tol, depth + 1) +
               recurse(mid, hi, f_mid, f_rm, f_hi, right, 0.5 * tol, depth + 1);
    }

    const F& f_;
    int max_depth_;
    QuadratureEstimate result_;
};

}  // namespace detail

/// Adaptive Simpson quadrature of f over [lo, hi] with absolute tolerance abs_tol.
/// The estimate is returned even when max_depth is hit; check `converged`.
template <class F>
QuadratureEstimate adaptive_simpson(const F& f, double lo, double hi, double abs_tol,
                                    int max_depth) {
    return detail::AdaptiveSimpson<F>(f, max_depth).run(lo, hi, abs_tol);
}

}  // namespace capflow
