#include "tsd/spline.hpp"

#include "tsd/error.hpp"

namespace tsd {

CubicSpline::CubicSpline(const Eigen::ArrayXd& knot_x, const Eigen::ArrayXd& knot_y)
    : x_(knot_x), y_(knot_y) {
    const Eigen::Index m = x_.size();
    if (m < 1 || y_.size() != m) throw Error("spline", "knot arrays empty or mismatched");
    for (Eigen::Index i = 0; i + 1 < m; ++i)
        if (x_[i + 1] <= x_[i]) throw Error("spline", "knot positions must be strictly increasing");

    d2_ = Eigen::ArrayXd::Zero(m);
    if (m < 3) return;

    // tridiagonal system for the interior second derivatives (natural ends)
    const Eigen::Index k = m - 2;
    Eigen::ArrayXd diag(k), lower(k), upper(k), rhs(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const double hm = x_[i + 1] - x_[i];
        const double hp = x_[i + 2] - x_[i + 1];
        lower[i] = hm / 6.0;
        diag[i] = (hm + hp) / 3.0;
        upper[i] = hp / 6.0;
        rhs[i] = (y_[i + 2] - y_[i + 1]) / hp - (y_[i + 1] - y_[i]) / hm;
    }
    // Thomas forward sweep
    for (Eigen::Index i = 1; i < k; ++i) {
        const double w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    d2_[k] = rhs[k - 1] / diag[k - 1];
    for (Eigen::Index i = k - 2; i >= 0; --i) d2_[i + 1] = (rhs[i] - upper[i] * d2_[i + 2]) / diag[i];
}

double CubicSpline::operator()(double x) const {
    const Eigen::Index m = x_.size();
    if (m == 1) return y_[0];

    if (x <= x_[0]) {
        const double h = x_[1] - x_[0];
        const double slope = (y_[1] - y_[0]) / h - h * d2_[1] / 6.0;
        return y_[0] + slope * (x - x_[0]);
    }
    if (x >= x_[m - 1]) {
        const double h = x_[m - 1] - x_[m - 2];
        const double slope = (y_[m - 1] - y_[m - 2]) / h + h * d2_[m - 2] / 6.0;
        return y_[m - 1] + slope * (x - x_[m - 1]);
    }

    // locate the knot interval by binary search
    Eigen::Index lo = 0, hi = m - 1;
    while (hi - lo > 1) {
        const Eigen::Index mid = (lo + hi) / 2;
        (x_[mid] <= x ? lo : hi) = mid;
    }
    const double h = x_[hi] - x_[lo];
    const double u = (x_[hi] - x) / h;
    const double v = 1.0 - u;
    return u * y_[lo] + v * y_[hi] +
           h * h / 6.0 * ((u * u * u - u) * d2_[lo] + (v * v * v - v) * d2_[hi]);
}

Eigen::ArrayXd CubicSpline::sample(Eigen::Index n) const {
    Eigen::ArrayXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = (*this)(static_cast<double>(i));
    return out;
}

}  // namespace tsd
