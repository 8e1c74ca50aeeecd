#ifndef TSD_SPLINE_HPP
#define TSD_SPLINE_HPP

#include <Eigen/Dense>

namespace tsd {

/// Natural cubic spline through (knot_x, knot_y), knot_x strictly increasing.
/// Second derivatives vanish at the end knots; evaluation outside the knot
/// range extrapolates linearly with the boundary slope.
class CubicSpline {
public:
    CubicSpline(const Eigen::ArrayXd& knot_x, const Eigen::ArrayXd& knot_y);

    double operator()(double x) const;

    /// Spline values at integer sample positions 0..n-1.
    Eigen::ArrayXd sample(Eigen::Index n) const;

private:
    Eigen::ArrayXd x_;
    Eigen::ArrayXd y_;
    Eigen::ArrayXd d2_;  // second derivatives at the knots
};

}  // namespace tsd

#endif
