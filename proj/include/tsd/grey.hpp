#ifndef TSD_GREY_HPP
#define TSD_GREY_HPP

#include <Eigen/Dense>

#include "tsd/series.hpp"

namespace tsd {

/// Fitted GM(1,1) grey model dx1/dt + a*x1 = b. The model is fit on
/// `window` after an optional positivity shift; forecasts undo the shift.
struct GreyModel {
    double a = 0.0;        // development coefficient
    double b = 0.0;        // grey input
    double x0_first = 0.0; // first raw (shifted) value, anchors the solution
    double shift = 0.0;    // positivity shift applied before fitting (0 if none)
    Series window;         // the raw fitted sequence, as given
};

/// Accumulating generation operator: prefix sums of x0.
Series ago(const Series& x0);

/// Least-squares GM(1,1) fit. Requires length >= 4. When `allow_shift` and
/// min(x0) <= 0, values are shifted by 1 - min before fitting; otherwise
/// non-positive data is an error.
GreyModel fit_gm11(const Series& x0, bool allow_shift = true);

/// Predicted raw value at time t + H (1-based window time), shift removed.
/// Uses the constant-series limit b when |a| < 1e-12. Requires H >= 1.
double forecast_gm11(const GreyModel& model, Eigen::Index t, Eigen::Index horizon);

/// Discretized first-order derivative reconstruction for GM(1,1): boundary
/// entries are b - a*x1(1) and b - a*x1(n); the interior solves the
/// tridiagonal system A*m = G with diag 2, off-diag 0.5 and
/// g_j = 1.5*(x0(j) + x0(j+1)), the first/last right-hand entries corrected
/// by the boundary derivatives. Requires length >= 4.
Series improved_gm11_derivatives(const Series& x0, double a, double b);

}  // namespace tsd

#endif
