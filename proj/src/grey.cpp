#include "tsd/grey.hpp"

#include <cmath>

#include "tsd/error.hpp"

namespace tsd {

Series ago(const Series& x0) {
    if (x0.size() < 1) throw Error("grey", "ago needs at least one sample");
    Series x1(x0.size());
    double acc = 0.0;
    for (Eigen::Index i = 0; i < x0.size(); ++i) {
        acc += x0[i];
        x1[i] = acc;
    }
    return x1;
}

GreyModel fit_gm11(const Series& x0, bool allow_shift) {
    const Eigen::Index n = x0.size();
    if (n < 4) throw Error("grey", "GM(1,1) window needs at least 4 samples");

    double shift = 0.0;
    const double lo = x0.minCoeff();
    if (lo <= 0.0) {
        if (!allow_shift) throw Error("grey", "GM(1,1) requires positive data (shift disabled)");
        shift = 1.0 - lo;
    }
    const Series w = x0 + shift;
    const Series x1 = ago(w);

    // normal equations of [a b]' = (B'B)^-1 B'Y with rows (-z(k+1), 1),
    // z the consecutive AGO midpoints and Y the raw tail
    double szz = 0.0, sz = 0.0, szy = 0.0, sy = 0.0;
    const auto m = static_cast<double>(n - 1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        const double z = 0.5 * (x1[k] + x1[k + 1]);
        const double y = w[k + 1];
        szz += z * z;
        sz += z;
        szy += z * y;
        sy += y;
    }
    const double det = szz * m - sz * sz;
    if (det == 0.0 || !std::isfinite(det))
        throw Error("grey", "singular GM(1,1) normal matrix");
    const double a = -(m * szy - sz * sy) / det;
    const double b = (szz * sy - sz * szy) / det;

    GreyModel model;
    model.a = a;
    model.b = b;
    model.x0_first = w[0];
    model.shift = shift;
    model.window = x0;
    return model;
}

double forecast_gm11(const GreyModel& model, Eigen::Index t, Eigen::Index horizon) {
    if (horizon < 1) throw Error("grey", "forecast horizon must be >= 1");
    if (std::abs(model.a) < 1e-12) return model.b - model.shift;  // a -> 0 limit
    const double e = static_cast<double>(t + horizon - 1);
    const double value =
        (model.x0_first - model.b / model.a) * std::exp(-model.a * e) * (1.0 - std::exp(model.a));
    return value - model.shift;
}

Series improved_gm11_derivatives(const Series& x0, double a, double b) {
    const Eigen::Index n = x0.size();
    if (n < 4) throw Error("grey", "derivative reconstruction needs at least 4 samples");
    const Series x1 = ago(x0);

    const double m_first = b - a * x1[0];
    const double m_last = b - a * x1[n - 1];

    // interior system A*m = G, A tridiagonal (diag 2, off-diag 0.5),
    // g_j = 1.5*(x0(j) + x0(j+1)) for j = 2..n-1 in 1-based terms
    const Eigen::Index k = n - 2;
    Eigen::ArrayXd g(k);
    for (Eigen::Index i = 0; i < k; ++i) g[i] = 1.5 * (x0[i + 1] + x0[i + 2]);
    g[0] -= 0.5 * m_first;
    g[k - 1] -= 0.5 * m_last;

    // Thomas solve; A is strictly diagonally dominant (2 > 0.5 + 0.5)
    Eigen::ArrayXd diag = Eigen::ArrayXd::Constant(k, 2.0);
    Eigen::ArrayXd rhs = g;
    for (Eigen::Index i = 1; i < k; ++i) {
        const double w = 0.5 / diag[i - 1];
        diag[i] -= w * 0.5;
        rhs[i] -= w * rhs[i - 1];
    }
    Eigen::ArrayXd m(k);
    m[k - 1] = rhs[k - 1] / diag[k - 1];
    for (Eigen::Index i = k - 2; i >= 0; --i) m[i] = (rhs[i] - 0.5 * m[i + 1]) / diag[i];

    Series out(n);
    out[0] = m_first;
    out.segment(1, k) = m;
    out[n - 1] = m_last;
    return out;
}

}  // namespace tsd
