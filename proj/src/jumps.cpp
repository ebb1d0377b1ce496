#include "sfp/jumps.hpp"

#include <algorithm>
#include <cmath>

#include "sfp/sfp_core.hpp"

namespace sfp {

namespace {

using Cx = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kScanPoints = 2048;

double abs_ratio_at(const PadeApproximant& fp, double y, double width) {
    const Cx z = std::exp(Cx(0.0, 2.0 * kPi * y / width));
    return std::abs(pade_evaluate(fp, z));
}

// Golden-section maximization of |P/Q| over [lo, hi].
double refine_peak(const PadeApproximant& fp, double width, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = abs_ratio_at(fp, x1, width);
    double f2 = abs_ratio_at(fp, x2, width);
    for (int it = 0; it < 80 && (b - a) > 1e-13 * width; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = abs_ratio_at(fp, x2, width);
        } else {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = abs_ratio_at(fp, x1, width);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

JumpReport detect_jumps(const ModelSpec& model, double maturity,
                        const TruncationInterval& interval, int terms,
                        double spike_factor) {
    validate(model);
    if (terms < 16) throw InvalidParameter("jump detection needs at least 16 terms");
    if (!(spike_factor > 1.0)) throw InvalidParameter("spike factor must be > 1");

    const double dc = interval.width();

    // Series of the density derivative: differentiating the density series
    // multiplies harmonic k by (i 2 pi k / (d-c)).
    std::vector<Cx> taylor(terms + 1, Cx(0.0, 0.0));
    for (int k = 1; k <= terms; ++k) {
        const double alpha = 2.0 * kPi * k / dc;
        taylor[k] = 2.0 * Cx(0.0, alpha) *
            characteristic_fn(model, Complex(-alpha, 0.0), maturity) / dc;
    }

    // Trailing coefficients at rounding-noise level would feed the Pade table
    // pure noise and can conjure poles on the circle; drop them.
    double bmax = 0.0;
    for (const Cx& v : taylor) bmax = std::max(bmax, std::abs(v));
    JumpReport report;
    if (bmax == 0.0) {
        report.smooth = true;
        return report;
    }
    int effective = terms;
    while (effective > 16 && std::abs(taylor[effective]) < 1e-14 * bmax) --effective;

    const int half = (effective - 1) / 2;
    const PadeApproximant fp = fourier_pade(
        std::vector<Cx>(taylor.begin(), taylor.begin() + effective + 1), half, half);

    const int npts = kScanPoints;
    const double h = dc / npts;
    std::vector<double> mag(npts);
    std::vector<double> ys(npts);
    for (int j = 0; j < npts; ++j) {
        ys[j] = interval.c + (j + 0.5) * h;
        mag[j] = abs_ratio_at(fp, ys[j], dc);
    }
    std::vector<double> sorted = mag;
    std::nth_element(sorted.begin(), sorted.begin() + npts / 2, sorted.end());
    const double median = sorted[npts / 2];
    if (!(median > 0.0)) {
        report.smooth = true;
        return report;
    }

    const double threshold = spike_factor * median;
    // Exclude the outermost cells: the endpoints are always treated as known
    // singular points downstream and must not be re-reported as interior.
    std::vector<char> flagged(npts, 0);
    for (int j = 1; j + 1 < npts; ++j) flagged[j] = mag[j] > threshold ? 1 : 0;

    int j = 1;
    while (j + 1 < npts) {
        if (!flagged[j]) { ++j; continue; }
        int j0 = j;
        while (j + 1 < npts && flagged[j]) ++j;
        const int j1 = j - 1;
        const double lo = std::max(ys[j0] - h, interval.c + 0.5 * h);
        const double hi = std::min(ys[j1] + h, interval.d - 0.5 * h);
        const double zeta = refine_peak(fp, dc, lo, hi);
        report.locations.push_back(zeta);
        report.spike_magnitudes.push_back(abs_ratio_at(fp, zeta, dc) / median);
    }

    report.smooth = report.locations.empty();
    return report;
}

} // namespace sfp
