// Scratch experiment: what limits the dense put-curve accuracy at U=64.
// Sweeps degree splits, padding, multiplier; prints the error profile of the
// best and a per-strike-window comparison. Not built by CMake.
#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <vector>

#include "sfp/models.hpp"
#include "sfp/payoffs.hpp"
#include "sfp/presets.hpp"
#include "sfp/reference.hpp"
#include "sfp/series.hpp"
#include "sfp/sfp_core.hpp"

using namespace sfp;
using Cx = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;

static std::vector<Cx> log_branch_taylor(Cx eps, int order) {
    std::vector<Cx> lam(order + 1, Cx(0.0, 0.0));
    const Cx inv = 1.0 / eps;
    Cx pw = inv;
    for (int m = 1; m <= order; ++m) {
        lam[m] = -pw / double(m);
        pw *= inv;
    }
    return lam;
}

// Square (paper-literal) solve at explicit degrees; data may be longer than
// needed; rows cover orders n+1..top_rows.
static SfpApproximant solve_at(const SeriesCoefficients& coeffs, int n, int m,
                               const std::vector<int>& log_deg,
                               const std::vector<Cx>& eps_list, int top_rows) {
    const auto& taylor = coeffs.taylor;
    const auto b = [&](int idx) -> Cx {
        return (idx >= 0 && idx < int(taylor.size())) ? taylor[idx] : Cx(0.0, 0.0);
    };
    const int s = int(eps_list.size());
    int log_total = 0;
    for (int d : log_deg) log_total += d;
    const int rows = top_rows - n;
    const int cols = m + 1 + s + log_total;
    std::vector<std::vector<Cx>> lambdas;
    for (Cx eps : eps_list) lambdas.push_back(log_branch_taylor(eps, top_rows));
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const int order = n + 1 + i;
        for (int j = 0; j <= m; ++j) a(i, j) = b(order - j);
        int col = m + 1;
        for (int si = 0; si < s; ++si) {
            for (int j = 0; j <= log_deg[si]; ++j)
                if (order - j >= 1) a(i, col + j) = -lambdas[si][order - j];
            col += log_deg[si] + 1;
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    Eigen::VectorXcd v = svd.matrixV().col(cols - 1);
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (std::abs(v(imax)) > 0.0) v *= std::conj(v(imax)) / std::abs(v(imax));

    SfpApproximant out;
    out.singular_points = eps_list;
    out.interval = coeffs.interval;
    out.q.resize(m + 1);
    for (int j = 0; j <= m; ++j) out.q[j] = v(j);
    int col = m + 1;
    for (int si = 0; si < s; ++si) {
        std::vector<Cx> l(log_deg[si] + 1);
        for (int j = 0; j <= log_deg[si]; ++j) l[j] = v(col + j);
        out.log_polys.push_back(std::move(l));
        col += log_deg[si] + 1;
    }
    out.p.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        Cx acc(0.0, 0.0);
        for (int j = 0; j <= std::min(k, m); ++j) acc += b(k - j) * out.q[j];
        for (int si = 0; si < s; ++si)
            for (int j = 0; j <= std::min(k, log_deg[si]); ++j)
                if (k - j >= 1) acc -= lambdas[si][k - j] * out.log_polys[si][j];
        out.p[k] = acc;
    }
    return out;
}

struct CurveErr {
    double r_inf;
    double k_at;
};

static CurveErr curve_err(const SfpApproximant& approx, const BsmParams& model,
                          const std::vector<double>& strikes) {
    const double t = 1.0, spot = 100.0;
    const double df_r = std::exp(-model.r * t);
    Contract put{PayoffKind::Put, 100.0, t};
    CurveErr ce{0.0, 0.0};
    for (double k : strikes) {
        const double y1 = std::log(k / spot);
        const EvalResult ev = evaluate(approx, y1);
        const double value = df_r * k * ev.value;
        put.strike = k;
        const double ref = bsm_analytic(model, put, spot).price;
        const double e = std::abs(value - ref);
        if (e > ce.r_inf) {
            ce.r_inf = e;
            ce.k_at = k;
        }
    }
    return ce;
}

int main(int argc, char** argv) {
    const BsmParams kBsm1{0.15, 0.03, 0.0};
    const std::vector<double> g200 = uniform_grid(1.0, 200.0, 250);
    const int U = argc > 1 ? std::atoi(argv[1]) : 64;

    double bound = 0.0;
    for (double k : g200) bound = std::max(bound, std::abs(std::log(100.0 / k)));

    Contract sc{PayoffKind::Put, 1.0, 1.0};

    // ---- split sweep on the shared window ----------------------------------
    std::printf("== split sweep, shared window, U=%d (square rows) ==\n", U);
    const TruncationInterval iv = truncation_interval(ModelSpec(kBsm1), 1.0, bound, 10.0, 0.0);
    std::printf("window d=%.4f\n", iv.d);
    const SeriesCoefficients coeffs = cfs_coefficients(ModelSpec(kBsm1), sc, iv, 2 * U);
    const std::vector<Cx> eps{Cx(-1.0, 0.0)};
    std::vector<std::array<int, 3>> splits;
    for (int n : {U * 13 / 64, U * 19 / 64, U * 25 / 64, U * 31 / 64, U * 38 / 64})
        for (int ns_frac = 1; ns_frac <= 4; ++ns_frac) {
            const int rest = U - 1 - n;
            const int ns = rest * ns_frac / 5;
            const int m = rest - ns;
            if (n >= 1 && m >= 1 && ns >= 1) splits.push_back({n, m, ns});
        }
    splits.push_back({int(std::llround(0.4 * (U - 1))),
                      U - 1 - int(std::llround(0.4 * (U - 1))) -
                          (U - 1 - int(std::llround(0.4 * (U - 1)))) / 2,
                      (U - 1 - int(std::llround(0.4 * (U - 1)))) / 2});
    for (const auto& sp : splits) {
        const SfpApproximant a = solve_at(coeffs, sp[0], sp[1], {sp[2]}, eps, U);
        const CurveErr ce = curve_err(a, kBsm1, g200);
        std::printf("  N=%2d M=%2d Ns=%2d  R_inf=%.3e at K=%.2f\n", sp[0], sp[1], sp[2],
                    ce.r_inf, ce.k_at);
    }

    // ---- pad / multiplier sweep at the default split ------------------------
    std::printf("== pad/mult sweep at default split, U=%d ==\n", U);
    const int n40 = int(std::llround(0.4 * (U - 1)));
    const int rest = U - 1 - n40;
    const int base = rest / 2, m40 = base + rest % 2;
    for (double mult : {10.0, 11.0, 12.0})
        for (double pad : {0.0, 0.5, 1.0, 2.0}) {
            const TruncationInterval ivp =
                truncation_interval(ModelSpec(kBsm1), 1.0, bound, mult, pad);
            const SeriesCoefficients cf = cfs_coefficients(ModelSpec(kBsm1), sc, ivp, 2 * U);
            const SfpApproximant a = solve_at(cf, n40, m40, {base}, eps, U);
            const CurveErr ce = curve_err(a, kBsm1, g200);
            std::printf("  L=%4.1f pad=%3.1f d=%6.3f  R_inf=%.3e at K=%.2f\n", mult, pad,
                        ivp.d, ce.r_inf, ce.k_at);
        }

    // ---- oversampled-rows variants at default split -------------------------
    std::printf("== row-extent sweep at default split (N=%d M=%d Ns=%d) ==\n", n40, m40, base);
    for (int top : {U, U + U / 4, U + U / 2, 2 * U}) {
        const SfpApproximant a = solve_at(coeffs, n40, m40, {base}, eps, top);
        const CurveErr ce = curve_err(a, kBsm1, g200);
        std::printf("  rows to order %3d  R_inf=%.3e at K=%.2f\n", top, ce.r_inf, ce.k_at);
    }

    // ---- error profile of the default construction --------------------------
    std::printf("== error profile, default split, square rows ==\n");
    {
        const SfpApproximant a = solve_at(coeffs, n40, m40, {base}, eps, U);
        double qmin = 1e300, qmax = 0.0, th_at = 0.0;
        for (int i = 0; i < 16384; ++i) {
            const double th = -kPi + 2.0 * kPi * i / 16384;
            const double qv = std::abs([&] {
                Cx acc(0.0, 0.0);
                const Cx z = std::exp(Cx(0.0, th));
                for (auto it = a.q.rbegin(); it != a.q.rend(); ++it) acc = acc * z + *it;
                return acc;
            }());
            if (qv < qmin) {
                qmin = qv;
                th_at = th;
            }
            qmax = std::max(qmax, qv);
        }
        std::printf("  qmin/qmax=%.3e at theta=%.4f (y=%.4f)\n", qmin / qmax, th_at,
                    th_at * iv.width() / (2.0 * kPi));
        const double df_r = std::exp(-kBsm1.r);
        Contract put{PayoffKind::Put, 100.0, 1.0};
        for (int i = 0; i <= 24; ++i) {
            const double k = 1.0 + (200.0 - 1.0) * i / 24.0;
            const double y1 = std::log(k / 100.0);
            const EvalResult ev = evaluate(a, y1);
            put.strike = k;
            const double ref = bsm_analytic(kBsm1, put, 100.0).price;
            std::printf("  K=%7.2f err=%+.3e\n", k, df_r * k * ev.value - ref);
        }
    }

    // ---- per-strike window reference (architecture B) ------------------------
    std::printf("== per-strike windows (bound=0), U=%d ==\n", U);
    {
        const TruncationInterval ivp = truncation_interval(ModelSpec(kBsm1), 1.0, 0.0, 10.0, 0.0);
        const SeriesCoefficients cf = cfs_coefficients(ModelSpec(kBsm1), sc, ivp, 2 * U);
        const SfpApproximant a = solve_at(cf, n40, m40, {base}, eps, U);
        const double df_r = std::exp(-kBsm1.r);
        Contract put{PayoffKind::Put, 100.0, 1.0};
        double ri = 0.0, kat = 0.0;
        int inside = 0;
        for (double k : g200) {
            const double y1 = std::log(k / 100.0);
            if (!(y1 >= ivp.c && y1 <= ivp.d)) continue;
            ++inside;
            const EvalResult ev = evaluate(a, y1);
            put.strike = k;
            const double ref = bsm_analytic(kBsm1, put, 100.0).price;
            const double e = std::abs(df_r * k * ev.value - ref);
            if (e > ri) {
                ri = e;
                kat = k;
            }
        }
        std::printf("  window d=%.4f covers %d/250 strikes: R_inf=%.3e at K=%.2f\n", ivp.d,
                    inside, ri, kat);
    }
    return 0;
}
