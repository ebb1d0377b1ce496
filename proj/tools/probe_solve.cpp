// Scratch experiment: null-direction quality of the defining-system solve
// under different row treatments. Mirrors pricing's setup/eval so numbers
// are directly comparable with the acceptance criteria. Not built by CMake.
#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "sfp/models.hpp"
#include "sfp/payoffs.hpp"
#include "sfp/pricing.hpp"
#include "sfp/presets.hpp"
#include "sfp/reference.hpp"
#include "sfp/series.hpp"
#include "sfp/sfp_core.hpp"

using namespace sfp;
using Cx = std::complex<double>;
using Cl = std::complex<long double>;
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kRankTol = 1e-14;

struct SchemeCfg {
    const char* name;
    bool square = false;        // rows limited to orders N+1..U (no oversample rows)
    bool equil = false;         // scale each row to unit infinity-norm
    double floor_rel = 0.0;     // weight floor: w = 1/max(norm, floor_rel * maxnorm)
    double drop_rel = 0.0;      // drop rows with norm < drop_rel * maxnorm
    bool longdouble = false;    // run the SVD in 80-bit precision
    double ns_frac = -1.0;      // <0: even split; else each log gets frac*rest
    int extra_rows = 0;         // rows extended this many orders past U
    double n_frac = 0.4;        // numerator fraction of (U - S)
    std::vector<int> ns_explicit; // per-singularity log degrees {seam, interior...}
};

static DegreePlan make_plan(int budget, int s, const SchemeCfg& cfg) {
    if (!cfg.ns_explicit.empty()) {
        DegreePlan plan;
        plan.budget = budget;
        plan.numerator_degree = int(std::llround(cfg.n_frac * double(budget - s)));
        const int rest = budget - s - plan.numerator_degree;
        plan.log_degrees = cfg.ns_explicit;
        plan.log_degrees.resize(size_t(s), 1);
        int sum = 0;
        for (int d : plan.log_degrees) sum += d;
        plan.denominator_degree = rest - sum;
        if (plan.denominator_degree < 1) return allocate_degrees(budget, s);
        return plan;
    }
    if (cfg.ns_frac < 0.0 && cfg.n_frac == 0.4) return allocate_degrees(budget, s);
    DegreePlan plan;
    plan.budget = budget;
    plan.numerator_degree = int(std::llround(cfg.n_frac * double(budget - s)));
    const int rest = budget - s - plan.numerator_degree;
    const double frac = cfg.ns_frac < 0.0 ? 1.0 / double(s + 1) : cfg.ns_frac;
    int ns = std::max(1, int(std::llround(frac * double(rest))));
    ns = std::min(ns, rest / (s + 1)); // M stays the largest block
    plan.denominator_degree = rest - s * ns;
    plan.log_degrees.assign(s, ns);
    return plan;
}

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

static Eigen::VectorXcd smallest_direction(const Eigen::MatrixXcd& a, bool longdouble) {
    if (!longdouble) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
        return svd.matrixV().col(a.cols() - 1);
    }
    using MatL = Eigen::Matrix<Cl, Eigen::Dynamic, Eigen::Dynamic>;
    MatL al(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            al(i, j) = Cl(a(i, j).real(), a(i, j).imag());
    Eigen::JacobiSVD<MatL> svd(al, Eigen::ComputeFullV);
    Eigen::VectorXcd v(a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        const Cl z = svd.matrixV().col(a.cols() - 1)(j);
        v(j) = Cx(double(z.real()), double(z.imag()));
    }
    return v;
}

static SfpApproximant solve_scheme(const SeriesCoefficients& coeffs, const DegreePlan& plan,
                                   const std::vector<Cx>& singular_points,
                                   const SchemeCfg& cfg) {
    const int s = int(singular_points.size());
    const int u = plan.budget;
    const auto& taylor = coeffs.taylor;
    const auto b = [&](int idx) -> Cx {
        return (idx >= 0 && idx < int(taylor.size())) ? taylor[idx] : Cx(0.0, 0.0);
    };
    double bmax = 0.0;
    for (const Cx& v : taylor) bmax = std::max(bmax, std::abs(v));

    DegreePlan active = plan;
    {
        int ueff = u;
        while (ueff > s + 2 && std::abs(b(ueff)) < kRankTol * bmax) --ueff;
        if (ueff < u) active = make_plan(ueff, s, cfg);
    }
    const int na = active.numerator_degree, ma = active.denominator_degree;
    int log_a = 0;
    for (int d : active.log_degrees) log_a += d;

    SfpApproximant out;
    out.singular_points = singular_points;
    out.interval = coeffs.interval;
    if (ma == 0 && s == 0) {
        out.p.assign(taylor.begin(), taylor.begin() + (na + 1));
        out.q.assign(1, Cx(1.0, 0.0));
        return out;
    }

    const int top = cfg.square ? std::min(active.budget + cfg.extra_rows,
                                          int(taylor.size()) - 1)
                               : int(taylor.size()) - 1;
    const int rows0 = top - na;
    const int cols = ma + 1 + s + log_a;
    std::vector<std::vector<Cx>> lambdas;
    for (Cx eps : singular_points) lambdas.push_back(log_branch_taylor(eps, top));

    Eigen::MatrixXcd a0 = Eigen::MatrixXcd::Zero(rows0, cols);
    for (int i = 0; i < rows0; ++i) {
        const int order = na + 1 + i;
        for (int j = 0; j <= ma; ++j) a0(i, j) = b(order - j);
        int col = ma + 1;
        for (int si = 0; si < s; ++si) {
            for (int j = 0; j <= active.log_degrees[si]; ++j) {
                const int idx = order - j;
                if (idx >= 1) a0(i, col + j) = -lambdas[si][idx];
            }
            col += active.log_degrees[si] + 1;
        }
    }

    // row treatment
    std::vector<double> norms(rows0, 0.0);
    double maxnorm = 0.0;
    for (int i = 0; i < rows0; ++i) {
        norms[i] = a0.row(i).cwiseAbs().maxCoeff();
        maxnorm = std::max(maxnorm, norms[i]);
    }
    std::vector<int> keep;
    for (int i = 0; i < rows0; ++i)
        if (norms[i] >= cfg.drop_rel * maxnorm && norms[i] > 0.0) keep.push_back(i);
    Eigen::MatrixXcd a(int(keep.size()), cols);
    for (size_t r = 0; r < keep.size(); ++r) {
        double w = 1.0;
        if (cfg.equil) w = 1.0 / std::max(norms[keep[r]], cfg.floor_rel * maxnorm);
        a.row(r) = w * a0.row(keep[r]);
    }

    Eigen::VectorXcd v = smallest_direction(a, cfg.longdouble);
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const Cx pivot = v(imax);
    if (std::abs(pivot) > 0.0) v *= std::conj(pivot) / std::abs(pivot);

    out.q.resize(ma + 1);
    for (int j = 0; j <= ma; ++j) out.q[j] = v(j);
    {
        int col = ma + 1;
        for (int si = 0; si < s; ++si) {
            std::vector<Cx> l(active.log_degrees[si] + 1);
            for (int j = 0; j <= active.log_degrees[si]; ++j) l[j] = v(col + j);
            out.log_polys.push_back(std::move(l));
            col += active.log_degrees[si] + 1;
        }
    }
    out.p.resize(na + 1);
    for (int k = 0; k <= na; ++k) {
        Cx acc(0.0, 0.0);
        for (int j = 0; j <= std::min(k, ma); ++j) acc += b(k - j) * out.q[j];
        for (int si = 0; si < s; ++si)
            for (int j = 0; j <= std::min(k, active.log_degrees[si]); ++j)
                if (k - j >= 1) acc -= lambdas[si][k - j] * out.log_polys[si][j];
        out.p[k] = acc;
    }
    return out;
}

// ---- pricing mirror ---------------------------------------------------------

struct Case {
    ModelSpec model;
    Contract contract;          // original (call/put as criterion states)
    double spot;
    int terms;
    std::vector<double> interior;  // physical interior jump locations
    double pad_override = -1.0;    // <0: default rule
};

static std::vector<double> run_case(const Case& cs, const std::vector<double>& strikes,
                                    const SchemeCfg& cfg, SfpApproximant* out_approx = nullptr) {
    const double t = cs.contract.maturity;
    const bool tiny_t = t < 1e-4;
    const double mult = has_variance_state(cs.model) ? 12.0 : 10.0;
    double bound = 0.0;
    for (double k : strikes) bound = std::max(bound, std::abs(std::log(cs.spot / k)));
    const bool smooth = cs.interior.empty();
    const double pad = cs.pad_override >= 0.0 ? cs.pad_override
                                              : (tiny_t ? 0.1 : (smooth ? 0.0 : 0.5));
    const TruncationInterval interval =
        truncation_interval(cs.model, t, bound, mult, pad);
    const double dc = interval.width();

    std::vector<Cx> eps;
    eps.push_back(Cx(-1.0, 0.0));
    for (double zeta : cs.interior)
        eps.push_back(std::exp(Cx(0.0, 2.0 * kPi * zeta / dc)));
    const DegreePlan plan = make_plan(cs.terms, int(eps.size()), cfg);

    Contract solve_contract = cs.contract;
    bool parity = false;
    if (solve_contract.kind == PayoffKind::Call) {
        solve_contract.kind = PayoffKind::Put;
        parity = true;
    }
    const int power = strike_power(solve_contract);
    solve_contract.strike = 1.0;

    const SeriesCoefficients coeffs =
        cfs_coefficients(cs.model, solve_contract, interval, 2 * cs.terms);
    const SfpApproximant approx = solve_scheme(coeffs, plan, eps, cfg);
    if (out_approx) *out_approx = approx;

    const double df_r = std::exp(-risk_free_rate(cs.model) * t);
    const double df_q = std::exp(-dividend_yield(cs.model) * t);
    std::vector<double> vals;
    for (double k : strikes) {
        const double y1 = std::log(k / cs.spot);
        const EvalResult ev = evaluate(approx, y1);
        double value = df_r * std::pow(k, power) * ev.value;
        if (parity) value += cs.spot * df_q - k * df_r;
        vals.push_back(value);
    }
    return vals;
}

static double r_inf(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

int main(int argc, char** argv) {
    const BsmParams kBsm1{0.15, 0.03, 0.0};
    const BsmParams kBsm2{0.25, 0.10, 0.0};
    const BsmParams kBsm3{0.20, 0.06, 0.0};
    const VgParams kVg1{0.12, -0.14, 0.2, 0.10, 0.0};
    const CgmyParams kCgmyY05{1.0, 5.0, 5.0, 0.5, 0.10, 0.0};
    const CgmyParams kCgmyY15{1.0, 5.0, 5.0, 1.5, 0.10, 0.0};
    const HestonParams kHeston{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0};
    const double kVg1K90 = 10.993703186728190;
    const double kVg1Jump = 0.689027011772653;
    const double kBsm2T50 = 99.2025928525532;
    const double kBsm2T100 = 99.9945609694213;
    const double kBsm3Jump = 0.007491657716010;
    const double kCgmyY05Ref = 19.812948843118576;
    const double kCgmyY15Ref = 49.790905468523860;
    const double kHestonT10 = 22.318945791154533;

    if (argc > 1 && std::string(argv[1]) == "c4j") {
        // Focused sweep: tiny-maturity jump case. U=64, S=2 (seam + interior at
        // c1=4e-8). Degree split (N; M; ns_seam, ns_int) is the lever.
        const Contract call{PayoffKind::Call, 100.0, 1e-6};
        struct Combo { int n; std::vector<int> ns; };
        std::vector<Combo> combos;
        for (int n : {7, 9, 11, 13, 15, 17, 19, 21})
            for (int m = 9; m <= 29; m += 2) {
                const int rest = 64 - 2 - n - m;
                if (rest < 2 || rest % 2 != 0) continue;
                combos.push_back({n, {rest / 2, rest / 2}});
            }
        if (argc > 2 && std::string(argv[2]) == "s1") {
            // seam-only: no log at the mollified kink; Pade poles model the peak
            std::printf("S=1 seam-only, narrow window:\n%-5s %-4s %-4s | %12s | %12s %12s\n",
                        "N", "M", "ns", "jump err", "flat32", "flat64");
            for (int n : {13, 19, 25, 31}) {
                for (int m = 9; m <= 45; m += 4) {
                    const int ns = 64 - 1 - n - m;
                    if (ns < 1) continue;
                    SchemeCfg cfg{"s1", true, false, 0.0, 0.0, false, -1.0, 0};
                    cfg.n_frac = double(n) / 63.0;
                    cfg.ns_explicit = {ns};
                    const Case cj{ModelSpec(kBsm3), call, 99.999, 64, {}};
                    const double ej = run_case(cj, {100.0}, cfg)[0] - kBsm3Jump;
                    SchemeCfg cfg32 = cfg;
                    cfg32.ns_explicit = {std::max(1, ns / 2)};
                    const Case cf32{ModelSpec(kBsm3), call, 95.0, 32, {}};
                    const Case cf64{ModelSpec(kBsm3), call, 95.0, 64, {}};
                    const double f32 = run_case(cf32, {100.0}, cfg32)[0];
                    const double f64 = run_case(cf64, {100.0}, cfg)[0];
                    std::printf("%-5d %-4d %-4d | %+12.3e | %+12.3e %+12.3e\n", n, m,
                                ns, ej, f32, f64);
                }
            }
            return 0;
        }
        if (argc > 2 && std::string(argv[2]) == "profile") {
            // error profile vs S0 near the kink + |Q| on the circle near z=1
            SchemeCfg cfg{"even", true, false, 0.0, 0.0, false, -1.0, 0};
            SfpApproximant approx;
            const Case cj{ModelSpec(kBsm3), call, 99.999, 64, {4e-8}};
            run_case(cj, {100.0}, cfg, &approx);
            const double dc = approx.interval.width();
            std::printf("plan: p=%zu q=%zu logs=%zu+%zu  window=[%.4f,%.4f]\n",
                        approx.p.size() - 1, approx.q.size() - 1,
                        approx.log_polys[0].size() - 1, approx.log_polys[1].size() - 1,
                        approx.interval.c, approx.interval.d);
            // |Q| near z=1 (kink) and z=-1 (seam)
            auto qmag = [&](double theta) {
                const Cx z = std::exp(Cx(0.0, theta));
                Cx q(0.0, 0.0);
                for (int j = int(approx.q.size()) - 1; j >= 0; --j)
                    q = q * z + approx.q[size_t(j)];
                return std::abs(q);
            };
            std::printf("|Q| near kink:  ");
            for (double f : {-32.0, -8.0, -2.0, -0.5, 0.0, 0.5, 2.0, 8.0, 32.0})
                std::printf("%.2e ", qmag(2.0 * kPi * (4e-8 + f * 2e-4) / dc));
            std::printf("\n|Q| near seam:  ");
            for (double f : {-2.0, -0.5, 0.0, 0.5, 2.0})
                std::printf("%.2e ", qmag(kPi + 2.0 * kPi * f * 2e-4 / dc));
            std::printf("\nerr profile vs S0 (true = analytic):\n");
            const BsmParams b3{0.20, 0.06, 0.0};
            for (double s0 : {99.0, 99.5, 99.9, 99.95, 99.99, 99.995, 99.999,
                              99.9995, 100.0, 100.0005, 100.001, 100.01, 100.05,
                              100.1, 100.5, 101.0}) {
                const Case cs{ModelSpec(kBsm3), call, s0, 64, {4e-8}};
                const double v = run_case(cs, {100.0}, cfg)[0];
                const double ref = bsm_analytic(b3, call, s0).price;
                std::printf("  S0=%9.4f  v=%+.6e  ref=%+.6e  err=%+.3e\n", s0, v,
                            ref, v - ref);
            }
            return 0;
        }
        // The paper's short-maturity test is a SPOT CURVE over [80,120]: the
        // shared window carries bound = max |log(K/S0)| over the grid. Price
        // the jump/flat spots through that wide-window solve.
        auto run_spot = [&](int terms, double spot, const SchemeCfg& cfg,
                            double zeta) -> double {
            // mirror run_case but with curve-wide bound
            const double t = call.maturity;
            const double mult = 10.0;
            double bound = std::max(std::abs(std::log(100.0 / 80.0)),
                                    std::abs(std::log(100.0 / 120.0)));
            const TruncationInterval interval =
                truncation_interval(ModelSpec(kBsm3), t, bound, mult, 0.1);
            const double dc = interval.width();
            std::vector<Cx> eps;
            eps.push_back(Cx(-1.0, 0.0));
            eps.push_back(std::exp(Cx(0.0, 2.0 * kPi * zeta / dc)));
            const DegreePlan plan = make_plan(terms, 2, cfg);
            Contract sc = call;
            sc.kind = PayoffKind::Put;
            const int power = strike_power(sc);
            sc.strike = 1.0;
            const SeriesCoefficients coeffs =
                cfs_coefficients(ModelSpec(kBsm3), sc, interval, 2 * terms);
            const SfpApproximant approx = solve_scheme(coeffs, plan, eps, cfg);
            const double df_r = std::exp(-0.06 * t);
            const double y1 = std::log(100.0 / spot);
            const EvalResult ev = evaluate(approx, y1);
            double value = df_r * std::pow(100.0, power) * ev.value;
            value += spot - 100.0 * df_r;  // call via parity
            return value;
        };
        std::printf("wide-window (curve bound 0.223):\n");
        std::printf("%-5s %-4s %-10s | %12s %12s | %12s %12s\n", "N", "M", "ns",
                    "jump(4e-8)", "jump(0.0)", "flat32", "flat64");
        for (const Combo& cb : combos) {
            SchemeCfg cfg{"sweep", true, false, 0.0, 0.0, false, -1.0, 0};
            cfg.n_frac = double(cb.n) / 62.0;
            cfg.ns_explicit = cb.ns;
            const int m = 64 - 2 - cb.n - cb.ns[0] - cb.ns[1];
            const double ej = run_spot(64, 99.999, cfg, 4e-8) - kBsm3Jump;
            const double ej0 = run_spot(64, 99.999, cfg, 0.0) - kBsm3Jump;
            SchemeCfg cfg32 = cfg;
            cfg32.ns_explicit = {cb.ns[0] / 2, cb.ns[1] / 2};  // halved at U=32
            const double f32 = run_spot(32, 95.0, cfg32, 4e-8);
            const double f64 = run_spot(64, 95.0, cfg, 4e-8);
            std::printf("%-5d %-4d {%2d,%2d}    | %+12.3e %+12.3e | %+12.3e %+12.3e\n",
                        cb.n, m, cb.ns[0], cb.ns[1], ej, ej0, f32, f64);
        }
        return 0;
    }

    const std::vector<SchemeCfg> schemes = {
        {"even     ", true, false, 0.0, 0.0, false, -1.0, 0},
        {"f=0.50   ", true, false, 0.0, 0.0, false, 0.50, 0},
        {"f=0.33   ", true, false, 0.0, 0.0, false, 0.333, 0},
        {"f=0.25   ", true, false, 0.0, 0.0, false, 0.25, 0},
        {"f=0.20   ", true, false, 0.0, 0.0, false, 0.20, 0},
        {"f=0.15   ", true, false, 0.0, 0.0, false, 0.15, 0},
        {"f=0.10   ", true, false, 0.0, 0.0, false, 0.10, 0},
        {"f=0.20+r8", true, false, 0.0, 0.0, false, 0.20, 8},
        {"f=.20+all", true, false, 0.0, 0.0, false, 0.20, 1 << 20},
    };

    // strike grids
    const std::vector<double> g200 = uniform_grid(1.0, 200.0, 250);
    const std::vector<double> gdig = uniform_grid(80.0, 120.0, 250);

    // references
    std::vector<double> bsm_put_ref, dig_ref;
    {
        Contract put{PayoffKind::Put, 100.0, 1.0};
        for (double k : g200) {
            put.strike = k;
            bsm_put_ref.push_back(bsm_analytic(kBsm1, put, 100.0).price);
        }
        Contract dig{PayoffKind::CashOrNothingPut, 100.0, 1.0};
        for (double k : gdig) {
            dig.strike = k;
            dig_ref.push_back(bsm_analytic(kBsm1, dig, 100.0).price);
        }
    }
    // vg2 curve: spot axis per preset
    const Preset& vg2p = preset("vg-para2");
    const std::vector<double> vg2grid = uniform_grid(vg2p.grid_lo, vg2p.grid_hi, vg2p.grid_n);

    // vg1 interior jump: pure-jump drift point (r - q + omega) * t
    const double vg1_omega = compensator(ModelSpec(kVg1));
    const double vg1_zeta = (0.10 - 0.0 + vg1_omega) * 0.1;
    std::printf("vg1 drift point zeta = %.6f  (K* = %.3f)\n", vg1_zeta,
                100.0 * std::exp(vg1_zeta));

    // one-off: what is the true value at the kink strike, and where does the
    // SFP converge as U grows?
    {
        const Contract kink{PayoffKind::Call, 102.336, 0.1};
        const TruncationInterval ivk = truncation_interval(
            ModelSpec(kVg1), 0.1, std::abs(std::log(100.0 / 102.336)), 10.0, 0.5);
        for (int nn : {1 << 14, 1 << 16, 1 << 18})
            std::printf("  cos N=%6d: %.12f (pin %.12f, diff %.2e)\n", nn,
                        cos_price(ModelSpec(kVg1), kink, 100.0, ivk, nn), kVg1Jump,
                        cos_price(ModelSpec(kVg1), kink, 100.0, ivk, nn) - kVg1Jump);
        for (int uu : {128, 256, 512}) {
            SchemeCfg even{"even", true, false, 0.0, 0.0, false, -1.0, 0};
            const Case ck{ModelSpec(kVg1), kink, 100.0, uu, {vg1_zeta}};
            const double v = run_case(ck, {102.336}, even)[0];
            std::printf("  sfp U=%3d: %.12f (diff %+.2e)\n", uu, v, v - kVg1Jump);
        }
        // same probe for the near-expiry jump value
        const Contract nexp{PayoffKind::Call, 100.0, 1e-6};
        const TruncationInterval ivb = truncation_interval(
            ModelSpec(kBsm3), 1e-6, std::abs(std::log(99.999 / 100.0)), 10.0, 0.1);
        for (int nn : {1 << 14, 1 << 18})
            std::printf("  bsm3 cos N=%6d: %.12f (pin %.12f, diff %.2e)\n", nn,
                        cos_price(ModelSpec(kBsm3), nexp, 99.999, ivb, nn), kBsm3Jump,
                        cos_price(ModelSpec(kBsm3), nexp, 99.999, ivb, nn) - kBsm3Jump);
        const BsmParams b3 = kBsm3;
        Contract nc = nexp;
        std::printf("  bsm3 analytic: %.15f\n", bsm_analytic(b3, nc, 99.999).price);
        for (int uu : {64, 128, 256}) {
            SchemeCfg even{"even", true, false, 0.0, 0.0, false, -1.0, 0};
            const Case cb{ModelSpec(kBsm3), nexp, 99.999, uu, {0.0}};
            const double v = run_case(cb, {100.0}, even)[0];
            std::printf("  bsm3 sfp U=%3d: %.12f (diff %+.2e)\n", uu, v, v - kBsm3Jump);
        }
    }

    for (const auto& cfg : schemes) {
        const auto t0 = std::chrono::steady_clock::now();
        // C1: bsm1 put curve U=64 and U=32
        const Case c1_64{ModelSpec(kBsm1), {PayoffKind::Put, 100.0, 1.0}, 100.0, 64, {}};
        const Case c1_32{ModelSpec(kBsm1), {PayoffKind::Put, 100.0, 1.0}, 100.0, 32, {}};
        const double ri64 = r_inf(run_case(c1_64, g200, cfg), bsm_put_ref);
        const double ri32 = r_inf(run_case(c1_32, g200, cfg), bsm_put_ref);
        // C2: digital curve U=32
        const Case c2{ModelSpec(kBsm1), {PayoffKind::CashOrNothingPut, 100.0, 1.0}, 100.0, 32, {}};
        const double ri_dig = r_inf(run_case(c2, gdig, cfg), dig_ref);
        // C3: long maturities U=32
        const Case c3a{ModelSpec(kBsm2), {PayoffKind::Call, 120.0, 50.0}, 100.0, 32, {}};
        const Case c3b{ModelSpec(kBsm2), {PayoffKind::Call, 120.0, 100.0}, 100.0, 32, {}};
        const double e50 = std::abs(run_case(c3a, {120.0}, cfg)[0] - kBsm2T50);
        const double e100 = std::abs(run_case(c3b, {120.0}, cfg)[0] - kBsm2T100);
        // C4: tiny maturity, jump at 0; flat S0=95 (U=32), kink S0=99.999 (U=64)
        const Case c4a{ModelSpec(kBsm3), {PayoffKind::Call, 100.0, 1e-6}, 95.0, 32, {0.0}};
        const Case c4b{ModelSpec(kBsm3), {PayoffKind::Call, 100.0, 1e-6}, 99.999, 64, {0.0}};
        const double flat = run_case(c4a, {100.0}, cfg)[0];
        const double ejmp = std::abs(run_case(c4b, {100.0}, cfg)[0] - kBsm3Jump);
        // C5: vg1 t=0.1 calls U=128 with interior jump
        const Case c5a{ModelSpec(kVg1), {PayoffKind::Call, 90.0, 0.1}, 100.0, 128, {vg1_zeta}};
        const Case c5b{ModelSpec(kVg1), {PayoffKind::Call, 102.336, 0.1}, 100.0, 128, {vg1_zeta}};
        const double e90 = std::abs(run_case(c5a, {90.0}, cfg)[0] - kVg1K90);
        const double ej = std::abs(run_case(c5b, {102.336}, cfg)[0] - kVg1Jump);
        // C6: vg2 spot curve U=64 vs cosine
        const Case c6{vg2p.model, vg2p.contract, 0.0, 64, {}};
        std::vector<double> sfp_vals, cos_vals;
        {
            // spot axis: price per spot with shared solve (strike fixed)
            Case c = c6;
            c.spot = 1.0; // placeholder; handle manually below
            // manual: axis=spot -> y1 = log(K/S); bound over spots
            const double t = vg2p.contract.maturity;
            double bound = 0.0;
            for (double sp : vg2grid)
                bound = std::max(bound, std::abs(std::log(sp / vg2p.contract.strike)));
            const TruncationInterval interval =
                truncation_interval(vg2p.model, t, bound, 10.0, 0.0);
            std::vector<Cx> eps{Cx(-1.0, 0.0)};
            const DegreePlan plan = make_plan(64, 1, cfg);
            Contract sc = vg2p.contract;
            bool parity = sc.kind == PayoffKind::Call;
            if (parity) sc.kind = PayoffKind::Put;
            const int power = strike_power(sc);
            sc.strike = 1.0;
            const SeriesCoefficients coeffs =
                cfs_coefficients(vg2p.model, sc, interval, 2 * 64);
            const SfpApproximant approx = solve_scheme(coeffs, plan, eps, cfg);
            const double df_r = std::exp(-risk_free_rate(vg2p.model) * t);
            const double df_q = std::exp(-dividend_yield(vg2p.model) * t);
            for (double sp : vg2grid) {
                const double y1 = std::log(vg2p.contract.strike / sp);
                const EvalResult ev = evaluate(approx, y1);
                double v = df_r * std::pow(vg2p.contract.strike, power) * ev.value;
                if (parity) v += sp * df_q - vg2p.contract.strike * df_r;
                sfp_vals.push_back(v);
                cos_vals.push_back(cos_price(vg2p.model, vg2p.contract, sp, interval, 1 << 14));
            }
        }
        const double ri_vg2 = r_inf(sfp_vals, cos_vals);
        // C7: cgmy U=32
        const Case c7a{ModelSpec(kCgmyY05), {PayoffKind::Call, 100.0, 1.0}, 100.0, 32, {}};
        const Case c7b{ModelSpec(kCgmyY15), {PayoffKind::Call, 100.0, 1.0}, 100.0, 32, {}};
        const double e05 = std::abs(run_case(c7a, {100.0}, cfg)[0] - kCgmyY05Ref);
        const double e15 = std::abs(run_case(c7b, {100.0}, cfg)[0] - kCgmyY15Ref);
        // C8: heston t10 U=128
        const Case c8{ModelSpec(kHeston), {PayoffKind::Call, 100.0, 10.0}, 100.0, 128, {}};
        const double eh10 = std::abs(run_case(c8, {100.0}, cfg)[0] - kHestonT10);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        std::printf(
            "%s C1inf64=%.3e C1inf32=%.3e ratio=%.0f C2=%.3e C3=%.1e/%.1e C4flat=%.1e "
            "C4j=%.1e C5k90=%.3e C5j=%.1e C6=%.3e C7=%.1e/%.1e C8=%.1e  (%.1fs)\n",
            cfg.name, ri64, ri32, ri64 > 0 ? ri32 / ri64 : 0.0, ri_dig, e50, e100, flat,
            ejmp, e90, ej, ri_vg2, e05, e15, eh10, secs);
    }
    return 0;
}
