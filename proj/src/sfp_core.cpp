#include "sfp/sfp_core.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

namespace sfp {

namespace {

using Cx = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kNearPoleScale = 1e-13;
// Relative singular-value cutoff for the numerical rank of the defining
// system, and for trimming trailing Taylor coefficients that sit at rounding
// noise. Coefficients below this level only feed the null space spurious
// directions (pole-zero ghost pairs on the circle).
constexpr double kRankTol = 1e-14;

Cx horner(const std::vector<Cx>& coeffs, Cx z) {
    Cx acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Taylor coefficients of log(1 - z/eps): lambda_m = -eps^(-m)/m, lambda_0 = 0.
std::vector<Cx> log_branch_taylor(Cx eps, int order) {
    std::vector<Cx> lam(order + 1, Cx(0.0, 0.0));
    const Cx inv = 1.0 / eps;
    Cx pw = inv;
    for (int m = 1; m <= order; ++m) {
        lam[m] = -pw / double(m);
        pw *= inv;
    }
    return lam;
}

struct NullSolve {
    Eigen::VectorXcd v;
    SolveDiagnostics diag;
    // How far the numerical null space is wider than expected. A clean solve
    // has exactly one small singular direction (the solution); every extra
    // near-null direction signals ghost pole-zero pairs, and makes the
    // returned vector an arbitrary pick inside that subspace.
    int deficiency = 1;
};

// Smallest right singular direction of the defining system. Underdetermined
// systems (rows < cols) carry a structural null space; overdetermined ones
// yield the total-least-squares direction.
NullSolve solve_null(const Eigen::MatrixXcd& a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    NullSolve out;
    out.v = svd.matrixV().col(a.cols() - 1);
    out.diag.residual = (a * out.v).norm();
    // Condition of the solve: separation between the solution direction and
    // the rest of the spectrum. sv reports min(rows, cols) values, so for
    // rows < cols the solution's (structural) zero is implicit and the
    // smallest reported value is already the separation; for rows >= cols the
    // smallest reported value belongs to the solution itself.
    const Eigen::Index k = sv.size();
    const double smax = k > 0 ? sv(0) : 0.0;
    const double ssep = a.rows() >= a.cols() ? (k > 1 ? sv(k - 2) : smax)
                                             : (k > 0 ? sv(k - 1) : 0.0);
    out.diag.condition = ssep > 0.0 ? smax / ssep
                                    : std::numeric_limits<double>::infinity();
    int rank = 0;
    for (Eigen::Index i = 0; i < k; ++i)
        if (sv(i) > kRankTol * smax) ++rank;
    out.deficiency = int(a.cols()) - rank;
    out.diag.degenerate = out.deficiency > 1;

    // Deterministic representative: rotate the global phase so the largest
    // component is real positive (the approximant is scale invariant).
    Eigen::Index imax = 0;
    out.v.cwiseAbs().maxCoeff(&imax);
    const Cx pivot = out.v(imax);
    if (std::abs(pivot) > 0.0) out.v *= std::conj(pivot) / std::abs(pivot);
    return out;
}

} // namespace

DegreePlan allocate_degrees(int budget, int singularities) {
    if (singularities < 0) throw InvalidParameter("singularity count must be >= 0");
    if (budget < singularities + 2)
        throw InvalidParameter("degree budget too small: need U >= S + 2");
    DegreePlan plan;
    plan.budget = budget;
    plan.numerator_degree = int(std::llround(0.4 * double(budget - singularities)));
    const int rest = budget - singularities - plan.numerator_degree;
    // The denominator takes most of the remainder; each log polynomial gets a
    // tenth of it (at least degree 1, and never so much that M stops being
    // the largest block). Weighting M heavily is what pushes smooth-curve
    // accuracy to its floor: the rational part does the work of shaping the
    // global curve, while low-degree log polynomials already capture the
    // strength of each branch point.
    int ns = std::max(1, int(std::llround(0.1 * double(rest))));
    if (singularities > 0) ns = std::min(ns, rest / (singularities + 1));
    plan.denominator_degree = rest - singularities * ns;
    plan.log_degrees.assign(singularities, ns);
    return plan;
}

PadeApproximant fourier_pade(const std::vector<Cx>& taylor, int numerator_degree,
                             int denominator_degree) {
    const int n = numerator_degree, m = denominator_degree;
    if (n < 0 || m < 0) throw InvalidParameter("Pade degrees must be >= 0");
    if (int(taylor.size()) < n + m + 1)
        throw InvalidParameter("Pade needs at least N + M + 1 Taylor coefficients");
    const auto b = [&](int idx) -> Cx {
        return (idx >= 0 && idx < int(taylor.size())) ? taylor[idx] : Cx(0.0, 0.0);
    };

    PadeApproximant out;
    if (m == 0) {
        out.q = {Cx(1.0, 0.0)};
        out.p.assign(taylor.begin(), taylor.begin() + (n + 1));
        out.diagnostics.condition = 1.0;
        return out;
    }

    // Rows force orders N+1..N+M of P - Q f to zero; P has no such orders.
    // Supplied orders beyond N+M are ignored, mirroring solve_sfp.
    const int rows = m;
    Eigen::MatrixXcd a(rows, m + 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j <= m; ++j) a(i, j) = b(n + 1 + i - j);
    NullSolve ns = solve_null(a);
    out.diagnostics = ns.diag;
    out.q.resize(m + 1);
    for (int j = 0; j <= m; ++j) out.q[j] = ns.v(j);
    out.p.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        Cx acc(0.0, 0.0);
        for (int j = 0; j <= std::min(k, m); ++j) acc += b(k - j) * out.q[j];
        out.p[k] = acc;
    }
    return out;
}

Cx pade_evaluate(const PadeApproximant& approximant, Cx z) {
    return horner(approximant.p, z) / horner(approximant.q, z);
}

SfpApproximant solve_sfp(const SeriesCoefficients& coeffs, const DegreePlan& plan,
                         const std::vector<Cx>& singular_points) {
    const int n = plan.numerator_degree, m = plan.denominator_degree;
    const int s = int(singular_points.size());
    if (int(plan.log_degrees.size()) != s)
        throw InvalidParameter("degree plan does not match the singularity list");
    int log_total = 0;
    for (int ns : plan.log_degrees) {
        if (ns < 0) throw InvalidParameter("log polynomial degrees must be >= 0");
        log_total += ns;
    }
    const int u = n + m + s + log_total;
    if (plan.budget != u)
        throw InvalidParameter("degree plan is not a partition of its budget");
    if (int(coeffs.taylor.size()) < u + 1)
        throw InvalidParameter("series too short for the degree plan");
    for (Cx eps : singular_points)
        if (std::abs(std::abs(eps) - 1.0) > 1e-8)
            throw InvalidParameter("singular points must lie on the unit circle");

    const auto& taylor = coeffs.taylor;
    const auto b = [&](int idx) -> Cx {
        return (idx >= 0 && idx < int(taylor.size())) ? taylor[idx] : Cx(0.0, 0.0);
    };

    SfpApproximant out;
    out.singular_points = singular_points;
    out.interval = coeffs.interval;

    double bmax = 0.0;
    for (const Cx& v : taylor) bmax = std::max(bmax, std::abs(v));
    if (bmax == 0.0) {
        // zero series: the zero function, denominator pinned to 1
        out.p.assign(n + 1, Cx(0.0, 0.0));
        out.q.assign(1, Cx(1.0, 0.0));
        for (int ns : plan.log_degrees)
            out.log_polys.emplace_back(ns + 1, Cx(0.0, 0.0));
        out.diagnostics.condition = 1.0;
        return out;
    }

    // Trailing coefficients at rounding-noise level carry no information and
    // only seed ghost pole-zero pairs; shrink the budget past them.
    DegreePlan active = plan;
    {
        int ueff = u;
        while (ueff > s + 2 && std::abs(b(ueff)) < kRankTol * bmax) --ueff;
        if (ueff < u) active = allocate_degrees(ueff, s);
    }
    const int na = active.numerator_degree, ma = active.denominator_degree;
    int log_a = 0;
    for (int d : active.log_degrees) log_a += d;
    if (ma == 0 && s == 0) {
        // pure polynomial plan: nothing to solve for
        out.p.assign(taylor.begin(), taylor.begin() + (na + 1));
        out.q.assign(1, Cx(1.0, 0.0));
        out.diagnostics.condition = 1.0;
        return out;
    }

    // Orders N+1..U of P + sum_s L_s log(1 - z/eps_s) - f Q vanish; P never
    // reaches them, which leaves rows in q and the log coefficients only.
    // The system is one row short of its column count, so the solution is the
    // structural null direction. Supplied orders beyond the budget stay out:
    // extra rows turn the solve into a least-squares fit whose direction
    // trades defining-identity accuracy for consistency with coefficients the
    // approximant was never asked to reproduce, and that trade measurably
    // costs accuracy on curves driven by analytic data.
    const int top = na + ma + s + log_a;
    const int rows = top - na;
    const int cols = ma + 1 + s + log_a;
    std::vector<std::vector<Cx>> lambdas;
    lambdas.reserve(s);
    for (Cx eps : singular_points) lambdas.push_back(log_branch_taylor(eps, top));

    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const int order = na + 1 + i;
        for (int j = 0; j <= ma; ++j) a(i, j) = b(order - j);
        int col = ma + 1;
        for (int si = 0; si < s; ++si) {
            for (int j = 0; j <= active.log_degrees[si]; ++j) {
                const int idx = order - j;
                if (idx >= 1) a(i, col + j) = -lambdas[si][idx];
            }
            col += active.log_degrees[si] + 1;
        }
    }
    NullSolve ns = solve_null(a);
    out.diagnostics = ns.diag;

    out.q.resize(ma + 1);
    for (int j = 0; j <= ma; ++j) out.q[j] = ns.v(j);
    {
        int col = ma + 1;
        for (int si = 0; si < s; ++si) {
            std::vector<Cx> l(active.log_degrees[si] + 1);
            for (int j = 0; j <= active.log_degrees[si]; ++j) l[j] = ns.v(col + j);
            out.log_polys.push_back(std::move(l));
            col += active.log_degrees[si] + 1;
        }
    }

    double qmax = 0.0;
    for (const Cx& v : out.q) qmax = std::max(qmax, std::abs(v));
    if (qmax < 1e-10)
        throw SolverFailure("accelerated solve produced a vanishing denominator");

    // Orders 0..N of the same identity give the numerator.
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

EvalResult evaluate(const SfpApproximant& approximant, double y1) {
    const TruncationInterval& iv = approximant.interval;
    if (!(y1 >= iv.c && y1 <= iv.d))
        throw InvalidParameter("evaluation point outside the truncation window");
    double theta = 2.0 * kPi * y1 / iv.width();
    Cx z = std::exp(Cx(0.0, theta));
    for (Cx eps : approximant.singular_points) {
        if (std::abs(z - eps) < 1e-14) {
            // exactly on a known singular point: return the limit from a
            // point offset by 1e-12 radians
            theta += 1e-12;
            z = std::exp(Cx(0.0, theta));
            break;
        }
    }

    Cx num = horner(approximant.p, z);
    for (size_t si = 0; si < approximant.singular_points.size(); ++si)
        num += horner(approximant.log_polys[si], z) *
               std::log(1.0 - z / approximant.singular_points[si]);
    const Cx den = horner(approximant.q, z);

    double qmax = 0.0;
    for (const Cx& v : approximant.q) qmax = std::max(qmax, std::abs(v));

    EvalResult out;
    out.near_pole = std::abs(den) < kNearPoleScale * qmax;
    out.value = (num / den).real();
    return out;
}

double defining_condition_residual(const SfpApproximant& approximant,
                                   const std::vector<Cx>& taylor) {
    const int u = int(taylor.size()) - 1;
    std::vector<Cx> resid(u + 1, Cx(0.0, 0.0));
    for (size_t k = 0; k < approximant.p.size() && int(k) <= u; ++k)
        resid[k] += approximant.p[k];
    for (size_t si = 0; si < approximant.singular_points.size(); ++si) {
        const auto lam = log_branch_taylor(approximant.singular_points[si], u);
        const auto& l = approximant.log_polys[si];
        for (size_t j = 0; j < l.size() && int(j) <= u; ++j)
            for (int k = int(j); k <= u; ++k)
                if (k - int(j) >= 1) resid[k] += l[j] * lam[k - j];
    }
    for (size_t j = 0; j < approximant.q.size() && int(j) <= u; ++j)
        for (int k = int(j); k <= u; ++k)
            resid[k] -= approximant.q[j] * taylor[k - j];
    double out = 0.0;
    for (const Cx& v : resid) out = std::max(out, std::abs(v));
    return out;
}

} // namespace sfp
