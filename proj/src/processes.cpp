#include "lrd/processes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lrd {

namespace {

void require_same_grid(const ProcessEvaluation& a, const ProcessEvaluation& b,
                       const char* who) {
    if (a.grid != b.grid || a.n != b.n || a.sigma_n1 != b.sigma_n1) {
        throw std::invalid_argument(std::string(who) + ": grid/scaling mismatch");
    }
}

double nd(const StepProcess& s) { return static_cast<double>(s.n()); }

}  // namespace

std::string ProcessEvaluation::to_csv() const {
    std::ostringstream os;
    os << "y,value\n";
    char buf[64];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", grid[i], values[i]);
        os << buf;
    }
    return os.str();
}

std::string ProcessEvaluation::to_json() const {
    std::ostringstream os;
    char buf[64];
    os << "{\"kind\":" << static_cast<int>(kind) << ",\"n\":" << n
       << ",\"sigma_n1\":" << sigma_n1 << ",\"points\":[";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "[%.17g,%.17g]", grid[i], values[i]);
        os << (i ? "," : "") << buf;
    }
    os << "]}";
    return os.str();
}

std::vector<double> uniformize(const SamplePath& path,
                               const LinearProcessModel& model,
                               const MarginalModel& marginal) {
    if (marginal.is_gaussian()) {
        const double want = std::sqrt(model.marginal_variance());
        const double got = marginal.gaussian_sigma();
        if (std::abs(got - want) > 1e-9 * want) {
            std::ostringstream os;
            os << "uniformize: gaussian marginal sigma " << got
               << " does not match model marginal sd " << want;
            throw std::invalid_argument(os.str());
        }
    }
    std::vector<double> u(path.x.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = marginal.F(path.x[i]);
    return u;
}

double alpha_at(const StepProcess& s, double y, double sigma_n1, Side side) {
    const double m = static_cast<double>(
        side == Side::right ? s.count_leq(y) : s.count_lt(y));
    return (m - nd(s) * y) / sigma_n1;
}

double u_at(const StepProcess& s, double y, double sigma_n1, Side side) {
    return nd(s) * (y - s.sample_quantile(y, side)) / sigma_n1;
}

double vervaat_at(const StepProcess& s, double t, double sigma_n1) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("vervaat: t outside [0,1]");
    }
    if (t == 0.0) return 0.0;
    const double n = nd(s);
    const double int_alpha = (n * s.integral_cdf(t) - n * t * t / 2.0) / sigma_n1;
    const double int_u = (n * t * t / 2.0 - n * s.integral_quantile(t)) / sigma_n1;
    return 2.0 * n / sigma_n1 * (int_alpha - int_u);
}

double vervaat_error_at(const StepProcess& s, double t, double sigma_n1) {
    const double a = alpha_at(s, t, sigma_n1);
    return vervaat_at(s, t, sigma_n1) - a * a;
}

double a_n_at(const StepProcess& s, double t, double sigma_n1) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("a_n: t outside [0,1]");
    }
    const double n = nd(s);
    const double unt = (t == 0.0) ? s.order_stat(1) : s.sample_quantile(t);
    auto int_alpha_to = [&](double v) {
        return (n * s.integral_cdf(v) - n * v * v / 2.0) / sigma_n1;
    };
    const double ia = int_alpha_to(t) - int_alpha_to(unt);
    const double at = alpha_at(s, t, sigma_n1);
    return 2.0 * n / sigma_n1 * (ia - at * (t - unt));
}

namespace {

ProcessEvaluation eval_on_grid(ProcessKind kind, const StepProcess& s,
                               const std::vector<double>& grid, double sigma,
                               const std::function<double(double)>& f) {
    if (s.n() == 0) throw std::invalid_argument("empty sample");
    ProcessEvaluation out;
    out.kind = kind;
    out.grid = grid;
    out.n = s.n();
    out.sigma_n1 = sigma;
    out.values.reserve(grid.size());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("grid must be strictly increasing");
        }
    }
    for (double y : grid) out.values.push_back(f(y));
    return out;
}

}  // namespace

ProcessEvaluation alpha_n(const StepProcess& s, const std::vector<double>& grid,
                          double sigma_n1) {
    if (!(sigma_n1 > 0.0)) throw std::domain_error("alpha_n: sigma_n1 <= 0");
    return eval_on_grid(ProcessKind::alpha, s, grid, sigma_n1,
                        [&](double y) { return alpha_at(s, y, sigma_n1); });
}

ProcessEvaluation u_n(const StepProcess& s, const std::vector<double>& grid,
                      double sigma_n1) {
    if (!(sigma_n1 > 0.0)) throw std::domain_error("u_n: sigma_n1 <= 0");
    return eval_on_grid(ProcessKind::u, s, grid, sigma_n1,
                        [&](double y) { return u_at(s, y, sigma_n1); });
}

ProcessEvaluation beta_n(const StepProcess& x_sample, const MarginalModel& marginal,
                         const std::vector<double>& x_grid, double sigma_n1) {
    return eval_on_grid(ProcessKind::beta, x_sample, x_grid, sigma_n1,
                        [&](double x) {
                            const double fn = x_sample.cdf(x);
                            return nd(x_sample) * (fn - marginal.F(x)) / sigma_n1;
                        });
}

ProcessEvaluation q_n(const StepProcess& x_sample, const MarginalModel& marginal,
                      const std::vector<double>& y_grid, double sigma_n1) {
    return eval_on_grid(ProcessKind::q, x_sample, y_grid, sigma_n1,
                        [&](double y) {
                            return nd(x_sample) *
                                   (marginal.Q(y) - x_sample.sample_quantile(y)) /
                                   sigma_n1;
                        });
}

ProcessEvaluation bahadur_kiefer(const ProcessEvaluation& alpha,
                                 const ProcessEvaluation& u) {
    require_same_grid(alpha, u, "bahadur_kiefer");
    ProcessEvaluation out = alpha;
    out.kind = ProcessKind::bk;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] -= u.values[i];
    return out;
}

ProcessEvaluation vervaat(const StepProcess& s, const std::vector<double>& grid,
                          double sigma_n1) {
    return eval_on_grid(ProcessKind::vervaat, s, grid, sigma_n1,
                        [&](double t) { return vervaat_at(s, t, sigma_n1); });
}

ProcessEvaluation vervaat_error(const ProcessEvaluation& vervaat_eval,
                                const ProcessEvaluation& alpha_eval) {
    require_same_grid(vervaat_eval, alpha_eval, "vervaat_error");
    ProcessEvaluation out = vervaat_eval;
    out.kind = ProcessKind::vervaat_error;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] -= alpha_eval.values[i] * alpha_eval.values[i];
    return out;
}

ProcessEvaluation a_n_functional(const StepProcess& s,
                                 const std::vector<double>& grid,
                                 double sigma_n1) {
    return eval_on_grid(ProcessKind::a_n, s, grid, sigma_n1,
                        [&](double t) { return a_n_at(s, t, sigma_n1); });
}

// ---------------------------------------------------------------------------
// sup statistics

namespace {

// Break points of E_n and U_n inside [lo,hi], window ends, plus a uniform
// refinement for the smooth terms.
std::vector<double> sup_grid(const StepProcess& s, const SupOptions& opts) {
    const double lo = std::max(opts.lo, 1e-10);
    const double hi = std::min(opts.hi, 1.0 - 1e-10);
    std::vector<double> g;
    g.reserve(2 * s.n() + static_cast<std::size_t>(opts.refinement) + 2);
    g.push_back(lo);
    g.push_back(hi);
    for (double x : s.jump_points())
        if (x > lo && x < hi) g.push_back(x);
    const double n = nd(s);
    for (std::size_t i = 1; i < s.n(); ++i) {
        const double y = static_cast<double>(i) / n;
        if (y > lo && y < hi) g.push_back(y);
    }
    for (int i = 1; i < opts.refinement; ++i) {
        const double y = lo + (hi - lo) * static_cast<double>(i) / opts.refinement;
        g.push_back(y);
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

// smooth(y) is evaluated once per grid point, stat(smooth, alpha, u) once per
// side; the expensive profile calls are in smooth.
template <typename Smooth, typename Stat>
double sup_statistic(const StepProcess& s, double sigma, const SupOptions& opts,
                     Smooth&& smooth, Stat&& stat) {
    double best = 0.0;
    for (double y : sup_grid(s, opts)) {
        const double sm = smooth(y);
        for (Side side : {Side::left, Side::right}) {
            const double a = alpha_at(s, y, sigma, side);
            const double u = u_at(s, y, sigma, side);
            best = std::max(best, std::abs(stat(sm, a, u)));
        }
    }
    return best;
}

}  // namespace

double sup_thm11_residual(const StepProcess& s,
                          const std::function<double(double)>& fprimeQ,
                          double y1, double sigma_n1, const SupOptions& opts) {
    const double z2 = (y1 / sigma_n1) * (y1 / sigma_n1);
    const double scale = nd(s) / sigma_n1;
    return sup_statistic(
        s, sigma_n1, opts, [&](double y) { return fprimeQ(y) * z2; },
        [&](double sm, double a, double u) { return scale * (a - u) - sm; });
}

double sup_reduction_p2(const StepProcess& s,
                        const std::function<double(double)>& fQ,
                        const std::function<double(double)>& fprimeQ,
                        double y1, double y2, double sigma_n1, bool flip_sign,
                        const SupOptions& opts) {
    const double sgn = flip_sign ? 1.0 : -1.0;
    return sup_statistic(
        s, sigma_n1, opts,
        [&](double y) { return (fQ(y) * y1 + sgn * fprimeQ(y) * y2) / sigma_n1; },
        [&](double sm, double a, double) { return a + sm; });
}

double sup_cor25_centered(const StepProcess& s,
                          const std::function<double(double)>& fQ, double y1,
                          double sigma_n1, const SupOptions& opts) {
    return sup_statistic(
        s, sigma_n1, opts, [&](double y) { return fQ(y) * y1 / sigma_n1; },
        [&](double sm, double, double u) { return u + sm; });
}

double sup_abs_u(const StepProcess& s, double sigma_n1) {
    // u_n is piecewise affine with positive slope and breaks at i/n only;
    // |u_n| attains its sup at a one-sided limit of a break point.
    double best = 0.0;
    const std::size_t n = s.n();
    for (std::size_t i = 0; i <= n; ++i) {
        const double y = static_cast<double>(i) / static_cast<double>(n);
        for (Side side : {Side::left, Side::right}) {
            if ((i == 0 && side == Side::left) || (i == n && side == Side::right))
                continue;
            best = std::max(best, std::abs(u_at(s, y, sigma_n1, side)));
        }
    }
    return best;
}

}  // namespace lrd
