#include "lrd/marginal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lrd/model.hpp"
#include "lrd/rng.hpp"
#include "lrd/special.hpp"

namespace lrd {

namespace {
constexpr double kProfileEdge = 1e-10;

void require_open_unit(double y, const char* who) {
    if (!(y > 0.0 && y < 1.0)) {
        std::ostringstream os;
        os << who << ": argument " << y << " outside (0,1)";
        throw std::domain_error(os.str());
    }
}

void require_profile_range(double y) {
    if (!(y >= kProfileEdge && y <= 1.0 - kProfileEdge)) {
        throw std::domain_error("profile: y outside [1e-10, 1-1e-10]");
    }
}
}  // namespace

// ---------------------------------------------------------------------------

struct MarginalModel::Impl {
    enum class Family { gaussian, pareto_tail, empirical_oracle } family;

    // gaussian
    double sigma = 1.0;

    // pareto_tail: density c*|x|^(-alpha) for |x|>delta; inside, the even
    // polynomial c*(b0 + b4 (x/d)^4 + b6 (x/d)^6) * d^(-alpha), matched to
    // value/slope/curvature at the seam; b2 = 0 keeps it positive for all
    // alpha and pins the leftover degree of freedom.
    double alpha = 0.0, delta = 0.0, c = 0.0;
    double b0 = 0.0, b4 = 0.0, b6 = 0.0;
    double F_delta = 0.0;  // F(delta)

    // empirical_oracle
    std::vector<double> sorted_sample;
    bool derivative_tables = false;

    std::string name() const {
        switch (family) {
            case Family::gaussian: return "gaussian";
            case Family::pareto_tail: return "pareto_tail";
            case Family::empirical_oracle: return "empirical_oracle";
        }
        return "?";
    }

    // --- pareto helpers (x >= 0 by symmetry) ---
    double pareto_r(double u) const { return b0 + b4 * u * u * u * u + b6 * std::pow(u, 6); }
    double pareto_rp(double u) const { return 4.0 * b4 * u * u * u + 6.0 * b6 * std::pow(u, 5); }
    double pareto_rpp(double u) const { return 12.0 * b4 * u * u + 30.0 * b6 * u * u * u * u; }
    double pareto_rppp(double u) const { return 24.0 * b4 * u + 120.0 * b6 * u * u * u; }
    double pareto_P(double u) const {  // integral of r on [0,u]
        return b0 * u + b4 * std::pow(u, 5) / 5.0 + b6 * std::pow(u, 7) / 7.0;
    }

    double pareto_f(double x) const {
        const double ax = std::abs(x);
        if (ax <= delta) return c * std::pow(delta, -alpha) * pareto_r(ax / delta);
        return c * std::pow(ax, -alpha);
    }
    double pareto_fp(double x) const {
        const double ax = std::abs(x);
        const double s = (x >= 0.0) ? 1.0 : -1.0;
        if (ax <= delta) return s * c * std::pow(delta, -alpha - 1.0) * pareto_rp(ax / delta);
        return -s * alpha * c * std::pow(ax, -alpha - 1.0);
    }
    double pareto_fpp(double x) const {
        const double ax = std::abs(x);
        if (ax <= delta) return c * std::pow(delta, -alpha - 2.0) * pareto_rpp(ax / delta);
        return alpha * (alpha + 1.0) * c * std::pow(ax, -alpha - 2.0);
    }
    double pareto_fppp(double x) const {
        const double ax = std::abs(x);
        const double s = (x >= 0.0) ? 1.0 : -1.0;
        if (ax <= delta) return s * c * std::pow(delta, -alpha - 3.0) * pareto_rppp(ax / delta);
        return -s * alpha * (alpha + 1.0) * (alpha + 2.0) * c * std::pow(ax, -alpha - 3.0);
    }
    double pareto_F(double x) const {
        if (x < 0.0) return 1.0 - pareto_F(-x);
        if (x <= delta)
            return 0.5 + c * std::pow(delta, 1.0 - alpha) * pareto_P(x / delta);
        return 1.0 - c * std::pow(x, 1.0 - alpha) / (alpha - 1.0);
    }
    double pareto_Q(double y) const {
        if (y < 0.5) return -pareto_Q(1.0 - y);
        if (y >= F_delta)
            return std::pow(c / ((alpha - 1.0) * (1.0 - y)), 1.0 / (alpha - 1.0));
        // invert the polynomial CDF piece on [0, delta]
        const double target = (y - 0.5) * std::pow(delta, alpha - 1.0) / c;
        double lo = 0.0, hi = 1.0, u = std::min(1.0, target / b0);
        for (int it = 0; it < 80; ++it) {
            const double g = pareto_P(u) - target;
            if (g > 0.0) hi = u; else lo = u;
            const double step = g / pareto_r(u);
            double next = u - step;
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - u) < 1e-16) { u = next; break; }
            u = next;
        }
        return u * delta;
    }

    // --- oracle helpers: order-statistic interpolation at (i+0.5)/S ---
    double oracle_Q(double y) const {
        const double S = static_cast<double>(sorted_sample.size());
        const double pos = y * S - 0.5;
        if (pos <= 0.0) return sorted_sample.front();
        if (pos >= S - 1.0) return sorted_sample.back();
        const std::size_t i = static_cast<std::size_t>(pos);
        const double w = pos - static_cast<double>(i);
        return (1.0 - w) * sorted_sample[i] + w * sorted_sample[i + 1];
    }
    double oracle_F(double x) const {
        const auto& s = sorted_sample;
        const double S = static_cast<double>(s.size());
        if (x <= s.front()) return 0.5 / S;
        if (x >= s.back()) return (S - 0.5) / S;
        const auto it = std::upper_bound(s.begin(), s.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - s.begin()) - 1;
        const double gap = s[i + 1] - s[i];
        const double w = (gap > 0.0) ? (x - s[i]) / gap : 0.0;
        return (static_cast<double>(i) + 0.5 + w) / S;
    }
    double oracle_f(double x) const {
        // central difference of F-hat over a sample-scale window
        const double h = std::max(1e-4, (sorted_sample.back() - sorted_sample.front()) * 2e-4);
        return (oracle_F(x + h) - oracle_F(x - h)) / (2.0 * h);
    }
    double oracle_fp(double x) const {
        const double h = std::max(2e-3, (sorted_sample.back() - sorted_sample.front()) * 1e-3);
        return (oracle_f(x + h) - oracle_f(x - h)) / (2.0 * h);
    }
};

MarginalModel::MarginalModel(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

MarginalModel MarginalModel::gaussian(double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("gaussian marginal: sigma <= 0");
    auto impl = std::make_shared<Impl>();
    impl->family = Impl::Family::gaussian;
    impl->sigma = sigma;
    return MarginalModel(impl);
}

MarginalModel MarginalModel::pareto_tail(double alpha, double delta) {
    if (!(alpha > 2.0)) throw std::domain_error("pareto_tail: alpha must be > 2");
    if (!(delta > 0.0)) throw std::domain_error("pareto_tail: delta must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->family = Impl::Family::pareto_tail;
    impl->alpha = alpha;
    impl->delta = delta;
    impl->b6 = alpha * (alpha + 4.0) / 12.0;
    impl->b4 = -alpha * (alpha + 6.0) / 8.0;
    impl->b0 = 1.0 + alpha * (alpha + 10.0) / 24.0;
    const double interior = impl->b0 + impl->b4 / 5.0 + impl->b6 / 7.0;
    impl->c = std::pow(delta, alpha - 1.0) /
              (2.0 * (interior + 1.0 / (alpha - 1.0)));
    impl->F_delta = impl->pareto_F(delta);
    return MarginalModel(impl);
}

MarginalModel MarginalModel::empirical_oracle(const LinearProcessModel& model,
                                              std::uint64_t sample_size,
                                              std::uint64_t seed,
                                              bool derivative_tables) {
    if (sample_size < 1000) {
        throw std::domain_error("empirical_oracle: sample_size too small");
    }
    auto impl = std::make_shared<Impl>();
    impl->family = Impl::Family::empirical_oracle;
    impl->derivative_tables = derivative_tables;

    // Independent marginal draws: head of the coefficient vector exactly,
    // remaining tail replaced by its Gaussian CLT limit (the tail is a sum of
    // many independent small terms; its non-Gaussian cumulants are below the
    // table resolution for the supported laws).
    const std::uint64_t m = model.coefficients.truncation_m();
    const std::uint64_t head = std::min<std::uint64_t>(m, 2048);
    std::vector<double> c(head + 1);
    for (std::uint64_t k = 0; k <= head; ++k) c[k] = model.coefficients.coefficient(k);
    double tail_var = 0.0;
    if (head < m) {
        tail_var = model.marginal_variance();
        for (double ck : c) tail_var -= ck * ck * model.innovations.variance();
        tail_var = std::max(tail_var, 0.0);
    }
    const double tail_sd = std::sqrt(tail_var);

    impl->sorted_sample.resize(sample_size);
    UniformSource rng(seed);
    for (std::uint64_t i = 0; i < sample_size; ++i) {
        double x = 0.0;
        for (double ck : c) x += ck * model.innovations.quantile(rng.next());
        if (tail_sd > 0.0) x += tail_sd * normal_quantile(rng.next());
        impl->sorted_sample[i] = x;
    }
    std::sort(impl->sorted_sample.begin(), impl->sorted_sample.end());
    return MarginalModel(impl);
}

bool MarginalModel::is_gaussian() const {
    return impl_->family == Impl::Family::gaussian;
}

double MarginalModel::gaussian_sigma() const {
    if (!is_gaussian()) throw std::logic_error("marginal is not gaussian");
    return impl_->sigma;
}

std::string MarginalModel::name() const { return impl_->name(); }

double MarginalModel::eval(MarginalFunction which, double arg) const {
    const Impl& im = *impl_;
    if (which == MarginalFunction::Q) require_open_unit(arg, "Q");
    switch (im.family) {
        case Impl::Family::gaussian: {
            const double s = im.sigma;
            switch (which) {
                case MarginalFunction::F: return normal_cdf(arg / s);
                case MarginalFunction::f: return normal_pdf(arg / s) / s;
                case MarginalFunction::fprime:
                    return -(arg / (s * s)) * normal_pdf(arg / s) / s;
                case MarginalFunction::Q: return s * normal_quantile(arg);
            }
            break;
        }
        case Impl::Family::pareto_tail:
            switch (which) {
                case MarginalFunction::F: return im.pareto_F(arg);
                case MarginalFunction::f: return im.pareto_f(arg);
                case MarginalFunction::fprime: return im.pareto_fp(arg);
                case MarginalFunction::Q: return im.pareto_Q(arg);
            }
            break;
        case Impl::Family::empirical_oracle:
            switch (which) {
                case MarginalFunction::F: return im.oracle_F(arg);
                case MarginalFunction::f: return im.oracle_f(arg);
                case MarginalFunction::fprime: return im.oracle_fp(arg);
                case MarginalFunction::Q: return im.oracle_Q(arg);
            }
            break;
    }
    throw std::logic_error("MarginalModel::eval: unreachable");
}

DensityQuantileProfile MarginalModel::profile() const {
    const auto impl = impl_;
    DensityQuantileProfile p;
    switch (impl->family) {
        case Impl::Family::gaussian: {
            const double s = impl->sigma;
            p.fQ = [s](double y) {
                require_profile_range(y);
                return normal_pdf(normal_quantile(y)) / s;
            };
            p.fprimeQ = [s](double y) {
                require_profile_range(y);
                const double z = normal_quantile(y);
                return -z * normal_pdf(z) / (s * s);
            };
            p.fQ_prime = [s](double y) {
                require_profile_range(y);
                return -normal_quantile(y) / s;
            };
            p.fQ_second = [s](double y) {
                require_profile_range(y);
                return -1.0 / (s * normal_pdf(normal_quantile(y)));
            };
            p.fprimeQ_prime = [s](double y) {
                require_profile_range(y);
                const double z = normal_quantile(y);
                return (z * z - 1.0) / (s * s);
            };
            p.fprimeQ_second = [s](double y) {
                require_profile_range(y);
                const double z = normal_quantile(y);
                return 2.0 * z / (s * s * normal_pdf(z));
            };
            return p;
        }
        case Impl::Family::pareto_tail: {
            p.fQ = [impl](double y) {
                require_profile_range(y);
                return impl->pareto_f(impl->pareto_Q(y));
            };
            p.fprimeQ = [impl](double y) {
                require_profile_range(y);
                return impl->pareto_fp(impl->pareto_Q(y));
            };
            p.fQ_prime = [impl](double y) {
                require_profile_range(y);
                const double x = impl->pareto_Q(y);
                return impl->pareto_fp(x) / impl->pareto_f(x);
            };
            p.fQ_second = [impl](double y) {
                require_profile_range(y);
                const double x = impl->pareto_Q(y);
                const double f = impl->pareto_f(x);
                const double f1 = impl->pareto_fp(x);
                const double f2 = impl->pareto_fpp(x);
                return (f2 * f - f1 * f1) / (f * f * f);
            };
            p.fprimeQ_prime = [impl](double y) {
                require_profile_range(y);
                const double x = impl->pareto_Q(y);
                return impl->pareto_fpp(x) / impl->pareto_f(x);
            };
            p.fprimeQ_second = [impl](double y) {
                require_profile_range(y);
                const double x = impl->pareto_Q(y);
                const double f = impl->pareto_f(x);
                const double f2 = impl->pareto_fpp(x);
                const double f3 = impl->pareto_fppp(x);
                return (f3 * f - f2 * impl->pareto_fp(x)) / (f * f * f);
            };
            return p;
        }
        case Impl::Family::empirical_oracle: {
            if (!impl->derivative_tables) {
                throw std::domain_error(
                    "profile: empirical_oracle built without derivative tables");
            }
            auto fq = [impl](double y) {
                require_profile_range(y);
                return impl->oracle_f(impl->oracle_Q(y));
            };
            p.fQ = fq;
            p.fprimeQ = [impl](double y) {
                require_profile_range(y);
                return impl->oracle_fp(impl->oracle_Q(y));
            };
            auto diff = [](const std::function<double(double)>& g, double y) {
                const double h = std::min({1e-4, 0.5 * y, 0.5 * (1.0 - y)});
                return (g(y + h) - g(y - h)) / (2.0 * h);
            };
            p.fQ_prime = [fq, diff](double y) { return diff(fq, y); };
            p.fQ_second = [fq, diff](double y) {
                const double h = std::min({1e-3, 0.4 * y, 0.4 * (1.0 - y)});
                return (fq(y + h) - 2.0 * fq(y) + fq(y - h)) / (h * h);
            };
            auto fpq = p.fprimeQ;
            p.fprimeQ_prime = [fpq, diff](double y) { return diff(fpq, y); };
            p.fprimeQ_second = [fpq](double y) {
                const double h = std::min({1e-3, 0.4 * y, 0.4 * (1.0 - y)});
                return (fpq(y + h) - 2.0 * fpq(y) + fpq(y - h)) / (h * h);
            };
            return p;
        }
    }
    throw std::logic_error("profile: unreachable");
}

// ---------------------------------------------------------------------------

namespace {

std::vector<double> level_grid(const RefinementSchedule& sched, int level) {
    // geometric approach toward both endpoints down to spacing(level)
    const double lf = std::log10(sched.first_spacing);
    const double ll = std::log10(sched.last_spacing);
    const double lmin = lf + (ll - lf) * static_cast<double>(level) /
                                 static_cast<double>(sched.levels - 1);
    std::vector<double> ys;
    const double decades = -lmin - 0.30103;  // up to ~0.5
    const int pts = static_cast<int>(decades * sched.points_per_decade);
    for (int i = 0; i <= pts; ++i) {
        const double e = lmin + (0.0 - 0.30103 - lmin) * static_cast<double>(i) /
                                    std::max(1, pts);
        const double y = std::pow(10.0, e);
        ys.push_back(y);
        ys.push_back(1.0 - y);
    }
    for (int i = 1; i < sched.interior_points; ++i) {
        ys.push_back(static_cast<double>(i) / sched.interior_points);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::vector<double> out;
    for (double y : ys)
        if (y >= kProfileEdge && y <= 1.0 - kProfileEdge) out.push_back(y);
    return out;
}

ConditionReport run_weighted_sup(
    Condition cond, double mu, const RefinementSchedule& sched,
    const std::vector<std::function<double(double)>>& gs, double weight_pow) {
    ConditionReport rep;
    rep.condition = cond;
    rep.mu = mu;
    double prev_sup = -1.0, prev_prev = -1.0;
    for (int level = 0; level < sched.levels; ++level) {
        for (double y : level_grid(sched, level)) {
            const double w = std::pow(y * (1.0 - y), weight_pow);
            for (const auto& g : gs) {
                const double v = std::abs(g(y)) * w;
                if (v > rep.grid_sup) {
                    rep.grid_sup = v;
                    rep.sup_location = y;
                }
            }
        }
        prev_prev = prev_sup;
        prev_sup = rep.grid_sup;
    }
    // bounded iff the running sup stabilized over the last two levels
    rep.bounded = prev_prev > 0.0 &&
                  (prev_sup - prev_prev) <= sched.growth_tolerance * prev_prev;
    return rep;
}

}  // namespace

ConditionReport check_condition(const MarginalModel& model, Condition cond,
                                double mu, const RefinementSchedule& sched) {
    const DensityQuantileProfile p = model.profile();
    switch (cond) {
        case Condition::A:
            if (!(mu > 0.0 && mu < 0.5))
                throw std::domain_error("condition (A): mu must be in (0, 1/2)");
            return run_weighted_sup(cond, mu, sched, {p.fQ, p.fprimeQ},
                                    -(1.0 - mu));
        case Condition::B:
            if (!(mu > 0.0)) throw std::domain_error("condition (B): mu must be > 0");
            return run_weighted_sup(cond, mu, sched,
                                    {p.fQ_prime, p.fprimeQ_prime}, mu);
        case Condition::C:
            if (!(mu > 0.0)) throw std::domain_error("condition (C): mu must be > 0");
            return run_weighted_sup(cond, mu, sched,
                                    {p.fQ_second, p.fprimeQ_second}, 1.0 + mu);
    }
    throw std::logic_error("check_condition: unreachable");
}

ConditionReport check_unweighted_derivative(const MarginalModel& model,
                                            const RefinementSchedule& sched) {
    const DensityQuantileProfile p = model.profile();
    ConditionReport rep = run_weighted_sup(Condition::B, 0.0, sched,
                                           {p.fQ_prime}, 0.0);
    return rep;
}

std::string ConditionReport::to_json() const {
    std::ostringstream os;
    const char* cname = condition == Condition::A   ? "A"
                        : condition == Condition::B ? "B"
                                                    : "C";
    os << "{\"condition\":\"" << cname << "\",\"mu\":" << mu
       << ",\"grid_sup\":" << grid_sup << ",\"sup_location\":" << sup_location
       << ",\"verdict\":\"" << (bounded ? "bounded" : "unbounded-trend")
       << "\"}";
    return os.str();
}

}  // namespace lrd
