#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lrd/marginal.hpp"
#include "lrd/model.hpp"
#include "lrd/step_process.hpp"

namespace lrd {

enum class ProcessKind { alpha, beta, u, q, bk, vervaat, vervaat_error, a_n };

struct ProcessEvaluation {
    ProcessKind kind;
    std::vector<double> grid;
    std::vector<double> values;
    std::uint64_t n = 0;
    double sigma_n1 = 1.0;

    std::string to_csv() const;   // columns y,value
    std::string to_json() const;
};

// U_i = F(X_i). The marginal must match the path's model: for the gaussian
// family the variance is checked against the model's exact marginal variance.
std::vector<double> uniformize(const SamplePath& path,
                               const LinearProcessModel& model,
                               const MarginalModel& marginal);

// ---- pointwise evaluators (exact, side-aware at the break points) ----
double alpha_at(const StepProcess& u_sample, double y, double sigma_n1,
                Side side = Side::right);
double u_at(const StepProcess& u_sample, double y, double sigma_n1,
            Side side = Side::left);
double vervaat_at(const StepProcess& u_sample, double t, double sigma_n1);
double vervaat_error_at(const StepProcess& u_sample, double t, double sigma_n1);
double a_n_at(const StepProcess& u_sample, double t, double sigma_n1);

// ---- grid operations returning ProcessEvaluation ----
ProcessEvaluation alpha_n(const StepProcess& u_sample,
                          const std::vector<double>& y_grid, double sigma_n1);
ProcessEvaluation u_n(const StepProcess& u_sample,
                      const std::vector<double>& y_grid, double sigma_n1);
// beta_n on an x grid; q_n on a y grid (general-scale sample)
ProcessEvaluation beta_n(const StepProcess& x_sample, const MarginalModel& marginal,
                         const std::vector<double>& x_grid, double sigma_n1);
ProcessEvaluation q_n(const StepProcess& x_sample, const MarginalModel& marginal,
                      const std::vector<double>& y_grid, double sigma_n1);
ProcessEvaluation bahadur_kiefer(const ProcessEvaluation& alpha,
                                 const ProcessEvaluation& u);
ProcessEvaluation vervaat(const StepProcess& u_sample,
                          const std::vector<double>& t_grid, double sigma_n1);
ProcessEvaluation vervaat_error(const ProcessEvaluation& vervaat_eval,
                                const ProcessEvaluation& alpha_eval);
ProcessEvaluation a_n_functional(const StepProcess& u_sample,
                                 const std::vector<double>& t_grid,
                                 double sigma_n1);

// ---- exact sup statistics over the jump-union grid ----
// Both one-sided limits are taken at every break point of E_n and U_n, which
// makes the empirical part of the sup exact; the smooth profile terms are
// additionally sampled on a uniform refinement between jumps.
struct SupOptions {
    int refinement = 4096;
    double lo = 0.0;  // window [lo, hi], clamped to the profile's domain
    double hi = 1.0;
};

// sup | (n/sigma) R~(y) - fprimeQ(y) (Y1/sigma)^2 | over [lo,hi]
double sup_thm11_residual(const StepProcess& u_sample,
                          const std::function<double(double)>& fprimeQ,
                          double y1, double sigma_n1, const SupOptions& opts);

// sup | alpha(y) + (fQ(y) Y1 -+ fprimeQ(y) Y2) / sigma | over (0,1);
// flip_sign selects the wrong-sign diagnostic (+ instead of -).
double sup_reduction_p2(const StepProcess& u_sample,
                        const std::function<double(double)>& fQ,
                        const std::function<double(double)>& fprimeQ,
                        double y1, double y2, double sigma_n1, bool flip_sign,
                        const SupOptions& opts);

// sup | u(y) + fQ(y) Y1 / sigma | over (0,1)
double sup_cor25_centered(const StepProcess& u_sample,
                          const std::function<double(double)>& fQ, double y1,
                          double sigma_n1, const SupOptions& opts);

// sup | u(y) | over (0,1) (exact; no smooth term)
double sup_abs_u(const StepProcess& u_sample, double sigma_n1);

}  // namespace lrd
