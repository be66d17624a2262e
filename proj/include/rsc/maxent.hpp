#ifndef RSC_MAXENT_HPP
#define RSC_MAXENT_HPP

#include <memory>
#include <string>
#include <vector>

#include "rsc/enumeration.hpp"
#include "rsc/observables.hpp"

namespace rsc {

/// Entropy maximization over an enumerated space with expectation constraints.
struct MaxEntProblem {
    std::shared_ptr<const ComplexSpace> space;
    std::vector<Observable> observables;
    std::vector<double> targets;
    std::vector<double> theta;  // empty until set or fitted
};

struct SolveOptions {
    double tol = 1e-10;          // max-norm on E_theta[x] - target
    int max_iterations = 200;
    double armijo_slope = 1e-4;
    double backtrack_shrink = 0.5;
    double rank_tol = 1e-10;     // relative singular-value cutoff
    double theta_bound = 200.0;  // divergence watchdog
};

struct FitReport {
    std::vector<double> theta;
    double gradient_norm = 0.0;
    int iterations = 0;
    std::vector<double> achieved_expectations;
    double entropy = 0.0;
    bool rank_deficient = false;
};

// Gibbs distribution P(C) = exp(-theta.x(C)) / Z over the problem's space.
ExactDistribution gibbs_distribution(const MaxEntProblem& problem);

// Fits theta by damped Newton on the convex dual ln Z(theta) + theta.targets,
// with the Hessian taken as the observable covariance under the current
// Gibbs distribution. Throws on infeasible targets or iteration cap.
FitReport solve_theta(MaxEntProblem& problem, const SolveOptions& opts = {});

// Closed-form two-constraint maximum-entropy distribution on the 9-member
// space of complexes on 3 vertices, with targets (3 p1, p1^3 p2).
ExactDistribution tilde_distribution_n3(double p1, double p2,
                                        std::shared_ptr<const ComplexSpace> space);

struct DominanceReport {
    int perturbations = 0;
    int violations = 0;       // perturbations with entropy above the candidate's
    double min_entropy_gap = 0.0;  // min over Q of S(p_star) - S(Q)
};

// Draws feasible null-space perturbations and checks entropy dominance
// of p_star under the given constraints.
DominanceReport verify_maxent(const ExactDistribution& p_star,
                              const std::vector<Observable>& observables,
                              int n_perturbations, RngState rng,
                              double magnitude = 0.5);

}  // namespace rsc

#endif
