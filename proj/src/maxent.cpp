#include "rsc/maxent.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "rsc/logsumexp.hpp"

namespace rsc {

namespace {

Eigen::MatrixXd observable_matrix(const MaxEntProblem& problem) {
    const auto& space = *problem.space;
    Eigen::MatrixXd X(problem.observables.size(), space.members.size());
    for (std::size_t i = 0; i < problem.observables.size(); ++i)
        for (std::size_t j = 0; j < space.members.size(); ++j)
            X(i, j) = problem.observables[i].fn(space.members[j]);
    return X;
}

// Gibbs weights for theta over columns of X; returns (probs, ln Z).
std::pair<Eigen::VectorXd, double> gibbs_weights(const Eigen::MatrixXd& X, const Eigen::VectorXd& theta) {
    Eigen::VectorXd logw = -(X.transpose() * theta);
    double m = logw.maxCoeff();
    Eigen::VectorXd w = (logw.array() - m).exp();
    double s = w.sum();
    return {w / s, m + std::log(s)};
}

Eigen::VectorXd pinv_solve(const Eigen::MatrixXd& H, const Eigen::VectorXd& g, double rank_tol,
                           bool* deficient) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    const auto& vals = es.eigenvalues();
    double cutoff = rank_tol * std::max(vals.cwiseAbs().maxCoeff(), 1e-300);
    Eigen::VectorXd inv(vals.size());
    *deficient = false;
    for (int i = 0; i < vals.size(); ++i) {
        if (vals(i) > cutoff) {
            inv(i) = 1.0 / vals(i);
        } else {
            inv(i) = 0.0;
            *deficient = true;
        }
    }
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose() * g;
}

}  // namespace

ExactDistribution gibbs_distribution(const MaxEntProblem& problem) {
    if (problem.theta.size() != problem.observables.size())
        throw std::invalid_argument("gibbs_distribution: theta not set");
    Eigen::MatrixXd X = observable_matrix(problem);
    Eigen::VectorXd theta = Eigen::Map<const Eigen::VectorXd>(problem.theta.data(), problem.theta.size());
    auto [probs, lz] = gibbs_weights(X, theta);
    (void)lz;
    ExactDistribution dist;
    dist.space = problem.space;
    dist.probs.assign(probs.data(), probs.data() + probs.size());
    return dist;
}

FitReport solve_theta(MaxEntProblem& problem, const SolveOptions& opts) {
    const std::size_t r = problem.observables.size();
    if (problem.targets.size() != r)
        throw std::invalid_argument("solve_theta: targets/observables size mismatch");
    const std::size_t N = problem.space->members.size();
    if (N == 0) throw std::invalid_argument("solve_theta: empty space");

    Eigen::MatrixXd X = observable_matrix(problem);
    Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(problem.targets.data(), r);

    // Necessary feasibility check: each target inside the observable range.
    for (std::size_t i = 0; i < r; ++i) {
        double lo = X.row(i).minCoeff(), hi = X.row(i).maxCoeff();
        if (target(i) < lo - 1e-12 || target(i) > hi + 1e-12)
            throw std::invalid_argument("solve_theta: target for " + problem.observables[i].name +
                                        " outside the achievable range");
    }

    Eigen::VectorXd theta = Eigen::VectorXd::Zero(r);
    auto dual = [&](const Eigen::VectorXd& th) {
        auto [p, lz] = gibbs_weights(X, th);
        (void)p;
        return lz + th.dot(target);
    };

    FitReport report;
    double fval = dual(theta);
    for (int iter = 1; iter <= opts.max_iterations; ++iter) {
        auto [p, lz] = gibbs_weights(X, theta);
        (void)lz;
        Eigen::VectorXd expect = X * p;
        Eigen::VectorXd grad = target - expect;  // gradient of the dual
        double gap = (expect - target).cwiseAbs().maxCoeff();
        if (gap < opts.tol) {
            report.iterations = iter - 1;
            report.gradient_norm = gap;
            report.theta.assign(theta.data(), theta.data() + r);
            report.achieved_expectations.assign(expect.data(), expect.data() + r);
            problem.theta = report.theta;
            double s = 0.0;
            for (int j = 0; j < p.size(); ++j)
                if (p(j) > 0.0) s -= p(j) * std::log(p(j));
            report.entropy = s;
            return report;
        }
        // Hessian of ln Z: covariance of observables under the Gibbs law.
        Eigen::MatrixXd cov = X * p.asDiagonal() * X.transpose() - expect * expect.transpose();
        bool deficient = false;
        Eigen::VectorXd dir = -pinv_solve(cov, grad, opts.rank_tol, &deficient);
        report.rank_deficient = report.rank_deficient || deficient;
        double slope = grad.dot(dir);
        if (slope > 0.0) dir = -grad, slope = -grad.squaredNorm();  // fallback descent

        double t = 1.0;
        double fnew = dual(theta + t * dir);
        while (fnew > fval + opts.armijo_slope * t * slope && t > 1e-14) {
            t *= opts.backtrack_shrink;
            fnew = dual(theta + t * dir);
        }
        theta += t * dir;
        fval = fnew;
        if (theta.cwiseAbs().maxCoeff() > opts.theta_bound)
            throw std::runtime_error("solve_theta: multiplier divergence, targets appear infeasible");
    }
    throw std::runtime_error("solve_theta: iteration cap exceeded");
}

ExactDistribution tilde_distribution_n3(double p1, double p2,
                                        std::shared_ptr<const ComplexSpace> space) {
    if (!(p1 > 0.0 && p1 < 1.0 && p2 > 0.0 && p2 < 1.0))
        throw std::invalid_argument("tilde_distribution_n3: parameters must lie in (0,1)");
    if (space->n != 3 || space->kind != SpaceKind::FullVertexSet)
        throw std::invalid_argument("tilde_distribution_n3: needs the full 3-vertex space");
    ExactDistribution dist;
    dist.space = space;
    for (const auto& c : space->members) {
        double f1 = static_cast<double>(c.f(1));
        double f2 = static_cast<double>(c.f(2));
        double lp = xlogp(f1, p1) + xlogp(3.0 - f1, 1.0 - p1) + xlogp(f2, p2) +
                    xlogp(f1 - 3.0 * f2, 1.0 - p1 * p1 * p2) +
                    xlogp(2.0 * f2 - 2.0, 1.0 - p1 * p1 * p1 * p2);
        dist.probs.push_back(std::exp(lp));
    }
    return dist;
}

DominanceReport verify_maxent(const ExactDistribution& p_star,
                              const std::vector<Observable>& observables,
                              int n_perturbations, RngState rng, double magnitude) {
    auto values = evaluate_observables(observables, *p_star.space);
    auto perturbed = feasible_perturbations(p_star, values, n_perturbations, magnitude, rng);
    DominanceReport report;
    report.perturbations = static_cast<int>(perturbed.size());
    double s_star = entropy(p_star);
    double min_gap = std::numeric_limits<double>::infinity();
    for (const auto& q : perturbed) {
        double gap = s_star - entropy(q);
        min_gap = std::min(min_gap, gap);
        if (gap < -1e-12) ++report.violations;
    }
    report.min_entropy_gap = perturbed.empty() ? 0.0 : min_gap;
    return report;
}

}  // namespace rsc
