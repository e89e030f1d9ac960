#include "cazac/solver.hpp"

#include <cmath>

namespace cazac {

void SolverConfig::validate() const {
    if (!(gradient_tol > 0.0) || !(step_tol > 0.0) || !(cost_tol > 0.0)) {
        throw std::invalid_argument("solver tolerances must be strictly positive");
    }
    if (!(acceptance_cost > 0.0)) {
        throw std::invalid_argument("acceptance_cost must be strictly positive");
    }
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (!(initial_damping > 0.0)) throw std::invalid_argument("initial damping must be positive");
    if (!(damping_increase > 1.0) || !(damping_decrease < 1.0) || !(damping_decrease > 0.0)) {
        throw std::invalid_argument("damping factors must satisfy increase > 1, 0 < decrease < 1");
    }
}

std::string stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::gradient: return "gradient";
        case StopReason::step: return "step";
        case StopReason::cost: return "cost";
        case StopReason::max_iter: return "max_iter";
    }
    return "?";
}

SolveOutcome minimize(const ResidualSystem& system, const RealEmbedding& start,
                      const SolverConfig& cfg) {
    cfg.validate();
    Eigen::VectorXd x = ResidualSystem::to_vector(start);
    if (x.size() != system.num_variables()) {
        throw std::invalid_argument("start dimension does not match residual system");
    }

    const double cost_floor = cfg.cost_tol * cfg.cost_tol;

    Eigen::VectorXd r = system.residuals(x);
    double cost = r.squaredNorm();
    Eigen::MatrixXd J = system.jacobian(x);
    Eigen::VectorXd g = J.transpose() * r;

    SolveOutcome out;
    out.cost_history.push_back(cost);

    double lambda = cfg.initial_damping;
    int iterations = 0;
    StopReason reason = StopReason::max_iter;

    auto finish = [&](StopReason why) {
        out.point = ResidualSystem::to_embedding(x);
        out.cost = cost;
        out.iterations = iterations;
        out.reason = why;
        out.converged = cost < cfg.acceptance_cost;
        return out;
    };

    while (iterations < cfg.max_iterations) {
        if (cost <= cost_floor) return finish(StopReason::cost);
        if (g.lpNorm<Eigen::Infinity>() <= cfg.gradient_tol) return finish(StopReason::gradient);

        const Eigen::MatrixXd JtJ = J.transpose() * J;
        Eigen::VectorXd diag = JtJ.diagonal();
        const double dmax = diag.maxCoeff();
        // Zero curvature directions get a floor so the damped matrix
        // stays positive definite.
        const double floor = dmax > 0.0 ? 1e-14 * dmax : 1.0;
        diag = diag.cwiseMax(floor);

        ++iterations;

        Eigen::MatrixXd damped = JtJ;
        damped.diagonal() += lambda * diag;
        Eigen::VectorXd delta;
        bool solved = false;
        for (int attempt = 0; attempt <= 20; ++attempt) {
            const Eigen::LDLT<Eigen::MatrixXd> ldlt(damped);
            if (ldlt.info() == Eigen::Success) {
                delta = ldlt.solve(-g);
                if (delta.allFinite()) {
                    solved = true;
                    break;
                }
            }
            lambda *= cfg.damping_increase;
            damped = JtJ;
            damped.diagonal() += lambda * diag;
        }
        if (!solved) {
            throw LinearAlgebraFailure("damped normal equations unsolvable after 20 escalations");
        }

        if (delta.norm() <= cfg.step_tol * (x.norm() + cfg.step_tol)) {
            return finish(StopReason::step);
        }

        const Eigen::VectorXd x_new = x + delta;
        const Eigen::VectorXd r_new = system.residuals(x_new);
        const double cost_new = r_new.squaredNorm();

        if (cost_new < cost) {
            const double reduction = cost - cost_new;
            x = x_new;
            r = r_new;
            cost = cost_new;
            J = system.jacobian(x);
            g = J.transpose() * r;
            out.cost_history.push_back(cost);
            lambda = std::max(lambda * cfg.damping_decrease, 1e-32);
            if (reduction <= cfg.cost_tol * cost) return finish(StopReason::cost);
        } else {
            lambda *= cfg.damping_increase;
        }
    }
    return finish(StopReason::max_iter);
}

}  // namespace cazac
