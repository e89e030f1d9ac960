#pragma once

#include <stdexcept>
#include <vector>

#include "cazac/residual.hpp"
#include "cazac/seq.hpp"

namespace cazac {

struct LinearAlgebraFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverConfig {
    double gradient_tol = 1e-12;  // absolute infinity-norm test on J^T r
    double step_tol = 1e-12;      // relative step test
    double cost_tol = 1e-12;      // relative cost-reduction test; cost_tol^2 is the zero floor
    int max_iterations = 2000;
    double initial_damping = 1e-3;
    double damping_increase = 10.0;
    double damping_decrease = 0.1;
    double acceptance_cost = 1e-10;  // outcomes below this count as converged

    void validate() const;
};

enum class StopReason { gradient, step, cost, max_iter };

std::string stop_reason_name(StopReason r);

struct SolveOutcome {
    RealEmbedding point;
    double cost = 0.0;
    int iterations = 0;
    StopReason reason = StopReason::max_iter;
    bool converged = false;            // cost < cfg.acceptance_cost
    std::vector<double> cost_history;  // cost after the start and each accepted step
};

/// Damped least-squares minimization of the residual system: repeatedly
/// solves (J^T J + lambda diag(J^T J)) d = -J^T r, accepting only
/// cost-decreasing steps and adapting lambda by the configured factors.
/// Every solve attempt counts toward max_iterations. Deterministic for
/// fixed inputs. Throws LinearAlgebraFailure if the damped normal
/// equations stay numerically unsolvable through 20 escalations.
SolveOutcome minimize(const ResidualSystem& system, const RealEmbedding& start,
                      const SolverConfig& cfg = {});

}  // namespace cazac
