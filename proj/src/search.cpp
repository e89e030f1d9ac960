#include "cazac/search.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "cazac/equiv.hpp"
#include "cazac/families.hpp"
#include "cazac/residual.hpp"

namespace cazac {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
    // Decorrelate the per-trial streams by running the trial counter
    // through the same mixer before combining with the seed.
    std::uint64_t t = trial + 1;
    state_ = seed ^ splitmix64(t);
}

std::uint64_t TrialRng::next_u64() { return splitmix64(state_); }

double TrialRng::next_symmetric() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;  // [0,1)
    return 2.0 * u - 1.0;
}

void SearchPlan::validate() const {
    if (n < 2) throw std::invalid_argument("search requires length n >= 2");
    if (trials < 1) throw std::invalid_argument("search requires at least one trial");
    solver.validate();
    long long prev = 0;
    for (long long c : checkpoints) {
        if (c <= prev || c > trials)
            throw std::invalid_argument("checkpoints must be strictly increasing and <= trials");
        prev = c;
    }
}

std::vector<long long> SearchPlan::effective_checkpoints() const {
    if (!checkpoints.empty()) return checkpoints;
    const long long k = std::min<long long>(20, trials);
    std::vector<long long> out;
    for (long long i = 1; i <= k; ++i) {
        long long c = (trials * i) / k;
        if (out.empty() || c > out.back()) out.push_back(c);
    }
    return out;
}

namespace {

struct TrialSlot {
    double cost = std::numeric_limits<double>::infinity();
    bool accepted = false;
    std::vector<double> flat;  // 2n coordinates, filled only when accepted
};

// Projects each entry onto the unit circle. A converged point typically
// sits at (root + s * rotation-tangent): the cost there is ~s^4 with
// gradient ~s^3, so the solver's gradient test fires long before s
// shrinks, leaving coordinates ~1e-11 off. Normalizing turns the
// tangent offset into an exact rotation ((1+iu)/sqrt(1+u^2) = e^{i atan u}),
// which canonicalization removes for free.
void unit_project(RealEmbedding& v) {
    for (std::size_t j = 0; j < v.a.size(); ++j) {
        const double mag = std::hypot(v.a[j], v.b[j]);
        if (mag > 1e-6) {
            v.a[j] /= mag;
            v.b[j] /= mag;
        }
    }
}

int cost_decade(double cost) {
    if (!std::isfinite(cost)) return 308;
    if (cost <= 0.0) return -308;
    return static_cast<int>(std::floor(std::log10(cost)));
}

}  // namespace

SearchReport run_search(const SearchPlan& plan, int workers) {
    plan.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const int n = plan.n;
    const ResidualSystem system(n);
    std::vector<TrialSlot> slots(static_cast<std::size_t>(plan.trials));

    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
    for (long long t = 0; t < plan.trials; ++t) {
        TrialRng rng(plan.seed, static_cast<std::uint64_t>(t));
        RealEmbedding start;
        start.a.resize(static_cast<std::size_t>(n));
        start.b.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) start.a[static_cast<std::size_t>(j)] = rng.next_symmetric();
        for (int j = 0; j < n; ++j) start.b[static_cast<std::size_t>(j)] = rng.next_symmetric();

        TrialSlot& slot = slots[static_cast<std::size_t>(t)];
        try {
            SolveOutcome out = minimize(system, start, plan.solver);
            if (out.converged) {
                // Retract-polish-retract drives the accepted point to the
                // ~1e-31 machine floor. Without it, coordinates are only
                // ~1e-11 accurate, and a root whose coordinate sits near a
                // half-point of the 1e-8 dedupe grid can land on either
                // side from different trials and split into two keys.
                unit_project(out.point);
                SolverConfig polish_cfg = plan.solver;
                polish_cfg.initial_damping = 1e-12;
                polish_cfg.max_iterations = 20;
                SolveOutcome polished = minimize(system, out.point, polish_cfg);
                unit_project(polished.point);
                polished.cost = system.objective(polished.point);
                if (polished.cost < out.cost) out = std::move(polished);
            }
            slot.cost = out.cost;
            if (out.converged) {
                slot.accepted = true;
                slot.flat.reserve(static_cast<std::size_t>(2 * n));
                slot.flat.insert(slot.flat.end(), out.point.a.begin(), out.point.a.end());
                slot.flat.insert(slot.flat.end(), out.point.b.begin(), out.point.b.end());
            }
        } catch (const LinearAlgebraFailure&) {
            // Counted as a failed trial; the merge below buckets it by cost.
        }
    }

    // Sequential merge in trial order makes the report independent of the
    // worker count and of OpenMP scheduling.
    SearchReport report;
    report.n = n;
    report.trials = plan.trials;
    report.seed = plan.seed;
    report.max_accepted_cost = 0.0;
    report.min_accepted_cost = std::numeric_limits<double>::infinity();

    const auto checkpoints = plan.effective_checkpoints();
    std::size_t next_checkpoint = 0;
    std::map<CanonicalKey, std::size_t> seen;  // key -> index into report.unique

    for (long long t = 0; t < plan.trials; ++t) {
        TrialSlot& slot = slots[static_cast<std::size_t>(t)];
        bool kept = false;
        if (slot.accepted) {
            RealEmbedding point;
            point.a.assign(slot.flat.begin(), slot.flat.begin() + n);
            point.b.assign(slot.flat.begin() + n, slot.flat.end());
            const ComplexSeq raw = lift(point);
            // A converged cost can still hide a degenerate point (e.g. a
            // near-zero leading entry); re-verify before keeping it.
            if (std::abs(raw[0]) >= 1e-12) {
                const ComplexSeq rep = canonicalize(raw);
                if (verify_cazac(rep, 1e-8).pass) {
                    kept = true;
                    report.converged += 1;
                    report.max_accepted_cost = std::max(report.max_accepted_cost, slot.cost);
                    report.min_accepted_cost = std::min(report.min_accepted_cost, slot.cost);
                    const CanonicalKey key = key_of(rep);
                    const auto it = seen.find(key);
                    if (it == seen.end()) {
                        seen.emplace(key, report.unique.size());
                        report.unique.push_back(UniqueSolution{rep, key, slot.cost, t});
                    } else {
                        // Keep the lowest-cost representative (strict <,
                        // trial order: worker-count independent); first
                        // sighting stays for the growth curve.
                        UniqueSolution& u = report.unique[it->second];
                        if (slot.cost < u.cost) {
                            u.seq = rep;
                            u.cost = slot.cost;
                        }
                    }
                }
            }
        }
        if (!kept) {
            report.non_converged += 1;
            const int decade = cost_decade(slot.cost);
            report.stall_histogram[decade] += 1;
            // Close calls just above the acceptance line are logged but
            // never stored as solutions.
            if (!slot.accepted && slot.cost < 1e-8) report.near_miss_histogram[decade] += 1;
        }
        while (next_checkpoint < checkpoints.size() && t + 1 == checkpoints[next_checkpoint]) {
            report.growth_curve.emplace_back(t + 1, static_cast<long long>(report.unique.size()));
            ++next_checkpoint;
        }
    }
    if (report.converged == 0) report.min_accepted_cost = 0.0;

    std::sort(report.unique.begin(), report.unique.end(),
              [](const UniqueSolution& lhs, const UniqueSolution& rhs) { return lhs.key < rhs.key; });

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::likely_finite: return "likely-finite";
        case Verdict::likely_infinite: return "likely-infinite";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

FinitenessVerdict finiteness_verdict(const SearchReport& report, const VerdictConfig& cfg) {
    if (report.trials < 100)
        throw InsufficientData("finiteness verdict needs at least 100 trials, got " +
                               std::to_string(report.trials));
    if (report.growth_curve.size() < 2)
        throw InsufficientData("finiteness verdict needs at least 2 growth-curve checkpoints");

    FinitenessVerdict v;
    v.config = cfg;
    v.tail_trials = static_cast<long long>(std::floor(cfg.tail_fraction * static_cast<double>(report.trials)));
    if (v.tail_trials < 1) v.tail_trials = 1;
    const long long tail_start = report.trials - v.tail_trials;

    for (const UniqueSolution& u : report.unique)
        if (u.first_seen_trial >= tail_start) v.new_in_tail += 1;

    v.tail_rate = static_cast<double>(v.new_in_tail) / static_cast<double>(v.tail_trials);
    v.unique_ratio =
        static_cast<double>(report.unique.size()) / static_cast<double>(report.trials);

    if (v.new_in_tail == 0 && v.unique_ratio < cfg.unique_ratio_max)
        v.verdict = Verdict::likely_finite;
    else if (v.tail_rate > cfg.tail_rate_min)
        v.verdict = Verdict::likely_infinite;
    else
        v.verdict = Verdict::inconclusive;
    return v;
}

namespace {

// The known set is the union of the Björck orbit (odd prime n) and the
// orbits of every valid Wiener base. Zadoff-Chu and P4 need no separate
// entry: both are modulated translates of Wiener sequences.
std::vector<std::pair<std::string, ComplexSeq>> known_bases(int n) {
    std::vector<std::pair<std::string, ComplexSeq>> bases;
    if (is_odd_prime(n)) bases.emplace_back("bjorck", bjorck(n).seq());
    const long long modulus = (n % 2 == 1) ? n : 2LL * n;
    for (long long k = 1; k < modulus; ++k) {
        if (std::gcd(k, modulus) != 1) continue;
        bases.emplace_back("wiener-k" + std::to_string(k),
                           quadratic_phase({QuadraticFamily::Wiener, n, k}).seq());
    }
    return bases;
}

}  // namespace

KnownPartition filter_known(const std::vector<ComplexSeq>& solutions, int n) {
    if (n < 2) throw std::invalid_argument("filter_known requires n >= 2");
    std::map<CanonicalKey, std::vector<std::string>> membership;
    for (const auto& [name, base] : known_bases(n)) {
        for (const CanonicalKey& key : orbit(base).keys) {
            auto& labels = membership[key];
            if (std::find(labels.begin(), labels.end(), name) == labels.end())
                labels.push_back(name);
        }
    }

    KnownPartition out;
    for (const ComplexSeq& x : solutions) {
        const auto it = membership.find(key_of(x));
        if (it == membership.end()) {
            out.fresh.push_back(x);
        } else {
            std::string label;
            for (const std::string& name : it->second) {
                if (!label.empty()) label += ",";
                label += name;
            }
            out.known.push_back(LabeledSolution{x, label});
        }
    }
    return out;
}

}  // namespace cazac
