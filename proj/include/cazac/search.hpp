#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cazac/seq.hpp"
#include "cazac/solver.hpp"

namespace cazac {

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Counter-based per-trial random stream: a splitmix64 sequence whose
/// starting state is derived from (seed, trial), so trial i draws the
/// same values no matter which worker runs it or in what order.
class TrialRng {
  public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next_u64();
    /// Uniform in [-1, 1), 53-bit resolution, identical on every platform.
    double next_symmetric();

  private:
    std::uint64_t state_;
};

struct SearchPlan {
    int n = 2;
    long long trials = 1;
    std::uint64_t seed = 0;
    SolverConfig solver;
    std::vector<long long> checkpoints;  // ascending, each <= trials; filled evenly if empty

    void validate() const;
    std::vector<long long> effective_checkpoints() const;
};

struct UniqueSolution {
    ComplexSeq seq;  // canonical representative (first entry 1)
    CanonicalKey key;
    double cost;                 // lowest final objective over all trials hitting this key
    long long first_seen_trial;  // 0-based index of the first such trial
};

struct SearchReport {
    int n = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    std::vector<UniqueSolution> unique;  // sorted by key
    long long converged = 0;
    long long non_converged = 0;
    double max_accepted_cost = 0.0;
    double min_accepted_cost = 0.0;
    std::vector<std::pair<long long, long long>> growth_curve;  // (trials seen, unique count)
    std::map<int, long long> near_miss_histogram;  // decade floor(log10 cost) -> count
    std::map<int, long long> stall_histogram;      // same, for non-converged final costs
    double elapsed_seconds = 0.0;
};

/// Runs plan.trials independent solver trials, each started from a
/// uniform draw in [-1,1]^{2n} on its own random stream, and dedupes the
/// accepted solutions by canonical key. The report content is identical
/// for identical plans at any worker count. workers <= 0 uses the
/// OpenMP default.
SearchReport run_search(const SearchPlan& plan, int workers = 0);

enum class Verdict { likely_finite, likely_infinite, inconclusive };

std::string verdict_name(Verdict v);

struct VerdictConfig {
    double tail_fraction = 0.25;   // portion of trials treated as the tail
    double unique_ratio_max = 0.5; // likely-finite requires unique/trials below this
    // likely-infinite requires new keys per tail trial above this. Finite
    // problems measure exactly 0 here once saturated, while length-9 (a
    // continuum case) sustains ~0.27 at 5000 trials, so 0.1 separates the
    // regimes with margin on both sides.
    double tail_rate_min = 0.1;
};

struct FinitenessVerdict {
    Verdict verdict = Verdict::inconclusive;
    long long tail_trials = 0;
    long long new_in_tail = 0;
    double tail_rate = 0.0;
    double unique_ratio = 0.0;
    VerdictConfig config;
};

/// Plateau heuristic: a run whose tail added no new keys and whose
/// unique/trials ratio is small points to a finite solution set; a tail
/// still producing new keys at a high rate points to a continuum.
/// Throws InsufficientData below 100 trials.
FinitenessVerdict finiteness_verdict(const SearchReport& report, const VerdictConfig& cfg = {});

struct LabeledSolution {
    ComplexSeq seq;
    std::string label;  // comma-joined names of the matching base orbits
};

struct KnownPartition {
    std::vector<LabeledSolution> known;
    std::vector<ComplexSeq> fresh;
};

/// Splits solutions into those lying in the orbit of a known base
/// sequence of length n — the Legendre-phase base when n is an odd
/// prime, plus every valid Wiener base — and the rest. Exhaustive and
/// disjoint; Zadoff-Chu and P4 are modulated Wiener translates, so the
/// Wiener orbits already cover them.
KnownPartition filter_known(const std::vector<ComplexSeq>& solutions, int n);

}  // namespace cazac
