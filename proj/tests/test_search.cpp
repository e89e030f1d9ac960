#include <set>
#include <string>
#include <vector>

#include "cazac/equiv.hpp"
#include "cazac/families.hpp"
#include "cazac/search.hpp"
#include "doctest.h"

using namespace cazac;

TEST_CASE("per-trial random streams are reproducible and decorrelated") {
    TrialRng a(17, 400);
    TrialRng b(17, 400);
    for (int i = 0; i < 5; ++i) CHECK(a.next_u64() == b.next_u64());

    TrialRng c(17, 401);
    TrialRng d(18, 400);
    std::set<std::uint64_t> first = {TrialRng(17, 400).next_u64(), c.next_u64(), d.next_u64()};
    CHECK(first.size() == 3);

    TrialRng e(9, 0);
    for (int i = 0; i < 1000; ++i) {
        const double u = e.next_symmetric();
        CHECK(u >= -1.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("plan validation and default checkpoints") {
    SearchPlan p;
    p.n = 1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.n = 4;
    p.trials = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.trials = 10;
    p.checkpoints = {5, 5};
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.checkpoints = {5, 20};
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.checkpoints = {5, 10};
    CHECK_NOTHROW(p.validate());

    p.checkpoints.clear();
    p.trials = 1000;
    const auto cps = p.effective_checkpoints();
    REQUIRE(cps.size() == 20);
    CHECK(cps.front() == 50);
    CHECK(cps.back() == 1000);
    for (std::size_t i = 1; i < cps.size(); ++i) CHECK(cps[i] > cps[i - 1]);

    p.trials = 3;  // fewer trials than the default checkpoint count
    const auto small = p.effective_checkpoints();
    REQUIRE(small.size() == 3);
    CHECK(small.back() == 3);
}

TEST_CASE("length-3 search saturates the six-solution set") {
    SearchPlan p;
    p.n = 3;
    p.trials = 300;
    p.seed = 1;
    const SearchReport r = run_search(p, 1);

    CHECK(r.unique.size() == 6);
    CHECK(r.converged == 300);
    CHECK(r.non_converged == 0);
    CHECK(r.max_accepted_cost < 1e-10);

    for (const UniqueSolution& u : r.unique) {
        CHECK(u.seq[0] == Complex(1, 0));
        CHECK(verify_cazac(u.seq, 1e-8).pass);
        CHECK(u.key == key_of(u.seq));
        CHECK(u.first_seen_trial >= 0);
        CHECK(u.first_seen_trial < 300);
    }
    for (std::size_t i = 1; i < r.unique.size(); ++i)
        CHECK(r.unique[i - 1].key < r.unique[i].key);

    // growth curve: nondecreasing, ends at the full tally
    REQUIRE(!r.growth_curve.empty());
    CHECK(r.growth_curve.back() == std::pair<long long, long long>(300, 6));
    for (std::size_t i = 1; i < r.growth_curve.size(); ++i) {
        CHECK(r.growth_curve[i].first > r.growth_curve[i - 1].first);
        CHECK(r.growth_curve[i].second >= r.growth_curve[i - 1].second);
    }

    const FinitenessVerdict v = finiteness_verdict(r);
    CHECK(v.verdict == Verdict::likely_finite);
    CHECK(v.new_in_tail == 0);
    CHECK(v.unique_ratio == doctest::Approx(6.0 / 300.0));
}

TEST_CASE("length-4 search keeps producing new solutions") {
    SearchPlan p;
    p.n = 4;
    p.trials = 1000;
    p.seed = 1;
    const SearchReport r = run_search(p, 0);
    CHECK(r.unique.size() > 900);  // continuum: nearly every trial is new
    const FinitenessVerdict v = finiteness_verdict(r);
    CHECK(v.verdict == Verdict::likely_infinite);
    CHECK(v.tail_rate > 0.5);
}

TEST_CASE("report content is independent of the worker count") {
    SearchPlan p;
    p.n = 5;
    p.trials = 400;
    p.seed = 3;
    const SearchReport a = run_search(p, 1);
    const SearchReport b = run_search(p, 4);

    REQUIRE(a.unique.size() == b.unique.size());
    for (std::size_t i = 0; i < a.unique.size(); ++i) {
        CHECK(a.unique[i].key == b.unique[i].key);
        CHECK(a.unique[i].cost == b.unique[i].cost);
        CHECK(a.unique[i].first_seen_trial == b.unique[i].first_seen_trial);
        CHECK(a.unique[i].seq == b.unique[i].seq);
    }
    CHECK(a.converged == b.converged);
    CHECK(a.non_converged == b.non_converged);
    CHECK(a.max_accepted_cost == b.max_accepted_cost);
    CHECK(a.min_accepted_cost == b.min_accepted_cost);
    CHECK(a.growth_curve == b.growth_curve);
    CHECK(a.near_miss_histogram == b.near_miss_histogram);
    CHECK(a.stall_histogram == b.stall_histogram);
}

TEST_CASE("verdict needs enough trials and checkpoints") {
    SearchPlan p;
    p.n = 4;
    p.trials = 50;
    p.seed = 1;
    CHECK_THROWS_AS(finiteness_verdict(run_search(p, 1)), InsufficientData);

    p.trials = 150;
    p.checkpoints = {150};  // a single point cannot show a plateau
    CHECK_THROWS_AS(finiteness_verdict(run_search(p, 1)), InsufficientData);
}

TEST_CASE("verdict names") {
    CHECK(verdict_name(Verdict::likely_finite) == "likely-finite");
    CHECK(verdict_name(Verdict::likely_infinite) == "likely-infinite");
    CHECK(verdict_name(Verdict::inconclusive) == "inconclusive");
}

TEST_CASE("known-orbit filter covers the named families") {
    // every member of the length-7 Legendre-phase orbit is recognized
    const OrbitReport orb = orbit(bjorck(7).seq());
    const KnownPartition part = filter_known(orb.members, 7);
    CHECK(part.known.size() == orb.count());
    CHECK(part.fresh.empty());
    for (const LabeledSolution& s : part.known)
        CHECK(s.label.find("bjorck") != std::string::npos);

    // quadratic-phase sequences land in the quadratic-base orbits
    const ComplexSeq zc = quadratic_phase({QuadraticFamily::ZadoffChu, 7, 0}).seq();
    const KnownPartition part2 = filter_known({zc}, 7);
    REQUIRE(part2.known.size() == 1);
    CHECK(part2.known[0].label.find("wiener") != std::string::npos);

    const ComplexSeq p4 = quadratic_phase({QuadraticFamily::P4, 6, 0}).seq();
    const KnownPartition part3 = filter_known({p4}, 6);
    REQUIRE(part3.known.size() == 1);
    CHECK(part3.known[0].label.find("wiener") != std::string::npos);

    // a sequence in no known orbit stays fresh
    const ComplexSeq ones({{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}});
    const KnownPartition part4 = filter_known({ones}, 7);
    CHECK(part4.known.empty());
    REQUIRE(part4.fresh.size() == 1);
}
