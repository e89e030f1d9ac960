// Command-line surface: family generators, randomized search, sidelobe
// statistics, ambiguity grids, orbit expansion, known-family filtering,
// and manifest replay. Exit codes: 0 success, 2 input/constraint error,
// 3 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cazac/correlate.hpp"
#include "cazac/equiv.hpp"
#include "cazac/families.hpp"
#include "cazac/search.hpp"
#include "cazac/seq.hpp"
#include "cazac/serialize.hpp"
#include "cazac/solver.hpp"

using json = nlohmann::ordered_json;
using namespace cazac;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kArtifactVersion = "1.0.0";

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

// ---------------------------------------------------------------------
// Manifests. Every command that writes files also writes
// <first-output>.manifest.json recording the resolved configuration and
// input/output digests. Wall time goes to stdout only, so manifests and
// outputs are byte-identical across reruns and worker counts.

json file_entry(const std::string& path) {
    return json{{"path", path}, {"fnv1a64", digest_file(path)}};
}

void write_manifest(const std::string& command, const json& config,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs) {
    json m;
    m["schema_version"] = kSchemaVersion;
    m["artifact"] = "cazac";
    m["artifact_version"] = kArtifactVersion;
    m["command"] = command;
    m["config"] = config;
    m["inputs"] = json::array();
    for (const auto& p : inputs) m["inputs"].push_back(file_entry(p));
    m["outputs"] = json::array();
    for (const auto& p : outputs) m["outputs"].push_back(file_entry(p));
    const std::string path = outputs.empty() ? command + ".manifest.json"
                                             : outputs.front() + ".manifest.json";
    write_text_file(path, m.dump(2) + "\n");
    std::printf("manifest: %s\n", path.c_str());
}

ComplexSeq read_single_sequence(const std::string& path) {
    const auto xs = read_sequence_file(path);
    if (xs.size() != 1)
        throw std::invalid_argument(path + ": expected exactly one sequence, found " +
                                    std::to_string(xs.size()));
    return xs.front();
}

// ---------------------------------------------------------------------
// generate

ComplexSeq make_family(const std::string& family, int n, long long k) {
    if (family == "bjorck") return bjorck(n).seq();
    QuadraticPhaseSpec spec;
    spec.n = n;
    spec.k = k;
    if (family == "zadoff-chu") spec.family = QuadraticFamily::ZadoffChu;
    else if (family == "p4") spec.family = QuadraticFamily::P4;
    else if (family == "wiener") spec.family = QuadraticFamily::Wiener;
    else
        throw std::invalid_argument("unknown family '" + family +
                                    "' (expected zadoff-chu, p4, wiener, or bjorck)");
    return quadratic_phase(spec).seq();
}

void run_generate(const json& cfg) {
    const std::string family = cfg.at("family");
    const int n = cfg.at("n");
    const long long k = cfg.at("k");
    const std::string out = cfg.at("out");

    const ComplexSeq x = make_family(family, n, k);
    const VerificationReport v = verify_cazac(x, 1e-12);
    const std::string verify_line =
        "verify: max_modulus_error=" + fmt("%.3e", v.max_modulus_error) +
        " max_offpeak=" + fmt("%.3e", v.max_offpeak) + " pass=" + (v.pass ? "yes" : "no") +
        " tol=1e-12";

    std::vector<std::string> comments{
        "family=" + family + " n=" + std::to_string(n) +
            (family == "wiener" ? " k=" + std::to_string(k) : std::string()),
        verify_line};
    write_sequence_file(out, {x}, comments);

    std::printf("%s\n", verify_line.c_str());
    std::printf("wrote %s\n", out.c_str());
    write_manifest("generate", cfg, {}, {out});
}

// ---------------------------------------------------------------------
// search

SolverConfig solver_from_json(const json& s) {
    SolverConfig cfg;
    cfg.gradient_tol = s.at("gradient_tol");
    cfg.step_tol = s.at("step_tol");
    cfg.cost_tol = s.at("cost_tol");
    cfg.max_iterations = s.at("max_iterations");
    cfg.initial_damping = s.at("initial_damping");
    cfg.damping_increase = s.at("damping_increase");
    cfg.damping_decrease = s.at("damping_decrease");
    cfg.acceptance_cost = s.at("acceptance_cost");
    return cfg;
}

json solver_to_json(const SolverConfig& cfg) {
    json s;
    s["gradient_tol"] = cfg.gradient_tol;
    s["step_tol"] = cfg.step_tol;
    s["cost_tol"] = cfg.cost_tol;
    s["max_iterations"] = cfg.max_iterations;
    s["initial_damping"] = cfg.initial_damping;
    s["damping_increase"] = cfg.damping_increase;
    s["damping_decrease"] = cfg.damping_decrease;
    s["acceptance_cost"] = cfg.acceptance_cost;
    return s;
}

json histogram_to_json(const std::map<int, long long>& h) {
    json out = json::object();
    for (const auto& [decade, count] : h) out[std::to_string(decade)] = count;
    return out;
}

void run_search_cmd(const json& cfg, int workers) {
    SearchPlan plan;
    plan.n = cfg.at("n");
    plan.trials = cfg.at("trials");
    plan.seed = cfg.at("seed");
    plan.solver = solver_from_json(cfg.at("solver"));
    plan.checkpoints = cfg.at("checkpoints").get<std::vector<long long>>();
    const std::string prefix = cfg.at("out_prefix");

    const SearchReport report = run_search(plan, workers);

    const std::string solutions_path = prefix + ".solutions";
    std::vector<ComplexSeq> reps;
    reps.reserve(report.unique.size());
    for (const auto& u : report.unique) reps.push_back(u.seq);
    write_sequence_file(solutions_path, reps,
                        {"canonical CAZAC solutions, one per line (a_0..a_{n-1} b_0..b_{n-1})",
                         "n=" + std::to_string(report.n) +
                             " trials=" + std::to_string(report.trials) +
                             " seed=" + std::to_string(report.seed),
                         "unique=" + std::to_string(report.unique.size())});

    json r;
    r["schema_version"] = kSchemaVersion;
    r["command"] = "search";
    r["n"] = report.n;
    r["trials"] = report.trials;
    r["seed"] = report.seed;
    r["solver"] = cfg.at("solver");
    r["unique_count"] = report.unique.size();
    r["converged"] = report.converged;
    r["non_converged"] = report.non_converged;
    r["max_accepted_cost"] = report.max_accepted_cost;
    r["min_accepted_cost"] = report.min_accepted_cost;
    r["growth_curve"] = json::array();
    for (const auto& [trials_seen, uniques] : report.growth_curve)
        r["growth_curve"].push_back(json::array({trials_seen, uniques}));
    r["near_miss_histogram"] = histogram_to_json(report.near_miss_histogram);
    r["stall_histogram"] = histogram_to_json(report.stall_histogram);
    r["unique"] = json::array();
    for (const auto& u : report.unique)
        r["unique"].push_back(json{{"first_seen_trial", u.first_seen_trial}, {"cost", u.cost}});
    try {
        const FinitenessVerdict v = finiteness_verdict(report);
        r["verdict"] = json{{"verdict", verdict_name(v.verdict)},
                            {"tail_trials", v.tail_trials},
                            {"new_in_tail", v.new_in_tail},
                            {"tail_rate", v.tail_rate},
                            {"unique_ratio", v.unique_ratio},
                            {"tail_fraction", v.config.tail_fraction},
                            {"unique_ratio_max", v.config.unique_ratio_max},
                            {"tail_rate_min", v.config.tail_rate_min}};
    } catch (const InsufficientData&) {
        r["verdict"] = json{{"verdict", "insufficient-data"}};
    }
    const std::string report_path = prefix + ".report.json";
    write_text_file(report_path, r.dump(2) + "\n");

    std::printf("n=%d trials=%lld seed=%llu\n", report.n, report.trials,
                static_cast<unsigned long long>(report.seed));
    std::printf("unique=%zu converged=%lld non_converged=%lld\n", report.unique.size(),
                report.converged, report.non_converged);
    std::printf("accepted cost range [%.3e, %.3e]\n", report.min_accepted_cost,
                report.max_accepted_cost);
    std::printf("verdict: %s\n", r["verdict"]["verdict"].get<std::string>().c_str());
    std::printf("elapsed: %.2fs\n", report.elapsed_seconds);
    std::printf("wrote %s\n", solutions_path.c_str());
    std::printf("wrote %s\n", report_path.c_str());
    write_manifest("search", cfg, {}, {solutions_path, report_path});
}

// ---------------------------------------------------------------------
// stats

struct FiveNumber {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

FiveNumber five_number(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto quantile = [&](double p) {
        const double h = p * static_cast<double>(v.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(h);
        const double frac = h - static_cast<double>(lo);
        return lo + 1 < v.size() ? v[lo] + frac * (v[lo + 1] - v[lo]) : v[lo];
    };
    return FiveNumber{v.front(), quantile(0.25), quantile(0.5), quantile(0.75), v.back()};
}

void run_stats(const json& cfg) {
    const auto inputs = cfg.at("inputs").get<std::vector<std::string>>();
    const bool references = cfg.at("references");
    const std::string out = cfg.at("out");

    std::string table = "file\tindex\tpsl\tisl\n";
    std::string summary = "file\tmetric\tmin\tq1\tmedian\tq3\tmax\n";
    std::vector<int> lengths;  // distinct n values, first-appearance order

    for (const std::string& path : inputs) {
        const auto xs = read_sequence_file(path);
        std::vector<double> psl, isl;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const SidelobeMetrics m = sidelobe_metrics(xs[i]);
            table += path + "\t" + std::to_string(i) + "\t" + fmt("%.9g", m.psl) + "\t" +
                     fmt("%.9g", m.isl) + "\n";
            psl.push_back(m.psl);
            isl.push_back(m.isl);
            if (std::find(lengths.begin(), lengths.end(), xs[i].size()) == lengths.end())
                lengths.push_back(xs[i].size());
        }
        if (xs.empty()) continue;
        const FiveNumber p = five_number(psl);
        const FiveNumber s = five_number(isl);
        summary += path + "\tpsl\t" + fmt("%.9g", p.min) + "\t" + fmt("%.9g", p.q1) + "\t" +
                   fmt("%.9g", p.median) + "\t" + fmt("%.9g", p.q3) + "\t" + fmt("%.9g", p.max) +
                   "\n";
        summary += path + "\tisl\t" + fmt("%.9g", s.min) + "\t" + fmt("%.9g", s.q1) + "\t" +
                   fmt("%.9g", s.median) + "\t" + fmt("%.9g", s.q3) + "\t" + fmt("%.9g", s.max) +
                   "\n";
    }

    std::string text = table + "\n" + summary;
    if (references) {
        std::string refs = "\nfamily\tn\tpsl\tisl\n";
        for (int n : lengths) {
            if (n % 2 == 1) {
                const SidelobeMetrics m =
                    sidelobe_metrics(quadratic_phase({QuadraticFamily::ZadoffChu, n, 0}).seq());
                refs += "zadoff-chu\t" + std::to_string(n) + "\t" + fmt("%.9g", m.psl) + "\t" +
                        fmt("%.9g", m.isl) + "\n";
            }
            if (is_odd_prime(n)) {
                const SidelobeMetrics m = sidelobe_metrics(bjorck(n).seq());
                refs += "bjorck\t" + std::to_string(n) + "\t" + fmt("%.9g", m.psl) + "\t" +
                        fmt("%.9g", m.isl) + "\n";
            }
        }
        text += refs;
    }

    if (out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        write_text_file(out, text);
        std::printf("wrote %s\n", out.c_str());
        write_manifest("stats", cfg, inputs, {out});
    }
}

// ---------------------------------------------------------------------
// ambiguity

void run_ambiguity(const json& cfg) {
    const std::string input = cfg.at("input");
    const std::string kind = cfg.at("kind");
    const std::string out = cfg.at("out");

    const ComplexSeq x = read_single_sequence(input);
    const AmbiguityGrid grid =
        kind == "periodic" ? periodic_ambiguity(x) : aperiodic_ambiguity(x);
    write_text_file(out, export_grid(grid));

    std::printf("max off-origin normalized magnitude: %.9g\n", max_offorigin_normalized(grid));
    std::printf("wrote %s\n", out.c_str());
    write_manifest("ambiguity", cfg, {input}, {out});
}

// ---------------------------------------------------------------------
// orbit

void run_orbit(const json& cfg) {
    const std::string input = cfg.at("input");
    const std::string out = cfg.at("out");

    const ComplexSeq x = read_single_sequence(input);
    const VerificationReport v = verify_cazac(x, 1e-8);
    if (!v.pass)
        throw std::invalid_argument(
            input + ": input is not CAZAC at tol 1e-8 (max_modulus_error=" +
            fmt("%.3e", v.max_modulus_error) + ", max_offpeak=" + fmt("%.3e", v.max_offpeak) +
            ")");

    const OrbitReport rep = orbit(x);
    write_sequence_file(out, rep.members,
                        {"orbit under translation/modulation/decimation/conjugation",
                         "base=" + input, "count=" + std::to_string(rep.count())});
    std::printf("orbit count: %zu\n", rep.count());
    std::printf("wrote %s\n", out.c_str());
    write_manifest("orbit", cfg, {input}, {out});
}

// ---------------------------------------------------------------------
// filter

void run_filter(const json& cfg) {
    const std::string input = cfg.at("input");
    const int n = cfg.at("n");
    const std::string known_out = cfg.at("known_out");
    const std::string fresh_out = cfg.at("fresh_out");

    const auto xs = read_sequence_file(input);
    for (const ComplexSeq& x : xs)
        if (x.size() != n)
            throw std::invalid_argument(input + ": record of length " +
                                        std::to_string(x.size()) + " does not match n=" +
                                        std::to_string(n));

    const KnownPartition part = filter_known(xs, n);

    {
        std::string body = "# known solutions (orbit label on the preceding comment line)\n";
        for (const LabeledSolution& s : part.known)
            body += "# " + s.label + "\n" + format_sequence(s.seq) + "\n";
        write_text_file(known_out, body);
    }
    write_sequence_file(fresh_out, part.fresh, {"solutions outside every known-family orbit"});

    std::printf("known=%zu fresh=%zu\n", part.known.size(), part.fresh.size());
    std::printf("wrote %s\n", known_out.c_str());
    std::printf("wrote %s\n", fresh_out.c_str());
    write_manifest("filter", cfg, {input}, {known_out, fresh_out});
}

// ---------------------------------------------------------------------
// replay

void run_from_config(const std::string& command, const json& cfg, int workers) {
    if (command == "generate") run_generate(cfg);
    else if (command == "search") run_search_cmd(cfg, workers);
    else if (command == "stats") run_stats(cfg);
    else if (command == "ambiguity") run_ambiguity(cfg);
    else if (command == "orbit") run_orbit(cfg);
    else if (command == "filter") run_filter(cfg);
    else
        throw std::invalid_argument("manifest names unknown command '" + command + "'");
}

int run_replay(const std::string& manifest_path, int workers) {
    json m;
    try {
        m = json::parse(read_text_file(manifest_path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(manifest_path + ": not valid JSON: " + e.what());
    }
    if (m.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported manifest schema_version");

    for (const auto& entry : m.at("inputs")) {
        const std::string path = entry.at("path");
        const std::string expect = entry.at("fnv1a64");
        const std::string got = digest_file(path);
        if (got != expect)
            throw std::invalid_argument("input " + path + " changed since the manifest (digest " +
                                        got + ", expected " + expect + ")");
    }

    run_from_config(m.at("command"), m.at("config"), workers);

    bool all_match = true;
    for (const auto& entry : m.at("outputs")) {
        const std::string path = entry.at("path");
        const std::string expect = entry.at("fnv1a64");
        const std::string got = digest_file(path);
        const bool match = got == expect;
        all_match = all_match && match;
        std::printf("%s %s\n", match ? "identical:" : "MISMATCH: ", path.c_str());
    }
    return all_match ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CAZAC sequence discovery and analysis"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a known-family sequence and verify it");
    std::string gen_family;
    int gen_n = 0;
    long long gen_k = 1;
    std::string gen_out;
    gen->add_option("family", gen_family, "zadoff-chu | p4 | wiener | bjorck")->required();
    gen->add_option("n", gen_n, "sequence length")->required();
    gen->add_option("--k", gen_k, "Wiener parameter (default 1)");
    gen->add_option("-o,--out", gen_out, "output file (default <family>-n<n>.seq)");

    // search
    auto* se = app.add_subcommand("search", "randomized solver trials with dedupe");
    int se_n = 0;
    long long se_trials = 10000;
    std::uint64_t se_seed = 0;
    int se_workers = 0;
    std::string se_prefix;
    std::vector<long long> se_checkpoints;
    SolverConfig se_solver;
    se->add_option("n", se_n, "sequence length")->required();
    se->add_option("--trials", se_trials, "number of random starts");
    se->add_option("--seed", se_seed, "master RNG seed (required for reproducibility)")
        ->required();
    se->add_option("--workers", se_workers, "worker threads (default: OpenMP)");
    se->add_option("--out", se_prefix, "output prefix (default search-n<n>-seed<seed>)");
    se->add_option("--checkpoint", se_checkpoints, "growth-curve checkpoint (repeatable)");
    se->add_option("--gradient-tol", se_solver.gradient_tol, "gradient infinity-norm tolerance");
    se->add_option("--step-tol", se_solver.step_tol, "relative step tolerance");
    se->add_option("--cost-tol", se_solver.cost_tol, "relative cost-reduction tolerance");
    se->add_option("--max-iterations", se_solver.max_iterations, "iteration cap per trial");
    se->add_option("--acceptance-cost", se_solver.acceptance_cost,
                   "objective level counted as converged");

    // stats
    auto* st = app.add_subcommand("stats", "PSL/ISL table with five-number summaries");
    std::vector<std::string> st_inputs;
    bool st_refs = false;
    std::string st_out;
    st->add_option("files", st_inputs, "solution files")->required();
    st->add_flag("--references", st_refs, "append Zadoff-Chu and Bjorck reference rows");
    st->add_option("-o,--out", st_out, "write the table here instead of stdout");

    // ambiguity
    auto* am = app.add_subcommand("ambiguity", "export a normalized ambiguity magnitude grid");
    std::string am_input, am_kind = "periodic", am_out;
    am->add_option("file", am_input, "single-sequence input file")->required();
    am->add_option("--kind", am_kind, "periodic | aperiodic")
        ->check(CLI::IsMember({"periodic", "aperiodic"}));
    am->add_option("-o,--out", am_out, "output grid file (default <input>.<kind>.grid)");

    // orbit
    auto* ob = app.add_subcommand("orbit", "expand the equivalence-transform orbit");
    std::string ob_input, ob_out;
    ob->add_option("file", ob_input, "single-sequence input file (must verify as CAZAC)")
        ->required();
    ob->add_option("-o,--out", ob_out, "output file (default <input>.orbit)");

    // filter
    auto* fi = app.add_subcommand("filter", "partition solutions into known-family and fresh");
    std::string fi_input, fi_known, fi_fresh;
    int fi_n = 0;
    fi->add_option("file", fi_input, "solutions file")->required();
    fi->add_option("--n", fi_n, "sequence length")->required();
    fi->add_option("--known", fi_known, "output for known solutions (default <input>.known)");
    fi->add_option("--fresh", fi_fresh, "output for fresh solutions (default <input>.fresh)");

    // replay
    auto* re = app.add_subcommand("replay", "re-run a manifest and compare output digests");
    std::string re_manifest;
    int re_workers = 0;
    re->add_option("manifest", re_manifest, "manifest JSON written by a previous run")
        ->required();
    re->add_option("--workers", re_workers, "worker threads (default: OpenMP)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            if (gen_out.empty())
                gen_out = gen_family + "-n" + std::to_string(gen_n) +
                          (gen_family == "wiener" ? "-k" + std::to_string(gen_k) : "") + ".seq";
            run_generate(json{{"family", gen_family}, {"n", gen_n}, {"k", gen_k},
                              {"out", gen_out}});
        } else if (se->parsed()) {
            if (se_prefix.empty())
                se_prefix = "search-n" + std::to_string(se_n) + "-seed" + std::to_string(se_seed);
            SearchPlan plan;  // resolve the checkpoint defaults once, here
            plan.n = se_n;
            plan.trials = se_trials;
            plan.seed = se_seed;
            plan.solver = se_solver;
            plan.checkpoints = se_checkpoints;
            plan.validate();
            json cfg;
            cfg["n"] = se_n;
            cfg["trials"] = se_trials;
            cfg["seed"] = se_seed;
            cfg["solver"] = solver_to_json(se_solver);
            cfg["checkpoints"] = plan.effective_checkpoints();
            cfg["out_prefix"] = se_prefix;
            run_search_cmd(cfg, se_workers);
        } else if (st->parsed()) {
            run_stats(json{{"inputs", st_inputs}, {"references", st_refs}, {"out", st_out}});
        } else if (am->parsed()) {
            if (am_out.empty()) am_out = am_input + "." + am_kind + ".grid";
            run_ambiguity(json{{"input", am_input}, {"kind", am_kind}, {"out", am_out}});
        } else if (ob->parsed()) {
            if (ob_out.empty()) ob_out = ob_input + ".orbit";
            run_orbit(json{{"input", ob_input}, {"out", ob_out}});
        } else if (fi->parsed()) {
            if (fi_known.empty()) fi_known = fi_input + ".known";
            if (fi_fresh.empty()) fi_fresh = fi_input + ".fresh";
            run_filter(json{{"input", fi_input}, {"n", fi_n}, {"known_out", fi_known},
                            {"fresh_out", fi_fresh}});
        } else if (re->parsed()) {
            return run_replay(re_manifest, re_workers);
        }
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
