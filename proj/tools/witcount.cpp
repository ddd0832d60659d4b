// witcount: exact witness counting over F_2^d from the command line.
//
// Exit codes: 0 success, 1 correctness failure (oracle mismatch or an
// internal exactness error), 2 usage or I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "witcount/bench.hpp"
#include "witcount/candidates.hpp"
#include "witcount/errors.hpp"
#include "witcount/hypergraph.hpp"
#include "witcount/oracle_check.hpp"
#include "witcount/report.hpp"
#include "witcount/witness_counter.hpp"

using namespace witcount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonFlags {
    bool plain = false;
    bool dedupe = false;
    int max_d = kDefaultMaxDimension;
    unsigned threads = 1;
};

ParseOptions parse_options(const CommonFlags& f) { return ParseOptions{f.dedupe, f.max_d}; }

int cmd_count(const std::string& path, const CommonFlags& f, bool cumulative) {
    const auto total_start = Clock::now();
    auto start = Clock::now();
    const Instance inst = parse_instance(read_file(path), parse_options(f));
    const double parse_ms = ms_since(start);

    PhaseTimes phases;
    const OpCounter ops;
    RunReport report;
    report.profile = count_witnesses(inst, ExecOptions{f.threads}, &phases);
    report.command = "count";
    report.d = inst.d;
    report.m = inst.m();
    report.k = inst.k;
    report.target = to_bitstring(inst.target, inst.d);
    report.cumulative = cumulative;
    report.op_count = ops.count();
    report.timing_ms = {{"parse", parse_ms},
                        {"candidates", phases.candidates_ms},
                        {"parity_tables", phases.parity_ms},
                        {"recurrence", phases.recurrence_ms},
                        {"total", ms_since(total_start)}};
    std::cout << (f.plain ? to_plain(report) : to_json(report).dump(2) + "\n");
    return kExitOk;
}

int cmd_candidates(const std::string& path, const CommonFlags& f, bool full_check) {
    const auto total_start = Clock::now();
    const Instance inst = parse_instance(read_file(path), parse_options(f));
    const OpCounter ops;
    const auto chi = build_char_table(inst);
    const auto cand = count_candidates_profile(chi, inst.target, inst.k, ExecOptions{f.threads});
    RunReport report;
    report.command = "candidates";
    report.op_count = ops.count();
    if (full_check) {
        const auto rows = candidate_tables_full(chi, inst.k, ExecOptions{f.threads});
        for (int i = 0; i <= inst.k; ++i) {
            if (rows[static_cast<std::size_t>(i)][inst.target.index] != cand.counts[static_cast<std::size_t>(i)]) {
                std::cerr << "error: point evaluation disagrees with the full inverse transform at i=" << i << "\n";
                return kExitMismatch;
            }
        }
    }
    report.d = inst.d;
    report.m = inst.m();
    report.k = inst.k;
    report.target = to_bitstring(inst.target, inst.d);
    report.profile.cand = cand.counts;
    report.timing_ms = {{"total", ms_since(total_start)}};
    std::cout << (f.plain ? to_plain(report) : to_json(report).dump(2) + "\n");
    return kExitOk;
}

int cmd_matchings(const std::string& path, const CommonFlags& f) {
    const auto start = Clock::now();
    const Hypergraph g = parse_hypergraph(read_file(path));
    MatchingReport report;
    report.n = g.n;
    report.l = g.l;
    report.edges = g.edges.size();
    const auto reduction = reduce_to_witness_instance(g);
    const OpCounter ops;
    if (const auto* none = std::get_if<NoInstance>(&reduction)) {
        report.count = 0;
        report.reason = none->reason;
    } else {
        report.reduced = std::get<Instance>(reduction);
        report.count = count_perfect_matchings(g, f.max_d, ExecOptions{f.threads});
    }
    report.op_count = ops.count();
    report.timing_ms = {{"total", ms_since(start)}};
    std::cout << (f.plain ? to_plain(report) : to_json(report).dump(2) + "\n");
    return kExitOk;
}

RandomCheckConfig parse_random_args(const std::vector<std::string>& args, RandomCheckConfig cfg) {
    for (const auto& arg : args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("expected key=value, got '" + arg + "'");
        const auto key = arg.substr(0, eq);
        const auto value = std::stoull(arg.substr(eq + 1));
        if (key == "seed") cfg.seed = value;
        else if (key == "count") cfg.count = value;
        else if (key == "dmax") cfg.d_max = static_cast<int>(value);
        else if (key == "kmax") cfg.k_max = static_cast<int>(value);
        else throw CLI::ValidationError("unknown random-mode key '" + key + "'");
    }
    return cfg;
}

int report_check(const CheckResult& r) {
    if (r.ok) {
        std::cout << "PASS: " << r.message << " (" << r.oracle_runs << " oracle runs)\n";
        return kExitOk;
    }
    std::cout << "FAIL: " << r.message;
    if (!r.message.empty() && r.message.back() != '\n') std::cout << "\n";
    return kExitMismatch;
}

int cmd_selftest() {
    struct Case {
        const char* text;
        std::vector<long> wit;
    };
    const Case cases[] = {
        {"d=2 k=3\nt=00\n01,10,11\n", {1, 0, 0, 6}},
        {"d=2 k=3\nt=01\n01,10,11\n", {0, 1, 2, 0}},
        {"d=1 k=2\nt=0\n0,1\n", {1, 1, 0}},
    };
    bool ok = true;
    for (const auto& c : cases) {
        const auto inst = parse_instance(c.text);
        const auto profile = count_witnesses(inst);
        std::vector<Integer> expected(c.wit.begin(), c.wit.end());
        const bool pass = profile.wit == expected;
        ok = ok && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " micro-instance t=" << to_bitstring(inst.target, inst.d)
                  << " d=" << inst.d << " k=" << inst.k << "\n";
    }
    const auto random = check_random(RandomCheckConfig{7, 25, 5, 4});
    std::cout << (random.ok ? "PASS" : "FAIL") << " random oracle check: " << random.message << "\n";
    ok = ok && random.ok;
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact witness counting over F_2^d"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string path;
    bool cumulative = false, full_check = false, random_mode = false;
    std::vector<std::string> check_args;
    std::uint64_t seed = 42;
    BenchConfig bench;
    std::uint64_t bench_m = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--plain", flags.plain, "Plain text instead of JSON");
        sub->add_flag("--dedupe", flags.dedupe, "Drop duplicate vectors instead of rejecting them");
        sub->add_option("--max-d", flags.max_d, "Dimension cap")->check(CLI::Range(0, kHardMaxDimension));
        sub->add_option("--threads", flags.threads, "Worker threads for the transform stage")->check(CLI::Range(1, 256));
    };

    auto* count = app.add_subcommand("count", "Witness profile for every k' <= k");
    count->add_option("file", path, "Instance file")->required();
    count->add_flag("--cumulative", cumulative, "Also report witnesses with at most k' vectors");
    add_common(count);

    auto* candidates = app.add_subcommand("candidates", "Candidate counts only");
    candidates->add_option("file", path, "Instance file")->required();
    candidates->add_flag("--full-check", full_check, "Cross-check against full inverse transforms");
    add_common(candidates);

    auto* matchings = app.add_subcommand("matchings", "Perfect matchings of an l-uniform hypergraph");
    matchings->add_option("file", path, "Hypergraph file")->required();
    add_common(matchings);

    auto* check = app.add_subcommand("oracle-check", "Compare the fast path against both oracles");
    check->add_flag("--random", random_mode, "Random instances; arguments are seed=, count=, dmax=, kmax=");
    check->add_option("args", check_args, "Instance file, or key=value pairs with --random");
    check->add_option("--seed", seed, "Seed for --random (overridden by seed=)");
    add_common(check);

    auto* bench_cmd = app.add_subcommand("bench", "CSV of time and operation counts over a range of d");
    bench_cmd->add_option("--dmin", bench.d_min, "Smallest dimension");
    bench_cmd->add_option("--dmax", bench.d_max, "Largest dimension");
    bench_cmd->add_option("--k", bench.k, "Tuple length")->check(CLI::NonNegativeNumber);
    auto* m_opt = bench_cmd->add_option("--m", bench_m, "Fixed number of vectors per row");
    bench_cmd->add_option("--density", bench.density, "m / 2^d when --m is absent")->check(CLI::Range(0.0, 1.0));
    bench_cmd->add_option("--seed", bench.seed, "Instance generator seed");
    add_common(bench_cmd);

    auto* selftest = app.add_subcommand("selftest", "Built-in sanity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(path, flags, cumulative);
        if (candidates->parsed()) return cmd_candidates(path, flags, full_check);
        if (matchings->parsed()) return cmd_matchings(path, flags);
        if (check->parsed()) {
            if (random_mode) {
                RandomCheckConfig cfg;
                cfg.seed = seed;
                return report_check(check_random(parse_random_args(check_args, cfg)));
            }
            if (check_args.size() != 1) {
                std::cerr << "error: oracle-check needs one instance file or --random\n";
                return kExitUsage;
            }
            const auto inst = parse_instance(read_file(check_args.front()), parse_options(flags));
            return report_check(check_instance(inst));
        }
        if (bench_cmd->parsed()) {
            if (m_opt->count()) bench.m = bench_m;
            bench.max_d = flags.max_d;
            bench.exec.threads = flags.threads;
            std::cout << bench_csv_header() << "\n";
            run_bench(bench, [](const BenchRow& row) { std::cout << bench_csv_row(row) << std::endl; });
            return kExitOk;
        }
        if (selftest->parsed()) return cmd_selftest();
    } catch (const ExactnessError& e) {
        std::cerr << "internal error (please report): " << e.what() << "\n";
        return kExitMismatch;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
