// vcapprox: approximate minimum-weight vertex cover from the command line.
//
// Exit codes: 0 success, 1 verification failed, 2 unreadable or malformed
// input, 3 exact oracle size cap exceeded, 4 any other error.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vcapprox/error.hpp"
#include "vcapprox/io.hpp"
#include "vcapprox/vc_approx.hpp"

namespace fs = std::filesystem;
using namespace vcapprox;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kParse = 2, kTooLarge = 3, kOther = 4 };

/// Unreadable or malformed input file; message already names the file.
struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input;
    std::string format;  // "", "graph", "shapes"
    std::string oracle = "local-search";
    std::optional<double> eps;
    std::size_t swap_size = 0;
    double swap_constant = 1.0;
    std::uint64_t seed = 0;
    std::size_t cap = kDefaultExactCap;
    std::string output;
};

std::size_t default_cap() {
    if (const char* env = std::getenv("VCAPPROX_BF_CAP")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed VCAPPROX_BF_CAP='" << env << "'\n";
        }
    }
    return kDefaultExactCap;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidParameter, "cannot write '" + path + "'");
    out << text;
}

Instance load(const RunConfig& cfg) {
    std::optional<InstanceFormat> format;
    if (cfg.format == "graph") format = InstanceFormat::Graph;
    if (cfg.format == "shapes") format = InstanceFormat::Shapes;
    try {
        return parse_instance(read_file(cfg.input), format);
    } catch (const ParseError& e) {
        throw InputFailure(cfg.input + ": " + e.what());
    }
}

WeightedGraph as_graph(const Instance& instance) {
    if (const auto* g = std::get_if<WeightedGraph>(&instance)) return *g;
    return intersection_graph(std::get<ShapeSet>(instance)).graph;
}

void check_cap(std::size_t cap) {
    if (cap > kDefaultExactCap) {
        throw Error(ErrorCode::InvalidParameter, "brute-force cap must be <= " + std::to_string(kDefaultExactCap));
    }
}

double resolve_eps(const RunConfig& cfg, const std::string& oracle) {
    if (cfg.eps) return *cfg.eps;
    return oracle == "exact" ? 0.0 : 0.5;
}

std::unique_ptr<ISOracle> oracle_for(const RunConfig& cfg, const std::string& name, double eps) {
    OracleConfig oc;
    oc.exact_cap = cfg.cap;
    oc.eps = eps;
    oc.swap_constant = cfg.swap_constant;
    oc.swap_size_override = cfg.swap_size;
    oc.seed = cfg.seed;
    oc.warn = [](std::string_view message) { std::cerr << "warning: " << message << '\n'; };
    return make_oracle(name, oc);
}

ApproxResult solve(const RunConfig& cfg, const Instance& instance, const std::string& oracle_name) {
    const double eps = resolve_eps(cfg, oracle_name);
    const auto oracle = oracle_for(cfg, oracle_name, eps);
    if (const auto* shapes = std::get_if<ShapeSet>(&instance)) return approx_vc(*shapes, *oracle, eps);
    return approx_vc(std::get<WeightedGraph>(instance), *oracle, eps);
}

int cmd_solve(const RunConfig& cfg) {
    check_cap(cfg.cap);
    const auto instance = load(cfg);
    emit(cfg.output, write_result(solve(cfg, instance, cfg.oracle)));
    return kOk;
}

int cmd_kernelize(const RunConfig& cfg, const std::string& report_path) {
    const auto g = as_graph(load(cfg));
    const auto kernel = kernelize(g);
    const auto stats = summarize(kernel);
    std::ostringstream out;
    out << "c kernel of " << cfg.input << '\n';
    out << "c v0 " << stats.v0.size << ' ' << stats.v0.weight << '\n';
    out << "c vhalf " << stats.vhalf.size << ' ' << stats.vhalf.weight << '\n';
    out << "c v1 " << stats.v1.size << ' ' << stats.v1.weight << '\n';
    out << "c lp_bound " << kernel.lp.objective().to_string() << '\n';
    out << serialize_graph(kernel.kernel_graph);
    emit(cfg.output, out.str());

    if (!report_path.empty()) {
        nlohmann::json report;
        const auto part = [](const PartSummary& p) { return nlohmann::json{{"size", p.size}, {"weight", p.weight}}; };
        report["v0"] = part(stats.v0);
        report["vhalf"] = part(stats.vhalf);
        report["v1"] = part(stats.v1);
        report["lp_bound"] = kernel.lp.objective().to_string();
        auto back = nlohmann::json::array();
        for (Vertex v : kernel.back_map) back.push_back(v + 1);
        report["kernel_to_input"] = std::move(back);
        auto forced = nlohmann::json::array();
        for (Vertex v : kernel.forced.members()) forced.push_back(v + 1);
        report["forced"] = std::move(forced);
        emit(report_path, report.dump(2) + "\n");
    }
    return kOk;
}

struct GenConfig {
    std::string kind = "disks";
    std::size_t n = 100;
    double p = 0.3;
    double region = 100.0;
    double min_size = 1.0;
    double max_size = 5.0;
    std::uint64_t seed = 0;
    std::string output;
};

int cmd_gen(const GenConfig& gc) {
    if (gc.kind == "gnp") {
        if (!(gc.p >= 0.0 && gc.p <= 1.0)) throw Error(ErrorCode::InvalidParameter, "--p must lie in [0, 1]");
        std::mt19937_64 rng(gc.seed);
        std::vector<Edge> edges;
        // 53-bit uniform draw; std::uniform_real_distribution is not portable
        const auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        for (Vertex u = 0; u < gc.n; ++u) {
            for (Vertex v = u + 1; v < gc.n; ++v) {
                if (coin() < gc.p) edges.emplace_back(u, v);
            }
        }
        emit(gc.output, serialize_graph(build_graph(gc.n, std::vector<Weight>(gc.n, 1), edges)));
        return kOk;
    }
    GenerateParams params;
    params.kind = gc.kind == "rects" ? ShapeKind::Rects : ShapeKind::Disks;
    params.n = gc.n;
    params.region = gc.region;
    params.min_size = gc.min_size;
    params.max_size = gc.max_size;
    params.seed = gc.seed;
    emit(gc.output, serialize_shapes(generate_instance(params)));
    return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& result_path) {
    check_cap(cfg.cap);
    const auto g = as_graph(load(cfg));
    ResultDocument doc;
    try {
        doc = read_result(read_file(result_path));
    } catch (const ParseError& e) {
        throw InputFailure(result_path + ": " + e.what());
    }

    std::vector<Check> checks;
    std::vector<Vertex> members;
    bool in_range = true;
    for (auto id : doc.cover) {
        if (id < 0 || static_cast<std::size_t>(id) >= g.size()) {
            in_range = false;
            checks.push_back({"cover-ids-in-range", false, "id " + std::to_string(id + 1) + " is not a vertex"});
            break;
        }
        members.push_back(static_cast<Vertex>(id));
    }

    VerifyReport report;
    if (in_range) {
        ApproxResult result;
        result.cover = VertexSet::of(g, members);
        result.lp_lower_bound = doc.lp_bound;
        result.kernel_stats = doc.kernel;
        result.oracle_name = doc.oracle;
        report = verify_result(g, result, doc.cover_weight, cfg.cap);
        checks.insert(checks.end(), report.checks.begin(), report.checks.end());

        const auto expected_ratio = result.certified_ratio_bound();
        const bool ratio_ok = doc.ratio_bound == expected_ratio;
        checks.push_back({"ratio-bound", ratio_ok, ratio_ok ? "" : "ratio does not equal cover weight / LP bound"});

        const bool stats_ok = summarize(kernelize(g)) == doc.kernel;
        checks.push_back({"kernel-stats", stats_ok, stats_ok ? "" : "kernel sizes/weights differ from recomputation"});
    }

    bool passed = true;
    for (const auto& c : checks) {
        passed &= c.passed;
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << '\n';
    }
    if (report.optimum) {
        std::cout << "optimum " << *report.optimum << '\n';
        if (report.exact_ratio) std::cout << "exact_ratio " << report.exact_ratio->to_string() << '\n';
    }
    return passed ? kOk : kVerifyFailed;
}

std::vector<std::string> collect_instances(const std::vector<std::string>& paths) {
    std::vector<std::string> files;
    for (const auto& p : paths) {
        if (fs::is_directory(p)) {
            std::vector<std::string> inside;
            for (const auto& entry : fs::directory_iterator(p)) {
                if (entry.is_regular_file()) inside.push_back(entry.path().string());
            }
            std::sort(inside.begin(), inside.end());
            files.insert(files.end(), inside.begin(), inside.end());
        } else {
            files.push_back(p);
        }
    }
    return files;
}

std::string fixed(double value, int digits) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << value;
    return out.str();
}

int cmd_bench(const RunConfig& base, const std::vector<std::string>& paths, const std::vector<std::string>& oracles,
              int threads) {
    check_cap(base.cap);
    const auto files = collect_instances(paths);
    std::vector<std::string> rows(files.size());
    if (threads > 0) omp_set_num_threads(threads);

    const auto count = static_cast<std::ptrdiff_t>(files.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto& file = files[static_cast<std::size_t>(i)];
        std::ostringstream lines;
        try {
            RunConfig cfg = base;
            cfg.input = file;
            const auto instance = load(cfg);
            const auto g = as_graph(instance);
            const auto prefix = file + '\t' + std::to_string(g.size()) + '\t' + std::to_string(g.edge_count()) + '\t';
            for (const auto& name : oracles) {
                const auto start = std::chrono::steady_clock::now();
                std::string tail;
                try {
                    const auto r = solve(cfg, instance, name);
                    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                    const double fraction = g.size() == 0 ? 0.0 : static_cast<double>(r.kernel_stats.vhalf.size) / static_cast<double>(g.size());
                    const auto ratio = r.certified_ratio_bound();
                    lines << prefix << fixed(fraction, 4) << '\t' << name << '\t' << r.cover_weight() << '\t'
                          << r.lp_lower_bound.to_string() << '\t' << (ratio ? ratio->to_string() : "-") << '\t'
                          << fixed(ms, 3) << '\n';
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::TooLarge) throw;
                    lines << prefix << "-\t" << name << "\tskipped\t-\t-\t-\n";
                }
            }
            const auto start = std::chrono::steady_clock::now();
            const auto m = matching_2approx_vc(g);
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            const auto lp = half_integral_solution(g).objective();
            lines << prefix << "-\tmatching-2approx\t" << m.weight() << '\t' << lp.to_string() << '\t'
                  << (lp.num() == 0 ? "-" : (Rational(m.weight()) / lp).to_string()) << '\t' << fixed(ms, 3) << '\n';
        } catch (const std::exception& e) {
            lines << file << "\terror\t" << e.what() << '\n';
        }
        rows[static_cast<std::size_t>(i)] = lines.str();
    }

    std::ostringstream out;
    out << "instance\tn\tm\tkernel_fraction\toracle\tcover_weight\tlp_bound\tratio_bound\twall_ms\n";
    for (const auto& r : rows) out << r;
    emit(base.output, out.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate minimum-weight vertex cover via LP kernelization and independent-set oracles"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.cap = default_cap();
    const std::vector<std::string> oracle_names{"exact", "greedy", "local-search"};

    const auto add_common = [&](CLI::App* sub, bool with_oracle) {
        sub->add_option("--format", cfg.format, "Force the input format")
            ->check(CLI::IsMember({"graph", "shapes"}));
        sub->add_option("-o,--output", cfg.output, "Output path (default stdout)");
        sub->add_option("--cap", cfg.cap, "Brute-force / exact oracle vertex cap (<= 30; env VCAPPROX_BF_CAP)");
        if (!with_oracle) return;
        sub->add_option("--oracle", cfg.oracle, "Independent-set oracle")->check(CLI::IsMember(oracle_names));
        sub->add_option("--eps", cfg.eps, "Target epsilon in [0, 1) (default 0 for exact, 0.5 otherwise)");
        sub->add_option("--swap-size", cfg.swap_size, "Local-search swap size t (overrides --eps)");
        sub->add_option("--swap-c", cfg.swap_constant, "Constant c in t = ceil(c / eps^2)");
        sub->add_option("--seed", cfg.seed, "Seed for the local-search initial solution");
    };

    auto* solve_cmd = app.add_subcommand("solve", "Compute an approximate vertex cover");
    solve_cmd->add_option("input", cfg.input, "Graph or shapes file")->required();
    add_common(solve_cmd, true);

    std::string report_path;
    auto* kernel_cmd = app.add_subcommand("kernelize", "Write the LP kernel as a graph file");
    kernel_cmd->add_option("input", cfg.input, "Graph or shapes file")->required();
    kernel_cmd->add_option("--report", report_path, "Also write a JSON partition report here");
    add_common(kernel_cmd, false);

    GenConfig gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--kind", gen.kind, "disks | rects | gnp")->check(CLI::IsMember({"disks", "rects", "gnp"}));
    gen_cmd->add_option("--n", gen.n, "Number of shapes / vertices");
    gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)");
    gen_cmd->add_option("--region", gen.region, "Side of the square region (shapes)");
    gen_cmd->add_option("--min-size", gen.min_size, "Minimum radius or side (shapes)");
    gen_cmd->add_option("--max-size", gen.max_size, "Maximum radius or side (shapes)");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("-o,--output", gen.output, "Output path (default stdout)");

    std::string result_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a result document against its instance");
    verify_cmd->add_option("input", cfg.input, "Graph or shapes file")->required();
    verify_cmd->add_option("result", result_path, "Result document from solve")->required();
    verify_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"graph", "shapes"}));
    verify_cmd->add_option("--cap", cfg.cap, "Brute-force cap for the exact ratio (<= 30)");

    std::vector<std::string> bench_paths;
    std::vector<std::string> bench_oracles = oracle_names;
    int threads = 0;
    auto* bench_cmd = app.add_subcommand("bench", "Tabulate oracles and the matching baseline over instances");
    bench_cmd->add_option("inputs", bench_paths, "Instance files or directories")->required();
    bench_cmd->add_option("--oracles", bench_oracles, "Oracles to run")->check(CLI::IsMember(oracle_names));
    bench_cmd->add_option("--threads", threads, "Worker threads (default: OpenMP default)");
    add_common(bench_cmd, false);
    bench_cmd->add_option("--eps", cfg.eps, "Epsilon for non-exact oracles (default 0.5)");
    bench_cmd->add_option("--swap-size", cfg.swap_size, "Local-search swap size t");
    bench_cmd->add_option("--swap-c", cfg.swap_constant, "Constant c in t = ceil(c / eps^2)");
    bench_cmd->add_option("--seed", cfg.seed, "Seed for the local-search initial solution");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return cmd_solve(cfg);
        if (*kernel_cmd) return cmd_kernelize(cfg, report_path);
        if (*gen_cmd) return cmd_gen(gen);
        if (*verify_cmd) return cmd_verify(cfg, result_path);
        if (*bench_cmd) return cmd_bench(cfg, bench_paths, bench_oracles, threads);
    } catch (const InputFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::TooLarge ? kTooLarge : kOther;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kOther;
    }
    return kOther;
}
