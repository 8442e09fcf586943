#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "greedyspan/greedyspan.hpp"

namespace gs = greedyspan;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitError = 2;

struct BuildArgs {
    std::string points;
    std::string algo = "delta-greedy";
    double t = 1.5;
    std::string delta = "t";
    std::string scheduler = "lazy";
    double gap_w = 0.0;
    std::string out;
    std::string report;
    bool strict = false;
};

gs::SchedulerMode parse_scheduler(const std::string& s) {
    return s == "eager" ? gs::SchedulerMode::Eager : gs::SchedulerMode::Lazy;
}

gs::SpannerResult construct(const gs::PointSet& ps, gs::Algorithm algo, double t, double delta,
                            gs::SchedulerMode mode, double gap_w) {
    switch (algo) {
        case gs::Algorithm::DeltaGreedy: return gs::delta_greedy(ps, {t, delta, mode, {}});
        case gs::Algorithm::PathGreedy: return gs::path_greedy(ps, t);
        case gs::Algorithm::ThetaGraph: return gs::theta_graph(ps, t);
        case gs::Algorithm::GreedyOnTheta: return gs::greedy_on_theta(ps, t, delta);
        case gs::Algorithm::GapGreedy: return gs::gap_greedy(ps, {t, gap_w});
    }
    throw std::logic_error("unhandled algorithm");
}

nlohmann::json report_json(const gs::RunReport& r) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [queries, points] : r.query_histogram) hist[std::to_string(queries)] = points;
    return {{"edges", r.edges},
            {"total_weight", r.total_weight},
            {"weight_over_mst", r.weight_over_mst},
            {"max_degree", r.max_degree},
            {"sp_queries", r.sp_queries},
            {"visited_total", r.visited_total},
            {"query_histogram", hist},
            {"wall_seconds", r.wall_seconds}};
}

int run_gen(std::size_t n, std::uint64_t seed, const std::string& out) {
    const gs::PointSet ps = gs::generate_points(n, seed);
    if (out.empty() || out == "-") gs::write_points(std::cout, ps);
    else gs::write_points(out, ps);
    return 0;
}

int run_build(const BuildArgs& a) {
    const gs::PointSet ps = gs::read_points(a.points);
    const gs::Algorithm algo = gs::parse_algorithm(a.algo);
    const double delta = gs::parse_delta_rule(a.delta).resolve(a.t);
    const gs::SpannerResult res = construct(ps, algo, a.t, delta, parse_scheduler(a.scheduler), a.gap_w);
    const gs::RunReport rep = gs::compute_report(res.graph, ps, res.counters, std::nullopt);

    if (a.out.empty() || a.out == "-") gs::write_graph(std::cout, res.graph);
    else gs::write_graph(a.out, res.graph);

    nlohmann::json j = report_json(rep);
    j["algorithm"] = gs::algorithm_name(algo);
    j["n"] = ps.size();
    j["t"] = a.t;
    if (gs::detail::uses_delta(algo)) j["delta"] = delta;

    int code = 0;
    if (a.strict && ps.size() >= 2) {
        const gs::Certification c = gs::certify_spanner(res.graph, ps, a.t);
        j["max_dilation"] = c.dilation.max_dilation;
        j["is_spanner"] = c.is_spanner;
        if (!c.is_spanner) code = kExitVerifyFailed;
    }
    if (!a.report.empty()) {
        std::ofstream f(a.report);
        if (!f) throw gs::IoError("cannot open '" + a.report + "' for writing");
        f << j.dump(2) << '\n';
    }
    std::cerr << gs::algorithm_name(algo) << ": n=" << ps.size() << " edges=" << rep.edges
              << " weight/mst=" << gs::format_double(rep.weight_over_mst) << " max_degree=" << rep.max_degree
              << " sp_queries=" << rep.sp_queries << " time=" << gs::format_double(rep.wall_seconds) << "s\n";
    if (code != 0) std::cerr << "error: output is not a " << gs::format_double(a.t) << "-spanner\n";
    return code;
}

int run_verify(const std::string& points, const std::string& graph, double t, bool strict) {
    const gs::PointSet ps = gs::read_points(points);
    const gs::SpannerGraph g = gs::read_graph(graph, ps);
    const gs::Certification c = gs::certify_spanner(g, ps, t);
    std::cout << "n=" << ps.size() << " m=" << g.edge_count()
              << " max_dilation=" << gs::format_double(c.dilation.max_dilation);
    if (c.dilation.max_dilation > 1.0) {
        std::cout << " witness=" << c.dilation.witness_first << "," << c.dilation.witness_second;
    }
    std::cout << " t=" << gs::format_double(t) << ' ' << (c.is_spanner ? "PASS" : "FAIL") << '\n';
    return (strict && !c.is_spanner) ? kExitVerifyFailed : 0;
}

int run_render(const std::string& points, const std::string& graph, const std::string& out) {
    const gs::PointSet ps = gs::read_points(points);
    const gs::SpannerGraph g = graph.empty() ? gs::SpannerGraph(ps) : gs::read_graph(graph, ps);
    if (out.empty() || out == "-") gs::render_svg(std::cout, g);
    else gs::render_svg(out, g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy geometric spanner construction and benchmarking"};
    app.require_subcommand(1);

    std::size_t n = 1000;
    std::uint64_t seed = 1;
    std::string out;
    bool strict = false;

    auto* gen = app.add_subcommand("gen", "Generate uniform random points in the unit square");
    gen->add_option("--n", n, "Number of points")->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "Generator seed");
    gen->add_option("--out", out, "Output point file (default stdout)");

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "Build a spanner over a point file");
    build->add_option("points", build_args.points, "Input point file")->required();
    build->add_option("--algo", build_args.algo,
                      "delta-greedy, path-greedy, theta-graph, greedy-on-theta or gap-greedy");
    build->add_option("--t", build_args.t, "Stretch factor t > 1");
    build->add_option("--delta", build_args.delta,
                      "delta (or t' for greedy-on-theta): a number, t, t^0.9 or sqrt");
    build->add_option("--scheduler", build_args.scheduler, "Pair scheduler")
        ->check(CLI::IsMember({"eager", "lazy"}));
    build->add_option("--gap-w", build_args.gap_w, "Gap-greedy separation parameter w");
    build->add_option("--out", build_args.out, "Output edge list (default stdout)");
    build->add_option("--report", build_args.report, "Write run metrics as JSON");
    build->add_flag("--strict", build_args.strict, "Certify the output and fail if it is not a t-spanner");

    std::string points_path, graph_path;
    double verify_t = 1.5;
    auto* verify = app.add_subcommand("verify", "Measure dilation of an edge list");
    verify->add_option("points", points_path, "Point file")->required();
    verify->add_option("graph", graph_path, "Edge list file")->required();
    verify->add_option("--t", verify_t, "Stretch factor to certify against");
    verify->add_flag("--strict", strict, "Exit nonzero when the graph is not a t-spanner");

    gs::ExperimentConfig cfg;
    std::vector<double> ts{1.1, 1.5, 2.0};
    std::vector<std::string> deltas{"t", "t^0.9", "sqrt"};
    std::vector<std::string> algos{"delta-greedy"};
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::string bench_points, bench_scheduler = "lazy";
    bool timing = false;
    unsigned threads = 1;
    std::size_t bench_n = 8000;
    auto* bench = app.add_subcommand("bench", "Run an experiment matrix and emit a table and CSV");
    bench->add_option("--n", bench_n, "Points per random instance")->check(CLI::PositiveNumber);
    bench->add_option("--t", ts, "Stretch factors")->delimiter(',');
    bench->add_option("--delta", deltas, "delta rules: numbers, t, t^0.9, sqrt")->delimiter(',');
    bench->add_option("--algo", algos, "Algorithms")->delimiter(',');
    bench->add_option("--seed", seeds, "Seeds, one instance each")->delimiter(',');
    bench->add_option("--scheduler", bench_scheduler, "Pair scheduler")->check(CLI::IsMember({"eager", "lazy"}));
    bench->add_option("--points", bench_points, "Run every cell on this point file instead");
    bench->add_option("--gap-w", cfg.gap_w, "Gap-greedy separation parameter w");
    bench->add_option("--threads", threads, "Worker threads");
    bench->add_option("--out", out, "CSV output path (default stdout after the table)");
    bench->add_flag("--timing", timing, "Include the wall time column in the CSV");
    bench->add_flag("--strict", strict, "Exit nonzero when any cell failed");

    std::string render_graph;
    auto* render = app.add_subcommand("render", "Draw points and edges as SVG");
    render->add_option("points", points_path, "Point file")->required();
    render->add_option("graph", render_graph, "Edge list file (points only when omitted)");
    render->add_option("--out", out, "Output SVG (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return run_gen(n, seed, out);
        if (*build) return run_build(build_args);
        if (*verify) return run_verify(points_path, graph_path, verify_t, strict);
        if (*render) return run_render(points_path, render_graph, out);
        if (*bench) {
            cfg.n = bench_n;
            cfg.ts = ts;
            for (const auto& d : deltas) cfg.deltas.push_back(gs::parse_delta_rule(d));
            for (const auto& a : algos) cfg.algorithms.push_back(gs::parse_algorithm(a));
            cfg.seeds = seeds;
            cfg.scheduler = parse_scheduler(bench_scheduler);
            cfg.threads = threads;
            if (!bench_points.empty()) cfg.fixed_points = gs::read_points(bench_points);
            const auto rows = gs::run_experiment(cfg);
            if (out.empty() || out == "-") {
                std::cout << gs::format_table(rows) << '\n';
                gs::write_csv(std::cout, rows, timing);
            } else {
                std::cout << gs::format_table(rows);
                std::ofstream f(out);
                if (!f) throw gs::IoError("cannot open '" + out + "' for writing");
                gs::write_csv(f, rows, timing);
                if (!f) throw gs::IoError("write failed for '" + out + "'");
            }
            bool failed = false;
            for (const auto& r : rows) failed = failed || !r.error.empty();
            return (strict && failed) ? kExitVerifyFailed : 0;
        }
    } catch (const gs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}
