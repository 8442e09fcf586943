#pragma once

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "greedyspan/analysis.hpp"
#include "greedyspan/baselines.hpp"
#include "greedyspan/delta_greedy.hpp"
#include "greedyspan/io.hpp"
#include "greedyspan/random_points.hpp"

namespace greedyspan {

enum class Algorithm { DeltaGreedy, PathGreedy, ThetaGraph, GreedyOnTheta, GapGreedy };

inline std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::DeltaGreedy: return "delta-greedy";
        case Algorithm::PathGreedy: return "path-greedy";
        case Algorithm::ThetaGraph: return "theta-graph";
        case Algorithm::GreedyOnTheta: return "greedy-on-theta";
        case Algorithm::GapGreedy: return "gap-greedy";
    }
    return "unknown";
}

inline Algorithm parse_algorithm(const std::string& s) {
    for (Algorithm a : {Algorithm::DeltaGreedy, Algorithm::PathGreedy, Algorithm::ThetaGraph,
                        Algorithm::GreedyOnTheta, Algorithm::GapGreedy}) {
        if (s == algorithm_name(a)) return a;
    }
    if (s == "delta") return Algorithm::DeltaGreedy;
    if (s == "path") return Algorithm::PathGreedy;
    if (s == "theta") return Algorithm::ThetaGraph;
    if (s == "greedy-theta") return Algorithm::GreedyOnTheta;
    if (s == "gap") return Algorithm::GapGreedy;
    throw std::invalid_argument("unknown algorithm '" + s + "'");
}

/// How delta (or t' for greedy-on-theta) is derived from t: a fixed value,
/// or one of the symbolic rules t, t^0.9 and sqrt(t).
struct DeltaRule {
    enum class Kind { Absolute, T, TPow09, Sqrt };

    Kind kind = Kind::T;
    double value = 0.0;

    double resolve(double t) const {
        switch (kind) {
            case Kind::Absolute: return value;
            case Kind::T: return t;
            case Kind::TPow09: return std::pow(t, 0.9);
            case Kind::Sqrt: return std::sqrt(t);
        }
        return t;
    }

    std::string label() const {
        switch (kind) {
            case Kind::Absolute: return format_double(value);
            case Kind::T: return "t";
            case Kind::TPow09: return "t^0.9";
            case Kind::Sqrt: return "sqrt";
        }
        return "?";
    }
};

inline DeltaRule parse_delta_rule(const std::string& s) {
    if (s == "t") return {DeltaRule::Kind::T, 0.0};
    if (s == "t^0.9") return {DeltaRule::Kind::TPow09, 0.0};
    if (s == "sqrt" || s == "sqrt(t)" || s == "t^0.5") return {DeltaRule::Kind::Sqrt, 0.0};
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::invalid_argument("bad delta rule '" + s + "'");
    return {DeltaRule::Kind::Absolute, v};
}

struct ExperimentConfig {
    std::size_t n = 8000;
    std::vector<double> ts;
    std::vector<DeltaRule> deltas;
    std::vector<Algorithm> algorithms;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    SchedulerMode scheduler = SchedulerMode::Lazy;
    /// When set, every cell runs on these points once instead of generating.
    std::optional<PointSet> fixed_points;
    double gap_w = 0.0;
    unsigned threads = 1;
};

/// One table cell: seed-averaged metrics of one (algorithm, t, delta rule).
struct ExperimentRow {
    Algorithm algorithm = Algorithm::DeltaGreedy;
    double t = 0.0;
    std::optional<DeltaRule> rule;  // absent for algorithms without delta
    double delta = 0.0;             // resolved delta or t'; 0 when absent
    std::size_t n = 0;
    std::size_t runs = 0;
    double edges = 0.0;
    double total_weight = 0.0;
    double weight_over_mst = 0.0;
    double max_degree = 0.0;
    double sp_queries = 0.0;
    double visited_total = 0.0;
    double wall_seconds = 0.0;
    std::string error;
};

namespace detail {

inline SpannerResult run_cell(const PointSet& ps, Algorithm algo, double t, double delta,
                              const ExperimentConfig& cfg) {
    switch (algo) {
        case Algorithm::DeltaGreedy: return delta_greedy(ps, {t, delta, cfg.scheduler, {}});
        case Algorithm::PathGreedy: return path_greedy(ps, t);
        case Algorithm::ThetaGraph: return theta_graph(ps, t);
        case Algorithm::GreedyOnTheta: return greedy_on_theta(ps, t, delta);
        case Algorithm::GapGreedy: return gap_greedy(ps, {t, cfg.gap_w});
    }
    throw std::logic_error("unhandled algorithm");
}

inline bool uses_delta(Algorithm a) { return a == Algorithm::DeltaGreedy || a == Algorithm::GreedyOnTheta; }

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
}

}  // namespace detail

/// Runs every applicable (algorithm, t, delta rule) cell over every seed and
/// averages the metrics across seeds. Greedy-on-theta needs t' < t, so the
/// rule resolving to t is not applicable to it. A failing cell records its
/// error and the rest continue. Rows come out in config order regardless of
/// thread count.
inline std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
    std::vector<ExperimentRow> rows;
    for (Algorithm algo : cfg.algorithms) {
        for (double t : cfg.ts) {
            if (!detail::uses_delta(algo)) {
                rows.push_back({algo, t, std::nullopt, 0.0});
                continue;
            }
            for (const DeltaRule& rule : cfg.deltas) {
                const double d = rule.resolve(t);
                if (algo == Algorithm::GreedyOnTheta && !(d < t)) continue;
                rows.push_back({algo, t, rule, d});
            }
        }
    }
    if (rows.empty()) return rows;

    // Point sets and their MST weights are shared by every cell of a seed.
    std::vector<PointSet> sets;
    if (cfg.fixed_points) {
        sets.push_back(*cfg.fixed_points);
    } else {
        for (std::uint64_t seed : cfg.seeds) sets.push_back(generate_points(cfg.n, seed));
    }
    std::vector<double> mst(sets.size());
    detail::parallel_for(sets.size(), cfg.threads, [&](std::size_t i) { mst[i] = euclidean_mst_weight(sets[i]); });

    const std::size_t jobs = rows.size() * sets.size();
    std::vector<std::optional<RunReport>> reports(jobs);
    std::vector<std::string> errors(jobs);
    detail::parallel_for(jobs, cfg.threads, [&](std::size_t j) {
        const ExperimentRow& row = rows[j / sets.size()];
        const PointSet& ps = sets[j % sets.size()];
        try {
            const SpannerResult res = detail::run_cell(ps, row.algorithm, row.t, row.delta, cfg);
            reports[j] = compute_report(res.graph, ps, res.counters, mst[j % sets.size()]);
        } catch (const std::exception& e) {
            errors[j] = e.what();
        }
    });

    for (std::size_t r = 0; r < rows.size(); ++r) {
        ExperimentRow& row = rows[r];
        row.n = sets.front().size();
        for (std::size_t s = 0; s < sets.size(); ++s) {
            const std::size_t j = r * sets.size() + s;
            if (!reports[j]) {
                if (row.error.empty()) row.error = errors[j];
                continue;
            }
            const RunReport& rep = *reports[j];
            ++row.runs;
            row.edges += double(rep.edges);
            row.total_weight += rep.total_weight;
            row.weight_over_mst += rep.weight_over_mst;
            row.max_degree += double(rep.max_degree);
            row.sp_queries += double(rep.sp_queries);
            row.visited_total += double(rep.visited_total);
            row.wall_seconds += rep.wall_seconds;
        }
        if (row.runs > 0) {
            const double k = double(row.runs);
            row.edges /= k;
            row.total_weight /= k;
            row.weight_over_mst /= k;
            row.max_degree /= k;
            row.sp_queries /= k;
            row.visited_total /= k;
            row.wall_seconds /= k;
        }
    }
    return rows;
}

/// Machine-readable rows at full precision. Wall time is only written when
/// asked for, since it is the one non-deterministic column.
inline void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows, bool include_timing = false) {
    out << "algorithm,t,delta_rule,delta,n,runs,edges,weight,weight_over_mst,max_degree,sp_queries,visited";
    if (include_timing) out << ",wall_seconds";
    out << ",error\n";
    for (const ExperimentRow& r : rows) {
        out << algorithm_name(r.algorithm) << ',' << format_double(r.t) << ','
            << (r.rule ? r.rule->label() : std::string("-")) << ',' << (r.rule ? format_double(r.delta) : "")
            << ',' << r.n << ',' << r.runs << ',' << format_double(r.edges) << ','
            << format_double(r.total_weight) << ',' << format_double(r.weight_over_mst) << ','
            << format_double(r.max_degree) << ',' << format_double(r.sp_queries) << ','
            << format_double(r.visited_total);
        if (include_timing) out << ',' << format_double(r.wall_seconds);
        std::string err = r.error;
        for (char& c : err) {
            if (c == ',' || c == '\n') c = ' ';
        }
        out << ',' << err << '\n';
    }
}

/// Human-readable table: edges in thousands to one decimal, weight ratio and
/// degree rounded to integers, queries in thousands.
inline std::string format_table(const std::vector<ExperimentRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(17) << "Algorithm" << std::setw(8) << "t" << std::setw(10) << "delta"
       << std::right << std::setw(11) << "Edges(K)" << std::setw(12) << "Weight/MST" << std::setw(8) << "Degree"
       << std::setw(16) << "SP queries(K)" << '\n';
    for (const ExperimentRow& r : rows) {
        std::ostringstream delta;
        if (r.rule) delta << std::fixed << std::setprecision(4) << r.delta;
        else delta << '-';
        os << std::left << std::setw(17) << algorithm_name(r.algorithm) << std::setw(8) << format_double(r.t)
           << std::setw(10) << delta.str() << std::right;
        if (r.runs == 0) {
            os << "  failed: " << r.error << '\n';
            continue;
        }
        os << std::fixed << std::setprecision(1) << std::setw(11) << r.edges / 1000.0 << std::setprecision(0)
           << std::setw(12) << r.weight_over_mst << std::setw(8) << r.max_degree << std::setprecision(1)
           << std::setw(16) << r.sp_queries / 1000.0 << '\n';
        os.unsetf(std::ios::floatfield);
    }
    return os.str();
}

}  // namespace greedyspan
