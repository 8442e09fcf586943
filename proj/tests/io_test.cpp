#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stack>

#include <gtest/gtest.h>

#include "greedyspan/greedyspan.hpp"
#include "oracles.hpp"

using namespace greedyspan;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("greedyspan_io_test_" + name);
}

std::vector<Point> coords(const PointSet& ps) { return {ps.begin(), ps.end()}; }

int count_of(const std::string& text, const std::string& needle) {
    int n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

// Minimal well-formedness check: every element closes in order.
bool balanced_xml(const std::string& s) {
    std::stack<std::string> open;
    std::size_t i = 0;
    while ((i = s.find('<', i)) != std::string::npos) {
        const std::size_t j = s.find('>', i);
        if (j == std::string::npos) return false;
        std::string tag = s.substr(i + 1, j - i - 1);
        i = j + 1;
        if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;
        if (tag.back() == '/') continue;
        const std::string name = tag.substr(tag[0] == '/' ? 1 : 0, tag.find_first_of(" \t\n", 0) - (tag[0] == '/'));
        if (tag[0] == '/') {
            if (open.empty() || open.top() != name) return false;
            open.pop();
        } else {
            open.push(name);
        }
    }
    return open.empty();
}

}  // namespace

TEST(GeneratePoints, DeterministicAndInRange) {
    const PointSet a = generate_points(5, 42), b = generate_points(5, 42);
    EXPECT_EQ(coords(a), coords(b));
    EXPECT_NE(coords(a), coords(generate_points(5, 43)));
    const PointSet big = generate_points(10000, 7);
    double mean = 0.0;
    for (const Point& p : big) {
        ASSERT_GE(p.x, 0.0);
        ASSERT_LT(p.x, 1.0);
        ASSERT_GE(p.y, 0.0);
        ASSERT_LT(p.y, 1.0);
        mean += p.x;
    }
    EXPECT_NEAR(mean / 10000.0, 0.5, 0.02);
    EXPECT_THROW(generate_points(0, 1), std::invalid_argument);
}

TEST(GeneratePoints, DocumentedMapping) {
    // First SplitMix64 output for seed 0 is a known constant.
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
    SplitMix64 again(0);
    const double x = again.next_unit();
    EXPECT_EQ(x, double(0xE220A8397B1DCDAFULL >> 11) * 0x1.0p-53);
    EXPECT_EQ(generate_points(1, 0)[0].x, x);
}

TEST(PointFile, RoundTripIsBitExact) {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    std::vector<Point> pts;
    for (int i = 0; i < 100; ++i) pts.push_back({u(rng), u(rng)});
    pts.push_back({1e-300, -0.1});
    pts.push_back({0.1 + 0.2, 123456789.125});
    const PointSet ps(pts);
    const auto path = temp_path("points.txt").string();
    write_points(path, ps);
    EXPECT_EQ(coords(read_points(path)), coords(ps));
    std::filesystem::remove(path);
}

TEST(PointFile, Format) {
    std::ostringstream os;
    write_points(os, PointSet({{0.5, 1}, {0.1, -2.25}}));
    EXPECT_EQ(os.str(), "2\n0.5 1\n0.1 -2.25\n");
}

TEST(PointFile, ParseErrorsNameTheLine) {
    std::istringstream bad("2\n0.5 0.5\n1.0\n");
    try {
        (void)read_points(bad);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    std::istringstream junk("1\n0.5 abc\n");
    EXPECT_THROW(read_points(junk), ParseError);
    std::istringstream short_file("3\n0 0\n1 1\n");
    EXPECT_THROW(read_points(short_file), ParseError);
    std::istringstream extra("1\n0 0\n1 1\n");
    EXPECT_THROW(read_points(extra), ParseError);
    std::istringstream dup("2\n0.25 0.75\n0.25 0.75\n");
    EXPECT_THROW(read_points(dup), DuplicatePointError);
    EXPECT_THROW(read_points(std::string("/nonexistent/dir/points.txt")), IoError);
}

TEST(GraphFile, Examples) {
    const PointSet ps = oracle::collinear3();
    std::ostringstream empty;
    write_graph(empty, SpannerGraph(ps));
    EXPECT_EQ(empty.str(), "3 0\n");

    const auto res = delta_greedy(ps, {2.0, 1.5, SchedulerMode::Lazy, {}});
    std::ostringstream os;
    write_graph(os, res.graph);
    EXPECT_EQ(os.str(), "3 2\n0 1\n1 2\n");
}

TEST(GraphFile, RoundTripPreservesCertification) {
    const PointSet ps = generate_points(150, 3);
    const auto res = delta_greedy(ps, {1.5, std::pow(1.5, 0.9), SchedulerMode::Lazy, {}});
    const auto path = temp_path("graph.txt").string();
    write_graph(path, res.graph);
    const SpannerGraph back = read_graph(path, ps);
    EXPECT_TRUE(graphs_equal(back, res.graph));
    EXPECT_EQ(certify_spanner(back, ps, 1.5).is_spanner, certify_spanner(res.graph, ps, 1.5).is_spanner);
    EXPECT_EQ(certify_spanner(back, ps, 1.2).is_spanner, certify_spanner(res.graph, ps, 1.2).is_spanner);
    std::filesystem::remove(path);
}

TEST(GraphFile, ParseErrors) {
    const PointSet ps = oracle::collinear3();
    std::istringstream wrong_n("4 0\n");
    EXPECT_THROW(read_graph(wrong_n, ps), ParseError);
    std::istringstream reversed("3 1\n1 0\n");
    EXPECT_THROW(read_graph(reversed, ps), ParseError);
    std::istringstream range("3 1\n0 3\n");
    EXPECT_THROW(read_graph(range, ps), ParseError);
    std::istringstream dup("3 2\n0 1\n0 1\n");
    try {
        (void)read_graph(dup, ps);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(Svg, WellFormedWithOneLinePerEdge) {
    const PointSet ps = generate_points(200, 9);
    const auto res = delta_greedy(ps, {2.0, std::sqrt(2.0), SchedulerMode::Lazy, {}});
    std::ostringstream os;
    render_svg(os, res.graph);
    const std::string svg = os.str();
    EXPECT_TRUE(balanced_xml(svg));
    EXPECT_EQ(count_of(svg, "<line "), int(res.graph.edge_count()));
    EXPECT_EQ(count_of(svg, "<circle "), 200);
    EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
}

TEST(Svg, ViewBoxHasFivePercentMargin) {
    const PointSet ps({{0, 0}, {10, 5}});
    std::ostringstream os;
    render_svg(os, SpannerGraph(ps));
    EXPECT_NE(os.str().find("viewBox=\"-0.5 -0.5 11 6\""), std::string::npos);
}

TEST(Experiment, CollinearFixtureRow) {
    ExperimentConfig cfg;
    cfg.fixed_points = oracle::collinear3();
    cfg.ts = {2.0};
    cfg.deltas = {parse_delta_rule("1.5")};
    cfg.algorithms = {Algorithm::DeltaGreedy};
    const auto rows = run_experiment(cfg);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].edges, 2.0);
    EXPECT_EQ(rows[0].sp_queries, 2.0);
    EXPECT_EQ(rows[0].weight_over_mst, 1.0);
    EXPECT_EQ(rows[0].runs, 1u);
}

TEST(Experiment, EmptyAlgorithmList) {
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.ts = {1.5};
    cfg.deltas = {parse_delta_rule("t")};
    const auto rows = run_experiment(cfg);
    EXPECT_TRUE(rows.empty());
    std::ostringstream os;
    write_csv(os, rows);
    EXPECT_EQ(count_of(os.str(), "\n"), 1);
}

TEST(Experiment, DeltaRules) {
    EXPECT_DOUBLE_EQ(parse_delta_rule("t").resolve(1.5), 1.5);
    EXPECT_DOUBLE_EQ(parse_delta_rule("t^0.9").resolve(2.0), std::pow(2.0, 0.9));
    EXPECT_DOUBLE_EQ(parse_delta_rule("sqrt").resolve(2.0), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(parse_delta_rule("1.25").resolve(2.0), 1.25);
    EXPECT_THROW(parse_delta_rule("t^2x"), std::invalid_argument);
    EXPECT_EQ(parse_algorithm("gap"), Algorithm::GapGreedy);
    EXPECT_THROW(parse_algorithm("wspd"), std::invalid_argument);
}

TEST(Experiment, RowCountAndDeterminism) {
    ExperimentConfig cfg;
    cfg.n = 120;
    cfg.ts = {1.5, 2.0};
    cfg.deltas = {parse_delta_rule("t"), parse_delta_rule("t^0.9"), parse_delta_rule("sqrt")};
    cfg.algorithms = {Algorithm::DeltaGreedy, Algorithm::ThetaGraph, Algorithm::GreedyOnTheta,
                      Algorithm::GapGreedy, Algorithm::PathGreedy};
    cfg.seeds = {1, 2};
    // delta-greedy 2x3, theta 2, greedy-on-theta 2x2 (t itself is not < t), gap 2, path 2.
    const auto rows = run_experiment(cfg);
    EXPECT_EQ(rows.size(), 6u + 2u + 4u + 2u + 2u);
    std::ostringstream a, b;
    write_csv(a, rows);
    cfg.threads = 3;
    write_csv(b, run_experiment(cfg));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(count_of(a.str(), "\n"), int(rows.size()) + 1);
    for (const auto& r : rows) {
        EXPECT_TRUE(r.error.empty()) << r.error;
        EXPECT_EQ(r.runs, 2u);
    }
    EXPECT_NE(format_table(rows).find("theta-graph"), std::string::npos);
}

TEST(Experiment, FailingCellIsReportedAndOthersContinue) {
    ExperimentConfig cfg;
    cfg.n = 40;
    cfg.ts = {1.5};
    cfg.deltas = {parse_delta_rule("1.8"), parse_delta_rule("t")};  // 1.8 > t is invalid
    cfg.algorithms = {Algorithm::DeltaGreedy};
    cfg.seeds = {1};
    const auto rows = run_experiment(cfg);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_FALSE(rows[0].error.empty());
    EXPECT_EQ(rows[0].runs, 0u);
    EXPECT_TRUE(rows[1].error.empty());
    EXPECT_EQ(rows[1].runs, 1u);
    EXPECT_NE(format_table(rows).find("failed"), std::string::npos);
}
