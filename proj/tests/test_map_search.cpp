#include "support.hpp"

#include "blockselect/errors.hpp"
#include "blockselect/map_search.hpp"
#include "blockselect/synth.hpp"

#include <doctest.h>

#include <map>

using namespace blockselect;

namespace {

// Share of vertices on which two labelings agree under the best block
// matching (k is small, so every permutation is tried).
double agreement(const std::vector<Block> &a, const std::vector<Block> &b, Block k) {
    std::vector<std::vector<int>> table(k, std::vector<int>(k, 0));
    for (std::size_t u = 0; u < a.size(); ++u)
        ++table[static_cast<std::size_t>(a[u])][static_cast<std::size_t>(b[u])];
    std::vector<Block> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    int best = 0;
    do {
        int hit = 0;
        for (Block s = 0; s < k; ++s)
            hit += table[static_cast<std::size_t>(s)][static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])];
        best = std::max(best, hit);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<double>(best) / static_cast<double>(a.size());
}

bool locally_optimal(const Graph &g, const BlockState &s, Family family, const PriorConfig &priors) {
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Block t = 0; t < s.num_blocks(); ++t)
            if (t != s.label(u) && score_delta(g, s, u, t, family, priors) > 1e-10)
                return false;
    return true;
}

} // namespace

TEST_CASE("family names") {
    CHECK(to_string(Family::vanilla) == "sbm");
    CHECK(to_string(Family::degree_corrected) == "dcsbm");
    CHECK(family_from_string("dcsbm") == Family::degree_corrected);
    CHECK(family_from_string("sbm") == Family::vanilla);
    CHECK_THROWS_AS(family_from_string("poisson"), InputError);
}

TEST_CASE("schedule endpoints") {
    Schedule s;
    CHECK(s.at(0, 10) == doctest::Approx(0.2));
    CHECK(s.at(9, 10) == doctest::Approx(5.0));
    CHECK(s.at(0, 1) == doctest::Approx(5.0));
    s.shape = Schedule::Shape::linear;
    CHECK(s.at(5, 11) == doctest::Approx(2.6));
}

TEST_CASE("config validation") {
    const Graph g = testing::triangle();
    ChainConfig c;
    c.k = 0;
    CHECK_THROWS_AS(find_map(g, c, PriorConfig::uniform()), InputError);
    c = {};
    c.sweeps = 0;
    CHECK_THROWS_AS(find_map(g, c, PriorConfig::uniform()), InputError);
    c = {};
    c.schedule.beta_start = 6.0;
    CHECK_THROWS_AS(find_map(g, c, PriorConfig::uniform()), InputError);
    c = {};
    c.initial_labels = std::vector<Block>{0, 0};
    CHECK_THROWS_AS(find_map(g, c, PriorConfig::uniform()), InputError);
    CHECK_THROWS_AS(find_map(Graph(), ChainConfig{}, PriorConfig::uniform()), InputError);
}

TEST_CASE("one block needs one sweep") {
    std::mt19937_64 rng(61);
    const Graph g = testing::random_graph(30, 0.2, rng);
    ChainConfig c;
    c.k = 1;
    c.restarts = 2;
    const auto r = find_map(g, c, PriorConfig::uniform());
    CHECK(std::all_of(r.state.labels().begin(), r.state.labels().end(), [](Block b) { return b == 0; }));
    CHECK(r.score.total == doctest::Approx(sbm_log_icl(g, r.state, PriorConfig::uniform()).total));
    for (const auto &p : r.trace)
        CHECK(p.sweep <= 1);
}

TEST_CASE("more blocks than vertices warns") {
    const Graph g = testing::triangle();
    ChainConfig c;
    c.k = 5;
    c.sweeps = 5;
    const auto r = find_map(g, c, PriorConfig::uniform());
    CHECK(r.warnings.size() == 1);
}

TEST_CASE("strong planted partition is recovered") {
    const auto sample = sample_sbm(SbmSpec::planted(1000, 5, 0.1, 0.01, 62));
    for (Family f : {Family::vanilla, Family::degree_corrected}) {
        ChainConfig c;
        c.family = f;
        c.k = 5;
        c.seed = 3;
        const auto r = find_map(sample.graph, c, PriorConfig::uniform());
        CHECK(agreement(sample.labels, r.state.labels(), 5) >= 0.95);
    }
}

TEST_CASE("greedy polish") {
    const auto sample = sample_sbm(SbmSpec::planted(200, 4, 0.3, 0.02, 63));
    const auto u = PriorConfig::uniform();
    const auto planted = BlockState::from_labels(sample.graph, sample.labels, 4);

    SUBCASE("fixes one misplaced vertex in a single pass") {
        auto labels = sample.labels;
        labels[17] = (labels[17] + 1) % 4;
        std::vector<double> passes;
        const auto fixed = greedy_finish(sample.graph, BlockState::from_labels(sample.graph, labels, 4),
                                         Family::vanilla, u, &passes);
        CHECK(fixed.label(17) == sample.labels[17]);
        CHECK(passes.size() <= 2);
    }
    SUBCASE("leaves a local optimum alone") {
        const auto once = greedy_finish(sample.graph, planted, Family::vanilla, u);
        const auto twice = greedy_finish(sample.graph, once, Family::vanilla, u);
        CHECK(twice == once);
    }
    SUBCASE("output admits no improving single move") {
        std::mt19937_64 rng(64);
        for (Family f : {Family::vanilla, Family::degree_corrected}) {
            const auto start = BlockState::from_labels(sample.graph, testing::random_labels(200, 4, rng), 4);
            CHECK(locally_optimal(sample.graph, greedy_finish(sample.graph, start, f, u), f, u));
        }
    }
}

TEST_CASE("merge-split never lowers the score") {
    std::mt19937_64 rng(65);
    const auto sample = sample_sbm(SbmSpec::planted(150, 3, 0.3, 0.03, 66));
    const auto u = PriorConfig::uniform();
    for (Family f : {Family::vanilla, Family::degree_corrected}) {
        const auto start = BlockState::from_labels(sample.graph, testing::random_labels(150, 4, rng), 4);
        const auto out = merge_split(sample.graph, start, f, u, 9);
        CHECK(score_state(sample.graph, out, f, u).total >= score_state(sample.graph, start, f, u).total);
        CHECK_NOTHROW(out.check_consistent(sample.graph));
    }
}

TEST_CASE("results depend only on the inputs") {
    const auto sample = sample_sbm(SbmSpec::planted(120, 3, 0.3, 0.03, 67));
    ChainConfig c;
    c.k = 3;
    c.sweeps = 30;
    c.restarts = 3;
    c.seed = 99;
    const auto a = find_map(sample.graph, c, PriorConfig::uniform());
    c.jobs = 3;
    const auto b = find_map(sample.graph, c, PriorConfig::uniform());
    CHECK(a.state == b.state);
    CHECK(a.score.total == b.score.total);
    CHECK(a.chain_id == b.chain_id);
    CHECK(a.accepted_moves == b.accepted_moves);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i)
        CHECK(a.trace[i].best_score == b.trace[i].best_score);
}

TEST_CASE("more restarts never score lower") {
    const auto sample = sample_sbm(SbmSpec::planted(100, 4, 0.25, 0.05, 68));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ChainConfig c;
        c.k = 4;
        c.sweeps = 10;
        c.seed = seed;
        c.merge_split = false;
        c.restarts = 1;
        const double one = find_map(sample.graph, c, PriorConfig::uniform()).score.total;
        c.restarts = 3;
        CHECK(find_map(sample.graph, c, PriorConfig::uniform()).score.total >= one);
    }
}

TEST_CASE("given initial labels seed every chain") {
    const auto sample = sample_sbm(SbmSpec::planted(150, 3, 0.3, 0.02, 69));
    ChainConfig c;
    c.k = 3;
    c.sweeps = 1;
    c.restarts = 1;
    c.schedule.beta_start = c.schedule.beta_end = 50.0;
    c.initial_labels = sample.labels;
    const auto r = find_map(sample.graph, c, PriorConfig::uniform());
    const auto planted = BlockState::from_labels(sample.graph, sample.labels, 3);
    CHECK(r.score.total >= sbm_log_icl(sample.graph, planted, PriorConfig::uniform()).total);
}
