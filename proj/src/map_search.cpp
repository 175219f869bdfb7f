#include "blockselect/map_search.hpp"

#include "blockselect/dcsbm_icl.hpp"
#include "blockselect/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <numeric>
#include <random>
#include <thread>

namespace blockselect {

std::string to_string(Family f) { return f == Family::vanilla ? "sbm" : "dcsbm"; }

Family family_from_string(const std::string &name) {
    if (name == "sbm" || name == "vanilla")
        return Family::vanilla;
    if (name == "dcsbm" || name == "dc" || name == "degree_corrected")
        return Family::degree_corrected;
    throw InputError("unknown model family '" + name + "'");
}

double Schedule::at(int sweep, int sweeps) const {
    if (sweeps <= 1)
        return beta_end;
    const double frac = static_cast<double>(sweep) / static_cast<double>(sweeps - 1);
    if (shape == Shape::linear)
        return beta_start + (beta_end - beta_start) * frac;
    return beta_start * std::pow(beta_end / beta_start, frac);
}

void ChainConfig::validate() const {
    if (k < 1)
        throw InputError("k must be at least 1");
    if (sweeps < 1)
        throw InputError("sweeps must be at least 1");
    if (split_sweeps < 1)
        throw InputError("split_sweeps must be at least 1");
    if (restarts < 1)
        throw InputError("restarts must be at least 1");
    if (!(schedule.beta_start > 0.0) || !(schedule.beta_start <= schedule.beta_end))
        throw InputError("schedule needs 0 < beta_start <= beta_end");
}

ScoreBreakdown score_state(const Graph &g, const BlockState &state, Family family, const PriorConfig &priors) {
    return family == Family::vanilla ? sbm_log_icl(g, state, priors) : dc_log_icl(g, state, priors);
}

double score_delta(const Graph &g, const BlockState &state, Vertex u, Block t, Family family,
                   const PriorConfig &priors) {
    return family == Family::vanilla ? sbm_log_icl_delta(g, state, u, t, priors)
                                     : dc_log_icl_delta(g, state, u, t, priors);
}

BlockState greedy_finish(const Graph &g, BlockState state, Family family, const PriorConfig &priors,
                         std::vector<double> *pass_scores, double min_gain) {
    const Block k = state.num_blocks();
    bool moved = true;
    while (moved) {
        moved = false;
        for (Vertex u = 0; u < g.num_vertices(); ++u) {
            Block best = state.label(u);
            double best_gain = min_gain;
            for (Block t = 0; t < k; ++t) {
                if (t == state.label(u))
                    continue;
                const double gain = score_delta(g, state, u, t, family, priors);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = t;
                }
            }
            if (best != state.label(u)) {
                state.move_vertex(g, u, best);
                moved = true;
            }
        }
        if (pass_scores)
            pass_scores->push_back(score_state(g, state, family, priors).total);
    }
    return state;
}

namespace {

std::vector<Vertex> members(const BlockState &state, Block b) {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < static_cast<Vertex>(state.labels().size()); ++u)
        if (state.label(u) == b)
            out.push_back(u);
    return out;
}

void merge_into(const Graph &g, BlockState &state, Block from, Block into) {
    for (Vertex u : members(state, from))
        state.move_vertex(g, u, into);
}

// Only the vertices of b move; everything else is held fixed.
void split_block(const Graph &g, BlockState &state, Block b, Block e, Family family, const PriorConfig &priors,
                 std::mt19937_64 &rng, int sweeps, bool grow) {
    auto vs = members(state, b);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (grow) {
        // two breadth-first regions inside b from random seeds; vertices
        // neither region reaches keep b
        std::vector<Block> side(static_cast<std::size_t>(g.num_vertices()), -1);
        std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
        const Vertex x = vs[pick(rng)];
        Vertex y = vs[pick(rng)];
        while (y == x)
            y = vs[pick(rng)];
        std::queue<Vertex> frontier;
        side[static_cast<std::size_t>(x)] = b;
        side[static_cast<std::size_t>(y)] = e;
        frontier.push(x);
        frontier.push(y);
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            for (Vertex v : g.neighbors(u)) {
                if (state.label(v) == b && side[static_cast<std::size_t>(v)] < 0) {
                    side[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(u)];
                    frontier.push(v);
                }
            }
        }
        for (Vertex u : vs)
            if (side[static_cast<std::size_t>(u)] == e)
                state.move_vertex(g, u, e);
    } else {
        std::bernoulli_distribution coin(0.5);
        for (Vertex u : vs)
            if (coin(rng))
                state.move_vertex(g, u, e);
    }
    const Schedule ramp{1.0, 5.0, Schedule::Shape::geometric};
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        const double beta = ramp.at(sweep, sweeps);
        std::shuffle(vs.begin(), vs.end(), rng);
        for (Vertex u : vs) {
            const Block t = state.label(u) == b ? e : b;
            const double delta = score_delta(g, state, u, t, family, priors);
            if (delta >= 0.0 || unit(rng) < std::exp(beta * delta))
                state.move_vertex(g, u, t);
        }
    }
}

} // namespace

BlockState merge_split(const Graph &g, BlockState state, Family family, const PriorConfig &priors,
                       std::uint64_t seed, int split_sweeps) {
    const Block k = state.num_blocks();
    if (k < 2)
        return state;
    constexpr std::size_t kMergeCandidates = 3;
    constexpr int kPatience = 3;
    int dry_rounds = 0;
    std::mt19937_64 rng(seed);
    double current = score_state(g, state, family, priors).total;
    for (;;) {
        // starting points: a state with a free label, either already empty
        // or freed by merging a cheap pair
        struct Start {
            double score;
            Block free;
            BlockState state;
        };
        std::vector<Start> starts;
        for (Block e = 0; e < k && starts.empty(); ++e)
            if (state.block_size(e) == 0)
                starts.push_back({current, e, state});
        if (starts.empty()) {
            for (Block s = 0; s < k; ++s)
                for (Block t = s + 1; t < k; ++t) {
                    BlockState merged = state;
                    merge_into(g, merged, t, s);
                    starts.push_back({score_state(g, merged, family, priors).total, t, std::move(merged)});
                }
            std::stable_sort(starts.begin(), starts.end(),
                             [](const Start &a, const Start &b) { return a.score > b.score; });
            if (starts.size() > kMergeCandidates)
                starts.resize(kMergeCandidates);
        }

        std::optional<BlockState> best;
        double best_score = -std::numeric_limits<double>::infinity();
        for (const auto &start : starts) {
            for (Block b = 0; b < k; ++b) {
                if (b == start.free || start.state.block_size(b) < 2)
                    continue;
                for (int variant = 0; variant < (family == Family::vanilla ? 2 : 4); ++variant) {
                    const bool grow = variant % 2 == 1;
                    const Family guide = variant < 2 ? family : Family::vanilla;
                    BlockState trial = start.state;
                    split_block(g, trial, b, start.free, guide, priors, rng, split_sweeps, grow);
                    const double score = score_state(g, trial, family, priors).total;
                    if (score > best_score) {
                        best_score = score;
                        best = std::move(trial);
                    }
                }
            }
        }
        if (!best)
            return state;
        BlockState polished = greedy_finish(g, std::move(*best), family, priors);
        const double score = score_state(g, polished, family, priors).total;
        if (!(score > current + 1e-9)) {
            // splits are random, so a dry round gets a few fresh tries
            if (++dry_rounds >= kPatience)
                return state;
            continue;
        }
        dry_rounds = 0;
        state = std::move(polished);
        current = score;
    }
}

namespace {

struct ChainOutcome {
    BlockState state;
    ScoreBreakdown score;
    std::vector<double> trace;
    std::int64_t accepted = 0;
};

ChainOutcome run_chain(const Graph &g, const ChainConfig &config, const PriorConfig &priors, int chain) {
    const Vertex n = g.num_vertices();
    const Block k = config.k;
    std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(chain));
    std::uniform_int_distribution<Block> pick_block(0, k - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Block> labels;
    if (config.initial_labels) {
        labels = *config.initial_labels;
    } else {
        labels.resize(static_cast<std::size_t>(n));
        for (auto &l : labels)
            l = pick_block(rng);
    }
    BlockState state = BlockState::from_labels(g, labels, k);
    double current = score_state(g, state, config.family, priors).total;
    ChainOutcome out;
    out.state = state;
    double best = current;

    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Vertex{0});
    // with one block every sweep is a no-op
    const int sweeps = k == 1 ? 1 : config.sweeps;
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        const double beta = config.schedule.at(sweep, sweeps);
        std::shuffle(order.begin(), order.end(), rng);
        for (Vertex u : order) {
            const Block t = pick_block(rng);
            if (t == state.label(u))
                continue;
            const double delta = score_delta(g, state, u, t, config.family, priors);
            if (delta >= 0.0 || unit(rng) < std::exp(beta * delta)) {
                state.move_vertex(g, u, t);
                current += delta;
                ++out.accepted;
                if (current > best) {
                    best = current;
                    out.state = state;
                }
            }
        }
        // resynchronize the running sum with an exact rescore
        current = score_state(g, state, config.family, priors).total;
        best = score_state(g, out.state, config.family, priors).total;
        out.trace.push_back(best);
    }
    if (config.merge_split && k > 1) {
        out.state = merge_split(g, std::move(out.state), config.family, priors, rng(), config.split_sweeps);
        out.trace.push_back(score_state(g, out.state, config.family, priors).total);
    }
    if (config.greedy_finish) {
        out.state = greedy_finish(g, std::move(out.state), config.family, priors);
    }
    out.score = score_state(g, out.state, config.family, priors);
    if (config.greedy_finish)
        out.trace.push_back(out.score.total);
    return out;
}

} // namespace

MapResult find_map(const Graph &g, const ChainConfig &config, const PriorConfig &priors) {
    config.validate();
    priors.validate();
    if (g.num_vertices() == 0)
        throw InputError("cannot search block assignments of an empty graph");
    if (config.initial_labels && config.initial_labels->size() != static_cast<std::size_t>(g.num_vertices()))
        throw InputError("initial labels do not cover every vertex");

    MapResult result;
    if (config.k > g.num_vertices())
        result.warnings.push_back("k = " + std::to_string(config.k) + " exceeds n = " +
                                  std::to_string(g.num_vertices()) + "; some blocks will stay empty");

    std::vector<ChainOutcome> outcomes(static_cast<std::size_t>(config.restarts));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int c = next++; c < config.restarts; c = next++)
            outcomes[static_cast<std::size_t>(c)] = run_chain(g, config, priors, c);
    };
    const int jobs = std::clamp(config.jobs, 1, config.restarts);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    // highest score wins, lower chain id breaks ties
    int winner = 0;
    for (int c = 1; c < config.restarts; ++c)
        if (outcomes[static_cast<std::size_t>(c)].score.total > outcomes[static_cast<std::size_t>(winner)].score.total)
            winner = c;
    for (int c = 0; c < config.restarts; ++c) {
        const auto &o = outcomes[static_cast<std::size_t>(c)];
        for (std::size_t s = 0; s < o.trace.size(); ++s)
            result.trace.push_back({static_cast<int>(s), c, o.trace[s]});
        result.accepted_moves += o.accepted;
    }
    auto &best = outcomes[static_cast<std::size_t>(winner)];
    result.state = std::move(best.state);
    result.score = best.score;
    result.chain_id = winner;
    return result;
}

} // namespace blockselect
