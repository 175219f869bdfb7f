#include "blockselect/sbm_icl.hpp"

#include "blockselect/errors.hpp"
#include "blockselect/special.hpp"
#include "move_terms.hpp"

#include <cmath>
#include <limits>

namespace blockselect {

namespace detail {

void require_matching(const Graph &g, const BlockState &state) {
    if (state.num_vertices() != g.num_vertices())
        throw InputError("block state covers " + std::to_string(state.num_vertices()) + " vertices, graph has " +
                         std::to_string(g.num_vertices()));
    Count degree_sum = 0;
    for (Block s = 0; s < state.num_blocks(); ++s)
        degree_sum += state.block_degree(s);
    if (state.total_edges() != g.num_edges() || degree_sum != 2 * g.num_edges())
        throw InputError("block state statistics do not match the graph");
}

} // namespace detail

namespace {

// m ln p + (N - m) ln(1 - p) with the 0 ln 0 = 0 convention; -inf when the
// data is impossible under p.
double bernoulli_block_term(Count m, Count N, double p) {
    const double hit = static_cast<double>(m);
    const double miss = static_cast<double>(N - m);
    if ((hit > 0 && p <= 0.0) || (miss > 0 && p >= 1.0))
        return -std::numeric_limits<double>::infinity();
    return xlogy(hit, p) + xlogy(miss, 1.0 - p);
}

thread_local NeighborCounts tl_counts;
thread_local detail::MoveStats tl_move;

} // namespace

double sbm_log_likelihood(const Graph &g, const BlockState &state, const SbmParams &params) {
    detail::require_matching(g, state);
    const Block k = state.num_blocks();
    if (params.q.size() != static_cast<std::size_t>(k) || params.p.size() != k)
        throw InputError("parameter dimensions do not match k");
    double ll = 0.0;
    for (Block s = 0; s < k; ++s) {
        const double q = params.q[static_cast<std::size_t>(s)];
        if (std::isnan(q))
            throw InputError("NaN block weight");
        const auto ns = static_cast<double>(state.block_size(s));
        if (ns > 0 && q <= 0.0)
            return -std::numeric_limits<double>::infinity();
        ll += xlogy(ns, q);
    }
    for (Block s = 0; s < k; ++s) {
        for (Block t = s; t < k; ++t) {
            const double p = params.p(s, t);
            if (std::isnan(p))
                throw InputError("NaN edge probability");
            ll += bernoulli_block_term(state.pair_edges(s, t), state.slots(s, t), p);
        }
    }
    return ll;
}

SbmParams mle_params(const BlockState &state) {
    const Block k = state.num_blocks();
    const auto n = static_cast<double>(state.num_vertices());
    SbmParams out;
    out.q.resize(static_cast<std::size_t>(k));
    out.p = SymmetricMatrix(k);
    for (Block s = 0; s < k; ++s)
        out.q[static_cast<std::size_t>(s)] = n > 0 ? static_cast<double>(state.block_size(s)) / n : 0.0;
    for (Block s = 0; s < k; ++s) {
        for (Block t = s; t < k; ++t) {
            const Count N = state.slots(s, t);
            out.p.set(s, t, N > 0 ? static_cast<double>(state.pair_edges(s, t)) / static_cast<double>(N) : 0.0);
        }
    }
    return out;
}

double sbm_vertex_term(const BlockState &state, const PriorConfig &priors) {
    const Block k = state.num_blocks();
    const double d = priors.delta;
    const double kd = static_cast<double>(k) * d;
    double term = log_gamma(kd) - static_cast<double>(k) * log_gamma(d) -
                  log_gamma(static_cast<double>(state.num_vertices()) + kd);
    for (Block s = 0; s < k; ++s)
        term += log_gamma(static_cast<double>(state.block_size(s)) + d);
    return term;
}

double sbm_edge_term(const BlockState &state, const PriorConfig &priors) {
    const Block k = state.num_blocks();
    double term = 0.0;
    for (Block s = 0; s < k; ++s)
        for (Block t = s; t < k; ++t)
            term += log_beta_ratio(static_cast<double>(state.pair_edges(s, t)), static_cast<double>(state.slots(s, t)),
                                   priors.alpha, priors.beta);
    return term;
}

ScoreBreakdown sbm_log_icl(const Graph &g, const BlockState &state, const PriorConfig &priors) {
    priors.validate();
    detail::require_matching(g, state);
    ScoreBreakdown out;
    out.vertex_term = sbm_vertex_term(state, priors);
    out.edge_term = sbm_edge_term(state, priors);
    out.total = out.vertex_term + out.edge_term;
    return out;
}

namespace detail {

double vanilla_move_delta(const MoveStats &mv, const PriorConfig &priors) {
    const double d = priors.delta;
    double delta = log_gamma(static_cast<double>(mv.size_from - 1) + d) +
                   log_gamma(static_cast<double>(mv.size_to + 1) + d) -
                   log_gamma(static_cast<double>(mv.size_from) + d) - log_gamma(static_cast<double>(mv.size_to) + d);
    for (const auto &p : mv.pairs) {
        if (p.edges_before == p.edges_after && p.slots_before == p.slots_after)
            continue;
        // the shared Beta normalizer cancels between before and after
        delta += log_gamma(static_cast<double>(p.edges_after) + priors.alpha) +
                 log_gamma(static_cast<double>(p.slots_after - p.edges_after) + priors.beta) -
                 log_gamma(static_cast<double>(p.slots_after) + priors.alpha + priors.beta);
        delta -= log_gamma(static_cast<double>(p.edges_before) + priors.alpha) +
                 log_gamma(static_cast<double>(p.slots_before - p.edges_before) + priors.beta) -
                 log_gamma(static_cast<double>(p.slots_before) + priors.alpha + priors.beta);
    }
    return delta;
}

} // namespace detail

double sbm_log_icl_delta(const Graph &g, const BlockState &state, Vertex u, Block t, const PriorConfig &priors) {
    detail::validate_move(state, u, t);
    if (state.label(u) == t)
        return 0.0;
    detail::collect_move_stats(g, state, u, t, tl_counts, tl_move);
    return detail::vanilla_move_delta(tl_move, priors);
}

} // namespace blockselect
