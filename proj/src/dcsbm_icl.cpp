#include "blockselect/dcsbm_icl.hpp"

#include "blockselect/errors.hpp"
#include "blockselect/special.hpp"
#include "move_terms.hpp"

#include <cmath>
#include <limits>

namespace blockselect {

namespace {

// The part of one block's theta factor that depends only on (n_s, D_s);
// the per-vertex ln Gamma(d_u + gamma) terms are added separately.
double theta_block_term(Count ns, Count Ds, double gamma) {
    if (ns == 0)
        return 0.0;
    const auto n = static_cast<double>(ns);
    const auto D = static_cast<double>(Ds);
    return log_gamma(n * gamma) - n * log_gamma(gamma) - log_gamma(D + n * gamma) + (D + n) * std::log(n);
}

thread_local NeighborCounts tl_counts;
thread_local detail::MoveStats tl_move;

} // namespace

EtaParams to_eta(const BlockState &state, const DcParams &params) {
    EtaParams out;
    out.eta.resize(params.theta.size());
    for (std::size_t u = 0; u < params.theta.size(); ++u)
        out.eta[u] = params.theta[u] / static_cast<double>(state.block_size(state.label(static_cast<Vertex>(u))));
    return out;
}

double dc_log_likelihood(const Graph &g, const BlockState &state, const DcParams &params) {
    detail::require_matching(g, state);
    const Block k = state.num_blocks();
    if (params.theta.size() != static_cast<std::size_t>(g.num_vertices()) ||
        params.q.size() != static_cast<std::size_t>(k) || params.omega.size() != k)
        throw InputError("parameter dimensions do not match the state");
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    double ll = 0.0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        const double th = params.theta[static_cast<std::size_t>(u)];
        if (std::isnan(th) || th < 0.0)
            throw InputError("invalid degree propensity");
        const auto d = static_cast<double>(g.degree(u));
        if (d > 0 && th == 0.0)
            return neg_inf;
        ll += xlogy(d, th);
    }
    for (Block s = 0; s < k; ++s) {
        const double q = params.q[static_cast<std::size_t>(s)];
        const auto ns = static_cast<double>(state.block_size(s));
        if (ns > 0 && q <= 0.0)
            return neg_inf;
        ll += xlogy(ns, q);
    }
    for (Block s = 0; s < k; ++s) {
        for (Block t = s; t < k; ++t) {
            const double w = params.omega(s, t);
            if (std::isnan(w) || w < 0.0)
                throw InputError("invalid Poisson rate");
            const auto m = static_cast<double>(state.pair_edges(s, t));
            if (m > 0 && w == 0.0)
                return neg_inf;
            ll += xlogy(m, w) - static_cast<double>(state.slots(s, t)) * w;
        }
    }
    return ll;
}

DcParams mle_dc_params(const Graph &g, const BlockState &state) {
    detail::require_matching(g, state);
    const auto vanilla = mle_params(state);
    DcParams out;
    out.q = vanilla.q;
    out.omega = vanilla.p;
    out.theta.resize(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        const Block s = state.label(u);
        const Count D = state.block_degree(s);
        out.theta[static_cast<std::size_t>(u)] =
            D > 0 ? static_cast<double>(g.degree(u)) * static_cast<double>(state.block_size(s)) / static_cast<double>(D)
                  : 0.0;
    }
    return out;
}

double theta_log_factor(const Graph &g, const BlockState &state, const PriorConfig &priors) {
    priors.validate();
    detail::require_matching(g, state);
    double total = 0.0;
    for (Block s = 0; s < state.num_blocks(); ++s)
        total += theta_block_term(state.block_size(s), state.block_degree(s), priors.gamma);
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        total += log_gamma(static_cast<double>(g.degree(u)) + priors.gamma);
    return total;
}

ScoreBreakdown dc_log_icl(const Graph &g, const BlockState &state, const PriorConfig &priors) {
    ScoreBreakdown out = sbm_log_icl(g, state, priors);
    out.theta_term = theta_log_factor(g, state, priors);
    out.total = out.vertex_term + out.edge_term + out.theta_term;
    return out;
}

double dc_log_icl_delta(const Graph &g, const BlockState &state, Vertex u, Block t, const PriorConfig &priors) {
    detail::validate_move(state, u, t);
    if (state.label(u) == t)
        return 0.0;
    detail::collect_move_stats(g, state, u, t, tl_counts, tl_move);
    const auto &mv = tl_move;
    const double gamma = priors.gamma;
    const Count d = mv.vertex_degree;
    // ln Gamma(d_u + gamma) travels with u and cancels
    const double theta_delta = theta_block_term(mv.size_from - 1, mv.degree_from - d, gamma) +
                               theta_block_term(mv.size_to + 1, mv.degree_to + d, gamma) -
                               theta_block_term(mv.size_from, mv.degree_from, gamma) -
                               theta_block_term(mv.size_to, mv.degree_to, gamma);
    return detail::vanilla_move_delta(mv, priors) + theta_delta;
}

} // namespace blockselect
