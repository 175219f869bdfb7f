#pragma once

#include "blockselect/block_state.hpp"
#include "blockselect/graph.hpp"
#include "blockselect/priors.hpp"
#include "blockselect/sbm_icl.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace blockselect::testing {

inline Graph make_graph(Vertex n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph random_graph(Vertex n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return make_graph(n, std::move(edges));
}

inline std::vector<Block> random_labels(Vertex n, Block k, std::mt19937_64 &rng) {
    std::uniform_int_distribution<Block> pick(0, k - 1);
    std::vector<Block> labels(static_cast<std::size_t>(n));
    for (auto &l : labels)
        l = pick(rng);
    return labels;
}

// Edge sets of all graphs on n vertices up to isomorphism, keeping the
// lexicographically smallest adjacency bitmask of each class.
inline std::vector<std::vector<Edge>> nonisomorphic_graphs(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<std::vector<int>> slot(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        slot[pairs[i].first][pairs[i].second] = static_cast<int>(i);
        slot[pairs[i].second][pairs[i].first] = static_cast<int>(i);
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::set<unsigned> seen;
    std::vector<std::vector<Edge>> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        unsigned canon = mask;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            unsigned image = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1u)
                    image |= 1u << slot[perm[pairs[i].first]][perm[pairs[i].second]];
            canon = std::min(canon, image);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(canon).second)
            continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (canon >> i & 1u)
                edges.push_back({pairs[i].first, pairs[i].second});
        out.push_back(std::move(edges));
    }
    return out;
}

// Gauss-Legendre rule on [0, 1].
template <int N>
struct UnitRule {
    std::vector<double> x, w;
    UnitRule() {
        using G = boost::math::quadrature::gauss<double, N>;
        const auto &a = G::abscissa();
        const auto &wt = G::weights();
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double signs = a[i] == 0.0 ? 1 : 2;
            for (int s = 0; s < signs; ++s) {
                const double t = s == 0 ? a[i] : -a[i];
                x.push_back(0.5 * (t + 1.0));
                w.push_back(0.5 * wt[i]);
            }
        }
    }
};

// Integral over [0,1]^d of f by a tensor-product rule.
template <int N>
double tensor_integral(int d, const std::function<double(const std::vector<double> &)> &f) {
    static const UnitRule<N> rule;
    std::vector<double> point(static_cast<std::size_t>(d));
    std::function<double(int)> rec = [&](int level) -> double {
        if (level == d)
            return f(point);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            point[static_cast<std::size_t>(level)] = rule.x[i];
            acc += rule.w[i] * rec(level + 1);
        }
        return acc;
    };
    return rec(0);
}

inline double log_beta_density(double p, double a, double b) {
    return std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + (a - 1) * std::log(p) + (b - 1) * std::log1p(-p);
}

// exp of the ICL for k <= 2 by integrating the likelihood against the priors
// over (q_0, p_00[, p_01, p_11]).
inline double quadrature_icl(const Graph &g, const BlockState &state, const PriorConfig &priors) {
    const Block k = state.num_blocks();
    const int dims = k == 1 ? 1 : 4;
    return tensor_integral<12>(dims, [&](const std::vector<double> &x) {
        SbmParams params;
        params.p = SymmetricMatrix(k);
        double log_prior = 0.0;
        if (k == 1) {
            params.q = {1.0};
            params.p.set(0, 0, x[0]);
            log_prior = log_beta_density(x[0], priors.alpha, priors.beta);
        } else {
            params.q = {x[0], 1.0 - x[0]};
            params.p.set(0, 0, x[1]);
            params.p.set(0, 1, x[2]);
            params.p.set(1, 1, x[3]);
            log_prior = log_beta_density(x[0], priors.delta, priors.delta);
            for (int i = 1; i < 4; ++i)
                log_prior += log_beta_density(x[static_cast<std::size_t>(i)], priors.alpha, priors.beta);
        }
        return std::exp(sbm_log_likelihood(g, state, params) + log_prior);
    });
}

// Integral of prod eta_u^d_u against Dirichlet(gamma) over the simplex of
// one block, by stick-breaking eta_j = x_j prod_{i<j} (1 - x_i).
inline double simplex_moment(const std::vector<Count> &degrees, double gamma) {
    const int size = static_cast<int>(degrees.size());
    if (size == 1)
        return 1.0;
    const double log_norm = std::lgamma(size * gamma) - size * std::lgamma(gamma);
    return tensor_integral<20>(size - 1, [&](const std::vector<double> &x) {
        double rest = 1.0, log_f = log_norm, jac = 1.0;
        for (int j = 0; j < size; ++j) {
            const double eta = j + 1 < size ? x[static_cast<std::size_t>(j)] * rest : rest;
            log_f += (static_cast<double>(degrees[static_cast<std::size_t>(j)]) + gamma - 1.0) * std::log(eta);
            if (j + 1 < size) {
                jac *= rest;
                rest *= 1.0 - x[static_cast<std::size_t>(j)];
            }
        }
        return jac * std::exp(log_f);
    });
}

// ln of the theta factor from the simplex integrals and the n_s^(d_u + 1)
// prefactor.
inline double quadrature_theta_factor(const Graph &g, const BlockState &state, double gamma) {
    double total = 0.0;
    for (Block s = 0; s < state.num_blocks(); ++s) {
        std::vector<Count> degrees;
        for (Vertex u = 0; u < g.num_vertices(); ++u)
            if (state.label(u) == s)
                degrees.push_back(g.degree(u));
        if (degrees.empty())
            continue;
        const double ns = static_cast<double>(degrees.size());
        const double Ds = static_cast<double>(std::accumulate(degrees.begin(), degrees.end(), Count{0}));
        total += std::log(simplex_moment(degrees, gamma)) + (Ds + ns) * std::log(ns);
    }
    return total;
}

// Eq. 7 style evaluation with factorials written out, uniform priors only.
inline double factorial_form_icl(const BlockState &state) {
    const Block k = state.num_blocks();
    auto lf = [](double x) { return std::lgamma(x + 1.0); };
    const double n = static_cast<double>(state.num_vertices());
    double v = lf(k - 1) - lf(n + k - 1);
    for (Block s = 0; s < k; ++s)
        v += lf(static_cast<double>(state.block_size(s)));
    double e = 0.0;
    for (Block s = 0; s < k; ++s)
        for (Block t = s; t < k; ++t) {
            const double m = static_cast<double>(state.pair_edges(s, t));
            const double N = static_cast<double>(state.slots(s, t));
            e += lf(m) + lf(N - m) - lf(N + 1);
        }
    return v + e;
}

// Block statistics recounted from labels alone.
struct Recount {
    std::vector<Count> sizes, degrees;
    std::vector<std::vector<Count>> edges;
};

inline Recount recount(const Graph &g, const std::vector<Block> &labels, Block k) {
    Recount r;
    r.sizes.assign(static_cast<std::size_t>(k), 0);
    r.degrees.assign(static_cast<std::size_t>(k), 0);
    r.edges.assign(static_cast<std::size_t>(k), std::vector<Count>(static_cast<std::size_t>(k), 0));
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        ++r.sizes[static_cast<std::size_t>(labels[static_cast<std::size_t>(u)])];
        r.degrees[static_cast<std::size_t>(labels[static_cast<std::size_t>(u)])] += g.degree(u);
    }
    for (const auto &e : g.edges()) {
        const auto a = static_cast<std::size_t>(labels[static_cast<std::size_t>(e.u)]);
        const auto b = static_cast<std::size_t>(labels[static_cast<std::size_t>(e.v)]);
        ++r.edges[a][b];
        if (a != b)
            ++r.edges[b][a];
    }
    return r;
}

inline bool matches_recount(const Graph &g, const BlockState &state) {
    const auto r = recount(g, state.labels(), state.num_blocks());
    for (Block s = 0; s < state.num_blocks(); ++s) {
        if (state.block_size(s) != r.sizes[static_cast<std::size_t>(s)] ||
            state.block_degree(s) != r.degrees[static_cast<std::size_t>(s)])
            return false;
        for (Block t = 0; t < state.num_blocks(); ++t)
            if (state.pair_edges(s, t) != r.edges[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)])
                return false;
    }
    return true;
}

} // namespace blockselect::testing
