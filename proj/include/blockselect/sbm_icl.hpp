#pragma once

#include "blockselect/block_state.hpp"
#include "blockselect/graph.hpp"
#include "blockselect/priors.hpp"

#include <vector>

namespace blockselect {

// Symmetric k x k matrix stored densely.
class SymmetricMatrix {
  public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(Block k, double fill = 0.0)
        : k_(k), values_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), fill) {}

    Block size() const { return k_; }
    double operator()(Block s, Block t) const { return values_[idx(s, t)]; }
    void set(Block s, Block t, double v) {
        values_[idx(s, t)] = v;
        values_[idx(t, s)] = v;
    }

  private:
    std::size_t idx(Block s, Block t) const {
        return static_cast<std::size_t>(s) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(t);
    }
    Block k_ = 0;
    std::vector<double> values_;
};

struct SbmParams {
    std::vector<double> q; // block weights on the simplex
    SymmetricMatrix p;     // edge probabilities in [0, 1]
};

// Natural-log factors of the integrated complete likelihood.
struct ScoreBreakdown {
    double vertex_term = 0.0; // ln P(V, g | M)
    double edge_term = 0.0;   // ln P(E, g | M)
    double theta_term = 0.0;  // ln P(Theta, g | M); zero for the vanilla SBM
    double total = 0.0;
};

// ln P(G, g | q, p). Returns -inf for impossible data (p_st = 0 with an edge,
// p_st = 1 with a non-edge); throws InputError on NaN parameters.
double sbm_log_likelihood(const Graph &g, const BlockState &state, const SbmParams &params);

// q_s = n_s / n, p_st = m_st / N_st (0 when N_st = 0).
SbmParams mle_params(const BlockState &state);

// Dirichlet-multinomial factor for the block sizes.
double sbm_vertex_term(const BlockState &state, const PriorConfig &priors);
// Product of Beta-Bernoulli factors over block pairs s <= t.
double sbm_edge_term(const BlockState &state, const PriorConfig &priors);

// Exact log-ICL with p and q integrated against their conjugate priors.
ScoreBreakdown sbm_log_icl(const Graph &g, const BlockState &state, const PriorConfig &priors);

// sbm_log_icl after moving u to t minus before, in O(d_u + k) time.
double sbm_log_icl_delta(const Graph &g, const BlockState &state, Vertex u, Block t, const PriorConfig &priors);

namespace detail {
// Cheap shape checks shared by the scoring entry points.
void require_matching(const Graph &g, const BlockState &state);
} // namespace detail

} // namespace blockselect
