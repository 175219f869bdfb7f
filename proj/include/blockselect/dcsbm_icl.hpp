#pragma once

#include "blockselect/block_state.hpp"
#include "blockselect/graph.hpp"
#include "blockselect/priors.hpp"
#include "blockselect/sbm_icl.hpp"

#include <vector>

namespace blockselect {

// Degree-corrected parameters. Propensities are normalized so they sum to
// n_s inside every block.
struct DcParams {
    std::vector<double> theta;
    SymmetricMatrix omega;
    std::vector<double> q;
};

// theta_u / n_{g(u)}: a point on the simplex of each block.
struct EtaParams {
    std::vector<double> eta;
};

EtaParams to_eta(const BlockState &state, const DcParams &params);

// ln P(G, g | theta, omega, q) for a simple graph (all A_uv! = 1):
// sum d_u ln theta_u + sum n_s ln q_s + sum_{s<=t} (m_st ln omega_st - N_st omega_st).
double dc_log_likelihood(const Graph &g, const BlockState &state, const DcParams &params);

// theta_u = d_u n_s / D_s (0 when D_s = 0), omega_st = m_st / N_st, q_s = n_s / n.
DcParams mle_dc_params(const Graph &g, const BlockState &state);

// ln P(Theta, g | M): the Dirichlet(gamma) integral over each block's eta
// simplex times prod_u n_{g(u)}^(d_u + 1). Empty blocks contribute 0.
double theta_log_factor(const Graph &g, const BlockState &state, const PriorConfig &priors);

// theta_log_factor plus the vanilla vertex and edge factors.
ScoreBreakdown dc_log_icl(const Graph &g, const BlockState &state, const PriorConfig &priors);

double dc_log_icl_delta(const Graph &g, const BlockState &state, Vertex u, Block t, const PriorConfig &priors);

} // namespace blockselect
