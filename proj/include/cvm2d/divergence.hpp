#pragma once

#include <span>

#include "cvm2d/config_vars.hpp"

namespace cvm2d {

enum class ZeroHandling {
    epsilon_floor,  // floor model-side entries at eps_floor
    strict_error,   // throw when q > 0 meets p = 0
};

// q is the representation (data) side, p the model (minimized) side.
struct DivergenceOptions {
    ZeroHandling zero_handling = ZeroHandling::epsilon_floor;
    double eps_floor = 1e-9;
};

// Kullback-Leibler divergence sum q_i ln(q_i / p_i) with the 0*ln(0) = 0
// convention. Both inputs must have the same support size and sum to 1
// within 1e-9.
double kl_divergence(std::span<const double> q, std::span<const double> p,
                     const DivergenceOptions& options = {});

// Configuration-variable divergence between a representation q and a model p,
// mirroring the entropy's cluster structure:
//   D = 2 sum beta_i y_iq ln(y_iq/y_ip) + sum beta_i w_iq ln(w_iq/w_ip)
//       - sum x_iq ln(x_iq/x_ip) - 2 sum gamma_i z_iq ln(z_iq/z_ip)
// D may be negative; best-fit selection uses |D|. q-side zeros contribute 0;
// p-side zeros follow options.zero_handling. Both inputs must satisfy their
// normalizations within 1e-9.
double cvm_divergence(const ConfigVars& q, const ConfigVars& p,
                      const DivergenceOptions& options = {});

}  // namespace cvm2d
