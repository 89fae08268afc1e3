#include "cvm2d/divergence.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "cvm2d/errors.hpp"

namespace cvm2d {

namespace {

constexpr double kNormTol = 1e-9;

// One q*ln(q/p) term under the shared zero conventions.
double term(double q, double p, const DivergenceOptions& options) {
    if (q < 0.0 || p < 0.0)
        throw ValidationError("divergence inputs must be non-negative");
    if (q == 0.0) return 0.0;
    if (p == 0.0 && options.zero_handling == ZeroHandling::strict_error) {
        std::ostringstream msg;
        msg << "model-side probability is 0 where the representation has " << q
            << " (strict zero handling)";
        throw DomainError(msg.str());
    }
    return q * std::log(q / std::max(p, options.eps_floor));
}

void require_normalized(double sum, const char* what) {
    if (std::abs(sum - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg << what << " is not normalized: sums to " << sum;
        throw ValidationError(msg.str());
    }
}

}  // namespace

double kl_divergence(std::span<const double> q, std::span<const double> p,
                     const DivergenceOptions& options) {
    if (q.size() != p.size() || q.empty()) {
        std::ostringstream msg;
        msg << "kl_divergence needs matching non-empty supports, got " << q.size() << " and "
            << p.size();
        throw ValidationError(msg.str());
    }
    require_normalized(std::accumulate(q.begin(), q.end(), 0.0), "q");
    require_normalized(std::accumulate(p.begin(), p.end(), 0.0), "p");

    double d = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) d += term(q[i], p[i], options);
    return d;
}

double cvm_divergence(const ConfigVars& q, const ConfigVars& p,
                      const DivergenceOptions& options) {
    for (const ConfigVars* cv : {&q, &p}) {
        require_normalized(cv->x1 + cv->x2, "x block");
        require_normalized(cv->y1 + 2 * cv->y2 + cv->y3, "y block");
        require_normalized(cv->w1 + 2 * cv->w2 + cv->w3, "w block");
        require_normalized(cv->z1 + 2 * cv->z2 + cv->z3 + cv->z4 + 2 * cv->z5 + cv->z6,
                           "z block");
    }

    const double y = kBeta[0] * term(q.y1, p.y1, options) + kBeta[1] * term(q.y2, p.y2, options) +
                     kBeta[2] * term(q.y3, p.y3, options);
    const double w = kBeta[0] * term(q.w1, p.w1, options) + kBeta[1] * term(q.w2, p.w2, options) +
                     kBeta[2] * term(q.w3, p.w3, options);
    const double x = term(q.x1, p.x1, options) + term(q.x2, p.x2, options);
    const double z = kGamma[0] * term(q.z1, p.z1, options) + kGamma[1] * term(q.z2, p.z2, options) +
                     kGamma[2] * term(q.z3, p.z3, options) + kGamma[3] * term(q.z4, p.z4, options) +
                     kGamma[4] * term(q.z5, p.z5, options) + kGamma[5] * term(q.z6, p.z6, options);
    return 2.0 * y + w - x - 2.0 * z;
}

}  // namespace cvm2d
