#include "cvm2d/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvm2d/errors.hpp"

namespace cvm2d {

double delta(double h) { return -h * h + 6.0 * h - 1.0; }

namespace {

double checked_delta(double h) {
    const double d = delta(h);
    if (!(d > 0.0)) {
        std::ostringstream msg;
        msg << "analytic solution diverges at h = " << h << ": delta(h) = " << d
            << " <= 0 (roots at h = " << kDeltaRootLow << " and h = " << kDeltaRootHigh << ")";
        throw DomainError(msg.str());
    }
    return d;
}

// Raw curve values, defined wherever delta > 0 (no physical-branch check).
double y2_curve(double h) { return h * (3.0 - h) / (2.0 * delta(h)); }
double z3_curve(double h) { return (3.0 - h) * (h + 1.0) / (8.0 * delta(h)); }
double z1_curve(double h) { return (3.0 * h - 1.0) * (h + 1.0) / (8.0 * delta(h)); }

constexpr double kSearchLow = kDeltaRootLow + 1e-6;
constexpr double kSearchHigh = 3.0;

// Bisection inversion of a monotone curve on [kSearchLow, kSearchHigh].
// Returns nullopt and appends a note when the target is unattainable there.
std::optional<double> invert_curve(double (*f)(double), bool decreasing, const char* name,
                                   double target, std::vector<std::string>& notes) {
    const double f_lo = f(kSearchLow);
    const double f_hi = f(kSearchHigh);
    const double f_min = decreasing ? f_hi : f_lo;
    const double f_max = decreasing ? f_lo : f_hi;
    if (target < f_min || target > f_max) {
        std::ostringstream msg;
        msg << name << " = " << target << " is outside the attainable range [" << f_min << ", "
            << f_max << "] on h in [" << kSearchLow << ", " << kSearchHigh << "]";
        notes.push_back(msg.str());
        return std::nullopt;
    }
    double lo = kSearchLow, hi = kSearchHigh;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const bool go_right = decreasing ? (f(mid) > target) : (f(mid) < target);
        (go_right ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ConfigVars analytic_config_vars(double h) {
    const double d = checked_delta(h);
    ConfigVars cv;
    cv.x1 = 0.5;
    cv.x2 = 0.5;
    cv.y1 = (3.0 * h - 1.0) / (2.0 * d);
    cv.y2 = h * (3.0 - h) / (2.0 * d);
    cv.y3 = cv.y1;
    cv.w1 = (h + 1.0) * (h + 1.0) / (4.0 * d);
    cv.w2 = (3.0 * h - 1.0) * (3.0 - h) / (4.0 * d);
    cv.w3 = cv.w1;
    cv.z1 = (3.0 * h - 1.0) * (h + 1.0) / (8.0 * d);
    cv.z2 = (3.0 * h - 1.0) * (3.0 - h) / (8.0 * d);
    cv.z3 = (3.0 - h) * (h + 1.0) / (8.0 * d);
    cv.z4 = cv.z3;
    cv.z5 = cv.z2;
    cv.z6 = cv.z1;

    for (double v : {cv.y1, cv.y2, cv.w1, cv.w2, cv.z1, cv.z2, cv.z3}) {
        if (v < 0.0 || v > 1.0) {
            std::ostringstream msg;
            msg << "h = " << h << " lies outside the physical branch: a configuration variable "
                << "evaluates to " << v << " (valid h is roughly (1/3, 3))";
            throw DomainError(msg.str());
        }
    }
    return cv;
}

InterpretationTriple interpretation_triple(double h) {
    const ConfigVars cv = analytic_config_vars(h);
    return {cv.y2, cv.z3, cv.z1};
}

HRangeEstimate estimate_h_range(const ConfigVars& cv, const HRangeOptions& options) {
    if (std::abs(cv.x1 - 0.5) > 1e-9) {
        std::ostringstream msg;
        msg << "estimate_h_range requires x1 = 0.5 (equiprobable regime), got x1 = " << cv.x1;
        throw ValidationError(msg.str());
    }

    HRangeEstimate est;
    est.h_from_y2 = invert_curve(&y2_curve, true, "y2", cv.y2, est.notes);
    est.h_from_z3 = invert_curve(&z3_curve, true, "z3", cv.z3, est.notes);
    est.h_from_z1 = invert_curve(&z1_curve, false, "z1", cv.z1, est.notes);

    std::vector<double> recovered;
    for (const auto& v : {est.h_from_y2, est.h_from_z3, est.h_from_z1})
        if (v) recovered.push_back(*v);
    if (recovered.empty()) {
        std::string msg = "no interpretation-variable curve could be inverted:";
        for (const auto& n : est.notes) msg += "\n  " + n;
        throw DomainError(msg);
    }

    const auto [mn, mx] = std::minmax_element(recovered.begin(), recovered.end());
    est.lo = std::max(*mn - options.margin, kSearchLow);
    est.hi = std::min(*mx + options.margin, kSearchHigh);
    return est;
}

}  // namespace cvm2d
