#include "cvm2d/thermo.hpp"

#include <cmath>
#include <string>

#include "cvm2d/errors.hpp"

namespace cvm2d {

double h_from_eps1(double eps1) { return std::exp(2.0 * eps1); }

double eps1_from_h(double h) {
    if (!(h > 0.0)) throw DomainError("h must be positive, got " + std::to_string(h));
    return std::log(h) / 2.0;
}

double lf(double v) {
    if (v < 0.0) throw DomainError("lf requires a non-negative argument, got " + std::to_string(v));
    if (v == 0.0) return 0.0;
    return v * std::log(v) - v;
}

double enthalpy(const ConfigVars& cv, const EnthalpyParams& p) {
    return p.eps0 * cv.x1 + 2.0 * p.eps1 * (-cv.z1 + cv.z3 + cv.z4 - cv.z6);
}

double enthalpy_pair_form(const ConfigVars& cv, const EnthalpyParams& p) {
    return p.eps0 * cv.x1 + 2.0 * p.eps1 * (2.0 * cv.y2 - cv.y1 - cv.y3);
}

double entropy(const ConfigVars& cv) {
    const double y = kBeta[0] * lf(cv.y1) + kBeta[1] * lf(cv.y2) + kBeta[2] * lf(cv.y3);
    const double w = kBeta[0] * lf(cv.w1) + kBeta[1] * lf(cv.w2) + kBeta[2] * lf(cv.w3);
    const double x = lf(cv.x1) + lf(cv.x2);
    const double z = kGamma[0] * lf(cv.z1) + kGamma[1] * lf(cv.z2) + kGamma[2] * lf(cv.z3) +
                     kGamma[3] * lf(cv.z4) + kGamma[4] * lf(cv.z5) + kGamma[5] * lf(cv.z6);
    return 2.0 * y + w - x - 2.0 * z;
}

double free_energy(const ConfigVars& cv, const EnthalpyParams& p) {
    return enthalpy(cv, p) - entropy(cv);
}

}  // namespace cvm2d
