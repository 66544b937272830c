#pragma once

#include "parabound/geometry.hpp"

#include <functional>

namespace parabound {

/// Symmetric 2x2 coefficient matrix value.
struct Mat2 {
    double a11 = 1.0, a12 = 0.0, a22 = 1.0;

    Vec2 apply(Vec2 v) const { return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y}; }
    Vec2 solve(Vec2 v) const {
        const double det = a11 * a22 - a12 * a12;
        return {(a22 * v.x - a12 * v.y) / det, (a11 * v.y - a12 * v.x) / det};
    }
    static Mat2 identity() { return {}; }
    static Mat2 diag(double a, double b) { return {a, 0.0, b}; }
};

/// Problem coefficients and data with their uniform bounds.
struct CoefficientField {
    std::function<Mat2(Vec2)> diffusion;              // A(x)
    std::function<double(Vec2)> reaction;             // rho(x) >= 0
    std::function<double(Vec2)> robin_coeff;          // sigma(x)
    std::function<double(Vec2, double)> source;       // f(x,t)
    std::function<double(Vec2, double)> robin_data;   // F(x,t) on Gamma_R
    std::function<double(Vec2)> initial_value;        // u0(x)

    double lambda_min = 1.0;   // lower spectral bound of A
    double lambda_max = 1.0;
    double reaction_bound = 1.0; // C_rho
    double robin_bound = 1.0;    // C_sigma

    static CoefficientField unit();
};

inline CoefficientField CoefficientField::unit() {
    CoefficientField c;
    c.diffusion = [](Vec2) { return Mat2::identity(); };
    c.reaction = [](Vec2) { return 1.0; };
    c.robin_coeff = [](Vec2) { return 1.0; };
    c.source = [](Vec2, double) { return 0.0; };
    c.robin_data = [](Vec2, double) { return 0.0; };
    c.initial_value = [](Vec2) { return 0.0; };
    return c;
}

/// Weights of the two-sided error measure: nu*|grad e|_A^2 + |theta e|^2
/// + zeta*|e(T)|^2 + chi*|sigma e|^2 on the Robin boundary.
struct MeasureWeights {
    double nu = 1.0;
    std::function<double(Vec2, double)> theta; // theta(x,t) >= 0
    double zeta = 1.0;
    double chi = 1.0;

    static MeasureWeights constant(double nu, double theta, double zeta, double chi) {
        MeasureWeights w;
        w.nu = nu;
        w.theta = [theta](Vec2, double) { return theta; };
        w.zeta = zeta;
        w.chi = chi;
        return w;
    }
};

/// Weights of the seven-term combined primal-dual norm.
struct CombinedNormWeights {
    double nu = 1.0;      // |grad(u-v)|_A^2
    double theta = 1.0;   // |y-p|_{A^{-1}}^2
    double zeta = 1.0;    // |div(p-y) - (u-v)_t|^2
    double kappa = 1.0;   // |rho (u-v)|^2
    double chi = 1.0;     // |(u-v)(T)|^2
    double vartheta = 1.0; // |sigma (u-v)|^2 on Gamma_R
    double varpi = 1.0;   // |(p-y).n|^2 on Gamma_R
};

} // namespace parabound
