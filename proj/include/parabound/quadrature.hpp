#pragma once

#include "parabound/geometry.hpp"

#include <vector>

namespace parabound {

/// Compensated (Kahan) accumulator. All reductions in the library run through
/// this in a fixed index order so reports reproduce bit-for-bit.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct QuadPoint {
    Vec2 x;
    double w = 0.0;
};

/// Gauss-Legendre nodes/weights on [0,1], n in 1..5.
const std::vector<std::pair<double, double>>& gauss_legendre_01(int n);

/// Volume rule on a cell. `order` is points-per-axis on rectangles
/// (exact through degree 2*order-1); triangles map order to a symmetric
/// rule of at least comparable degree (2->deg4, 3->deg5, >=4->deg8).
std::vector<QuadPoint> cell_rule(const Subdomain& cell, int order);

/// Rule on the segment [a,b] (2-D boundary face), weights carry arc length.
std::vector<QuadPoint> segment_rule(Vec2 a, Vec2 b, int order);

/// Gauss points of one time slab [t0,t1]; `subdiv` splits the slab first.
struct TimePoint {
    double t = 0.0;
    double w = 0.0;
    int slab = 0;
};
std::vector<TimePoint> time_rule(const std::vector<double>& time_nodes, int points_per_slab = 2,
                                 int subdiv = 1);

} // namespace parabound
