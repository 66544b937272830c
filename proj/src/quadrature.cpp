#include "parabound/quadrature.hpp"

#include <stdexcept>

namespace parabound {

const std::vector<std::pair<double, double>>& gauss_legendre_01(int n) {
    // nodes/weights on [-1,1] mapped once to [0,1]
    static const std::vector<std::vector<std::pair<double, double>>> tables = [] {
        std::vector<std::vector<std::pair<double, double>>> t(6);
        auto map01 = [](std::vector<std::pair<double, double>> pts) {
            for (auto& p : pts) {
                p.first = 0.5 * (p.first + 1.0);
                p.second *= 0.5;
            }
            return pts;
        };
        t[1] = map01({{0.0, 2.0}});
        t[2] = map01({{-0.5773502691896257645091488, 1.0},
                      {0.5773502691896257645091488, 1.0}});
        t[3] = map01({{-0.7745966692414833770358531, 5.0 / 9.0},
                      {0.0, 8.0 / 9.0},
                      {0.7745966692414833770358531, 5.0 / 9.0}});
        t[4] = map01({{-0.8611363115940525752239465, 0.3478548451374538573730639},
                      {-0.3399810435848562648026658, 0.6521451548625461426269361},
                      {0.3399810435848562648026658, 0.6521451548625461426269361},
                      {0.8611363115940525752239465, 0.3478548451374538573730639}});
        t[5] = map01({{-0.9061798459386639927976269, 0.2369268850561890875142640},
                      {-0.5384693101056830910363144, 0.4786286704993664680412915},
                      {0.0, 0.5688888888888888888888889},
                      {0.5384693101056830910363144, 0.4786286704993664680412915},
                      {0.9061798459386639927976269, 0.2369268850561890875142640}});
        return t;
    }();
    if (n < 1 || n > 5) throw std::invalid_argument("gauss_legendre_01: n must be 1..5");
    return tables[static_cast<std::size_t>(n)];
}

namespace {

struct TriOrbit {
    double w; // weight relative to triangle area
    double a, b, c;
    int type; // 1: centroid, 3: (a,b,b) orbit, 6: full orbit
};

// Symmetric rules on the reference triangle, barycentric coordinates.
std::vector<TriOrbit> tri_rule_orbits(int degree) {
    if (degree <= 2) {
        return {{1.0 / 3.0, 0.0, 0.5, 0.5, 3}}; // edge midpoints, degree 2
    }
    if (degree <= 4) {
        return {{0.223381589678011, 0.108103018168070, 0.445948490915965, 0.445948490915965, 3},
                {0.109951743655322, 0.816847572980459, 0.091576213509771, 0.091576213509771, 3}};
    }
    if (degree <= 5) {
        return {{0.225, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 1},
                {0.132394152788506, 0.059715871789770, 0.470142064105115, 0.470142064105115, 3},
                {0.125939180544827, 0.797426985353087, 0.101286507323456, 0.101286507323456, 3}};
    }
    // degree 8 (Dunavant), 16 points, positive weights
    return {{0.144315607677787, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 1},
            {0.095091634413245, 0.081414823414554, 0.459292588292723, 0.459292588292723, 3},
            {0.103217370534718, 0.658861384496480, 0.170569307751760, 0.170569307751760, 3},
            {0.032458497623198, 0.898905543365938, 0.050547228317031, 0.050547228317031, 3},
            {0.027230314174435, 0.008394777409958, 0.263112829634638, 0.728492392955404, 6}};
}

void push_bary(std::vector<QuadPoint>& out, Vec2 p0, Vec2 p1, Vec2 p2, double area,
               double a, double b, double c, double w) {
    out.push_back({{a * p0.x + b * p1.x + c * p2.x, a * p0.y + b * p1.y + c * p2.y}, w * area});
}

} // namespace

std::vector<QuadPoint> cell_rule(const Subdomain& cell, int order) {
    std::vector<QuadPoint> out;
    if (cell.kind == ShapeKind::Rectangle) {
        const auto& g = gauss_legendre_01(order);
        const double hx = cell.extent[0], hy = cell.extent[1];
        for (const auto& gx : g)
            for (const auto& gy : g)
                out.push_back({{cell.origin[0] + hx * gx.first, cell.origin[1] + hy * gy.first},
                               gx.second * gy.second * hx * hy});
        return out;
    }
    if (cell.kind == ShapeKind::Triangle) {
        int degree = order <= 2 ? 4 : (order == 3 ? 5 : 8);
        const Vec2 p0 = cell.vertex2(0), p1 = cell.vertex2(1), p2 = cell.vertex2(2);
        for (const auto& o : tri_rule_orbits(degree)) {
            if (o.type == 1) {
                push_bary(out, p0, p1, p2, cell.measure, o.a, o.b, o.c, o.w);
            } else if (o.type == 3) {
                push_bary(out, p0, p1, p2, cell.measure, o.a, o.b, o.c, o.w);
                push_bary(out, p0, p1, p2, cell.measure, o.b, o.a, o.c, o.w);
                push_bary(out, p0, p1, p2, cell.measure, o.b, o.c, o.a, o.w);
            } else {
                const double abc[3] = {o.a, o.b, o.c};
                const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                for (const auto& p : perms)
                    push_bary(out, p0, p1, p2, cell.measure, abc[p[0]], abc[p[1]], abc[p[2]], o.w);
            }
        }
        return out;
    }
    throw GeometryError("cell_rule: unsupported cell shape for field quadrature");
}

std::vector<QuadPoint> segment_rule(Vec2 a, Vec2 b, int order) {
    std::vector<QuadPoint> out;
    const double len = (b - a).norm();
    for (const auto& g : gauss_legendre_01(order))
        out.push_back({{a.x + (b.x - a.x) * g.first, a.y + (b.y - a.y) * g.first},
                       g.second * len});
    return out;
}

std::vector<TimePoint> time_rule(const std::vector<double>& time_nodes, int points_per_slab,
                                 int subdiv) {
    std::vector<TimePoint> out;
    const auto& g = gauss_legendre_01(points_per_slab);
    for (std::size_t k = 0; k + 1 < time_nodes.size(); ++k) {
        const double t0 = time_nodes[k], t1 = time_nodes[k + 1];
        const double dt = (t1 - t0) / subdiv;
        for (int s = 0; s < subdiv; ++s) {
            const double a = t0 + s * dt;
            for (const auto& gp : g)
                out.push_back({a + dt * gp.first, gp.second * dt, static_cast<int>(k)});
        }
    }
    return out;
}

} // namespace parabound
