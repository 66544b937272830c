#include "parabound/geometry.hpp"

#include <algorithm>

namespace parabound {

namespace {

double max_pairwise_distance(const std::vector<std::array<double, 3>>& vs) {
    double d = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const double dx = vs[i][0] - vs[j][0];
            const double dy = vs[i][1] - vs[j][1];
            const double dz = vs[i][2] - vs[j][2];
            d = std::max(d, std::sqrt(dx * dx + dy * dy + dz * dz));
        }
    return d;
}

} // namespace

Subdomain make_interval(int id, double x0, double h) {
    if (h <= 0.0) throw GeometryError("interval length must be positive");
    Subdomain s;
    s.id = id;
    s.kind = ShapeKind::Interval;
    s.dim = 1;
    s.vertices = {{x0, 0, 0}, {x0 + h, 0, 0}};
    s.origin = {x0, 0, 0};
    s.extent = {h, 0, 0};
    s.measure = h;
    s.diameter = h;
    return s;
}

Subdomain make_rectangle(int id, double x0, double y0, double hx, double hy) {
    if (hx <= 0.0 || hy <= 0.0) throw GeometryError("rectangle sides must be positive");
    Subdomain s;
    s.id = id;
    s.kind = ShapeKind::Rectangle;
    s.dim = 2;
    s.vertices = {{x0, y0, 0}, {x0 + hx, y0, 0}, {x0 + hx, y0 + hy, 0}, {x0, y0 + hy, 0}};
    s.origin = {x0, y0, 0};
    s.extent = {hx, hy, 0};
    s.measure = hx * hy;
    s.diameter = std::hypot(hx, hy);
    return s;
}

Subdomain make_box(int id, const std::array<double, 3>& origin,
                   const std::array<double, 3>& extent) {
    for (double h : extent)
        if (h <= 0.0) throw GeometryError("box sides must be positive");
    Subdomain s;
    s.id = id;
    s.kind = ShapeKind::Box;
    s.dim = 3;
    for (int k = 0; k < 8; ++k) {
        s.vertices.push_back({origin[0] + ((k & 1) ? extent[0] : 0.0),
                              origin[1] + ((k & 2) ? extent[1] : 0.0),
                              origin[2] + ((k & 4) ? extent[2] : 0.0)});
    }
    s.origin = origin;
    s.extent = extent;
    s.measure = extent[0] * extent[1] * extent[2];
    s.diameter = std::sqrt(extent[0] * extent[0] + extent[1] * extent[1] +
                           extent[2] * extent[2]);
    return s;
}

double triangle_area(Vec2 a, Vec2 b, Vec2 c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

Subdomain make_triangle(int id, Vec2 a, Vec2 b, Vec2 c) {
    const double signed_area = triangle_area(a, b, c);
    if (std::abs(signed_area) < 1e-15)
        throw GeometryError("degenerate triangle cell");
    if (signed_area < 0.0) std::swap(b, c); // enforce counter-clockwise orientation
    Subdomain s;
    s.id = id;
    s.kind = ShapeKind::Triangle;
    s.dim = 2;
    s.vertices = {{a.x, a.y, 0}, {b.x, b.y, 0}, {c.x, c.y, 0}};
    s.measure = std::abs(signed_area);
    s.diameter = max_pairwise_distance(s.vertices);
    return s;
}

bool point_in_convex(const std::vector<Vec2>& poly, Vec2 p, double tol) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        if (cross < -tol) return false;
    }
    return true;
}

bool subdomain_contained_in(const Subdomain& inner, const Subdomain& outer, double tol) {
    if (inner.dim != outer.dim) return false;
    if (outer.dim == 3) {
        for (const auto& v : inner.vertices)
            for (int k = 0; k < 3; ++k)
                if (v[k] < outer.origin[k] - tol ||
                    v[k] > outer.origin[k] + outer.extent[k] + tol)
                    return false;
        return true;
    }
    std::vector<Vec2> hull;
    for (const auto& v : outer.vertices) hull.push_back({v[0], v[1]});
    for (const auto& v : inner.vertices)
        if (!point_in_convex(hull, {v[0], v[1]}, tol)) return false;
    return true;
}

} // namespace parabound
