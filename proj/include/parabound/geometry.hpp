#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace parabound {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Thrown when a requested decomposition or cell geometry is invalid.
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

enum class ShapeKind { Interval, Rectangle, Box, Triangle };

/// One convex cell of the decomposition. Rectangles/boxes are axis-aligned
/// and carry origin/extent; triangles carry their vertex list.
struct Subdomain {
    int id = -1;
    ShapeKind kind = ShapeKind::Rectangle;
    int dim = 2;
    std::vector<std::array<double, 3>> vertices;
    std::array<double, 3> origin{};
    std::array<double, 3> extent{};
    double measure = 0.0;
    double diameter = 0.0;

    Vec2 vertex2(int i) const { return {vertices[i][0], vertices[i][1]}; }
};

Subdomain make_interval(int id, double x0, double h);
Subdomain make_rectangle(int id, double x0, double y0, double hx, double hy);
Subdomain make_box(int id, const std::array<double, 3>& origin,
                   const std::array<double, 3>& extent);
Subdomain make_triangle(int id, Vec2 a, Vec2 b, Vec2 c);

double triangle_area(Vec2 a, Vec2 b, Vec2 c);

/// True if p lies inside (or on the boundary of) the convex hull of poly.
bool point_in_convex(const std::vector<Vec2>& poly, Vec2 p, double tol = 1e-12);

/// Contained-in test used by the trace-constant monotonicity bound.
bool subdomain_contained_in(const Subdomain& inner, const Subdomain& outer,
                            double tol = 1e-12);

} // namespace parabound
