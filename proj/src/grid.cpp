#include "parabound/grid.hpp"

#include <cmath>
#include <map>

namespace parabound {

namespace {

std::array<long long, 2> quant(Vec2 p, double q) {
    return {llround(p.x / q), llround(p.y / q)};
}

} // namespace

Grid::Grid(std::shared_ptr<const Partition> partition) : part_(std::move(partition)) {
    if (part_->dim != 2)
        throw GeometryError("field grids are supported on 2-D partitions only");

    double scale = 0.0;
    for (const auto& s : part_->subdomains) scale = std::max(scale, s.diameter);
    const double q = std::max(scale, 1.0) * 1e-12;

    std::map<std::array<long long, 2>, int> bank;
    auto node_id = [&](Vec2 p) {
        auto [it, inserted] = bank.try_emplace(quant(p, q), static_cast<int>(nodes_.size()));
        if (inserted) nodes_.push_back(p);
        return it->second;
    };

    cell_nodes_.resize(part_->subdomains.size());
    for (const auto& s : part_->subdomains) {
        auto& cn = cell_nodes_[static_cast<std::size_t>(s.id)];
        for (const auto& v : s.vertices) cn.push_back(node_id({v[0], v[1]}));
    }

    cell_faces_.resize(part_->subdomains.size());
    for (const auto& f : part_->faces) {
        cell_faces_[static_cast<std::size_t>(f.cell_minus)].push_back(f.id);
        if (!f.boundary()) cell_faces_[static_cast<std::size_t>(f.cell_plus)].push_back(f.id);
    }

    dirichlet_node_.assign(nodes_.size(), 0);
    for (const auto& f : part_->faces) {
        if (f.kind != Face::Kind::Dirichlet) continue;
        dirichlet_node_[static_cast<std::size_t>(node_id(f.a2()))] = 1;
        dirichlet_node_[static_cast<std::size_t>(node_id(f.b2()))] = 1;
    }

    // lumped RT0 mass: |f| * distance between cell centroid(s) projected on n
    face_weight_.assign(part_->faces.size(), 0.0);
    auto centroid = [&](int c) {
        Vec2 g{0, 0};
        const auto& s = part_->subdomains[static_cast<std::size_t>(c)];
        for (const auto& v : s.vertices) g += Vec2{v[0], v[1]};
        return g * (1.0 / static_cast<double>(s.vertices.size()));
    };
    for (const auto& f : part_->faces) {
        const Vec2 n = f.normal2();
        double depth = std::abs((centroid(f.cell_minus) - f.midpoint2()).dot(n));
        if (!f.boundary()) depth += std::abs((centroid(f.cell_plus) - f.midpoint2()).dot(n));
        face_weight_[static_cast<std::size_t>(f.id)] = std::max(f.measure * depth, 1e-300);
    }
}

double Grid::face_sign(int c, int f) const {
    return part_->faces[static_cast<std::size_t>(f)].cell_minus == c ? 1.0 : -1.0;
}

double Grid::face_dof_weight(int f) const { return face_weight_[static_cast<std::size_t>(f)]; }

Grid::Shape Grid::shape(int c, Vec2 x) const {
    const Subdomain& s = part_->subdomains[static_cast<std::size_t>(c)];
    Shape sh;
    if (s.kind == ShapeKind::Rectangle) {
        const double u = (x.x - s.origin[0]) / s.extent[0];
        const double v = (x.y - s.origin[1]) / s.extent[1];
        const double du = 1.0 / s.extent[0], dv = 1.0 / s.extent[1];
        sh.n = 4;
        // vertex order: (0,0), (1,0), (1,1), (0,1)
        sh.N = {(1 - u) * (1 - v), u * (1 - v), u * v, (1 - u) * v};
        sh.grad = {Vec2{-du * (1 - v), -(1 - u) * dv}, Vec2{du * (1 - v), -u * dv},
                   Vec2{du * v, u * dv}, Vec2{-du * v, (1 - u) * dv}};
        return sh;
    }
    if (s.kind == ShapeKind::Triangle) {
        const Vec2 p0 = s.vertex2(0), p1 = s.vertex2(1), p2 = s.vertex2(2);
        const double det = (p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y);
        const double l1 = ((x.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (x.y - p0.y)) / det;
        const double l2 = ((p1.x - p0.x) * (x.y - p0.y) - (x.x - p0.x) * (p1.y - p0.y)) / det;
        sh.n = 3;
        sh.N = {1.0 - l1 - l2, l1, l2, 0.0};
        sh.grad = {Vec2{(p1.y - p2.y) / det, (p2.x - p1.x) / det},
                   Vec2{(p2.y - p0.y) / det, (p0.x - p2.x) / det},
                   Vec2{(p0.y - p1.y) / det, (p1.x - p0.x) / det}, Vec2{}};
        return sh;
    }
    throw GeometryError("shape evaluation on unsupported cell kind");
}

Vec2 Grid::rt0_value(int c, Vec2 x, const double* q) const {
    const Subdomain& s = part_->subdomains[static_cast<std::size_t>(c)];
    const auto& cf = cell_faces_[static_cast<std::size_t>(c)];
    if (s.kind == ShapeKind::Rectangle) {
        // per-axis linear interpolation of the two opposite face fluxes
        double qw = 0, qe = 0, qs = 0, qn = 0;
        for (std::size_t i = 0; i < cf.size(); ++i) {
            const Face& f = part_->faces[static_cast<std::size_t>(cf[i])];
            const double val = q[i] * face_sign(c, cf[i]); // outward flux for this cell
            const Vec2 n = f.normal2() * face_sign(c, cf[i]);
            if (n.x < -0.5) qw = -val;      // x-component at west face = -outward
            else if (n.x > 0.5) qe = val;   // x-component at east face
            else if (n.y < -0.5) qs = -val;
            else qn = val;
        }
        const double u = (x.x - s.origin[0]) / s.extent[0];
        const double v = (x.y - s.origin[1]) / s.extent[1];
        return {qw + (qe - qw) * u, qs + (qn - qs) * v};
    }
    if (s.kind == ShapeKind::Triangle) {
        Vec2 y{0, 0};
        const double tol = 1e-9 * s.diameter;
        for (std::size_t i = 0; i < cf.size(); ++i) {
            const Face& f = part_->faces[static_cast<std::size_t>(cf[i])];
            // local face connects two vertices; opposite vertex is the remaining one
            Vec2 opp{};
            for (int vtx = 0; vtx < 3; ++vtx) {
                const Vec2 p = s.vertex2(vtx);
                if ((p - f.a2()).norm() > tol && (p - f.b2()).norm() > tol) opp = p;
            }
            const double coef = q[i] * face_sign(c, cf[i]) * f.measure / (2.0 * s.measure);
            y += coef * (x - opp);
        }
        return y;
    }
    throw GeometryError("rt0_value on unsupported cell kind");
}

double Grid::rt0_divergence(int c, const double* q) const {
    const auto& cf = cell_faces_[static_cast<std::size_t>(c)];
    const Subdomain& s = part_->subdomains[static_cast<std::size_t>(c)];
    KahanSum div;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        const Face& f = part_->faces[static_cast<std::size_t>(cf[i])];
        div.add(q[i] * face_sign(c, cf[i]) * f.measure);
    }
    return div.value() / s.measure;
}

double Grid::rt0_div_sensitivity(int c, int local_face) const {
    const auto& cf = cell_faces_[static_cast<std::size_t>(c)];
    const Face& f = part_->faces[static_cast<std::size_t>(cf[static_cast<std::size_t>(local_face)])];
    return face_sign(c, f.id) * f.measure / part_->subdomains[static_cast<std::size_t>(c)].measure;
}

double Grid::nodal_value(int c, Vec2 x, const double* u) const {
    const Shape sh = shape(c, x);
    const auto& cn = cell_nodes_[static_cast<std::size_t>(c)];
    double v = 0.0;
    for (int i = 0; i < sh.n; ++i) v += sh.N[static_cast<std::size_t>(i)] * u[cn[static_cast<std::size_t>(i)]];
    return v;
}

Vec2 Grid::nodal_gradient(int c, Vec2 x, const double* u) const {
    const Shape sh = shape(c, x);
    const auto& cn = cell_nodes_[static_cast<std::size_t>(c)];
    Vec2 g{0, 0};
    for (int i = 0; i < sh.n; ++i) g += u[cn[static_cast<std::size_t>(i)]] * sh.grad[static_cast<std::size_t>(i)];
    return g;
}

} // namespace parabound
