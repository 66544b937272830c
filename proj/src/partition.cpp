#include "parabound/partition.hpp"

#include "parabound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <nlohmann/json.hpp>

namespace parabound {

DomainSpec DomainSpec::rectangle(double w, double h, const std::vector<BoundarySegment>& b) {
    DomainSpec d;
    d.dim = 2;
    d.extent = {w, h, 0};
    d.boundary = b;
    d.validate();
    return d;
}

DomainSpec DomainSpec::box(const std::array<double, 3>& extent,
                           const std::vector<BoundarySegment>& b) {
    DomainSpec d;
    d.dim = 3;
    d.extent = extent;
    d.boundary = b;
    d.validate();
    return d;
}

DomainSpec DomainSpec::make_polygon(const std::vector<Vec2>& loop,
                                    const std::vector<BoundaryKind>& edge_kind) {
    if (loop.size() < 3 || edge_kind.size() != loop.size())
        throw DecompositionError("polygon domain needs one boundary kind per edge");
    DomainSpec d;
    d.dim = 2;
    d.polygon = loop;
    d.polygon_edge_kind = edge_kind;
    d.validate();
    return d;
}

std::vector<BoundarySegment> DomainSpec::sides(
    const std::vector<std::pair<int, BoundaryKind>>& s) {
    std::vector<BoundarySegment> out;
    for (auto [side, kind] : s) out.push_back({side, 0.0, 1.0, kind});
    return out;
}

bool DomainSpec::has_dirichlet() const {
    if (is_polygon()) {
        for (auto k : polygon_edge_kind)
            if (k == BoundaryKind::Dirichlet) return true;
        return false;
    }
    for (const auto& seg : boundary)
        if (seg.kind == BoundaryKind::Dirichlet && seg.t1 > seg.t0) return true;
    return false;
}

void DomainSpec::validate() const {
    bool has_robin = false;
    if (is_polygon()) {
        for (auto k : polygon_edge_kind) has_robin |= (k == BoundaryKind::Robin);
    } else {
        const int n_sides = 2 * dim;
        for (const auto& seg : boundary) {
            if (seg.side < 0 || seg.side >= n_sides)
                throw DecompositionError("boundary segment names a nonexistent side");
            if (!(seg.t0 >= -1e-12 && seg.t1 <= 1.0 + 1e-12 && seg.t0 < seg.t1))
                throw DecompositionError("boundary segment parameter range invalid");
            has_robin |= (seg.kind == BoundaryKind::Robin);
            if (dim == 3 && (seg.t0 > 1e-12 || seg.t1 < 1.0 - 1e-12))
                throw DecompositionError("3-D domains support whole-side boundary labels only");
        }
        // overlap check within each side
        for (std::size_t i = 0; i < boundary.size(); ++i)
            for (std::size_t j = i + 1; j < boundary.size(); ++j)
                if (boundary[i].side == boundary[j].side &&
                    boundary[i].t0 < boundary[j].t1 - 1e-12 &&
                    boundary[j].t0 < boundary[i].t1 - 1e-12)
                    throw DecompositionError("Dirichlet and Robin parts overlap");
    }
    if (!has_robin)
        throw DecompositionError("Robin part of the boundary must be nonempty");
}

namespace {

struct NodeBank {
    double quantum;
    std::map<std::array<long long, 3>, int> index;
    std::vector<std::array<double, 3>> coords;

    explicit NodeBank(double scale) : quantum(scale * 1e-12) {}

    int get(const std::array<double, 3>& p) {
        std::array<long long, 3> key{};
        for (int k = 0; k < 3; ++k) key[k] = llround(p[k] / quantum);
        auto [it, inserted] = index.try_emplace(key, static_cast<int>(coords.size()));
        if (inserted) coords.push_back(p);
        return it->second;
    }
};

// 2-D: faces are oriented cell edges; the key is the unordered node pair.
struct EdgeCollector {
    std::map<std::pair<int, int>, int> by_key;
    std::vector<Face>* faces;

    void add(NodeBank& bank, int cell, const std::array<double, 3>& a,
             const std::array<double, 3>& b) {
        const int ia = bank.get(a), ib = bank.get(b);
        const auto key = std::minmax(ia, ib);
        auto it = by_key.find({key.first, key.second});
        if (it == by_key.end()) {
            Face f;
            f.id = static_cast<int>(faces->size());
            f.vertices = {a, b};
            const double dx = b[0] - a[0], dy = b[1] - a[1];
            f.measure = std::hypot(dx, dy);
            // cell edges are traversed counter-clockwise, outward normal to the right
            f.normal = {dy / f.measure, -dx / f.measure, 0};
            f.cell_minus = cell;
            by_key.emplace(std::make_pair(key.first, key.second), f.id);
            faces->push_back(f);
        } else {
            (*faces)[it->second].cell_plus = cell;
        }
    }
};

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double t = std::clamp(ab.dot(p - a) / ab.dot(ab), 0.0, 1.0);
    const Vec2 q = a + t * ab;
    return (p - q).norm();
}

void assign_boundary_kinds(std::vector<Face>& faces, const DomainSpec& domain) {
    const double scale = domain.is_polygon()
                             ? 1.0
                             : std::max({domain.extent[0], domain.extent[1], domain.extent[2]});
    const double tol = 1e-9 * std::max(scale, 1.0);

    for (auto& f : faces) {
        if (!f.boundary()) {
            f.kind = Face::Kind::Interior;
            continue;
        }
        if (domain.is_polygon()) {
            const Vec2 mid = f.midpoint2();
            int edge = -1;
            for (std::size_t e = 0; e < domain.polygon.size(); ++e) {
                const Vec2 a = domain.polygon[e];
                const Vec2 b = domain.polygon[(e + 1) % domain.polygon.size()];
                if (dist_point_segment(mid, a, b) < tol &&
                    dist_point_segment(f.a2(), a, b) < tol &&
                    dist_point_segment(f.b2(), a, b) < tol) {
                    edge = static_cast<int>(e);
                    break;
                }
            }
            if (edge < 0) throw DecompositionError("boundary face lies on no polygon edge");
            f.kind = domain.polygon_edge_kind[static_cast<std::size_t>(edge)] == BoundaryKind::Robin
                         ? Face::Kind::Robin
                         : Face::Kind::Dirichlet;
            continue;
        }
        // axis-aligned domain: identify the side from the outward normal
        int side = -1;
        for (int ax = 0; ax < domain.dim; ++ax) {
            if (f.normal[ax] < -0.5) side = 2 * ax;
            if (f.normal[ax] > 0.5) side = 2 * ax + 1;
        }
        if (side < 0) throw DecompositionError("boundary face with unrecognized orientation");
        // parameter interval of the face along the side
        const int tangent_axis = (domain.dim == 2) ? 1 - side / 2 : -1;
        double ta = 0.0, tb = 1.0;
        if (domain.dim == 2) {
            const double lo = domain.origin[tangent_axis];
            const double len = domain.extent[tangent_axis];
            const double c0 = (f.vertices[0][tangent_axis] - lo) / len;
            const double c1 = (f.vertices[1][tangent_axis] - lo) / len;
            ta = std::min(c0, c1);
            tb = std::max(c0, c1);
        }
        const BoundarySegment* covering = nullptr;
        for (const auto& seg : domain.boundary) {
            if (seg.side != side) continue;
            if (ta >= seg.t0 - 1e-10 && tb <= seg.t1 + 1e-10) {
                covering = &seg;
                break;
            }
            const bool overlaps = ta < seg.t1 - 1e-10 && seg.t0 < tb - 1e-10;
            if (overlaps)
                throw DecompositionError(
                    "cell face straddles the Dirichlet/Robin split on side " +
                    std::to_string(side));
        }
        if (!covering)
            throw DecompositionError("boundary face not covered by any labeled segment on side " +
                                     std::to_string(side));
        f.kind = covering->kind == BoundaryKind::Robin ? Face::Kind::Robin
                                                       : Face::Kind::Dirichlet;
    }
}

void finalize(Partition& p, const DomainSpec& domain) {
    assign_boundary_kinds(p.faces, domain);
    p.interior_face_ids.clear();
    p.dirichlet_face_ids.clear();
    p.robin_face_ids.clear();
    for (const auto& f : p.faces) {
        if (!f.boundary())
            p.interior_face_ids.push_back(f.id);
        else if (f.kind == Face::Kind::Robin)
            p.robin_face_ids.push_back(f.id);
        else
            p.dirichlet_face_ids.push_back(f.id);
    }
    p.robin_groups = decompose_robin_boundary(p, domain);
    KahanSum total;
    for (const auto& s : p.subdomains) total.add(s.measure);
    p.total_measure = total.value();
    // default classification: everything in O_0 until classify_subdomains runs
    p.in_OP.assign(p.subdomains.size(), 0);
    p.set_OP.clear();
    p.set_O0.clear();
    for (const auto& s : p.subdomains) p.set_O0.push_back(s.id);
}

void triangulate_macro(Partition& p, NodeBank& bank, EdgeCollector& edges, Vec2 A, Vec2 B,
                       Vec2 C, int n) {
    auto node = [&](int i, int j) -> Vec2 {
        const double u = static_cast<double>(i) / n, v = static_cast<double>(j) / n;
        return {A.x + u * (B.x - A.x) + v * (C.x - A.x),
                A.y + u * (B.y - A.y) + v * (C.y - A.y)};
    };
    auto add_cell = [&](Vec2 a, Vec2 b, Vec2 c) {
        const int id = static_cast<int>(p.subdomains.size());
        Subdomain s = make_triangle(id, a, b, c);
        p.subdomains.push_back(s);
        for (int e = 0; e < 3; ++e)
            edges.add(bank, id, p.subdomains[id].vertices[e],
                      p.subdomains[id].vertices[(e + 1) % 3]);
    };
    for (int i = 0; i + 1 <= n; ++i)
        for (int j = 0; i + j + 1 <= n; ++j) {
            add_cell(node(i, j), node(i + 1, j), node(i, j + 1));
            if (i + j + 2 <= n)
                add_cell(node(i + 1, j), node(i + 1, j + 1), node(i, j + 1));
        }
}

} // namespace

Partition build_partition(const DomainSpec& domain, const std::vector<int>& resolution) {
    for (int r : resolution)
        if (r < 1) throw GeometryError("resolution must be at least 1 per axis");

    Partition p;
    p.dim = domain.dim;

    if (domain.is_polygon()) {
        const int n = resolution.at(0);
        NodeBank bank(1.0);
        EdgeCollector edges;
        edges.faces = &p.faces;
        if (domain.polygon.size() == 3) {
            triangulate_macro(p, bank, edges, domain.polygon[0], domain.polygon[1],
                              domain.polygon[2], n);
        } else {
            // fan triangulation around the centroid, then refine each macro triangle
            Vec2 c{0, 0};
            for (const auto& v : domain.polygon) c += v;
            c = c * (1.0 / static_cast<double>(domain.polygon.size()));
            for (std::size_t e = 0; e < domain.polygon.size(); ++e)
                triangulate_macro(p, bank, edges, domain.polygon[e],
                                  domain.polygon[(e + 1) % domain.polygon.size()], c, n);
        }
        for (const auto& s : p.subdomains) {
            std::vector<Vec2> hull = {s.vertex2(0), s.vertex2(1), s.vertex2(2)};
            if (triangle_area(hull[0], hull[1], hull[2]) <= 0)
                throw GeometryError("non-convex or inverted cell produced");
        }
        finalize(p, domain);
        return p;
    }

    if (domain.dim == 2) {
        const int nx = resolution.at(0), ny = resolution.at(1);
        const double hx = domain.extent[0] / nx, hy = domain.extent[1] / ny;
        NodeBank bank(std::max(domain.extent[0], domain.extent[1]));
        EdgeCollector edges;
        edges.faces = &p.faces;
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const int id = static_cast<int>(p.subdomains.size());
                Subdomain s = make_rectangle(id, domain.origin[0] + i * hx,
                                             domain.origin[1] + j * hy, hx, hy);
                p.subdomains.push_back(s);
                const auto& v = p.subdomains[id].vertices;
                for (int e = 0; e < 4; ++e) edges.add(bank, id, v[e], v[(e + 1) % 4]);
            }
        finalize(p, domain);
        return p;
    }

    // 3-D boxes
    const int nx = resolution.at(0), ny = resolution.at(1), nz = resolution.at(2);
    const double hx = domain.extent[0] / nx, hy = domain.extent[1] / ny,
                 hz = domain.extent[2] / nz;
    auto cell_id = [&](int i, int j, int k) { return (k * ny + j) * nx + i; };
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                p.subdomains.push_back(make_box(
                    cell_id(i, j, k),
                    {domain.origin[0] + i * hx, domain.origin[1] + j * hy,
                     domain.origin[2] + k * hz},
                    {hx, hy, hz}));
    // axis faces
    auto add_face = [&](int axis, int i, int j, int k) {
        // face between cell (i,j,k) and its +axis neighbor (or boundary)
        Face f;
        f.id = static_cast<int>(p.faces.size());
        std::array<double, 3> lo = {domain.origin[0] + i * hx, domain.origin[1] + j * hy,
                                    domain.origin[2] + k * hz};
        const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
        const double h[3] = {hx, hy, hz};
        std::array<double, 3> v0 = lo;
        v0[axis] += h[axis];
        auto v = [&](double s, double t) {
            auto q = v0;
            q[a1] += s * h[a1];
            q[a2] += t * h[a2];
            return q;
        };
        f.vertices = {v(0, 0), v(1, 0), v(1, 1), v(0, 1)};
        f.measure = h[a1] * h[a2];
        f.normal = {0, 0, 0};
        f.normal[axis] = 1.0;
        f.cell_minus = cell_id(i, j, k);
        const int ndx[3] = {i + (axis == 0), j + (axis == 1), k + (axis == 2)};
        const int lim[3] = {nx, ny, nz};
        f.cell_plus = (ndx[axis] < lim[axis]) ? cell_id(ndx[0], ndx[1], ndx[2]) : -1;
        p.faces.push_back(f);
    };
    auto add_lower_boundary = [&](int axis, int i, int j, int k) {
        Face f;
        f.id = static_cast<int>(p.faces.size());
        std::array<double, 3> lo = {domain.origin[0] + i * hx, domain.origin[1] + j * hy,
                                    domain.origin[2] + k * hz};
        const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
        const double h[3] = {hx, hy, hz};
        auto v = [&](double s, double t) {
            auto q = lo;
            q[a1] += s * h[a1];
            q[a2] += t * h[a2];
            return q;
        };
        f.vertices = {v(0, 0), v(1, 0), v(1, 1), v(0, 1)};
        f.measure = h[a1] * h[a2];
        f.normal = {0, 0, 0};
        f.normal[axis] = -1.0;
        f.cell_minus = cell_id(i, j, k);
        f.cell_plus = -1;
        p.faces.push_back(f);
    };
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                for (int axis = 0; axis < 3; ++axis) {
                    add_face(axis, i, j, k);
                    const int idx[3] = {i, j, k};
                    if (idx[axis] == 0) add_lower_boundary(axis, i, j, k);
                }
            }
    finalize(p, domain);
    return p;
}

double default_threshold(const Partition& partition, const std::function<double(Vec2)>& reaction) {
    double m = 0.0;
    for (const auto& cell : partition.subdomains)
        for (const auto& qp : cell_rule(cell, 2)) m = std::max(m, reaction(qp.x));
    return 0.1 * m;
}

Partition classify_subdomains(Partition partition, const std::function<double(Vec2)>& reaction,
                              double threshold_P) {
    if (!(threshold_P > 0.0)) throw std::invalid_argument("threshold_P must be positive");
    partition.threshold_P = threshold_P;
    partition.in_OP.assign(partition.subdomains.size(), 0);
    partition.set_OP.clear();
    partition.set_O0.clear();
    for (const auto& cell : partition.subdomains) {
        double ess_inf = std::numeric_limits<double>::infinity();
        for (const auto& qp : cell_rule(cell, 2)) ess_inf = std::min(ess_inf, reaction(qp.x));
        if (ess_inf >= threshold_P) {
            partition.in_OP[static_cast<std::size_t>(cell.id)] = 1;
            partition.set_OP.push_back(cell.id);
        } else {
            partition.set_O0.push_back(cell.id);
        }
    }
    return partition;
}

std::vector<Partition::RobinGroup> decompose_robin_boundary(const Partition& partition,
                                                            const DomainSpec& domain) {
    auto faces = partition.faces;
    assign_boundary_kinds(faces, domain);
    std::map<int, Partition::RobinGroup> by_cell;
    for (const auto& f : faces) {
        if (f.kind != Face::Kind::Robin) continue;
        auto& g = by_cell[f.cell_minus];
        g.subdomain = f.cell_minus;
        g.face_ids.push_back(f.id);
        g.measure += f.measure;
    }
    if (by_cell.empty())
        throw DecompositionError("Robin boundary is empty; the problem class requires Gamma_R");
    std::vector<Partition::RobinGroup> out;
    for (auto& [cell, g] : by_cell) out.push_back(std::move(g));
    return out;
}

const Partition::RobinGroup* Partition::group_of_face(int face_id) const {
    for (const auto& g : robin_groups)
        for (int f : g.face_ids)
            if (f == face_id) return &g;
    return nullptr;
}

void Partition::check_invariants(double domain_measure) const {
    KahanSum total;
    for (const auto& s : subdomains) total.add(s.measure);
    if (std::abs(total.value() - domain_measure) > 1e-12 * std::max(1.0, domain_measure))
        throw GeometryError("subdomain measures do not sum to the domain measure");
    if (set_OP.size() + set_O0.size() != subdomains.size())
        throw GeometryError("O_P/O_0 classification does not cover all subdomains");
    for (const auto& f : faces)
        if (f.boundary() && f.kind == Face::Kind::Interior)
            throw GeometryError("boundary face left unassigned");
}

nlohmann::json partition_to_json(const Partition& p) {
    nlohmann::json j;
    j["dim"] = p.dim;
    j["threshold_P"] = p.threshold_P;
    j["set_OP"] = p.set_OP;
    j["set_O0"] = p.set_O0;
    auto& cells = j["subdomains"] = nlohmann::json::array();
    for (const auto& s : p.subdomains) {
        nlohmann::json c;
        c["id"] = s.id;
        c["kind"] = s.kind == ShapeKind::Rectangle  ? "rectangle"
                    : s.kind == ShapeKind::Triangle ? "triangle"
                    : s.kind == ShapeKind::Box      ? "box"
                                                    : "interval";
        c["vertices"] = s.vertices;
        c["measure"] = s.measure;
        c["diameter"] = s.diameter;
        cells.push_back(c);
    }
    auto& faces = j["faces"] = nlohmann::json::array();
    for (const auto& f : p.faces) {
        nlohmann::json c;
        c["id"] = f.id;
        c["vertices"] = f.vertices;
        c["cells"] = {f.cell_minus, f.cell_plus};
        c["kind"] = f.kind == Face::Kind::Interior    ? "interior"
                    : f.kind == Face::Kind::Dirichlet ? "dirichlet"
                                                      : "robin";
        faces.push_back(c);
    }
    auto& groups = j["robin_groups"] = nlohmann::json::array();
    for (const auto& g : p.robin_groups)
        groups.push_back({{"subdomain", g.subdomain}, {"faces", g.face_ids}, {"measure", g.measure}});
    return j;
}

} // namespace parabound
