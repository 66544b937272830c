#pragma once

#include "parabound/geometry.hpp"

#include <functional>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

namespace parabound {

enum class BoundaryKind { Dirichlet, Robin };

/// Thrown when the Robin boundary cannot be resolved by the partition or a
/// boundary description is inconsistent.
struct DecompositionError : std::runtime_error {
    explicit DecompositionError(const std::string& what) : std::runtime_error(what) {}
};

/// Boundary piece of an axis-aligned domain: a parameter interval [t0,t1]
/// (fractions of the side length) on one side. side index: 0 x-, 1 x+, 2 y-,
/// 3 y+, 4 z-, 5 z+.
struct BoundarySegment {
    int side = 0;
    double t0 = 0.0;
    double t1 = 1.0;
    BoundaryKind kind = BoundaryKind::Dirichlet;
};

struct DomainSpec {
    int dim = 2;
    std::array<double, 3> origin{};
    std::array<double, 3> extent{};
    std::vector<Vec2> polygon;                    // non-empty => polygonal domain
    std::vector<BoundarySegment> boundary;        // axis-aligned domains
    std::vector<BoundaryKind> polygon_edge_kind;  // per polygon edge i: (v_i, v_{i+1})

    bool is_polygon() const { return !polygon.empty(); }

    static DomainSpec rectangle(double w, double h,
                                const std::vector<BoundarySegment>& boundary);
    static DomainSpec box(const std::array<double, 3>& extent,
                          const std::vector<BoundarySegment>& boundary);
    static DomainSpec make_polygon(const std::vector<Vec2>& loop,
                                   const std::vector<BoundaryKind>& edge_kind);

    /// Per-side shorthand: all six/four sides labeled in one go.
    static std::vector<BoundarySegment> sides(const std::vector<std::pair<int, BoundaryKind>>& s);

    void validate() const; // Gamma_R nonempty, segments consistent
    bool has_dirichlet() const;
};

struct Face {
    int id = -1;
    std::vector<std::array<double, 3>> vertices; // 2 vertices in 2-D, 4 in 3-D
    double measure = 0.0;
    std::array<double, 3> normal{}; // unit; interior: out of cell_minus; boundary: outward
    int cell_minus = -1;
    int cell_plus = -1; // -1 for boundary faces
    enum class Kind { Interior, Dirichlet, Robin } kind = Kind::Interior;

    bool boundary() const { return cell_plus < 0; }
    Vec2 a2() const { return {vertices[0][0], vertices[0][1]}; }
    Vec2 b2() const { return {vertices[1][0], vertices[1][1]}; }
    Vec2 midpoint2() const { return 0.5 * (a2() + b2()); }
    Vec2 normal2() const { return {normal[0], normal[1]}; }
};

struct Partition {
    int dim = 2;
    std::vector<Subdomain> subdomains;
    std::vector<Face> faces;
    std::vector<int> interior_face_ids;
    std::vector<int> dirichlet_face_ids;
    std::vector<int> robin_face_ids;

    /// Robin faces grouped per subdomain: Gamma_Rj = boundary of subdomain j
    /// intersected with Gamma_R. One mean condition / trace constant each.
    struct RobinGroup {
        int subdomain = -1;
        std::vector<int> face_ids;
        double measure = 0.0;
    };
    std::vector<RobinGroup> robin_groups;

    double threshold_P = 0.0;
    std::vector<int> set_OP, set_O0;
    std::vector<char> in_OP; // indexed by subdomain id

    double total_measure = 0.0;

    const RobinGroup* group_of_face(int face_id) const;
    void check_invariants(double domain_measure) const;
};

/// Uniform decomposition of the domain into axis-aligned cells (rectangle/box
/// domains) or a structured triangulation (polygon domains). resolution holds
/// per-axis cell counts (one entry for polygons).
Partition build_partition(const DomainSpec& domain, const std::vector<int>& resolution);

/// O_P / O_0 split: cell joins O_P iff min over its quadrature nodes of the
/// reaction coefficient is >= threshold. Total and idempotent.
Partition classify_subdomains(Partition partition, const std::function<double(Vec2)>& reaction,
                              double threshold_P);

/// Default threshold: 0.1 * (max of the reaction over all cell quadrature nodes).
double default_threshold(const Partition& partition, const std::function<double(Vec2)>& reaction);

/// The Robin face groups Gamma_Rj. Fails if a cell face straddles the
/// Dirichlet/Robin split or Gamma_R is empty.
std::vector<Partition::RobinGroup> decompose_robin_boundary(const Partition& partition,
                                                            const DomainSpec& domain);

nlohmann::json partition_to_json(const Partition& p);

} // namespace parabound
