#pragma once

#include "parabound/partition.hpp"
#include "parabound/quadrature.hpp"

#include <memory>

namespace parabound {

/// First-order computational grid over a 2-D partition: continuous nodal
/// (bi)linear scalars on the cells, lowest-order H(div) face elements for
/// fluxes. Cell indices coincide with subdomain ids.
class Grid {
public:
    explicit Grid(std::shared_ptr<const Partition> partition);

    const Partition& partition() const { return *part_; }
    std::shared_ptr<const Partition> partition_ptr() const { return part_; }

    int n_nodes() const { return static_cast<int>(nodes_.size()); }
    int n_cells() const { return static_cast<int>(part_->subdomains.size()); }
    int n_faces() const { return static_cast<int>(part_->faces.size()); }

    Vec2 node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    bool node_on_dirichlet(int i) const { return dirichlet_node_[static_cast<std::size_t>(i)] != 0; }
    const std::vector<int>& cell_nodes(int cell) const { return cell_nodes_[static_cast<std::size_t>(cell)]; }
    const std::vector<int>& cell_faces(int cell) const { return cell_faces_[static_cast<std::size_t>(cell)]; }
    /// +1 if the stored face normal points out of `cell`, -1 otherwise.
    double face_sign(int cell, int face) const;
    const Subdomain& cell(int c) const { return part_->subdomains[static_cast<std::size_t>(c)]; }
    const Face& face(int f) const { return part_->faces[static_cast<std::size_t>(f)]; }

    struct Shape {
        int n = 0;
        std::array<double, 4> N{};
        std::array<Vec2, 4> grad{};
    };
    Shape shape(int cell, Vec2 x) const;

    /// RT0 vector value at x from the face-normal dofs of `cell`
    /// (q[i] = flux through cell_faces(cell)[i] in the global orientation).
    Vec2 rt0_value(int cell, Vec2 x, const double* q) const;
    /// Divergence of the same element (constant per cell).
    double rt0_divergence(int cell, const double* q) const;
    /// d(div)/dq per local face, i.e. sign*|f|/|K|.
    double rt0_div_sensitivity(int cell, int local_face) const;
    /// Lumped L2 weight of one face dof (diagonal RT0 mass surrogate).
    double face_dof_weight(int f) const;

    /// Nodal interpolation helper: value of the scalar with coefficients u.
    double nodal_value(int cell, Vec2 x, const double* u_all_nodes) const;
    Vec2 nodal_gradient(int cell, Vec2 x, const double* u_all_nodes) const;

private:
    std::shared_ptr<const Partition> part_;
    std::vector<Vec2> nodes_;
    std::vector<char> dirichlet_node_;
    std::vector<std::vector<int>> cell_nodes_;
    std::vector<std::vector<int>> cell_faces_;
    std::vector<double> face_weight_;
};

} // namespace parabound
