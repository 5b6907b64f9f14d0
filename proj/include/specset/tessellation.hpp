#pragma once

#include "specset/geometry.hpp"

namespace specset {

/// Median arc C_jk ∩ X_j ∩ X_k, stored once per unordered pair with j < k.
/// Orientation convention: the cell X_k lies to the left of the arc, so the
/// arc as stored is the correct replacement path for the cell X_j, and its
/// reverse for X_k.
struct MedianArc {
    int j, k;
    OrientedArc arc;
};

/// Voronoi-like partition of X = ∩ D_j under the boundary distance d(·, D_j):
/// cells X_j = {z ∈ X : d(z,D_j) minimal}, their median arcs, and the pieces
/// ∂D_j ∩ X of the boundary of X.
struct Tessellation {
    std::vector<GeneralizedDisk> disks;  // reduced family (supersets dropped)
    std::vector<int> original_indices;   // positions of the kept disks in the input
    std::vector<BoundaryPiece> boundary_arcs;
    std::vector<MedianArc> median_arcs;
};

Tessellation build_tessellation(const std::vector<GeneralizedDisk>& disks, double tol = 1e-9);

/// Indices (into tess.disks) of the cells containing z: the argmin of
/// d(z, D_j), as a tie-set within tol.  Throws if z is outside X.
std::vector<int> cell_of(const Tessellation& tess, cplx z, double tol = 1e-9);

/// Median arcs bounding cell j, oriented so that X_j lies to the right —
/// i.e. ready to substitute for X ∩ ∂D_j in a contour integral.
std::vector<MedianArc> integration_paths(const Tessellation& tess, int j);

std::string export_geometry_json(const Tessellation& tess);
std::string export_geometry_svg(const Tessellation& tess, double viewport = 5.0);

}  // namespace specset
