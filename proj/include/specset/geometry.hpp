#pragma once

#include <vector>

#include "specset/disk.hpp"
#include "specset/moebius.hpp"

namespace specset {

/// Exact intersection points of the two boundary circlines.
std::vector<RiemannPoint> boundary_intersection(const GeneralizedDisk& D1,
                                                const GeneralizedDisk& D2, double tol = 1e-9);

/// Membership in X = ∩ disks (closed).
bool in_intersection(const std::vector<GeneralizedDisk>& disks, const RiemannPoint& p,
                     double tol = 1e-9);

/// Split the full boundary of D at the given points of its carrier circline,
/// returning sub-arcs that keep the outward-normal orientation of D.
std::vector<OrientedArc> split_boundary(const GeneralizedDisk& D,
                                        const std::vector<RiemannPoint>& points);

/// Split an arbitrary carrier circline (as an unoriented full circle/line)
/// at the given points; orientation of the produced arcs is the carrier's
/// default and must be fixed by the caller.
std::vector<OrientedArc> split_circline(const Circline& carrier,
                                        const std::vector<RiemannPoint>& points);

struct BoundaryPiece {
    int disk_index;
    OrientedArc arc;
};

/// The pieces ∂D_j ∩ X of the boundary of X = ∩ disks, oriented with the
/// outward-normal convention of each D_j.
std::vector<BoundaryPiece> intersection_boundary_arcs(const std::vector<GeneralizedDisk>& disks,
                                                      double tol = 1e-9);

/// Indices of the disks that survive dropping supersets (D_k is redundant in
/// ∩ disks whenever some D_j ⊆ D_k).  Exact duplicates are rejected.
std::vector<int> reduce_disks(const std::vector<GeneralizedDisk>& disks, double tol = 1e-9);

/// Canonical configuration of a non-nested pair with intersecting interiors:
/// annulus {|z| <= R} & {|z| >= 1/R} when the boundaries are disjoint,
/// symmetric sector pair {Re(e^{±i theta} z) >= 0} when they cross twice,
/// the strip pair {Im z <= 1} & {Im z >= -1} at tangency.
struct CanonicalPairConfig {
    enum class Variant { Annulus, Sector, Strip };
    Variant variant;
    double param;  // R > 1 (annulus) or theta in (0, pi/2) (sector); 0 for strip
    MoebiusMap map;
};

std::pair<GeneralizedDisk, GeneralizedDisk> canonical_disks(const CanonicalPairConfig& cfg);

/// Normalizing map for a disk pair.  `avoid` is a compact set (typically the
/// spectrum of A) the pole of the map must keep away from; where the
/// construction leaves a choice, the pole farthest from `avoid` is taken.
CanonicalPairConfig normalize_pair(const GeneralizedDisk& D1, const GeneralizedDisk& D2,
                                   const std::vector<cplx>& avoid = {});

}  // namespace specset
