#pragma once

#include <string>

#include "specset/arc.hpp"
#include "specset/circline.hpp"

namespace specset {

enum class DiskKind { Interior, Exterior, HalfPlane };

/// Closed disk of the Riemann sphere: a compact disk, the closed exterior of
/// a disk (containing infinity), or a closed half-plane (containing infinity).
///
/// Half-planes are { z : Re(e^{-i theta}(z - a)) >= 0 } together with
/// infinity; theta is kept in (-pi, pi].
class GeneralizedDisk {
public:
    static GeneralizedDisk disk(cplx center, double radius);
    static GeneralizedDisk exterior(cplx center, double radius);
    static GeneralizedDisk half_plane(double theta, cplx anchor);

    DiskKind kind() const { return kind_; }
    bool is_half_plane() const { return kind_ == DiskKind::HalfPlane; }
    cplx center() const;
    double radius() const;
    double theta() const;
    cplx anchor() const;

    bool contains(const RiemannPoint& p, double tol = 0.0) const;
    bool contains_inf() const { return kind_ != DiskKind::Interior; }

    Circline boundary() const;

    /// Full boundary as an oriented arc; (1/i) dsigma/ds is the outward
    /// normal.  Compact disk: sigma(s) = w + r e^{is/r} (counterclockwise);
    /// exterior: sigma(s) = w + r e^{-is/r}; half-plane: sigma(s) = a - i e^{i theta} s.
    OrientedArc boundary_arc() const;

    /// Signed version of the Caratheodory distance: positive inside,
    /// negative outside, vanishing on the boundary.  Coincides with d(z, D)
    /// on the disk itself.  Affine in (|z|^2, z, conj z); the coefficients
    /// are exposed for median-circline work.
    double signed_distance(cplx z) const;
    void distance_form(double& a, cplx& b, double& c) const;

    /// A point well inside the disk (infinity for the variants containing it).
    RiemannPoint deep_point() const;

    GeneralizedDisk enlarged(double eps) const;

    bool approx_equal(const GeneralizedDisk& other, double tol = 1e-9) const;

    std::string to_json() const;
    static GeneralizedDisk from_json(const std::string& text);

private:
    GeneralizedDisk(DiskKind k, cplx p, double x) : kind_(k), point_(p), param_(x) {}
    DiskKind kind_;
    cplx point_;    // center, or half-plane anchor
    double param_;  // radius, or theta
};

/// d(z, D): reciprocal of the infinitesimal Caratheodory pseudodistance of D
/// at z, i.e. (1-|phi(z)|^2)/|phi'(z)| for the Riemann map phi of D onto the
/// unit disk.  (|r^2 - |z-w|^2|)/r for disk variants,
/// 2 Re(e^{-i theta}(z-a)) for half-planes.  Requires a finite z in D.
double caratheodory_distance(cplx z, const GeneralizedDisk& D);

/// The circline whose intersection with Dj ∩ Dk is the locus
/// { z : d(z, Dj) = d(z, Dk) }.  Requires non-nested disks with
/// intersecting interiors.
Circline median_circline(const GeneralizedDisk& Dj, const GeneralizedDisk& Dk);

/// Containment test D1 ⊆ D2 for generalized disks (circline-based).
bool disk_subset(const GeneralizedDisk& D1, const GeneralizedDisk& D2, double tol = 1e-9);

}  // namespace specset
