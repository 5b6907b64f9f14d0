#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "specset/circline.hpp"

namespace specset {

/// Oriented sub-arc of a circline with an arclength parametrization
/// s -> sigma(s), |dsigma/ds| = 1.  For an arc on the boundary of a
/// generalized disk with the positive orientation, (1/i) dsigma/ds is the
/// outward normal of the disk.
///
/// Circle arcs use s in [0, length()].  Line arcs use the absolute arclength
/// coordinate s in [s_begin(), s_end()], either of which may be infinite.
class OrientedArc {
public:
    static OrientedArc circle_arc(cplx center, double radius, double angle0, double sweep);
    static OrientedArc line_arc(cplx point, cplx unit_dir, double s0, double s1);

    bool is_circle() const { return circle_; }
    bool finite_length() const;
    double length() const;  // +inf for unbounded line arcs

    cplx sigma(double s) const;
    cplx dsigma(double s) const;  // unit tangent

    Circline carrier() const;
    RiemannPoint start() const;
    RiemannPoint end() const;
    OrientedArc reversed() const;

    // circle data
    cplx center() const { return center_; }
    double radius() const { return radius_; }
    double angle0() const { return angle0_; }
    double sweep() const { return sweep_; }
    // line data
    cplx line_point() const { return center_; }
    cplx line_dir() const { return dir_; }
    double s_begin() const { return s0_; }
    double s_end() const { return s1_; }

    /// Midpoint parameter value mapped to a point; for unbounded arcs a
    /// finite representative interior point.
    cplx representative() const;

    /// Bounded smooth charts t in [0,1] covering the arc, for quadrature.
    /// Unbounded line arcs are mapped through the rational chart
    /// s = t/(1-t); the pulled-back integrand of any kernel decaying like
    /// 1/s^2 stays analytic up to t = 1.
    struct Chart {
        std::function<cplx(double)> z;
        std::function<cplx(double)> dz;  // dz/dt
    };
    std::vector<Chart> charts() const;

private:
    OrientedArc() = default;
    bool circle_ = true;
    cplx center_{};   // circle center, or line base point
    double radius_ = 1.0;
    double angle0_ = 0.0;
    double sweep_ = 0.0;  // signed, |sweep| <= 2*pi
    cplx dir_{};          // line unit direction
    double s0_ = 0.0, s1_ = 0.0;
};

}  // namespace specset
