#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace specset {

using cplx = std::complex<double>;

inline constexpr double kGeomTol = 1e-12;

/// A point of the Riemann sphere: either a finite complex number or infinity.
struct RiemannPoint {
    cplx z{0.0, 0.0};
    bool inf = false;

    RiemannPoint() = default;
    RiemannPoint(cplx value) : z(value) {}
    static RiemannPoint infinity() {
        RiemannPoint p;
        p.inf = true;
        return p;
    }
    bool is_finite() const { return !inf; }
};

inline bool approx_point(const RiemannPoint& p, const RiemannPoint& q, double tol = 1e-9) {
    if (p.inf || q.inf) return p.inf == q.inf;
    return std::abs(p.z - q.z) <= tol;
}

/// Circle or line, stored as the Hermitian-coefficient form
///   a·|z|^2 + conj(b)·z + b·conj(z) + c = 0,   a, c real, b complex,
/// i.e. the zero set of the Hermitian matrix [[a, b], [conj(b), c]].
/// Moebius maps act linearly on these coefficients, so circles and lines
/// need no case split under the group action.
///
/// Coefficients are normalized so that max(|a|,|b|,|c|) = 1 and the first
/// nonzero of (a, Re b, Im b, c) is positive.
class Circline {
public:
    Circline(double a, cplx b, double c);

    double a() const { return a_; }
    cplx b() const { return b_; }
    double c() const { return c_; }

    /// |b|^2 - a·c; positive for every non-degenerate circline.
    double discriminant() const { return std::norm(b_) - a_ * c_; }

    bool is_line() const { return std::abs(a_) <= kGeomTol; }

    /// Value of the defining form at a finite point (sign tells the side).
    double eval(cplx z) const { return a_ * std::norm(z) + 2.0 * (std::conj(b_) * z).real() + c_; }

    /// Circle accessors; only valid when !is_line().
    cplx center() const;
    double radius() const;

    /// Line accessors; only valid when is_line().  The line is
    /// { z : Re(conj(unit_normal())·z) = line_offset() }.
    cplx line_unit_normal() const;
    double line_offset() const;

    bool contains(const RiemannPoint& p, double tol = 1e-9) const;

    /// A point on the circline (finite when possible).
    RiemannPoint some_point() const;

    bool approx_equal(const Circline& other, double tol = 1e-9) const;

private:
    double a_;
    cplx b_;
    double c_;
    void normalize();
};

/// Exact intersection of two distinct circlines: 0, 1, or 2 points of the
/// Riemann sphere (infinity included when both are lines).
std::vector<RiemannPoint> circline_intersection(const Circline& c1, const Circline& c2,
                                                double tol = 1e-9);

}  // namespace specset
