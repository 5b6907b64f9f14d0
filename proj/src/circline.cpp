#include "specset/circline.hpp"

#include <algorithm>
#include <cmath>

namespace specset {

Circline::Circline(double a, cplx b, double c) : a_(a), b_(b), c_(c) {
    if (std::norm(b_) - a_ * c_ <= 0.0)
        throw std::invalid_argument("circline: nonpositive discriminant");
    normalize();
}

void Circline::normalize() {
    double m = std::max({std::abs(a_), std::abs(b_), std::abs(c_)});
    a_ /= m;
    b_ /= m;
    c_ /= m;
    // sign convention: first nonzero of (a, Re b, Im b, c) positive
    double lead = a_;
    if (std::abs(lead) <= kGeomTol) lead = b_.real();
    if (std::abs(lead) <= kGeomTol) lead = b_.imag();
    if (std::abs(lead) <= kGeomTol) lead = c_;
    if (lead < 0.0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    if (std::abs(a_) <= kGeomTol) a_ = 0.0;
}

cplx Circline::center() const {
    if (is_line()) throw std::logic_error("circline: center of a line");
    return -b_ / a_;
}

double Circline::radius() const {
    if (is_line()) throw std::logic_error("circline: radius of a line");
    return std::sqrt(discriminant()) / std::abs(a_);
}

cplx Circline::line_unit_normal() const {
    if (!is_line()) throw std::logic_error("circline: not a line");
    return b_ / std::abs(b_);
}

double Circline::line_offset() const {
    if (!is_line()) throw std::logic_error("circline: not a line");
    return -c_ / (2.0 * std::abs(b_));
}

bool Circline::contains(const RiemannPoint& p, double tol) const {
    if (p.inf) return is_line();
    // scale-aware residual
    double scale = std::abs(a_) * std::norm(p.z) + 2.0 * std::abs(b_) * std::abs(p.z) + std::abs(c_);
    return std::abs(eval(p.z)) <= tol * std::max(1.0, scale);
}

RiemannPoint Circline::some_point() const {
    if (is_line()) return RiemannPoint(line_unit_normal() * line_offset());
    return RiemannPoint(center() + radius());
}

bool Circline::approx_equal(const Circline& other, double tol) const {
    return std::abs(a_ - other.a_) <= tol && std::abs(b_ - other.b_) <= tol &&
           std::abs(c_ - other.c_) <= tol;
}

std::vector<RiemannPoint> circline_intersection(const Circline& c1, const Circline& c2,
                                                double tol) {
    if (c1.approx_equal(c2, tol)) throw std::invalid_argument("circline_intersection: identical circlines");

    std::vector<RiemannPoint> out;
    if (c1.is_line() && c2.is_line()) {
        // two lines always meet at infinity
        cplx u1 = c1.line_unit_normal(), u2 = c2.line_unit_normal();
        double cross = (std::conj(u1) * u2).imag();
        if (std::abs(cross) <= tol) {
            out.push_back(RiemannPoint::infinity());  // parallel: tangent at infinity
            return out;
        }
        // solve Re(conj(u1) z) = p1, Re(conj(u2) z) = p2
        double p1 = c1.line_offset(), p2 = c2.line_offset();
        // z = x*u1 + y*(i u1); Re(conj(u2) z) = x Re(conj(u2)u1) + y Re(conj(u2) i u1)
        double a21 = (std::conj(u2) * u1).real();
        double b21 = (std::conj(u2) * (cplx(0, 1) * u1)).real();
        double y = (p2 - p1 * a21) / b21;
        out.push_back(RiemannPoint(p1 * u1 + y * (cplx(0, 1) * u1)));
        out.push_back(RiemannPoint::infinity());
        return out;
    }

    // make cc the circle, reduce the other to a line via pencil elimination
    const Circline& cc = c1.is_line() ? c2 : c1;
    cplx wc = cc.center();
    double rc = cc.radius();
    // linear combination eliminating |z|^2: L = a2*eq1 - a1*eq2 -> line coefficients
    cplx lb = c2.a() * c1.b() - c1.a() * c2.b();
    double lc = c2.a() * c1.c() - c1.a() * c2.c();
    // line: 2 Re(conj(lb) z) + lc = 0 (possibly degenerate if concentric)
    double lbn = std::abs(lb);
    if (lbn <= tol) return out;  // concentric circles: empty
    cplx u = lb / lbn;
    double offset = -lc / (2.0 * lbn);
    // signed distance from circle center to the line
    double delta = offset - (std::conj(u) * wc).real();
    cplx foot = wc + delta * u;
    double h2 = rc * rc - delta * delta;
    double htol = tol * std::max(1.0, rc * rc);
    if (h2 > htol) {
        double h = std::sqrt(h2);
        out.push_back(RiemannPoint(foot + h * (cplx(0, 1) * u)));
        out.push_back(RiemannPoint(foot - h * (cplx(0, 1) * u)));
    } else if (h2 > -htol) {
        out.push_back(RiemannPoint(foot));  // tangency
    }
    return out;
}

}  // namespace specset
