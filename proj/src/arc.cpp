#include "specset/arc.hpp"

namespace specset {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

OrientedArc OrientedArc::circle_arc(cplx center, double radius, double angle0, double sweep) {
    if (radius <= 0.0) throw std::invalid_argument("arc: radius must be positive");
    if (std::abs(sweep) > 2.0 * std::numbers::pi + 1e-9)
        throw std::invalid_argument("arc: sweep exceeds full turn");
    OrientedArc a;
    a.circle_ = true;
    a.center_ = center;
    a.radius_ = radius;
    a.angle0_ = angle0;
    a.sweep_ = sweep;
    return a;
}

OrientedArc OrientedArc::line_arc(cplx point, cplx unit_dir, double s0, double s1) {
    double n = std::abs(unit_dir);
    if (n <= 0.0) throw std::invalid_argument("arc: zero direction");
    if (!(s0 < s1)) throw std::invalid_argument("arc: empty line arc");
    OrientedArc a;
    a.circle_ = false;
    a.center_ = point;
    a.dir_ = unit_dir / n;
    a.s0_ = s0;
    a.s1_ = s1;
    return a;
}

bool OrientedArc::finite_length() const {
    return circle_ || (std::isfinite(s0_) && std::isfinite(s1_));
}

double OrientedArc::length() const {
    if (circle_) return radius_ * std::abs(sweep_);
    return finite_length() ? (s1_ - s0_) : kInf;
}

cplx OrientedArc::sigma(double s) const {
    if (circle_) {
        double sign = sweep_ >= 0 ? 1.0 : -1.0;
        return center_ + radius_ * std::polar(1.0, angle0_ + sign * s / radius_);
    }
    return center_ + dir_ * s;
}

cplx OrientedArc::dsigma(double s) const {
    if (circle_) {
        double sign = sweep_ >= 0 ? 1.0 : -1.0;
        return cplx(0, 1) * sign * std::polar(1.0, angle0_ + sign * s / radius_);
    }
    (void)s;
    return dir_;
}

Circline OrientedArc::carrier() const {
    if (circle_) return Circline(1.0, -center_, std::norm(center_) - radius_ * radius_);
    // line through center_ with direction dir_: normal u = i*dir (either sign)
    cplx u = cplx(0, 1) * dir_;
    double offset = (std::conj(u) * center_).real();
    return Circline(0.0, u / 2.0, -offset);
}

RiemannPoint OrientedArc::start() const {
    if (circle_) return RiemannPoint(center_ + radius_ * std::polar(1.0, angle0_));
    if (!std::isfinite(s0_)) return RiemannPoint::infinity();
    return RiemannPoint(center_ + dir_ * s0_);
}

RiemannPoint OrientedArc::end() const {
    if (circle_) return RiemannPoint(center_ + radius_ * std::polar(1.0, angle0_ + sweep_));
    if (!std::isfinite(s1_)) return RiemannPoint::infinity();
    return RiemannPoint(center_ + dir_ * s1_);
}

OrientedArc OrientedArc::reversed() const {
    if (circle_) return circle_arc(center_, radius_, angle0_ + sweep_, -sweep_);
    return line_arc(center_, -dir_, -s1_, -s0_);
}

cplx OrientedArc::representative() const {
    if (circle_) return center_ + radius_ * std::polar(1.0, angle0_ + 0.5 * sweep_);
    double lo = std::isfinite(s0_) ? s0_ : (std::isfinite(s1_) ? s1_ - 2.0 : -1.0);
    double hi = std::isfinite(s1_) ? s1_ : (std::isfinite(s0_) ? s0_ + 2.0 : 1.0);
    return center_ + dir_ * (0.5 * (lo + hi));
}

std::vector<OrientedArc::Chart> OrientedArc::charts() const {
    std::vector<Chart> out;
    if (circle_) {
        cplx c = center_;
        double r = radius_, a0 = angle0_, sw = sweep_;
        out.push_back({[c, r, a0, sw](double t) { return c + r * std::polar(1.0, a0 + t * sw); },
                       [c, r, a0, sw](double t) {
                           return cplx(0, 1) * sw * r * std::polar(1.0, a0 + t * sw);
                       }});
        return out;
    }
    cplx p = center_, u = dir_;
    auto finite_chart = [p, u](double a, double b) {
        OrientedArc::Chart ch;
        ch.z = [p, u, a, b](double t) { return p + u * (a + t * (b - a)); };
        ch.dz = [u, a, b](double) { return u * (b - a); };
        return ch;
    };
    auto ray_up = [p, u](double a) {  // s in [a, +inf), s = a + t/(1-t)
        OrientedArc::Chart ch;
        ch.z = [p, u, a](double t) { return p + u * (a + t / (1.0 - t)); };
        ch.dz = [u](double t) { return u / ((1.0 - t) * (1.0 - t)); };
        return ch;
    };
    auto ray_down = [p, u](double b) {  // s in (-inf, b], s = b - (1-t)/t
        OrientedArc::Chart ch;
        ch.z = [p, u, b](double t) { return p + u * (b - (1.0 - t) / t); };
        ch.dz = [u](double t) { return u / (t * t); };
        return ch;
    };
    bool lo_inf = !std::isfinite(s0_), hi_inf = !std::isfinite(s1_);
    if (!lo_inf && !hi_inf) {
        out.push_back(finite_chart(s0_, s1_));
    } else if (lo_inf && hi_inf) {
        out.push_back(ray_down(0.0));
        out.push_back(ray_up(0.0));
    } else if (lo_inf) {
        out.push_back(ray_down(s1_));
    } else {
        out.push_back(ray_up(s0_));
    }
    return out;
}

}  // namespace specset
