#include "specset/disk.hpp"

#include <cmath>

#include "json.hpp"

namespace specset {

namespace {
double wrap_angle(double t) {
    t = std::fmod(t, 2.0 * std::numbers::pi);
    if (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
    if (t > std::numbers::pi) t -= 2.0 * std::numbers::pi;
    return t;
}
}  // namespace

GeneralizedDisk GeneralizedDisk::disk(cplx center, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("disk: radius must be positive");
    return GeneralizedDisk(DiskKind::Interior, center, radius);
}

GeneralizedDisk GeneralizedDisk::exterior(cplx center, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("disk: radius must be positive");
    return GeneralizedDisk(DiskKind::Exterior, center, radius);
}

GeneralizedDisk GeneralizedDisk::half_plane(double theta, cplx anchor) {
    return GeneralizedDisk(DiskKind::HalfPlane, anchor, wrap_angle(theta));
}

cplx GeneralizedDisk::center() const {
    if (kind_ == DiskKind::HalfPlane) throw std::logic_error("disk: half-plane has no center");
    return point_;
}

double GeneralizedDisk::radius() const {
    if (kind_ == DiskKind::HalfPlane) throw std::logic_error("disk: half-plane has no radius");
    return param_;
}

double GeneralizedDisk::theta() const {
    if (kind_ != DiskKind::HalfPlane) throw std::logic_error("disk: not a half-plane");
    return param_;
}

cplx GeneralizedDisk::anchor() const {
    if (kind_ != DiskKind::HalfPlane) throw std::logic_error("disk: not a half-plane");
    return point_;
}

bool GeneralizedDisk::contains(const RiemannPoint& p, double tol) const {
    if (p.inf) return contains_inf();
    return signed_distance(p.z) >= -tol;
}

Circline GeneralizedDisk::boundary() const {
    if (kind_ == DiskKind::HalfPlane) {
        cplx u = std::polar(1.0, param_);
        return Circline(0.0, u / 2.0, -(std::conj(u) * point_).real());
    }
    return Circline(1.0, -point_, std::norm(point_) - param_ * param_);
}

OrientedArc GeneralizedDisk::boundary_arc() const {
    switch (kind_) {
        case DiskKind::Interior:
            return OrientedArc::circle_arc(point_, param_, 0.0, 2.0 * std::numbers::pi);
        case DiskKind::Exterior:
            return OrientedArc::circle_arc(point_, param_, 0.0, -2.0 * std::numbers::pi);
        case DiskKind::HalfPlane: {
            cplx dir = cplx(0, -1) * std::polar(1.0, param_);
            double inf = std::numeric_limits<double>::infinity();
            return OrientedArc::line_arc(point_, dir, -inf, inf);
        }
    }
    throw std::logic_error("unreachable");
}

double GeneralizedDisk::signed_distance(cplx z) const {
    switch (kind_) {
        case DiskKind::Interior:
            return (param_ * param_ - std::norm(z - point_)) / param_;
        case DiskKind::Exterior:
            return (std::norm(z - point_) - param_ * param_) / param_;
        case DiskKind::HalfPlane:
            // the factor 2 makes the value match (1-|phi|^2)/|phi'| for the
            // Riemann map phi onto the unit disk, as in the disk cases, so
            // that the distance transforms equivariantly under Moebius maps
            return 2.0 * (std::polar(1.0, -param_) * (z - point_)).real();
    }
    throw std::logic_error("unreachable");
}

void GeneralizedDisk::distance_form(double& a, cplx& b, double& c) const {
    switch (kind_) {
        case DiskKind::Interior:
            a = -1.0 / param_;
            b = point_ / param_;
            c = (param_ * param_ - std::norm(point_)) / param_;
            return;
        case DiskKind::Exterior:
            a = 1.0 / param_;
            b = -point_ / param_;
            c = (std::norm(point_) - param_ * param_) / param_;
            return;
        case DiskKind::HalfPlane:
            a = 0.0;
            b = std::polar(1.0, param_);
            c = -2.0 * (std::polar(1.0, -param_) * point_).real();
            return;
    }
}

RiemannPoint GeneralizedDisk::deep_point() const {
    if (kind_ == DiskKind::Interior) return RiemannPoint(point_);
    return RiemannPoint::infinity();
}

GeneralizedDisk GeneralizedDisk::enlarged(double eps) const {
    if (eps <= 0.0) throw std::invalid_argument("disk: enlargement must be positive");
    switch (kind_) {
        case DiskKind::Interior:
            return disk(point_, param_ + eps);
        case DiskKind::Exterior:
            if (param_ - eps <= 0.0)
                throw std::invalid_argument("disk: exterior radius underflow");
            return exterior(point_, param_ - eps);
        case DiskKind::HalfPlane:
            return half_plane(param_, point_ - eps * std::polar(1.0, param_));
    }
    throw std::logic_error("unreachable");
}

bool GeneralizedDisk::approx_equal(const GeneralizedDisk& other, double tol) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == DiskKind::HalfPlane) {
        // same half-plane iff same boundary line and same side
        if (!boundary().approx_equal(other.boundary(), tol)) return false;
        return std::abs(wrap_angle(param_ - other.param_)) <= tol;
    }
    return std::abs(point_ - other.point_) <= tol && std::abs(param_ - other.param_) <= tol;
}

std::string GeneralizedDisk::to_json() const {
    nlohmann::json j;
    switch (kind_) {
        case DiskKind::Interior:
            j["kind"] = "disk";
            j["center"] = {point_.real(), point_.imag()};
            j["radius"] = param_;
            break;
        case DiskKind::Exterior:
            j["kind"] = "exterior";
            j["center"] = {point_.real(), point_.imag()};
            j["radius"] = param_;
            break;
        case DiskKind::HalfPlane:
            j["kind"] = "halfplane";
            j["anchor"] = {point_.real(), point_.imag()};
            j["theta"] = param_;
            break;
    }
    return j.dump();
}

GeneralizedDisk GeneralizedDisk::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::string kind = j.at("kind");
    if (kind == "disk" || kind == "exterior") {
        auto c = j.at("center");
        cplx w(c.at(0).get<double>(), c.at(1).get<double>());
        double r = j.at("radius");
        return kind == "disk" ? disk(w, r) : exterior(w, r);
    }
    if (kind == "halfplane") {
        auto a = j.at("anchor");
        cplx anchor(a.at(0).get<double>(), a.at(1).get<double>());
        return half_plane(j.at("theta").get<double>(), anchor);
    }
    throw std::invalid_argument("disk: unknown kind '" + kind + "'");
}

double caratheodory_distance(cplx z, const GeneralizedDisk& D) {
    double d = D.signed_distance(z);
    if (d < -1e-12 * std::max(1.0, std::abs(z)))
        throw std::domain_error("caratheodory_distance: point outside disk");
    return std::abs(d);
}

Circline median_circline(const GeneralizedDisk& Dj, const GeneralizedDisk& Dk) {
    double aj = 0, ak = 0, cj = 0, ck = 0;
    cplx bj, bk;
    Dj.distance_form(aj, bj, cj);
    Dk.distance_form(ak, bk, ck);
    double a = aj - ak;
    cplx b = bj - bk;
    double c = cj - ck;
    if (std::abs(a) <= kGeomTol && std::abs(b) <= kGeomTol)
        throw std::invalid_argument("median_circline: degenerate pair");
    return Circline(a, b, c);
}

bool disk_subset(const GeneralizedDisk& D1, const GeneralizedDisk& D2, double tol) {
    if (D1.boundary().approx_equal(D2.boundary(), tol))
        return D1.approx_equal(D2, tol);  // complementary disks share only the boundary
    auto pts = circline_intersection(D1.boundary(), D2.boundary(), tol);
    if (pts.size() == 2) return false;  // boundaries properly cross
    // Boundaries do not cross: D1 ⊆ D2 iff the boundary of D1 lies in D2,
    // the interior representative of D1 lies in D2, and the boundary of D2
    // stays outside the interior of D1.
    const OrientedArc b1 = D1.boundary_arc();
    const OrientedArc b2 = D2.boundary_arc();
    auto sample = [](const OrientedArc& arc, double frac) {
        if (arc.is_circle()) return arc.sigma(frac * arc.length());
        return arc.sigma(-3.0 + 6.0 * frac);
    };
    int inside = 0, strictly_in_d1 = 0;
    const double fr[4] = {0.12, 0.37, 0.61, 0.86};
    for (double f : fr) {
        if (D2.contains(RiemannPoint(sample(b1, f)), tol)) ++inside;
        if (D1.signed_distance(sample(b2, f)) > tol) ++strictly_in_d1;
    }
    if (inside < 3) return false;
    if (strictly_in_d1 >= 2) return false;
    if (!D2.contains(D1.deep_point(), tol)) return false;
    return true;
}

}  // namespace specset
