#include "specset/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace specset {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double wrap2pi(double t) {
    t = std::fmod(t, 2.0 * kPi);
    if (t < 0) t += 2.0 * kPi;
    return t;
}

double wrap_pm_pi(double t) {
    t = std::fmod(t, 2.0 * kPi);
    if (t <= -kPi) t += 2.0 * kPi;
    if (t > kPi) t -= 2.0 * kPi;
    return t;
}

MoebiusMap rotation(double angle) { return MoebiusMap::dilation(std::polar(1.0, angle)); }

}  // namespace

std::vector<RiemannPoint> boundary_intersection(const GeneralizedDisk& D1,
                                                const GeneralizedDisk& D2, double tol) {
    return circline_intersection(D1.boundary(), D2.boundary(), tol);
}

bool in_intersection(const std::vector<GeneralizedDisk>& disks, const RiemannPoint& p,
                     double tol) {
    double scaled = tol * (p.inf ? 1.0 : std::max(1.0, std::abs(p.z)));
    for (const auto& D : disks)
        if (!D.contains(p, scaled)) return false;
    return true;
}

std::vector<OrientedArc> split_circline(const Circline& carrier,
                                        const std::vector<RiemannPoint>& points) {
    std::vector<OrientedArc> out;
    if (!carrier.is_line()) {
        cplx w = carrier.center();
        double r = carrier.radius();
        std::vector<double> angles;
        for (const auto& p : points)
            if (!p.inf) angles.push_back(wrap2pi(std::arg(p.z - w)));
        std::sort(angles.begin(), angles.end());
        angles.erase(std::unique(angles.begin(), angles.end(),
                                 [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                     angles.end());
        if (angles.empty()) {
            out.push_back(OrientedArc::circle_arc(w, r, 0.0, 2.0 * kPi));
            return out;
        }
        for (size_t i = 0; i < angles.size(); ++i) {
            double a0 = angles[i];
            double a1 = (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + 2.0 * kPi;
            double sweep = a1 - a0;
            if (sweep < 1e-12) continue;
            out.push_back(OrientedArc::circle_arc(w, r, a0, sweep));
        }
        return out;
    }
    cplx u = carrier.line_unit_normal();
    cplx base = carrier.line_offset() * u;
    cplx dir = cplx(0, 1) * u;
    std::vector<double> svals;
    for (const auto& p : points)
        if (!p.inf) svals.push_back((std::conj(dir) * (p.z - base)).real());
    std::sort(svals.begin(), svals.end());
    svals.erase(std::unique(svals.begin(), svals.end(),
                            [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                svals.end());
    if (svals.empty()) {
        out.push_back(OrientedArc::line_arc(base, dir, -kInf, kInf));
        return out;
    }
    out.push_back(OrientedArc::line_arc(base, dir, -kInf, svals.front()));
    for (size_t i = 0; i + 1 < svals.size(); ++i)
        if (svals[i + 1] - svals[i] > 1e-12)
            out.push_back(OrientedArc::line_arc(base, dir, svals[i], svals[i + 1]));
    out.push_back(OrientedArc::line_arc(base, dir, svals.back(), kInf));
    return out;
}

std::vector<OrientedArc> split_boundary(const GeneralizedDisk& D,
                                        const std::vector<RiemannPoint>& points) {
    OrientedArc full = D.boundary_arc();
    std::vector<OrientedArc> pieces = split_circline(D.boundary(), points);
    // fix orientation to the disk's convention
    std::vector<OrientedArc> out;
    out.reserve(pieces.size());
    for (auto& arc : pieces) {
        if (arc.is_circle()) {
            bool want_ccw = full.sweep() > 0;
            bool is_ccw = arc.sweep() > 0;
            out.push_back(want_ccw == is_ccw ? arc : arc.reversed());
        } else {
            bool same = (std::conj(full.line_dir()) * arc.line_dir()).real() > 0;
            out.push_back(same ? arc : arc.reversed());
        }
    }
    return out;
}

std::vector<BoundaryPiece> intersection_boundary_arcs(const std::vector<GeneralizedDisk>& disks,
                                                      double tol) {
    std::vector<BoundaryPiece> out;
    const int n = static_cast<int>(disks.size());
    for (int j = 0; j < n; ++j) {
        std::vector<RiemannPoint> cuts;
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            if (disks[j].boundary().approx_equal(disks[k].boundary(), tol))
                throw std::invalid_argument("boundary arcs: coincident boundaries");
            auto pts = circline_intersection(disks[j].boundary(), disks[k].boundary(), tol);
            cuts.insert(cuts.end(), pts.begin(), pts.end());
        }
        for (auto& piece : split_boundary(disks[j], cuts)) {
            if (in_intersection(disks, RiemannPoint(piece.representative()), tol))
                out.push_back({j, piece});
        }
    }
    return out;
}

std::vector<int> reduce_disks(const std::vector<GeneralizedDisk>& disks, double tol) {
    const int n = static_cast<int>(disks.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (disks[i].approx_equal(disks[j], tol))
                throw std::invalid_argument("reduce_disks: duplicate disks");
    std::vector<bool> drop(n, false);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || drop[i] || drop[j]) continue;
            if (disk_subset(disks[i], disks[j], tol)) drop[j] = true;  // superset redundant
        }
    std::vector<int> kept;
    for (int i = 0; i < n; ++i)
        if (!drop[i]) kept.push_back(i);
    return kept;
}

std::pair<GeneralizedDisk, GeneralizedDisk> canonical_disks(const CanonicalPairConfig& cfg) {
    switch (cfg.variant) {
        case CanonicalPairConfig::Variant::Annulus:
            return {GeneralizedDisk::disk(0.0, cfg.param),
                    GeneralizedDisk::exterior(0.0, 1.0 / cfg.param)};
        case CanonicalPairConfig::Variant::Sector:
            return {GeneralizedDisk::half_plane(-cfg.param, 0.0),
                    GeneralizedDisk::half_plane(cfg.param, 0.0)};
        case CanonicalPairConfig::Variant::Strip:
            return {GeneralizedDisk::half_plane(-kPi / 2, cplx(0, 1)),
                    GeneralizedDisk::half_plane(kPi / 2, cplx(0, -1))};
    }
    throw std::logic_error("unreachable");
}

namespace {

bool matches_canonical(const CanonicalPairConfig& cfg, const GeneralizedDisk& D1,
                       const GeneralizedDisk& D2, double tol) {
    auto [C1, C2] = canonical_disks(cfg);
    GeneralizedDisk I1 = cfg.map.image_disk(D1);
    GeneralizedDisk I2 = cfg.map.image_disk(D2);
    return I1.kind() == C1.kind() && I2.kind() == C2.kind() &&
           I1.boundary().approx_equal(C1.boundary(), tol) &&
           I2.boundary().approx_equal(C2.boundary(), tol) && I1.approx_equal(C1, 1e-6) &&
           I2.approx_equal(C2, 1e-6);
}

double pole_score(const RiemannPoint& p, const std::vector<cplx>& avoid) {
    if (avoid.empty()) return p.inf ? kInf : std::abs(p.z);
    if (p.inf) return kInf;
    double best = kInf;
    for (cplx s : avoid) best = std::min(best, std::abs(p.z - s));
    return best;
}

CanonicalPairConfig normalize_disjoint(const GeneralizedDisk& D1, const GeneralizedDisk& D2,
                                       const std::vector<cplx>& avoid) {
    (void)avoid;  // the canonical ordering forces the pole in this case
    const Circline B1 = D1.boundary(), B2 = D2.boundary();
    // degenerate members of the pencil H1 + lambda*H2: point circles at the
    // two limit points; det is a real quadratic in lambda
    const double alpha = B2.a() * B2.c() - std::norm(B2.b());  // = -disc2 < 0
    const double beta =
        B1.a() * B2.c() + B2.a() * B1.c() - 2.0 * (B1.b() * std::conj(B2.b())).real();
    const double gamma = B1.a() * B1.c() - std::norm(B1.b());
    double disc = beta * beta - 4.0 * alpha * gamma;
    if (disc <= 0.0) throw std::invalid_argument("normalize_pair: no real pencil limit points");
    double sq = std::sqrt(disc);
    double l1 = (-beta + sq) / (2.0 * alpha);
    double l2 = (-beta - sq) / (2.0 * alpha);
    auto limit_point = [&](double l) {
        double A = B1.a() + l * B2.a();
        cplx B = B1.b() + l * B2.b();
        // the point circle at infinity has A = 0 (and then B = 0 as well)
        if (std::abs(A) <= 1e-12 * std::max(1.0, std::abs(B))) return RiemannPoint::infinity();
        return RiemannPoint(-B / A);
    };
    RiemannPoint p1 = limit_point(l1), p2 = limit_point(l2);
    // the pole must land in D2 \ D1 so that infinity ends up in the image of D2
    RiemannPoint pole = p1, zero_pt = p2;
    if (D1.contains(p1, 1e-10) || !D2.contains(p1, 1e-10)) std::swap(pole, zero_pt);
    MoebiusMap phi0 = MoebiusMap::two_point(zero_pt, pole);
    GeneralizedDisk I1 = phi0.image_disk(D1);
    GeneralizedDisk I2 = phi0.image_disk(D2);
    if (I1.kind() != DiskKind::Interior || I2.kind() != DiskKind::Exterior)
        throw std::invalid_argument("normalize_pair: nested disks");
    double rho1 = I1.radius(), rho2 = I2.radius();
    if (rho2 >= rho1 * (1.0 - 1e-12))
        throw std::invalid_argument("normalize_pair: disjoint disks (empty intersection)");
    double R = std::sqrt(rho1 / rho2);
    double scale = 1.0 / std::sqrt(rho1 * rho2);
    CanonicalPairConfig cfg{CanonicalPairConfig::Variant::Annulus, R,
                            MoebiusMap::dilation(scale).compose(phi0)};
    if (!matches_canonical(cfg, D1, D2, 1e-8))
        throw std::logic_error("normalize_pair: annulus validation failed");
    return cfg;
}

CanonicalPairConfig normalize_crossing(const GeneralizedDisk& D1, const GeneralizedDisk& D2,
                                       const std::vector<RiemannPoint>& pts,
                                       const std::vector<cplx>& avoid) {
    std::vector<std::pair<RiemannPoint, RiemannPoint>> pole_choices = {{pts[0], pts[1]},
                                                                       {pts[1], pts[0]}};
    std::stable_sort(pole_choices.begin(), pole_choices.end(),
                     [&](const auto& x, const auto& y) {
                         return pole_score(x.first, avoid) > pole_score(y.first, avoid);
                     });
    for (const auto& [pole, zero_pt] : pole_choices) {
        MoebiusMap phi0 = MoebiusMap::two_point(zero_pt, pole);
        GeneralizedDisk I1 = phi0.image_disk(D1);
        GeneralizedDisk I2 = phi0.image_disk(D2);
        if (!I1.is_half_plane() || !I2.is_half_plane()) continue;
        double d1 = I1.theta(), d2 = I2.theta();
        double base = wrap_pm_pi((d2 - d1) / 2.0);
        for (double theta : {base, wrap_pm_pi(base + kPi)}) {
            if (!(theta > 1e-9 && theta < kPi / 2 - 1e-9)) continue;
            double rho = -theta - d1;
            CanonicalPairConfig cfg{CanonicalPairConfig::Variant::Sector, theta,
                                    rotation(rho).compose(phi0)};
            if (matches_canonical(cfg, D1, D2, 1e-8)) return cfg;
        }
    }
    throw std::invalid_argument("normalize_pair: could not reach canonical sector pair");
}

CanonicalPairConfig normalize_tangent(const GeneralizedDisk& D1, const GeneralizedDisk& D2,
                                      const RiemannPoint& alpha) {
    MoebiusMap phi0 = alpha.inf ? MoebiusMap::identity() : MoebiusMap(0, 1, 1, -alpha.z);
    GeneralizedDisk I1 = phi0.image_disk(D1);
    GeneralizedDisk I2 = phi0.image_disk(D2);
    if (!I1.is_half_plane() || !I2.is_half_plane())
        throw std::logic_error("normalize_pair: tangency images are not half-planes");
    double d1 = I1.theta(), d2 = I2.theta();
    if (std::abs(wrap_pm_pi(d1 - d2)) < kPi / 2)
        throw std::invalid_argument("normalize_pair: nested disks (tangent, same side)");
    MoebiusMap rot = rotation(-kPi / 2 - d1);
    MoebiusMap phi1 = rot.compose(phi0);
    GeneralizedDisk J1 = phi1.image_disk(D1);
    GeneralizedDisk J2 = phi1.image_disk(D2);
    double t1 = J1.anchor().imag();  // {Im z <= t1}
    double t2 = J2.anchor().imag();  // {Im z >= t2}
    if (t2 >= t1 - 1e-12)
        throw std::invalid_argument("normalize_pair: tangent disks with empty interior");
    double s = 2.0 / (t1 - t2);
    cplx mu = cplx(0, -1) * s * 0.5 * (t1 + t2);
    CanonicalPairConfig cfg{CanonicalPairConfig::Variant::Strip, 0.0,
                            MoebiusMap::translation(mu).compose(MoebiusMap::dilation(s)).compose(phi1)};
    if (!matches_canonical(cfg, D1, D2, 1e-8))
        throw std::logic_error("normalize_pair: strip validation failed");
    return cfg;
}

}  // namespace

CanonicalPairConfig normalize_pair(const GeneralizedDisk& D1, const GeneralizedDisk& D2,
                                   const std::vector<cplx>& avoid) {
    if (disk_subset(D1, D2) || disk_subset(D2, D1))
        throw std::invalid_argument("normalize_pair: nested disks");
    auto pts = boundary_intersection(D1, D2);
    // tangency within tolerance is routed to the strip case
    if (pts.empty()) return normalize_disjoint(D1, D2, avoid);
    if (pts.size() == 1) return normalize_tangent(D1, D2, pts[0]);
    return normalize_crossing(D1, D2, pts, avoid);
}

}  // namespace specset
