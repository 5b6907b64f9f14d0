#include "specset/moebius.hpp"

#include <cmath>

namespace specset {

MoebiusMap::MoebiusMap(cplx a, cplx b, cplx c, cplx d) : a_(a), b_(b), c_(c), d_(d) {
    cplx det = a_ * d_ - b_ * c_;
    double scale = std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
    if (std::abs(det) <= 1e-14 * scale * scale)
        throw std::invalid_argument("moebius: degenerate coefficients (ad = bc)");
    cplx s = std::sqrt(det);
    a_ /= s;
    b_ /= s;
    c_ /= s;
    d_ /= s;
}

MoebiusMap MoebiusMap::dilation(cplx l) {
    if (std::abs(l) == 0.0) throw std::invalid_argument("moebius: zero dilation");
    return MoebiusMap(l, 0, 0, 1);
}

MoebiusMap MoebiusMap::two_point(const RiemannPoint& q, const RiemannPoint& p) {
    if (q.inf && p.inf) throw std::invalid_argument("moebius: both reference points infinite");
    if (p.inf) return translation(-q.z);
    if (q.inf) return MoebiusMap(0, 1, 1, -p.z);  // 1/(z - p), sends inf -> 0
    if (std::abs(p.z - q.z) <= 1e-14) throw std::invalid_argument("moebius: coincident points");
    return MoebiusMap(1, -q.z, 1, -p.z);
}

RiemannPoint MoebiusMap::apply(const RiemannPoint& z) const {
    if (z.inf) {
        if (std::abs(c_) <= 1e-14) return RiemannPoint::infinity();
        return RiemannPoint(a_ / c_);
    }
    cplx den = c_ * z.z + d_;
    cplx num = a_ * z.z + b_;
    if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num))) return RiemannPoint::infinity();
    return RiemannPoint(num / den);
}

cplx MoebiusMap::operator()(cplx z) const {
    auto p = apply(RiemannPoint(z));
    if (p.inf) throw std::domain_error("moebius: image is infinity");
    return p.z;
}

cplx MoebiusMap::derivative(cplx z) const {
    cplx den = c_ * z + d_;
    return 1.0 / (den * den);
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& g) const {
    return MoebiusMap(a_ * g.a_ + b_ * g.c_, a_ * g.b_ + b_ * g.d_, c_ * g.a_ + d_ * g.c_,
                      c_ * g.b_ + d_ * g.d_);
}

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

RiemannPoint MoebiusMap::pole() const {
    if (std::abs(c_) <= 1e-14) return RiemannPoint::infinity();
    return RiemannPoint(-d_ / c_);
}

Circline MoebiusMap::image(const Circline& cl) const {
    // coefficients transform as H -> M^H H M with M the matrix of the inverse map
    const cplx m11 = d_, m12 = -b_, m21 = -c_, m22 = a_;
    const double A = cl.a();
    const cplx B = cl.b();
    const double C = cl.c();
    // H = [[A, B], [conj(B), C]]
    cplx h11 = std::conj(m11) * (A * m11 + B * m21) + std::conj(m21) * (std::conj(B) * m11 + C * m21);
    cplx h12 = std::conj(m11) * (A * m12 + B * m22) + std::conj(m21) * (std::conj(B) * m12 + C * m22);
    cplx h22 = std::conj(m12) * (A * m12 + B * m22) + std::conj(m22) * (std::conj(B) * m12 + C * m22);
    return Circline(h11.real(), h12, h22.real());
}

GeneralizedDisk MoebiusMap::image_disk(const GeneralizedDisk& D) const {
    Circline img = image(D.boundary());
    const bool img_has_inf = D.contains(pole(), 1e-13);
    if (img.is_line()) {
        // find a finite interior test point whose image is finite
        cplx zt;
        bool found = false;
        if (D.kind() == DiskKind::Interior) {
            for (double f : {0.0, 0.5, -0.5, 0.25}) {
                cplx cand = D.center() + f * D.radius();
                if (!apply(RiemannPoint(cand)).inf && D.signed_distance(cand) > 0) {
                    zt = cand;
                    found = true;
                    break;
                }
            }
        } else {
            Circline bc = D.boundary();
            cplx inward;
            double base_scale;
            if (D.kind() == DiskKind::Exterior) {
                inward = cplx(1, 0);
                base_scale = D.radius();
                for (double f : {2.0, 3.0, 5.0, 7.5}) {
                    cplx cand = D.center() + f * base_scale * std::polar(1.0, 0.7 * f);
                    if (D.signed_distance(cand) > 0 && !apply(RiemannPoint(cand)).inf) {
                        zt = cand;
                        found = true;
                        break;
                    }
                }
            } else {
                for (double f : {1.0, 2.0, 3.5, 5.0}) {
                    cplx cand = D.anchor() + f * std::polar(1.0, D.theta());
                    if (D.signed_distance(cand) > 0 && !apply(RiemannPoint(cand)).inf) {
                        zt = cand;
                        found = true;
                        break;
                    }
                }
            }
            (void)bc;
        }
        if (!found) throw std::logic_error("moebius: no usable test point");
        cplx w = (*this)(zt);
        cplx u = img.line_unit_normal();
        double offset = img.line_offset();
        cplx anchor = offset * u;
        double side = (std::conj(u) * w).real() - offset;
        if (side < 0) u = -u;
        return GeneralizedDisk::half_plane(std::arg(u), anchor);
    }
    cplx o = img.center();
    double rho = img.radius();
    return img_has_inf ? GeneralizedDisk::exterior(o, rho) : GeneralizedDisk::disk(o, rho);
}

bool MoebiusMap::approx_identity(double tol) const {
    // up to overall sign of the det-1 coefficients
    auto close = [tol](cplx x, cplx y) { return std::abs(x - y) <= tol; };
    return (close(a_, d_) && close(b_, 0) && close(c_, 0) &&
            (close(a_, 1.0) || close(a_, -1.0)));
}

}  // namespace specset
