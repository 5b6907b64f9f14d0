#include "specset/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace specset {

namespace {

double local_scale(cplx z) { return std::max(1.0, std::abs(z)); }

/// A convenient interior sample with its tangent, valid for any arc.
std::pair<cplx, cplx> arc_probe(const OrientedArc& arc) {
    if (arc.is_circle()) {
        double s = 0.5 * arc.length();
        return {arc.sigma(s), arc.dsigma(s)};
    }
    double s0 = arc.s_begin(), s1 = arc.s_end();
    double s;
    if (std::isfinite(s0) && std::isfinite(s1))
        s = 0.5 * (s0 + s1);
    else if (std::isfinite(s0))
        s = s0 + 1.0;
    else if (std::isfinite(s1))
        s = s1 - 1.0;
    else
        s = 0.0;
    return {arc.sigma(s), arc.dsigma(s)};
}

/// Interior sample points along the arc (finite even on unbounded arcs).
std::vector<cplx> arc_samples(const OrientedArc& arc) {
    std::vector<cplx> out;
    for (const auto& chart : arc.charts())
        for (double t : {0.3, 0.5, 0.7}) out.push_back(chart.z(t));
    return out;
}

struct DistForm {
    double a;
    cplx b;
    double c;
};

DistForm form_of(const GeneralizedDisk& D) {
    DistForm f;
    D.distance_form(f.a, f.b, f.c);
    return f;
}

}  // namespace

Tessellation build_tessellation(const std::vector<GeneralizedDisk>& input, double tol) {
    Tessellation tess;
    tess.original_indices = reduce_disks(input, tol);
    for (int i : tess.original_indices) tess.disks.push_back(input[i]);
    const auto& disks = tess.disks;
    const int n = static_cast<int>(disks.size());

    tess.boundary_arcs = intersection_boundary_arcs(disks, tol);
    if (tess.boundary_arcs.empty())
        throw std::invalid_argument("tessellation: X has empty interior");

    auto in_X = [&](cplx z) {
        for (const auto& D : disks)
            if (D.signed_distance(z) < -tol * local_scale(z)) return false;
        return true;
    };

    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Circline med = median_circline(disks[j], disks[k]);
            // split candidates: exits through any boundary and points
            // equidistant to a third disk
            std::vector<RiemannPoint> cuts;
            auto add_cuts = [&](const Circline& other) {
                if (med.approx_equal(other, tol)) return;
                auto pts = circline_intersection(med, other, tol);
                cuts.insert(cuts.end(), pts.begin(), pts.end());
            };
            for (int m = 0; m < n; ++m) add_cuts(disks[m].boundary());
            for (int l = 0; l < n; ++l) {
                if (l == j || l == k) continue;
                add_cuts(median_circline(disks[j], disks[l]));
                add_cuts(median_circline(disks[k], disks[l]));
            }
            DistForm fj = form_of(disks[j]), fk = form_of(disks[k]);
            for (auto& piece : split_circline(med, cuts)) {
                bool keep = true;
                for (cplx z : arc_samples(piece)) {
                    if (!in_X(z)) {
                        keep = false;
                        break;
                    }
                    double dj = disks[j].signed_distance(z);
                    for (int m = 0; m < n && keep; ++m)
                        if (disks[m].signed_distance(z) < dj - tol * local_scale(z))
                            keep = false;
                    if (!keep) break;
                }
                if (!keep) continue;
                // orient with the cell X_k on the left: the gradient of
                // d_j - d_k points into the region where d_k is smaller
                auto [z0, tau] = arc_probe(piece);
                cplx grad = 2.0 * ((fj.a - fk.a) * z0 + (fj.b - fk.b));
                double side = (std::conj(grad) * (cplx(0, 1) * tau)).real();
                tess.median_arcs.push_back({j, k, side >= 0 ? piece : piece.reversed()});
            }
        }
    }
    return tess;
}

std::vector<int> cell_of(const Tessellation& tess, cplx z, double tol) {
    double scale = local_scale(z);
    std::vector<double> d(tess.disks.size());
    for (size_t m = 0; m < tess.disks.size(); ++m) {
        d[m] = tess.disks[m].signed_distance(z);
        if (d[m] < -tol * scale) throw std::domain_error("cell_of: point outside X");
        d[m] = std::max(d[m], 0.0);
    }
    double dmin = *std::min_element(d.begin(), d.end());
    std::vector<int> out;
    for (size_t m = 0; m < d.size(); ++m)
        if (d[m] <= dmin + tol * scale) out.push_back(static_cast<int>(m));
    return out;
}

std::vector<MedianArc> integration_paths(const Tessellation& tess, int j) {
    std::vector<MedianArc> out;
    for (const auto& ma : tess.median_arcs) {
        if (ma.j == j)
            out.push_back(ma);
        else if (ma.k == j)
            out.push_back({ma.j, ma.k, ma.arc.reversed()});
    }
    return out;
}

namespace {

nlohmann::json point_json(const RiemannPoint& p) {
    if (p.inf) return "inf";
    return nlohmann::json::array({p.z.real(), p.z.imag()});
}

nlohmann::json arc_json(const OrientedArc& arc) {
    nlohmann::json a;
    Circline carrier = arc.carrier();
    a["carrier"] = {{"a", carrier.a()},
                    {"b", {carrier.b().real(), carrier.b().imag()}},
                    {"c", carrier.c()}};
    a["start"] = point_json(arc.start());
    a["end"] = point_json(arc.end());
    if (arc.is_circle())
        a["orient"] = arc.sweep() >= 0 ? 1 : -1;
    else {
        a["orient"] = 1;
        a["dir"] = {arc.line_dir().real(), arc.line_dir().imag()};
    }
    return a;
}

}  // namespace

std::string export_geometry_json(const Tessellation& tess) {
    nlohmann::json j;
    nlohmann::json dd = nlohmann::json::array();
    for (const auto& D : tess.disks) dd.push_back(nlohmann::json::parse(D.to_json()));
    j["disks"] = dd;
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& ma : tess.median_arcs) {
        nlohmann::json a = arc_json(ma.arc);
        a["j"] = ma.j;
        a["k"] = ma.k;
        arcs.push_back(a);
    }
    j["arcs"] = arcs;
    nlohmann::json bd = nlohmann::json::array();
    for (const auto& bp : tess.boundary_arcs) {
        nlohmann::json a = arc_json(bp.arc);
        a["j"] = bp.disk_index;
        bd.push_back(a);
    }
    j["boundary"] = bd;
    // deduplicated finite endpoints of the median arcs
    std::vector<cplx> verts;
    for (const auto& ma : tess.median_arcs)
        for (auto p : {ma.arc.start(), ma.arc.end()}) {
            if (p.inf) continue;
            bool dup = false;
            for (cplx v : verts) dup = dup || std::abs(v - p.z) < 1e-9;
            if (!dup) verts.push_back(p.z);
        }
    std::sort(verts.begin(), verts.end(), [](cplx x, cplx y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    nlohmann::json vv = nlohmann::json::array();
    for (cplx v : verts) vv.push_back({v.real(), v.imag()});
    j["vertices"] = vv;
    return j.dump();
}

namespace {

void svg_arc(std::string& out, const OrientedArc& arc, const char* color, double viewport) {
    char buf[256];
    if (arc.is_circle()) {
        cplx w = arc.center();
        double r = arc.radius();
        if (std::abs(std::abs(arc.sweep()) - 2.0 * std::numbers::pi) < 1e-12) {
            std::snprintf(buf, sizeof buf,
                          "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" fill=\"none\" "
                          "stroke=\"%s\" stroke-width=\"0.02\"/>\n",
                          w.real(), w.imag(), r, color);
            out += buf;
        } else {
            cplx p0 = arc.start().z, p1 = arc.end().z;
            int large = std::abs(arc.sweep()) > std::numbers::pi ? 1 : 0;
            int flag = arc.sweep() >= 0 ? 1 : 0;
            std::snprintf(buf, sizeof buf,
                          "<path d=\"M %.6f %.6f A %.6f %.6f 0 %d %d %.6f %.6f\" fill=\"none\" "
                          "stroke=\"%s\" stroke-width=\"0.02\"/>\n",
                          p0.real(), p0.imag(), r, r, large, flag, p1.real(), p1.imag(), color);
            out += buf;
        }
        return;
    }
    double L = 3.0 * viewport;
    double s0 = std::max(arc.s_begin(), -L);
    double s1 = std::min(arc.s_end(), L);
    if (s0 >= s1) return;
    cplx p0 = arc.sigma(s0), p1 = arc.sigma(s1);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.6f\" y1=\"%.6f\" x2=\"%.6f\" y2=\"%.6f\" stroke=\"%s\" "
                  "stroke-width=\"0.02\"/>\n",
                  p0.real(), p0.imag(), p1.real(), p1.imag(), color);
    out += buf;
}

}  // namespace

std::string export_geometry_svg(const Tessellation& tess, double viewport) {
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.2f %.2f %.2f %.2f\">\n",
                  -viewport, -viewport, 2 * viewport, 2 * viewport);
    out += buf;
    for (const auto& bp : tess.boundary_arcs) svg_arc(out, bp.arc, "black", viewport);
    for (const auto& ma : tess.median_arcs) svg_arc(out, ma.arc, "red", viewport);
    out += "</svg>\n";
    return out;
}

}  // namespace specset
