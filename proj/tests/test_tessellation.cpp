#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "specset/quadrature.hpp"
#include "specset/tessellation.hpp"

using namespace specset;
using std::numbers::pi;

namespace {

cplx integrate_scalar(const std::function<cplx(cplx)>& h, const std::vector<OrientedArc>& arcs) {
    auto dens = [&](cplx z) -> Matrix {
        Matrix M(1, 1);
        M(0, 0) = h(z);
        return M;
    };
    return integrate_arcs(dens, arcs, Measure::Dz, 1e-11).value(0, 0);
}

/// |∫_{X ∩ ∂D_j} h dz − ∫_{j-side median arcs} h dz| for h analytic on D_j.
double replacement_defect(const Tessellation& tess, int j, const std::function<cplx(cplx)>& h) {
    std::vector<OrientedArc> bd, med;
    for (const auto& bp : tess.boundary_arcs)
        if (bp.disk_index == j) bd.push_back(bp.arc);
    for (const auto& ma : integration_paths(tess, j)) med.push_back(ma.arc);
    return std::abs(integrate_scalar(h, bd) - integrate_scalar(h, med));
}

std::vector<cplx> median_samples(const OrientedArc& arc) {
    std::vector<cplx> out;
    for (const auto& chart : arc.charts())
        for (double t : {0.15, 0.4, 0.6, 0.85}) out.push_back(chart.z(t));
    return out;
}

}  // namespace

TEST_CASE("annulus: median is the positively oriented unit circle") {
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, 2.0),
                                          GeneralizedDisk::exterior(0.0, 0.5)};
    Tessellation tess = build_tessellation(disks);
    CHECK(tess.disks.size() == 2);
    CHECK(tess.boundary_arcs.size() == 2);
    REQUIRE(tess.median_arcs.size() == 1);
    const auto& ma = tess.median_arcs[0];
    CHECK(ma.j == 0);
    CHECK(ma.k == 1);
    REQUIRE(ma.arc.is_circle());
    CHECK(ma.arc.carrier().approx_equal(Circline(1.0, 0.0, -1.0)));
    CHECK(ma.arc.sweep() == doctest::Approx(2 * pi));  // inner ring X_1 on the left
}

TEST_CASE("annulus: cells and tie sets") {
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, 2.0),
                                          GeneralizedDisk::exterior(0.0, 0.5)};
    Tessellation tess = build_tessellation(disks);
    CHECK(cell_of(tess, cplx(1.5, 0)) == std::vector<int>{0});
    CHECK(cell_of(tess, cplx(0, -0.6)) == std::vector<int>{1});
    for (double th : {0.3, 2.0, 4.4})
        CHECK(cell_of(tess, std::polar(1.0, th)) == std::vector<int>{0, 1});
    CHECK_THROWS_AS(cell_of(tess, cplx(2.5, 0)), std::domain_error);
    CHECK_THROWS_AS(cell_of(tess, cplx(0.3, 0)), std::domain_error);
}

TEST_CASE("single disk: no median arcs, one cell") {
    Tessellation tess = build_tessellation({GeneralizedDisk::disk(cplx(1, 1), 2.0)});
    CHECK(tess.median_arcs.empty());
    CHECK(tess.boundary_arcs.size() == 1);
    CHECK(cell_of(tess, cplx(1, 1)) == std::vector<int>{0});
    CHECK(integration_paths(tess, 0).empty());
}

TEST_CASE("redundant disks are dropped before tessellating") {
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, 2.0),
                                          GeneralizedDisk::disk(0.1, 7.0),
                                          GeneralizedDisk::exterior(0.0, 0.5)};
    Tessellation tess = build_tessellation(disks);
    CHECK(tess.original_indices == std::vector<int>{0, 2});
    CHECK(tess.median_arcs.size() == 1);
    CHECK_THROWS_AS(build_tessellation({GeneralizedDisk::disk(0.0, 1.0),
                                        GeneralizedDisk::disk(0.0, 1.0)}),
                    std::invalid_argument);
}

TEST_CASE("empty intersection is rejected") {
    CHECK_THROWS_AS(build_tessellation({GeneralizedDisk::disk(0.0, 1.0),
                                        GeneralizedDisk::disk(cplx(5, 0), 1.0)}),
                    std::invalid_argument);
}

TEST_CASE("sector: median is the positive real ray") {
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::half_plane(-pi / 4, 0.0),
                                          GeneralizedDisk::half_plane(pi / 4, 0.0)};
    Tessellation tess = build_tessellation(disks);
    REQUIRE(tess.median_arcs.size() == 1);
    const auto& arc = tess.median_arcs[0].arc;
    CHECK(!arc.is_circle());
    for (cplx z : median_samples(arc)) {
        CHECK(std::abs(z.imag()) < 1e-9);
        CHECK(z.real() > 0);
    }
    // one endpoint at the vertex, the other at infinity
    bool vertex = approx_point(arc.start(), RiemannPoint(cplx(0, 0))) ||
                  approx_point(arc.end(), RiemannPoint(cplx(0, 0)));
    CHECK(vertex);
    CHECK((arc.start().inf || arc.end().inf));
}

TEST_CASE("lens: median is the vertical chord between the crossing points") {
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, 1.0),
                                          GeneralizedDisk::disk(1.0, 1.0)};
    Tessellation tess = build_tessellation(disks);
    REQUIRE(tess.median_arcs.size() == 1);
    const auto& arc = tess.median_arcs[0].arc;
    CHECK(!arc.is_circle());
    CHECK(arc.finite_length());
    std::vector<cplx> ends = {arc.start().z, arc.end().z};
    std::sort(ends.begin(), ends.end(), [](cplx a, cplx b) { return a.imag() < b.imag(); });
    CHECK(std::abs(ends[0] - cplx(0.5, -std::sqrt(3.0) / 2)) < 1e-9);
    CHECK(std::abs(ends[1] - cplx(0.5, std::sqrt(3.0) / 2)) < 1e-9);
    for (cplx z : median_samples(arc)) CHECK(z.real() == doctest::Approx(0.5));
}

TEST_CASE("median arcs satisfy the distance invariants") {
    std::vector<std::vector<GeneralizedDisk>> families = {
        {GeneralizedDisk::disk(0.0, 2.0), GeneralizedDisk::exterior(0.0, 0.5)},
        {GeneralizedDisk::disk(0.0, 1.0), GeneralizedDisk::disk(1.0, 1.0)},
        {GeneralizedDisk::half_plane(-pi / 5, 0.0), GeneralizedDisk::half_plane(pi / 5, 0.0)},
        {GeneralizedDisk::disk(0.0, 2.0), GeneralizedDisk::exterior(0.0, 0.5),
         GeneralizedDisk::exterior(cplx(1.2, 0), 0.3)},
    };
    for (const auto& disks : families) {
        Tessellation tess = build_tessellation(disks);
        for (const auto& ma : tess.median_arcs) {
            Circline med = median_circline(tess.disks[ma.j], tess.disks[ma.k]);
            CHECK(ma.arc.carrier().approx_equal(med, 1e-7));
            for (cplx z : median_samples(ma.arc)) {
                double dj = tess.disks[ma.j].signed_distance(z);
                double dk = tess.disks[ma.k].signed_distance(z);
                CHECK(std::abs(dj - dk) < 1e-7 * std::max(1.0, std::abs(z)));
                for (const auto& D : tess.disks)
                    CHECK(D.signed_distance(z) >= dj - 1e-7 * std::max(1.0, std::abs(z)));
            }
        }
    }
}

TEST_CASE("three disks: the annulus median survives only outside the third cell") {
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, 2.0),
                                          GeneralizedDisk::exterior(0.0, 0.5),
                                          GeneralizedDisk::exterior(cplx(1.2, 0), 0.3)};
    Tessellation tess = build_tessellation(disks);
    CHECK(tess.boundary_arcs.size() == 3);
    double sweep01 = 0.0;
    bool has2 = false;
    for (const auto& ma : tess.median_arcs) {
        if (ma.j == 0 && ma.k == 1) {
            REQUIRE(ma.arc.is_circle());
            sweep01 += std::abs(ma.arc.sweep());
        }
        if (ma.k == 2) has2 = true;
    }
    CHECK(sweep01 > 1.0);
    CHECK(sweep01 < 2 * pi - 0.1);  // a proper subset of the unit circle
    CHECK(has2);
}

TEST_CASE("cell cover: multi-cell points lie on a median circline") {
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, 2.0),
                                          GeneralizedDisk::exterior(0.0, 0.5),
                                          GeneralizedDisk::exterior(cplx(1.2, 0), 0.3)};
    Tessellation tess = build_tessellation(disks);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    int tested = 0;
    while (tested < 2000) {
        cplx z(unif(rng), unif(rng));
        bool inside = true;
        for (const auto& D : tess.disks) inside = inside && D.signed_distance(z) > 1e-9;
        if (!inside) continue;
        ++tested;
        auto cells = cell_of(tess, z, 1e-6);
        REQUIRE(!cells.empty());
        if (cells.size() < 2) continue;
        bool near = false;
        for (size_t a = 0; a + 1 < cells.size(); ++a)
            for (size_t b = a + 1; b < cells.size(); ++b) {
                Circline med = median_circline(tess.disks[cells[a]], tess.disks[cells[b]]);
                near = near || std::abs(med.eval(z)) < 1e-4;
            }
        CHECK(near);
    }
}

TEST_CASE("path replacement: boundary pieces deform onto the j-side medians") {
    // closed contours: a simple pole inside the hole of the cell
    std::vector<GeneralizedDisk> annulus = {GeneralizedDisk::disk(0.0, 2.0),
                                            GeneralizedDisk::exterior(0.0, 0.5)};
    Tessellation ta = build_tessellation(annulus);
    auto pole = [](cplx p) { return [p](cplx z) { return 1.0 / (z - p); }; };
    CHECK(replacement_defect(ta, 0, pole(cplx(3.0, 0))) < 1e-8);
    CHECK(replacement_defect(ta, 1, pole(cplx(0.25, 0))) < 1e-8);
    // and the orientation really matters
    std::vector<OrientedArc> med1;
    for (const auto& ma : integration_paths(ta, 1)) med1.push_back(ma.arc);
    CHECK(std::abs(integrate_scalar(pole(cplx(0.25, 0)), med1) - cplx(0, -2 * pi)) < 1e-8);

    // unbounded contours: a double pole, decaying like 1/z^2
    std::vector<GeneralizedDisk> sector = {GeneralizedDisk::half_plane(-pi / 4, 0.0),
                                           GeneralizedDisk::half_plane(pi / 4, 0.0)};
    Tessellation ts = build_tessellation(sector);
    auto dpole = [](cplx p) {
        return [p](cplx z) { return 1.0 / ((z - p) * (z - p)); };
    };
    CHECK(replacement_defect(ts, 0, dpole(cplx(-2.0, 2.0))) < 1e-8);
    CHECK(replacement_defect(ts, 1, dpole(cplx(-2.0, -2.0))) < 1e-8);

    std::vector<GeneralizedDisk> lens = {GeneralizedDisk::disk(0.0, 1.0),
                                         GeneralizedDisk::disk(1.0, 1.0)};
    Tessellation tl = build_tessellation(lens);
    CHECK(replacement_defect(tl, 0, pole(cplx(1.5, 0))) < 1e-8);
    CHECK(replacement_defect(tl, 1, pole(cplx(-0.5, 0))) < 1e-8);

    std::vector<GeneralizedDisk> three = {GeneralizedDisk::disk(0.0, 2.0),
                                          GeneralizedDisk::exterior(0.0, 0.5),
                                          GeneralizedDisk::exterior(cplx(1.2, 0), 0.3)};
    Tessellation t3 = build_tessellation(three);
    CHECK(replacement_defect(t3, 0, pole(cplx(3.0, 0))) < 1e-8);
    CHECK(replacement_defect(t3, 1, pole(cplx(0.25, 0))) < 1e-8);
    CHECK(replacement_defect(t3, 2, pole(cplx(1.2, 0))) < 1e-8);
}

TEST_CASE("pair medians agree with the canonical normalization") {
    // crossing pair: normalized image of the median lies on the real axis
    std::vector<GeneralizedDisk> lens = {GeneralizedDisk::disk(0.0, 1.0),
                                         GeneralizedDisk::disk(1.0, 1.0)};
    Tessellation tl = build_tessellation(lens);
    CanonicalPairConfig cfg = normalize_pair(lens[0], lens[1]);
    CHECK(cfg.variant == CanonicalPairConfig::Variant::Sector);
    for (cplx z : median_samples(tl.median_arcs[0].arc)) {
        cplx w = cfg.map(z);
        CHECK(std::abs(w.imag()) < 1e-7 * std::abs(w));
        CHECK(w.real() > 0);
    }
    // disjoint pair: image of the median lies on the unit circle
    std::vector<GeneralizedDisk> pair = {GeneralizedDisk::disk(cplx(0.3, 0.1), 2.0),
                                         GeneralizedDisk::exterior(cplx(-0.2, 0), 0.4)};
    Tessellation tp = build_tessellation(pair);
    cfg = normalize_pair(pair[0], pair[1]);
    CHECK(cfg.variant == CanonicalPairConfig::Variant::Annulus);
    for (cplx z : median_samples(tp.median_arcs[0].arc))
        CHECK(std::abs(std::abs(cfg.map(z)) - 1.0) < 1e-7);
}

TEST_CASE("tessellation commutes with affine maps") {
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, 2.0),
                                          GeneralizedDisk::exterior(0.0, 0.5),
                                          GeneralizedDisk::exterior(cplx(1.2, 0), 0.3)};
    MoebiusMap phi(cplx(2, 0), cplx(1, 1), 0.0, 1.0);
    std::vector<GeneralizedDisk> mapped;
    for (const auto& D : disks) mapped.push_back(phi.image_disk(D));
    Tessellation t1 = build_tessellation(disks);
    Tessellation t2 = build_tessellation(mapped);
    CHECK(t1.median_arcs.size() == t2.median_arcs.size());
    for (const auto& ma : t1.median_arcs) {
        Circline target = median_circline(t2.disks[ma.j], t2.disks[ma.k]);
        for (cplx z : median_samples(ma.arc)) CHECK(std::abs(target.eval(phi(z))) < 1e-7);
    }
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    int tested = 0;
    while (tested < 200) {
        cplx z(unif(rng), unif(rng));
        bool inside = true;
        for (const auto& D : disks) inside = inside && D.signed_distance(z) > 1e-6;
        if (!inside) continue;
        ++tested;
        CHECK(cell_of(t1, z, 1e-6) == cell_of(t2, phi(z), 1e-6));
    }
}

TEST_CASE("geometry export is deterministic and structured") {
    std::vector<GeneralizedDisk> annulus = {GeneralizedDisk::disk(0.0, 2.0),
                                            GeneralizedDisk::exterior(0.0, 0.5)};
    Tessellation tess = build_tessellation(annulus);
    std::string text = export_geometry_json(tess);
    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["disks"].size() == 2);
    CHECK(parsed["arcs"].size() == 1);
    CHECK(parsed["arcs"][0]["j"] == 0);
    CHECK(parsed["arcs"][0]["k"] == 1);
    CHECK(parsed["boundary"].size() == 2);
    CHECK(parsed.dump() == text);  // byte-identical round trip

    std::string svg = export_geometry_svg(tess);
    size_t circles = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        pos += 7;
    }
    CHECK(circles == 3);  // two boundaries + the median

    // parallel half-planes + a disk exterior: line and arc medians together
    std::vector<GeneralizedDisk> fig3 = {GeneralizedDisk::half_plane(-pi / 2, cplx(0, 1)),
                                         GeneralizedDisk::half_plane(pi / 2, cplx(0, -1)),
                                         GeneralizedDisk::exterior(0.0, 0.4)};
    std::string svg3 = export_geometry_svg(build_tessellation(fig3));
    CHECK(svg3.find("<line") != std::string::npos);
    CHECK((svg3.find("<path") != std::string::npos || svg3.find("<circle") != std::string::npos));
}
