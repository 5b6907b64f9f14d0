#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "specset/decomposition.hpp"

using namespace specset;
using std::numbers::pi;

namespace {

double mdiff(const Matrix& X, const Matrix& Y) { return (X - Y).cwiseAbs().maxCoeff(); }

RationalMatrixFunction scalar_f(RationalFunction f) {
    return RationalMatrixFunction::scalar(std::move(f));
}

// (z + 1/z)/2
RationalFunction joukowski() { return RationalFunction({0.5, 0.0, 0.5}, {0.0, 1.0}); }

ProblemInstance make_instance(InstanceKind kind, std::uint64_t seed, double param = 2.0) {
    InstanceConfig cfg;
    cfg.kind = kind;
    cfg.param = param;
    cfg.n_dim = 3;
    cfg.seed = seed;
    return random_instance(cfg);
}

}  // namespace

TEST_CASE("single disk: everything is the boundary term") {
    Matrix A(2, 2);
    A << 0.3, 0.5, 0.0, -0.2;
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, 1.0)};
    auto dec = decompose(scalar_f(RationalFunction::constant(1.0)), A, disks);
    CHECK(mdiff(dec.g_p, Matrix::Identity(2, 2)) < 1e-8);
    CHECK(dec.g_r.cwiseAbs().maxCoeff() < 1e-15);
    CHECK(dec.defect < 1e-8);

    dec = decompose(scalar_f(RationalFunction::identity()), A, disks);
    CHECK(mdiff(dec.g_p, A) < 1e-8);
    CHECK(dec.defect < 1e-8);
}

TEST_CASE("constant functions decompose to c times the identity") {
    auto inst = make_instance(InstanceKind::Annulus, 4);
    auto dec = decompose(scalar_f(RationalFunction::constant(cplx(2, -1))), inst.A, inst.disks);
    CHECK(mdiff(dec.g_p + dec.g_r, Matrix(cplx(2, -1) * Matrix::Identity(3, 3))) < 1e-8);
}

TEST_CASE("annulus: joukowski split and the residual norm bound") {
    const double R = 2.0;
    auto inst = make_instance(InstanceKind::Annulus, 9, R);
    auto dec = decompose(scalar_f(joukowski()), inst.A, inst.disks);
    CHECK(dec.defect < 1e-7);

    // f = 1: g_p(1) = I - g_r(1) and the sharper annulus residual bound
    auto dec1 = decompose(scalar_f(RationalFunction::constant(1.0)), inst.A, inst.disks);
    CHECK(mdiff(dec1.g_p, Matrix(Matrix::Identity(3, 3) - dec1.g_r)) < 1e-8);
    CHECK(spectral_norm(dec1.g_p) <= 2.0 + 1e-6);
    CHECK(spectral_norm(dec1.g_r) <= (R + 1) / std::sqrt(R * R + R + 1) + 1e-6);
}

TEST_CASE("sector: residual norm stays under 2/sqrt(3)") {
    auto inst = make_instance(InstanceKind::Sector, 2, pi / 4);
    auto dec = decompose(scalar_f(RationalFunction::constant(1.0)), inst.A, inst.disks);
    CHECK(spectral_norm(dec.g_r) <= 2.0 / std::sqrt(3.0) + 1e-6);
    CHECK(mdiff(dec.g_p + dec.g_r, Matrix::Identity(3, 3)) < 1e-7);
}

TEST_CASE("lens: linear function splits cleanly") {
    auto inst = make_instance(InstanceKind::Lens, 13);
    auto dec = decompose(scalar_f(RationalFunction::identity()), inst.A, inst.disks);
    CHECK(dec.defect < 1e-7);
}

TEST_CASE("decomposition defect across all configurations") {
    for (auto kind : {InstanceKind::Annulus, InstanceKind::Sector, InstanceKind::Strip,
                      InstanceKind::Lens, InstanceKind::NDisks}) {
        for (std::uint64_t seed : {1, 5, 23}) {
            auto inst = make_instance(kind, seed, kind == InstanceKind::Sector ? pi / 5 : 2.0);
            auto dec = decompose(inst.f, inst.A, inst.disks);
            CAPTURE(static_cast<int>(kind));
            CAPTURE(seed);
            CHECK(dec.defect < 1e-7);

            // bound chain against the sup norm over X
            double supf = sup_norm(inst.f, inst.disks);
            double n = dec.n_disks;
            CHECK(spectral_norm(dec.g_p) <= n * supf + 1e-6);
            CHECK(spectral_norm(dec.g_r) <= (n * (n - 1) / std::sqrt(3.0)) * supf + 1e-6);
        }
    }
}

TEST_CASE("block functions decompose as well") {
    auto inst = make_instance(InstanceKind::Annulus, 31);
    RationalMatrixFunction F(2, 2, RationalFunction::constant(0.0));
    F.at(0, 0) = joukowski();
    F.at(0, 1) = RationalFunction::identity();
    F.at(1, 1) = joukowski();
    auto dec = decompose(F, inst.A, inst.disks);
    CHECK(dec.defect < 1e-7);
    CHECK(dec.g_p.rows() == 6);
}

TEST_CASE("automatic enlargement when the spectrum touches the boundary") {
    Matrix A(2, 2);
    A << 2.0, 0.0, 0.0, 1.0;  // eigenvalue exactly on |z| = 2
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, 2.0),
                                          GeneralizedDisk::exterior(0.0, 0.5)};
    auto dec = decompose(scalar_f(joukowski()), A, disks, 1e-8);
    CHECK(dec.enlarged);
    CHECK(dec.defect < 1e-4);

    Matrix B(2, 2);
    B << 3.0, 0.0, 0.0, 1.0;  // well outside: no rescue by enlargement
    CHECK_THROWS_AS(decompose(scalar_f(joukowski()), B, disks), std::invalid_argument);
}

TEST_CASE("residual integral is chart independent") {
    auto inst = make_instance(InstanceKind::Annulus, 7);
    RationalMatrixFunction F = scalar_f(joukowski());
    Tessellation tess = build_tessellation(inst.disks);
    Matrix direct = g_residual(F, inst.A, tess);

    for (const MoebiusMap& phi :
         {MoebiusMap(cplx(2, 0), cplx(1, 1), 0.0, 1.0), MoebiusMap(0.0, 1.0, 1.0, -4.0)}) {
        std::vector<GeneralizedDisk> mapped;
        for (const auto& D : inst.disks) mapped.push_back(phi.image_disk(D));
        Tessellation tess2 = build_tessellation(mapped);
        RationalMatrixFunction G(1, 1, F.at(0, 0).compose_moebius(phi.inverse()));
        Matrix B = moebius_of_matrix(phi, inst.A);
        Matrix mapped_val = g_residual(G, B, tess2);
        CHECK(mdiff(direct, mapped_val) < 1e-8);
    }
}

TEST_CASE("report JSON carries the norms and the theorem bound") {
    auto inst = make_instance(InstanceKind::Annulus, 3);
    auto dec = decompose(scalar_f(joukowski()), inst.A, inst.disks);
    auto rep = nlohmann::json::parse(decomposition_report(dec));
    CHECK(rep["bound"].get<double>() ==
          doctest::Approx(2.0 + 2.0 / std::sqrt(3.0)));
    CHECK(rep["defect"].get<double>() == doctest::Approx(dec.defect));
    CHECK(rep["norm_fA"].get<double>() == doctest::Approx(spectral_norm(dec.f_direct)));
    CHECK(rep["panels"].get<int>() == dec.panels);
}

TEST_CASE("empirical ratio never exceeds the complete bound") {
    for (std::uint64_t seed : {2, 8}) {
        auto inst = make_instance(InstanceKind::Annulus, seed);
        RationalMatrixFunction F(2, 2, RationalFunction::constant(0.0));
        F.at(0, 0) = joukowski();
        F.at(0, 1) = RationalFunction::identity();
        F.at(1, 0) = RationalFunction::constant(0.3);
        F.at(1, 1) = joukowski();
        double ratio = empirical_cb_ratio(F, inst);
        CHECK(ratio <= 2.0 + 2.0 / std::sqrt(3.0) + 1e-9);
        CHECK(ratio > 0.0);
    }
    // a normal matrix with a scalar function cannot beat ratio 1
    Matrix A(2, 2);
    A << cplx(1.5, 0), 0.0, 0.0, cplx(0.0, -0.9);
    ProblemInstance inst = make_instance(InstanceKind::Annulus, 0);
    inst.A = A;
    inst.disks = {GeneralizedDisk::disk(0.0, 2.0), GeneralizedDisk::exterior(0.0, 0.5)};
    inst.f = scalar_f(joukowski());
    CHECK(empirical_cb_ratio(inst.f, inst) <= 1.0 + 1e-9);
}
