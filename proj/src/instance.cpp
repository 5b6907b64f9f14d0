#include "specset/instance.hpp"

#include <cmath>
#include <random>

#include "json.hpp"
#include "specset/geometry.hpp"

namespace specset {

namespace {

Matrix ginibre(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = cplx(g(rng), g(rng));
    return M;
}

Matrix random_unitary(int n, std::mt19937_64& rng) {
    Eigen::HouseholderQR<Matrix> qr(ginibre(n, rng));
    Matrix Q = qr.householderQ();
    Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        cplx d = R(i, i);
        Q.col(i) *= (std::abs(d) > 0 ? d / std::abs(d) : cplx(1.0));
    }
    return Q;
}

/// Hermitian with eigenvalues drawn uniformly from [lo, hi].
Matrix random_hermitian(int n, double lo, double hi, std::mt19937_64& rng) {
    Matrix V = random_unitary(n, rng);
    std::uniform_real_distribution<double> u(lo, hi);
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d(i) = u(rng);
    return V * d.asDiagonal() * V.adjoint();
}

cplx small_coeff(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

/// c0 + c1 z [+ c2 z^2] + sum of simple-pole terms at the given points.
RationalFunction random_rational(std::mt19937_64& rng, const std::vector<cplx>& pole_pts,
                                 int poly_deg) {
    Poly num = {small_coeff(rng)};
    Poly den = {1.0};
    for (int d = 1; d <= poly_deg; ++d) num.push_back(small_coeff(rng));
    RationalFunction f(num, den);
    for (cplx p : pole_pts)
        f = f + RationalFunction({small_coeff(rng)}, {-p, 1.0});
    return f;
}

RationalMatrixFunction random_block(std::mt19937_64& rng, const std::vector<cplx>& pole_pts,
                                    int poly_deg, int block) {
    RationalMatrixFunction F(block, block, RationalFunction::constant(0.0));
    for (int i = 0; i < block; ++i)
        for (int j = 0; j < block; ++j) F.at(i, j) = random_rational(rng, pole_pts, poly_deg);
    return F;
}

ProblemInstance build_attempt(const InstanceConfig& cfg, std::mt19937_64& rng) {
    const int n = cfg.n_dim;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    switch (cfg.kind) {
        case InstanceKind::Annulus: {
            const double R = cfg.param;
            if (R <= 1.0) throw std::invalid_argument("instance: annulus needs R > 1");
            const double lr = 0.9 * std::log(R);
            Matrix G = random_hermitian(n, -lr, lr, rng);
            Eigen::SelfAdjointEigenSolver<Matrix> es(G);
            Matrix Gexp = es.eigenvectors() *
                          es.eigenvalues().array().exp().matrix().asDiagonal() *
                          es.eigenvectors().adjoint();
            Matrix A = random_unitary(n, rng) * Gexp;
            std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, R),
                                                  GeneralizedDisk::exterior(0.0, 1.0 / R)};
            // poles at 0 and well outside |z| = R keep f rational on X
            std::vector<cplx> poles = {0.0, cplx(R * (1.6 + unit(rng)), R * unit(rng))};
            return {A, disks, random_block(rng, poles, 1, cfg.block), cfg.seed};
        }
        case InstanceKind::Sector: {
            const double th = cfg.param;
            if (th <= 0.0 || th >= std::numbers::pi / 2)
                throw std::invalid_argument("instance: sector needs theta in (0, pi/2)");
            Matrix B = random_hermitian(n, 0.5, 2.0, rng);
            Eigen::SelfAdjointEigenSolver<Matrix> es(B);
            Matrix Bh = es.eigenvectors() *
                        es.eigenvalues().array().sqrt().matrix().asDiagonal() *
                        es.eigenvectors().adjoint();
            Matrix C = random_hermitian(n, -1.0, 1.0, rng);
            double cn = spectral_norm(C);
            if (cn > 0) C *= 0.9 / std::tan(th) * (0.3 + 0.7 * unit(rng)) / cn;
            Matrix A = Bh * (Matrix::Identity(n, n) + cplx(0, 1) * C) * Bh;
            std::vector<GeneralizedDisk> disks = {GeneralizedDisk::half_plane(-th, 0.0),
                                                  GeneralizedDisk::half_plane(th, 0.0)};
            std::vector<cplx> poles = {cplx(-0.7 - unit(rng), 0.2 * unit(rng))};
            return {A, disks, random_block(rng, poles, 0, cfg.block), cfg.seed};
        }
        case InstanceKind::Strip: {
            Matrix B = random_hermitian(n, -2.0, 2.0, rng);
            Matrix C = random_hermitian(n, -1.0, 1.0, rng);
            double cn = spectral_norm(C);
            if (cn > 0) C *= 0.9 * (0.3 + 0.7 * unit(rng)) / cn;
            Matrix A = B + cplx(0, 1) * C;
            std::vector<GeneralizedDisk> disks = {
                GeneralizedDisk::half_plane(-std::numbers::pi / 2, cplx(0, 1)),
                GeneralizedDisk::half_plane(std::numbers::pi / 2, cplx(0, -1))};
            std::vector<cplx> poles = {cplx(unit(rng) - 0.5, 2.5 + unit(rng)),
                                       cplx(unit(rng) - 0.5, -2.5 - unit(rng))};
            return {A, disks, random_block(rng, poles, 0, cfg.block), cfg.seed};
        }
        case InstanceKind::Lens: {
            Matrix E = ginibre(n, rng);
            double en = spectral_norm(E);
            if (en > 0) E *= 0.35 * (0.3 + 0.7 * unit(rng)) / en;
            Matrix A = 0.5 * Matrix::Identity(n, n) + E;
            std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, 1.0),
                                                  GeneralizedDisk::disk(cplx(1, 0), 1.0)};
            std::vector<cplx> poles = {cplx(2.5 + unit(rng), unit(rng) - 0.5)};
            return {A, disks, random_block(rng, poles, 2, cfg.block), cfg.seed};
        }
        case InstanceKind::NDisks: {
            const int k = cfg.k;
            if (k < 2) throw std::invalid_argument("instance: n_disks needs k >= 2");
            std::vector<GeneralizedDisk> disks;
            for (int m = 0; m < k; ++m) {
                double phi = 2.0 * std::numbers::pi * m / k + 0.15 * (unit(rng) - 0.5);
                disks.push_back(GeneralizedDisk::disk(std::polar(1.0, phi), 1.25));
            }
            // normal matrix with spectrum in the common core around 0
            Matrix V = random_unitary(n, rng);
            Eigen::VectorXcd d(n);
            for (int i = 0; i < n; ++i)
                d(i) = std::polar(0.12 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
            Matrix A = V * d.asDiagonal() * V.adjoint();
            std::vector<cplx> poles = {cplx(4.0, 0.5 * unit(rng))};
            return {A, disks, random_block(rng, poles, 2, cfg.block), cfg.seed};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ProblemInstance random_instance(const InstanceConfig& cfg) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + attempt + 1);
        ProblemInstance inst = build_attempt(cfg, rng);
        if (inst.valid()) return inst;
    }
    throw std::runtime_error("instance: could not satisfy invariants (seed exhausted)");
}

bool ProblemInstance::valid(std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (disks.empty()) return fail("no disks");
    for (const auto& D : disks)
        if (!is_spectral(A, D)) return fail("disk not spectral");
    if (!spectrum_in_interior(A, disks)) return fail("spectrum touches boundary");
    for (cplx p : f.poles())
        if (in_intersection(disks, RiemannPoint(p), 1e-8)) return fail("pole on X");
    return true;
}

std::string ProblemInstance::to_json() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["A"] = nlohmann::json::parse(matrix_to_json(A));
    nlohmann::json dd = nlohmann::json::array();
    for (const auto& D : disks) dd.push_back(nlohmann::json::parse(D.to_json()));
    j["disks"] = dd;
    nlohmann::json ff;
    ff["rows"] = f.rows();
    ff["cols"] = f.cols();
    nlohmann::json ee = nlohmann::json::array();
    for (int i = 0; i < f.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < f.cols(); ++k)
            row.push_back(nlohmann::json::parse(f.at(i, k).to_json()));
        ee.push_back(row);
    }
    ff["entries"] = ee;
    j["f"] = ff;
    return j.dump();
}

ProblemInstance ProblemInstance::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Matrix A = matrix_from_json(j.at("A").dump());
    std::vector<GeneralizedDisk> disks;
    for (const auto& d : j.at("disks")) disks.push_back(GeneralizedDisk::from_json(d.dump()));
    const auto& ff = j.at("f");
    int rows = ff.at("rows"), cols = ff.at("cols");
    RationalMatrixFunction F(rows, cols, RationalFunction::constant(0.0));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k)
            F.at(i, k) = RationalFunction::from_json(ff.at("entries").at(i).at(k).dump());
    std::uint64_t seed = j.value("seed", 0ULL);
    return {A, disks, F, seed};
}

std::uint64_t ProblemInstance::digest() const {
    std::string s = to_json();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

InstanceKind instance_kind_from_string(const std::string& name) {
    if (name == "annulus") return InstanceKind::Annulus;
    if (name == "sector") return InstanceKind::Sector;
    if (name == "strip") return InstanceKind::Strip;
    if (name == "lens") return InstanceKind::Lens;
    if (name == "n_disks") return InstanceKind::NDisks;
    throw std::invalid_argument("instance: unknown kind '" + name + "'");
}

std::string instance_kind_to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::Annulus: return "annulus";
        case InstanceKind::Sector: return "sector";
        case InstanceKind::Strip: return "strip";
        case InstanceKind::Lens: return "lens";
        case InstanceKind::NDisks: return "n_disks";
    }
    throw std::logic_error("unreachable");
}

}  // namespace specset
