#include "specset/decomposition.hpp"

#include <cmath>

#include "json.hpp"

namespace specset {

namespace {

Matrix block_kron(const Matrix& F, const Matrix& K) {
    const int p = static_cast<int>(F.rows()), q = static_cast<int>(F.cols());
    const int n = static_cast<int>(K.rows());
    Matrix out(p * n, q * n);
    for (int i = 0; i < p; ++i)
        for (int l = 0; l < q; ++l) out.block(i * n, l * n, n, n) = F(i, l) * K;
    return out;
}

}  // namespace

QuadratureResult integrate_kernel(const RationalMatrixFunction& F,
                                  const std::function<Matrix(cplx)>& kernel,
                                  const OrientedArc& arc, Measure measure, double tol) {
    auto density = [&](cplx z) { return block_kron(F.eval(z), kernel(z)); };
    return integrate_arc(density, arc, measure, tol);
}

Matrix g_poisson(const RationalMatrixFunction& F, const Matrix& A, const Tessellation& tess,
                 double tol, int* panels) {
    const int n = static_cast<int>(A.rows());
    Matrix sum = Matrix::Zero(F.rows() * n, F.cols() * n);
    for (size_t j = 0; j < tess.disks.size(); ++j) {
        PoissonKernel mu(A, tess.disks[j]);
        auto kernel = [&](cplx sigma) { return mu.eval(sigma); };
        for (const auto& bp : tess.boundary_arcs) {
            if (bp.disk_index != static_cast<int>(j)) continue;
            auto res = integrate_kernel(F, kernel, bp.arc, Measure::Arclength, tol);
            sum += res.value;
            if (panels) *panels += res.panels;
        }
    }
    return sum;
}

Matrix g_residual(const RationalMatrixFunction& F, const Matrix& A, const Tessellation& tess,
                  double tol, int* panels) {
    const int n = static_cast<int>(A.rows());
    Matrix sum = Matrix::Zero(F.rows() * n, F.cols() * n);
    for (size_t j = 0; j < tess.disks.size(); ++j) {
        for (size_t k = j + 1; k < tess.disks.size(); ++k) {
            std::vector<OrientedArc> arcs;
            for (const auto& ma : tess.median_arcs)
                if (ma.j == static_cast<int>(j) && ma.k == static_cast<int>(k))
                    arcs.push_back(ma.arc);
            if (arcs.empty()) continue;
            ResidualKernel nuj(A, tess.disks[j]), nuk(A, tess.disks[k]);
            auto kernel = [&](cplx z) -> Matrix { return nuj.eval(z) - nuk.eval(z); };
            for (const auto& arc : arcs) {
                auto res = integrate_kernel(F, kernel, arc, Measure::Dz, tol);
                sum += res.value;
                if (panels) *panels += res.panels;
            }
        }
    }
    return sum;
}

Decomposition decompose(const RationalMatrixFunction& F, const Matrix& A,
                        const std::vector<GeneralizedDisk>& disks, double tol) {
    Decomposition dec;
    dec.disks = disks;

    auto lams = eigenvalues(A);
    double scale = 1.0;
    for (cplx l : lams) scale = std::max(scale, std::abs(l));
    double margin = 1e308;
    for (cplx l : lams)
        for (const auto& D : disks) margin = std::min(margin, D.signed_distance(l));
    if (margin < -1e-8 * scale)
        throw std::invalid_argument("decompose: spectrum not inside X");
    if (margin <= 1e-8 * scale) {
        dec.disks = enlarge_disks(disks, 1e-6 * scale);
        dec.enlarged = true;
    }

    Tessellation tess = build_tessellation(dec.disks);
    dec.n_disks = static_cast<int>(tess.disks.size());
    dec.g_p = g_poisson(F, A, tess, tol, &dec.panels);
    dec.g_r = g_residual(F, A, tess, tol, &dec.panels);
    dec.f_direct = eval_rational(F, A);
    dec.defect = spectral_norm(dec.g_p + dec.g_r - dec.f_direct);
    return dec;
}

std::string decomposition_report(const Decomposition& dec) {
    const double n = dec.n_disks;
    nlohmann::json j;
    j["bound"] = n + n * (n - 1.0) / std::sqrt(3.0);
    j["defect"] = dec.defect;
    j["norm_fA"] = spectral_norm(dec.f_direct);
    j["norm_gp"] = spectral_norm(dec.g_p);
    j["norm_gr"] = spectral_norm(dec.g_r);
    j["panels"] = dec.panels;
    return j.dump();
}

double empirical_cb_ratio(const RationalMatrixFunction& F, const ProblemInstance& inst) {
    return spectral_norm(eval_rational(F, inst.A)) / sup_norm(F, inst.disks);
}

}  // namespace specset
