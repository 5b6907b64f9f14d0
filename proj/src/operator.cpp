#include "specset/operator.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "specset/geometry.hpp"

namespace specset {

namespace {

/// Solve X * M = B, i.e. X = B * M^{-1}, rejecting near-singular M.
Matrix right_solve(const Matrix& B, const Matrix& M, const char* what) {
    Eigen::PartialPivLU<Matrix> lu(M.adjoint().eval());
    double scale = M.cwiseAbs().maxCoeff();
    double dmin = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (dmin <= 1e-14 * std::max(1e-300, scale)) throw std::domain_error(what);
    return lu.solve(B.adjoint()).adjoint().eval();
}

Matrix left_solve(const Matrix& M, const Matrix& B, const char* what) {
    Eigen::PartialPivLU<Matrix> lu(M);
    double scale = M.cwiseAbs().maxCoeff();
    double dmin = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (dmin <= 1e-14 * std::max(1e-300, scale)) throw std::domain_error(what);
    return lu.solve(B);
}

}  // namespace

double spectral_norm(const Matrix& M) {
    if (M.size() == 0) return 0.0;
    Eigen::BDCSVD<Matrix> svd(M);
    return svd.singularValues()(0);
}

Matrix resolvent(const Matrix& A, cplx sigma) {
    Matrix M = sigma * Matrix::Identity(A.rows(), A.cols()) - A;
    return left_solve(M, Matrix::Identity(A.rows(), A.cols()), "resolvent at spectrum");
}

std::vector<cplx> eigenvalues(const Matrix& A) {
    Eigen::ComplexEigenSolver<Matrix> es(A, false);
    std::vector<cplx> ev(A.rows());
    for (int i = 0; i < A.rows(); ++i) ev[i] = es.eigenvalues()(i);
    return ev;
}

Matrix eval_poly(const Poly& p, const Matrix& A) {
    const int n = static_cast<int>(A.rows());
    Matrix V = Matrix::Zero(n, n);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        V = (V * A + p[i] * Matrix::Identity(n, n)).eval();
    return V;
}

Matrix eval_rational(const RationalFunction& f, const Matrix& A) {
    Matrix P = eval_poly(f.num(), A);
    Matrix Q = eval_poly(f.den(), A);
    // p(A) and q(A) commute, so the left solve gives p(A) q(A)^{-1}
    return left_solve(Q, P, "rational: q(A) singular");
}

Matrix eval_rational(const RationalMatrixFunction& F, const Matrix& A) {
    const int n = static_cast<int>(A.rows());
    Matrix out(F.rows() * n, F.cols() * n);
    for (int i = 0; i < F.rows(); ++i)
        for (int j = 0; j < F.cols(); ++j)
            out.block(i * n, j * n, n, n) = eval_rational(F.at(i, j), A);
    return out;
}

Matrix moebius_of_matrix(const MoebiusMap& m, const Matrix& A) {
    const int n = static_cast<int>(A.rows());
    Matrix num = m.a() * A + m.b() * Matrix::Identity(n, n);
    Matrix den = m.c() * A + m.d() * Matrix::Identity(n, n);
    return right_solve(num, den, "moebius of matrix: pole in spectrum");
}

bool is_spectral(const Matrix& A, const GeneralizedDisk& D, double tol) {
    const int n = static_cast<int>(A.rows());
    double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
    switch (D.kind()) {
        case DiskKind::Interior:
            return spectral_norm(A - D.center() * Matrix::Identity(n, n)) <=
                   D.radius() + tol * scale;
        case DiskKind::Exterior: {
            Matrix Rm = left_solve(A - D.center() * Matrix::Identity(n, n),
                                   Matrix::Identity(n, n), "is_spectral: center in spectrum");
            return spectral_norm(Rm) <= 1.0 / D.radius() + tol * scale;
        }
        case DiskKind::HalfPlane: {
            Matrix M = std::polar(1.0, -D.theta()) * (A - D.anchor() * Matrix::Identity(n, n));
            Matrix H = 0.5 * (M + M.adjoint());
            Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
            return es.eigenvalues().minCoeff() >= -tol * scale;
        }
    }
    throw std::logic_error("unreachable");
}

bool spectrum_in_interior(const Matrix& A, const std::vector<GeneralizedDisk>& disks,
                          double margin) {
    for (cplx l : eigenvalues(A))
        for (const auto& D : disks)
            if (D.signed_distance(l) <= margin) return false;
    return true;
}

std::vector<GeneralizedDisk> enlarge_disks(const std::vector<GeneralizedDisk>& disks, double eps) {
    std::vector<GeneralizedDisk> out;
    out.reserve(disks.size());
    for (const auto& D : disks) out.push_back(D.enlarged(eps));
    return out;
}

namespace {

double block_norm_at(const RationalMatrixFunction& F, cplx z) {
    return spectral_norm(F.eval(z));
}

}  // namespace

double sup_norm(const RationalMatrixFunction& F, const std::vector<GeneralizedDisk>& disks) {
    // poles must stay off X
    for (cplx p : F.poles())
        if (in_intersection(disks, RiemannPoint(p), 1e-8))
            throw std::domain_error("sup_norm: pole on X");
    bool unbounded_domain = true;
    for (const auto& D : disks) unbounded_domain = unbounded_domain && D.contains_inf();
    double best = 0.0;
    if (unbounded_domain) {
        if (!F.bounded_at_inf()) throw std::domain_error("sup_norm: unbounded on X");
        best = spectral_norm(F.eval_inf());
    }
    auto pieces = intersection_boundary_arcs(disks);
    for (const auto& piece : pieces) {
        for (const auto& chart : piece.arc.charts()) {
            const int m = 64;
            auto value = [&](double t) {
                t = std::clamp(t, 0.0, 1.0 - 1e-9);
                return block_norm_at(F, chart.z(t));
            };
            double tbest = 0.0, vbest = -1.0;
            for (int k = 0; k < m; ++k) {
                // Chebyshev-spaced parameters in [0, 1]
                double t = 0.5 * (1.0 - std::cos(std::numbers::pi * (k + 0.5) / m));
                double v = value(t);
                if (v > vbest) {
                    vbest = v;
                    tbest = t;
                }
            }
            // trisection refinement around the running maximum
            double h = 1.0 / m;
            for (int it = 0; it < 80; ++it) {
                double prev = vbest;
                for (double t : {tbest - h, tbest - h / 3.0, tbest + h / 3.0, tbest + h}) {
                    double v = value(t);
                    if (v > vbest) {
                        vbest = v;
                        tbest = t;
                    }
                }
                h /= 3.0;
                if (it > 2 && vbest - prev < 1e-7 * std::max(1e-300, vbest)) break;
            }
            best = std::max(best, vbest);
        }
    }
    return best;
}

double sup_norm(const RationalFunction& f, const std::vector<GeneralizedDisk>& disks) {
    return sup_norm(RationalMatrixFunction::scalar(f), disks);
}

std::string matrix_to_json(const Matrix& M) {
    nlohmann::json j;
    j["n"] = M.rows();
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (int i = 0; i < M.rows(); ++i) {
        nlohmann::json rr = nlohmann::json::array(), ri = nlohmann::json::array();
        for (int k = 0; k < M.cols(); ++k) {
            rr.push_back(M(i, k).real());
            ri.push_back(M(i, k).imag());
        }
        re.push_back(rr);
        im.push_back(ri);
    }
    j["re"] = re;
    j["im"] = im;
    return j.dump();
}

Matrix matrix_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n");
    if (n <= 0 || n > 256) throw std::invalid_argument("matrix: dimension out of range");
    Matrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            M(i, k) = cplx(j.at("re").at(i).at(k).get<double>(),
                           j.at("im").at(i).at(k).get<double>());
    return M;
}

}  // namespace specset
