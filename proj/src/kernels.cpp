#include "specset/kernels.hpp"

#include <cmath>

namespace specset {

namespace {
const cplx kInv2PiI = 1.0 / (2.0 * std::numbers::pi * cplx(0, 1));

void require_interior_spectrum(const Matrix& A, const GeneralizedDisk& D, const char* what) {
    for (cplx l : eigenvalues(A))
        if (D.signed_distance(l) <= 1e-12) throw std::invalid_argument(what);
}
}  // namespace

cplx boundary_tangent(const GeneralizedDisk& D, cplx sigma) {
    switch (D.kind()) {
        case DiskKind::Interior:
            return cplx(0, 1) * (sigma - D.center()) / D.radius();
        case DiskKind::Exterior:
            return cplx(0, -1) * (sigma - D.center()) / D.radius();
        case DiskKind::HalfPlane:
            return cplx(0, -1) * std::polar(1.0, D.theta());
    }
    throw std::logic_error("unreachable");
}

PoissonKernel::PoissonKernel(Matrix A, GeneralizedDisk D)
    : A_(std::move(A)), Astar_(A_.adjoint()), D_(std::move(D)) {
    require_interior_spectrum(A_, D_, "poisson kernel: spectrum not interior to the disk");
}

Matrix PoissonKernel::eval(cplx sigma) const {
    double scale = std::max(1.0, std::abs(sigma));
    if (std::abs(D_.signed_distance(sigma)) > 1e-10 * scale)
        throw std::invalid_argument("poisson kernel: point off the boundary");
    const cplx tau = boundary_tangent(D_, sigma);
    Matrix mu = resolvent(A_, sigma) * tau - resolvent(Astar_, std::conj(sigma)) * std::conj(tau);
    if (!D_.is_half_plane()) mu -= (tau / (sigma - D_.center())) * Matrix::Identity(A_.rows(), A_.cols());
    mu *= kInv2PiI;
    return 0.5 * (mu + mu.adjoint().eval());  // symmetrize away rounding
}

ResidualKernel::ResidualKernel(Matrix A, GeneralizedDisk D)
    : Astar_(A.adjoint()), D_(std::move(D)) {
    require_interior_spectrum(A, D_, "residual kernel: spectrum not interior to the disk");
}

Matrix ResidualKernel::eval(cplx z) const {
    const int n = static_cast<int>(Astar_.rows());
    const Matrix I = Matrix::Identity(n, n);
    if (D_.is_half_plane()) {
        cplx e2 = std::polar(1.0, 2.0 * D_.theta());
        Matrix M = (z - D_.anchor()) * I + e2 * (Astar_ - std::conj(D_.anchor()) * I);
        Eigen::PartialPivLU<Matrix> lu(M);
        return kInv2PiI * lu.solve(I);
    }
    cplx wbar = std::conj(D_.center());
    double r = D_.radius();
    Matrix S = Astar_ - wbar * I;
    Matrix M = (z - D_.center()) * S - r * r * I;
    Eigen::PartialPivLU<Matrix> lu(M);
    return kInv2PiI * (S * lu.solve(I));
}

Matrix residual_difference(cplx z, const Matrix& A, const GeneralizedDisk& Dj,
                           const GeneralizedDisk& Dk) {
    return ResidualKernel(A, Dj).eval(z) - ResidualKernel(A, Dk).eval(z);
}

double pullback_check(const MoebiusMap& phi, cplx z, const Matrix& A, const GeneralizedDisk& Dj,
                      const GeneralizedDisk& Dk) {
    Matrix lhs = residual_difference(z, A, Dj, Dk);
    Matrix B = moebius_of_matrix(phi, A);
    Matrix rhs = residual_difference(phi(z), B, phi.image_disk(Dj), phi.image_disk(Dk)) *
                 phi.derivative(z);
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace specset
