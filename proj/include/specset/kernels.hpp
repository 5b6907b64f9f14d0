#pragma once

#include "specset/disk.hpp"
#include "specset/operator.hpp"

namespace specset {

/// Unit tangent dsigma/ds of the positively oriented boundary of D at a
/// boundary point sigma ((1/i) times it is the outward normal).
cplx boundary_tangent(const GeneralizedDisk& D, cplx sigma);

/// Matrix Poisson kernel of a generalized disk:
///   mu(sigma) = (1/2pi i)[(sigma-A)^{-1} dsigma/ds - (conj sigma - A*)^{-1}
///               d(conj sigma)/ds - (sigma-w)^{-1} dsigma/ds],
/// the scalar w-term absent for half-planes.  Hermitian; positive
/// semidefinite whenever D is spectral for A; integrates to I over the
/// boundary when sigma(A) is interior.
class PoissonKernel {
public:
    PoissonKernel(Matrix A, GeneralizedDisk D);

    Matrix eval(cplx sigma) const;  // sigma must lie on the boundary (1e-10)
    const GeneralizedDisk& disk() const { return D_; }

private:
    Matrix A_, Astar_;
    GeneralizedDisk D_;
};

/// Residual Cauchy kernel nu(z): the analytic-in-z part of the Cauchy split
///   (1/2pi i)(sigma-A)^{-1} dsigma = mu ds + nu dsigma  on the boundary,
/// continued to all of D.  Disk variants:
///   nu(z) = (1/2pi i)(A*-conj w)((z-w)(A*-conj w) - r^2)^{-1};
/// half-planes: nu(z) = (1/2pi i)((z-a) + e^{2i theta}(A*-conj a))^{-1}.
class ResidualKernel {
public:
    ResidualKernel(Matrix A, GeneralizedDisk D);

    Matrix eval(cplx z) const;
    const GeneralizedDisk& disk() const { return D_; }

private:
    Matrix Astar_;
    GeneralizedDisk D_;
};

/// nu(z, A, Dj) - nu(z, A, Dk).
Matrix residual_difference(cplx z, const Matrix& A, const GeneralizedDisk& Dj,
                           const GeneralizedDisk& Dk);

/// Residual of the homographic invariance of the form (nu_j - nu_k) dz:
/// ||(nu_j - nu_k)(z) - (nu_{phi j} - nu_{phi k})(phi z) phi'(z)||.
double pullback_check(const MoebiusMap& phi, cplx z, const Matrix& A, const GeneralizedDisk& Dj,
                      const GeneralizedDisk& Dk);

}  // namespace specset
