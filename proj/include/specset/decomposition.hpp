#pragma once

#include "specset/instance.hpp"
#include "specset/kernels.hpp"
#include "specset/quadrature.hpp"
#include "specset/tessellation.hpp"

namespace specset {

/// ∫ F(z) ⊗ K(z) over the arc, i.e. the block matrix with (i,l) block
/// F_il(z)·K(z), against ds or dz.
QuadratureResult integrate_kernel(const RationalMatrixFunction& F,
                                  const std::function<Matrix(cplx)>& kernel,
                                  const OrientedArc& arc, Measure measure, double tol);

/// Boundary part: Σ_j ∫_{X ∩ ∂D_j} F(σ) ⊗ μ_j(σ) ds.  Norm bounded by
/// n·sup_norm(F) up to quadrature error.
Matrix g_poisson(const RationalMatrixFunction& F, const Matrix& A, const Tessellation& tess,
                 double tol = 1e-9, int* panels = nullptr);

/// Interior part: Σ_{j<k} ∫ F(z) ⊗ (ν_j − ν_k)(z) dz over the median arcs
/// as stored (cell X_k on the left).  Norm bounded by (n(n−1)/√3)·sup_norm(F)
/// up to quadrature error.
Matrix g_residual(const RationalMatrixFunction& F, const Matrix& A, const Tessellation& tess,
                  double tol = 1e-9, int* panels = nullptr);

struct Decomposition {
    Matrix g_p, g_r, f_direct;
    double defect = 0.0;
    int panels = 0;
    int n_disks = 0;                      // after dropping redundant disks
    std::vector<GeneralizedDisk> disks;   // as integrated (possibly enlarged)
    bool enlarged = false;
};

/// Split F(A) = g_p + g_r by contour integration over the tessellation of
/// X = ∩ disks.  When an eigenvalue of A sits within 1e-8 of ∂X the disks
/// are enlarged by 1e-6·scale first.
Decomposition decompose(const RationalMatrixFunction& F, const Matrix& A,
                        const std::vector<GeneralizedDisk>& disks, double tol = 1e-9);

/// {"bound", "defect", "norm_fA", "norm_gp", "norm_gr", "panels"}.
std::string decomposition_report(const Decomposition& dec);

/// ‖(F_ij(A))‖ / sup_X ‖(F_ij(z))‖ for an instance; never exceeds
/// n + n(n−1)/√3 up to tolerance.
double empirical_cb_ratio(const RationalMatrixFunction& F, const ProblemInstance& inst);

}  // namespace specset
