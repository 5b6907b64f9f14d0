#pragma once

#include <Eigen/Dense>

#include "specset/disk.hpp"
#include "specset/rational.hpp"

namespace specset {

using Matrix = Eigen::MatrixXcd;

double spectral_norm(const Matrix& M);

/// (sigma*I - A)^{-1}; rejects sigma within ~1e-14*scale of the spectrum.
Matrix resolvent(const Matrix& A, cplx sigma);

std::vector<cplx> eigenvalues(const Matrix& A);

Matrix eval_poly(const Poly& p, const Matrix& A);

/// f(A) = p(A) q(A)^{-1}.
Matrix eval_rational(const RationalFunction& f, const Matrix& A);

/// Block evaluation: (f_ij(A)) as an (m*n) x (m*n) matrix.
Matrix eval_rational(const RationalMatrixFunction& F, const Matrix& A);

/// (aA + bI)(cA + dI)^{-1}.
Matrix moebius_of_matrix(const MoebiusMap& m, const Matrix& A);

/// von Neumann criterion for a generalized disk:
/// interior ||A - wI|| <= r; exterior ||(A - wI)^{-1}|| <= 1/r;
/// half-plane: Hermitian part of e^{-i theta}(A - aI) PSD.
bool is_spectral(const Matrix& A, const GeneralizedDisk& D, double tol = 1e-12);

bool spectrum_in_interior(const Matrix& A, const std::vector<GeneralizedDisk>& disks,
                          double margin = 1e-10);

std::vector<GeneralizedDisk> enlarge_disks(const std::vector<GeneralizedDisk>& disks, double eps);

/// sup of the (block) norm of F over the boundary of X = intersection of the
/// disks.  Rejects functions with a pole on X or unbounded on an unbounded X.
double sup_norm(const RationalMatrixFunction& F, const std::vector<GeneralizedDisk>& disks);
double sup_norm(const RationalFunction& f, const std::vector<GeneralizedDisk>& disks);

std::string matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const std::string& text);

}  // namespace specset
