#pragma once

#include <functional>
#include <string>

#include "specset/rational.hpp"

namespace specset {

/// 2 + sqrt((R^2+1)/(R^2-1)), the classical annulus bound.  R > 1.
double shields_bound(double R);

/// 2 + (R+1)/sqrt(R^2+R+1), decreasing from 2 + 2/sqrt(3) to 3.  R >= 1.
double thm1_upper(double R);

/// n + n(n-1)/sqrt(3) for an intersection of n disks.
double thm0_bound(int n);

/// k-th partial product of the annulus lower-bound constant; increasing in k
/// and bounded by 2.  gamma_1(R) equals psi(R^2) with
/// psi(t) = 2t(1+t^2)^2 / ((1+t)(1+t^2+t^4)).
double gamma_k(double R, int k);

/// Limit of gamma_k: truncated when the tail factor is within tol of 1,
/// capped at k = 10^4 near R = 1 (the truncation error is then O(R^{-8k})).
double gamma_bound(double R, double tol = 1e-15, int* k_used = nullptr);

/// Sum_{n>=1} 4/(1+R^{2n}); strictly decreasing, -> 0 as R -> infinity.
double psi_paulsen(double R);

/// max(3, 2 + psi_paulsen(R)).
double paulsen_bound(double R);

/// Bisection root of f(R) = g(R) on [lo, hi] to |dR| < 1e-9; requires a
/// sign change of f - g on the bracket.
double crossover(const std::function<double(double)>& f, const std::function<double(double)>& g,
                 double lo, double hi);

/// (sin 2θ/π) ∫_0^∞ dx/(x² sin²θ + 2x cos 2θ + 1) in closed form, extended
/// continuously by 2/sqrt(3) at θ = π/2.  θ in (0, π/2].
double h_sector(double theta);

/// (R+1)/sqrt(R^2+R+1) = thm1_upper(R) - 2.  R > 1.
double h_annulus(double R);

/// Lower-bound certificate (R - 1/R)·|f'(1)| / sup_X(R) |f| from the Jordan
/// block A(t) = [[1, t],[0, 1]], t = R - 1/R.
double jordan_lower_demo(double R, const RationalFunction& f);

/// CSV with columns R, shields, thm1_upper, gamma1, gamma, paulsen over a
/// uniform grid, followed by `# crossover <name> <R>` comment lines for the
/// three Paulsen crossovers.
std::string write_bounds_csv(double rmin, double rmax, int steps);

}  // namespace specset
