#pragma once

#include <functional>

#include "specset/arc.hpp"
#include "specset/operator.hpp"

namespace specset {

struct QuadratureResult {
    Matrix value;
    double error = 0.0;
    int panels = 0;
};

enum class Measure { Arclength, Dz };

/// Adaptive Gauss-Kronrod 7/15 panel quadrature of a matrix-valued density
/// along an oriented arc.  The density is evaluated at points of the arc;
/// with Measure::Arclength the integral is ∫ F(z) ds, with Measure::Dz it is
/// ∫ F(z) dz.  Unbounded arcs are handled through the arc's rational charts;
/// the density must decay fast enough for the pulled-back integrand to stay
/// bounded (kernels here decay like 1/z^2).
QuadratureResult integrate_arc(const std::function<Matrix(cplx)>& density, const OrientedArc& arc,
                               Measure measure, double tol);

/// Sum of integrals over several arcs with a shared error budget.
QuadratureResult integrate_arcs(const std::function<Matrix(cplx)>& density,
                                const std::vector<OrientedArc>& arcs, Measure measure, double tol);

}  // namespace specset
