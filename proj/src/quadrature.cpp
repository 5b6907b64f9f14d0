#include "specset/quadrature.hpp"

#include <cmath>
#include <deque>

namespace specset {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK values).
constexpr double xgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                           0.741531185599394, 0.586087235467691, 0.405845151377397,
                           0.207784955007898, 0.0};
constexpr double wgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                           0.140653259715525, 0.169004726639267, 0.190350578064785,
                           0.204432940075298, 0.209482141084728};
constexpr double wg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                          0.417959183673469};

struct Panel {
    double a, b;
};

struct PanelEval {
    Matrix kronrod;
    double error;
};

PanelEval eval_panel(const std::function<Matrix(double)>& g, double a, double b, int dim) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    Matrix k = Matrix::Zero(dim, dim);
    Matrix q = Matrix::Zero(dim, dim);
    for (int i = 0; i < 8; ++i) {
        if (i == 7) {
            Matrix v = g(c);
            k += wgk[7] * v;
            q += wg[3] * v;
            break;
        }
        Matrix vp = g(c + h * xgk[i]);
        Matrix vm = g(c - h * xgk[i]);
        k += wgk[i] * (vp + vm);
        if (i % 2 == 1) q += wg[i / 2] * (vp + vm);
    }
    k *= h;
    q *= h;
    return {k, (k - q).cwiseAbs().maxCoeff()};
}

}  // namespace

QuadratureResult integrate_arc(const std::function<Matrix(cplx)>& density, const OrientedArc& arc,
                               Measure measure, double tol) {
    return integrate_arcs(density, {arc}, measure, tol);
}

QuadratureResult integrate_arcs(const std::function<Matrix(cplx)>& density,
                                const std::vector<OrientedArc>& arcs, Measure measure,
                                double tol) {
    int dim = -1;
    Matrix total;
    double total_err = 0.0;
    int panels_used = 0;
    const int panel_cap = 4000;

    for (const auto& arc : arcs) {
        for (const auto& chart : arc.charts()) {
            auto g = [&](double t) -> Matrix {
                cplx z = chart.z(t);
                cplx dz = chart.dz(t);
                Matrix F = density(z);
                return measure == Measure::Dz ? Matrix(F * dz) : Matrix(F * std::abs(dz));
            };
            if (dim < 0) {
                dim = static_cast<int>(g(0.5).rows());
                total = Matrix::Zero(dim, dim);
            }
            std::deque<Panel> work{{0.0, 1.0}};
            while (!work.empty()) {
                if (++panels_used > panel_cap)
                    throw std::runtime_error("quadrature: panel cap exceeded (near-pole path?)");
                Panel p = work.front();
                work.pop_front();
                PanelEval pe = eval_panel(g, p.a, p.b, dim);
                double width = p.b - p.a;
                if (pe.error <= tol * std::max(width, 1e-3) || width < 1e-12) {
                    total += pe.kronrod;
                    total_err += pe.error;
                } else {
                    double m = 0.5 * (p.a + p.b);
                    work.push_back({p.a, m});
                    work.push_back({m, p.b});
                }
            }
        }
    }
    if (dim < 0) return {Matrix(), 0.0, 0};
    return {total, total_err, panels_used};
}

}  // namespace specset
