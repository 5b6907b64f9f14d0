#include "specset/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "specset/operator.hpp"

namespace specset {

namespace {
void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}
}  // namespace

double shields_bound(double R) {
    require(R > 1.0, "shields_bound: R must exceed 1");
    return 2.0 + std::sqrt((R * R + 1.0) / (R * R - 1.0));
}

double thm1_upper(double R) {
    require(R >= 1.0, "thm1_upper: R must be >= 1");
    return 2.0 + (R + 1.0) / std::sqrt(R * R + R + 1.0);
}

double thm0_bound(int n) {
    require(n >= 1, "thm0_bound: n must be >= 1");
    return n + n * (n - 1.0) / std::sqrt(3.0);
}

double gamma_k(double R, int k) {
    require(R > 1.0, "gamma_k: R must exceed 1");
    require(k >= 1, "gamma_k: k must be >= 1");
    double prod = 2.0 / (1.0 + std::pow(R, -2.0));
    for (int n = 1; n <= k; ++n) {
        double a = 1.0 - std::pow(R, -8.0 * n);
        double b = 1.0 - std::pow(R, 4.0 - 8.0 * n);
        double c = 1.0 - std::pow(R, -4.0 - 8.0 * n);
        prod *= a * a / (b * c);
    }
    return prod;
}

double gamma_bound(double R, double tol, int* k_used) {
    require(R > 1.0, "gamma_bound: R must exceed 1");
    double prod = 2.0 / (1.0 + std::pow(R, -2.0));
    int k = 0;
    for (int n = 1; n <= 10000; ++n) {
        double a = 1.0 - std::pow(R, -8.0 * n);
        double b = 1.0 - std::pow(R, 4.0 - 8.0 * n);
        double c = 1.0 - std::pow(R, -4.0 - 8.0 * n);
        double term = a * a / (b * c);
        prod *= term;
        k = n;
        if (std::abs(term - 1.0) < tol) break;
    }
    if (k_used) *k_used = k;
    return prod;
}

double psi_paulsen(double R) {
    require(R > 1.0, "psi_paulsen: R must exceed 1");
    double sum = 0.0;
    for (int n = 1;; ++n) {
        double term = 4.0 / (1.0 + std::pow(R, 2.0 * n));
        sum += term;
        if (term < 1e-16) break;
    }
    return sum;
}

double paulsen_bound(double R) { return std::max(3.0, 2.0 + psi_paulsen(R)); }

double crossover(const std::function<double(double)>& f, const std::function<double(double)>& g,
                 double lo, double hi) {
    auto d = [&](double R) { return f(R) - g(R); };
    double dlo = d(lo), dhi = d(hi);
    if (dlo == 0.0) return lo;
    if (dhi == 0.0) return hi;
    require(dlo * dhi < 0.0, "crossover: no sign change on the bracket");
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        double dm = d(mid);
        if (dm == 0.0) return mid;
        if (dlo * dm < 0.0)
            hi = mid;
        else {
            lo = mid;
            dlo = dm;
        }
    }
    return 0.5 * (lo + hi);
}

double h_sector(double theta) {
    require(theta > 0.0 && theta <= std::numbers::pi / 2 + 1e-15, "h_sector: theta out of range");
    if (std::abs(theta - std::numbers::pi / 2) < 1e-12) return 2.0 / std::sqrt(3.0);
    const double a = std::sin(theta) * std::sin(theta);
    const double b = 2.0 * std::cos(2.0 * theta);
    const double c = 1.0;
    const double delta = 4.0 * a * c - b * b;
    double integral;
    if (delta > 1e-14) {
        double s = std::sqrt(delta);
        integral = (2.0 / s) * (std::numbers::pi / 2 - std::atan(b / s));
    } else if (delta > -1e-14) {
        integral = 2.0 / b;  // double root; only reached with b > 0 (theta = pi/6)
    } else {
        double s = std::sqrt(-delta);
        double r1 = (-b + s) / (2.0 * a), r2 = (-b - s) / (2.0 * a);
        integral = std::log(r2 / r1) / s;
    }
    return std::sin(2.0 * theta) / std::numbers::pi * integral;
}

double h_annulus(double R) {
    require(R > 1.0, "h_annulus: R must exceed 1");
    return (R + 1.0) / std::sqrt(R * R + R + 1.0);
}

double jordan_lower_demo(double R, const RationalFunction& f) {
    require(R > 1.0, "jordan_lower_demo: R must exceed 1");
    double t = R - 1.0 / R;
    double fp1 = std::abs(f.derivative().eval(1.0));
    std::vector<GeneralizedDisk> disks = {GeneralizedDisk::disk(0.0, R),
                                          GeneralizedDisk::exterior(0.0, 1.0 / R)};
    return t * fp1 / sup_norm(f, disks);
}

std::string write_bounds_csv(double rmin, double rmax, int steps) {
    require(rmin > 1.0 && rmax > rmin, "write_bounds_csv: need 1 < rmin < rmax");
    require(steps >= 2, "write_bounds_csv: need at least 2 steps");
    std::string out = "R,shields,thm1_upper,gamma1,gamma,paulsen\n";
    char buf[256];
    for (int i = 0; i < steps; ++i) {
        double R = rmin + (rmax - rmin) * i / (steps - 1);
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", R,
                      shields_bound(R), thm1_upper(R), gamma_k(R, 1), gamma_bound(R),
                      paulsen_bound(R));
        out += buf;
    }
    auto three = [](double) { return 3.0; };
    auto emit = [&](const char* name, double R) {
        std::snprintf(buf, sizeof buf, "# crossover %s %.9f\n", name, R);
        out += buf;
    };
    emit("paulsen3", crossover([](double R) { return 2.0 + psi_paulsen(R); }, three, 1.5, 3.0));
    emit("paulsen_thm1", crossover(paulsen_bound, thm1_upper, 1.5, 3.0));
    emit("paulsen_shields", crossover(paulsen_bound, shields_bound, 1.5, 3.0));
    return out;
}

}  // namespace specset
