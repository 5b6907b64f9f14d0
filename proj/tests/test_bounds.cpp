#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "doctest.h"
#include "specset/bounds.hpp"

using namespace specset;
using std::numbers::pi;

TEST_CASE("closed forms against high-precision spot values") {
    // frozen from an independent 50-digit evaluation
    CHECK(shields_bound(1.3) == doctest::Approx(3.9744747971644716).epsilon(1e-13));
    CHECK(shields_bound(2.0) == doctest::Approx(3.2909944487358056).epsilon(1e-13));
    CHECK(shields_bound(3.7) == doctest::Approx(3.0759202632739853).epsilon(1e-13));
    CHECK(thm1_upper(1.3) == doctest::Approx(3.1514402009400454).epsilon(1e-13));
    CHECK(thm1_upper(2.0) == doctest::Approx(3.1338934190276817).epsilon(1e-13));
    CHECK(thm1_upper(3.7) == doctest::Approx(3.0959910138035929).epsilon(1e-13));
    CHECK(gamma_k(1.3, 1) == doctest::Approx(1.5552306184444000).epsilon(1e-13));
    CHECK(gamma_k(2.0, 1) == doctest::Approx(1.6937728937728938).epsilon(1e-13));
    CHECK(gamma_k(2.0, 40) == doctest::Approx(1.6941378526855206).epsilon(1e-13));
    CHECK(gamma_k(3.7, 40) == doctest::Approx(1.8737451797575382).epsilon(1e-13));
    CHECK(psi_paulsen(1.3) == doctest::Approx(4.3276826576219611).epsilon(1e-13));
    CHECK(psi_paulsen(2.0) == doctest::Approx(1.1176010496238406).epsilon(1e-13));
    CHECK(psi_paulsen(3.7) == doctest::Approx(0.2952049415657393).epsilon(1e-13));
    CHECK(h_sector(pi / 12) == doctest::Approx(0.3616252469690617).epsilon(1e-13));
    CHECK(h_sector(0.9) == doctest::Approx(0.7712166983541667).epsilon(1e-13));
    CHECK(h_sector(pi / 6) == doctest::Approx(0.5513288954217920).epsilon(1e-13));
}

TEST_CASE("hand-derivable values and limits") {
    CHECK(shields_bound(std::sqrt(3.0)) == doctest::Approx(2.0 + std::sqrt(2.0)));
    CHECK(shields_bound(10.0) == doctest::Approx(2.0 + std::sqrt(101.0 / 99.0)));
    CHECK(shields_bound(1.0 + 1e-13) > 1e6);
    CHECK(thm1_upper(1.0) == doctest::Approx(2.0 + 2.0 / std::sqrt(3.0)));
    CHECK(thm1_upper(2.0) == doctest::Approx(2.0 + 3.0 / std::sqrt(7.0)));
    CHECK(thm1_upper(1e9) == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(thm0_bound(1) == doctest::Approx(1.0));
    CHECK(thm0_bound(2) == doctest::Approx(2.0 + 2.0 / std::sqrt(3.0)));
    CHECK(thm0_bound(3) == doctest::Approx(3.0 + 2.0 * std::sqrt(3.0)));
    // gamma_1 -> 4/3 as R -> 1 and the infinite product -> pi/2
    CHECK(gamma_k(1.0 + 1e-9, 1) == doctest::Approx(4.0 / 3.0).epsilon(1e-7));
    CHECK(gamma_bound(1.0001) == doctest::Approx(pi / 2).epsilon(1e-3));
    CHECK(h_sector(pi / 2) == doctest::Approx(2.0 / std::sqrt(3.0)));
    CHECK(h_sector(pi / 4) == doctest::Approx(1.0 / std::sqrt(2.0)));
    double hp3 = std::sqrt(3.0) / (2 * pi) * std::sqrt(2.0) *
                 (pi / 2 + std::atan(1.0 / std::sqrt(2.0)));
    CHECK(h_sector(pi / 3) == doctest::Approx(hp3));
    CHECK(h_annulus(2.0) == doctest::Approx(3.0 / std::sqrt(7.0)));
    CHECK(h_annulus(1.0 + 1e-10) == doctest::Approx(2.0 / std::sqrt(3.0)));
    for (double R : {1.2, 2.0, 5.0}) CHECK(h_annulus(R) == doctest::Approx(thm1_upper(R) - 2.0));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(shields_bound(1.0), std::invalid_argument);
    CHECK_THROWS_AS(thm1_upper(0.9), std::invalid_argument);
    CHECK_THROWS_AS(gamma_k(0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(psi_paulsen(1.0), std::invalid_argument);
    CHECK_THROWS_AS(h_sector(0.0), std::invalid_argument);
    CHECK_THROWS_AS(h_sector(2.0), std::invalid_argument);
    CHECK_THROWS_AS(h_annulus(1.0), std::invalid_argument);
    CHECK_THROWS_AS(thm0_bound(0), std::invalid_argument);
}

TEST_CASE("monotonicity and ordering on a grid") {
    double prev_g1 = 0.0, prev_psi = 1e9;
    for (double R = 1.01; R <= 10.0 + 1e-9; R += 0.09) {
        double g1 = gamma_k(R, 1);
        double g = gamma_bound(R);
        CHECK(g1 > prev_g1);
        CHECK(g1 < g);
        CHECK(g < 2.0);
        CHECK(2.0 <= thm1_upper(R) + 1e-12);
        double ps = psi_paulsen(R);
        CHECK(ps < prev_psi);
        prev_g1 = g1;
        prev_psi = ps;
        // the two upper-bound curves only keep their order up to R ~ 3.15
        if (R <= 3.0) CHECK(thm1_upper(R) < shields_bound(R) - 1e-12);
    }
    // gamma_k increases in k at fixed R, staying under 2
    for (double R : {1.05, 1.5, 3.0}) {
        double prev = 0.0;
        for (int k = 1; k <= 30; ++k) {
            double v = gamma_k(R, k);
            CHECK(v >= prev);
            CHECK(v < 2.0);
            prev = v;
        }
    }
}

TEST_CASE("crossover constants of the paulsen refinement") {
    auto three = [](double) { return 3.0; };
    auto paulsen_raw = [](double R) { return 2.0 + psi_paulsen(R); };
    CHECK(crossover(paulsen_raw, three, 1.5, 3.0) == doctest::Approx(2.0952978).epsilon(1e-4));
    CHECK(crossover(paulsen_bound, thm1_upper, 1.5, 3.0) ==
          doctest::Approx(1.9878813).epsilon(1e-4));
    CHECK(crossover(paulsen_bound, shields_bound, 1.5, 3.0) ==
          doctest::Approx(1.85443).epsilon(1e-4));
    CHECK(crossover([](double R) { return R; }, [](double) { return 2.0; }, 1.0, 3.0) ==
          doctest::Approx(2.0).epsilon(1e-8));
    // shields and thm1_upper keep a fixed order below R = 3 but do cross
    CHECK_THROWS_AS(crossover(shields_bound, thm1_upper, 1.01, 3.0), std::invalid_argument);
    CHECK(crossover(shields_bound, thm1_upper, 3.0, 4.0) ==
          doctest::Approx(3.1527576020).epsilon(1e-8));
}

TEST_CASE("annulus h closed form matches direct quadrature") {
    // trapezoid rule on the periodic integrand converges spectrally
    for (double R : {1.2, 2.0, 4.0}) {
        double rho = (R + 1.0 / R) / 2.0;
        double a = R * R + 1.0 / (R * R) - rho + 1.0;
        const int m = 4000;
        double sum = 0.0;
        for (int i = 0; i < m; ++i) {
            double th = 2 * pi * i / m;
            sum += 1.0 / (a - (rho + 1.0) * std::cos(th));
        }
        double integral = sum * 2 * pi / m;
        double h = (R * R - 1.0 / (R * R)) / (2 * pi) * integral;
        CHECK(std::abs(h - h_annulus(R)) < 1e-10);
    }
}

TEST_CASE("jordan block lower-bound certificates") {
    // f = z - 1 on X(2): sup attained at z = -2
    RationalFunction f({-1.0, 1.0}, {1.0});
    CHECK(jordan_lower_demo(2.0, f) == doctest::Approx(0.5).epsilon(1e-6));

    // ||f(A(t))|| >= t|f'(1)| for the 2x2 Jordan matrix, for random low-degree f
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        Poly num(3);
        for (auto& c : num) c = cplx(unif(rng), unif(rng));
        RationalFunction g(num, {1.0});
        double R = 1.3 + 0.8 * (unif(rng) + 1.0);
        double t = R - 1.0 / R;
        // 2x2 norm of [[g(1), t g'(1)], [0, g(1)]] is >= t|g'(1)|
        cplx g1 = g.eval(1.0), gp = g.derivative().eval(1.0);
        Eigen::MatrixXcd M(2, 2);
        M << g1, t * gp, 0.0, g1;
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
        CHECK(svd.singularValues()(0) >= t * std::abs(gp) - 1e-12);
        // and with g(1) = 0 the norm is exactly max(|g(1)|, t|g'(1)|)
        Poly num0 = num;
        num0[0] -= poly_eval(num, 1.0);
        RationalFunction g0(num0, {1.0});
        cplx gp0 = g0.derivative().eval(1.0);
        Eigen::MatrixXcd M0(2, 2);
        M0 << 0.0, t * gp0, 0.0, 0.0;
        Eigen::BDCSVD<Eigen::MatrixXcd> svd0(M0);
        CHECK(svd0.singularValues()(0) == doctest::Approx(t * std::abs(gp0)));
    }

    // the certificate chain stays below the gamma_1 lower bound's target
    CHECK(jordan_lower_demo(2.0, f) < gamma_k(2.0, 1));
}

TEST_CASE("bounds CSV schema") {
    std::string csv = write_bounds_csv(1.01, 10.0, 200);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "R,shields,thm1_upper,gamma1,gamma,paulsen");
    int rows = 0, comments = 0;
    while (std::getline(in, line)) {
        if (line.rfind("# crossover ", 0) == 0)
            ++comments;
        else
            ++rows;
    }
    CHECK(rows == 200);
    CHECK(comments == 3);
    CHECK(csv.find("# crossover paulsen3 2.095297") != std::string::npos);
    CHECK(csv.find("# crossover paulsen_thm1 1.987881") != std::string::npos);
    CHECK(csv.find("# crossover paulsen_shields 1.854428") != std::string::npos);
    CHECK_THROWS_AS(write_bounds_csv(2.0, 2.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(write_bounds_csv(0.5, 2.0, 10), std::invalid_argument);
}
