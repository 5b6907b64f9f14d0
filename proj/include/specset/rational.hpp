#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "specset/circline.hpp"
#include "specset/moebius.hpp"

namespace specset {

/// Polynomial with complex coefficients in ascending degree order.
using Poly = std::vector<cplx>;

int poly_degree(const Poly& p);  // -1 for the zero polynomial
Poly poly_trim(Poly p);
Poly poly_add(const Poly& p, const Poly& q);
Poly poly_sub(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_scale(const Poly& p, cplx s);
Poly poly_derivative(const Poly& p);
cplx poly_eval(const Poly& p, cplx z);
/// Roots via the companion matrix (empty for constants).
std::vector<cplx> poly_roots(const Poly& p);

/// Quotient of polynomials p/q, stored reduced: common roots of numerator
/// and denominator (within tol 1e-10) are cancelled on construction and the
/// denominator is normalized to leading coefficient 1.
class RationalFunction {
public:
    RationalFunction(Poly num, Poly den);

    static RationalFunction constant(cplx c) { return RationalFunction({c}, {1.0}); }
    static RationalFunction identity() { return RationalFunction({0.0, 1.0}, {1.0}); }
    static RationalFunction from_moebius(const MoebiusMap& m);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    cplx eval(cplx z) const;
    /// Value at infinity; throws if the function is unbounded there.
    cplx eval_inf() const;
    bool bounded_at_inf() const { return poly_degree(num_) <= poly_degree(den_); }

    std::vector<cplx> poles() const { return poly_roots(den_); }
    bool is_constant() const { return poly_degree(num_) <= 0 && poly_degree(den_) == 0; }

    RationalFunction derivative() const;
    RationalFunction operator+(const RationalFunction& g) const;
    RationalFunction operator-(const RationalFunction& g) const;
    RationalFunction operator*(const RationalFunction& g) const;

    /// f(m(z)) as a rational function, for a Moebius map m.
    RationalFunction compose_moebius(const MoebiusMap& m) const;

    std::string to_json() const;
    static RationalFunction from_json(const std::string& text);

private:
    Poly num_, den_;
};

/// m x m matrix of rational functions (m <= 4 in practice).
class RationalMatrixFunction {
public:
    RationalMatrixFunction(int rows, int cols, RationalFunction fill);
    static RationalMatrixFunction scalar(RationalFunction f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RationalFunction& at(int i, int j) { return entries_[i * cols_ + j]; }
    const RationalFunction& at(int i, int j) const { return entries_[i * cols_ + j]; }

    Eigen::MatrixXcd eval(cplx z) const;
    Eigen::MatrixXcd eval_inf() const;
    bool bounded_at_inf() const;
    std::vector<cplx> poles() const;

private:
    int rows_, cols_;
    std::vector<RationalFunction> entries_;
};

}  // namespace specset
