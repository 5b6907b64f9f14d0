#include "specset/rational.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace specset {

namespace {
constexpr double kReduceTol = 1e-10;

double poly_scale_mag(const Poly& p) {
    double m = 0.0;
    for (cplx c : p) m = std::max(m, std::abs(c));
    return m;
}

/// Synthetic division by (z - r); remainder discarded (caller checks r is a root).
Poly deflate(const Poly& p, cplx r) {
    Poly q(p.size() - 1);
    cplx carry = p.back();
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
        q[i] = carry;
        carry = p[i] + r * carry;
    }
    return q;
}
}  // namespace

int poly_degree(const Poly& p) {
    double scale = std::max(1e-300, poly_scale_mag(p));
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (std::abs(p[i]) > 1e-14 * scale) return i;
    return -1;
}

Poly poly_trim(Poly p) {
    int d = poly_degree(p);
    p.resize(d + 1);
    if (p.empty()) p.push_back(0.0);
    return p;
}

Poly poly_add(const Poly& p, const Poly& q) {
    Poly r(std::max(p.size(), q.size()), 0.0);
    for (size_t i = 0; i < p.size(); ++i) r[i] += p[i];
    for (size_t i = 0; i < q.size(); ++i) r[i] += q[i];
    return r;
}

Poly poly_sub(const Poly& p, const Poly& q) { return poly_add(p, poly_scale(q, -1.0)); }

Poly poly_mul(const Poly& p, const Poly& q) {
    Poly r(p.size() + q.size() - 1, 0.0);
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

Poly poly_scale(const Poly& p, cplx s) {
    Poly r = p;
    for (cplx& c : r) c *= s;
    return r;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {0.0};
    Poly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = double(i) * p[i];
    return r;
}

cplx poly_eval(const Poly& p, cplx z) {
    cplx v = 0.0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) v = v * z + p[i];
    return v;
}

std::vector<cplx> poly_roots(const Poly& p0) {
    Poly p = poly_trim(p0);
    int d = poly_degree(p);
    if (d <= 0) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) C(i, d - 1) = -p[i] / p[d];
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> roots(d);
    for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(poly_trim(std::move(num))), den_(poly_trim(std::move(den))) {
    if (poly_degree(den_) < 0) throw std::invalid_argument("rational: zero denominator");
    // cancel common roots
    if (poly_degree(num_) >= 0) {
        for (cplx r : poly_roots(den_)) {
            if (poly_degree(num_) < 0) break;
            double ns = std::max(1.0, poly_scale_mag(num_) * std::pow(std::max(1.0, std::abs(r)), poly_degree(num_)));
            double ds = std::max(1.0, poly_scale_mag(den_) * std::pow(std::max(1.0, std::abs(r)), poly_degree(den_)));
            if (std::abs(poly_eval(num_, r)) < kReduceTol * ns &&
                std::abs(poly_eval(den_, r)) < kReduceTol * ds) {
                num_ = poly_trim(deflate(num_, r));
                den_ = poly_trim(deflate(den_, r));
            }
        }
    }
    // leading denominator coefficient 1
    cplx lead = den_[poly_degree(den_)];
    den_ = poly_scale(den_, 1.0 / lead);
    num_ = poly_scale(num_, 1.0 / lead);
}

RationalFunction RationalFunction::from_moebius(const MoebiusMap& m) {
    return RationalFunction({m.b(), m.a()}, {m.d(), m.c()});
}

cplx RationalFunction::eval(cplx z) const {
    cplx d = poly_eval(den_, z);
    if (std::abs(d) < 1e-300) throw std::domain_error("rational: evaluation at a pole");
    return poly_eval(num_, z) / d;
}

cplx RationalFunction::eval_inf() const {
    int dn = poly_degree(num_), dd = poly_degree(den_);
    if (dn > dd) throw std::domain_error("rational: unbounded at infinity");
    if (dn < dd) return 0.0;
    return num_[dn] / den_[dd];
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(poly_sub(poly_mul(poly_derivative(num_), den_), poly_mul(num_, poly_derivative(den_))),
                            poly_mul(den_, den_));
}

RationalFunction RationalFunction::operator+(const RationalFunction& g) const {
    return RationalFunction(poly_add(poly_mul(num_, g.den_), poly_mul(g.num_, den_)),
                            poly_mul(den_, g.den_));
}

RationalFunction RationalFunction::operator-(const RationalFunction& g) const {
    return RationalFunction(poly_sub(poly_mul(num_, g.den_), poly_mul(g.num_, den_)),
                            poly_mul(den_, g.den_));
}

RationalFunction RationalFunction::operator*(const RationalFunction& g) const {
    return RationalFunction(poly_mul(num_, g.num_), poly_mul(den_, g.den_));
}

RationalFunction RationalFunction::compose_moebius(const MoebiusMap& m) const {
    // p(m(z))/q(m(z)) homogenized by (cz+d)^N with N = max degree
    const Poly up = {m.b(), m.a()};  // az + b
    const Poly dn = {m.d(), m.c()};  // cz + d
    const int N = std::max(poly_degree(num_), poly_degree(den_));
    auto homogenize = [&](const Poly& coeffs) {
        Poly acc = {0.0};
        Poly up_pow = {1.0};
        std::vector<Poly> dn_pows(N + 1);
        dn_pows[0] = {1.0};
        for (int k = 1; k <= N; ++k) dn_pows[k] = poly_mul(dn_pows[k - 1], dn);
        for (int i = 0; i <= N; ++i) {
            if (i < static_cast<int>(coeffs.size()))
                acc = poly_add(acc, poly_scale(poly_mul(up_pow, dn_pows[N - i]), coeffs[i]));
            up_pow = poly_mul(up_pow, up);
        }
        return acc;
    };
    return RationalFunction(homogenize(num_), homogenize(den_));
}

std::string RationalFunction::to_json() const {
    nlohmann::json j;
    auto dump = [](const Poly& p) {
        nlohmann::json arr = nlohmann::json::array();
        for (cplx c : p) arr.push_back({c.real(), c.imag()});
        return arr;
    };
    j["num"] = dump(num_);
    j["den"] = dump(den_);
    return j.dump();
}

RationalFunction RationalFunction::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    auto load = [](const nlohmann::json& arr) {
        Poly p;
        for (const auto& c : arr) p.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
        return p;
    };
    return RationalFunction(load(j.at("num")), load(j.at("den")));
}

RationalMatrixFunction::RationalMatrixFunction(int rows, int cols, RationalFunction fill)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, std::move(fill)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("rational matrix: empty shape");
}

RationalMatrixFunction RationalMatrixFunction::scalar(RationalFunction f) {
    return RationalMatrixFunction(1, 1, std::move(f));
}

Eigen::MatrixXcd RationalMatrixFunction::eval(cplx z) const {
    Eigen::MatrixXcd M(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) M(i, j) = at(i, j).eval(z);
    return M;
}

Eigen::MatrixXcd RationalMatrixFunction::eval_inf() const {
    Eigen::MatrixXcd M(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) M(i, j) = at(i, j).eval_inf();
    return M;
}

bool RationalMatrixFunction::bounded_at_inf() const {
    for (const auto& f : entries_)
        if (!f.bounded_at_inf()) return false;
    return true;
}

std::vector<cplx> RationalMatrixFunction::poles() const {
    std::vector<cplx> out;
    for (const auto& f : entries_) {
        auto p = f.poles();
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

}  // namespace specset
