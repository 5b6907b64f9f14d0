#pragma once

#include "specset/circline.hpp"
#include "specset/disk.hpp"

namespace specset {

/// Fractional linear map z -> (az + b)/(cz + d), ad - bc != 0, stored with
/// the determinant normalized to 1 so that the derivative is 1/(cz+d)^2.
class MoebiusMap {
public:
    MoebiusMap(cplx a, cplx b, cplx c, cplx d);

    static MoebiusMap identity() { return MoebiusMap(1, 0, 0, 1); }
    static MoebiusMap inversion() { return MoebiusMap(0, 1, 1, 0); }
    static MoebiusMap translation(cplx t) { return MoebiusMap(1, t, 0, 1); }
    static MoebiusMap dilation(cplx l);
    /// z -> (z - q)/(z - p): q to 0, p to infinity.  Either point may be
    /// infinite (not both).
    static MoebiusMap two_point(const RiemannPoint& q, const RiemannPoint& p);

    cplx a() const { return a_; }
    cplx b() const { return b_; }
    cplx c() const { return c_; }
    cplx d() const { return d_; }

    RiemannPoint apply(const RiemannPoint& z) const;
    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;

    MoebiusMap compose(const MoebiusMap& inner) const;  // this ∘ inner
    MoebiusMap inverse() const;

    RiemannPoint pole() const;  // preimage of infinity

    Circline image(const Circline& c) const;
    GeneralizedDisk image_disk(const GeneralizedDisk& D) const;

    bool approx_identity(double tol = 1e-9) const;

private:
    cplx a_, b_, c_, d_;
};

}  // namespace specset
