#include "isoasym/frenet.hpp"

#include <algorithm>
#include <cmath>

namespace isoasym {

FrenetData frenet_apparatus(const CurveSpec& curve, double s) {
    const auto d = curve.derivatives(s, 4);

    FrenetData f;
    f.s = s;
    f.kappa1 = norm(d[2]);
    if (f.kappa1 <= kEpsDegenerate)
        throw DegenerateFrame("r'' vanishes at s=" + std::to_string(s));
    f.T = d[1];
    f.N = d[2] / f.kappa1;

    const Vec4 cross = ternary_cross(d[1], d[2], d[3]);
    const double cross_norm = norm(cross);
    if (cross_norm <= kEpsDegenerate)
        throw DegenerateFrame("r', r'', r''' are linearly dependent at s=" +
                              std::to_string(s));
    f.B2 = cross / cross_norm;
    f.B1 = ternary_cross(f.B2, f.T, f.N);

    f.kappa2 = dot(f.B1, d[3]) / f.kappa1;

    const double b2_dot_r4 = dot(f.B2, d[4]);
    if (std::abs(f.kappa2) <= kEpsDegenerate) {
        if (std::abs(b2_dot_r4) > kEpsDegenerate)
            throw DegenerateTorsion(
                "kappa2 vanishes but B2.r'''' does not at s=" + std::to_string(s));
        f.kappa3 = 0.0;
    } else {
        // +0.0 canonicalizes the -0.0 that a signed zero numerator divided
        // by a negative kappa2 would otherwise leave in reports.
        f.kappa3 = b2_dot_r4 / (f.kappa1 * f.kappa2) + 0.0;
    }
    return f;
}

double FrenetOdeResiduals::max() const {
    return std::max({tangent, normal, binormal1, binormal2});
}

FrenetOdeResiduals verify_frenet_odes(const CurveSpec& curve, double s, double h) {
    if (h <= 0.0) throw SpecError("finite-difference step must be positive");
    if (s - h < curve.s_min() || s + h > curve.s_max())
        throw SpecError("s +/- h leaves the curve interval");

    const FrenetData fm = frenet_apparatus(curve, s - h);
    const FrenetData f = frenet_apparatus(curve, s);
    const FrenetData fp = frenet_apparatus(curve, s + h);

    const auto ddt = [h](const Vec4& plus, const Vec4& minus) {
        return (plus - minus) / (2.0 * h);
    };

    FrenetOdeResiduals r;
    r.tangent = norm(ddt(fp.T, fm.T) - f.kappa1 * f.N);
    r.normal = norm(ddt(fp.N, fm.N) + f.kappa1 * f.T - f.kappa2 * f.B1);
    r.binormal1 = norm(ddt(fp.B1, fm.B1) + f.kappa2 * f.N - f.kappa3 * f.B2);
    r.binormal2 = norm(ddt(fp.B2, fm.B2) + f.kappa3 * f.B1);
    return r;
}

} // namespace isoasym
