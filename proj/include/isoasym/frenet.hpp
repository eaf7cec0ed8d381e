#pragma once

#include "isoasym/curve.hpp"
#include "isoasym/vec4.hpp"

namespace isoasym {

/// The moving frame {T, N, B1, B2} and curvatures kappa1..kappa3 of a curve
/// in R^4 at parameter s. The frame is orthonormal and positively oriented;
/// kappa1 > 0, kappa2 and kappa3 are signed.
struct FrenetData {
    double s = 0.0;
    Vec4 T, N, B1, B2;
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double kappa3 = 0.0;
};

/// Builds the frame from the curve derivatives:
///   T = r', N = r''/kappa1, B2 = normalize(r' x r'' x r'''), B1 = B2 x T x N,
///   kappa1 = ||r''||, kappa2 = (B1.r''')/kappa1, kappa3 = (B2.r'''')/(kappa1 kappa2).
/// Throws DegenerateFrame when r'' vanishes or r', r'', r''' are dependent;
/// DegenerateTorsion when kappa2 ~ 0 but B2.r'''' does not vanish.
FrenetData frenet_apparatus(const CurveSpec& curve, double s);

/// Residual norms of the frame ODEs, with frame derivatives taken by central
/// differences of step h (s-h and s+h must stay inside the curve interval):
///   T' - k1 N,  N' + k1 T - k2 B1,  B1' + k2 N - k3 B2,  B2' + k3 B1.
struct FrenetOdeResiduals {
    double tangent = 0.0;
    double normal = 0.0;
    double binormal1 = 0.0;
    double binormal2 = 0.0;

    double max() const;
};

FrenetOdeResiduals verify_frenet_odes(const CurveSpec& curve, double s, double h);

} // namespace isoasym
