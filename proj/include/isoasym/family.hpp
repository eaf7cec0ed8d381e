#pragma once

#include <array>
#include <string>

#include "isoasym/curve.hpp"
#include "isoasym/frenet.hpp"

namespace isoasym {

/// Coefficient fields u, v, w, x of the frame vectors in the surface pencil,
/// together with the anchor point (t0, q0) and the parameter boxes. The
/// vanishing of u, v, w, x along t=t0, q=q0 is checked by
/// check_isoparametric, not assumed here.
class MarchingScale {
  public:
    /// Throws SpecError if t0 or q0 falls outside its box.
    MarchingScale(Expr u, Expr v, Expr w, Expr x, double t0, double q0,
                  std::array<double, 2> t_box, std::array<double, 2> q_box);

    const Expr& u() const { return fields_[0]; }
    const Expr& v() const { return fields_[1]; }
    const Expr& w() const { return fields_[2]; }
    const Expr& x() const { return fields_[3]; }
    const std::array<Expr, 4>& fields() const { return fields_; }
    /// Symbolic partials: partials()[i][d] is d/d{s,t,q} of field i.
    const std::array<std::array<Expr, 3>, 4>& partials() const { return partials_; }

    double t0() const { return t0_; }
    double q0() const { return q0_; }
    const std::array<double, 2>& t_box() const { return t_box_; }
    const std::array<double, 2>& q_box() const { return q_box_; }

  private:
    std::array<Expr, 4> fields_;
    std::array<std::array<Expr, 3>, 4> partials_;
    double t0_, q0_;
    std::array<double, 2> t_box_, q_box_;
};

/// A hypersurface pencil P(s,t,q) = r(s) + u T + v N + w B1 + x B2 built on
/// a validated curve.
class FamilySpec {
  public:
    /// Validates the curve (unit speed, nonvanishing r'') and throws
    /// SpecError if it fails.
    FamilySpec(CurveSpec curve, MarchingScale ms,
               int validation_samples = CurveSpec::kDefaultValidationSamples,
               double tol_unit = CurveSpec::kDefaultUnitSpeedTol);

    const CurveSpec& curve() const { return curve_; }
    const MarchingScale& ms() const { return ms_; }

    /// P(s,t,q). Requires (s,t,q) inside the parameter box.
    Vec4 eval_surface(double s, double t, double q) const;

    struct Partials {
        Vec4 ps, pt, pq;
    };

    /// The three first partials of P in closed form (frame coordinates from
    /// the symbolic partials of u,v,w,x and the curvatures).
    Partials surface_partials(double s, double t, double q) const;

    /// ternary_cross(Ps, Pt, Pq); throws SingularPoint when it vanishes.
    Vec4 surface_normal(double s, double t, double q) const;

  private:
    CurveSpec curve_;
    MarchingScale ms_;

    void check_box(double s, double t, double q) const;
};

/// The four determinants deciding the asymptotic criterion, evaluated at
/// (s, t0, q0). phi2, phi3, phi4 come from the reduced 2x2 forms (valid on
/// the curve); phi1 is the full 3x3 and vanishes whenever u,v,w,x and their
/// s-partials vanish there.
struct PhiValues {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double phi3 = 0.0;
    double phi4 = 0.0;
};

PhiValues phi_values(const FamilySpec& family, double s);

struct GridInfo {
    int n_s = 0;
    double s_min = 0.0;
    double s_max = 0.0;
    double t0 = 0.0;
    double q0 = 0.0;
    double tol = 0.0;
    double tol_nondeg = 0.0;
};

/// Grid maxima/minima for the two conditions that make the curve a common
/// isoasymptotic of the pencil: u=v=w=x=0 along t=t0,q=q0 (with vanishing
/// s-partials), and phi2 = 0 with phi3^2 + phi4^2 bounded away from zero.
struct VerificationReport {
    bool isoparametric_pass = false;
    double max_abs_uvwx_on_curve = 0.0;
    double max_abs_s_partials_on_curve = 0.0;

    bool asymptotic_checked = false;
    bool asymptotic_pass = false;
    double max_abs_phi1 = 0.0;
    double max_abs_phi2 = 0.0;
    double min_phi3sq_plus_phi4sq = 0.0;
    /// Independent check: |normalize(Ps x Pt x Pq) . N| maximized over the
    /// grid, skipping points where the normal vanishes.
    double max_abs_normal_dot_N = 0.0;
    int normal_singular_points = 0;

    GridInfo grid;

    bool passed() const { return isoparametric_pass && asymptotic_pass; }
};

inline constexpr double kDefaultCheckTol = 1e-8;
inline constexpr double kDefaultNondegTol = 1e-10;

/// Samples u,v,w,x and their s-partials at (s, t0, q0) over n_s uniform
/// points. Pass iff every magnitude stays within tol.
VerificationReport check_isoparametric(const FamilySpec& family, int n_s = 257,
                                       double tol = kDefaultCheckTol);

/// Runs check_isoparametric first; when it passes, evaluates the phi
/// determinants and the normal-direction oracle over the same grid. The
/// asymptotic verdict is max|phi2| <= tol and min(phi3^2+phi4^2) > tol_nondeg.
VerificationReport check_asymptotic(const FamilySpec& family, int n_s = 257,
                                    double tol = kDefaultCheckTol,
                                    double tol_nondeg = kDefaultNondegTol);

} // namespace isoasym
