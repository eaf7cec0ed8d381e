#include "isoasym/family.hpp"

#include <cmath>
#include <limits>

namespace isoasym {

MarchingScale::MarchingScale(Expr u, Expr v, Expr w, Expr x, double t0,
                             double q0, std::array<double, 2> t_box,
                             std::array<double, 2> q_box)
    : fields_{std::move(u), std::move(v), std::move(w), std::move(x)},
      t0_(t0), q0_(q0), t_box_(t_box), q_box_(q_box) {
    if (!(t_box_[0] <= t_box_[1]))
        throw SpecError("t box must satisfy T1 <= T2");
    if (!(q_box_[0] <= q_box_[1]))
        throw SpecError("q box must satisfy Q1 <= Q2");
    if (t0_ < t_box_[0] || t0_ > t_box_[1])
        throw SpecError("t0 outside [T1, T2]");
    if (q0_ < q_box_[0] || q0_ > q_box_[1])
        throw SpecError("q0 outside [Q1, Q2]");
    const Var vars[3] = {Var::S, Var::T, Var::Q};
    for (int i = 0; i < 4; ++i)
        for (int d = 0; d < 3; ++d)
            partials_[i][d] = fields_[i].differentiate(vars[d]);
}

FamilySpec::FamilySpec(CurveSpec curve, MarchingScale ms, int validation_samples,
                       double tol_unit)
    : curve_(std::move(curve)), ms_(std::move(ms)) {
    const CurveValidation v = curve_.validate(validation_samples, tol_unit);
    if (!v.passed()) {
        std::string why;
        if (!v.unit_speed_ok)
            why = "curve is not unit speed (max | ||r'||-1 | = " +
                  std::to_string(v.max_unit_speed_dev) + ")";
        else
            why = "||r''|| vanishes on the curve (min = " +
                  std::to_string(v.min_second_deriv_norm) + ")";
        throw SpecError("family rejected: " + why);
    }
}

void FamilySpec::check_box(double s, double t, double q) const {
    if (s < curve_.s_min() || s > curve_.s_max())
        throw SpecError("s outside curve interval");
    if (t < ms_.t_box()[0] || t > ms_.t_box()[1])
        throw SpecError("t outside [T1, T2]");
    if (q < ms_.q_box()[0] || q > ms_.q_box()[1])
        throw SpecError("q outside [Q1, Q2]");
}

Vec4 FamilySpec::eval_surface(double s, double t, double q) const {
    check_box(s, t, q);
    const FrenetData f = frenet_apparatus(curve_, s);
    const Vec4 r = curve_.derivative(s, 0);
    const double u = ms_.u().eval(s, t, q);
    const double v = ms_.v().eval(s, t, q);
    const double w = ms_.w().eval(s, t, q);
    const double x = ms_.x().eval(s, t, q);
    return r + u * f.T + v * f.N + w * f.B1 + x * f.B2;
}

FamilySpec::Partials FamilySpec::surface_partials(double s, double t,
                                                  double q) const {
    check_box(s, t, q);
    const FrenetData f = frenet_apparatus(curve_, s);
    const auto& p = ms_.partials();

    double val[4], ds[4], dt[4], dq[4];
    for (int i = 0; i < 4; ++i) {
        val[i] = ms_.fields()[i].eval(s, t, q);
        ds[i] = p[i][0].eval(s, t, q);
        dt[i] = p[i][1].eval(s, t, q);
        dq[i] = p[i][2].eval(s, t, q);
    }
    const double u = val[0], v = val[1], w = val[2], x = val[3];

    Partials out;
    // dP/ds picks up the frame derivatives through the Frenet ODEs.
    out.ps = (1.0 + ds[0] - v * f.kappa1) * f.T +
             (u * f.kappa1 + ds[1] - w * f.kappa2) * f.N +
             (v * f.kappa2 + ds[2] - x * f.kappa3) * f.B1 +
             (w * f.kappa3 + ds[3]) * f.B2;
    out.pt = dt[0] * f.T + dt[1] * f.N + dt[2] * f.B1 + dt[3] * f.B2;
    out.pq = dq[0] * f.T + dq[1] * f.N + dq[2] * f.B1 + dq[3] * f.B2;
    return out;
}

Vec4 FamilySpec::surface_normal(double s, double t, double q) const {
    const Partials p = surface_partials(s, t, q);
    const Vec4 n = ternary_cross(p.ps, p.pt, p.pq);
    if (norm(n) <= kEpsDegenerate)
        throw SingularPoint("surface normal vanishes at s=" + std::to_string(s) +
                            ", t=" + std::to_string(t) +
                            ", q=" + std::to_string(q));
    return n;
}

PhiValues phi_values(const FamilySpec& family, double s) {
    const MarchingScale& ms = family.ms();
    const double t0 = ms.t0();
    const double q0 = ms.q0();
    const auto& p = ms.partials();

    // partial of field i with respect to s/t/q at (s, t0, q0)
    double d[4][3];
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 3; ++k)
            d[i][k] = p[i][k].eval(s, t0, q0);

    PhiValues phi;
    phi.phi1 = det3(d[1][0], d[2][0], d[3][0],  //
                    d[1][1], d[2][1], d[3][1],  //
                    d[1][2], d[2][2], d[3][2]);
    phi.phi2 = d[2][1] * d[3][2] - d[2][2] * d[3][1]; // w_t x_q - w_q x_t
    phi.phi3 = d[1][1] * d[3][2] - d[1][2] * d[3][1]; // v_t x_q - v_q x_t
    phi.phi4 = d[1][1] * d[2][2] - d[1][2] * d[2][1]; // v_t w_q - v_q w_t
    return phi;
}

namespace {

std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    // pin the endpoints: rounding must not push a sample outside [lo, hi]
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace

VerificationReport check_isoparametric(const FamilySpec& family, int n_s,
                                       double tol) {
    if (n_s < 2) throw SpecError("isoparametric check needs at least 2 samples");
    const MarchingScale& ms = family.ms();
    VerificationReport rep;
    rep.grid = {n_s,      family.curve().s_min(), family.curve().s_max(),
                ms.t0(),  ms.q0(),                tol,
                kDefaultNondegTol};

    for (double s : uniform_grid(family.curve().s_min(), family.curve().s_max(), n_s)) {
        for (int i = 0; i < 4; ++i) {
            const double value = std::abs(ms.fields()[i].eval(s, ms.t0(), ms.q0()));
            if (value > rep.max_abs_uvwx_on_curve) rep.max_abs_uvwx_on_curve = value;
            const double sp = std::abs(ms.partials()[i][0].eval(s, ms.t0(), ms.q0()));
            if (sp > rep.max_abs_s_partials_on_curve)
                rep.max_abs_s_partials_on_curve = sp;
        }
    }
    rep.isoparametric_pass = rep.max_abs_uvwx_on_curve <= tol &&
                             rep.max_abs_s_partials_on_curve <= tol;
    return rep;
}

VerificationReport check_asymptotic(const FamilySpec& family, int n_s, double tol,
                                    double tol_nondeg) {
    VerificationReport rep = check_isoparametric(family, n_s, tol);
    rep.grid.tol_nondeg = tol_nondeg;
    if (!rep.isoparametric_pass) return rep;

    rep.asymptotic_checked = true;
    rep.min_phi3sq_plus_phi4sq = std::numeric_limits<double>::infinity();
    const double t0 = family.ms().t0();
    const double q0 = family.ms().q0();

    for (double s : uniform_grid(family.curve().s_min(), family.curve().s_max(), n_s)) {
        const PhiValues phi = phi_values(family, s);
        rep.max_abs_phi1 = std::max(rep.max_abs_phi1, std::abs(phi.phi1));
        rep.max_abs_phi2 = std::max(rep.max_abs_phi2, std::abs(phi.phi2));
        rep.min_phi3sq_plus_phi4sq =
            std::min(rep.min_phi3sq_plus_phi4sq,
                     phi.phi3 * phi.phi3 + phi.phi4 * phi.phi4);

        // Independent route: the normal from the full partials must stay
        // orthogonal to the principal normal.
        const FamilySpec::Partials p = family.surface_partials(s, t0, q0);
        const Vec4 n = ternary_cross(p.ps, p.pt, p.pq);
        if (norm(n) <= kEpsDegenerate) {
            ++rep.normal_singular_points;
        } else {
            const FrenetData f = frenet_apparatus(family.curve(), s);
            rep.max_abs_normal_dot_N =
                std::max(rep.max_abs_normal_dot_N, std::abs(dot(normalize(n), f.N)));
        }
    }

    rep.asymptotic_pass = rep.max_abs_phi2 <= tol &&
                          rep.min_phi3sq_plus_phi4sq > tol_nondeg;
    return rep;
}

} // namespace isoasym
