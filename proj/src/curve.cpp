#include "isoasym/curve.hpp"

#include <limits>

namespace isoasym {

CurveSpec::CurveSpec(std::array<Expr, 4> components, double s_min, double s_max)
    : s_min_(s_min), s_max_(s_max) {
    if (!(s_min < s_max))
        throw SpecError("curve interval must satisfy s_min < s_max");
    for (int i = 0; i < 4; ++i) {
        if (components[i].uses(Var::T) || components[i].uses(Var::Q))
            throw SpecError("curve component " + std::to_string(i) +
                            " must depend on s only: " + components[i].str());
    }
    derivs_[0] = std::move(components);
    for (int k = 1; k <= kMaxOrder; ++k)
        for (int i = 0; i < 4; ++i)
            derivs_[k][i] = derivs_[k - 1][i].differentiate(Var::S);
}

std::vector<Vec4> CurveSpec::derivatives(double s, int order) const {
    if (order < 0 || order > kMaxOrder)
        throw SpecError("derivative order must be in 0..4");
    if (s < s_min_ || s > s_max_)
        throw SpecError("s=" + std::to_string(s) + " outside curve interval");
    std::vector<Vec4> out;
    out.reserve(order + 1);
    for (int k = 0; k <= order; ++k) {
        Vec4 v;
        v.x1 = derivs_[k][0].eval(s, 0.0, 0.0);
        v.x2 = derivs_[k][1].eval(s, 0.0, 0.0);
        v.x3 = derivs_[k][2].eval(s, 0.0, 0.0);
        v.x4 = derivs_[k][3].eval(s, 0.0, 0.0);
        out.push_back(v);
    }
    return out;
}

Vec4 CurveSpec::derivative(double s, int order) const {
    return derivatives(s, order)[order];
}

CurveValidation CurveSpec::validate(int n_samples, double tol_unit) const {
    if (n_samples < 2) throw SpecError("validation needs at least 2 samples");
    CurveValidation report;
    report.n_samples = n_samples;
    report.min_second_deriv_norm = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_samples; ++i) {
        const double s =
            s_min_ + (s_max_ - s_min_) * static_cast<double>(i) / (n_samples - 1);
        const auto d = derivatives(s, 2);
        const double dev = std::abs(norm(d[1]) - 1.0);
        if (dev > report.max_unit_speed_dev) report.max_unit_speed_dev = dev;
        const double n2 = norm(d[2]);
        if (n2 < report.min_second_deriv_norm) report.min_second_deriv_norm = n2;
    }
    report.unit_speed_ok = report.max_unit_speed_dev <= tol_unit;
    report.normal_ok = report.min_second_deriv_norm > kEpsDegenerate;
    return report;
}

} // namespace isoasym
