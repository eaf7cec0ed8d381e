#pragma once

#include <array>
#include <vector>

#include "isoasym/expr.hpp"
#include "isoasym/vec4.hpp"

namespace isoasym {

/// Outcome of sampling the arc-length and principal-normal assumptions on a
/// uniform grid.
struct CurveValidation {
    bool unit_speed_ok = false;
    bool normal_ok = false;
    double max_unit_speed_dev = 0.0; // max | ||r'|| - 1 |
    double min_second_deriv_norm = 0.0;
    int n_samples = 0;

    bool passed() const { return unit_speed_ok && normal_ok; }
};

/// Closed-form curve r(s) in R^4 on [s_min, s_max], assumed parametrized by
/// arc length (validate() checks this, construction does not). Component
/// derivatives up to fourth order are prepared symbolically on construction.
class CurveSpec {
  public:
    static constexpr int kMaxOrder = 4;
    static constexpr int kDefaultValidationSamples = 257;
    static constexpr double kDefaultUnitSpeedTol = 1e-8;

    /// Throws SpecError if a component mentions t or q, or if the interval
    /// is empty or reversed.
    CurveSpec(std::array<Expr, 4> components, double s_min, double s_max);

    double s_min() const { return s_min_; }
    double s_max() const { return s_max_; }
    const std::array<Expr, 4>& components() const { return derivs_[0]; }

    /// r(s) and its derivatives: entry k of the result is the k-th
    /// componentwise derivative at s. Requires s in [s_min, s_max] and
    /// order <= 4.
    std::vector<Vec4> derivatives(double s, int order) const;

    /// Shorthand for derivatives(s, order)[order].
    Vec4 derivative(double s, int order) const;

    /// Samples ||r'|| and ||r''|| at n_samples uniform points (endpoints
    /// included). Failures are recorded in the report, not thrown.
    CurveValidation validate(int n_samples = kDefaultValidationSamples,
                             double tol_unit = kDefaultUnitSpeedTol) const;

  private:
    std::array<std::array<Expr, 4>, kMaxOrder + 1> derivs_;
    double s_min_;
    double s_max_;
};

} // namespace isoasym
