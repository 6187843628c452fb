#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "hfrac/group.hpp"

namespace hfrac {

/// Evaluation contract for a scalar function on H^N, plus the hints the
/// quadrature module needs to build a sampler for it.
///
/// support_radius: the function vanishes identically outside that Koranyi ball.
/// decay_exponent: |u(xi)| <= const * hnorm(xi)^{-decay_exponent} for large xi
///                 (required for full-space integrals when there is no compact
///                 support).
/// scale:          radius of the smallest feature worth resolving; radial
///                 strata reach down to a fraction of it.
/// cylindrical:    u depends on xi only through (|x|^2+|y|^2, t); enables the
///                 reduced tensor-grid method for N=1.
struct ScalarField {
    std::string label;
    std::function<double(const GroupPoint&)> eval;
    std::optional<double> support_radius;
    std::optional<double> decay_exponent;
    double scale = 1.0;
    bool cylindrical = false;

    double operator()(const GroupPoint& p) const { return eval(p); }
};

/// c * u, same hints.
inline ScalarField scaled(const ScalarField& u, double c) {
    ScalarField r = u;
    r.label = u.label + "*" + std::to_string(c);
    auto base = u.eval;
    r.eval = [base, c](const GroupPoint& p) { return c * base(p); };
    return r;
}

/// Critical rescaling u_lam(xi) = lam^{(Q-2s)/2} u(delta_lam xi); leaves the
/// Gagliardo seminorm and the critical Lebesgue norm unchanged.
inline ScalarField critical_rescale(const ScalarField& u, double lam, const GroupParams& gp) {
    ScalarField r = u;
    r.label = u.label + "@crit" + std::to_string(lam);
    const double amp = std::pow(lam, 0.5 * (gp.Q - 2.0 * gp.s));
    auto base = u.eval;
    r.eval = [base, lam, amp](const GroupPoint& p) { return amp * base(dilate(lam, p)); };
    if (u.support_radius) r.support_radius = *u.support_radius / lam;
    r.scale = u.scale / lam;
    return r;
}

} // namespace hfrac
