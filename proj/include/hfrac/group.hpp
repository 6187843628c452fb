#pragma once

#include <boost/container/small_vector.hpp>
#include <cmath>
#include <stdexcept>

namespace hfrac {

/// Coordinate block of one horizontal layer. Inline storage up to N=3; larger
/// N spills to the heap but stays correct.
using Coords = boost::container::small_vector<double, 3>;

/// A point xi = (x, y, t) of H^N, x and y of equal length N >= 1.
struct GroupPoint {
    Coords x;
    Coords y;
    double t = 0.0;

    std::size_t dim() const { return x.size(); }
};

/// Dimension/exponent bookkeeping: Q = 2N+2, Qstar = 2Q/(Q-2s).
struct GroupParams {
    int N = 1;
    int Q = 4;
    double s = 0.5;
    double Qstar = 8.0 / 3.0;
};

inline GroupParams critical_exponent(int N, double s) {
    if (N < 1) throw std::invalid_argument("critical_exponent: N must be >= 1");
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("critical_exponent: s must lie in (0,1)");
    GroupParams gp;
    gp.N = N;
    gp.Q = 2 * N + 2;
    gp.s = s;
    gp.Qstar = 2.0 * gp.Q / (gp.Q - 2.0 * s);
    return gp;
}

inline GroupPoint origin(std::size_t n) {
    GroupPoint p;
    p.x.assign(n, 0.0);
    p.y.assign(n, 0.0);
    p.t = 0.0;
    return p;
}

/// Group law: (x,y,t) o (x',y',t') = (x+x', y+y', t+t'+2(x'.y - y'.x)).
inline GroupPoint compose(const GroupPoint& a, const GroupPoint& b) {
    const std::size_t n = a.dim();
    if (b.dim() != n) throw std::invalid_argument("compose: dimension mismatch");
    GroupPoint r;
    r.x.resize(n);
    r.y.resize(n);
    double twist = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        r.x[j] = a.x[j] + b.x[j];
        r.y[j] = a.y[j] + b.y[j];
        twist += b.x[j] * a.y[j] - b.y[j] * a.x[j];
    }
    r.t = a.t + b.t + 2.0 * twist;
    return r;
}

/// Group inverse in closed form; compose(a, inverse(a)) is the origin because
/// the twist term cancels against -t.
inline GroupPoint inverse(const GroupPoint& a) {
    GroupPoint r = a;
    for (auto& v : r.x) v = -v;
    for (auto& v : r.y) v = -v;
    r.t = -r.t;
    return r;
}

/// Anisotropic dilation delta_lam(x,y,t) = (lam x, lam y, lam^2 t), lam > 0.
inline GroupPoint dilate(double lam, const GroupPoint& a) {
    if (!(lam > 0.0)) throw std::invalid_argument("dilate: lam must be positive");
    GroupPoint r = a;
    for (auto& v : r.x) v *= lam;
    for (auto& v : r.y) v *= lam;
    r.t *= lam * lam;
    return r;
}

/// |x|^2 + |y|^2 of the horizontal part.
inline double sqnorm_xy(const GroupPoint& a) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) m += a.x[j] * a.x[j] + a.y[j] * a.y[j];
    return m;
}

/// Koranyi gauge [(|x|^2+|y|^2)^2 + t^2]^{1/4}. Homogeneous of degree 1 under
/// dilations; satisfies the triangle inequality with constant 1.
inline double hnorm(const GroupPoint& a) {
    const double m = sqnorm_xy(a);
    return std::pow(m * m + a.t * a.t, 0.25);
}

/// Left-invariant distance |b^{-1} o a|.
inline double hdist(const GroupPoint& a, const GroupPoint& b) {
    const std::size_t n = a.dim();
    if (b.dim() != n) throw std::invalid_argument("hdist: dimension mismatch");
    double m = 0.0, twist = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double dx = a.x[j] - b.x[j];
        const double dy = a.y[j] - b.y[j];
        m += dx * dx + dy * dy;
        twist += a.x[j] * b.y[j] - b.x[j] * a.y[j];
    }
    const double dt = a.t - b.t + 2.0 * twist;
    return std::pow(m * m + dt * dt, 0.25);
}

} // namespace hfrac
