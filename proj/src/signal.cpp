// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include "qcwt/signal.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace qcwt {

void Grid2D::validate() const {
    if (n1 < 2 || n2 < 2)
        throw Error(Status::InvalidArgument, "grid needs at least 2 samples per axis");
    if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy))
        throw Error(Status::InvalidArgument, "grid spacing must be positive and finite");
    if (!std::isfinite(x0) || !std::isfinite(y0))
        throw Error(Status::InvalidArgument, "grid origin must be finite");
}

bool Grid2D::same_as(const Grid2D& o, double rtol) const {
    auto close = [rtol](double a, double b, double scale) {
        return std::fabs(a - b) <= rtol * scale;
    };
    return n1 == o.n1 && n2 == o.n2 && close(dx, o.dx, dx) && close(dy, o.dy, dy) &&
           close(x0, o.x0, dx) && close(y0, o.y0, dy);
}

Grid2D Grid2D::square(std::size_t n, double half) {
    double d = 2.0 * half / static_cast<double>(n);
    return {n, n, -half, -half, d, d};
}

Grid2D Grid2D::symmetric(std::size_t n, double half) {
    double d = 2.0 * half / static_cast<double>(n - 1);
    return {n, n, -half, -half, d, d};
}

QSignal2D::QSignal2D(const Grid2D& g) : grid_(g), data_(g.size()) { g.validate(); }

QSignal2D::QSignal2D(const Grid2D& g, std::vector<Quaternion> data)
    : grid_(g), data_(std::move(data)) {
    g.validate();
    if (data_.size() != g.size())
        throw Error(Status::InvalidArgument, "signal payload does not match grid size");
}

bool QSignal2D::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Quaternion& q) {
        return std::isfinite(q.q0) && std::isfinite(q.q1) && std::isfinite(q.q2) &&
               std::isfinite(q.q3);
    });
}

double QSignal2D::max_modulus() const {
    double m = 0.0;
    for (const auto& q : data_) m = std::max(m, quat_modulus(q));
    return m;
}

Quaternion QSignal2D::sample(Vec2 p) const { return sample_linear(grid_, data_, p); }

Quaternion sample_linear(const Grid2D& g, const std::vector<Quaternion>& d, Vec2 p) {
    double u = (p.x - g.x0) / g.dx;
    double v = (p.y - g.y0) / g.dy;
    double umax = static_cast<double>(g.n1 - 1), vmax = static_cast<double>(g.n2 - 1);
    if (!(u >= 0.0 && u <= umax && v >= 0.0 && v <= vmax)) return {};
    auto i = static_cast<std::size_t>(std::min(std::floor(u), umax - 1.0));
    auto j = static_cast<std::size_t>(std::min(std::floor(v), vmax - 1.0));
    double fu = u - static_cast<double>(i), fv = v - static_cast<double>(j);
    const Quaternion* r0 = &d[g.index(i, j)];
    const Quaternion* r1 = &d[g.index(i + 1, j)];
    return (1 - fu) * ((1 - fv) * r0[0] + fv * r0[1]) + fu * ((1 - fv) * r1[0] + fv * r1[1]);
}

static void keys_weights(double t, double w[4]) {
    // taps at offsets -1, 0, 1, 2 from floor
    auto k = [](double x) {
        x = std::fabs(x);
        if (x < 1.0) return (1.5 * x - 2.5) * x * x + 1.0;
        if (x < 2.0) return ((-0.5 * x + 2.5) * x - 4.0) * x + 2.0;
        return 0.0;
    };
    w[0] = k(t + 1.0);
    w[1] = k(t);
    w[2] = k(1.0 - t);
    w[3] = k(2.0 - t);
}

Quaternion sample_cubic(const Grid2D& g, const std::vector<Quaternion>& d, Vec2 p) {
    double u = (p.x - g.x0) / g.dx;
    double v = (p.y - g.y0) / g.dy;
    double n1 = static_cast<double>(g.n1), n2 = static_cast<double>(g.n2);
    if (!(u > -1.0 && u < n1 && v > -1.0 && v < n2)) return {};
    double fu = std::floor(u), fv = std::floor(v);
    double wu[4], wv[4];
    keys_weights(u - fu, wu);
    keys_weights(v - fv, wv);
    auto iu = static_cast<long>(fu), iv = static_cast<long>(fv);
    Quaternion acc;
    for (int a = 0; a < 4; ++a) {
        long i = iu - 1 + a;
        if (i < 0 || i >= static_cast<long>(g.n1) || wu[a] == 0.0) continue;
        Quaternion row;
        for (int b = 0; b < 4; ++b) {
            long j = iv - 1 + b;
            if (j < 0 || j >= static_cast<long>(g.n2)) continue;
            row += wv[b] * d[g.index(static_cast<std::size_t>(i), static_cast<std::size_t>(j))];
        }
        acc += wu[a] * row;
    }
    return acc;
}

static void require_same_grid(const QSignal2D& f, const QSignal2D& g, const char* what) {
    if (!f.grid().same_as(g.grid()))
        throw Error(Status::GridMismatch, std::string(what) + ": grid mismatch");
}

Quaternion inner_product(const QSignal2D& f, const QSignal2D& g) {
    require_same_grid(f, g, "inner_product");
    Quaternion acc;
    const auto& a = f.data();
    const auto& b = g.data();
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * quat_conj(b[i]);
    return acc * f.grid().cell_area();
}

double l2_norm(const QSignal2D& f) {
    double acc = 0.0;
    for (const auto& q : f.data()) acc += quat_norm2(q);
    return std::sqrt(acc * f.grid().cell_area());
}

QSignal2D operator+(const QSignal2D& f, const QSignal2D& g) {
    require_same_grid(f, g, "add");
    QSignal2D out(f);
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] += g.data()[i];
    return out;
}

QSignal2D operator-(const QSignal2D& f, const QSignal2D& g) {
    require_same_grid(f, g, "subtract");
    QSignal2D out(f);
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] -= g.data()[i];
    return out;
}

QSignal2D left_mul(const Quaternion& lambda, const QSignal2D& f) {
    QSignal2D out(f);
    for (auto& q : out.data()) q = lambda * q;
    return out;
}

QSignal2D right_mul(const QSignal2D& f, const Quaternion& lambda) {
    QSignal2D out(f);
    for (auto& q : out.data()) q = q * lambda;
    return out;
}

QSignal2D resample_similitude(const QSignal2D& f, double a, double theta, Vec2 b) {
    return resample_similitude(f, a, theta, b, f.grid());
}

QSignal2D resample_similitude(const QSignal2D& f, double a, double theta, Vec2 b,
                              const Grid2D& target) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw Error(Status::InvalidArgument, "resample_similitude: scale must be positive");
    QSignal2D out(target);
    double c = std::cos(theta), s = std::sin(theta), inv = 1.0 / a;
    for (std::size_t i1 = 0; i1 < target.n1; ++i1) {
        for (std::size_t i2 = 0; i2 < target.n2; ++i2) {
            double px = (target.x(i1) - b.x) * inv, py = (target.y(i2) - b.y) * inv;
            // r_{-theta}
            Vec2 p{c * px + s * py, -s * px + c * py};
            out(i1, i2) = f.sample(p) * inv;
        }
    }
    return out;
}

QSignal2D zero_pad(const QSignal2D& f, std::size_t n1, std::size_t n2) {
    const Grid2D& g = f.grid();
    if (n1 < g.n1 || n2 < g.n2) throw Error(Status::InvalidArgument, "zero_pad: cannot shrink");
    Grid2D pg{n1, n2, g.x0, g.y0, g.dx, g.dy};
    QSignal2D out(pg);
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) out(i1, i2) = f(i1, i2);
    return out;
}

SimGrid SimGrid::log_uniform(std::size_t ns, double smin, double smax, std::size_t na,
                             const Grid2D& translations) {
    if (ns == 0 || na == 0) throw Error(Status::InvalidArgument, "SimGrid: empty scale/angle set");
    if (!(smin > 0.0) || !(smax > smin) || !std::isfinite(smax))
        throw Error(Status::InvalidArgument, "SimGrid: need 0 < smin < smax");
    translations.validate();
    SimGrid s;
    s.smin = smin;
    s.smax = smax;
    s.translations = translations;
    s.dlog = std::log(smax / smin) / static_cast<double>(ns);
    s.dtheta = 2.0 * std::numbers::pi / static_cast<double>(na);
    for (std::size_t j = 0; j < ns; ++j)
        s.scales.push_back(smin * std::exp((static_cast<double>(j) + 0.5) * s.dlog));
    for (std::size_t k = 0; k < na; ++k) s.angles.push_back(static_cast<double>(k) * s.dtheta);
    for (double a : s.scales)
        for (std::size_t k = 0; k < na; ++k) s.weights.push_back(s.dlog * s.dtheta / (a * a));
    return s;
}

Grid2D strided(const Grid2D& g, std::size_t stride) {
    if (stride == 0) throw Error(Status::InvalidArgument, "stride must be positive");
    std::size_t n1 = (g.n1 + stride - 1) / stride, n2 = (g.n2 + stride - 1) / stride;
    double st = static_cast<double>(stride);
    return {n1, n2, g.x0, g.y0, g.dx * st, g.dy * st};
}

}  // namespace qcwt
