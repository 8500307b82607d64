// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include "qcwt/corpus.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qcwt {

constexpr double kPi = std::numbers::pi;

QSignal2D gaussian(const Grid2D& g, double width, Vec2 c) {
    if (!(width > 0.0)) throw Error(Status::InvalidArgument, "gaussian: width must be positive");
    double k = kPi / (width * width);
    return QSignal2D::from_function(g, [&](double x, double y) {
        double r2 = (x - c.x) * (x - c.x) + (y - c.y) * (y - c.y);
        return Quaternion(std::exp(-k * r2));
    });
}

QSignal2D anisotropic_gaussian(const Grid2D& g, double s1, double s2, double angle, Vec2 c) {
    if (!(s1 > 0.0) || !(s2 > 0.0))
        throw Error(Status::InvalidArgument, "anisotropic_gaussian: widths must be positive");
    return QSignal2D::from_function(g, [&](double x, double y) {
        Vec2 p = rotate(Vec2{x - c.x, y - c.y}, -angle);
        double e = (p.x / s1) * (p.x / s1) + (p.y / s2) * (p.y / s2);
        return Quaternion(std::exp(-kPi * e));
    });
}

QSignal2D mexican_hat(const Grid2D& g, double width, Vec2 c) {
    if (!(width > 0.0)) throw Error(Status::InvalidArgument, "mexican_hat: width must be positive");
    double k = kPi / (width * width);
    return QSignal2D::from_function(g, [&](double x, double y) {
        double r2 = k * ((x - c.x) * (x - c.x) + (y - c.y) * (y - c.y));
        return Quaternion((1.0 - r2) * std::exp(-r2));
    });
}

QSignal2D random_bandlimited(const Grid2D& g, std::uint64_t seed, int atoms, double width,
                             double spread, bool quaternion) {
    if (atoms <= 0 || !(width > 0.0))
        throw Error(Status::InvalidArgument, "random_bandlimited: bad parameters");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(-spread, spread);
    std::normal_distribution<double> amp(0.0, 1.0);
    struct Atom {
        Vec2 c;
        Quaternion a;
    };
    std::vector<Atom> list;
    for (int i = 0; i < atoms; ++i) {
        Atom at;
        at.c = {pos(rng), pos(rng)};
        at.a = Quaternion(amp(rng), amp(rng), amp(rng), amp(rng));
        if (!quaternion) at.a = Quaternion(at.a.q0);
        list.push_back(at);
    }
    double k = kPi / (width * width);
    return QSignal2D::from_function(g, [&](double x, double y) {
        Quaternion v;
        for (const auto& at : list) {
            double r2 = (x - at.c.x) * (x - at.c.x) + (y - at.c.y) * (y - at.c.y);
            v += at.a * std::exp(-k * r2);
        }
        return v;
    });
}

QSignal2D impulse(const Grid2D& g, Vec2 at, const Quaternion& value) {
    QSignal2D s(g);
    double u = std::round((at.x - g.x0) / g.dx), v = std::round((at.y - g.y0) / g.dy);
    if (u < 0 || v < 0 || u >= static_cast<double>(g.n1) || v >= static_cast<double>(g.n2))
        throw Error(Status::InvalidArgument, "impulse: location outside the grid");
    s(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = value;
    return s;
}

}  // namespace qcwt
