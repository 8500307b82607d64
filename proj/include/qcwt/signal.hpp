// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qcwt/quaternion.hpp"

namespace qcwt {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Counterclockwise rotation r_theta.
inline Vec2 rotate(Vec2 v, double theta) {
    double c = std::cos(theta), s = std::sin(theta);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Uniform grid. Sample (i1, i2) sits at (x0 + i1*dx, y0 + i2*dy) and is
// stored at index i1*n2 + i2.
struct Grid2D {
    std::size_t n1 = 0, n2 = 0;
    double x0 = 0.0, y0 = 0.0, dx = 1.0, dy = 1.0;

    std::size_t size() const { return n1 * n2; }
    double cell_area() const { return dx * dy; }
    double x(std::size_t i1) const { return x0 + static_cast<double>(i1) * dx; }
    double y(std::size_t i2) const { return y0 + static_cast<double>(i2) * dy; }
    Vec2 point(std::size_t i1, std::size_t i2) const { return {x(i1), y(i2)}; }
    std::size_t index(std::size_t i1, std::size_t i2) const { return i1 * n2 + i2; }

    void validate() const;
    bool same_as(const Grid2D& o, double rtol = 1e-12) const;
    bool operator==(const Grid2D&) const = default;

    // n x n samples with spacing 2*half/n starting at -half.
    static Grid2D square(std::size_t n, double half);
    // n x n samples covering [-half, half] including both ends.
    static Grid2D symmetric(std::size_t n, double half);
};

class QSignal2D {
public:
    QSignal2D() = default;
    explicit QSignal2D(const Grid2D& g);
    QSignal2D(const Grid2D& g, std::vector<Quaternion> data);

    template <class F>
    static QSignal2D from_function(const Grid2D& g, F&& fn) {
        QSignal2D s(g);
        for (std::size_t i1 = 0; i1 < g.n1; ++i1)
            for (std::size_t i2 = 0; i2 < g.n2; ++i2)
                s(i1, i2) = fn(g.x(i1), g.y(i2));
        return s;
    }

    const Grid2D& grid() const { return grid_; }
    const std::vector<Quaternion>& data() const { return data_; }
    std::vector<Quaternion>& data() { return data_; }

    Quaternion& operator()(std::size_t i1, std::size_t i2) { return data_[grid_.index(i1, i2)]; }
    const Quaternion& operator()(std::size_t i1, std::size_t i2) const {
        return data_[grid_.index(i1, i2)];
    }

    bool all_finite() const;
    double max_modulus() const;

    // Bilinear interpolation at a physical point; zero outside the sample hull.
    Quaternion sample(Vec2 p) const;

private:
    Grid2D grid_{};
    std::vector<Quaternion> data_;
};

// Interpolation of gridded quaternion data at a physical point. Samples
// beyond the grid count as zero. `sample_cubic` uses the Keys (a = -1/2) kernel.
Quaternion sample_linear(const Grid2D& g, const std::vector<Quaternion>& d, Vec2 p);
Quaternion sample_cubic(const Grid2D& g, const std::vector<Quaternion>& d, Vec2 p);

// Sum over the grid of f * conj(g), times the cell area.
Quaternion inner_product(const QSignal2D& f, const QSignal2D& g);
double l2_norm(const QSignal2D& f);

QSignal2D operator+(const QSignal2D& f, const QSignal2D& g);
QSignal2D operator-(const QSignal2D& f, const QSignal2D& g);
QSignal2D left_mul(const Quaternion& lambda, const QSignal2D& f);
QSignal2D right_mul(const QSignal2D& f, const Quaternion& lambda);

// x -> (1/a) f(r_{-theta}((x - b)/a)), sampled on `target` (default: f's grid).
QSignal2D resample_similitude(const QSignal2D& f, double a, double theta, Vec2 b);
QSignal2D resample_similitude(const QSignal2D& f, double a, double theta, Vec2 b,
                              const Grid2D& target);

// Copy f into a larger grid with the same origin and spacing, zero elsewhere.
QSignal2D zero_pad(const QSignal2D& f, std::size_t n1, std::size_t n2);

// Discretisation of SIM(2): log-uniform scales, uniform angles, translation grid.
struct SimGrid {
    std::vector<double> scales;
    std::vector<double> angles;
    Grid2D translations;
    std::vector<double> weights;  // index j*n_angles + k
    double smin = 0.0, smax = 0.0;
    double dlog = 0.0, dtheta = 0.0;

    std::size_t n_scales() const { return scales.size(); }
    std::size_t n_angles() const { return angles.size(); }
    std::size_t n_slices() const { return scales.size() * angles.size(); }
    std::size_t n_coeffs() const { return n_slices() * translations.size(); }
    double weight(std::size_t j, std::size_t k) const { return weights[j * angles.size() + k]; }

    // a_j = smin (smax/smin)^((j+1/2)/ns), theta_k = 2 pi k / na,
    // weight = a_j^-2 dln(a) dtheta so that sum w f(a) approximates int f a^-3 da dtheta.
    static SimGrid log_uniform(std::size_t ns, double smin, double smax, std::size_t na,
                               const Grid2D& translations);
};

// Every `stride`-th sample of `g`, starting at its origin.
Grid2D strided(const Grid2D& g, std::size_t stride);

}  // namespace qcwt
