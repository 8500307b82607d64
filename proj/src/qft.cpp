// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include "qcwt/qft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"

namespace qcwt {

using detail::cplx;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Grid2D QSpectrum2D::frequency_grid(const Grid2D& s) {
    double du1 = 1.0 / (static_cast<double>(s.n1) * s.dx);
    double du2 = 1.0 / (static_cast<double>(s.n2) * s.dy);
    return {s.n1, s.n2, -static_cast<double>(s.n1 / 2) * du1, -static_cast<double>(s.n2 / 2) * du2,
            du1, du2};
}

QSpectrum2D::QSpectrum2D(const Grid2D& spatial)
    : grid(frequency_grid(spatial)), x0(spatial.x0), y0(spatial.y0), data(spatial.size()) {
    spatial.validate();
}

Grid2D QSpectrum2D::spatial_grid() const {
    return {grid.n1, grid.n2, x0, y0, 1.0 / (static_cast<double>(grid.n1) * grid.dx),
            1.0 / (static_cast<double>(grid.n2) * grid.dy)};
}

double QSpectrum2D::max_modulus() const {
    double m = 0.0;
    for (const auto& q : data) m = std::max(m, quat_modulus(q));
    return m;
}

Quaternion inner_product(const QSpectrum2D& F, const QSpectrum2D& G) {
    if (!F.grid.same_as(G.grid)) throw Error(Status::GridMismatch, "spectrum grid mismatch");
    Quaternion acc;
    for (std::size_t i = 0; i < F.data.size(); ++i) acc += F.data[i] * quat_conj(G.data[i]);
    return acc * F.grid.cell_area();
}

double l2_norm(const QSpectrum2D& F) {
    double acc = 0.0;
    for (const auto& q : F.data) acc += quat_norm2(q);
    return std::sqrt(acc * F.grid.cell_area());
}

QSpectrum2D qft_direct_oracle(const QSignal2D& f) {
    const Grid2D& g = f.grid();
    if (g.size() > 4096) throw Error(Status::GuardExceeded, "qft_direct_oracle: grid too large");
    QSpectrum2D F(g);
    const Grid2D& fg = F.grid;
    for (std::size_t m1 = 0; m1 < fg.n1; ++m1) {
        for (std::size_t m2 = 0; m2 < fg.n2; ++m2) {
            double u1 = fg.x(m1), u2 = fg.y(m2);
            Quaternion acc;
            for (std::size_t i1 = 0; i1 < g.n1; ++i1) {
                Quaternion left = unit_phase(Quaternion::e1(), -kTwoPi * u1 * g.x(i1));
                for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
                    Quaternion right = unit_phase(Quaternion::e2(), -kTwoPi * u2 * g.y(i2));
                    acc += left * f(i1, i2) * right;
                }
            }
            F(m1, m2) = acc * g.cell_area();
        }
    }
    return F;
}

namespace {

// One axis of the continuous-scaled transform on complex lines.
void axis_transform(cplx* d, std::size_t n, std::size_t lines, std::size_t stride,
                    std::size_t dist, double origin, double spacing, bool forward) {
    std::size_t h = n / 2;
    double du = 1.0 / (static_cast<double>(n) * spacing);
    std::vector<cplx> ph(n), tmp(n);
    for (std::size_t m = 0; m < n; ++m) {
        double u = (static_cast<double>(m) - static_cast<double>(h)) * du;
        ph[m] = std::polar(1.0, (forward ? -kTwoPi : kTwoPi) * u * origin);
    }
    if (forward) {
        detail::dft_lines(d, n, lines, stride, dist, -1);
        for (std::size_t l = 0; l < lines; ++l) {
            cplx* line = d + l * dist;
            for (std::size_t k = 0; k < n; ++k) tmp[k] = line[k * stride];
            for (std::size_t m = 0; m < n; ++m)
                line[m * stride] = spacing * ph[m] * tmp[(m + n - h) % n];
        }
    } else {
        for (std::size_t l = 0; l < lines; ++l) {
            cplx* line = d + l * dist;
            for (std::size_t m = 0; m < n; ++m) tmp[(m + n - h) % n] = du * ph[m] * line[m * stride];
            for (std::size_t k = 0; k < n; ++k) line[k * stride] = tmp[k];
        }
        detail::dft_lines(d, n, lines, stride, dist, +1);
    }
}

}  // namespace

QSpectrum2D qft_forward(const QSignal2D& f) {
    const Grid2D& g = f.grid();
    std::size_t N = g.size();
    std::vector<cplx> A(N), B(N);
    for (std::size_t i = 0; i < N; ++i) {
        const Quaternion& q = f.data()[i];
        A[i] = {q.q0, q.q1};  // e1-complex
        B[i] = {q.q2, q.q3};  // f = A + B e2
    }
    axis_transform(A.data(), g.n1, g.n2, g.n2, 1, g.x0, g.dx, true);
    axis_transform(B.data(), g.n1, g.n2, g.n2, 1, g.x0, g.dx, true);
    // regroup as C + e1 D with C, D e2-complex
    for (std::size_t i = 0; i < N; ++i) {
        cplx a = A[i], b = B[i];
        A[i] = {a.real(), b.real()};
        B[i] = {a.imag(), b.imag()};
    }
    axis_transform(A.data(), g.n2, g.n1, 1, g.n2, g.y0, g.dy, true);
    axis_transform(B.data(), g.n2, g.n1, 1, g.n2, g.y0, g.dy, true);
    QSpectrum2D F(g);
    for (std::size_t i = 0; i < N; ++i)
        F.data[i] = {A[i].real(), B[i].real(), A[i].imag(), B[i].imag()};
    return F;
}

QSignal2D qft_inverse(const QSpectrum2D& F) {
    Grid2D g = F.spatial_grid();
    std::size_t N = g.size();
    std::vector<cplx> C(N), D(N);
    for (std::size_t i = 0; i < N; ++i) {
        const Quaternion& q = F.data[i];
        C[i] = {q.q0, q.q2};
        D[i] = {q.q1, q.q3};
    }
    axis_transform(C.data(), g.n2, g.n1, 1, g.n2, g.y0, g.dy, false);
    axis_transform(D.data(), g.n2, g.n1, 1, g.n2, g.y0, g.dy, false);
    for (std::size_t i = 0; i < N; ++i) {
        cplx c = C[i], d = D[i];
        C[i] = {c.real(), d.real()};
        D[i] = {c.imag(), d.imag()};
    }
    axis_transform(C.data(), g.n1, g.n2, g.n2, 1, g.x0, g.dx, false);
    axis_transform(D.data(), g.n1, g.n2, g.n2, 1, g.x0, g.dx, false);
    QSignal2D f(g);
    for (std::size_t i = 0; i < N; ++i)
        f.data()[i] = {C[i].real(), C[i].imag(), D[i].real(), D[i].imag()};
    return f;
}

Quaternion qft_eval(const QSignal2D& f, Vec2 u) {
    const Grid2D& g = f.grid();
    std::vector<Quaternion> right(g.n2);
    for (std::size_t i2 = 0; i2 < g.n2; ++i2)
        right[i2] = unit_phase(Quaternion::e2(), -kTwoPi * u.y * g.y(i2));
    Quaternion acc;
    for (std::size_t i1 = 0; i1 < g.n1; ++i1) {
        Quaternion row;
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) row += f(i1, i2) * right[i2];
        acc += unit_phase(Quaternion::e1(), -kTwoPi * u.x * g.x(i1)) * row;
    }
    return acc * g.cell_area();
}

QSpectrum2D spectral_derivative(const QSpectrum2D& F, int m, int n) {
    if (m < 0 || n < 0) throw Error(Status::InvalidArgument, "derivative orders must be >= 0");
    QSpectrum2D out(F);
    const Grid2D& g = F.grid;
    for (std::size_t i1 = 0; i1 < g.n1; ++i1) {
        Quaternion left(1.0);
        for (int k = 0; k < m; ++k) left = left * Quaternion(0, kTwoPi * g.x(i1), 0, 0);
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
            Quaternion right(1.0);
            for (int k = 0; k < n; ++k) right = right * Quaternion(0, 0, kTwoPi * g.y(i2), 0);
            out(i1, i2) = left * F(i1, i2) * right;
        }
    }
    return out;
}

QSpectrum2D spectral_laplacian(const QSpectrum2D& F) {
    QSpectrum2D out(F);
    const Grid2D& g = F.grid;
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
            double r2 = g.x(i1) * g.x(i1) + g.y(i2) * g.y(i2);
            out(i1, i2) = F(i1, i2) * (-kTwoPi * kTwoPi * r2);
        }
    return out;
}

std::pair<QSpectrum2D, QSpectrum2D> split_pm(const QSpectrum2D& F) {
    QSpectrum2D P(F), M(F);
    for (std::size_t i = 0; i < F.data.size(); ++i) {
        const Quaternion& q = F.data[i];
        Quaternion t = Quaternion::e1() * q * Quaternion::e2();
        P.data[i] = 0.5 * (q + t);
        M.data[i] = 0.5 * (q - t);
    }
    return {std::move(P), std::move(M)};
}

Quaternion sample_cubic(const QSpectrum2D& F, Vec2 u) { return sample_cubic(F.grid, F.data, u); }

QSpectrum2D rotated_spectrum(const QSpectrum2D& F, double theta) {
    auto [P, M] = split_pm(F);
    QSpectrum2D out(F);
    const Grid2D& g = F.grid;
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
            Vec2 xi = g.point(i1, i2);
            out(i1, i2) = sample_cubic(P, rotate(xi, -theta)) + sample_cubic(M, rotate(xi, theta));
        }
    return out;
}

RotationResiduals rotation_identity_residuals(const QSignal2D& f, double theta) {
    const Grid2D& g = f.grid();
    QSignal2D rotated(g);
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
        for (std::size_t i2 = 0; i2 < g.n2; ++i2)
            rotated(i1, i2) = sample_cubic(g, f.data(), rotate(g.point(i1, i2), theta));
    QSpectrum2D lhs = qft_forward(rotated);
    // interpolate from a 2x finer spectrum of the same signal
    QSpectrum2D fine = qft_forward(zero_pad(f, 2 * g.n1, 2 * g.n2));
    auto [P, M] = split_pm(fine);
    double peak = std::max(qft_forward(f).max_modulus(), 1e-300);
    RotationResiduals r;
    const Grid2D& fg = lhs.grid;
    for (std::size_t i1 = 0; i1 < fg.n1; ++i1)
        for (std::size_t i2 = 0; i2 < fg.n2; ++i2) {
            Vec2 xi = fg.point(i1, i2);
            Vec2 fwd = rotate(xi, theta), back = rotate(xi, -theta);
            Quaternion corrected = sample_cubic(P, back) + sample_cubic(M, fwd);
            Quaternion fa = sample_cubic(fine, fwd), fb = sample_cubic(fine, back);
            Quaternion flipped =
                0.5 * (fa + fb + Quaternion::e1() * (fa - fb) * Quaternion::e2());
            r.corrected = std::max(r.corrected, quat_modulus(lhs(i1, i2) - corrected) / peak);
            r.opposite_sign = std::max(r.opposite_sign, quat_modulus(lhs(i1, i2) - flipped) / peak);
        }
    return r;
}

double check_rotation_identity(const QSignal2D& f, double theta) {
    return rotation_identity_residuals(f, theta).corrected;
}

}  // namespace qcwt
