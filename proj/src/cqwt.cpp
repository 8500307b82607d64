// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include "qcwt/cqwt.hpp"

#include <array>
#include <complex>
#include <mutex>

#include "fft.hpp"
#include "qcwt/parallel.hpp"

namespace qcwt {

using detail::cplx;

SimGrid reference_simgrid(const Grid2D& signal, std::size_t stride) {
    return SimGrid::log_uniform(32, 0.25, 4.0, 8, strided(signal, stride));
}

namespace {

struct Lattice {
    bool ok = false;
    std::size_t off1 = 0, off2 = 0, s1 = 1, s2 = 1;
};

// Is `t` a sub-lattice of `g` lying inside it?
Lattice lattice_of(const Grid2D& g, const Grid2D& t) {
    Lattice L;
    auto whole = [](double v, std::size_t& out) {
        double r = std::round(v);
        if (std::fabs(v - r) > 1e-9 || r < 0.0) return false;
        out = static_cast<std::size_t>(r);
        return true;
    };
    if (!whole(t.dx / g.dx, L.s1) || !whole(t.dy / g.dy, L.s2) || L.s1 == 0 || L.s2 == 0)
        return L;
    if (!whole((t.x0 - g.x0) / g.dx, L.off1) || !whole((t.y0 - g.y0) / g.dy, L.off2)) return L;
    if (L.off1 + (t.n1 - 1) * L.s1 >= g.n1 || L.off2 + (t.n2 - 1) * L.s2 >= g.n2) return L;
    L.ok = true;
    return L;
}

// (1/a) phi(r_{-theta}(y/a))
struct DaughterEval {
    const QWavelet& w;
    double inv, c, s;
    DaughterEval(const QWavelet& wv, double a, double theta)
        : w(wv), inv(1.0 / a), c(std::cos(theta)), s(std::sin(theta)) {}
    Quaternion operator()(Vec2 y) const {
        double px = y.x * inv, py = y.y * inv;
        return w.mother.sample({c * px + s * py, -s * px + c * py}) * inv;
    }
};

void require_scale(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw Error(Status::InvalidArgument, "scale must be positive");
}

Scalogram empty_scalogram(const QSignal2D& f, const QWavelet& w, const SimGrid& sim) {
    Scalogram S;
    S.sim = sim;
    S.signal_grid = f.grid();
    S.coeffs.assign(sim.n_coeffs(), Quaternion{});
    S.source_norm = l2_norm(f);
    S.c_phi = w.c_phi;
    S.wavelet_name = w.name;
    return S;
}

void attach_deficit(Scalogram& S, const QSignal2D& f, const QWavelet& w) {
    if (!w.c_phi || S.source_norm == 0.0) return;
    S.energy_deficit = 1.0 - predicted_capture(qft_forward(f), w, S.sim);
}

// --- four-component circular convolution on an M1 x M2 lattice ------------

struct Spec4 {
    std::array<std::vector<cplx>, 4> c;
    std::array<bool, 4> nz{};
};

void fft2(std::vector<cplx>& d, std::size_t M1, std::size_t M2, int sign) {
    detail::dft_lines(d.data(), M1, M2, M2, 1, sign);
    detail::dft_lines(d.data(), M2, M1, 1, M2, sign);
}

Spec4 fft4(const std::vector<Quaternion>& q, std::size_t M1, std::size_t M2) {
    Spec4 s;
    for (int i = 0; i < 4; ++i) {
        bool any = false;
        for (const auto& v : q)
            if (v[i] != 0.0) {
                any = true;
                break;
            }
        s.nz[i] = any;
        if (!any) continue;
        s.c[i].resize(q.size());
        for (std::size_t n = 0; n < q.size(); ++n) s.c[i][n] = q[n][i];
        fft2(s.c[i], M1, M2, -1);
    }
    return s;
}

struct BasisProduct {
    int k;
    double sign;
};

const std::array<std::array<BasisProduct, 4>, 4>& basis_table() {
    static const auto table = [] {
        std::array<std::array<BasisProduct, 4>, 4> t{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Quaternion a, b;
                a[i] = 1.0;
                b[j] = 1.0;
                Quaternion p = a * b;
                for (int k = 0; k < 4; ++k)
                    if (p[k] != 0.0) t[i][j] = {k, p[k]};
            }
        return t;
    }();
    return table;
}

// acc_k += scale * sum over e_i e_j = +-e_k of +-A_i B_j (A on the left).
void accumulate(const Spec4& A, const Spec4& B, double scale,
                std::array<std::vector<cplx>, 4>& acc) {
    const auto& t = basis_table();
    for (int i = 0; i < 4; ++i) {
        if (!A.nz[i]) continue;
        for (int j = 0; j < 4; ++j) {
            if (!B.nz[j]) continue;
            auto [k, sg] = t[i][j];
            double f = sg * scale;
            auto& out = acc[k];
            const auto& a = A.c[i];
            const auto& b = B.c[j];
            for (std::size_t n = 0; n < out.size(); ++n) out[n] += f * a[n] * b[n];
        }
    }
}

std::array<std::vector<cplx>, 4> zero_acc(std::size_t n) {
    std::array<std::vector<cplx>, 4> a;
    for (auto& v : a) v.assign(n, cplx{});
    return a;
}

// psi at lattice offsets o in [-(n-1), n-1], stored at (o mod M).
// With `reflect_conj` the stored value is conj(psi(-o)).
std::vector<Quaternion> circular_kernel(const DaughterEval& psi, const Grid2D& g, std::size_t M1,
                                        std::size_t M2, bool reflect_conj) {
    std::vector<Quaternion> k(M1 * M2);
    long n1 = static_cast<long>(g.n1), n2 = static_cast<long>(g.n2);
    for (long o1 = -(n1 - 1); o1 <= n1 - 1; ++o1)
        for (long o2 = -(n2 - 1); o2 <= n2 - 1; ++o2) {
            std::size_t idx = static_cast<std::size_t>((o1 + static_cast<long>(M1)) % static_cast<long>(M1)) * M2 +
                              static_cast<std::size_t>((o2 + static_cast<long>(M2)) % static_cast<long>(M2));
            double sgn = reflect_conj ? -1.0 : 1.0;
            Quaternion v = psi({sgn * static_cast<double>(o1) * g.dx, sgn * static_cast<double>(o2) * g.dy});
            k[idx] = reflect_conj ? quat_conj(v) : v;
        }
    return k;
}

// Trigonometric interpolation of an n1 x n2 array onto N1 x N2 points (N >= n).
std::vector<Quaternion> fourier_upsample(const Quaternion* T, std::size_t n1, std::size_t n2,
                                         std::size_t N1, std::size_t N2) {
    std::vector<Quaternion> out(N1 * N2);
    auto wrap = [](std::size_t k, std::size_t n, std::size_t N) {
        // frequencies at and above n/2 are the negative ones
        return k < (n + 1) / 2 ? k : N - (n - k);
    };
    double norm = 1.0 / static_cast<double>(n1 * n2);
    for (int c = 0; c < 4; ++c) {
        std::vector<cplx> a(n1 * n2), big(N1 * N2);
        bool any = false;
        for (std::size_t n = 0; n < a.size(); ++n) {
            a[n] = T[n][c];
            any = any || T[n][c] != 0.0;
        }
        if (!any) continue;
        fft2(a, n1, n2, -1);
        for (std::size_t k1 = 0; k1 < n1; ++k1)
            for (std::size_t k2 = 0; k2 < n2; ++k2)
                big[wrap(k1, n1, N1) * N2 + wrap(k2, n2, N2)] = a[k1 * n2 + k2];
        fft2(big, N1, N2, +1);
        for (std::size_t n = 0; n < out.size(); ++n) out[n][c] = big[n].real() * norm;
    }
    return out;
}

}  // namespace

Quaternion cqwt_coefficient(const QSignal2D& f, const QWavelet& w, double a, double theta, Vec2 b) {
    require_scale(a);
    DaughterEval psi(w, a, theta);
    const Grid2D& g = f.grid();
    Quaternion acc;
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
            const Quaternion& v = f(i1, i2);
            if (v == Quaternion{}) continue;
            acc += v * quat_conj(psi(g.point(i1, i2) - b));
        }
    return acc * g.cell_area();
}

Scalogram cqwt_direct(const QSignal2D& f, const QWavelet& w, const SimGrid& sim) {
    if (sim.n_coeffs() > kDirectGuard)
        throw Error(Status::GuardExceeded, "cqwt_direct: more than 1e5 coefficients requested");
    Scalogram S = empty_scalogram(f, w, sim);
    S.method = "direct";
    const Grid2D& g = f.grid();
    const Grid2D& t = sim.translations;
    Lattice L = lattice_of(g, t);
    std::size_t na = sim.n_angles();
    parallel_for(sim.n_slices(), [&](std::size_t jk) {
        std::size_t j = jk / na, k = jk % na;
        DaughterEval psi(w, sim.scales[j], sim.angles[k]);
        Quaternion* out = S.slice(j, k);
        if (L.ok) {
            // psi(x - b) only depends on the lattice offset
            long n1 = static_cast<long>(g.n1), n2 = static_cast<long>(g.n2);
            std::size_t w2 = 2 * g.n2 - 1;
            std::vector<Quaternion> ker((2 * g.n1 - 1) * w2);
            for (long o1 = -(n1 - 1); o1 < n1; ++o1)
                for (long o2 = -(n2 - 1); o2 < n2; ++o2)
                    ker[static_cast<std::size_t>(o1 + n1 - 1) * w2 + static_cast<std::size_t>(o2 + n2 - 1)] =
                        quat_conj(psi({static_cast<double>(o1) * g.dx, static_cast<double>(o2) * g.dy}));
            for (std::size_t t1 = 0; t1 < t.n1; ++t1)
                for (std::size_t t2 = 0; t2 < t.n2; ++t2) {
                    long b1 = static_cast<long>(L.off1 + t1 * L.s1), b2 = static_cast<long>(L.off2 + t2 * L.s2);
                    Quaternion acc;
                    for (long i1 = 0; i1 < n1; ++i1)
                        for (long i2 = 0; i2 < n2; ++i2)
                            acc += f(static_cast<std::size_t>(i1), static_cast<std::size_t>(i2)) *
                                   ker[static_cast<std::size_t>(i1 - b1 + n1 - 1) * w2 +
                                       static_cast<std::size_t>(i2 - b2 + n2 - 1)];
                    out[t.index(t1, t2)] = acc * g.cell_area();
                }
        } else {
            for (std::size_t t1 = 0; t1 < t.n1; ++t1)
                for (std::size_t t2 = 0; t2 < t.n2; ++t2) {
                    Vec2 b = t.point(t1, t2);
                    Quaternion acc;
                    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
                        for (std::size_t i2 = 0; i2 < g.n2; ++i2)
                            acc += f(i1, i2) * quat_conj(psi(g.point(i1, i2) - b));
                    out[t.index(t1, t2)] = acc * g.cell_area();
                }
        }
    });
    attach_deficit(S, f, w);
    return S;
}

Scalogram cqwt_lattice(const QSignal2D& f, const QWavelet& w, const SimGrid& sim) {
    const Grid2D& g = f.grid();
    const Grid2D& t = sim.translations;
    Lattice L = lattice_of(g, t);
    if (!L.ok)
        throw Error(Status::InvalidArgument,
                    "cqwt_lattice: translations must be a sub-lattice of the signal grid");
    Scalogram S = empty_scalogram(f, w, sim);
    S.method = "lattice";
    std::size_t M1 = 2 * g.n1, M2 = 2 * g.n2;
    std::vector<Quaternion> fp(M1 * M2);
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) fp[i1 * M2 + i2] = f(i1, i2);
    Spec4 F4 = fft4(fp, M1, M2);
    double scale = g.cell_area() / static_cast<double>(M1 * M2);
    std::size_t na = sim.n_angles();
    parallel_for(sim.n_slices(), [&](std::size_t jk) {
        std::size_t j = jk / na, k = jk % na;
        DaughterEval psi(w, sim.scales[j], sim.angles[k]);
        Spec4 K4 = fft4(circular_kernel(psi, g, M1, M2, true), M1, M2);
        auto acc = zero_acc(M1 * M2);
        accumulate(F4, K4, 1.0, acc);
        for (auto& c : acc) fft2(c, M1, M2, +1);
        Quaternion* out = S.slice(j, k);
        for (std::size_t t1 = 0; t1 < t.n1; ++t1)
            for (std::size_t t2 = 0; t2 < t.n2; ++t2) {
                std::size_t idx = (L.off1 + t1 * L.s1) * M2 + (L.off2 + t2 * L.s2);
                out[t.index(t1, t2)] = Quaternion(acc[0][idx].real(), acc[1][idx].real(),
                                                  acc[2][idx].real(), acc[3][idx].real()) * scale;
            }
    });
    attach_deficit(S, f, w);
    return S;
}

bool spectrum_in_c2(const QSpectrum2D& F) {
    double peak = F.max_modulus(), worst = 0.0;
    for (const auto& q : F.data) worst = std::max({worst, std::fabs(q.q1), std::fabs(q.q3)});
    return worst <= 1e-8 * peak;
}

Scalogram cqwt_fast(const QSignal2D& f, const QWavelet& w, const SimGrid& sim) {
    const Grid2D& g = f.grid();
    const Grid2D& t = sim.translations;
    Lattice L = lattice_of(g, t);
    std::size_t M1 = 2 * g.n1, M2 = 2 * g.n2;
    QSpectrum2D Fh = qft_forward(zero_pad(f, M1, M2));
    if (!w.commutes_with_e2 || !L.ok || !spectrum_in_c2(Fh)) {
        Scalogram S = sim.n_coeffs() <= kDirectGuard || !L.ok ? cqwt_direct(f, w, sim)
                                                              : cqwt_lattice(f, w, sim);
        S.fallback = true;
        return S;
    }
    Scalogram S = empty_scalogram(f, w, sim);
    S.method = "fast";
    for (auto& q : Fh.data) q = quat_conj(q);
    Grid2D kgrid{M1, M2, -static_cast<double>(g.n1) * g.dx, -static_cast<double>(g.n2) * g.dy, g.dx, g.dy};
    std::size_t na = sim.n_angles();
    parallel_for(sim.n_slices(), [&](std::size_t jk) {
        std::size_t j = jk / na, k = jk % na;
        DaughterEval psi(w, sim.scales[j], sim.angles[k]);
        QSignal2D kern(kgrid);
        for (std::size_t m1 = 1; m1 < M1; ++m1)
            for (std::size_t m2 = 1; m2 < M2; ++m2) kern(m1, m2) = psi(kgrid.point(m1, m2));
        QSpectrum2D P = qft_forward(kern);
        for (std::size_t n = 0; n < P.data.size(); ++n) P.data[n] = P.data[n] * Fh.data[n];
        // g(b') = conj T(-b'), sampled where -b' runs over the signal lattice
        P.x0 = -g.x0 - static_cast<double>(g.n1 - 1) * g.dx;
        P.y0 = -g.y0 - static_cast<double>(g.n2 - 1) * g.dy;
        QSignal2D gr = qft_inverse(P);
        Quaternion* out = S.slice(j, k);
        for (std::size_t t1 = 0; t1 < t.n1; ++t1)
            for (std::size_t t2 = 0; t2 < t.n2; ++t2) {
                std::size_t k1 = L.off1 + t1 * L.s1, k2 = L.off2 + t2 * L.s2;
                out[t.index(t1, t2)] = quat_conj(gr(g.n1 - 1 - k1, g.n2 - 1 - k2));
            }
    });
    attach_deficit(S, f, w);
    return S;
}

QSignal2D cqwt_inverse(const Scalogram& S, const QWavelet& w) {
    if (!w.c_phi) throw Error(Status::Admissibility, "cqwt_inverse: wavelet has no admissibility constant");
    const double C = *w.c_phi;
    const Grid2D& g = S.signal_grid;
    const Grid2D& t = S.sim.translations;
    const SimGrid& sim = S.sim;
    double dAb = t.cell_area();
    std::size_t na = sim.n_angles();
    Lattice L = lattice_of(g, t);
    QSignal2D out(g);
    if (!L.ok) {
        if (g.size() * sim.n_coeffs() > std::size_t{2000000000})
            throw Error(Status::GuardExceeded, "cqwt_inverse: off-lattice synthesis too large");
        std::mutex mu;
        parallel_for(sim.n_slices(), [&](std::size_t jk) {
            std::size_t j = jk / na, k = jk % na;
            DaughterEval psi(w, sim.scales[j], sim.angles[k]);
            QSignal2D part(g);
            const Quaternion* T = S.slice(j, k);
            for (std::size_t i1 = 0; i1 < g.n1; ++i1)
                for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
                    Quaternion acc;
                    for (std::size_t b = 0; b < t.size(); ++b)
                        acc += T[b] * psi(g.point(i1, i2) - t.point(b / t.n2, b % t.n2));
                    part(i1, i2) = acc * (sim.weight(j, k) * dAb / C);
                }
            std::lock_guard lk(mu);
            for (std::size_t n = 0; n < g.size(); ++n) out.data()[n] += part.data()[n];
        });
        return out;
    }
    std::size_t M1 = 2 * g.n1, M2 = 2 * g.n2;
    bool fourier_up = L.off1 == 0 && L.off2 == 0 && t.n1 * L.s1 == g.n1 && t.n2 * L.s2 == g.n2;
    auto total = zero_acc(M1 * M2);
    std::mutex mu;
    parallel_for(sim.n_slices(), [&](std::size_t jk) {
        std::size_t j = jk / na, k = jk % na;
        const Quaternion* T = S.slice(j, k);
        std::vector<Quaternion> up(M1 * M2);
        bool any = false;
        if (L.s1 == 1 && L.s2 == 1) {
            for (std::size_t t1 = 0; t1 < t.n1; ++t1)
                for (std::size_t t2 = 0; t2 < t.n2; ++t2) {
                    const Quaternion& v = T[t.index(t1, t2)];
                    up[(L.off1 + t1) * M2 + (L.off2 + t2)] = v;
                    any = any || v != Quaternion{};
                }
        } else if (fourier_up) {
            // b-integral at the signal spacing: band-limited interpolation of
            // the coefficient slice onto every lattice point
            std::vector<Quaternion> fine = fourier_upsample(T, t.n1, t.n2, g.n1, g.n2);
            for (std::size_t i1 = 0; i1 < g.n1; ++i1)
                for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
                    const Quaternion& v = fine[i1 * g.n2 + i2];
                    up[i1 * M2 + i2] = v;
                    any = any || v != Quaternion{};
                }
        } else {
            std::vector<Quaternion> slice(T, T + t.size());
            for (std::size_t i1 = 0; i1 < g.n1; ++i1)
                for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
                    Quaternion v = sample_cubic(t, slice, g.point(i1, i2));
                    up[i1 * M2 + i2] = v;
                    any = any || v != Quaternion{};
                }
        }
        if (!any) return;
        DaughterEval psi(w, sim.scales[j], sim.angles[k]);
        Spec4 A = fft4(up, M1, M2);
        Spec4 B = fft4(circular_kernel(psi, g, M1, M2, false), M1, M2);
        auto part = zero_acc(M1 * M2);
        accumulate(A, B, sim.weight(j, k) * (L.s1 == 1 && L.s2 == 1 ? dAb : g.cell_area()) / C, part);
        std::lock_guard lk(mu);
        for (int c = 0; c < 4; ++c)
            for (std::size_t n = 0; n < part[c].size(); ++n) total[c][n] += part[c][n];
    });
    for (auto& c : total) fft2(c, M1, M2, +1);
    double norm = 1.0 / static_cast<double>(M1 * M2);
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
            std::size_t idx = i1 * M2 + i2;
            out(i1, i2) = Quaternion(total[0][idx].real(), total[1][idx].real(), total[2][idx].real(),
                                     total[3][idx].real()) * norm;
        }
    return out;
}

Quaternion scalogram_inner_product(const Scalogram& S1, const Scalogram& S2) {
    if (S1.coeffs.size() != S2.coeffs.size() || S1.sim.n_slices() != S2.sim.n_slices() ||
        !S1.sim.translations.same_as(S2.sim.translations))
        throw Error(Status::GridMismatch, "scalograms live on different SimGrids");
    const SimGrid& sim = S1.sim;
    double dAb = sim.translations.cell_area();
    Quaternion total;
    for (std::size_t j = 0; j < sim.n_scales(); ++j)
        for (std::size_t k = 0; k < sim.n_angles(); ++k) {
            const Quaternion* a = S1.slice(j, k);
            const Quaternion* b = S2.slice(j, k);
            Quaternion acc;
            for (std::size_t n = 0; n < S1.slice_size(); ++n) acc += a[n] * quat_conj(b[n]);
            total += acc * (sim.weight(j, k) * dAb);
        }
    return total;
}

double scalogram_norm2(const Scalogram& S) { return scalogram_inner_product(S, S).q0; }

RkResult reproducing_kernel_check(const Scalogram& S, const QWavelet& w,
                                  const std::vector<RkPoint>& points) {
    QSignal2D rec = cqwt_inverse(S, w);
    RkResult r;
    const SimGrid& sim = S.sim;
    for (const auto& p : points) {
        if (p.j >= sim.n_scales() || p.k >= sim.n_angles() || p.i1 >= sim.translations.n1 ||
            p.i2 >= sim.translations.n2)
            throw Error(Status::InvalidArgument, "reproducing_kernel_check: point off the SimGrid");
        Quaternion lhs = S.at(p.j, p.k, p.i1, p.i2);
        Quaternion rhs = cqwt_coefficient(rec, w, sim.scales[p.j], sim.angles[p.k],
                                          sim.translations.point(p.i1, p.i2));
        double d = quat_modulus(lhs - rhs), m = quat_modulus(lhs);
        double res = m > 0.0 ? d / m : (d > 0.0 ? INFINITY : 0.0);
        r.max_residual = std::max(r.max_residual, res);
        r.lhs.push_back(lhs);
        r.rhs.push_back(rhs);
    }
    return r;
}

QuatPair parseval_check(const QSignal2D& f, const QSignal2D& g, const QWavelet& w,
                        const SimGrid& sim) {
    if (!w.c_phi) throw Error(Status::Admissibility, "parseval_check: wavelet has no admissibility constant");
    Scalogram Tf = cqwt_fast(f, w, sim);
    Scalogram Tg = cqwt_fast(g, w, sim);
    return {scalogram_inner_product(Tf, Tg), inner_product(f, g) * *w.c_phi};
}

RealPair lp_bound_check(const Scalogram& S, const QWavelet& w, double p) {
    if (!(p >= 2.0)) throw Error(Status::InvalidArgument, "lp_bound_check: need p >= 2");
    double nphi = l2_norm(w.mother);
    RealPair r;
    if (std::isinf(p)) {
        for (const auto& q : S.coeffs) r.lhs = std::max(r.lhs, quat_modulus(q));
        r.rhs = nphi * S.source_norm;
        return r;
    }
    if (!w.c_phi) throw Error(Status::Admissibility, "lp_bound_check: wavelet has no admissibility constant");
    const SimGrid& sim = S.sim;
    double dAb = sim.translations.cell_area(), acc = 0.0;
    for (std::size_t j = 0; j < sim.n_scales(); ++j)
        for (std::size_t k = 0; k < sim.n_angles(); ++k) {
            const Quaternion* a = S.slice(j, k);
            double s = 0.0;
            for (std::size_t n = 0; n < S.slice_size(); ++n) s += std::pow(quat_modulus(a[n]), p);
            acc += s * sim.weight(j, k) * dAb;
        }
    r.lhs = std::pow(acc, 1.0 / p);
    r.rhs = std::pow(*w.c_phi, 1.0 / p) * std::pow(nphi, 1.0 - 2.0 / p) * S.source_norm;
    return r;
}

double predicted_capture(const QSpectrum2D& F, const QWavelet& w, const SimGrid& sim) {
    if (!w.c_phi) throw Error(Status::Admissibility, "predicted_capture: wavelet has no admissibility constant");
    double peak = F.max_modulus();
    if (peak == 0.0) return 1.0;
    double thr = 1e-14 * peak * peak;
    const Grid2D& g = F.grid;
    std::vector<std::size_t> idx;
    double total = 0.0;
    for (std::size_t n = 0; n < F.data.size(); ++n) {
        double v = quat_norm2(F.data[n]);
        total += v;
        if (v > thr) idx.push_back(n);
    }
    std::vector<double> part(idx.size());
    parallel_for(idx.size(), [&](std::size_t i) {
        std::size_t n = idx[i];
        Vec2 xi = g.point(n / g.n2, n % g.n2);
        double m = 0.0;
        for (double a : sim.scales)
            for (double th : sim.angles) m += quat_norm2(rotated_mother_spectrum(w, th, a * xi));
        part[i] = m * sim.dlog * sim.dtheta * quat_norm2(F.data[n]);
    });
    double captured = 0.0;
    for (double v : part) captured += v;
    return captured / (*w.c_phi * total);
}

}  // namespace qcwt
