// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include "qcwt/verify.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <memory>
#include <numbers>
#include <random>
#include <set>

#include "qcwt/corpus.hpp"
#include "qcwt/parallel.hpp"
#include "qcwt/uncertainty.hpp"

namespace qcwt {

namespace {

constexpr double kPi = std::numbers::pi;

using Tol = std::map<std::string, double>;

const Tol kDefaults = {
    {"quaternion", 1e-12},  {"qft_eigen", 1e-6},      {"qft_oracle", 1e-10},  {"parseval", 1e-8},
    {"roundtrip", 1e-10},   {"derivative", 1e-4},     {"laplacian", 1e-12},   {"rotation", 2e-3},
    {"admissibility", 0.02}, {"spread", 0.02},        {"cqwt_fast", 1e-6},    {"cqwt_parseval", 0.05},
    {"inversion", 0.05},    {"kernel", 0.05},         {"covariance_exact", 1e-12}, {"covariance", 0.01},
    {"lp", 0.01},           {"heisenberg_lemma", 0.05}, {"heisenberg_gauss", 0.02}, {"heisenberg", 0.01},
    {"log_up", 0.01},       {"hardy", 0.05},          {"hardy_r2", 0.999},
};

CheckRow named(std::string suite, std::string name) {
    CheckRow r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    return r;
}

CheckRow error_row(std::string suite, std::string name, double err, double tol) {
    CheckRow r = named(std::move(suite), std::move(name));
    r.lhs = err;
    r.rhs = 0.0;
    r.tolerance = tol;
    r.margin = tol - err;
    r.passed = std::isfinite(err) && err <= tol;
    return r;
}

CheckRow equality_row(std::string suite, std::string name, double lhs, double rhs, double tol) {
    CheckRow r = named(std::move(suite), std::move(name));
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    r.margin = lhs / rhs - 1.0;
    r.passed = std::fabs(r.margin) <= tol;
    return r;
}

CheckRow from_up(std::string suite, const UPReport& u, double tol, bool equality) {
    CheckRow r = named(std::move(suite), u.name);
    r.lhs = u.lhs;
    r.rhs = u.rhs;
    r.margin = u.margin;
    r.tolerance = tol;
    r.hypotheses_ok = u.hypotheses_ok;
    r.passed = u.trivial || (equality ? std::fabs(u.margin) <= tol : u.margin >= -tol);
    r.note = u.note;
    return r;
}

double rel_l2(const std::vector<Quaternion>& a, const std::vector<Quaternion>& ref) {
    double n = 0.0, d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        n += quat_norm2(a[i] - ref[i]);
        d += quat_norm2(ref[i]);
    }
    return std::sqrt(n / d);
}

double max_diff(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, quat_modulus(a[i] - b[i]));
    return m;
}

QSignal2D central_difference(const QSignal2D& f, int axis) {
    static const double c[4] = {4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
    const Grid2D& g = f.grid();
    QSignal2D d(g);
    double h = axis == 1 ? g.dx : g.dy;
    auto at = [&](long i1, long i2) {
        if (i1 < 0 || i2 < 0 || i1 >= long(g.n1) || i2 >= long(g.n2)) return Quaternion{};
        return f(std::size_t(i1), std::size_t(i2));
    };
    for (long i1 = 0; i1 < long(g.n1); ++i1)
        for (long i2 = 0; i2 < long(g.n2); ++i2) {
            Quaternion s;
            for (int k = 1; k <= 4; ++k) {
                Quaternion p = axis == 1 ? at(i1 + k, i2) : at(i1, i2 + k);
                Quaternion m = axis == 1 ? at(i1 - k, i2) : at(i1, i2 - k);
                s += (p - m) * c[k - 1];
            }
            d(std::size_t(i1), std::size_t(i2)) = s * (1.0 / h);
        }
    return d;
}

// Shared state of one run: the default corpus, the wavelet, reference scalograms.
struct Context {
    Tol tol;
    Grid2D ref = Grid2D::square(128, 8.0);
    QWavelet logw;
    std::map<std::string, QSignal2D> signals;
    std::map<std::string, Scalogram> scal;

    double t(const std::string& k) const { return tol.at(k); }

    void prepare(bool need_scalograms) {
        logw = log_gaussian_wavelet();
        admissibility_constant(logw, default_probes(8), default_scale_quadrature());
        signals.emplace("gaussian", gaussian(ref));
        signals.emplace("mexican_hat", mexican_hat(ref));
        signals.emplace("mexican_hat_shift2", mexican_hat(ref, 1.0, {0.0, 0.75}));
        signals.emplace("mexican_hat_e2", right_mul(mexican_hat(ref), Quaternion(1.0, 0.0, 0.5, 0.0)));
        signals.emplace("mexican_hat_wide", mexican_hat(ref, 1.3));
        if (!need_scalograms) return;
        std::vector<std::string> names;
        for (const auto& [k, v] : signals) names.push_back(k);
        std::vector<Scalogram> out(names.size());
        SimGrid sim = reference_simgrid(ref);
        parallel_for(names.size(), [&](std::size_t i) { out[i] = cqwt_fast(signals.at(names[i]), logw, sim); });
        for (std::size_t i = 0; i < names.size(); ++i) scal.emplace(names[i], std::move(out[i]));
    }
};

using Job = std::function<std::vector<CheckRow>(const Context&)>;

std::vector<Job> qft_jobs() {
    std::vector<Job> jobs;
    jobs.push_back([](const Context& c) {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst = 0.0;
        for (std::size_t n1 = 2; n1 <= 16; ++n1)
            for (std::size_t n2 = 2; n2 <= 16; ++n2) {
                Grid2D g{n1, n2, -0.5 * double(n1) * 0.25, -0.5 * double(n2) * 0.25, 0.25, 0.25};
                QSignal2D f(g);
                for (auto& q : f.data()) q = Quaternion(u(rng), u(rng), u(rng), u(rng));
                worst = std::max(worst, max_diff(qft_forward(f).data, qft_direct_oracle(f).data));
            }
        return std::vector{error_row("qft", "oracle_equivalence", worst, c.t("qft_oracle"))};
    });
    jobs.push_back([](const Context& c) {
        auto F = qft_forward(c.signals.at("gaussian"));
        auto want = gaussian(F.grid);
        return std::vector{error_row("qft", "gaussian_eigenfunction", max_diff(F.data, want.data()), c.t("qft_eigen"))};
    });
    jobs.push_back([](const Context& c) {
        std::vector<CheckRow> rows;
        double rt = 0.0, pv = 0.0, ps = 0.0, pq = 0.0;
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            auto f = random_bandlimited(c.ref, seed), g = random_bandlimited(c.ref, seed + 100);
            auto F = qft_forward(f), G = qft_forward(g);
            rt = std::max(rt, rel_l2(qft_inverse(F).data(), f.data()));
            double nf = l2_norm(f), ng = l2_norm(g);
            pv = std::max(pv, std::fabs(l2_norm(F) * l2_norm(F) - nf * nf) / (nf * nf));
            Quaternion a = inner_product(F, G), b = inner_product(f, g);
            ps = std::max(ps, std::fabs(a.q0 - b.q0) / (nf * ng));
            pq = std::max(pq, quat_modulus(a - b) / (nf * ng));
        }
        rows.push_back(error_row("qft", "inverse_roundtrip", rt, c.t("roundtrip")));
        rows.push_back(error_row("qft", "parseval", pv, c.t("parseval")));
        rows.push_back(error_row("qft", "plancherel_scalar_part", ps, c.t("parseval")));
        auto full = error_row("qft", "plancherel_quaternion", pq, c.t("parseval"));
        full.note = "full quaternion inner product of quaternion-valued pairs";
        rows.push_back(full);
        return rows;
    });
    jobs.push_back([](const Context& c) {
        auto f = random_bandlimited(c.ref, 3, 6, 1.0);
        auto F = qft_forward(f);
        double d = 0.0;
        for (int axis : {1, 2}) {
            auto spec = qft_inverse(spectral_derivative(F, axis == 1, axis == 2));
            d = std::max(d, rel_l2(spec.data(), central_difference(f, axis).data()));
        }
        auto lap = spectral_laplacian(F);
        auto a = spectral_derivative(F, 2, 0), b = spectral_derivative(F, 0, 2);
        std::vector<Quaternion> sum(a.data.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.data[i] + b.data[i];
        return std::vector{error_row("qft", "derivative", d, c.t("derivative")),
                           error_row("qft", "laplacian", rel_l2(lap.data, sum), c.t("laplacian"))};
    });
    jobs.push_back([](const Context& c) {
        auto f = anisotropic_gaussian(c.ref, 1.5, 0.9, 0.3, {0.4, -0.2});
        auto r = rotation_identity_residuals(right_mul(f, Quaternion(0.5, 1.0, -0.5, 0.25)), kPi / 5);
        auto row = error_row("qft", "rotation_lemma", r.corrected, c.t("rotation"));
        row.rhs = r.opposite_sign;
        row.note = "rhs column: residual of the opposite-sign form";
        return std::vector{row};
    });
    return jobs;
}

std::vector<Job> wavelet_jobs() {
    std::vector<Job> jobs;
    jobs.push_back([](const Context& c) {
        const auto& rep = *c.logw.admissibility;
        std::vector<CheckRow> rows;
        rows.push_back(equality_row("wavelet", "admissibility_log", *c.logw.c_phi, 1.0 / (4.0 * kPi),
                                    c.t("admissibility")));
        rows.push_back(error_row("wavelet", "probe_spread", rep.spread, c.t("spread")));
        rows.push_back(equality_row("wavelet", "aqw_self", aqw_inner_product(c.logw, c.logw).q0, *c.logw.c_phi,
                                    c.t("admissibility")));
        CheckRow comm = error_row("wavelet", "commutes_with_e2", rep.commute_residual, 1e-8);
        comm.hypotheses_ok = rep.commutes_with_e2;
        rows.push_back(comm);
        return rows;
    });
    jobs.push_back([](const Context&) {
        QWavelet g = make_wavelet(gaussian(Grid2D::symmetric(385, 6.0)), "gaussian");
        CheckRow r = named("wavelet", "gaussian_rejected");
        r.rhs = 1.0;
        try {
            admissibility_constant(g, default_probes(8), default_scale_quadrature());
            r.lhs = 0.0;
            r.note = "gaussian accepted";
        } catch (const Error& e) {
            r.lhs = e.status() == Status::Admissibility ? 1.0 : 0.0;
            r.note = e.what();
        }
        r.margin = r.lhs - 1.0;
        r.passed = r.lhs == 1.0;
        return std::vector{r};
    });
    return jobs;
}

std::vector<Job> cqwt_jobs() {
    std::vector<Job> jobs;
    jobs.push_back([](const Context& c) {
        Grid2D g = Grid2D::square(16, 2.0);
        SimGrid sim = SimGrid::log_uniform(4, 0.25, 1.0, 4, g);
        auto f = gaussian(g, 0.6);
        auto fast = cqwt_fast(f, c.logw, sim), direct = cqwt_direct(f, c.logw, sim);
        auto row = error_row("cqwt", "fast_vs_direct", rel_l2(fast.coeffs, direct.coeffs), c.t("cqwt_fast"));
        row.hypotheses_ok = !fast.fallback;
        return std::vector{row};
    });
    jobs.push_back([](const Context& c) {
        std::vector<CheckRow> rows;
        double C = *c.logw.c_phi;
        for (const char* name : {"mexican_hat", "mexican_hat_shift2", "mexican_hat_e2"}) {
            const auto& S = c.scal.at(name);
            double nf = l2_norm(c.signals.at(name));
            auto r = equality_row("cqwt", std::string("plancherel[") + name + "]", scalogram_norm2(S), C * nf * nf,
                                  c.t("cqwt_parseval"));
            r.note = "predicted " + std::to_string(1.0 - S.energy_deficit);
            rows.push_back(r);
        }
        const auto& f = c.signals.at("mexican_hat");
        const auto& g = c.signals.at("mexican_hat_wide");
        Quaternion lhs = scalogram_inner_product(c.scal.at("mexican_hat"), c.scal.at("mexican_hat_wide"));
        Quaternion rhs = inner_product(f, g) * C;
        CheckRow p = named("cqwt", "parseval[mexican_hat,mexican_hat_wide]");
        p.lhs = lhs.q0;
        p.rhs = rhs.q0;
        p.margin = quat_modulus(lhs - rhs) / quat_modulus(rhs);
        p.tolerance = c.t("cqwt_parseval");
        p.passed = p.margin <= p.tolerance;
        p.note = "margin: |lhs - rhs| / |rhs| over all four components";
        rows.push_back(p);
        auto gs = c.scal.at("gaussian");
        double nf = l2_norm(c.signals.at("gaussian"));
        auto gr = equality_row("cqwt", "plancherel[gaussian]", scalogram_norm2(gs), C * nf * nf, c.t("cqwt_parseval"));
        gr.note = "predicted " + std::to_string(1.0 - gs.energy_deficit) + " for the scale window";
        rows.push_back(gr);
        return rows;
    });
    jobs.push_back([](const Context& c) {
        std::vector<CheckRow> rows;
        for (const char* name : {"gaussian", "mexican_hat"}) {
            auto rec = cqwt_inverse(c.scal.at(name), c.logw);
            rows.push_back(error_row("cqwt", std::string("inversion[") + name + "]",
                                     rel_l2(rec.data(), c.signals.at(name).data()), c.t("inversion")));
        }
        return rows;
    });
    jobs.push_back([](const Context& c) {
        // 8 seeded nodes among those with at least 1% of the peak modulus
        const Scalogram& S = c.scal.at("gaussian");
        double peak = 0.0;
        for (const auto& q : S.coeffs) peak = std::max(peak, quat_modulus(q));
        std::mt19937_64 rng(20);
        std::vector<RkPoint> pts;
        while (pts.size() < 8) {
            RkPoint p{rng() % S.sim.n_scales(), rng() % S.sim.n_angles(), rng() % S.sim.translations.n1,
                      rng() % S.sim.translations.n2};
            if (quat_modulus(S.at(p.j, p.k, p.i1, p.i2)) >= 0.01 * peak) pts.push_back(p);
        }
        auto rk = reproducing_kernel_check(S, c.logw, pts);
        auto row = error_row("cqwt", "reproducing_kernel", rk.max_residual, c.t("kernel"));
        double top = 0.0;
        for (const auto& p : pts) top = std::max(top, S.sim.scales[p.j]);
        row.note = "largest sampled scale " + std::to_string(top);
        return std::vector{row};
    });
    jobs.push_back([](const Context& c) {
        std::vector<CheckRow> rows;
        for (double p : {2.0, 4.0, double(INFINITY)}) {
            auto b = lp_bound_check(c.scal.at("mexican_hat"), c.logw, p);
            CheckRow r = named("cqwt", "lp_bound[p=" + (std::isinf(p) ? std::string("inf") : std::to_string(int(p))) + "]");
            r.lhs = b.lhs;
            r.rhs = b.rhs;
            r.tolerance = c.t("lp");
            r.margin = 1.0 - b.lhs / b.rhs;
            r.passed = b.lhs <= b.rhs * (1.0 + r.tolerance);
            rows.push_back(r);
        }
        return rows;
    });
    jobs.push_back([](const Context& c) {
        // linearity and grid-aligned translation on a small grid; rotation by point evaluation
        Grid2D g = Grid2D::square(32, 4.0);
        SimGrid sim = SimGrid::log_uniform(3, 0.3, 1.0, 2, g);
        QWavelet d = directional_wavelet();
        auto f = gaussian(g, 0.7, {0.1, -0.2});
        auto h = right_mul(anisotropic_gaussian(g, 0.9, 0.5, 0.4), Quaternion(0, 1, 0, 1));
        Quaternion lam(0.5, -1, 2, 0.25);
        auto Tf = cqwt_direct(f, d, sim), Th = cqwt_direct(h, d, sim);
        auto Tm = cqwt_direct(left_mul(lam, f) + h, d, sim);
        double lin = 0.0, peak = 0.0;
        for (std::size_t i = 0; i < Tm.coeffs.size(); ++i) {
            lin = std::max(lin, quat_modulus(Tm.coeffs[i] - lam * Tf.coeffs[i] - Th.coeffs[i]));
            peak = std::max(peak, quat_modulus(Tm.coeffs[i]));
        }
        QSignal2D shifted(g);
        for (std::size_t i1 = 2; i1 < g.n1; ++i1)
            for (std::size_t i2 = 1; i2 < g.n2; ++i2) shifted(i1, i2) = f(i1 - 2, i2 - 1);
        auto Ts = cqwt_direct(shifted, d, sim);
        double tr = 0.0;
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t i1 = 2; i1 < g.n1; ++i1)
                    for (std::size_t i2 = 1; i2 < g.n2; ++i2)
                        tr = std::max(tr, quat_modulus(Ts.at(j, k, i1, i2) - Tf.at(j, k, i1 - 2, i2 - 1)));
        Grid2D fine = Grid2D::square(64, 4.0);
        double om = kPi / 4;
        Vec2 ctr{0.3, 0.1};
        auto a0 = anisotropic_gaussian(fine, 1.2, 0.6, 0.2, ctr);
        auto a1 = anisotropic_gaussian(fine, 1.2, 0.6, 0.2 - om, rotate(ctr, -om));
        double rot = 0.0, rpeak = 0.0;
        for (Vec2 b : {Vec2{0.0, 0.0}, Vec2{0.2, 0.1}, Vec2{-0.4, 0.3}, Vec2{0.6, 0.0}}) {
            Quaternion l = cqwt_coefficient(a1, d, 0.7, kPi / 8, b);
            Quaternion r = cqwt_coefficient(a0, d, 0.7, kPi / 8 + om, rotate(b, om));
            rot = std::max(rot, quat_modulus(l - r));
            rpeak = std::max(rpeak, quat_modulus(r));
        }
        return std::vector{error_row("cqwt", "covariance_linearity", lin / peak, c.t("covariance_exact")),
                           error_row("cqwt", "covariance_translation_grid", tr / peak, c.t("covariance_exact")),
                           error_row("cqwt", "covariance_rotation", rot / rpeak, c.t("covariance"))};
    });
    return jobs;
}

std::vector<Job> up_jobs() {
    std::vector<Job> jobs;
    jobs.push_back([](const Context& c) {
        std::vector<CheckRow> rows;
        for (const char* name : {"gaussian", "mexican_hat"})
            for (int axis : {1, 2, 0}) {
                auto u = heisenberg_lemma_check(c.scal.at(name), c.signals.at(name), c.logw, axis);
                auto r = from_up("up", u, c.t("heisenberg_lemma"), true);
                r.name += std::string("[") + name + "]";
                if (axis == 0 && u.details.at("identity_residual") > 1e-12) {
                    r.passed = false;
                    r.note = "axis sum identity violated";
                }
                rows.push_back(r);
            }
        return rows;
    });
    jobs.push_back([](const Context& c) {
        std::vector<CheckRow> rows;
        auto g = heisenberg_qft_ratio(c.signals.at("gaussian"));
        auto r = equality_row("up", "heisenberg_qft_gaussian_ratio", g.ratio, 4.0, c.t("heisenberg_gauss"));
        rows.push_back(r);
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            auto u = heisenberg_qft_ratio(random_bandlimited(c.ref, seed));
            auto row = from_up("up", u, c.t("heisenberg"), false);
            row.name += "[random_" + std::to_string(seed) + "]";
            rows.push_back(row);
        }
        return rows;
    });
    jobs.push_back([](const Context& c) {
        std::vector<CheckRow> rows;
        for (const auto& [name, S] : c.scal) {
            auto row = from_up("up", heisenberg_cqwt_ratio(S, c.signals.at(name), c.logw), c.t("heisenberg"), false);
            row.name += "[" + name + "]";
            rows.push_back(row);
        }
        return rows;
    });
    jobs.push_back([](const Context& c) {
        std::vector<CheckRow> rows;
        for (const char* name : {"gaussian", "mexican_hat"}) {
            auto row = from_up("up", log_up_check(c.scal.at(name), c.signals.at(name), c.logw), c.t("log_up"), false);
            row.name += std::string("[") + name + "]";
            rows.push_back(row);
        }
        auto q = from_up("up", log_up_qft(c.signals.at("gaussian")), c.t("log_up"), false);
        q.name += "[gaussian]";
        rows.push_back(q);
        return rows;
    });
    jobs.push_back([](const Context& c) {
        const auto& f = c.signals.at("gaussian");
        auto u = hardy_classify(c.scal.at("gaussian"), qft_forward(f), 1.0, 0.0);
        CheckRow r = named("up", "hardy[gaussian]");
        r.lhs = u.lhs;
        r.rhs = u.rhs;
        r.margin = u.margin;
        r.tolerance = c.t("hardy");
        r.hypotheses_ok = u.hypotheses_ok;
        double beta = u.details.count("beta") ? u.details.at("beta") : NAN;
        double r2 = u.details.count("slice_r2") ? u.details.at("slice_r2") : NAN;
        r.passed = std::fabs(beta / kPi - 1.0) <= r.tolerance && r2 >= c.t("hardy_r2") &&
                   hardy_case(u) == HardyCase::Gaussian;
        r.note = u.note + "; beta=" + std::to_string(beta) + " slice_r2=" + std::to_string(r2);
        return std::vector{r};
    });
    return jobs;
}

}  // namespace

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.passed; }));
}

const std::map<std::string, double>& default_tolerances() { return kDefaults; }

VerifyReport run_verify(const VerifyOptions& opts) {
    if (opts.corpus != "default") throw Error(Status::InvalidArgument, "unknown corpus: " + opts.corpus);
    Context ctx;
    ctx.tol = kDefaults;
    for (const auto& [k, v] : opts.tolerances) {
        if (!kDefaults.count(k)) throw Error(Status::InvalidArgument, "unknown tolerance: " + k);
        if (!(v >= 0.0) || !std::isfinite(v)) throw Error(Status::InvalidArgument, "tolerance must be >= 0: " + k);
        ctx.tol[k] = v;
    }
    static const std::vector<std::string> order{"qft", "wavelet", "cqwt", "up"};
    std::set<std::string> want;
    for (const auto& s : opts.suites) {
        if (s == "all") want.insert(order.begin(), order.end());
        else if (std::find(order.begin(), order.end(), s) != order.end()) want.insert(s);
        else throw Error(Status::InvalidArgument, "unknown suite: " + s);
    }
    if (want.empty()) throw Error(Status::InvalidArgument, "no suite selected");

    ctx.prepare(want.count("cqwt") || want.count("up"));
    std::vector<Job> jobs;
    for (const auto& s : order) {
        if (!want.count(s)) continue;
        auto add = s == "qft" ? qft_jobs() : s == "wavelet" ? wavelet_jobs() : s == "cqwt" ? cqwt_jobs() : up_jobs();
        jobs.insert(jobs.end(), add.begin(), add.end());
    }
    std::vector<std::vector<CheckRow>> out(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) { out[i] = jobs[i](ctx); });
    VerifyReport rep;
    for (auto& v : out) rep.rows.insert(rep.rows.end(), v.begin(), v.end());
    return rep;
}

void write_report_csv(const VerifyReport& r, std::ostream& out) {
    auto old = out.precision(12);
    out << "suite,check,lhs,rhs,margin,tolerance,hypotheses_ok,passed,note\n";
    for (const auto& row : r.rows) {
        std::string note = row.note;
        std::replace(note.begin(), note.end(), ',', ';');
        out << row.suite << ',' << row.name << ',' << row.lhs << ',' << row.rhs << ',' << row.margin << ','
            << row.tolerance << ',' << (row.hypotheses_ok ? 1 : 0) << ',' << (row.passed ? 1 : 0) << ',' << note
            << '\n';
    }
    out.precision(old);
}

void write_report_text(const VerifyReport& r, std::ostream& out) {
    auto flags = out.flags();
    auto old = out.precision(6);
    for (const auto& row : r.rows) {
        out << (row.passed ? "PASS " : "FAIL ") << std::left << std::setw(8) << row.suite << std::setw(44) << row.name
            << " lhs=" << row.lhs << " rhs=" << row.rhs << " margin=" << row.margin << " tol=" << row.tolerance;
        if (!row.hypotheses_ok) out << " [hypotheses not met]";
        if (!row.note.empty()) out << "  (" << row.note << ")";
        out << '\n';
    }
    out << r.rows.size() - r.failures() << "/" << r.rows.size() << " checks passed\n";
    out.precision(old);
    out.flags(flags);
}

}  // namespace qcwt
