// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include "qcwt/qcwt.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

#include "qcwt/corpus.hpp"
#include "qcwt/io.hpp"
#include "qcwt/verify.hpp"

struct qcwt_signal {
    qcwt::QSignal2D v;
};
struct qcwt_spectrum {
    qcwt::QSpectrum2D v;
};
struct qcwt_wavelet {
    qcwt::QWavelet v;
};
struct qcwt_scalogram {
    qcwt::Scalogram v;
};

namespace {

thread_local std::string t_error;

using qcwt::Error;
using qcwt::Status;

template <typename F>
qcwt_status guarded(F&& body) {
    try {
        body();
        t_error.clear();
        return QCWT_OK;
    } catch (const Error& e) {
        t_error = e.what();
        return static_cast<qcwt_status>(e.status());
    } catch (const std::bad_alloc&) {
        t_error = "out of memory";
        return QCWT_E_INTERNAL;
    } catch (const std::exception& e) {
        t_error = e.what();
        return QCWT_E_INTERNAL;
    } catch (...) {
        t_error = "unknown error";
        return QCWT_E_INTERNAL;
    }
}

template <typename T>
const T& need(const T* p, const char* what) {
    if (!p) throw Error(Status::InvalidArgument, std::string(what) + " is NULL");
    return *p;
}

template <typename T>
void need_out(T** p) {
    if (!p) throw Error(Status::InvalidArgument, "output pointer is NULL");
    *p = nullptr;
}

qcwt::Grid2D to_grid(const qcwt_grid* g) {
    const auto& r = need(g, "grid");
    qcwt::Grid2D out{r.n1, r.n2, r.x0, r.y0, r.dx, r.dy};
    out.validate();
    return out;
}

qcwt_grid from_grid(const qcwt::Grid2D& g) {
    return {static_cast<uint32_t>(g.n1), static_cast<uint32_t>(g.n2), g.x0, g.y0, g.dx, g.dy};
}

void copy_quats(const std::vector<qcwt::Quaternion>& d, double* out, size_t len) {
    if (!out) throw Error(Status::InvalidArgument, "output buffer is NULL");
    if (len < d.size() * 4) throw Error(Status::InvalidArgument, "output buffer too small");
    for (size_t i = 0; i < d.size(); ++i)
        for (int c = 0; c < 4; ++c) out[4 * i + c] = d[i][c];
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

qcwt_signal* wrap(qcwt::QSignal2D s) { return new qcwt_signal{std::move(s)}; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

extern "C" {

const char* qcwt_version(void) { return "1.0.0"; }

const char* qcwt_last_error(void) { return t_error.c_str(); }

const char* qcwt_status_name(qcwt_status s) {
    switch (s) {
        case QCWT_OK: return "ok";
        case QCWT_E_INVALID_ARGUMENT: return "invalid argument";
        case QCWT_E_DOMAIN: return "domain error";
        case QCWT_E_GRID_MISMATCH: return "grid mismatch";
        case QCWT_E_FORMAT: return "format error";
        case QCWT_E_IO: return "i/o error";
        case QCWT_E_GUARD_EXCEEDED: return "guard exceeded";
        case QCWT_E_ADMISSIBILITY: return "admissibility failure";
        case QCWT_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void qcwt_string_free(char* s) { std::free(s); }

qcwt_status qcwt_grid_square(uint32_t n, double half, qcwt_grid* out) {
    return guarded([&] {
        if (!out) throw Error(Status::InvalidArgument, "output pointer is NULL");
        if (!(half > 0.0) || !std::isfinite(half)) throw Error(Status::InvalidArgument, "extent must be positive");
        auto g = qcwt::Grid2D::square(n, half);
        g.validate();
        *out = from_grid(g);
    });
}

qcwt_status qcwt_signal_create(const qcwt_grid* g, const double* q, qcwt_signal** out) {
    return guarded([&] {
        need_out(out);
        qcwt::QSignal2D s(to_grid(g));
        if (q)
            for (size_t i = 0; i < s.data().size(); ++i)
                s.data()[i] = qcwt::Quaternion(q[4 * i], q[4 * i + 1], q[4 * i + 2], q[4 * i + 3]);
        if (!s.all_finite()) throw Error(Status::InvalidArgument, "non-finite samples");
        *out = wrap(std::move(s));
    });
}

void qcwt_signal_free(qcwt_signal* s) { delete s; }

qcwt_status qcwt_signal_grid(const qcwt_signal* s, qcwt_grid* out) {
    return guarded([&] {
        const auto& v = need(s, "signal");
        if (!out) throw Error(Status::InvalidArgument, "output pointer is NULL");
        *out = from_grid(v.v.grid());
    });
}

qcwt_status qcwt_signal_data(const qcwt_signal* s, double* out, size_t len) {
    return guarded([&] { copy_quats(need(s, "signal").v.data(), out, len); });
}

qcwt_status qcwt_signal_norm(const qcwt_signal* s, double* out) {
    return guarded([&] {
        const auto& v = need(s, "signal");
        if (!out) throw Error(Status::InvalidArgument, "output pointer is NULL");
        *out = qcwt::l2_norm(v.v);
    });
}

qcwt_status qcwt_signal_read(const char* path, qcwt_signal** out) {
    return guarded([&] {
        need_out(out);
        *out = wrap((need(path, "path"), qcwt::read_qsf(path)));
    });
}

qcwt_status qcwt_signal_write(const char* path, const qcwt_signal* s) {
    return guarded([&] {
        need(path, "path");
        qcwt::write_qsf(path, need(s, "signal").v);
    });
}

qcwt_status qcwt_gen_gaussian(const qcwt_grid* g, double width, double cx, double cy, qcwt_signal** out) {
    return guarded([&] {
        need_out(out);
        if (!(width > 0.0)) throw Error(Status::InvalidArgument, "width must be positive");
        *out = wrap(qcwt::gaussian(to_grid(g), width, {cx, cy}));
    });
}

qcwt_status qcwt_gen_anisotropic_gaussian(const qcwt_grid* g, double s1, double s2, double angle, double cx,
                                          double cy, qcwt_signal** out) {
    return guarded([&] {
        need_out(out);
        *out = wrap(qcwt::anisotropic_gaussian(to_grid(g), s1, s2, angle, {cx, cy}));
    });
}

qcwt_status qcwt_gen_mexican_hat(const qcwt_grid* g, double width, double cx, double cy, qcwt_signal** out) {
    return guarded([&] {
        need_out(out);
        *out = wrap(qcwt::mexican_hat(to_grid(g), width, {cx, cy}));
    });
}

qcwt_status qcwt_gen_random_bandlimited(const qcwt_grid* g, uint64_t seed, qcwt_signal** out) {
    return guarded([&] {
        need_out(out);
        *out = wrap(qcwt::random_bandlimited(to_grid(g), seed));
    });
}

qcwt_status qcwt_gen_impulse(const qcwt_grid* g, double ax, double ay, qcwt_quat value, qcwt_signal** out) {
    return guarded([&] {
        need_out(out);
        *out = wrap(qcwt::impulse(to_grid(g), {ax, ay}, {value.q0, value.q1, value.q2, value.q3}));
    });
}

qcwt_status qcwt_qft_forward(const qcwt_signal* f, qcwt_spectrum** out) {
    return guarded([&] {
        need_out(out);
        *out = new qcwt_spectrum{qcwt::qft_forward(need(f, "signal").v)};
    });
}

qcwt_status qcwt_qft_inverse(const qcwt_spectrum* F, qcwt_signal** out) {
    return guarded([&] {
        need_out(out);
        *out = wrap(qcwt::qft_inverse(need(F, "spectrum").v));
    });
}

void qcwt_spectrum_free(qcwt_spectrum* F) { delete F; }

qcwt_status qcwt_spectrum_grid(const qcwt_spectrum* F, qcwt_grid* out) {
    return guarded([&] {
        const auto& v = need(F, "spectrum");
        if (!out) throw Error(Status::InvalidArgument, "output pointer is NULL");
        *out = from_grid(v.v.grid);
    });
}

qcwt_status qcwt_spectrum_data(const qcwt_spectrum* F, double* out, size_t len) {
    return guarded([&] { copy_quats(need(F, "spectrum").v.data, out, len); });
}

qcwt_status qcwt_spectrum_read(const char* path, qcwt_spectrum** out) {
    return guarded([&] {
        need_out(out);
        need(path, "path");
        *out = new qcwt_spectrum{qcwt::read_qsf_spectrum(path)};
    });
}

qcwt_status qcwt_spectrum_write(const char* path, const qcwt_spectrum* F) {
    return guarded([&] {
        need(path, "path");
        qcwt::write_qsf(path, need(F, "spectrum").v);
    });
}

qcwt_status qcwt_file_is_spectrum(const char* path, int* out) {
    return guarded([&] {
        need(path, "path");
        if (!out) throw Error(Status::InvalidArgument, "output pointer is NULL");
        *out = qcwt::qsf_is_spectrum(path) ? 1 : 0;
    });
}

qcwt_status qcwt_wavelet_builtin(const char* name, qcwt_wavelet** out) {
    return guarded([&] {
        need_out(out);
        need(name, "name");
        std::string n = name;
        if (n == "log") *out = new qcwt_wavelet{qcwt::log_gaussian_wavelet()};
        else if (n == "dgauss") *out = new qcwt_wavelet{qcwt::directional_wavelet()};
        else throw Error(Status::InvalidArgument, "unknown wavelet: " + n);
    });
}

qcwt_status qcwt_wavelet_from_signal(const qcwt_signal* mother, const char* name, qcwt_wavelet** out) {
    return guarded([&] {
        need_out(out);
        *out = new qcwt_wavelet{qcwt::make_wavelet(need(mother, "mother").v, name ? name : "other")};
    });
}

void qcwt_wavelet_free(qcwt_wavelet* w) { delete w; }

qcwt_status qcwt_wavelet_admissibility(qcwt_wavelet* w, uint32_t n_probes, qcwt_admissibility* out,
                                       double* probe_values, double* probe_xy) {
    return guarded([&] {
        if (!w) throw Error(Status::InvalidArgument, "wavelet is NULL");
        if (n_probes == 0) throw Error(Status::InvalidArgument, "need at least one probe");
        auto probes = qcwt::default_probes(n_probes);
        auto rep = qcwt::admissibility_report(w->v, probes, qcwt::default_scale_quadrature());
        // outputs are filled even when the wavelet turns out not to be admissible
        if (out) *out = {rep.mean, rep.spread, rep.tail_ratio, rep.divergent ? 1 : 0, rep.commutes_with_e2 ? 1 : 0};
        for (uint32_t i = 0; i < n_probes; ++i) {
            if (probe_values) probe_values[i] = rep.values[i];
            if (probe_xy) {
                probe_xy[2 * i] = rep.probes[i].x;
                probe_xy[2 * i + 1] = rep.probes[i].y;
            }
        }
        if (rep.divergent)
            throw Error(Status::Admissibility, "scale integral does not converge (edge/peak ratio " +
                                                   std::to_string(rep.tail_ratio) + ")");
        if (rep.spread > 0.02)
            throw Error(Status::Admissibility, "C(xi) depends on xi (spread " + std::to_string(rep.spread) + ")");
        w->v.c_phi = rep.mean;
        w->v.commutes_with_e2 = rep.commutes_with_e2;
        w->v.admissibility = std::move(rep);
    });
}

qcwt_status qcwt_wavelet_c_phi(const qcwt_wavelet* w, double* out) {
    return guarded([&] {
        const auto& v = need(w, "wavelet");
        if (!out) throw Error(Status::InvalidArgument, "output pointer is NULL");
        if (!v.v.c_phi) throw Error(Status::Admissibility, "admissibility constant not computed");
        *out = *v.v.c_phi;
    });
}

qcwt_status qcwt_analyze(const qcwt_signal* f, const qcwt_wavelet* w, const qcwt_simgrid_params* p,
                         qcwt_method method, qcwt_scalogram** out) {
    return guarded([&] {
        need_out(out);
        const auto& sig = need(f, "signal").v;
        const auto& wav = need(w, "wavelet").v;
        const auto& par = need(p, "SimGrid parameters");
        if (par.stride == 0) throw Error(Status::InvalidArgument, "stride must be positive");
        qcwt::SimGrid sim = qcwt::SimGrid::log_uniform(par.n_scales, par.smin, par.smax, par.n_angles,
                                                       qcwt::strided(sig.grid(), par.stride));
        qcwt::Scalogram S;
        switch (method) {
            case QCWT_METHOD_FAST: S = qcwt::cqwt_fast(sig, wav, sim); break;
            case QCWT_METHOD_DIRECT: S = qcwt::cqwt_direct(sig, wav, sim); break;
            case QCWT_METHOD_LATTICE: S = qcwt::cqwt_lattice(sig, wav, sim); break;
            default: throw Error(Status::InvalidArgument, "unknown method");
        }
        *out = new qcwt_scalogram{std::move(S)};
    });
}

qcwt_status qcwt_synthesize(const qcwt_scalogram* S, const qcwt_wavelet* w, qcwt_signal** out) {
    return guarded([&] {
        need_out(out);
        const auto& sc = need(S, "scalogram").v;
        const auto& wav = need(w, "wavelet").v;
        if (wav.c_phi || !sc.c_phi) {
            *out = wrap(qcwt::cqwt_inverse(sc, wav));
        } else {
            qcwt::QWavelet copy = wav;
            copy.c_phi = sc.c_phi;
            *out = wrap(qcwt::cqwt_inverse(sc, copy));
        }
    });
}

qcwt_status qcwt_coefficient(const qcwt_signal* f, const qcwt_wavelet* w, double a, double theta, double b1,
                             double b2, qcwt_quat* out) {
    return guarded([&] {
        if (!out) throw Error(Status::InvalidArgument, "output pointer is NULL");
        auto q = qcwt::cqwt_coefficient(need(f, "signal").v, need(w, "wavelet").v, a, theta, {b1, b2});
        *out = {q.q0, q.q1, q.q2, q.q3};
    });
}

void qcwt_scalogram_free(qcwt_scalogram* S) { delete S; }

qcwt_status qcwt_scalogram_info(const qcwt_scalogram* S, qcwt_scalogram_desc* out) {
    return guarded([&] {
        const auto& s = need(S, "scalogram").v;
        if (!out) throw Error(Status::InvalidArgument, "output pointer is NULL");
        qcwt_scalogram_desc i{};
        i.n_scales = static_cast<uint32_t>(s.sim.n_scales());
        i.n_angles = static_cast<uint32_t>(s.sim.n_angles());
        i.nb1 = static_cast<uint32_t>(s.sim.translations.n1);
        i.nb2 = static_cast<uint32_t>(s.sim.translations.n2);
        i.smin = s.sim.smin;
        i.smax = s.sim.smax;
        i.translations = from_grid(s.sim.translations);
        i.signal = from_grid(s.signal_grid);
        i.has_c_phi = s.c_phi ? 1 : 0;
        i.c_phi = s.c_phi.value_or(0.0);
        i.source_norm = s.source_norm;
        i.energy_deficit = s.energy_deficit;
        i.fallback = s.fallback ? 1 : 0;
        i.method = s.method == "fast" ? QCWT_METHOD_FAST : s.method == "lattice" ? QCWT_METHOD_LATTICE
                                                                                  : QCWT_METHOD_DIRECT;
        *out = i;
    });
}

qcwt_status qcwt_scalogram_wavelet(const qcwt_scalogram* S, char** out) {
    return guarded([&] {
        need_out(out);
        const std::string& n = need(S, "scalogram").v.wavelet_name;
        *out = dup(n == "log" || n == "dgauss" ? n : "other");
    });
}

qcwt_status qcwt_scalogram_data(const qcwt_scalogram* S, double* out, size_t len) {
    return guarded([&] { copy_quats(need(S, "scalogram").v.coeffs, out, len); });
}

qcwt_status qcwt_scalogram_read(const char* path, qcwt_scalogram** out) {
    return guarded([&] {
        need_out(out);
        need(path, "path");
        *out = new qcwt_scalogram{qcwt::read_qcw(path)};
    });
}

qcwt_status qcwt_scalogram_write(const char* path, const qcwt_scalogram* S) {
    return guarded([&] {
        need(path, "path");
        qcwt::write_qcw(path, need(S, "scalogram").v);
    });
}

qcwt_status qcwt_scalogram_export_csv(const qcwt_scalogram* S, const char* path, int64_t a_index,
                                      int64_t theta_index, size_t* rows) {
    return guarded([&] {
        const auto& s = need(S, "scalogram").v;
        need(path, "path");
        std::optional<std::size_t> ai, ti;
        if (a_index >= 0) ai = static_cast<std::size_t>(a_index);
        if (theta_index >= 0) ti = static_cast<std::size_t>(theta_index);
        // validate selectors before touching the output file
        if (ai && *ai >= s.sim.n_scales()) throw Error(Status::InvalidArgument, "scale index out of range");
        if (ti && *ti >= s.sim.n_angles()) throw Error(Status::InvalidArgument, "angle index out of range");
        std::ofstream f;
        std::ostream* os = &std::cout;
        if (std::string(path) != "-") {
            f.open(path, std::ios::trunc);
            if (!f) throw Error(Status::Io, std::string("cannot open ") + path);
            os = &f;
        }
        std::size_t n = qcwt::export_csv(s, *os, ai, ti);
        if (rows) *rows = n;
    });
}

qcwt_status qcwt_verify(const char* suites, const char* corpus, const char* tolerances, const char* format,
                        char** report, int* all_passed) {
    return guarded([&] {
        need_out(report);
        qcwt::VerifyOptions o;
        if (suites) o.suites = split(suites, ',');
        if (corpus) o.corpus = corpus;
        if (tolerances)
            for (const auto& kv : split(tolerances, ',')) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw Error(Status::InvalidArgument, "tolerance needs name=value: " + kv);
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                std::size_t used = 0;
                double v = 0.0;
                try {
                    v = std::stod(val, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != val.size()) throw Error(Status::InvalidArgument, "bad tolerance value: " + kv);
                o.tolerances[key] = v;
            }
        std::string fmt = format ? format : "text";
        if (fmt != "csv" && fmt != "text") throw Error(Status::InvalidArgument, "unknown report format: " + fmt);
        auto r = qcwt::run_verify(o);
        std::ostringstream os;
        if (fmt == "csv") qcwt::write_report_csv(r, os);
        else qcwt::write_report_text(r, os);
        *report = dup(os.str());
        if (all_passed) *all_passed = r.all_passed() ? 1 : 0;
    });
}

}  // extern "C"
