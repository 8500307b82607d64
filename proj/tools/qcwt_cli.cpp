// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

// Command-line front end. Uses only the C interface.
//
// Exit codes: 0 success, 1 verification or admissibility failure,
// 2 usage, configuration, file or format error, 3 internal error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qcwt/qcwt.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct CliError {
    int code;
    std::string msg;
};

void check(qcwt_status s, const char* what) {
    if (s == QCWT_OK) return;
    int code = kExitUsage;
    if (s == QCWT_E_INTERNAL) code = kExitInternal;
    if (s == QCWT_E_ADMISSIBILITY) code = kExitFailed;
    throw CliError{code, std::string(what) + ": " + qcwt_last_error()};
}

[[noreturn]] void usage(const std::string& msg) { throw CliError{kExitUsage, msg}; }

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Signal = std::unique_ptr<qcwt_signal, Deleter<qcwt_signal, qcwt_signal_free>>;
using Spectrum = std::unique_ptr<qcwt_spectrum, Deleter<qcwt_spectrum, qcwt_spectrum_free>>;
using Wavelet = std::unique_ptr<qcwt_wavelet, Deleter<qcwt_wavelet, qcwt_wavelet_free>>;
using Scalogram = std::unique_ptr<qcwt_scalogram, Deleter<qcwt_scalogram, qcwt_scalogram_free>>;

std::vector<double> parse_list(const std::string& s, std::size_t count, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || !std::isfinite(v))
            usage(std::string("bad ") + what + ": " + s);
        out.push_back(v);
    }
    if (out.size() != count) usage(std::string("bad ") + what + ": " + s);
    return out;
}

// "e0".."e3" with optional sign, or four comma-separated components.
qcwt_quat parse_quat(const std::string& s) {
    std::string t = s;
    double sign = 1.0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        if (t[0] == '-') sign = -1.0;
        t = t.substr(1);
    }
    static const std::map<std::string, int> unit{{"e0", 0}, {"1", 0}, {"e1", 1}, {"e2", 2}, {"e3", 3}};
    auto it = unit.find(t);
    if (it != unit.end()) {
        double q[4] = {0, 0, 0, 0};
        q[it->second] = sign;
        return {q[0], q[1], q[2], q[3]};
    }
    auto v = parse_list(s, 4, "quaternion value");
    return {v[0], v[1], v[2], v[3]};
}

Wavelet load_wavelet(const std::string& spec) {
    qcwt_wavelet* w = nullptr;
    if (spec.rfind("file:", 0) == 0) {
        std::string path = spec.substr(5);
        if (path.empty()) usage("--wavelet file: needs a path");
        qcwt_signal* m = nullptr;
        check(qcwt_signal_read(path.c_str(), &m), "reading mother wavelet");
        Signal mother(m);
        check(qcwt_wavelet_from_signal(mother.get(), "other", &w), "building wavelet");
    } else if (spec == "log" || spec == "dgauss") {
        check(qcwt_wavelet_builtin(spec.c_str(), &w), "building wavelet");
    } else {
        usage("unknown wavelet: " + spec + " (expected log, dgauss or file:<qsf>)");
    }
    return Wavelet(w);
}

struct GenArgs {
    std::string kind;
    uint32_t n = 128;
    double extent = 8.0;
    double width = 1.0;
    double s1 = 1.0, s2 = 0.5, angle = 0.0;
    std::string center = "0,0";
    std::string at = "0,0";
    std::string value = "e0";
    uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    qcwt_grid g{};
    check(qcwt_grid_square(a.n, a.extent, &g), "grid");
    auto c = parse_list(a.center, 2, "--center");
    qcwt_signal* s = nullptr;
    if (a.kind == "gaussian") {
        check(qcwt_gen_gaussian(&g, a.width, c[0], c[1], &s), "gen");
    } else if (a.kind == "mexican-hat") {
        check(qcwt_gen_mexican_hat(&g, a.width, c[0], c[1], &s), "gen");
    } else if (a.kind == "anisotropic-gaussian") {
        check(qcwt_gen_anisotropic_gaussian(&g, a.s1, a.s2, a.angle, c[0], c[1], &s), "gen");
    } else if (a.kind == "random-bandlimited") {
        check(qcwt_gen_random_bandlimited(&g, a.seed, &s), "gen");
    } else {
        auto at = parse_list(a.at, 2, "--at");
        check(qcwt_gen_impulse(&g, at[0], at[1], parse_quat(a.value), &s), "gen");
    }
    Signal sig(s);
    check(qcwt_signal_write(a.out.c_str(), sig.get()), "writing output");
    return kExitOk;
}

int run_qft(const std::string& dir, const std::string& in, const std::string& out) {
    int is_spec = 0;
    check(qcwt_file_is_spectrum(in.c_str(), &is_spec), "reading input");
    if (dir == "fwd") {
        if (is_spec) usage("qft fwd expects a signal file, got a spectrum");
        qcwt_signal* s = nullptr;
        check(qcwt_signal_read(in.c_str(), &s), "reading input");
        Signal f(s);
        qcwt_spectrum* F = nullptr;
        check(qcwt_qft_forward(f.get(), &F), "qft");
        Spectrum spec(F);
        check(qcwt_spectrum_write(out.c_str(), spec.get()), "writing output");
    } else {
        if (!is_spec) usage("qft inv expects a spectrum file, got a signal");
        qcwt_spectrum* F = nullptr;
        check(qcwt_spectrum_read(in.c_str(), &F), "reading input");
        Spectrum spec(F);
        qcwt_signal* s = nullptr;
        check(qcwt_qft_inverse(spec.get(), &s), "inverse qft");
        Signal f(s);
        check(qcwt_signal_write(out.c_str(), f.get()), "writing output");
    }
    return kExitOk;
}

struct AnalyzeArgs {
    std::string in, out, wavelet = "log", method = "fast";
    uint32_t scales = 32, angles = 8, stride = 2;
    double smin = 0.25, smax = 4.0;
};

int run_analyze(const AnalyzeArgs& a) {
    if (!(a.smax > a.smin)) usage("--smax must exceed --smin");
    qcwt_signal* s = nullptr;
    check(qcwt_signal_read(a.in.c_str(), &s), "reading input");
    Signal f(s);
    Wavelet w = load_wavelet(a.wavelet);
    check(qcwt_wavelet_admissibility(w.get(), 8, nullptr, nullptr, nullptr), "admissibility");
    qcwt_method m = a.method == "fast" ? QCWT_METHOD_FAST
                    : a.method == "direct" ? QCWT_METHOD_DIRECT
                                           : QCWT_METHOD_LATTICE;
    qcwt_simgrid_params p{a.scales, a.angles, a.smin, a.smax, a.stride};
    qcwt_scalogram* S = nullptr;
    check(qcwt_analyze(f.get(), w.get(), &p, m, &S), "cqwt");
    Scalogram scal(S);
    qcwt_scalogram_desc d{};
    check(qcwt_scalogram_info(scal.get(), &d), "cqwt");
    if (d.fallback) std::cerr << "note: fast path hypotheses failed, used the direct sum\n";
    check(qcwt_scalogram_write(a.out.c_str(), scal.get()), "writing output");
    return kExitOk;
}

int run_synth(const std::string& in, const std::string& out, const std::string& wavelet) {
    qcwt_scalogram* S = nullptr;
    check(qcwt_scalogram_read(in.c_str(), &S), "reading input");
    Scalogram scal(S);
    std::string spec = wavelet;
    if (spec.empty()) {
        char* name = nullptr;
        check(qcwt_scalogram_wavelet(scal.get(), &name), "reading input");
        spec = name;
        qcwt_string_free(name);
        if (spec == "other") usage("scalogram was made with a custom wavelet; pass --wavelet file:<qsf>");
    }
    Wavelet w = load_wavelet(spec);
    qcwt_signal* r = nullptr;
    check(qcwt_synthesize(scal.get(), w.get(), &r), "synthesis");
    Signal rec(r);
    check(qcwt_signal_write(out.c_str(), rec.get()), "writing output");
    return kExitOk;
}

int run_admissibility(const std::string& wavelet, uint32_t probes, const std::string& report) {
    Wavelet w = load_wavelet(wavelet);
    qcwt_admissibility adm{};
    std::vector<double> vals(probes), xy(2 * probes);
    qcwt_status st = qcwt_wavelet_admissibility(w.get(), probes, &adm, vals.data(), xy.data());
    if (st != QCWT_OK && st != QCWT_E_ADMISSIBILITY) check(st, "admissibility");
    if (report == "csv") std::printf("probe,xi1,xi2,c_phi\n");
    for (uint32_t i = 0; i < probes; ++i) {
        if (report == "csv")
            std::printf("%u,%.17g,%.17g,%.17g\n", i, xy[2 * i], xy[2 * i + 1], vals[i]);
        else
            std::printf("probe %u  xi=(%.4f, %.4f)  C(xi)=%.10g\n", i, xy[2 * i], xy[2 * i + 1], vals[i]);
    }
    if (report == "text")
        std::printf("C_phi=%.10g spread=%.3e tail_ratio=%.3e divergent=%d commutes_with_e2=%d\n", adm.c_phi,
                    adm.spread, adm.tail_ratio, adm.divergent, adm.commutes_with_e2);
    if (st == QCWT_E_ADMISSIBILITY) {
        std::cerr << "not admissible: " << qcwt_last_error() << "\n";
        return kExitFailed;
    }
    return kExitOk;
}

int run_verify(const std::string& suite, const std::string& corpus, const std::vector<std::string>& tol,
               const std::string& report) {
    std::string joined;
    for (const auto& t : tol) joined += (joined.empty() ? "" : ",") + t;
    char* text = nullptr;
    int all = 0;
    check(qcwt_verify(suite.c_str(), corpus.c_str(), joined.empty() ? nullptr : joined.c_str(), report.c_str(),
                      &text, &all),
          "verify");
    std::fputs(text, stdout);
    qcwt_string_free(text);
    return all ? kExitOk : kExitFailed;
}

int run_export(const std::string& in, const std::string& out, int64_t a_index, int64_t theta_index) {
    qcwt_scalogram* S = nullptr;
    check(qcwt_scalogram_read(in.c_str(), &S), "reading input");
    Scalogram scal(S);
    size_t rows = 0;
    check(qcwt_scalogram_export_csv(scal.get(), out.c_str(), a_index, theta_index, &rows), "export");
    if (out != "-") std::cerr << rows << " rows\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quaternion Fourier and continuous quaternion wavelet transforms"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qcwt_version()));

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "write a test signal as QSF");
    g->add_option("kind", gen.kind, "signal kind")
        ->required()
        ->check(CLI::IsMember({"gaussian", "anisotropic-gaussian", "mexican-hat", "random-bandlimited", "impulse"}));
    g->add_option("--n", gen.n, "samples per axis")->check(CLI::Range(2u, 8192u))->capture_default_str();
    g->add_option("--extent", gen.extent, "grid covers [-extent, extent)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    g->add_option("--width", gen.width, "width (gaussian, mexican-hat)")->check(CLI::PositiveNumber);
    g->add_option("--s1", gen.s1, "major width (anisotropic-gaussian)")->check(CLI::PositiveNumber);
    g->add_option("--s2", gen.s2, "minor width (anisotropic-gaussian)")->check(CLI::PositiveNumber);
    g->add_option("--angle", gen.angle, "orientation in radians (anisotropic-gaussian)");
    g->add_option("--center", gen.center, "centre x,y");
    g->add_option("--seed", gen.seed, "seed (random-bandlimited)");
    g->add_option("--at", gen.at, "impulse position x,y");
    g->add_option("--value", gen.value, "impulse value: e0..e3 (optionally signed) or q0,q1,q2,q3");
    g->add_option("--out", gen.out, "output QSF")->required();

    std::string qdir, qin, qout;
    auto* q = app.add_subcommand("qft", "two-sided quaternion Fourier transform");
    q->add_option("direction", qdir)->required()->check(CLI::IsMember({"fwd", "inv"}));
    q->add_option("--in", qin)->required();
    q->add_option("--out", qout)->required();

    auto* c = app.add_subcommand("cqwt", "continuous quaternion wavelet transform");
    c->require_subcommand(1);
    AnalyzeArgs an;
    auto* ca = c->add_subcommand("analyze", "signal QSF -> scalogram QCW");
    ca->add_option("--in", an.in)->required();
    ca->add_option("--out", an.out)->required();
    ca->add_option("--wavelet", an.wavelet, "log, dgauss or file:<qsf>")->capture_default_str();
    ca->add_option("--scales", an.scales)->check(CLI::Range(1u, 4096u))->capture_default_str();
    ca->add_option("--smin", an.smin)->check(CLI::PositiveNumber)->capture_default_str();
    ca->add_option("--smax", an.smax)->check(CLI::PositiveNumber)->capture_default_str();
    ca->add_option("--angles", an.angles)->check(CLI::Range(1u, 4096u))->capture_default_str();
    ca->add_option("--stride", an.stride, "translation stride in samples")
        ->check(CLI::Range(1u, 4096u))
        ->capture_default_str();
    ca->add_option("--method", an.method)
        ->check(CLI::IsMember({"fast", "direct", "lattice"}))
        ->capture_default_str();
    std::string sin, sout, swav;
    auto* cs = c->add_subcommand("synth", "scalogram QCW -> reconstructed signal QSF");
    cs->add_option("--in", sin)->required();
    cs->add_option("--out", sout)->required();
    cs->add_option("--wavelet", swav, "defaults to the wavelet recorded in the scalogram");

    auto* w = app.add_subcommand("wavelet", "wavelet diagnostics");
    w->require_subcommand(1);
    std::string awav = "log", areport = "csv";
    uint32_t aprobes = 8;
    auto* wa = w->add_subcommand("admissibility", "per-probe admissibility values");
    wa->add_option("--wavelet", awav, "log, dgauss or file:<qsf>")->capture_default_str();
    wa->add_option("--probes", aprobes)->check(CLI::Range(1u, 1024u))->capture_default_str();
    wa->add_option("--report", areport)->check(CLI::IsMember({"csv", "text"}))->capture_default_str();

    std::string vsuite = "all", vcorpus = "default", vreport = "text";
    std::vector<std::string> vtol;
    auto* v = app.add_subcommand("verify", "run verification suites");
    v->add_option("--suite", vsuite, "qft, wavelet, cqwt, up or all (comma list)")->capture_default_str();
    v->add_option("--corpus", vcorpus)->capture_default_str();
    v->add_option("--tolerance", vtol, "override, name=value (repeatable)");
    v->add_option("--report", vreport)->check(CLI::IsMember({"csv", "text"}))->capture_default_str();

    std::string ein, eout = "-";
    int64_t ea = -1, et = -1;
    auto* e = app.add_subcommand("export", "scalogram QCW -> CSV");
    e->add_option("--in", ein)->required();
    e->add_option("--out", eout, "CSV path, - for stdout")->capture_default_str();
    e->add_option("--a-index", ea, "scale index (all if omitted)")->check(CLI::NonNegativeNumber);
    e->add_option("--theta-index", et, "angle index (all if omitted)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForAllHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForVersion& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (*g) return run_gen(gen);
        if (*q) return run_qft(qdir, qin, qout);
        if (*ca) return run_analyze(an);
        if (*cs) return run_synth(sin, sout, swav);
        if (*wa) return run_admissibility(awav, aprobes, areport);
        if (*v) return run_verify(vsuite, vcorpus, vtol, vreport);
        if (*e) return run_export(ein, eout, ea, et);
    } catch (const CliError& err) {
        std::cerr << "error: " << err.msg << "\n";
        return err.code;
    }
    return kExitUsage;
}
