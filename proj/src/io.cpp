// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include "qcwt/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

namespace qcwt {

namespace {

template <typename T>
T swap_if_big(T v) {
    if constexpr (std::endian::native == std::endian::big) {
        unsigned char b[sizeof(T)];
        std::memcpy(b, &v, sizeof(T));
        for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
        std::memcpy(&v, b, sizeof(T));
    }
    return v;
}

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_) throw Error(Status::Io, "cannot open " + path + " for writing");
    }
    void magic(const char* m) { out_.write(m, 4); }
    void u32(std::uint32_t v) { put(swap_if_big(v)); }
    void f64(double v) { put(swap_if_big(v)); }
    void finish(const std::string& path) {
        out_.flush();
        if (!out_) throw Error(Status::Io, "write to " + path + " failed");
    }

private:
    template <typename T>
    void put(T v) {
        out_.write(reinterpret_cast<const char*>(&v), sizeof(T));
    }
    std::ofstream out_;
};

class Reader {
public:
    explicit Reader(const std::string& path) : path_(path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(Status::Io, "cannot open " + path);
        buf_.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    void magic(const char* m) {
        need(4);
        if (std::memcmp(buf_.data(), m, 4) != 0) fail(std::string("bad magic, expected ") + m);
        pos_ = 4;
    }
    std::uint32_t u32() { return swap_if_big(get<std::uint32_t>()); }
    double f64() { return swap_if_big(get<double>()); }
    std::size_t remaining() const { return buf_.size() - pos_; }
    [[noreturn]] void fail(const std::string& what) const { throw Error(Status::Format, path_ + ": " + what); }

private:
    void need(std::size_t n) const {
        if (buf_.size() - pos_ < n) fail("truncated file");
    }
    template <typename T>
    T get() {
        need(sizeof(T));
        T v;
        std::memcpy(&v, buf_.data() + pos_, sizeof(T));
        pos_ += sizeof(T);
        return v;
    }
    std::string path_;
    std::vector<char> buf_;
    std::size_t pos_ = 0;
};

struct QsfHeader {
    std::uint32_t n1, n2;
    double x0, y0, dx, dy;
};

QsfHeader read_header(Reader& r) {
    r.magic("QSF1");
    QsfHeader h{};
    h.n1 = r.u32();
    h.n2 = r.u32();
    h.x0 = r.f64();
    h.y0 = r.f64();
    h.dx = r.f64();
    h.dy = r.f64();
    if (h.n1 == 0 || h.n2 == 0) r.fail("empty grid");
    if (!std::isfinite(h.x0) || !std::isfinite(h.y0) || !std::isfinite(h.dx) || !std::isfinite(h.dy) ||
        h.dx == 0.0 || h.dy == 0.0)
        r.fail("invalid grid header");
    if ((h.dx < 0.0) != (h.dy < 0.0)) r.fail("mixed spacing signs");
    std::uint64_t n = std::uint64_t(h.n1) * h.n2;
    if (r.remaining() != n * 4 * sizeof(double)) r.fail("payload length does not match n1*n2");
    return h;
}

std::vector<Quaternion> read_planes(Reader& r, std::size_t n) {
    std::vector<Quaternion> d(n);
    for (int c = 0; c < 4; ++c)
        for (std::size_t i = 0; i < n; ++i) {
            double v = r.f64();
            if (!std::isfinite(v)) r.fail("non-finite sample");
            d[i][c] = v;
        }
    return d;
}

void write_planes(Writer& w, const std::vector<Quaternion>& d) {
    for (int c = 0; c < 4; ++c)
        for (const auto& q : d) w.f64(q[c]);
}

void require_finite(const std::vector<Quaternion>& d) {
    for (const auto& q : d)
        for (int c = 0; c < 4; ++c)
            if (!std::isfinite(q[c])) throw Error(Status::Format, "refusing to write non-finite samples");
}

std::uint32_t narrow(std::size_t v) {
    if (v > 0xffffffffu) throw Error(Status::InvalidArgument, "dimension exceeds u32");
    return static_cast<std::uint32_t>(v);
}

std::uint32_t wavelet_kind(const std::string& name) {
    if (name == "log") return 0;
    if (name == "dgauss") return 1;
    return 255;
}

std::string wavelet_name(std::uint32_t kind, Reader& r) {
    switch (kind) {
        case 0: return "log";
        case 1: return "dgauss";
        case 255: return "other";
        default: r.fail("unknown wavelet kind");
    }
}

}  // namespace

void write_qsf(const std::string& path, const QSignal2D& f) {
    const Grid2D& g = f.grid();
    g.validate();
    require_finite(f.data());
    Writer w(path);
    w.magic("QSF1");
    w.u32(narrow(g.n1));
    w.u32(narrow(g.n2));
    w.f64(g.x0);
    w.f64(g.y0);
    w.f64(g.dx);
    w.f64(g.dy);
    write_planes(w, f.data());
    w.finish(path);
}

void write_qsf(const std::string& path, const QSpectrum2D& F) {
    F.grid.validate();
    require_finite(F.data);
    Writer w(path);
    w.magic("QSF1");
    w.u32(narrow(F.grid.n1));
    w.u32(narrow(F.grid.n2));
    w.f64(F.x0);
    w.f64(F.y0);
    w.f64(-F.grid.dx);
    w.f64(-F.grid.dy);
    write_planes(w, F.data);
    w.finish(path);
}

QSignal2D read_qsf(const std::string& path) {
    Reader r(path);
    QsfHeader h = read_header(r);
    if (h.dx < 0.0) r.fail("file holds a spectrum, not a signal");
    Grid2D g{h.n1, h.n2, h.x0, h.y0, h.dx, h.dy};
    return QSignal2D(g, read_planes(r, g.size()));
}

QSpectrum2D read_qsf_spectrum(const std::string& path) {
    Reader r(path);
    QsfHeader h = read_header(r);
    if (h.dx > 0.0) r.fail("file holds a signal, not a spectrum");
    QSpectrum2D F;
    double du1 = -h.dx, du2 = -h.dy;
    F.grid = {h.n1, h.n2, -static_cast<double>(h.n1 / 2) * du1, -static_cast<double>(h.n2 / 2) * du2, du1, du2};
    F.x0 = h.x0;
    F.y0 = h.y0;
    F.data = read_planes(r, F.grid.size());
    return F;
}

bool qsf_is_spectrum(const std::string& path) {
    Reader r(path);
    return read_header(r).dx < 0.0;
}

void write_qcw(const std::string& path, const Scalogram& S) {
    const SimGrid& s = S.sim;
    if (S.coeffs.size() != s.n_coeffs()) throw Error(Status::InvalidArgument, "scalogram size mismatch");
    require_finite(S.coeffs);
    Writer w(path);
    w.magic("QCW1");
    w.u32(narrow(s.n_scales()));
    w.u32(narrow(s.n_angles()));
    w.u32(narrow(s.translations.n1));
    w.u32(narrow(s.translations.n2));
    w.f64(s.smin);
    w.f64(s.smax);
    w.f64(s.translations.x0);
    w.f64(s.translations.y0);
    w.f64(s.translations.dx);
    w.f64(s.translations.dy);
    const Grid2D& g = S.signal_grid;
    w.u32(narrow(g.n1));
    w.u32(narrow(g.n2));
    w.f64(g.x0);
    w.f64(g.y0);
    w.f64(g.dx);
    w.f64(g.dy);
    w.u32(wavelet_kind(S.wavelet_name));
    std::uint32_t method = S.method == "fast" ? 1u : S.method == "lattice" ? 2u : 0u;
    w.u32((S.fallback ? 1u : 0u) | (S.c_phi ? 2u : 0u) | (method << 2));
    w.f64(S.c_phi.value_or(0.0));
    w.f64(S.source_norm);
    w.f64(S.energy_deficit);
    for (const auto& q : S.coeffs)
        for (int c = 0; c < 4; ++c) w.f64(q[c]);
    w.finish(path);
}

Scalogram read_qcw(const std::string& path) {
    Reader r(path);
    r.magic("QCW1");
    std::uint32_t ns = r.u32(), na = r.u32(), nb1 = r.u32(), nb2 = r.u32();
    double smin = r.f64(), smax = r.f64();
    Grid2D t{nb1, nb2, 0, 0, 0, 0};
    t.x0 = r.f64();
    t.y0 = r.f64();
    t.dx = r.f64();
    t.dy = r.f64();
    Grid2D g{0, 0, 0, 0, 0, 0};
    g.n1 = r.u32();
    g.n2 = r.u32();
    g.x0 = r.f64();
    g.y0 = r.f64();
    g.dx = r.f64();
    g.dy = r.f64();
    std::uint32_t kind = r.u32(), flags = r.u32();
    double c_phi = r.f64(), source_norm = r.f64(), deficit = r.f64();
    if (ns == 0 || na == 0) r.fail("empty SimGrid");
    std::uint64_t n = std::uint64_t(ns) * na * nb1 * nb2;
    if (r.remaining() != n * 4 * sizeof(double)) r.fail("payload length does not match the SimGrid header");
    Scalogram S;
    try {
        S.sim = SimGrid::log_uniform(ns, smin, smax, na, t);
        g.validate();
    } catch (const Error& e) {
        r.fail(std::string("invalid header: ") + e.what());
    }
    S.signal_grid = g;
    S.wavelet_name = wavelet_name(kind, r);
    S.fallback = flags & 1u;
    if (flags & 2u) S.c_phi = c_phi;
    std::uint32_t method = (flags >> 2) & 3u;
    S.method = method == 1 ? "fast" : method == 2 ? "lattice" : "direct";
    S.source_norm = source_norm;
    S.energy_deficit = deficit;
    S.coeffs.resize(n);
    for (auto& q : S.coeffs)
        for (int c = 0; c < 4; ++c) {
            q[c] = r.f64();
            if (!std::isfinite(q[c])) r.fail("non-finite coefficient");
        }
    return S;
}

std::size_t export_csv(const Scalogram& S, std::ostream& out, std::optional<std::size_t> a_index,
                       std::optional<std::size_t> theta_index) {
    const SimGrid& s = S.sim;
    if (a_index && *a_index >= s.n_scales()) throw Error(Status::InvalidArgument, "scale index out of range");
    if (theta_index && *theta_index >= s.n_angles())
        throw Error(Status::InvalidArgument, "angle index out of range");
    const Grid2D& t = s.translations;
    auto old = out.precision(17);
    out << "a,theta,b1,b2,q0,q1,q2,q3,modulus\n";
    std::size_t rows = 0;
    for (std::size_t j = 0; j < s.n_scales(); ++j) {
        if (a_index && j != *a_index) continue;
        for (std::size_t k = 0; k < s.n_angles(); ++k) {
            if (theta_index && k != *theta_index) continue;
            for (std::size_t i1 = 0; i1 < t.n1; ++i1)
                for (std::size_t i2 = 0; i2 < t.n2; ++i2) {
                    const Quaternion& q = S.at(j, k, i1, i2);
                    out << s.scales[j] << ',' << s.angles[k] << ',' << t.x(i1) << ',' << t.y(i2) << ',' << q.q0
                        << ',' << q.q1 << ',' << q.q2 << ',' << q.q3 << ',' << quat_modulus(q) << '\n';
                    ++rows;
                }
        }
    }
    out.precision(old);
    if (!out) throw Error(Status::Io, "CSV write failed");
    return rows;
}

}  // namespace qcwt
