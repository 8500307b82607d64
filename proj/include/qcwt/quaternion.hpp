// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <cmath>
#include <ostream>

#include "qcwt/error.hpp"

namespace qcwt {

// q0 + q1 e1 + q2 e2 + q3 e3, with e1^2 = e2^2 = e3^2 = e1e2e3 = -1.
struct Quaternion {
    double q0 = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a, double b = 0.0, double c = 0.0, double d = 0.0)
        : q0(a), q1(b), q2(c), q3(d) {}

    static constexpr Quaternion e0() { return {1, 0, 0, 0}; }
    static constexpr Quaternion e1() { return {0, 1, 0, 0}; }
    static constexpr Quaternion e2() { return {0, 0, 1, 0}; }
    static constexpr Quaternion e3() { return {0, 0, 0, 1}; }

    constexpr double operator[](int i) const {
        return i == 0 ? q0 : i == 1 ? q1 : i == 2 ? q2 : q3;
    }
    constexpr double& operator[](int i) {
        return i == 0 ? q0 : i == 1 ? q1 : i == 2 ? q2 : q3;
    }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        q0 += o.q0; q1 += o.q1; q2 += o.q2; q3 += o.q3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        q0 -= o.q0; q1 -= o.q1; q2 -= o.q2; q3 -= o.q3;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        q0 *= s; q1 *= s; q2 *= s; q3 *= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.q0, -a.q1, -a.q2, -a.q3}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Product qq' expanded term by term.
constexpr Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
    return {
        p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
        p.q1 * q.q0 + p.q0 * q.q1 - p.q3 * q.q2 + p.q2 * q.q3,
        p.q2 * q.q0 + p.q3 * q.q1 + p.q0 * q.q2 - p.q1 * q.q3,
        p.q3 * q.q0 - p.q2 * q.q1 + p.q1 * q.q2 + p.q0 * q.q3,
    };
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }

constexpr Quaternion quat_conj(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }

constexpr double quat_norm2(const Quaternion& q) {
    return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
}

inline double quat_modulus(const Quaternion& q) { return std::sqrt(quat_norm2(q)); }

inline Quaternion quat_inverse(const Quaternion& q) {
    double n2 = quat_norm2(q);
    if (n2 == 0.0) throw Error(Status::Domain, "quat_inverse: zero quaternion");
    return quat_conj(q) / n2;
}

// cos(t) + u sin(t) for a unit imaginary u.
inline Quaternion unit_phase(const Quaternion& u, double t) {
    return Quaternion(std::cos(t)) + u * std::sin(t);
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.q0 << ", " << q.q1 << ", " << q.q2 << ", " << q.q3 << ')';
}

}  // namespace qcwt
