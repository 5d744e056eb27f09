#include "a4/field.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace a4 {

namespace {

using Interval = std::pair<Rational, Rational>;

// Enclosure of √n refined by bisection; width halves each step.
Interval sqrt_enclosure(int n, Rational lo, Rational hi, int steps) {
    for (int i = 0; i < steps; ++i) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid < n)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

Interval scale(const Rational& r, const Interval& iv) {
    if (r >= 0) return {r * iv.first, r * iv.second};
    return {r * iv.second, r * iv.first};
}

}  // namespace

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    // Basis products: √2·√5 = √10, √2·√10 = 2√5, √5·√10 = 5√2.
    const auto& a = c_;
    const auto& b = o.c_;
    return {a[0] * b[0] + 2 * a[1] * b[1] + 5 * a[2] * b[2] + 10 * a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + 5 * (a[2] * b[3] + a[3] * b[2]),
            a[0] * b[2] + a[2] * b[0] + 2 * (a[1] * b[3] + a[3] * b[1]),
            a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]};
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw std::domain_error("FieldScalar: division by zero");
    // Multiply by the conjugates over √2 and then √5; the product of all
    // four Galois conjugates is a nonzero rational.
    FieldScalar conj2{c_[0], -c_[1], c_[2], -c_[3]};
    FieldScalar t = *this * conj2;            // lies in Q(√5)
    FieldScalar conj5 = t.galois();
    FieldScalar n = t * conj5;                // rational norm
    Rational norm = n.c0();
    FieldScalar num = conj2 * conj5;
    return {num.c_[0] / norm, num.c_[1] / norm, num.c_[2] / norm, num.c_[3] / norm};
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
    return *this * o.inverse();
}

int FieldScalar::sign() const {
    if (is_zero()) return 0;
    if (c_[1] == 0 && c_[2] == 0 && c_[3] == 0) return c_[0] > 0 ? 1 : -1;
    for (int steps = 8; steps <= 512; steps *= 2) {
        Interval i2 = sqrt_enclosure(2, 1, 2, steps);
        Interval i5 = sqrt_enclosure(5, 2, 3, steps);
        Interval i10 = sqrt_enclosure(10, 3, 4, steps);
        Interval t1 = scale(c_[1], i2);
        Interval t2 = scale(c_[2], i5);
        Interval t3 = scale(c_[3], i10);
        Rational lo = c_[0] + t1.first + t2.first + t3.first;
        Rational hi = c_[0] + t1.second + t2.second + t3.second;
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    // Unreachable for canonical nonzero elements: {1,√2,√5,√10} is
    // linearly independent over Q.
    throw std::logic_error("FieldScalar::sign: enclosure failed to separate");
}

std::optional<FieldScalar> FieldScalar::sqrt_in_field() const {
    if (!is_rational()) return std::nullopt;
    if (c_[0] == 0) return FieldScalar();
    if (c_[0] < 0) return std::nullopt;
    Integer p = numerator(c_[0]);
    Integer q = denominator(c_[0]);
    Integer n = p * q;  // √(p/q) = √(pq)/q
    const int radicands[4] = {1, 2, 5, 10};
    for (int i = 0; i < 4; ++i) {
        Integer m = radicands[i];
        if (n % m != 0) continue;
        Integer k = n / m;
        Integer s = boost::multiprecision::sqrt(k);
        if (s * s != k) continue;
        FieldScalar out;
        out.c_[i] = Rational(s, q);
        return out;
    }
    return std::nullopt;
}

double FieldScalar::to_double() const {
    static const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0), s10 = std::sqrt(10.0);
    return c_[0].convert_to<double>() + c_[1].convert_to<double>() * s2 +
           c_[2].convert_to<double>() * s5 + c_[3].convert_to<double>() * s10;
}

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string FieldScalar::str() const {
    static const char* radicals[4] = {"", "r2", "r5", "r10"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        Rational v = c_[i];
        if (out.empty()) {
            if (v < 0) { out += "-"; v = -v; }
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        if (i == 0 || v != 1)
            out += rational_str(v) + (i == 0 ? "" : "*");
        out += radicals[i];
    }
    return out.empty() ? "0" : out;
}

std::string FieldScalar::decimal(int digits) const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, to_double());
    return buf;
}

}  // namespace a4
