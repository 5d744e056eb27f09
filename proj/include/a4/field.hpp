#pragma once

#include <array>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace a4 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An element of the real field Q(√2,√5), stored on the basis
/// {1, √2, √5, √10}.  Every coordinate in this project (τ, σ, 1/√2,
/// 1/√10, ...) lives here, so arithmetic and comparisons are exact.
class FieldScalar {
public:
    FieldScalar() : c_{} {}
    explicit FieldScalar(Rational c0) : c_{std::move(c0), 0, 0, 0} {}
    FieldScalar(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static FieldScalar integer(long n) { return FieldScalar(Rational(n)); }
    static FieldScalar ratio(long p, long q) { return FieldScalar(Rational(p, q)); }
    static FieldScalar sqrt2() { return {0, 1, 0, 0}; }
    static FieldScalar sqrt5() { return {0, 0, 1, 0}; }
    static FieldScalar sqrt10() { return {0, 0, 0, 1}; }
    /// τ = (1+√5)/2, the golden ratio.
    static FieldScalar tau() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }
    /// σ = (1−√5)/2, its algebraic conjugate; τ+σ = 1, τσ = −1.
    static FieldScalar sigma() { return {Rational(1, 2), 0, Rational(-1, 2), 0}; }

    const Rational& c0() const { return c_[0]; }
    const Rational& c1() const { return c_[1]; }
    const Rational& c2() const { return c_[2]; }
    const Rational& c3() const { return c_[3]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    FieldScalar operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    FieldScalar operator+(const FieldScalar& o) const {
        return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
    }
    FieldScalar operator-(const FieldScalar& o) const { return *this + (-o); }
    FieldScalar operator*(const FieldScalar& o) const;
    /// Throws std::domain_error on division by zero.
    FieldScalar operator/(const FieldScalar& o) const;
    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    bool operator==(const FieldScalar& o) const { return c_ == o.c_; }
    bool operator!=(const FieldScalar& o) const { return c_ != o.c_; }
    /// Canonical total order on the coefficient tuple.  Used for sorted
    /// containers and reproducible output; it is NOT the order of the
    /// reals — use sign() for geometric comparisons.
    bool operator<(const FieldScalar& o) const { return c_ < o.c_; }

    /// Exact sign of the real value: −1, 0 or +1.  Zero is decided from
    /// the canonical components; otherwise rational interval enclosures
    /// of √2, √5, √10 are refined until the enclosure excludes zero.
    int sign() const;

    /// The Galois map √5 → −√5 (τ ↔ σ), fixing √2.
    FieldScalar galois() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }

    FieldScalar inverse() const;

    /// Exact square root if it exists inside the field (used for vector
    /// norms such as |ω₁+ω₄| = √2); nonnegative input assumed.
    std::optional<FieldScalar> sqrt_in_field() const;

    double to_double() const;
    /// Canonical text form "c0 + c1*r2 + c2*r5 + c3*r10" with reduced
    /// fractions; zero terms are dropped, plain "0" for zero.
    std::string str() const;
    /// Decimal rendering with the given number of significant digits.
    std::string decimal(int digits = 12) const;

private:
    std::array<Rational, 4> c_;
};

inline FieldScalar operator*(const Rational& r, const FieldScalar& a) {
    return FieldScalar(r) * a;
}

std::string rational_str(const Rational& r);

}  // namespace a4
