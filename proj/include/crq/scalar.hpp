#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>

namespace crq {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Elements a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long a) : a_(a) {}
    QSqrt2(const Rational& a) : a_(a) {}
    QSqrt2(const Rational& a, const Rational& b) : a_(a), b_(b) {}

    static QSqrt2 sqrt2() { return QSqrt2(0, 1); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QSqrt2& operator*=(const QSqrt2& o) {
        Rational a = a_ * o.a_ + 2 * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

    QSqrt2 inverse() const;
    QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }

    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
    friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
    friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
    friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

private:
    Rational a_{0};
    Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const QSqrt2& x);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const QSqrt2& q) { return q.is_zero(); }

/// Complex numbers re + i*im over an exact real field F.
template <class F>
struct Complex {
    F re{0};
    F im{0};

    Complex() = default;
    Complex(const F& r) : re(r) {}
    Complex(const F& r, const F& i) : re(r), im(i) {}
    Complex(long r) : re(r) {}

    static Complex i() { return Complex(F(0), F(1)); }

    bool is_zero() const { return crq::is_zero(re) && crq::is_zero(im); }
    bool is_real() const { return crq::is_zero(im); }

    Complex conj() const { return Complex(re, -im); }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        F r = re * o.re - im * o.im;
        F i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        F n = o.re * o.re + o.im * o.im;
        F r = (re * o.re + im * o.im) / n;
        F i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Complex operator-() const { return Complex(-re, -im); }

    friend Complex operator+(Complex x, const Complex& y) { return x += y; }
    friend Complex operator-(Complex x, const Complex& y) { return x -= y; }
    friend Complex operator*(Complex x, const Complex& y) { return x *= y; }
    friend Complex operator/(Complex x, const Complex& y) { return x /= y; }
    friend bool operator==(const Complex& x, const Complex& y) { return x.re == y.re && x.im == y.im; }
};

/// The exact scalar of the engine: Q(i).
using Scalar = Complex<Rational>;
/// Scalars of Q(sqrt 2, i), needed only by the Cayley transform.
using Scalar2 = Complex<QSqrt2>;

inline Scalar conj(const Scalar& x) { return x.conj(); }
inline Scalar2 conj(const Scalar2& x) { return x.conj(); }
inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const Scalar2& x) { return x.is_zero(); }

/// Converts a Q(i) value into the scalar type S.
template <class S>
S lift(const Scalar& x);

template <>
inline Scalar lift<Scalar>(const Scalar& x) { return x; }

template <>
inline Scalar2 lift<Scalar2>(const Scalar& x) { return Scalar2(QSqrt2(x.re), QSqrt2(x.im)); }

inline Scalar2 operator*(const Scalar2& x, const Scalar& y) { return x * lift<Scalar2>(y); }

std::ostream& operator<<(std::ostream& os, const Scalar& x);
std::ostream& operator<<(std::ostream& os, const Scalar2& x);
std::string to_string(const Scalar& x);

/// Deterministic generator of small random rationals used by sampled audits.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

    /// Rational p/q with |p| <= max_num and 1 <= q <= max_den.
    Rational rational(int max_num = 9, int max_den = 5);
    Rational nonzero_rational(int max_num = 9, int max_den = 5);
    Scalar scalar(int max_num = 9, int max_den = 5);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace crq
