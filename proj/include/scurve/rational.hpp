#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scurve {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binary floats with 128/256-bit significands for the tracking precision ladder.
using F128 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
using F256 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

template <class F>
F rational_to(const Rational& q) {
    return F(numerator(q).template convert_to<F>() / denominator(q).template convert_to<F>());
}

/// Complex number over an exact rational field. Arithmetic never rounds.
struct QC {
    Rational re, im;

    QC() : re(0), im(0) {}
    QC(Rational r) : re(std::move(r)), im(0) {}
    QC(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    QC(long r) : re(r), im(0) {}
    QC(int r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    QC conj() const { return QC(re, -im); }
    Rational norm2() const { return re * re + im * im; }

    QC operator-() const { return QC(-re, -im); }
    QC& operator+=(const QC& o) { re += o.re; im += o.im; return *this; }
    QC& operator-=(const QC& o) { re -= o.re; im -= o.im; return *this; }
    QC& operator*=(const QC& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    QC& operator/=(const QC& o) {
        Rational n = o.norm2();
        if (n == 0) throw std::domain_error("division by zero");
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend QC operator+(QC a, const QC& b) { return a += b; }
    friend QC operator-(QC a, const QC& b) { return a -= b; }
    friend QC operator*(QC a, const QC& b) { return a *= b; }
    friend QC operator/(QC a, const QC& b) { return a /= b; }
    friend bool operator==(const QC& a, const QC& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const QC& a, const QC& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

/// Minimal complex type usable with double as well as the wide float types.
template <class T>
struct Cx {
    T re{}, im{};

    Cx() = default;
    Cx(T r) : re(std::move(r)), im(T(0)) {}
    Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    Cx operator-() const { return {-re, -im}; }
    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
    Cx& operator*=(const Cx& o) {
        T r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Cx& operator/=(const Cx& o) {
        T n = o.re * o.re + o.im * o.im;
        T r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }
    friend Cx operator+(Cx a, const Cx& b) { return a += b; }
    friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
    friend Cx operator*(Cx a, const Cx& b) { return a *= b; }
    friend Cx operator/(Cx a, const Cx& b) { return a /= b; }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }

    T norm2() const { return re * re + im * im; }
};

template <class T>
T cx_abs(const Cx<T>& z) {
    using std::sqrt;
    using boost::multiprecision::sqrt;
    return sqrt(z.re * z.re + z.im * z.im);
}

using CD = Cx<double>;

inline CD to_cd(const std::complex<double>& z) { return {z.real(), z.imag()}; }
inline std::complex<double> to_std(const CD& z) { return {z.re, z.im}; }

/// Best rational approximation with denominator <= maxden (continued fractions).
/// Returns nothing when the value is not finite.
std::optional<Rational> rationalize(double x, long maxden);

/// Exact integer n-th root when `a >= 0` is a perfect n-th power.
std::optional<Int> perfect_nth_root(const Int& a, unsigned n);

/// Exact rational n-th root when one exists.
std::optional<Rational> perfect_nth_root(const Rational& q, unsigned n);

// ---- small integer-vector helpers used across the lattice modules ----

using IVec = std::vector<Int>;

Int ivec_gcd(const IVec& v);

/// Divides by the gcd of the entries. Never flips signs; primitive({-2,4}) = {-1,2}.
IVec make_primitive(IVec v);

inline bool ivec_is_zero(const IVec& v) {
    for (const auto& x : v) if (x != 0) return false;
    return true;
}

Int ivec_dot(const IVec& a, const IVec& b);

std::string ivec_str(const IVec& v);

}  // namespace scurve
