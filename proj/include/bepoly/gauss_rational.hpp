#pragma once

#include <ostream>
#include <string>

#include "bepoly/rational.hpp"

namespace bepoly {

/// Element re + im*i of Q(i).
class Gauss {
public:
    Gauss() = default;
    Gauss(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Gauss(long v) : re_(v) {}                   // NOLINT(google-explicit-constructor)
    Gauss(int v) : re_(v) {}                    // NOLINT(google-explicit-constructor)
    Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gauss i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }

    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }
    [[nodiscard]] bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

    [[nodiscard]] Gauss conj() const { return {re_, -im_}; }
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

    [[nodiscard]] Gauss inverse() const {
        if (is_zero()) throw DomainError("Gaussian rational division by zero");
        const Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    Gauss& operator+=(const Gauss& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gauss& operator-=(const Gauss& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gauss& operator*=(const Gauss& o) {
        if (o.is_real()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    Gauss& operator/=(const Gauss& o) {
        if (o.is_real()) {
            if (o.re_.is_zero()) throw DomainError("Gaussian rational division by zero");
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
    friend Gauss operator-(const Gauss& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const Gauss& a, const Gauss& b) = default;

    /// "a/b + c/d*i"; the imaginary part is omitted when zero and the real
    /// part when it alone is zero ("c/d*i").
    [[nodiscard]] std::string str() const {
        if (im_.is_zero()) return re_.str();
        if (re_.is_zero()) return im_.str() + "*i";
        if (im_.sign() < 0) return re_.str() + " - " + (-im_).str() + "*i";
        return re_.str() + " + " + im_.str() + "*i";
    }

    friend std::ostream& operator<<(std::ostream& os, const Gauss& g) { return os << g.str(); }

private:
    Rational re_;
    Rational im_;
};

/// Integer power by squaring; negative exponents go through the inverse.
inline Gauss pow(const Gauss& base, long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw DomainError("zero raised to a negative power");
        return pow(base.inverse(), -exponent);
    }
    if (base.is_real()) return Gauss(pow(base.re(), exponent));
    Gauss result(1);
    Gauss sq = base;
    for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
        if (e & 1UL) result *= sq;
        if (e > 1) sq *= sq;
    }
    return result;
}

}  // namespace bepoly
