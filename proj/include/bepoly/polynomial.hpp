#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bepoly/gauss_rational.hpp"

namespace bepoly {

/// Dense univariate polynomial in z over Q(i), coefficients in ascending degree.
///
/// The top stored coefficient is never zero; the zero polynomial stores nothing
/// and has no degree.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Gauss c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    Polynomial(Rational c) : Polynomial(Gauss(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    Polynomial(long c) : Polynomial(Gauss(c)) {}                 // NOLINT(google-explicit-constructor)
    Polynomial(int c) : Polynomial(Gauss(c)) {}                  // NOLINT(google-explicit-constructor)
    explicit Polynomial(std::vector<Gauss> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// The indeterminate z.
    static Polynomial z() { return Polynomial(std::vector<Gauss>{Gauss(0), Gauss(1)}); }

    /// c * z^k
    static Polynomial monomial(Gauss c, std::size_t k) {
        std::vector<Gauss> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree, or nullopt for the zero polynomial.
    [[nodiscard]] std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Coefficient of z^k (zero past the top).
    [[nodiscard]] Gauss coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Gauss(); }
    [[nodiscard]] std::span<const Gauss> coeffs() const { return coeffs_; }

    /// Value of a constant polynomial; throws if the degree is positive.
    [[nodiscard]] Gauss constant_value() const {
        if (!is_constant()) throw DomainError("expected a constant, got " + str());
        return coeff(0);
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Gauss& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Gauss& c) { return a *= c; }
    friend Polynomial operator*(const Gauss& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_constant()) return a * b.coeffs_[0];
        if (a.is_constant()) return b * a.coeffs_[0];
        std::vector<Gauss> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Horner evaluation at c.
    [[nodiscard]] Gauss eval(const Gauss& c) const {
        Gauss acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= c;
            acc += *it;
        }
        return acc;
    }

    /// p(a*z + b), by Horner accumulation in the polynomial ring.
    [[nodiscard]] Polynomial affine_compose(const Gauss& a, const Gauss& b) const {
        const Polynomial inner(std::vector<Gauss>{b, a});
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * inner;
            acc += Polynomial(*it);
        }
        return acc;
    }

    /// Ascending "c0 + c1*z + c2*z^2"; zero terms omitted, unit coefficients
    /// elided, non-real coefficients parenthesized. The output parses back as an
    /// expression in the identity language.
    [[nodiscard]] std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Gauss& c = coeffs_[k];
            if (c.is_zero()) continue;
            const bool first = out.empty();
            std::string mag;
            bool negative = false;
            if (c.is_real()) {
                negative = c.re().sign() < 0;
                const Rational m = abs(c.re());
                if (k == 0 || m != Rational(1)) mag = m.str();
            } else {
                mag = "(" + c.str() + ")";
            }
            std::string power = k == 0 ? "" : k == 1 ? "z" : "z^" + std::to_string(k);
            std::string term = mag.empty() ? power : power.empty() ? mag : mag + "*" + power;
            if (first) {
                out = negative ? "-" + term : term;
            } else {
                out += negative ? " - " : " + ";
                out += term;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Gauss> coeffs_;
};

inline Polynomial pow(const Polynomial& base, long exponent) {
    if (exponent < 0) {
        if (!base.is_constant()) throw DomainError("negative power of a non-constant polynomial");
        return Polynomial(pow(base.constant_value(), exponent));
    }
    if (base.is_constant()) return Polynomial(pow(base.coeff(0), exponent));
    Polynomial result(1);
    for (long e = 0; e < exponent; ++e) result *= base;
    return result;
}

}  // namespace bepoly
