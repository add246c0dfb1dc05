#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bepoly {

using BigInt = mpz_class;

/// Raised for arithmetic outside the domain of an operation
/// (zero denominators, zero to a negative power, negative binomial row).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact rational in canonical form: positive denominator, reduced, zero is 0/1.
///
/// Canonicalization happens in every constructor and after every operation, so
/// equality is plain component-wise comparison.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        q_.get_num() = num;
        q_.get_den() = den;
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    /// Numerator when the value is integral; throws otherwise.
    [[nodiscard]] BigInt to_integer() const {
        if (!is_integer()) throw DomainError("expected an integer, got " + str());
        return q_.get_num();
    }

    [[nodiscard]] double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.q_ = -a.q_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// "p/q", or "p" when q = 1.
    [[nodiscard]] std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational inverse(const Rational& r) {
    if (r.is_zero()) throw DomainError("inverse of zero");
    return Rational(r.denominator(), r.numerator());
}

/// Integer power; 0^0 = 1, 0^(negative) is a domain error.
inline Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw DomainError("zero raised to a negative power");
        return pow(inverse(base), -exponent);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

/// Binomial coefficient with the empty-sum convention: 0 for k < 0 or k > n.
inline BigInt binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial with negative n = " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt ipow(long base, long exponent) {
    if (exponent < 0) throw DomainError("negative integer exponent");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                  static_cast<unsigned long>(exponent));
    if (base < 0 && exponent % 2 == 1) r = -r;
    return r;
}

/// Narrowing for exponents, indices and summation bounds.
inline long to_long(const BigInt& v) {
    if (!v.fits_slong_p()) throw DomainError("integer out of machine range: " + v.get_str());
    return v.get_si();
}

}  // namespace bepoly
