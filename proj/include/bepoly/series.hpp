#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bepoly/polynomial.hpp"

namespace bepoly {

/// Truncated power series in t, sum_{k=0}^{N} c_k t^k, with c_k polynomials in z.
class SeriesZ {
public:
    explicit SeriesZ(std::size_t order) : coeffs_(order + 1) {}
    explicit SeriesZ(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    }

    static SeriesZ constant(const Polynomial& c, std::size_t order) {
        SeriesZ s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static SeriesZ one(std::size_t order) { return constant(Polynomial(1), order); }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const Polynomial& operator[](std::size_t k) const { return coeffs_.at(k); }
    Polynomial& operator[](std::size_t k) { return coeffs_.at(k); }

    SeriesZ& operator+=(const SeriesZ& o) {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    SeriesZ& operator-=(const SeriesZ& o) {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    SeriesZ& operator*=(const Gauss& c) {
        for (auto& p : coeffs_) p *= c;
        return *this;
    }

    friend SeriesZ operator+(SeriesZ a, const SeriesZ& b) { return a += b; }
    friend SeriesZ operator-(SeriesZ a, const SeriesZ& b) { return a -= b; }
    friend SeriesZ operator*(SeriesZ a, const Gauss& c) { return a *= c; }

    /// Cauchy product truncated to the common order.
    friend SeriesZ operator*(const SeriesZ& a, const SeriesZ& b) {
        a.check_order(b);
        SeriesZ out(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n) {
            Polynomial acc;
            for (std::size_t j = 0; j <= n; ++j) {
                if (a.coeffs_[j].is_zero() || b.coeffs_[n - j].is_zero()) continue;
                acc += a.coeffs_[j] * b.coeffs_[n - j];
            }
            out.coeffs_[n] = std::move(acc);
        }
        return out;
    }

    friend bool operator==(const SeriesZ& a, const SeriesZ& b) = default;

    /// t -> c t: coefficient k is multiplied by c^k.
    [[nodiscard]] SeriesZ scale_t(const Gauss& c) const {
        SeriesZ out = *this;
        Gauss ck(1);
        for (auto& p : out.coeffs_) {
            p *= ck;
            ck *= c;
        }
        return out;
    }

    /// z -> a z + b in every coefficient.
    [[nodiscard]] SeriesZ compose_z(const Gauss& a, const Gauss& b) const {
        SeriesZ out = *this;
        for (auto& p : out.coeffs_) p = p.affine_compose(a, b);
        return out;
    }

    /// Division by t; the constant term must vanish and the order drops by one.
    [[nodiscard]] SeriesZ divide_by_t() const {
        if (!coeffs_[0].is_zero()) throw std::domain_error("divide_by_t: nonzero constant term");
        if (order() == 0) throw std::domain_error("divide_by_t: series of order 0");
        return SeriesZ(std::vector<Polynomial>(coeffs_.begin() + 1, coeffs_.end()));
    }

private:
    void check_order(const SeriesZ& o) const {
        if (o.order() != order())
            throw std::invalid_argument("series order mismatch: " + std::to_string(order()) + " vs " +
                                        std::to_string(o.order()));
    }

    std::vector<Polynomial> coeffs_;
};

/// Multiplicative inverse. The constant term must be a nonzero scalar; it is
/// scaled out first so the core recurrence runs on a unit series.
inline SeriesZ series_recip(const SeriesZ& a) {
    const Polynomial& c0 = a[0];
    if (c0.is_zero() || !c0.is_constant()) throw std::domain_error("series_recip: constant term is not a unit");
    const Gauss unit = c0.constant_value();
    const Gauss unit_inv = unit.inverse();
    const SeriesZ u = a * unit_inv;
    SeriesZ b(a.order());
    b[0] = Polynomial(1);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Polynomial acc;
        for (std::size_t j = 1; j <= n; ++j) acc += u[j] * b[n - j];
        b[n] = -acc;
    }
    return b * unit_inv;
}

/// e^{c t}, or e^{z c t} when with_z is set.
inline SeriesZ series_exp(const Gauss& c, bool with_z, std::size_t order) {
    SeriesZ s(order);
    Gauss term(1);  // c^k / k!
    for (std::size_t k = 0; k <= order; ++k) {
        s[k] = with_z ? Polynomial::monomial(term, k) : Polynomial(term);
        term *= c;
        term /= Gauss(static_cast<long>(k + 1));
    }
    return s;
}

/// t e^{zt} / (e^t - 1), formed as recip(sum t^k/(k+1)!) * e^{zt}.
inline SeriesZ bernoulli_gf(std::size_t order) {
    const SeriesZ expm1_over_t = (series_exp(Gauss(1), false, order + 1) - SeriesZ::one(order + 1)).divide_by_t();
    return series_recip(expm1_over_t) * series_exp(Gauss(1), true, order);
}

/// 2 e^{zt} / (e^t + 1), formed as recip((e^t + 1)/2) * e^{zt}.
inline SeriesZ euler_gf(std::size_t order) {
    const SeriesZ half_sum = (series_exp(Gauss(1), false, order) + SeriesZ::one(order)) * Gauss(Rational(1, 2));
    return series_recip(half_sum) * series_exp(Gauss(1), true, order);
}

enum class Kernel { k2_2, k2_6, k2_10a, k2_10b, k2_12, k2_19, k2_23 };

inline constexpr Kernel all_kernels[] = {Kernel::k2_2,  Kernel::k2_6,  Kernel::k2_10a, Kernel::k2_10b,
                                         Kernel::k2_12, Kernel::k2_19, Kernel::k2_23};

inline std::string_view kernel_name(Kernel k) {
    switch (k) {
        case Kernel::k2_2: return "K2.2";
        case Kernel::k2_6: return "K2.6";
        case Kernel::k2_10a: return "K2.10a";
        case Kernel::k2_10b: return "K2.10b";
        case Kernel::k2_12: return "K2.12";
        case Kernel::k2_19: return "K2.19";
        case Kernel::k2_23: return "K2.23";
    }
    return "?";
}

inline Kernel parse_kernel(std::string_view name) {
    for (Kernel k : all_kernels)
        if (kernel_name(k) == name) return k;
    throw std::invalid_argument("unknown kernel id: " + std::string(name));
}

namespace detail {

inline SeriesZ cosh_series(const Gauss& c, std::size_t order) {
    return (series_exp(c, false, order) + series_exp(-c, false, order)) * Gauss(Rational(1, 2));
}

/// sinh(c t) / (c t)
inline SeriesZ sinhc_series(const Gauss& c, std::size_t order) {
    const SeriesZ sinh =
        (series_exp(c, false, order + 1) - series_exp(-c, false, order + 1)) * Gauss(Rational(1, 2));
    return sinh.divide_by_t() * c.inverse();
}

/// (e^{c t} - 1) / (c t)
inline SeriesZ expm1c_series(const Gauss& c, std::size_t order) {
    return (series_exp(c, false, order + 1) - SeriesZ::one(order + 1)).divide_by_t() * c.inverse();
}

/// sum_k t^{4k} / (4k)!
inline SeriesZ quartic_cosh_series(std::size_t order) {
    SeriesZ s(order);
    for (std::size_t k = 0; k <= order; k += 4) s[k] = Polynomial(Gauss(Rational(BigInt(1), factorial(static_cast<long>(k)))));
    return s;
}

}  // namespace detail

/// Both sides of a kernel identity as series of the given order.
/// K2.19 takes the parameter a (nonzero); the other kernels ignore it.
inline std::pair<SeriesZ, SeriesZ> kernel_sides(Kernel kernel, std::size_t order,
                                                const std::optional<Gauss>& a = std::nullopt) {
    const Gauss one(1);
    const Gauss two(2);
    const Gauss zero(0);
    const Gauss half(Rational(1, 2));
    const SeriesZ bgf = bernoulli_gf(order);
    const SeriesZ egf = euler_gf(order);
    switch (kernel) {
        case Kernel::k2_2:
            return {detail::cosh_series(Gauss(Rational(1, 4)), order) * bgf,
                    series_exp(Gauss(Rational(-1, 4)), false, order) * bgf.compose_z(two, zero).scale_t(half)};
        case Kernel::k2_6:
            return {detail::sinhc_series(half, order) * bgf.scale_t(two),
                    series_exp(-half, false, order) * egf.compose_z(two, zero)};
        case Kernel::k2_10a:
            return {series_exp(half, false, order) * bgf.scale_t(two),
                    series_recip(detail::cosh_series(half, order)) * bgf.compose_z(two, zero)};
        case Kernel::k2_10b:
            return {series_recip(detail::cosh_series(half, order)) * bgf.compose_z(two, zero),
                    series_recip(detail::sinhc_series(half, order)) * egf.compose_z(two, zero)};
        case Kernel::k2_12: {
            const Gauss three(3);
            const SeriesZ avg = (SeriesZ::one(order) + series_exp(-one, false, order) + series_exp(one, false, order)) *
                                Gauss(Rational(1, 3));
            return {avg * bgf.scale_t(three), series_exp(-one, false, order) * bgf.compose_z(three, zero)};
        }
        case Kernel::k2_19: {
            if (!a || a->is_zero()) throw std::domain_error("kernel K2.19 needs a nonzero parameter a");
            const SeriesZ half_sum = (series_exp(one, false, order) + SeriesZ::one(order)) * half;
            return {detail::expm1c_series(*a, order) * bgf.scale_t(*a), half_sum * egf.compose_z(*a, zero)};
        }
        case Kernel::k2_23: {
            const Gauss one_plus_i(Rational(1), Rational(1));
            const SeriesZ sigma =
                (series_exp(-one, false, order) + series_exp(-Gauss::i(), false, order)) * half;
            return {detail::quartic_cosh_series(order) * bgf.scale_t(two * one_plus_i),
                    sigma * bgf.scale_t(one_plus_i).compose_z(two, zero)};
        }
    }
    throw std::invalid_argument("unknown kernel");
}

/// Exact equality of all order+1 coefficients of both kernel sides.
inline bool verify_kernel(Kernel kernel, std::size_t order, const std::optional<Gauss>& a = std::nullopt) {
    const auto [lhs, rhs] = kernel_sides(kernel, order, a);
    return lhs == rhs;
}

}  // namespace bepoly
