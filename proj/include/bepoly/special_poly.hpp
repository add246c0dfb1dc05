#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include "bepoly/polynomial.hpp"

namespace bepoly {

namespace detail {

/// Write-once memo table. Values are computed outside the lock, so a compute
/// function may recurse into the same table; concurrent first calls for one key
/// may both compute, and the first insert wins (both values are equal).
template <typename Key, typename Value>
class Memo {
public:
    template <typename F>
    const Value& get(const Key& key, F&& compute) const {
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value v = compute();
        std::lock_guard lock(mutex_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

    [[nodiscard]] std::map<Key, Value> snapshot() const {
        std::lock_guard lock(mutex_);
        return table_;
    }

private:
    mutable std::mutex mutex_;
    mutable std::map<Key, Value> table_;
};

inline void require_nonnegative(long n, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + ": negative index " + std::to_string(n));
}

/// Coefficient rows of (z + j)^n for j = 0..n.
inline std::vector<std::vector<BigInt>> shifted_powers(long n) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) {
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
        for (long m = 0; m <= n; ++m) row[static_cast<std::size_t>(m)] = binomial(n, m) * BigInt(ipow(j, n - m));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// sum_{k=0}^{n} w(k) sum_{j=0}^{k} (-1)^j C(k,j) (z+j)^n
template <typename Weight>
Polynomial weighted_difference_sum(long n, Weight weight) {
    const auto rows = shifted_powers(n);
    std::vector<Rational> acc(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        std::vector<BigInt> inner(static_cast<std::size_t>(n) + 1);
        for (long j = 0; j <= k; ++j) {
            BigInt c = binomial(k, j);
            if (j % 2 == 1) c = -c;
            for (long m = 0; m <= n; ++m) inner[static_cast<std::size_t>(m)] += c * rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
        }
        const Rational w = weight(k);
        for (long m = 0; m <= n; ++m) acc[static_cast<std::size_t>(m)] += w * Rational(inner[static_cast<std::size_t>(m)]);
    }
    std::vector<Gauss> coeffs;
    coeffs.reserve(acc.size());
    for (auto& r : acc) coeffs.emplace_back(std::move(r));
    return Polynomial(std::move(coeffs));
}

}  // namespace detail

/// Memoized Bernoulli and Euler numbers.
///
/// Bernoulli numbers come from the recurrence sum_{k<=n} C(n+1,k) B_k = 0;
/// Euler numbers from 2^n E_n(1/2) with the double-sum Euler polynomial.
class NumberCache {
public:
    const Rational& bernoulli(long n) const {
        detail::require_nonnegative(n, "bernoulli number");
        return bernoulli_.get(n, [&] {
            if (n == 0) return Rational(1);
            if (n >= 3 && n % 2 == 1) return Rational(0);
            Rational s;
            for (long k = 0; k < n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli(k);
            return -s / Rational(n + 1);
        });
    }

    const BigInt& euler(long n) const;

    [[nodiscard]] std::map<long, Rational> bernoulli_snapshot() const { return bernoulli_.snapshot(); }
    [[nodiscard]] std::map<long, BigInt> euler_snapshot() const { return euler_.snapshot(); }

private:
    detail::Memo<long, Rational> bernoulli_;
    detail::Memo<long, BigInt> euler_;
};

inline const NumberCache& numbers() {
    static const NumberCache cache;
    return cache;
}

inline const Rational& bernoulli_number(long n) { return numbers().bernoulli(n); }

/// B_n(z) = sum_k C(n,k) B_k z^(n-k)
inline const Polynomial& bernoulli_poly(long n) {
    static const detail::Memo<long, Polynomial> memo;
    detail::require_nonnegative(n, "bernoulli_poly");
    return memo.get(n, [n] {
        std::vector<Gauss> coeffs(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k <= n; ++k)
            coeffs[static_cast<std::size_t>(n - k)] = Gauss(Rational(binomial(n, k)) * bernoulli_number(k));
        return Polynomial(std::move(coeffs));
    });
}

/// B_n(z) = sum_k 1/(k+1) sum_j (-1)^j C(k,j) (z+j)^n; uses no Bernoulli numbers.
inline Polynomial bernoulli_poly_oracle(long n) {
    detail::require_nonnegative(n, "bernoulli_poly_oracle");
    return detail::weighted_difference_sum(n, [](long k) { return Rational(1, k + 1); });
}

/// E_n(z) = sum_k 2^(-k) sum_j (-1)^j C(k,j) (z+j)^n
inline const Polynomial& euler_poly(long n) {
    static const detail::Memo<long, Polynomial> memo;
    detail::require_nonnegative(n, "euler_poly");
    return memo.get(n, [n] {
        return detail::weighted_difference_sum(n, [](long k) { return Rational(BigInt(1), ipow(2, k)); });
    });
}

/// E_n(z) = 2^(n+1)/(n+1) * (B_{n+1}((z+1)/2) - B_{n+1}(z/2)), from Bernoulli polynomials only.
inline Polynomial euler_poly_oracle(long n) {
    detail::require_nonnegative(n, "euler_poly_oracle");
    const Polynomial& b = bernoulli_poly(n + 1);
    const Gauss half(Rational(1, 2));
    Polynomial diff = b.affine_compose(half, half) - b.affine_compose(half, Gauss(0));
    return diff * Gauss(Rational(ipow(2, n + 1), BigInt(n + 1)));
}

inline const BigInt& NumberCache::euler(long n) const {
    detail::require_nonnegative(n, "euler number");
    return euler_.get(n, [n] {
        const Gauss v = euler_poly(n).eval(Gauss(Rational(1, 2))) * Gauss(Rational(ipow(2, n)));
        if (!v.is_real() || !v.re().is_integer())
            throw std::logic_error("euler number E_" + std::to_string(n) + " is not an integer: " + v.str());
        return v.re().numerator();
    });
}

inline const BigInt& euler_number(long n) { return numbers().euler(n); }

/// -(4^(2n+1)/(2n+1)) * B_{2n+1}(1/4); equals E_{2n} for n >= 1.
inline Rational euler_number_via_quarter(long n) {
    if (n < 1) throw DomainError("euler_number_via_quarter requires n >= 1");
    const Gauss v = bernoulli_poly(2 * n + 1).eval(Gauss(Rational(1, 4)));
    return -(Rational(ipow(4, 2 * n + 1), BigInt(2 * n + 1)) * v.re());
}

enum class Family { bernoulli, euler };

inline const Polynomial& family_poly(Family f, long n) {
    return f == Family::bernoulli ? bernoulli_poly(n) : euler_poly(n);
}

/// B_n(a z + b) or E_n(a z + b), memoized per (family, n, a, b).
inline const Polynomial& family_poly_at(Family f, long n, const Gauss& a, const Gauss& b) {
    using Key = std::tuple<int, long, std::string, std::string>;
    static const detail::Memo<Key, Polynomial> memo;
    detail::require_nonnegative(n, "family_poly_at");
    if (a.is_one() && b.is_zero()) return family_poly(f, n);
    return memo.get(Key{static_cast<int>(f), n, a.str(), b.str()},
                    [&] { return family_poly(f, n).affine_compose(a, b); });
}

struct ZetaReport {
    long n = 0;
    long terms = 0;
    double zeta_partial = 0;   // sum_{k=1}^{terms} k^(-2n)
    double formula_value = 0;  // (-1)^(n-1) (2n)! / (2^(2n-1) pi^(2n)) * zeta_partial
    double exact_value = 0;    // B_{2n} as a double
    double relative_error = 0;
};

/// Floating-point check of B_{2n} against its zeta(2n) closed form, with
/// zeta(2n) taken as a plain partial sum of `terms` terms.
inline ZetaReport zeta_sanity(long n, long terms = 10000) {
    if (n < 1) throw DomainError("zeta_sanity requires n >= 1");
    if (terms < 1) throw DomainError("zeta_sanity requires terms >= 1");
    ZetaReport r;
    r.n = n;
    r.terms = terms;
    // smallest terms first
    for (long k = terms; k >= 1; --k) r.zeta_partial += std::pow(static_cast<double>(k), -2.0 * static_cast<double>(n));
    const double sign = n % 2 == 1 ? 1.0 : -1.0;
    const double scale = factorial(2 * n).get_d() / (std::pow(2.0, static_cast<double>(2 * n - 1)) *
                                                      std::pow(std::numbers::pi, static_cast<double>(2 * n)));
    r.formula_value = sign * scale * r.zeta_partial;
    r.exact_value = bernoulli_number(2 * n).to_double();
    r.relative_error = std::abs(r.formula_value - r.exact_value) / std::abs(r.exact_value);
    return r;
}

}  // namespace bepoly
