#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "bepoly/eval.hpp"
#include "bepoly/parser.hpp"
#include "bepoly/report.hpp"

namespace bepoly {

/// Admissible n: n >= min_n and n = residue (mod modulus).
struct Domain {
    long min_n = 0;
    long modulus = 1;
    long residue = 0;

    [[nodiscard]] bool admits(long n) const {
        if (n < min_n) return false;
        const long r = ((n % modulus) + modulus) % modulus;
        return r == residue;
    }
};

/// Largest binomial row or polynomial index the entry touches at n: scale*n + offset.
struct SizeBound {
    long scale = 1;
    long offset = 0;
    [[nodiscard]] long at(long n) const { return scale * n + offset; }
};

/// How a free parameter beyond n and z is handled.
enum class ParamKind {
    none,
    /// the nonzero scaling a of the Euler-argument identity: sampled at a = 1..n+1 and a = 1+i
    amplitude,
    /// the shift y of the addition formulas: sampled at n+1 distinct rationals
    shift,
};

enum class Side { lhs, rhs };

struct Identity {
    std::string id;
    std::string paper_eq;
    std::string canonical;  // identity-language source of both sides
    Domain domain;
    SizeBound size;
    ParamKind param = ParamKind::none;
    bool audit = false;  // reported, never gating
    dsl::IdentityExpr expr;

    [[nodiscard]] bool param_a() const { return param == ParamKind::amplitude; }

    [[nodiscard]] std::string parameter_name() const {
        switch (param) {
            case ParamKind::amplitude: return "a";
            case ParamKind::shift: return "y";
            case ParamKind::none: break;
        }
        return {};
    }

    [[nodiscard]] std::set<std::string> parameter_names() const {
        if (param == ParamKind::none) return {};
        return {parameter_name()};
    }
};

class VerifyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

struct EntrySource {
    const char* id;
    const char* paper_eq;
    const char* canonical;
    Domain domain;
    SizeBound size;
    ParamKind param = ParamKind::none;
    bool audit = false;
};

// clang-format off
inline const std::vector<EntrySource>& entry_sources() {
    using P = ParamKind;
    static const std::vector<EntrySource> sources = {
        {"EQ1.2", "(1.2)",
         "(n+1)/2^(n+1)*E(n, 2*z) == B(n+1, z + 1/2) - B(n+1, z)", {0}, {1, 1}},
        {"EQ1.3", "(1.3)",
         "n/2*E(n-1, z) == B(n, z) - 2^n*B(n, z/2)", {1}, {1, 0}},
        {"EQ1.4B", "(1.4) Bernoulli",
         "B(n, z + y) == sum(k=0..n, binom(n, k)*B(k, z)*y^(n-k))", {0}, {1, 0}, P::shift},
        {"EQ1.4E", "(1.4) Euler",
         "E(n, z + y) == sum(k=0..n, binom(n, k)*E(k, z)*y^(n-k))", {0}, {1, 0}, P::shift},
        {"EQ1.5m2", "(1.5) m=2",
         "B(n, 2*z) == 2^(n-1)*sum(k=0..1, B(n, z + k/2))", {0}, {1, 0}},
        {"EQ1.5m3", "(1.5) m=3",
         "B(n, 3*z) == 3^(n-1)*sum(k=0..2, B(n, z + k/3))", {0}, {1, 0}},

        {"T2.1a", "(2.1) first = third",
         "sum(k=0..floor(n, 2), 4^(n-2*k)*binom(n, 2*k)*B(n-2*k, z)) == 2^n*B(n, 2*z - 1/2)", {0}, {1, 0}},
        {"T2.1b", "(2.1) second = third",
         "sum(j=0..n, (-1)^(n-j)*2^j*binom(n, j)*B(j, 2*z)) == 2^n*B(n, 2*z - 1/2)", {0}, {1, 0}},
        {"T2.2a", "(2.5) first = third",
         "sum(k=0..floor(n, 2), 4^(n-2*k)/(2*k+1)*binom(n, 2*k)*B(n-2*k, z)) == 2^n*E(n, 2*z - 1/2)", {0}, {1, 0}},
        {"T2.2b", "(2.5) second = third",
         "sum(j=0..n, (-1)^(n-j)*2^j*binom(n, j)*E(j, 2*z)) == 2^n*E(n, 2*z - 1/2)", {0}, {1, 0}},
        {"T2.3a", "(2.9) first = second",
         "2^n*B(n, z + 1/4) == sum(k=0..n, 2^(2*k-n)*binom(n, k)*B(k, z))", {0}, {1, 0}},
        {"T2.3b", "(2.9) first = third",
         "2^n*B(n, z + 1/4) == sum(k=0..n, binom(n, k)*E(n-k, 1/2)*B(k, 2*z))", {0}, {1, 0}},
        {"T2.3c", "(2.9) first = fourth",
         "2^n*B(n, z + 1/4) == sum(k=0..n, binom(n, k)*B(n-k, 1/2)*E(k, 2*z))", {0}, {1, 0}},
        {"T2.4a", "(2.11) first = third",
         "B(n, z) + 2*sum(k=1..floor(n, 2), binom(n, 2*k)*B(n-2*k, z)/3^(2*k+1)) == B(n, 3*z - 1)/3^n", {0}, {1, 0}},
        {"T2.4b", "(2.11) second = third",
         "sum(k=0..n, (-1)^(n-k)*binom(n, k)*B(k, 3*z))/3^n == B(n, 3*z - 1)/3^n", {0}, {1, 0}},
        {"T2.5a", "(2.18) first = third",
         "a^n*sum(k=0..n, binom(n, k)*B(n-k, z)/(k+1)) == (E(n, a*z) + E(n, a*z + 1))/2", {0}, {1, 0}, P::amplitude},
        {"T2.5b", "(2.18) second = third",
         "E(n, a*z) + 1/2*sum(k=1..n, binom(n, k)*E(n-k, a*z)) == (E(n, a*z) + E(n, a*z + 1))/2", {0}, {1, 0}, P::amplitude},
        {"T2.6", "(2.22)",
         "sum(k=0..floor(n, 4), (-1)^k*binom(n, 4*k)*B(n-4*k, z)/2^(6*k)) == "
         "1/2^(n+1)*sum(k=0..n, (-1)^k*(1 + i^k)/(1 + i)^k*binom(n, k)*B(n-k, 2*z))", {0}, {1, 0}},

        {"T3.1a", "(3.1)",
         "sum(k=1..n, 2^(2*k-1)*binom(2*n, 2*k-1)*B(2*k-1, z)) == "
         "sum(k=1..n, k*2^(2*k)*binom(2*n, 2*k)*E(2*k-1, z))", {0}, {2, 0}},
        {"T3.1b", "(3.2)",
         "sum(k=0..n, 2^(2*k)*binom(2*n+1, 2*k)*B(2*k, z)) == "
         "sum(k=0..n, (2*k+1)*2^(2*k)*binom(2*n+1, 2*k+1)*E(2*k, z))", {0}, {2, 1}},
        {"T3.2a", "(3.9)",
         "sum(k=0..n, 4^(2*k)/(2*(n-k)+1)*binom(2*n, 2*k)*B(2*k, z)) == "
         "sum(k=0..n, 2^(2*k)*binom(2*n, 2*k)*E(2*k, 2*z)) - sum(k=0..n-1, 2^(2*k+1)*binom(2*n, 2*k+1)*E(2*k+1, 2*z))",
         {0}, {2, 0}},
        {"T3.2b", "(3.10)",
         "sum(k=0..n, 4^(2*k+1)/(2*(n-k)+1)*binom(2*n+1, 2*k+1)*B(2*k+1, z)) == "
         "sum(k=0..n, 2^(2*k+1)*binom(2*n+1, 2*k+1)*E(2*k+1, 2*z)) - sum(k=0..n, 2^(2*k)*binom(2*n+1, 2*k)*E(2*k, 2*z))",
         {0}, {2, 1}},
        {"T3.3a", "(3.13)",
         "sum(k=0..n, binom(2*n, 2*k)*B(2*k, 3*z)) - sum(k=0..n-1, binom(2*n, 2*k+1)*B(2*k+1, 3*z)) == "
         "2*sum(k=0..n-1, 3^(2*k-1)*binom(2*n, 2*k)*B(2*k, z)) + 3^(2*n)*B(2*n, z)", {0}, {2, 0}},
        {"T3.3b", "(3.14)",
         "sum(k=0..n, binom(2*n+1, 2*k+1)*B(2*k+1, 3*z)) - sum(k=0..n, binom(2*n+1, 2*k)*B(2*k, 3*z)) == "
         "2*sum(k=0..n-1, 3^(2*k)*binom(2*n+1, 2*k+1)*B(2*k+1, z)) + 3^(2*n+1)*B(2*n+1, z)", {0}, {2, 1}},
        {"T3.4a", "(3.15)",
         "sum(k=1..n, (-1)^k*2^(2*k+1)*k*binom(4*n, 4*k)*E(4*k-1, z)) == "
         "sum(k=1..n, (-1)^k*2^(2*k-1)*binom(4*n, 4*k-1)*B(4*k-1, z)) - "
         "sum(k=1..n, (-1)^k*2^(2*k-2)*binom(4*n, 4*k-3)*B(4*k-3, z))", {1}, {4, 0}},
        {"T3.4b", "(3.16)",
         "sum(k=1..n, (-1)^k*2^(2*k+1)*(2*k-1)*binom(4*n-2, 4*k-2)*E(4*k-3, z)) == "
         "sum(k=1..n-1, (-1)^k*2^(2*k+1)*binom(4*n-2, 4*k-1)*B(4*k-1, z)) + "
         "sum(k=1..n, (-1)^k*2^(2*k)*binom(4*n-2, 4*k-3)*B(4*k-3, z))", {1}, {4, -2}},
        {"T3.4c", "(3.17)",
         "sum(k=0..n, (-1)^k*2^(2*k)*(4*k+1)*binom(4*n+1, 4*k+1)*E(4*k, z)) == "
         "sum(k=0..n-1, (-1)^k*2^(2*k+1)*binom(4*n+1, 4*k+2)*B(4*k+2, z)) + "
         "sum(k=0..n, (-1)^k*2^(2*k)*binom(4*n+1, 4*k)*B(4*k, z))", {1}, {4, 1}},
        {"T3.4d", "(3.18)",
         "sum(k=0..n, (-1)^k*2^(2*k+1)*(4*k+3)*binom(4*n+3, 4*k+3)*E(4*k+2, z)) == "
         "sum(k=0..n, (-1)^k*2^(2*k+1)*binom(4*n+3, 4*k+2)*B(4*k+2, z)) - "
         "sum(k=0..n, (-1)^k*2^(2*k)*binom(4*n+3, 4*k)*B(4*k, z))", {1}, {4, 3}},

        {"KV.B1", "known value B_n(1)",
         "B(n, 1) == (-1)^n*BN(n)", {1}, {1, 0}},
        {"KV.B16", "known value B_2n(1/6)",
         "B(2*n, 1/6) == 1/2*(1 - 2^(1-2*n))*(1 - 3^(1-2*n))*BN(2*n)", {1}, {2, 0}},
        {"KV.B13", "known value B_2n(1/3)",
         "B(2*n, 1/3) == -1/2*(1 - 3^(1-2*n))*BN(2*n)", {1}, {2, 0}},
        {"KV.B12", "known value B_n(1/2)",
         "B(n, 1/2) == (2^(1-n) - 1)*BN(n)", {1}, {1, 0}},
        {"KV.B14", "known value B_n(1/4)",
         "B(n, 1/4) == 2^(-n)*(2^(1-n) - 1)*BN(n) - n*4^(-n)*EN(n-1)", {1}, {1, 0}},
        {"KV.E0", "known value E_(n-1)(0)",
         "E(n-1, 0) == 2/n*(1 - 2^n)*BN(n)", {1}, {1, 0}},
        {"KV.E16", "known value E_2n(1/6)",
         "E(2*n, 1/6) == 2^(-2*n-1)*(1 + 3^(-2*n))*EN(2*n)", {1}, {2, 0}},

        {"N4.1", "(2.5) at z=1/2",
         "EN(n) == sum(k=0..floor(n, 2), 2^(n-2*k)/(2*k+1)*(2 - 2^(n-2*k))*binom(n, 2*k)*BN(n-2*k))", {0}, {1, 0}},
        {"N4.2", "(2.5) at z=1/4",
         "sum(k=1..n, (2^(2*k) - 2)/(2*(n-k)+1)*binom(2*n, 2*k)*BN(2*k)) == 1/(2*n+1)", {1}, {2, 0}},
        {"N4.3", "(2.9) at z=0",
         "sum(k=0..n, 2^k*(2^k - EN(n-k))*binom(n, k)*BN(k)) == 0", {0}, {1, 0}},
        {"N4.4", "(2.9) at z=1/4",
         "(2*n+1)*EN(2*n) == "
         "sum(k=0..n, (4^(k+1) - 1)/(k+1)*(2^(2*k+2) - 2^(2*n+1))*binom(2*n+1, 2*k+1)*BN(2*k+2)*BN(2*n-2*k))",
         {0}, {2, 2}},
        {"N4.5", "(2.9) number identity",
         "sum(k=0..n, (2^k - 2)*binom(n, k)*BN(k)*(EN(n-k) - 1)) == sum(k=1..n, k*binom(n, k)*EN(k-1))", {0}, {1, 0}},
        {"N4.6", "(2.22) at z=0",
         "sum(k=0..n, (-1)^k*(1 + i^k)/(1 + i)^k*binom(n, k)*BN(n-k)) == "
         "(1 + (-1)^((n-1)/2))/2*(-1)^floor(n+3, 4)*2^((3-n)/2)*n", {3, 2, 1}, {1, 0}},
        {"N4.7", "(3.1) at z=0",
         "sum(k=1..n, 2^(2*k)*(2^(2*k) - 1)*binom(2*n, 2*k)*BN(2*k)) == 2*n", {0}, {2, 0}},
        {"N4.8", "(3.2) at z=0",
         "sum(k=0..n, 2^(2*k)*binom(2*n+1, 2*k)*BN(2*k)) == 2*n + 1", {0}, {2, 1}},
        {"N4.9", "(3.2) at z=1/6",
         "sum(k=0..n, (2^(2*k-1) - 1)*(1 - 3^(1-2*k))*binom(2*n+1, 2*k)*BN(2*k)) == "
         "sum(k=0..n, (k + 1/2)*(1 + 3^(-2*k))*binom(2*n+1, 2*k+1)*EN(2*k))", {0}, {2, 1}},
        {"N4.10", "(3.10) at z=0",
         "sum(k=1..n, 2^(2*k)/k*(2^(2*k) - 1)*binom(2*n-1, 2*k-1)*BN(2*k)) == 2", {1}, {2, 0}},
        {"N4.11", "(3.13) at z=1/3",
         "1/2*(3^(2*n) - 1)*BN(2*n) == sum(k=0..n-1, (1 - 3^(2*k-1))*binom(2*n, 2*k)*BN(2*k))", {0}, {2, 0}},
        {"N4.12", "(3.15) at z=0",
         "sum(k=0..n, (-1)^k*2^(2*k)*(4^(2*k) - 1)*binom(4*n, 4*k)*BN(4*k)) == 2*n", {1}, {4, 0}},
        {"N4.13", "(3.16) at z=0",
         "sum(k=0..n, (-1)^k*2^(2*k+1)*(4^(2*k+1) - 1)*binom(4*n+2, 4*k+2)*BN(4*k+2)) == 2*n + 1", {1}, {4, 2}},
        {"N4.14", "(3.17) at z=0",
         "sum(k=0..n-1, (-1)^k*2^(2*k+1)*binom(4*n+1, 4*k+2)*BN(4*k+2)) + "
         "sum(k=0..n, (-1)^k*2^(2*k)*binom(4*n+1, 4*k)*BN(4*k)) == 4*n + 1", {1}, {4, 1}},
        {"N4.15", "(3.18) at z=0",
         "sum(k=0..n, (-1)^k*2^(2*k+1)*binom(4*n+3, 4*k+2)*BN(4*k+2)) == "
         "sum(k=0..n, (-1)^k*2^(2*k)*binom(4*n+3, 4*k)*BN(4*k))", {1}, {4, 3}},

        {"ABS.1", "abstract, n E_(n-1)",
         "n*EN(n-1) == sum(k=1..floor(n, 2), (2^(2*k) - 1)/k*(2^(2*k) - 2^n)*binom(n, 2*k-1)*BN(2*k)*BN(n-2*k))",
         {1}, {1, 0}, P::none, true},
    };
    return sources;
}
// clang-format on

}  // namespace detail

/// The fixed identity catalog, in report order.
inline const std::vector<Identity>& catalog() {
    static const std::vector<Identity> entries = [] {
        std::vector<Identity> out;
        for (const auto& s : detail::entry_sources()) {
            Identity e;
            e.id = s.id;
            e.paper_eq = s.paper_eq;
            e.canonical = s.canonical;
            e.domain = s.domain;
            e.size = s.size;
            e.param = s.param;
            e.audit = s.audit;
            e.expr = dsl::parse_identity(e.canonical, e.parameter_names());
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

inline const Identity& find_identity(std::string_view id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw VerifyError("unknown identity id: " + std::string(id));
}

/// Sample points for a parameterized entry at n. Both sides are polynomials of
/// degree <= n in the parameter, so n+1 distinct samples determine them.
inline std::vector<Gauss> parameter_samples(ParamKind kind, long n) {
    std::vector<Gauss> out;
    if (kind == ParamKind::amplitude) {
        for (long a = 1; a <= n + 1; ++a) out.emplace_back(a);
        out.emplace_back(Rational(1), Rational(1));
    } else if (kind == ParamKind::shift) {
        // 0, 1, -1, 1/2, 2, -1/2, -2, 1/3, 3, ...
        out.emplace_back(0);
        for (long m = 1; static_cast<long>(out.size()) < n + 1; ++m) {
            const std::vector<Rational> next = m == 1 ? std::vector<Rational>{Rational(1), Rational(-1)}
                                                      : std::vector<Rational>{Rational(1, m), Rational(m),
                                                                              Rational(-1, m), Rational(-m)};
            for (const auto& v : next)
                if (static_cast<long>(out.size()) < n + 1) out.emplace_back(v);
        }
    }
    return out;
}

inline std::string certificate_text(ParamKind kind) {
    switch (kind) {
        case ParamKind::amplitude:
            return "both sides are polynomials in a of degree <= n; checked at the n+2 distinct samples a = 1..n+1 "
                   "and a = 1+i, more than the n+1 points that determine such a polynomial";
        case ParamKind::shift:
            return "both sides are polynomials in y of degree <= n; checked at n+1 distinct rational samples of y, "
                   "which determine such a polynomial";
        case ParamKind::none: break;
    }
    return {};
}

/// Exact value of one side at n (and parameter value, when the entry has one).
inline Polynomial eval_side(const Identity& e, Side side, long n, const std::optional<Gauss>& param = std::nullopt) {
    if (!e.domain.admits(n)) throw VerifyError(e.id + ": n = " + std::to_string(n) + " is outside the domain");
    dsl::Bindings b{n, {}};
    if (e.param != ParamKind::none) {
        if (!param) throw VerifyError(e.id + ": parameter " + e.parameter_name() + " is required");
        if (e.param == ParamKind::amplitude && param->is_zero())
            throw VerifyError(e.id + ": parameter a must be nonzero");
        b.parameters[e.parameter_name()] = *param;
    } else if (param) {
        throw VerifyError(e.id + " takes no parameter");
    }
    return dsl::eval_expr(side == Side::lhs ? *e.expr.lhs : *e.expr.rhs, b);
}

/// Both sides at one n and parameter value.
inline PointResult verify(const Identity& e, long n, const std::optional<Gauss>& param = std::nullopt) {
    const Polynomial lhs = eval_side(e, Side::lhs, n, param);
    const Polynomial rhs = eval_side(e, Side::rhs, n, param);
    PointResult r;
    r.n = n;
    r.sample = param;
    r.pass = lhs == rhs;
    if (!r.pass) {
        r.lhs = lhs.str();
        r.rhs = rhs.str();
    }
    return r;
}

/// Degree-certified check of a parameterized entry at n: every sample must agree.
/// Returns the first failing sample, or a pass entry.
inline PointResult verify_parametric(const Identity& e, long n) {
    if (e.param == ParamKind::none) throw VerifyError(e.id + " has no parameter");
    PointResult last;
    for (const Gauss& s : parameter_samples(e.param, n)) {
        last = verify(e, n, s);
        if (!last.pass) return last;
    }
    last.sample.reset();
    return last;
}

inline PointResult verify_point(const Identity& e, long n) {
    return e.param == ParamKind::none ? verify(e, n) : verify_parametric(e, n);
}

/// The n that verify_range(e, n_max) visits: the domain, n <= n_max, and a size
/// cap of 2*n_max + 3 on the largest binomial row or index.
inline std::vector<long> admissible_range(const Identity& e, long n_max) {
    std::vector<long> ns;
    for (long n = e.domain.min_n; n <= n_max; ++n)
        if (e.domain.admits(n) && e.size.at(n) <= 2 * n_max + 3) ns.push_back(n);
    return ns;
}

inline IdentityReport verify_range(const Identity& e, long n_max) {
    const auto start = std::chrono::steady_clock::now();
    IdentityReport r;
    r.id = e.id;
    r.paper_eq = e.paper_eq;
    r.audit = e.audit;
    r.certificate = certificate_text(e.param);
    for (long n : admissible_range(e, n_max)) {
        r.n_tested.push_back(n);
        PointResult p = verify_point(e, n);
        if (!p.pass) r.failures.push_back(std::move(p));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline IdentityReport verify_range(std::string_view id, long n_max) { return verify_range(find_identity(id), n_max); }

/// Every catalog entry up to n_max; audit entries only when requested. Entries
/// run on worker threads and are reported in catalog order.
inline VerificationReport verify_all(long n_max, bool include_audit = false, unsigned threads = 0) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<const Identity*> todo;
    for (const auto& e : catalog())
        if (!e.audit || include_audit) todo.push_back(&e);

    std::vector<IdentityReport> results(todo.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(todo.size());
    auto worker = [&] {
        for (std::size_t k = next++; k < todo.size(); k = next++) {
            try {
                results[k] = verify_range(*todo[k], n_max);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, todo.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    VerificationReport report;
    report.identities = std::move(results);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Optional n = residue (mod modulus) filter for check_identity.
struct ResidueFilter {
    long residue = 0;
    long modulus = 1;
};

/// Parses an identity and checks it for every n in [n_from, n_to] passing the
/// filter. Evaluation errors are rethrown with the offending n.
inline IdentityReport check_identity(std::string_view text, long n_from, long n_to,
                                     const std::optional<ResidueFilter>& filter = std::nullopt) {
    if (filter && filter->modulus <= 0) throw VerifyError("--mod modulus must be positive");
    const auto start = std::chrono::steady_clock::now();
    const dsl::IdentityExpr id = dsl::parse_identity(text);
    IdentityReport r;
    r.id = std::string(text);
    r.paper_eq = "user";
    for (long n = n_from; n <= n_to; ++n) {
        if (filter) {
            const long m = filter->modulus;
            if ((((n - filter->residue) % m) + m) % m != 0) continue;
        }
        r.n_tested.push_back(n);
        Polynomial lhs;
        Polynomial rhs;
        try {
            lhs = dsl::eval_expr(*id.lhs, n);
            rhs = dsl::eval_expr(*id.rhs, n);
        } catch (const dsl::EvalError& err) {
            throw dsl::EvalError("at n = " + std::to_string(n) + ": " + err.what());
        }
        if (lhs != rhs) r.failures.push_back(PointResult{n, std::nullopt, false, lhs.str(), rhs.str()});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace bepoly
