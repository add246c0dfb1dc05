#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "bepoly/expr.hpp"
#include "bepoly/special_poly.hpp"

namespace bepoly::dsl {

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Values of the free symbols: n, plus any caller-supplied parameters.
struct Bindings {
    long n = 0;
    std::map<std::string, Gauss> parameters;
};

namespace detail {

class Evaluator {
public:
    explicit Evaluator(const Bindings& bindings) : bindings_(bindings) {}

    Polynomial eval(const Expr& e) {
        const auto& a = e.args;
        switch (e.kind) {
            case ExprKind::int_lit:
            case ExprKind::rat_lit: return Polynomial(e.value);
            case ExprKind::imag_unit: return Polynomial(Gauss::i());
            case ExprKind::var_n: return Polynomial(bindings_.n);
            case ExprKind::var_z: return Polynomial::z();
            case ExprKind::bound_var: {
                if (auto it = locals_.find(e.name); it != locals_.end()) return Polynomial(it->second);
                if (auto it = bindings_.parameters.find(e.name); it != bindings_.parameters.end())
                    return Polynomial(it->second);
                throw EvalError("unbound variable '" + e.name + "'");
            }
            case ExprKind::b_poly:
            case ExprKind::e_poly: {
                const long k = index(*a[0], e.kind == ExprKind::b_poly ? "B" : "E");
                const Polynomial arg = eval(*a[1]);
                if (arg.degree().value_or(0) > 1) throw EvalError("argument of B/E must be affine in z, got " + arg.str());
                const Family f = e.kind == ExprKind::b_poly ? Family::bernoulli : Family::euler;
                return family_poly_at(f, k, arg.coeff(1), arg.coeff(0));
            }
            case ExprKind::b_num: return Polynomial(bernoulli_number(index(*a[0], "BN")));
            case ExprKind::e_num: return Polynomial(Rational(euler_number(index(*a[0], "EN"))));
            case ExprKind::binom: {
                const BigInt top = integer(*a[0], "binom");
                const BigInt bottom = integer(*a[1], "binom");
                if (top < 0) throw EvalError("binom with negative upper argument " + top.get_str());
                if (bottom < 0 || bottom > top) return {};
                return Polynomial(Rational(binomial(to_long(top), to_long(bottom))));
            }
            case ExprKind::floor_div: {
                const BigInt num = integer(*a[0], "floor");
                const BigInt den = integer(*a[1], "floor");
                if (den == 0) throw EvalError("floor with zero divisor");
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                return Polynomial(Rational(q));
            }
            case ExprKind::pow: {
                const long exponent = to_long(integer(*a[1], "exponent"));
                Polynomial base = eval(*a[0]);
                if (exponent < 0) {
                    if (!base.is_constant()) throw EvalError("negative power of non-constant " + base.str());
                    if (base.is_zero()) throw EvalError("zero raised to a negative power");
                }
                return pow(base, exponent);
            }
            case ExprKind::neg: return -eval(*a[0]);
            case ExprKind::add: return eval(*a[0]) + eval(*a[1]);
            case ExprKind::sub: return eval(*a[0]) - eval(*a[1]);
            case ExprKind::mul: {
                Polynomial left = eval(*a[0]);
                if (left.is_zero()) return left;
                return left * eval(*a[1]);
            }
            case ExprKind::div: {
                const Polynomial divisor = eval(*a[1]);
                if (!divisor.is_constant()) throw EvalError("division by non-constant " + divisor.str());
                if (divisor.is_zero()) throw EvalError("division by zero");
                return eval(*a[0]) * divisor.constant_value().inverse();
            }
            case ExprKind::sum: {
                const long lo = to_long(integer(*a[0], "sum bound"));
                const long hi = to_long(integer(*a[1], "sum bound"));
                Polynomial acc;
                auto [slot, inserted] = locals_.try_emplace(e.name, Gauss());
                if (!inserted) throw EvalError("summation variable '" + e.name + "' shadows an outer one");
                try {
                    for (long k = lo; k <= hi; ++k) {
                        locals_[e.name] = Gauss(k);
                        acc += eval(*a[2]);
                    }
                } catch (...) {
                    locals_.erase(e.name);
                    throw;
                }
                locals_.erase(e.name);
                return acc;
            }
        }
        throw EvalError("unknown node kind");
    }

private:
    BigInt integer(const Expr& e, const char* what) {
        const Polynomial p = eval(e);
        if (!p.is_constant()) throw EvalError(std::string(what) + " must be an integer constant, got " + p.str());
        const Gauss c = p.coeff(0);
        if (!c.is_real() || !c.re().is_integer())
            throw EvalError(std::string(what) + " must be an integer, got " + c.str());
        return c.re().numerator();
    }

    long index(const Expr& e, const char* what) {
        const BigInt v = integer(e, what);
        if (v < 0) throw EvalError(std::string(what) + " index must be nonnegative, got " + v.get_str());
        return to_long(v);
    }

    const Bindings& bindings_;
    std::map<std::string, Gauss> locals_;
};

}  // namespace detail

/// Reduces an expression to an exact polynomial in z over Q(i).
inline Polynomial eval_expr(const Expr& e, const Bindings& bindings) {
    try {
        return detail::Evaluator(bindings).eval(e);
    } catch (const DomainError& err) {
        throw EvalError(err.what());
    }
}

inline Polynomial eval_expr(const Expr& e, long n) { return eval_expr(e, Bindings{n, {}}); }

}  // namespace bepoly::dsl
