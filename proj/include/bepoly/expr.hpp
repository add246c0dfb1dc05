#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bepoly/rational.hpp"

namespace bepoly::dsl {

enum class ExprKind {
    int_lit,
    rat_lit,
    imag_unit,
    var_n,
    var_z,
    bound_var,
    b_poly,
    e_poly,
    b_num,
    e_num,
    binom,
    floor_div,
    pow,
    neg,
    add,
    sub,
    mul,
    div,
    sum,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable syntax-tree node.
///
/// Children by kind: b_poly/e_poly {index, argument}; b_num/e_num {index};
/// binom/floor_div/pow and the binary operators {left, right}; neg {operand};
/// sum {lower, upper, body} with the summation variable in `name`.
struct Expr {
    ExprKind kind = ExprKind::int_lit;
    Rational value;            // int_lit, rat_lit
    std::string name;          // bound_var, sum
    std::vector<ExprPtr> args;
    std::size_t offset = 0;    // source byte offset, informational only
};

inline ExprPtr make(ExprKind kind, std::vector<ExprPtr> args = {}, std::size_t offset = 0) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    e->offset = offset;
    return e;
}

inline ExprPtr int_lit(const BigInt& v, std::size_t offset = 0) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::int_lit;
    e->value = Rational(v);
    e->offset = offset;
    return e;
}

inline ExprPtr rat_lit(const Rational& v, std::size_t offset = 0) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::rat_lit;
    e->value = v;
    e->offset = offset;
    return e;
}

inline ExprPtr named(ExprKind kind, std::string name, std::vector<ExprPtr> args = {}, std::size_t offset = 0) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->name = std::move(name);
    e->args = std::move(args);
    e->offset = offset;
    return e;
}

/// Structural equality; source offsets are ignored.
inline bool same_structure(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.args.size() != b.args.size()) return false;
    for (std::size_t k = 0; k < a.args.size(); ++k)
        if (!same_structure(*a.args[k], *b.args[k])) return false;
    return true;
}

/// lhs == rhs
struct IdentityExpr {
    ExprPtr lhs;
    ExprPtr rhs;
};

namespace detail {

// Binding strength used by the renderer: sums and differences bind loosest,
// then products, negation, powers, and atoms.
inline int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::add:
        case ExprKind::sub: return 1;
        case ExprKind::mul:
        case ExprKind::div: return 2;
        case ExprKind::neg: return 3;
        case ExprKind::pow: return 4;
        case ExprKind::rat_lit: return 2;  // renders as p/q
        default: return 5;
    }
}

}  // namespace detail

/// Text that parses back to a structurally identical tree (rat_lit excepted,
/// which renders as a division of integer literals).
inline std::string render(const Expr& e) {
    using detail::precedence;
    auto wrap = [](const Expr& child, bool parens) {
        return parens ? "(" + render(child) + ")" : render(child);
    };
    const auto& a = e.args;
    switch (e.kind) {
        case ExprKind::int_lit: return e.value.str();
        case ExprKind::rat_lit: return e.value.str();
        case ExprKind::imag_unit: return "i";
        case ExprKind::var_n: return "n";
        case ExprKind::var_z: return "z";
        case ExprKind::bound_var: return e.name;
        case ExprKind::b_poly: return "B(" + render(*a[0]) + ", " + render(*a[1]) + ")";
        case ExprKind::e_poly: return "E(" + render(*a[0]) + ", " + render(*a[1]) + ")";
        case ExprKind::b_num: return "BN(" + render(*a[0]) + ")";
        case ExprKind::e_num: return "EN(" + render(*a[0]) + ")";
        case ExprKind::binom: return "binom(" + render(*a[0]) + ", " + render(*a[1]) + ")";
        case ExprKind::floor_div: return "floor(" + render(*a[0]) + ", " + render(*a[1]) + ")";
        case ExprKind::sum:
            return "sum(" + e.name + "=" + render(*a[0]) + ".." + render(*a[1]) + ", " + render(*a[2]) + ")";
        case ExprKind::neg: {
            const bool parens = precedence(a[0]->kind) < 3 || a[0]->value.sign() < 0;
            return "-" + wrap(*a[0], parens);
        }
        case ExprKind::pow: {
            // base: an atom; exponent: a negation or power is fine unparenthesized
            const bool base_parens = precedence(a[0]->kind) < 5 || a[0]->value.sign() < 0;
            const bool exp_parens = precedence(a[1]->kind) < 3;
            return wrap(*a[0], base_parens) + "^" + wrap(*a[1], exp_parens);
        }
        case ExprKind::add:
        case ExprKind::sub:
        case ExprKind::mul:
        case ExprKind::div: {
            const int p = precedence(e.kind);
            const char* op = e.kind == ExprKind::add ? " + "
                             : e.kind == ExprKind::sub ? " - "
                             : e.kind == ExprKind::mul ? "*" : "/";
            return wrap(*a[0], precedence(a[0]->kind) < p) + op + wrap(*a[1], precedence(a[1]->kind) <= p);
        }
    }
    return "?";
}

inline std::string render(const IdentityExpr& id) { return render(*id.lhs) + " == " + render(*id.rhs); }

}  // namespace bepoly::dsl
