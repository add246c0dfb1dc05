#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bepoly/expr.hpp"

namespace bepoly::dsl {

/// Syntax or binding error with its source position (1-based line/column).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::size_t line, std::size_t column, std::string message,
               std::vector<std::string> expected)
        : std::runtime_error(format(line, column, message, expected)),
          offset_(offset),
          line_(line),
          column_(column),
          message_(std::move(message)),
          expected_(std::move(expected)) {}

    [[nodiscard]] std::size_t offset() const { return offset_; }
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }
    [[nodiscard]] const std::string& message() const { return message_; }
    [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& message,
                              const std::vector<std::string>& expected) {
        std::string s = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
        if (!expected.empty()) {
            s += " (expected ";
            for (std::size_t k = 0; k < expected.size(); ++k) s += (k ? ", " : "") + expected[k];
            s += ")";
        }
        return s;
    }

    std::size_t offset_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::vector<std::string> expected_;
};

namespace detail {

enum class Tok { end, integer, ident, plus, minus, star, slash, caret, lparen, rparen, comma, assign, dotdot, eqeq };

inline const char* tok_text(Tok t) {
    switch (t) {
        case Tok::end: return "end of input";
        case Tok::integer: return "integer";
        case Tok::ident: return "identifier";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::caret: return "'^'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::assign: return "'='";
        case Tok::dotdot: return "'..'";
        case Tok::eqeq: return "'=='";
    }
    return "?";
}

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t offset = 0;
};

class Parser {
public:
    Parser(std::string_view text, std::set<std::string> parameters)
        : text_(text), parameters_(std::move(parameters)) {
        tokenize();
    }

    IdentityExpr identity() {
        ExprPtr lhs = expr();
        expect(Tok::eqeq);
        ExprPtr rhs = expr();
        expect(Tok::end);
        return {std::move(lhs), std::move(rhs)};
    }

    ExprPtr single() {
        ExprPtr e = expr();
        expect(Tok::end);
        return e;
    }

private:
    [[noreturn]] void fail(std::size_t offset, const std::string& message, std::vector<std::string> expected = {}) const {
        offset = std::min(offset, text_.empty() ? 0 : text_.size() - 1);
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t k = 0; k < offset && k < text_.size(); ++k) {
            if (text_[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(offset, line, column, message, std::move(expected));
    }

    void tokenize() {
        std::size_t k = 0;
        while (k < text_.size()) {
            const char c = text_[k];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++k;
                continue;
            }
            Token t;
            t.offset = k;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = k;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                t.kind = Tok::integer;
                t.text = std::string(text_.substr(k, j - k));
                k = j;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t j = k;
                while (j < text_.size() && std::isalnum(static_cast<unsigned char>(text_[j]))) ++j;
                t.kind = Tok::ident;
                t.text = std::string(text_.substr(k, j - k));
                k = j;
            } else if (text_.substr(k, 2) == "..") {
                t.kind = Tok::dotdot;
                k += 2;
            } else if (text_.substr(k, 2) == "==") {
                t.kind = Tok::eqeq;
                k += 2;
            } else {
                switch (c) {
                    case '+': t.kind = Tok::plus; break;
                    case '-': t.kind = Tok::minus; break;
                    case '*': t.kind = Tok::star; break;
                    case '/': t.kind = Tok::slash; break;
                    case '^': t.kind = Tok::caret; break;
                    case '(': t.kind = Tok::lparen; break;
                    case ')': t.kind = Tok::rparen; break;
                    case ',': t.kind = Tok::comma; break;
                    case '=': t.kind = Tok::assign; break;
                    default: fail(k, std::string("unexpected character '") + c + "'");
                }
                ++k;
            }
            tokens_.push_back(std::move(t));
        }
        tokens_.push_back(Token{Tok::end, "", text_.size()});
    }

    [[nodiscard]] const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok k) {
        if (peek().kind != k) fail(peek().offset, std::string("unexpected ") + describe(peek()), {tok_text(k)});
        return advance();
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::integer || t.kind == Tok::ident) return "'" + t.text + "'";
        return tok_text(t.kind);
    }

    static bool starts_operand(Tok k) {
        return k == Tok::integer || k == Tok::ident || k == Tok::lparen || k == Tok::minus;
    }

    // expr := term (("+"|"-") term)*
    ExprPtr expr() {
        ExprPtr left = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = advance();
            ExprPtr right = term();
            left = make(op.kind == Tok::plus ? ExprKind::add : ExprKind::sub, {left, right}, op.offset);
        }
        return left;
    }

    // term := factor (("*"|"/") factor)*
    ExprPtr term() {
        ExprPtr left = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token& op = advance();
            ExprPtr right = factor();
            left = make(op.kind == Tok::star ? ExprKind::mul : ExprKind::div, {left, right}, op.offset);
        }
        return left;
    }

    // factor := "-" factor | power ;  power := atom ("^" factor)?
    // so -2^2 is -(2^2), 2^-1 is allowed and 2^3^2 is 2^(3^2).
    ExprPtr factor() {
        if (peek().kind == Tok::minus) {
            const std::size_t at = advance().offset;
            return make(ExprKind::neg, {factor()}, at);
        }
        ExprPtr base = atom();
        if (peek().kind == Tok::caret) {
            const std::size_t at = advance().offset;
            return make(ExprKind::pow, {base, factor()}, at);
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::integer: {
                advance();
                return int_lit(BigInt(t.text), t.offset);
            }
            case Tok::lparen: {
                advance();
                ExprPtr inner = expr();
                expect(Tok::rparen);
                return inner;
            }
            case Tok::ident: return identifier();
            default:
                fail(t.offset, "unexpected " + describe(t), {"integer", "identifier", "'('", "'-'"});
        }
    }

    ExprPtr identifier() {
        const Token t = advance();
        const std::string& s = t.text;
        const bool call = peek().kind == Tok::lparen;
        if (s == "B" || s == "E") {
            auto args = call_args(t, 2);
            return make(s == "B" ? ExprKind::b_poly : ExprKind::e_poly, std::move(args), t.offset);
        }
        if (s == "BN" || s == "EN") {
            auto args = call_args(t, 1);
            return make(s == "BN" ? ExprKind::b_num : ExprKind::e_num, std::move(args), t.offset);
        }
        if (s == "binom" || s == "floor") {
            auto args = call_args(t, 2);
            return make(s == "binom" ? ExprKind::binom : ExprKind::floor_div, std::move(args), t.offset);
        }
        if (s == "sum") return sum(t);
        if (call) fail(t.offset, "unknown function '" + s + "'");
        if (s == "i") return make(ExprKind::imag_unit, {}, t.offset);
        if (s == "n") return make(ExprKind::var_n, {}, t.offset);
        if (s == "z") return make(ExprKind::var_z, {}, t.offset);
        if (!is_lower_ident(s)) fail(t.offset, "invalid identifier '" + s + "'");
        if (std::find(scope_.begin(), scope_.end(), s) == scope_.end() && !parameters_.contains(s))
            fail(t.offset, "unbound identifier '" + s + "'");
        return named(ExprKind::bound_var, s, {}, t.offset);
    }

    static bool is_lower_ident(const std::string& s) {
        if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
        return std::all_of(s.begin(), s.end(), [](char c) {
            return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
        });
    }

    std::vector<ExprPtr> call_args(const Token& callee, std::size_t arity) {
        if (peek().kind != Tok::lparen) fail(peek().offset, "'" + callee.text + "' must be called", {"'('"});
        advance();
        std::vector<ExprPtr> args;
        if (peek().kind != Tok::rparen) {
            args.push_back(expr());
            while (accept(Tok::comma)) args.push_back(expr());
        }
        const Token& close = peek();
        if (close.kind != Tok::rparen) fail(close.offset, "unexpected " + describe(close), {"','", "')'"});
        if (args.size() != arity)
            fail(callee.offset, "'" + callee.text + "' takes " + std::to_string(arity) + " argument" +
                                    (arity == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
        advance();
        return args;
    }

    // sum(IDENT = expr .. expr, expr)
    ExprPtr sum(const Token& callee) {
        expect(Tok::lparen);
        const Token& var = peek();
        if (var.kind != Tok::ident) fail(var.offset, "expected summation variable", {"identifier"});
        if (!is_lower_ident(var.text) || var.text == "i" || var.text == "n" || var.text == "z" ||
            var.text == "sum" || var.text == "binom" || var.text == "floor")
            fail(var.offset, "'" + var.text + "' cannot be a summation variable");
        if (std::find(scope_.begin(), scope_.end(), var.text) != scope_.end() || parameters_.contains(var.text))
            fail(var.offset, "'" + var.text + "' is already bound");
        const std::string name = advance().text;
        expect(Tok::assign);
        ExprPtr lo = expr();
        const Token& dots = expect(Tok::dotdot);
        if (!starts_operand(peek().kind)) fail(dots.offset, "missing upper bound after '..'", {"expression"});
        ExprPtr hi = expr();
        expect(Tok::comma);
        scope_.push_back(name);
        ExprPtr body = expr();
        scope_.pop_back();
        expect(Tok::rparen);
        return named(ExprKind::sum, name, {lo, hi, body}, callee.offset);
    }

    std::string_view text_;
    std::set<std::string> parameters_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::string> scope_;
};

}  // namespace detail

/// Parses "lhs == rhs". `parameters` names extra free identifiers the caller
/// will bind at evaluation time (e.g. a sampled parameter).
inline IdentityExpr parse_identity(std::string_view text, std::set<std::string> parameters = {}) {
    return detail::Parser(text, std::move(parameters)).identity();
}

/// Parses a single expression (no "==").
inline ExprPtr parse_expr(std::string_view text, std::set<std::string> parameters = {}) {
    return detail::Parser(text, std::move(parameters)).single();
}

}  // namespace bepoly::dsl
