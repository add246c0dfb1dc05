// Command-line front end: exact Bernoulli/Euler values, catalog verification,
// user identities and the generating-function kernel checks.
//
// Exit codes: 0 all verified, 1 at least one identity failed, 2 usage or parse error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bepoly/bepoly.hpp"

namespace {

constexpr int kVerified = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bepoly::Gauss parse_point(const std::string& text) {
    const auto e = bepoly::dsl::parse_expr(text);
    const bepoly::Polynomial p = bepoly::dsl::eval_expr(*e, 0);
    if (!p.is_constant()) throw UsageError("point must be a constant, got " + p.str());
    return p.constant_value();
}

long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

std::pair<long, long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like FROM..TO, got '" + s + "'");
    return {parse_long(s.substr(0, dots)), parse_long(s.substr(dots + 2))};
}

bepoly::ResidueFilter parse_mod(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--mod must look like R,M, got '" + s + "'");
    bepoly::ResidueFilter f{parse_long(s.substr(0, comma)), parse_long(s.substr(comma + 1))};
    if (f.modulus <= 0) throw UsageError("--mod modulus must be positive");
    return f;
}

void print_poly(const bepoly::Polynomial& p, const std::optional<std::string>& at) {
    if (at) {
        std::cout << p.eval(parse_point(*at)).str() << '\n';
    } else {
        std::cout << p.str() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bernoulli and Euler polynomials and identity verification"};
    app.require_subcommand(1);

    long index = 0;
    std::optional<std::string> at;

    auto* bn = app.add_subcommand("bn", "print the Bernoulli number B_N");
    bn->add_option("N", index)->required()->check(CLI::NonNegativeNumber);
    auto* en = app.add_subcommand("en", "print the Euler number E_N");
    en->add_option("N", index)->required()->check(CLI::NonNegativeNumber);
    auto* bpoly = app.add_subcommand("bpoly", "print B_N(z), or its value at a point");
    bpoly->add_option("N", index)->required()->check(CLI::NonNegativeNumber);
    bpoly->add_option("--at", at, "point such as 1/4 or 1/2+3/4*i");
    auto* epoly = app.add_subcommand("epoly", "print E_N(z), or its value at a point");
    epoly->add_option("N", index)->required()->check(CLI::NonNegativeNumber);
    epoly->add_option("--at", at, "point such as 1/4 or 1/2+3/4*i");

    std::string target;
    long n_max = 24;
    bool json = false;
    bool include_audit = false;
    auto* verify = app.add_subcommand("verify", "verify catalog identities");
    verify->add_option("ID", target, "identity id, or 'all'")->required();
    verify->add_option("--n-max", n_max, "largest n to test")->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", json, "emit the structured report");
    verify->add_flag("--include-audit", include_audit, "also report audit-only entries");

    std::string text;
    std::string range;
    std::optional<std::string> mod;
    auto* check = app.add_subcommand("check", "verify an identity written in the identity language");
    check->add_option("IDENTITY", text, "e.g. \"B(n, 1 - z) == (-1)^n*B(n, z)\"")->required();
    check->add_option("--n", range, "range FROM..TO")->required();
    check->add_option("--mod", mod, "only n = R (mod M), given as R,M");
    check->add_flag("--json", json, "emit the structured report");

    long order = 16;
    auto* kernels = app.add_subcommand("kernels", "check the generating-function kernel identities");
    kernels->add_option("--order", order, "series truncation order")->check(CLI::NonNegativeNumber);

    long terms = 10000;
    long zeta_n_max = 6;
    auto* zeta = app.add_subcommand("zeta-check", "floating-point zeta(2n) sanity report");
    zeta->add_option("--n-max", zeta_n_max)->check(CLI::PositiveNumber);
    zeta->add_option("--terms", terms)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*bn) {
            std::cout << bepoly::bernoulli_number(index).str() << '\n';
            return kVerified;
        }
        if (*en) {
            std::cout << bepoly::euler_number(index).get_str() << '\n';
            return kVerified;
        }
        if (*bpoly) {
            print_poly(bepoly::bernoulli_poly(index), at);
            return kVerified;
        }
        if (*epoly) {
            print_poly(bepoly::euler_poly(index), at);
            return kVerified;
        }
        if (*verify) {
            bepoly::VerificationReport report;
            if (target == "all") {
                report = bepoly::verify_all(n_max, include_audit);
            } else {
                const auto& entry = bepoly::find_identity(target);
                report.identities.push_back(bepoly::verify_range(entry, n_max));
            }
            if (json) {
                std::cout << bepoly::to_json(report).dump(2) << '\n';
            } else {
                std::cout << bepoly::to_text(report);
            }
            return report.passed() ? kVerified : kFailed;
        }
        if (*check) {
            const auto [from, to] = parse_range(range);
            std::optional<bepoly::ResidueFilter> filter;
            if (mod) filter = parse_mod(*mod);
            const bepoly::IdentityReport r = bepoly::check_identity(text, from, to, filter);
            if (json) {
                std::cout << bepoly::to_json(r).dump(2) << '\n';
            } else {
                std::cout << bepoly::to_text(r);
            }
            return r.passed() ? kVerified : kFailed;
        }
        if (*kernels) {
            bool all = true;
            const bepoly::Gauss samples[] = {bepoly::Gauss(1), bepoly::Gauss(2),
                                             bepoly::Gauss(bepoly::Rational(1), bepoly::Rational(1))};
            for (bepoly::Kernel k : bepoly::all_kernels) {
                if (k == bepoly::Kernel::k2_19) {
                    for (const auto& a : samples) {
                        const bool ok = bepoly::verify_kernel(k, static_cast<std::size_t>(order), a);
                        all = all && ok;
                        std::cout << (ok ? "PASS " : "FAIL ") << bepoly::kernel_name(k) << " a = " << a.str() << '\n';
                    }
                } else {
                    const bool ok = bepoly::verify_kernel(k, static_cast<std::size_t>(order));
                    all = all && ok;
                    std::cout << (ok ? "PASS " : "FAIL ") << bepoly::kernel_name(k) << '\n';
                }
            }
            return all ? kVerified : kFailed;
        }
        if (*zeta) {
            for (long n = 1; n <= zeta_n_max; ++n) {
                const auto r = bepoly::zeta_sanity(n, terms);
                std::printf("n = %ld  B_%ld = %.17g  formula = %.17g  relative error = %.3e\n", n, 2 * n,
                            r.exact_value, r.formula_value, r.relative_error);
            }
            return kVerified;
        }
    } catch (const bepoly::dsl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const bepoly::dsl::EvalError& e) {
        std::cerr << "evaluation error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const bepoly::VerifyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const bepoly::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
