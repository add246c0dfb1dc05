// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "bepoly/bepoly.hpp"
#include "cli_runner.hpp"
#include "malformed_corpus.hpp"

using namespace bepoly;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail = what;
        pass = false;
    }
};

Polynomial poly(std::initializer_list<Rational> ascending) {
    std::vector<Gauss> c;
    for (const auto& r : ascending) c.emplace_back(r);
    return Polynomial(std::move(c));
}

Outcome full_sweep() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport r = verify_all(32);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t points = 0;
    for (const auto& i : r.identities) {
        points += i.n_tested.size();
        o.require(i.passed(), i.id + " failed");
    }
    o.require(find_identity("T3.4d").size.at(admissible_range(find_identity("T3.4d"), 32).back()) == 67,
              "T3.4 range does not reach 4n+3 = 67");
    o.require(secs < 60, "took " + std::to_string(secs) + " s");
    if (o.pass) {
        std::ostringstream s;
        s.precision(3);
        s << r.identities.size() << " identities, " << points << " points, " << std::fixed << secs << " s";
        o.detail = s.str();
    }
    return o;
}

Outcome oracle_agreement() {
    Outcome o;
    const SeriesZ bgf = bernoulli_gf(24);
    const SeriesZ egf = euler_gf(24);
    for (long n = 0; n <= 24; ++n) {
        const Gauss nf(Rational(factorial(n)));
        const auto k = static_cast<std::size_t>(n);
        o.require(bernoulli_poly(n) == bernoulli_poly_oracle(n), "B oracle n=" + std::to_string(n));
        o.require(bernoulli_poly(n) == bgf[k] * nf, "B gf n=" + std::to_string(n));
        o.require(euler_poly(n) == euler_poly_oracle(n), "E oracle n=" + std::to_string(n));
        o.require(euler_poly(n) == egf[k] * nf, "E gf n=" + std::to_string(n));
    }
    for (long n = 1; n <= 12; ++n)
        o.require(Rational(euler_number(2 * n)) == euler_number_via_quarter(n), "E quarter n=" + std::to_string(n));
    return o;
}

Outcome ground_truth() {
    Outcome o;
    const std::vector<Rational> bn = {1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30)};
    const std::vector<long> en = {1, 0, -1, 0, 5};
    for (long n = 0; n <= 4; ++n) {
        o.require(bernoulli_number(n) == bn[static_cast<std::size_t>(n)], "B_" + std::to_string(n));
        o.require(euler_number(n) == en[static_cast<std::size_t>(n)], "E_" + std::to_string(n));
    }
    const std::vector<Polynomial> bp = {poly({1}), poly({Rational(-1, 2), 1}), poly({Rational(1, 6), -1, 1}),
                                        poly({0, Rational(1, 2), Rational(-3, 2), 1})};
    const std::vector<Polynomial> ep = {poly({1}), poly({Rational(-1, 2), 1}), poly({0, -1, 1}),
                                        poly({Rational(1, 4), 0, Rational(-3, 2), 1})};
    for (long n = 0; n <= 3; ++n) {
        o.require(bernoulli_poly(n) == bp[static_cast<std::size_t>(n)], "B_" + std::to_string(n) + "(z)");
        o.require(euler_poly(n) == ep[static_cast<std::size_t>(n)], "E_" + std::to_string(n) + "(z)");
    }
    return o;
}

Outcome known_values() {
    Outcome o;
    std::size_t points = 0;
    for (const auto& e : catalog()) {
        if (!e.id.starts_with("KV.") && !e.id.starts_with("N4.")) continue;
        const long top = e.id == "N4.6" ? 29 : 20;
        for (long n = e.domain.min_n; n <= top; ++n) {
            if (!e.domain.admits(n)) continue;
            ++points;
            o.require(verify(e, n).pass, e.id + " n=" + std::to_string(n));
        }
    }
    if (o.pass) o.detail = std::to_string(points) + " points";
    return o;
}

Outcome kernels() {
    Outcome o;
    for (Kernel k : all_kernels) {
        if (k == Kernel::k2_19) {
            for (const Gauss& a : {Gauss(1), Gauss(2), Gauss(Rational(1), Rational(1))})
                o.require(verify_kernel(k, 16, a), "K2.19 a=" + a.str());
        } else {
            o.require(verify_kernel(k, 16), std::string(kernel_name(k)));
        }
    }
    return o;
}

Outcome parametric() {
    Outcome o;
    for (const char* id : {"T2.5a", "T2.5b"}) {
        const Identity& e = find_identity(id);
        for (long n = 0; n <= 20; ++n) {
            const auto samples = parameter_samples(e.param, n);
            o.require(samples.size() == static_cast<std::size_t>(n + 2), std::string(id) + " sample count");
            for (const Gauss& a : samples) o.require(verify(e, n, a).pass, std::string(id) + " n=" + std::to_string(n));
        }
        o.require(!verify_range(e, 20).certificate.empty(), std::string(id) + " has no certificate");
    }
    return o;
}

Outcome zeta() {
    Outcome o;
    std::ostringstream s;
    s.precision(3);
    for (long n = 1; n <= 6; ++n) {
        const ZetaReport r = zeta_sanity(n, 10000);
        s << (n > 1 ? ", " : "") << "n=" << n << " " << std::scientific << r.relative_error;
        o.require(r.relative_error < 1e-6, "");
    }
    o.detail = "relative errors " + s.str();
    return o;
}

Outcome audit() {
    Outcome o;
    const Identity& n44 = find_identity("N4.4");
    for (long n = 0; n <= 12; ++n) o.require(verify(n44, n).pass, "N4.4 n=" + std::to_string(n));
    std::string passing;
    std::string failing;
    const Identity& abs1 = find_identity("ABS.1");
    for (long n = abs1.domain.min_n; n <= 12; ++n)
        (verify(abs1, n).pass ? passing : failing) += " " + std::to_string(n);
    if (o.pass) o.detail = "N4.4 exact for n <= 12; ABS.1 holds at n =" + passing + "; fails at n =" + failing;
    return o;
}

Outcome dsl_conformance(const std::string& cli, const std::string& golden) {
    Outcome o;
    for (const auto& e : catalog()) {
        try {
            const auto parsed = dsl::parse_identity(e.canonical, e.parameter_names());
            const auto back = dsl::parse_identity(dsl::render(parsed), e.parameter_names());
            o.require(dsl::same_structure(*parsed.lhs, *back.lhs) && dsl::same_structure(*parsed.rhs, *back.rhs),
                      e.id + " round trip");
            Identity copy = e;
            copy.expr = back;
            for (long n : admissible_range(e, 12))
                o.require(verify_point(copy, n).pass == verify_point(e, n).pass, e.id + " verdict n=" + std::to_string(n));
        } catch (const std::exception& err) {
            o.require(false, e.id + ": " + err.what());
        }
    }
    for (const auto& c : testing::malformed_corpus()) {
        try {
            if (c.identity)
                (void)dsl::parse_identity(c.text);
            else
                (void)dsl::parse_expr(c.text);
            o.require(false, "accepted malformed input '" + std::string(c.text) + "'");
        } catch (const dsl::ParseError& err) {
            o.require(err.offset() == c.offset, "wrong position for '" + std::string(c.text) + "'");
        }
    }
    for (const auto& step : testing::golden_script()) {
        const auto r = testing::run_cli(cli, step.args);
        o.require(r.exit_code == step.exit_code, std::string("exit code of '") + step.args + "'");
        if (step.golden)
            o.require(r.out == testing::read_file(golden + "/" + step.golden),
                      std::string("golden output of '") + step.args + "'");
    }
    if (o.pass)
        o.detail = std::to_string(catalog().size()) + " canonical strings, " +
                   std::to_string(testing::malformed_corpus().size()) + " malformed inputs, " +
                   std::to_string(testing::golden_script().size()) + " CLI steps";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : BEPOLY_CLI_PATH;
    const std::string golden = argc > 2 ? argv[2] : BEPOLY_GOLDEN_DIR;

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"full catalog sweep to n = 32", full_sweep},
        {"Bernoulli/Euler oracle agreement", oracle_agreement},
        {"ground-truth numbers and polynomials", ground_truth},
        {"known values and number identities", known_values},
        {"kernel identities to order 16", kernels},
        {"parametric certification", parametric},
        {"zeta sanity with 10^4 terms", zeta},
        {"N4.4 exact, ABS.1 audited", audit},
        {"DSL conformance and CLI contract", [&] { return dsl_conformance(cli, golden); }},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& err) {
            o.pass = false;
            o.detail = std::string("exception: ") + err.what();
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << k + 1 << ". " << criteria[k].first;
        if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
        std::cout << '\n';
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
