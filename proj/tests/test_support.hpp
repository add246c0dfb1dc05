#pragma once

#include <random>
#include <vector>

#include "bepoly/bepoly.hpp"

namespace bepoly::testing {

/// Small random rationals and Gaussian rationals for property tests.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational() { return Rational(integer(-9, 9), integer(1, 7)); }

    Gauss gauss() { return Gauss(rational(), integer(0, 2) == 0 ? Rational(0) : rational()); }

    Gauss nonzero_gauss() {
        for (;;) {
            Gauss g = gauss();
            if (!g.is_zero()) return g;
        }
    }

    Polynomial poly(long max_degree) {
        std::vector<Gauss> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
        for (auto& x : c) x = gauss();
        return Polynomial(std::move(c));
    }

private:
    std::mt19937 rng_;
};

}  // namespace bepoly::testing
