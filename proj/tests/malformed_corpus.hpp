#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace bepoly::testing {

/// A string the parser must reject, and the byte offset the error must point at.
/// Errors at end of input point at the last character.
struct MalformedCase {
    std::string_view text;
    bool identity;  // parse as "lhs == rhs" rather than a single expression
    std::size_t offset;
};

inline const std::vector<MalformedCase>& malformed_corpus() {
    static const std::vector<MalformedCase> corpus = {
        {"B(n,z", false, 4},
        {"(z + 1", false, 5},
        {"z + 1)", false, 5},
        {"B(n)", false, 0},
        {"B(n,z,1)", false, 0},
        {"BN(n,1)", false, 0},
        {"EN()", false, 0},
        {"binom(n)", false, 0},
        {"floor(n,2,3)", false, 0},
        {"x + 1", false, 0},
        {"sum(k=0..n, j)", false, 12},
        {"sum(k=0.., z)", false, 7},
        {"sum(n=0..3, z)", false, 4},
        {"sum(k=0..n, sum(k=0..1, k))", false, 16},
        {"foo(z)", false, 0},
        {"z +", false, 2},
        {"* z", false, 0},
        {"", false, 0},
        {"z ^", false, 2},
        {"B(n,z) == ", true, 9},
        {"== z", true, 0},
        {"1 $ 2", false, 2},
        {"z z", false, 2},
        {"sum(k 0..n, k)", false, 6},
        {"sum(k=0..n k)", false, 11},
        {"sum(k=0..n, k", false, 12},
        {"2..3", false, 1},
        {"B + 1", false, 2},
        {"Z + 1", false, 0},
        {"z = 1", true, 2},
    };
    return corpus;
}

}  // namespace bepoly::testing
