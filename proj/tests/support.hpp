#pragma once

#include "eulertri/triangle.hpp"

#include <vector>

namespace eulertri::testing {

inline std::vector<Rational> ints(std::initializer_list<long> values) {
    return {values.begin(), values.end()};
}

inline std::vector<Rational> row_of(const Triangle& t, std::size_t n) {
    const auto r = t.row(n);
    return {r.begin(), r.end()};
}

inline TriangleParams params(long a0, long a1, long a2, long b0, long b1, long b2, long c, long d) {
    TriangleParams p;
    p.a0 = a0;
    p.a1 = a1;
    p.a2 = a2;
    p.b0 = b0;
    p.b1 = b1;
    p.b2 = b2;
    p.c = c;
    p.d = d;
    return p;
}

}  // namespace eulertri::testing
