#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace priordan {

// Exact arbitrary-precision integer used by every counting routine.
using Integer = boost::multiprecision::cpp_int;

inline Integer ipow(Integer base, unsigned exp) {
    Integer r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

} // namespace priordan
