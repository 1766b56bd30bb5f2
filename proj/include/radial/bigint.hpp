#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace radial {

/// Exact signed integer of unbounded size. Every coefficient in the
/// library is an integer polynomial in N, so no other scalar type exists.
using Int = boost::multiprecision::cpp_int;

inline Int int_pow(Int base, unsigned exp)
{
    Int r = 1;
    while (exp--)
        r *= base;
    return r;
}

} // namespace radial
