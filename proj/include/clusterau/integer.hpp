#pragma once

// Integer types shared by every module.
//
// Exponents of coefficient monomials and polynomial coefficients are
// arbitrary precision. Exchange-matrix entries, arrow multiplicities and
// Laurent exponent keys are machine integers with checked arithmetic:
// overflow raises std::overflow_error instead of wrapping.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace clusterau {

using BigInt = boost::multiprecision::cpp_int;
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) {
    return checked_mul(a, -1);
}

inline Int to_machine(const BigInt& v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw std::overflow_error("exponent " + v.str() + " does not fit in 64 bits");
    return static_cast<Int>(v);
}

}  // namespace clusterau
