#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace acutecube {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// Exact quotient; a non-zero remainder indicates an internal bug in the
// caller's counting argument, so it is a hard failure.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw std::logic_error("exact_div: non-exact division (" + num.str() + " / " + den.str() + ")");
    return q;
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt pow2(unsigned e) {
    BigInt one = 1;
    return one << e;
}

// binom(t, c) with arbitrary-precision t; the running product is divisible
// by i! after i factors, so the interleaved division stays exact.
inline BigInt binomial(const BigInt& t, unsigned c) {
    if (t < 0) throw std::invalid_argument("binomial: negative upper index");
    if (t < c) return 0;
    BigInt result = 1;
    for (unsigned i = 1; i <= c; ++i) {
        result *= t - (c - i);
        result /= i;
    }
    return result;
}

}  // namespace acutecube
