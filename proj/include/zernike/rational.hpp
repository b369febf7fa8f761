#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

namespace zern {

using BigInt = boost::multiprecision::cpp_int;
// Always reduced, denominator positive, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

struct InvalidIndexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OutOfRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

inline BigInt factorial(int n) {
    if (n < 0) throw OutOfRangeError("factorial of negative integer");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// binom(n, k) over integers; 0 outside the triangle so sums can run free.
inline BigInt binomial(const BigInt& n, int k) {
    if (k < 0) return 0;
    if (n >= 0 && BigInt(k) > n) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

// Generalized binomial binom(x, k) = x(x-1)...(x-k+1)/k! for rational x.
inline Rational binomial_gen(const Rational& x, int k) {
    if (k < 0) return 0;
    Rational num = 1;
    for (int i = 0; i < k; ++i) num *= x - i;
    return num / Rational(factorial(k));
}

// Pochhammer (x)_n = x(x+1)...(x+n-1).
inline Rational pochhammer(const Rational& x, int n) {
    if (n < 0) throw OutOfRangeError("pochhammer with negative length");
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= x + i;
    return r;
}

inline BigInt ipow(const BigInt& b, int e) {
    BigInt r = 1, x = b;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r *= x;
        if (k > 1) x *= x;
    }
    return r;
}

inline int parity_sign(long long n) { return (n % 2 == 0) ? 1 : -1; }

} // namespace zern
