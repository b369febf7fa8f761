#pragma once

#include "zernike/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace zern {

// Splits n = outside^2 * core with core squarefree, by trial division.
std::pair<BigInt, BigInt> normalize_radicand(const BigInt& n);

// Finite sum q_k * sqrt(k) over squarefree k >= 1 with rational q_k.
// Radicand 1 holds the purely rational part. Canonical form: no zero
// coefficients, every stored radicand squarefree.
class SurdSum {
  public:
    SurdSum() = default;
    SurdSum(const Rational& q);   // NOLINT: rational converts implicitly
    SurdSum(long long q) : SurdSum(Rational(q)) {}

    // q * sqrt(n), n >= 1 arbitrary (gets normalized).
    static SurdSum sqrt_term(const Rational& q, const BigInt& n);
    // sqrt(a/b) for a/b >= 0, as sqrt(a*b)/b.
    static SurdSum sqrt_rational(const Rational& x);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_part() const;
    // Coefficient of sqrt(k); zero if absent.
    Rational coeff(long long radicand) const;

    const std::map<long long, Rational>& terms() const { return terms_; }

    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
    SurdSum& operator*=(const SurdSum& o);
    SurdSum& operator*=(const Rational& q);
    SurdSum operator-() const;

    friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
    friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
    friend SurdSum operator*(SurdSum a, const SurdSum& b) { return a *= b; }
    friend SurdSum operator*(SurdSum a, const Rational& q) { return a *= q; }
    friend SurdSum operator*(const Rational& q, SurdSum a) { return a *= q; }
    friend bool operator==(const SurdSum& a, const SurdSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SurdSum& a, const SurdSum& b) { return !(a == b); }

    // Division by a single-term surd q*sqrt(k); throws on zero divisor or
    // multi-term divisors (general surd inversion is out of scope).
    SurdSum divided_by_term(const SurdSum& divisor) const;

    double to_double() const;

    // Canonical text: "q" or "q*k^(1/2)", terms joined by " +"/" -",
    // ascending radicand; "0" when empty.
    std::string to_string() const;

  private:
    void add_term(long long radicand, const Rational& q);
    std::map<long long, Rational> terms_;
};

// Pair (re, im); coefficients of 3D expansions carry the imaginary unit.
struct ComplexSurd {
    SurdSum re, im;

    ComplexSurd() = default;
    ComplexSurd(SurdSum r) : re(std::move(r)) {}
    ComplexSurd(SurdSum r, SurdSum i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    ComplexSurd conj() const { return {re, -im}; }

    ComplexSurd& operator+=(const ComplexSurd& o);
    ComplexSurd& operator-=(const ComplexSurd& o);
    ComplexSurd& operator*=(const ComplexSurd& o);
    friend ComplexSurd operator+(ComplexSurd a, const ComplexSurd& b) { return a += b; }
    friend ComplexSurd operator-(ComplexSurd a, const ComplexSurd& b) { return a -= b; }
    friend ComplexSurd operator*(ComplexSurd a, const ComplexSurd& b) { return a *= b; }
    friend bool operator==(const ComplexSurd& a, const ComplexSurd& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexSurd& a, const ComplexSurd& b) { return !(a == b); }

    // "a" / "a +i*b" style; imaginary terms carry an i* factor.
    std::string to_string() const;
};

SurdSum complex_conj_part(const ComplexSurd& z);  // convenience: z.conj().im

// High-precision conversion. |result - exact| <= 2^(1-precision_bits)*|exact|
// for precision_bits up to ~300 (computed in 100-decimal-digit binary floats).
double surd_to_double(const SurdSum& a);
std::string surd_to_float_string(const SurdSum& a, int precision_bits);

} // namespace zern
