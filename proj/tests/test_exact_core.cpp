#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zernike/surd.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace zern;

namespace {

// Independent oracle: factor out the largest square by brute-force descent.
std::pair<BigInt, BigInt> squarefree_split_brute(long long n) {
    long long outside = 1;
    for (long long d = 2; d * d <= n; ++d) {
        while (n % (d * d) == 0) {
            n /= d * d;
            outside *= d;
        }
    }
    return {BigInt(outside), BigInt(n)};
}

SurdSum random_surd(std::mt19937& rng) {
    static const long long rads[] = {1, 2, 3, 5, 6, 7, 10, 15};
    std::uniform_int_distribution<int> nterms(0, 3), num(-6, 6), den(1, 5), pick(0, 7);
    SurdSum s;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        s += SurdSum::sqrt_term(Rational(num(rng), den(rng)), rads[pick(rng)]);
    return s;
}

} // namespace

TEST_CASE("normalize_radicand splits out the square part") {
    CHECK(normalize_radicand(1) == std::pair<BigInt, BigInt>{1, 1});
    CHECK(normalize_radicand(12) == std::pair<BigInt, BigInt>{2, 3});
    // 2028117 = 3*7*13*17*19*23 is squarefree (brute-forced independently)
    auto oracle = squarefree_split_brute(2028117);
    CHECK(oracle == std::pair<BigInt, BigInt>{1, 2028117});
    CHECK(normalize_radicand(2028117) == oracle);
    // nearby square-carrying value for the nontrivial path: 297^2 * 23
    CHECK(normalize_radicand(2028807) == std::pair<BigInt, BigInt>{297, 23});
    CHECK(squarefree_split_brute(2028807) == std::pair<BigInt, BigInt>{297, 23});
}

TEST_CASE("normalize_radicand round-trips for all n <= 10^6") {
    // independent oracle: smallest-prime-factor sieve
    const int N = 1000000;
    std::vector<int> spf(N + 1, 0);
    for (int i = 2; i <= N; ++i) {
        if (spf[i] == 0)
            for (long long j = i; j <= N; j += i)
                if (spf[j] == 0) spf[j] = i;
    }
    long long bad = 0;
    for (int n = 1; n <= N; ++n) {
        auto [o, c] = normalize_radicand(n);
        if (o * o * c != n) ++bad;
        // squarefree core per the sieve factorization
        int rest = n;
        long long core = 1;
        while (rest > 1) {
            int p = spf[rest], e = 0;
            while (rest % p == 0) rest /= p, ++e;
            if (e % 2) core *= p;
        }
        if (c != core) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("surd multiplication closes the ring") {
    SurdSum r2 = SurdSum::sqrt_term(1, 2);
    CHECK(r2 * r2 == SurdSum(2));

    SurdSum a = SurdSum::sqrt_term(Rational(1, 2), 6);
    SurdSum b = SurdSum::sqrt_term(Rational(1, 3), 10);
    CHECK(a * b == SurdSum::sqrt_term(Rational(1, 3), 15));
    // verify by squaring: (1/3 sqrt(15))^2 = 15/9
    CHECK((a * b) * (a * b) == SurdSum(Rational(15, 9)));

    SurdSum one_plus = SurdSum(1) + r2;
    SurdSum one_minus = SurdSum(1) - r2;
    CHECK(one_plus * one_minus == SurdSum(-1));
}

TEST_CASE("surd add, neg, complex ops") {
    CHECK(SurdSum(Rational(1, 2)) + SurdSum(Rational(1, 2)) == SurdSum(1));

    ComplexSurd i(SurdSum(), SurdSum(1));
    CHECK(i * i == ComplexSurd(SurdSum(-1)));

    ComplexSurd z(SurdSum::sqrt_term(Rational(1, 2), 3), SurdSum::sqrt_term(Rational(1, 4), 5));
    ComplexSurd zc = z.conj();
    CHECK(zc.re == z.re);
    CHECK(zc.im == -z.im);
}

TEST_CASE("surd_to_float meets the stated examples") {
    CHECK(surd_to_double(SurdSum(1)) == 1.0);
    CHECK(surd_to_double(SurdSum::sqrt_term(1, 2)) == doctest::Approx(1.41421356237309).epsilon(1e-12));
    CHECK(surd_to_double(SurdSum::sqrt_term(Rational(1, 3), 3)) ==
          doctest::Approx(0.5773502691896258).epsilon(1e-12));
    // rendered string at higher precision is stable under re-rounding
    std::string s = surd_to_float_string(SurdSum::sqrt_term(1, 2), 100);
    CHECK(s.substr(0, 12) == "1.4142135623");
}

TEST_CASE("ring axioms on randomized surds") {
    std::mt19937 rng(20260810);
    for (int iter = 0; iter < 300; ++iter) {
        SurdSum a = random_surd(rng), b = random_surd(rng), c = random_surd(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());  // canonical uniqueness
    }
}

TEST_CASE("float bridge is multiplicative within 8 ulp") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        SurdSum a = random_surd(rng), b = random_surd(rng);
        double lhs = surd_to_double(a * b);
        double rhs = surd_to_double(a) * surd_to_double(b);
        double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
        CHECK(std::abs(lhs - rhs) <= 8 * std::numeric_limits<double>::epsilon() * scale);
    }
}

TEST_CASE("surd_to_float precision bound") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 100; ++iter) {
        SurdSum a = random_surd(rng);
        double exact = std::stod(surd_to_float_string(a, 250));
        double d = surd_to_double(a);
        // |result - exact| <= 2^(1-53) |exact| at double precision
        CHECK(std::abs(d - exact) <= std::ldexp(std::abs(exact), -51) +
                                         std::numeric_limits<double>::denorm_min());
        // rendered strings at increasing precision agree on shared digits
        std::string lo = surd_to_float_string(a, 60);
        std::string hi = surd_to_float_string(a, 250);
        CHECK(hi.substr(0, std::min<size_t>(lo.size(), 12)) ==
              lo.substr(0, std::min<size_t>(lo.size(), 12)));
    }
    CHECK_THROWS_AS(surd_to_float_string(SurdSum(1), 0), OutOfRangeError);
    CHECK_THROWS_AS(surd_to_float_string(SurdSum(1), 400), OutOfRangeError);
}

TEST_CASE("canonical text rendering") {
    SurdSum s = SurdSum(Rational(-1, 2)) + SurdSum::sqrt_term(Rational(1, 6), 3);
    CHECK(s.to_string() == "-1/2 +1/6*3^(1/2)");
    CHECK(SurdSum().to_string() == "0");
    ComplexSurd z(SurdSum(Rational(1, 2)), SurdSum::sqrt_term(Rational(-1, 4), 5));
    CHECK(z.to_string() == "1/2 -i*1/4*5^(1/2)");
}
