#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zernike/zernike3d.hpp"

using namespace zern;

namespace {

SurdSum rs(long long num, long long den, long long rad) {
    return SurdSum::sqrt_term(Rational(num, den), rad);
}

CartPoly3 expansion_to_cart(const ZernExpansion3D& e) {
    CartPoly3 out;
    for (const auto& [key, c] : e.terms())
        out += zernike3d_to_cart(key[0], key[1], key[2]).scaled(c);
    return out;
}

} // namespace

TEST_CASE("3D radial polynomials match the printed rows") {
    RadialPoly r20 = radial_3d(Index3D(2, 0));  // 1/2 sqrt(7) (-3 + 5 r^2)
    CHECK(r20.coeff(0) == rs(-3, 2, 7));
    CHECK(r20.coeff(2) == rs(5, 2, 7));

    for (int n = 0; n <= 13; ++n) {
        RadialPoly p = radial_3d(Index3D(n, n));
        CHECK(p.coeffs().size() == 1);
        CHECK(p.coeff(n) == rs(1, 1, 2 * n + 3));
    }

    RadialPoly r80 = radial_3d(Index3D(8, 0));
    CHECK(r80.coeff(0) == rs(315, 128, 19));
    CHECK(r80.coeff(2) == rs(-4620, 128, 19));
    CHECK(r80.coeff(4) == rs(18018, 128, 19));
    CHECK(r80.coeff(6) == rs(-25740, 128, 19));
    CHECK(r80.coeff(8) == rs(12155, 128, 19));
}

TEST_CASE("both closed forms coincide and R(1) = sqrt(2n+3), n <= 13") {
    for (int n = 0; n <= 13; ++n)
        for (int l = n % 2; l <= n; l += 2) {
            Index3D idx(n, l);
            CHECK(radial_3d(idx) == radial_3d_alt(idx));
            CHECK(radial_3d(idx).value_at_one() == rs(1, 1, 2 * n + 3));
        }
}

TEST_CASE("exact orthonormality with weight r^2, n <= 12") {
    for (int l = 0; l <= 12; ++l)
        for (int n = l; n <= 12; n += 2)
            for (int np = n; np <= 12; np += 2) {
                RadialPoly prod = radial_3d(Index3D(n, l)) * radial_3d(Index3D(np, l));
                SurdSum integral;
                for (const auto& [e, c] : prod.coeffs()) integral += c * Rational(1, e + 3);
                CHECK(integral == SurdSum(n == np ? 1 : 0));
            }
}

TEST_CASE("f coefficients: printed values and anchors") {
    CHECK(f_coeff(2, Index3D(0, 0)) == rs(1, 5, 3));
    CHECK(f_coeff(10, Index3D(6, 0)) == rs(32, 4199, 15));
    for (int l = 0; l <= 9; ++l)
        CHECK(f_coeff(l, Index3D(l, l)) == rs(1, 2 * l + 3, 2 * l + 3));

    auto p31 = power_to_radial_3d(3, 1);
    CHECK(p31.at(1) == rs(1, 7, 5));
    CHECK(p31.at(3) == SurdSum(Rational(2, 21)));  // sqrt(9) folds into the rational

    auto p84 = power_to_radial_3d(8, 4);
    CHECK(p84.at(4) == rs(1, 15, 11));
    CHECK(p84.at(6) == rs(4, 255, 15));
    CHECK(p84.at(8) == rs(8, 4845, 19));
}

TEST_CASE("f parity guards") {
    CHECK_THROWS_AS(f_coeff(3, Index3D(2, 0)), InvalidIndexError);
    CHECK_THROWS_AS(power_to_radial_3d(5, 2), InvalidIndexError);
    CHECK(I_r(3, 2, 0).is_zero());  // same mismatch, total function
    CHECK(I_r(4, 4, 2) == rs(2, 99, 11));
    CHECK(I_r(2, 0, 0) == rs(1, 5, 3));
}

TEST_CASE("f sum rule: sum sqrt(2n+3) f = 1, j <= 13") {
    for (int j = 0; j <= 13; ++j)
        for (int l = j % 2; l <= j; l += 2) {
            SurdSum sum;
            for (const auto& [n, f] : power_to_radial_3d(j, l))
                sum += f * SurdSum::sqrt_term(1, 2 * n + 3);
            CHECK(sum == SurdSum(1));
        }
}

TEST_CASE("substituting the 3D radial polynomials reproduces r^j") {
    for (int j = 0; j <= 13; ++j)
        for (int l = j % 2; l <= j; l += 2) {
            RadialPoly acc;
            for (const auto& [n, f] : power_to_radial_3d(j, l))
                acc += radial_3d(Index3D(n, l)).scaled(f);
            CHECK(acc.coeffs().size() == 1);
            CHECK(acc.coeff(j) == SurdSum(1));
        }
}

TEST_CASE("all three f recurrences match the closed form, j <= 16") {
    for (int j = 0; j <= 16; ++j)
        for (int l = j % 2; l <= j; l += 2)
            for (int n = l; n <= j; n += 2) {
                SurdSum f = f_coeff(j, Index3D(n, l));
                CHECK(f_recur_j(f, j, n, l) == f_coeff(j + 2, Index3D(n, l)));
                if (n + 2 <= j) CHECK(f_recur_n(f, j, n, l) == f_coeff(j, Index3D(n + 2, l)));
                if (l + 2 <= n && j != l)
                    CHECK(f_recur_l(f, j, n, l) == f_coeff(j, Index3D(n, l + 2)));
            }
}

TEST_CASE("fhat: fixed-n expansions from the printed table") {
    // r^0 / sqrt(7) = 5/21 R_2^(2) - 2/21 R_2^(0)
    auto fh02 = power_to_radial_3d_fixed_n(0, 2);
    CHECK(fh02.at(2) == rs(5, 21 * 7, 7) * Rational(7));  // 5/21 sqrt(7)
    CHECK(fh02.at(2) == SurdSum::sqrt_term(Rational(5, 21), 7));
    CHECK(fh02.at(0) == SurdSum::sqrt_term(Rational(-2, 21), 7));

    // r^2 / sqrt(11) = 9/77 R_4^(4) - 2/77 R_4^(2)
    auto fh24 = power_to_radial_3d_fixed_n(2, 4);
    CHECK(fh24.at(4) == SurdSum::sqrt_term(Rational(9, 77), 11));
    CHECK(fh24.at(2) == SurdSum::sqrt_term(Rational(-2, 77), 11));
    CHECK(fh24.count(0) == 0);

    for (int n = 0; n <= 9; ++n) {
        auto fh = power_to_radial_3d_fixed_n(n, n);
        CHECK(fh.size() == 1);
        CHECK(fh.at(n) == rs(1, 2 * n + 3, 2 * n + 3));
    }
}

TEST_CASE("fhat reproduces r^j and obeys its sum rule, j <= 13") {
    for (int n = 0; n <= 13; ++n)
        for (int j = n % 2; j <= n; j += 2) {
            auto fh = power_to_radial_3d_fixed_n(j, n);
            RadialPoly acc;
            SurdSum sum;
            for (const auto& [l, c] : fh) {
                acc += radial_3d(Index3D(n, l)).scaled(c);
                sum += c;
            }
            CHECK(acc.coeffs().size() == 1);
            CHECK(acc.coeff(j) == SurdSum(1));
            CHECK(sum * SurdSum::sqrt_term(1, 2 * n + 3) == SurdSum(1));
        }
}

TEST_CASE("vector harmonics in cartesian form") {
    CartPoly3 y00 = ylm_cart(SphIndex(0, 0));
    CHECK(y00.coeff(0, 0, 0) == ComplexSurd(SurdSum(Rational(1, 2))));
    CHECK(y00.coeffs().size() == 1);

    CartPoly3 y10 = ylm_cart(SphIndex(1, 0));
    CHECK(y10.coeff(0, 0, 1) == ComplexSurd(rs(1, 2, 3)));

    CartPoly3 y22 = ylm_cart(SphIndex(2, 2));
    CHECK(y22.coeff(2, 0, 0) == ComplexSurd(rs(1, 8, 30)));
    CHECK(y22.coeff(0, 2, 0) == ComplexSurd(rs(-1, 8, 30)));
    CHECK(y22.coeff(1, 1, 0) == ComplexSurd(SurdSum(), rs(1, 4, 30)));

    // negative m via conjugation: Y_1^(-1) = -1/4 sqrt(6) (-x + i y)
    CartPoly3 y1m1 = ylm_cart(SphIndex(1, -1));
    CHECK(y1m1.coeff(1, 0, 0) == ComplexSurd(rs(1, 4, 6)));
    CHECK(y1m1.coeff(0, 1, 0) == ComplexSurd(SurdSum(), rs(-1, 4, 6)));
}

TEST_CASE("3D Zernike functions in cartesian form") {
    CartPoly3 z000 = zernike3d_to_cart(0, 0, 0);
    CHECK(z000.coeff(0, 0, 0) == ComplexSurd(rs(1, 2, 3)));

    CartPoly3 z200 = zernike3d_to_cart(2, 0, 0);
    CHECK(z200.coeff(0, 0, 0) == ComplexSurd(rs(-3, 4, 7)));
    CHECK(z200.coeff(2, 0, 0) == ComplexSurd(rs(5, 4, 7)));
    CHECK(z200.coeff(0, 2, 0) == ComplexSurd(rs(5, 4, 7)));
    CHECK(z200.coeff(0, 0, 2) == ComplexSurd(rs(5, 4, 7)));

    // Z_4,4^(4): 3/32 sqrt(770) (x^2+2xy-y^2)(x^2-2xy-y^2) real part
    CartPoly3 z444 = zernike3d_to_cart(4, 4, 4);
    CHECK(z444.coeff(4, 0, 0) == ComplexSurd(rs(3, 32, 770)));
    CHECK(z444.coeff(2, 2, 0) == ComplexSurd(rs(-18, 32, 770)));
    CHECK(z444.coeff(0, 4, 0) == ComplexSurd(rs(3, 32, 770)));
    CHECK(z444.coeff(3, 1, 0) == ComplexSurd(SurdSum(), rs(3, 8, 770)));
    CHECK(z444.coeff(1, 3, 0) == ComplexSurd(SurdSum(), rs(-3, 8, 770)));
}

TEST_CASE("negative-m rule for the cartesian Z forms, l <= 6") {
    for (int n = 0; n <= 6; ++n)
        for (int l = n % 2; l <= n; l += 2)
            for (int m = 0; m <= l; ++m) {
                CartPoly3 plus = zernike3d_to_cart(n, l, m);
                CartPoly3 minus = zernike3d_to_cart(n, l, -m);
                CartPoly3 expect;
                for (const auto& [k, c] : plus.coeffs()) {
                    ComplexSurd v = c;
                    if (m % 2 == 0)
                        v.im = -v.im;  // even m: imaginary part changes sign
                    else
                        v.re = -v.re;  // odd m: real part changes sign
                    expect.add(k[0], k[1], k[2], v);
                }
                CHECK(minus == expect);
            }
}

TEST_CASE("I_phi examples") {
    CHECK(I_phi(0, 0, 0) == ComplexSurd(SurdSum(2)));
    CHECK(I_phi(1, 0, 1) == ComplexSurd(SurdSum(1)));
    CHECK(I_phi(0, 1, 1) == ComplexSurd(SurdSum(), SurdSum(1)));
    CHECK(I_phi(1, 0, 2).is_zero());       // parity
    CHECK(I_phi(1, 1, 3).is_zero());       // |m| > p+q, empty binomial range
    // recurrence I_phi(p, q+2, m) = I_phi(p, q, m) - I_phi(p+2, q, m)
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q)
            for (int m = -(p + q + 2); m <= p + q + 2; ++m) {
                ComplexSurd lhs = I_phi(p, q + 2, m);
                ComplexSurd rhs = I_phi(p, q, m) - I_phi(p + 2, q, m);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("I_theta examples") {
    CHECK(I_theta(0, 0, 0, 0) == Rational(2));
    CHECK(I_theta(0, 1, 1, 0) == Rational(2, 3));
    // d theta integral of sin^2 P_1^1 = Int sin^3 = 4/3 (numeric oracle in test_numeric)
    CHECK(I_theta(1, 0, 1, 1) == Rational(4, 3));
    CHECK(I_theta(0, 0, 1, 0) == Rational(0));  // parity l - m + t odd
    CHECK(I_theta(1, 0, 1, -1) == Rational(-2, 3));
}

TEST_CASE("u coefficients: printed values") {
    CHECK(u_coeff(1, 0, 0, Index3D(1, 1), -1) == ComplexSurd(rs(1, 15, 30)));
    CHECK(u_coeff(1, 0, 0, Index3D(1, 1), 1) == ComplexSurd(rs(-1, 15, 30)));
    CHECK(u_coeff(0, 0, 1, Index3D(1, 1), 0) == ComplexSurd(rs(2, 15, 15)));
    CHECK(u_coeff(1, 1, 0, Index3D(2, 2), 2) == ComplexSurd(SurdSum(), rs(-1, 105, 210)));
    CHECK(u_coeff(1, 1, 0, Index3D(2, 2), -2) == ComplexSurd(SurdSum(), rs(1, 105, 210)));
}

TEST_CASE("monomial expansions over the 3D basis") {
    ZernExpansion3D e0 = cart_monomial_to_zernike_3d(0, 0, 0);
    CHECK(e0.terms().size() == 1);
    CHECK(e0.coeff(0, 0, 0) == ComplexSurd(rs(2, 3, 3)));

    ZernExpansion3D x2 = cart_monomial_to_zernike_3d(2, 0, 0);
    CHECK(x2.terms().size() == 5);
    CHECK(x2.coeff(0, 0, 0) == ComplexSurd(rs(2, 15, 3)));
    CHECK(x2.coeff(2, 0, 0) == ComplexSurd(rs(4, 105, 7)));
    CHECK(x2.coeff(2, 2, -2) == ComplexSurd(rs(1, 105, 210)));
    CHECK(x2.coeff(2, 2, 0) == ComplexSurd(rs(-2, 105, 35)));
    CHECK(x2.coeff(2, 2, 2) == ComplexSurd(rs(1, 105, 210)));

    ZernExpansion3D z5 = cart_monomial_to_zernike_3d(0, 0, 5);
    CHECK(z5.terms().size() == 6);
    CHECK(z5.coeff(1, 1, 0) == ComplexSurd(rs(2, 63, 15)));
    CHECK(z5.coeff(3, 1, 0) == ComplexSurd(rs(8, 231, 3)));
    CHECK(z5.coeff(3, 3, 0) == ComplexSurd(rs(8, 231, 7)));
    CHECK(z5.coeff(5, 1, 0) == ComplexSurd(rs(16, 9009, 39)));
    CHECK(z5.coeff(5, 3, 0) == ComplexSurd(rs(16, 9009, 91)));
    CHECK(z5.coeff(5, 5, 0) == ComplexSurd(rs(16, 9009, 143)));
}

TEST_CASE("round trip: 3D monomial -> basis -> cartesian, degree <= 5") {
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; p + q <= 5; ++q)
            for (int t = 0; p + q + t <= 5; ++t) {
                CartPoly3 back = expansion_to_cart(cart_monomial_to_zernike_3d(p, q, t));
                // sqrt(pi)-factored bases: u-expansion back through sqrt(pi) Z
                // reproduces the bare monomial
                CHECK(back.coeffs().size() == 1);
                CHECK(back.coeff(p, q, t) == ComplexSurd(SurdSum(1)));
            }
}

TEST_CASE("wigner 3j and Clebsch-Gordan") {
    CHECK(wigner3j({1, 1, 0, 0, 0, 0}) == SurdSum::sqrt_term(Rational(-1, 3), 3));
    CHECK(wigner3j({0, 0, 0, 0, 0, 0}) == SurdSum(1));
    CHECK(clebsch_gordan(1, 1, 1, -1, 1, 1).is_zero());  // m1+m2 != m
    CHECK(clebsch_gordan(1, 1, 1, 1, 2, 2) == SurdSum(1));
    CHECK(clebsch_gordan(2, 0, 1, 0, 1, 0) ==
          SurdSum::sqrt_rational(Rational(2, 5)) * Rational(-1));
    // triangle violations are exact zeros, not errors
    CHECK(wigner3j({2, 0, 1, 0, 0, 0}).is_zero());
    CHECK(clebsch_gordan(3, 0, 1, 0, 1, 0).is_zero());
}

TEST_CASE("wigner 3j symmetry suite, all j_i <= 4") {
    for (int j1 = 0; j1 <= 4; ++j1)
        for (int j2 = 0; j2 <= 4; ++j2)
            for (int j3 = std::abs(j1 - j2); j3 <= std::min(4, j1 + j2); ++j3)
                for (int m1 = -j1; m1 <= j1; ++m1)
                    for (int m2 = -j2; m2 <= j2; ++m2) {
                        int m3 = -m1 - m2;
                        if (std::abs(m3) > j3) continue;
                        SurdSum v = wigner3j({j1, j2, j3, m1, m2, m3});
                        SurdSum phase = SurdSum(Rational(parity_sign(j1 + j2 + j3)));
                        // even column permutations
                        CHECK(wigner3j({j2, j3, j1, m2, m3, m1}) == v);
                        CHECK(wigner3j({j3, j1, j2, m3, m1, m2}) == v);
                        // odd permutation and m negation
                        CHECK(wigner3j({j2, j1, j3, m2, m1, m3}) == v * phase.rational_part());
                        CHECK(wigner3j({j1, j3, j2, m1, m3, m2}) == v * phase.rational_part());
                        CHECK(wigner3j({j1, j2, j3, -m1, -m2, -m3}) == v * phase.rational_part());
                    }
}

TEST_CASE("y product expansion reproduces the published normalization") {
    auto p00 = y_product_expand(SphIndex(0, 0), SphIndex(0, 0));
    CHECK(p00.size() == 1);
    CHECK(p00.at(SphIndex(0, 0)) == SurdSum::sqrt_term(1, 2));

    auto p10 = y_product_expand(SphIndex(1, 0), SphIndex(1, 0));
    CHECK(p10.size() == 2);
    CHECK(p10.at(SphIndex(0, 0)) == SurdSum::sqrt_term(Rational(2, 3), 2));
    CHECK(p10.at(SphIndex(2, 0)) == SurdSum::sqrt_term(Rational(4, 15), 6));

    auto p22 = y_product_expand(SphIndex(2, 2), SphIndex(2, -2));
    CHECK(p22.size() == 3);
    CHECK(p22.at(SphIndex(0, 0)) == SurdSum::sqrt_term(Rational(1, 40), 2));
    CHECK(p22.at(SphIndex(2, 0)) == SurdSum::sqrt_term(Rational(-1, 280), 6));
    CHECK(p22.at(SphIndex(4, 0)) == SurdSum::sqrt_term(Rational(1, 20160), 10));
}

TEST_CASE("textbook y product is consistent with the coupling equation") {
    // spot value: sqrt(pi) Y_1^0 Y_1^0 = 1/2 Y_0^0 + 1/sqrt(5) Y_2^0
    auto t = y_product_true(SphIndex(1, 0), SphIndex(1, 0));
    CHECK(t.at(SphIndex(0, 0)) == SurdSum(Rational(1, 2)));
    CHECK(t.at(SphIndex(2, 0)) == SurdSum::sqrt_term(Rational(1, 5), 5));
}

TEST_CASE("k coefficients and 3D product expansion") {
    auto k0 = product_expand_3d(Index3D(1, 1), Index3D(1, 1), 0);
    CHECK(k0.size() == 2);
    CHECK(k0.at(0) == rs(1, 1, 3));
    CHECK(k0.at(2) == rs(2, 7, 7));

    auto k6 = product_expand_3d(Index3D(3, 3), Index3D(3, 3), 6);
    CHECK(k6.size() == 1);
    CHECK(k6.at(6) == rs(3, 5, 15));

    for (int n = 0; n <= 4; ++n)
        for (int l = n % 2; l <= n; l += 2) {
            auto t = product_expand_3d(Index3D(n, l), Index3D(0, 0), l);
            CHECK(t.size() == 1);
            CHECK(t.at(n) == rs(1, 1, 3));
        }

    CHECK_THROWS_AS(product_expand_3d(Index3D(1, 1), Index3D(1, 1), 1), InvalidIndexError);
}

TEST_CASE("k integral route agrees with the f-insertion route, n1, n2 <= 4") {
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int l1 = n1 % 2; l1 <= n1; l1 += 2)
            for (int n2 = n1; n2 <= 4; ++n2)
                for (int l2 = n2 % 2; l2 <= n2; l2 += 2)
                    for (int l3 = std::abs(l1 - l2); l3 <= l1 + l2; l3 += 2) {
                        auto exp = product_expand_3d(Index3D(n1, l1), Index3D(n2, l2), l3);
                        SurdSum sum;
                        for (const auto& [n3, k] : exp) {
                            CHECK(k == k_coeff(Index3D(n1, l1), Index3D(n2, l2),
                                               Index3D(n3, l3)));
                            sum += k * SurdSum::sqrt_term(1, 2 * n3 + 3);
                        }
                        // sum rule: sum sqrt(2n3+3) k = sqrt(2n1+3) sqrt(2n2+3)
                        CHECK(sum == SurdSum::sqrt_term(1, 2 * n1 + 3) *
                                         SurdSum::sqrt_term(1, 2 * n2 + 3));
                    }
}

TEST_CASE("k substitution reproduces the radial product") {
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int l1 = n1 % 2; l1 <= n1; l1 += 2)
            for (int n2 = 0; n2 <= 4; ++n2)
                for (int l2 = n2 % 2; l2 <= n2; l2 += 2) {
                    int l3 = std::abs(l1 - l2);
                    RadialPoly acc;
                    for (const auto& [n3, k] : product_expand_3d(Index3D(n1, l1),
                                                                 Index3D(n2, l2), l3))
                        acc += radial_3d(Index3D(n3, l3)).scaled(k);
                    CHECK(acc == radial_3d(Index3D(n1, l1)) * radial_3d(Index3D(n2, l2)));
                }
}
