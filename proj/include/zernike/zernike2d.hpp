#pragma once

#include "zernike/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace zern {

// Circle-polynomial index pair: 0 <= m <= n, n - m even.
struct Index2D {
    int n, m;

    Index2D(int n_, int m_);
    int half_diff() const { return (n - m) / 2; }  // -a in the hypergeometric form

    friend auto operator<=>(const Index2D&, const Index2D&) = default;
};

// Single-index Noll label, j >= 1.
struct NollIndex {
    int j;
    explicit NollIndex(int j_);
    friend auto operator<=>(const NollIndex&, const NollIndex&) = default;
};

// R_n^m(r), descending-power sum: coefficients of r^(n-2s).
RadialPoly radial_2d(const Index2D& idx);
// Same polynomial from the ascending-power sum with the (-1)^((n-m)/2) prefactor.
RadialPoly radial_2d_alt(const Index2D& idx);

// Expansion coefficient of r^j over R_n^m at fixed m:  r^j = sum_n h_{j,n,m} R_n^m.
Rational h_coeff(int j, const Index2D& idx);

// Recurrences; each returns h at the index shifted by +2 in one slot,
// given the value at (j, n, m).
Rational h_recur_j(const Rational& h, int j, int n, int m);
Rational h_recur_n(const Rational& h, int j, int n, int m);
Rational h_recur_m(const Rational& h, int j, int n, int m);

// Full map n -> h_{j,n,m}, n = m, m+2, ..., j.
std::map<int, Rational> power_to_radial_2d(int j, int m);

// Noll single-index scheme: ascending n, ascending m, even j carries cos.
std::pair<Index2D, AngularKind> noll_unpack(const NollIndex& j);
NollIndex noll_pack(const Index2D& idx, const AngularKind& kind);
// sqrt(2n+2) for m > 0, sqrt(n+1) for m = 0.
SurdSum noll_normalization(const Index2D& idx);

// cos^p(phi) sin^q(phi) as a combination of cos(m phi) / sin(m phi) / 1.
std::map<AngularKind, Rational> trig_power_expand(int p, int q);

// Dangling constant term of the trig expansion (binomial-sum form), without
// the 2^-j prefactor; zero for odd p+q.
BigInt trig_const_term(int p, int q);

// x^p y^q in the (unnormalized) R_n^m * trig basis.
ZernExpansion2D cart_monomial_to_zernike_2d(int p, int q);

// r^j cos(m phi) or r^j sin(m phi) as an exact bivariate polynomial.
CartPoly2 rj_trig_to_cart(int j, int m, Kind kind);

// Cartesian form of the full normalized Z_j.
CartPoly2 zernike_to_cart_2d(const NollIndex& j);

// Linearization coefficient g: R_{n1}^{m1} R_{n2}^{m2} = sum g R_{n3}^{m3},
// via the direct triple sum over elementary integrals.
Rational g_coeff(const Index2D& idx1, const Index2D& idx2, const Index2D& idx3);

// Full map n3 -> g for one of the coupled m3 = m1 +- m2.
std::map<int, Rational> product_expand_2d(const Index2D& idx1, const Index2D& idx2, int m3);

// Same expansion by multiplying the radial polynomials and re-expanding each
// power with power_to_radial_2d; cross-check route for g_coeff.
std::map<int, Rational> g_via_linear_system(const Index2D& idx1, const Index2D& idx2, int m3);

// Product-to-sum for azimuthal factors; at most two terms, sin(0) dropped.
std::vector<std::pair<AngularKind, Rational>> angular_product(const AngularKind& k1,
                                                              const AngularKind& k2);

} // namespace zern
