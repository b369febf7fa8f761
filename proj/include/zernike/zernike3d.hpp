#pragma once

#include "zernike/poly.hpp"

#include <map>
#include <vector>

namespace zern {

// Sphere-polynomial index pair: 0 <= l <= n, n - l even.
struct Index3D {
    int n, l;

    Index3D(int n_, int l_);
    int alpha() const { return (n - l) / 2; }
    int two_q() const { return 2 * l + 3; }  // q = l + 3/2 kept as 2q

    friend auto operator<=>(const Index3D&, const Index3D&) = default;
};

// Spherical-harmonic index: -l <= m <= l.
struct SphIndex {
    int l, m;

    SphIndex(int l_, int m_);
    friend auto operator<=>(const SphIndex&, const SphIndex&) = default;
};

struct Wigner3jArgs {
    int j1, j2, j3;
    int m1, m2, m3;
};

// R_n^(l)(r), descending-power sum; every coefficient is rational * sqrt(2n+3).
RadialPoly radial_3d(const Index3D& idx);
// Ascending-power companion form.
RadialPoly radial_3d_alt(const Index3D& idx);

// f_{j,n,l}: r^j = sum_n f_{j,n,l} R_n^(l).
SurdSum f_coeff(int j, const Index3D& idx);
// Rational part of f (f = f_rat * sqrt(2n+3)).
Rational f_coeff_rational(int j, const Index3D& idx);

SurdSum f_recur_j(const SurdSum& f, int j, int n, int l);
SurdSum f_recur_n(const SurdSum& f, int j, int n, int l);
SurdSum f_recur_l(const SurdSum& f, int j, int n, int l);

// Map n -> f_{j,n,l}, n = l, l+2, ..., j.
std::map<int, SurdSum> power_to_radial_3d(int j, int l);

// Complementary expansion at constant n: r^j = sum_l fhat_{j,n,l} R_n^(l),
// solved by backward elimination over the exact triangular system.
std::map<int, SurdSum> power_to_radial_3d_fixed_n(int j, int n);

// sqrt(pi) * r^l * Y_l^(m) as an exact Cartesian polynomial (Edmonds sign
// convention; negative m via conjugation).
CartPoly3 ylm_cart(const SphIndex& idx);

// sqrt(pi) * Z_{n,l}^(m).
CartPoly3 zernike3d_to_cart(int n, int l, int m);

// Radial projection factor: zero on parity mismatch, else f_{j,n,l}.
SurdSum I_r(int j, int n, int l);

// Azimuthal integral divided by pi: (1/pi) Int_0^2pi e^{im phi} cos^p sin^q.
// Purely real or purely imaginary; returned as a ComplexSurd of rationals.
ComplexSurd I_phi(int p, int q, int m);

// Polar integral Int_0^pi sin^(k+1) cos^t P_l^m dtheta (closed form).
Rational I_theta(int k, int t, int l, int m);

// Expansion coefficient of Z_{n,l}^(m) in x^p y^q z^t, in the library's
// sqrt(pi)-factored units.
ComplexSurd u_coeff(int p, int q, int t, const Index3D& idx, int m);

// Full expansion of a monomial over the 3D Zernike basis.
ZernExpansion3D cart_monomial_to_zernike_3d(int p, int q, int t);

// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m> (exact; zero on selection
// rule failure) and the Wigner 3j symbol.
SurdSum clebsch_gordan(int j1, int m1, int j2, int m2, int j, int m);
SurdSum wigner3j(const Wigner3jArgs& a);

// Coupling of two spherical harmonics in the normalization realized by the
// bundled yprod reference table (see y_product_true for the textbook identity).
std::map<SphIndex, SurdSum> y_product_expand(const SphIndex& i1, const SphIndex& i2);

// Textbook coupling: sqrt(pi) * Y1 * Y2 = sum c * Y_l^(m1+m2).
std::map<SphIndex, SurdSum> y_product_true(const SphIndex& i1, const SphIndex& i2);

// Linearization of radial products: R_{n1}^(l1) R_{n2}^(l2) = sum_n3 k R_{n3}^(l3);
// k_coeff is the exact weighted integral, product_expand_3d the f-insertion route.
SurdSum k_coeff(const Index3D& idx1, const Index3D& idx2, const Index3D& idx3);
std::map<int, SurdSum> product_expand_3d(const Index3D& idx1, const Index3D& idx2, int l3);

} // namespace zern
