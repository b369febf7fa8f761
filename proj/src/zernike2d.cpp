#include "zernike/zernike2d.hpp"

namespace zern {

Index2D::Index2D(int n_, int m_) : n(n_), m(m_) {
    if (m < 0 || m > n) throw InvalidIndexError("Index2D: need 0 <= m <= n");
    if ((n - m) % 2 != 0) throw InvalidIndexError("Index2D: n - m must be even");
}

NollIndex::NollIndex(int j_) : j(j_) {
    if (j < 1) throw InvalidIndexError("NollIndex: j must be >= 1");
}

RadialPoly radial_2d(const Index2D& idx) {
    RadialPoly p;
    int hd = idx.half_diff();
    for (int s = 0; s <= hd; ++s) {
        BigInt c = binomial(idx.n - s, s) * binomial(idx.n - 2 * s, hd - s);
        if (s % 2 != 0) c = -c;
        p.add(idx.n - 2 * s, SurdSum(Rational(c)));
    }
    return p;
}

RadialPoly radial_2d_alt(const Index2D& idx) {
    RadialPoly p;
    int hd = idx.half_diff();
    int pref = parity_sign(hd);
    for (int s = 0; s <= hd; ++s) {
        BigInt c = binomial((idx.n + idx.m) / 2 + s, hd - s) * binomial(idx.m + 2 * s, s);
        c *= pref * parity_sign(s);
        p.add(idx.m + 2 * s, SurdSum(Rational(c)));
    }
    return p;
}

Rational h_coeff(int j, const Index2D& idx) {
    if (j < idx.m || (j - idx.m) % 2 != 0)
        throw InvalidIndexError("h_coeff: j must have the parity of m and j >= m");
    if (idx.n > j) throw InvalidIndexError("h_coeff: need n <= j");
    int a = -idx.half_diff();
    Rational num = pochhammer(Rational(idx.m - j, 2), -a);
    Rational den = pochhammer(Rational(1) + Rational(idx.m + j, 2), 1 - a);
    Rational h = Rational(idx.n + 1) * num / den;
    if ((-a) % 2 != 0) h = -h;
    return h;
}

Rational h_recur_j(const Rational& h, int j, int n, int m) {
    BigInt den = BigInt(j + 2 - n) * (j + 4 + n);
    if (den == 0) throw OutOfRangeError("h_recur_j: vanishing denominator factor");
    return h * Rational(BigInt(j + 2 + m) * (j + 2 - m), den);
}

Rational h_recur_n(const Rational& h, int j, int n, int /*m*/) {
    BigInt den = BigInt(j + 4 + n) * (n + 1);
    if (den == 0) throw OutOfRangeError("h_recur_n: vanishing denominator factor");
    return h * Rational(BigInt(n + 3) * (j - n), den);
}

Rational h_recur_m(const Rational& h, int j, int /*n*/, int m) {
    if (j == m) throw OutOfRangeError("h_recur_m: vanishing denominator factor");
    return h * Rational(j + 2 + m, j - m);
}

std::map<int, Rational> power_to_radial_2d(int j, int m) {
    if (j < m || (j - m) % 2 != 0)
        throw InvalidIndexError("power_to_radial_2d: parity mismatch between j and m");
    std::map<int, Rational> out;
    for (int n = m; n <= j; n += 2) out.emplace(n, h_coeff(j, Index2D(n, m)));
    return out;
}

namespace {

// Walks the Noll sequence in order; rank r >= 0 gives (n, m, j-parity slot).
struct NollRow {
    int n, m;
    bool is_cos;  // meaningful only for m > 0
};

NollRow noll_row(int j) {
    int n = 0;
    int base = 1;  // j of the first function with this n
    while (true) {
        int count = n / 2 + 1;  // number of (m) slots counting pairs once
        int total = (n % 2 == 0) ? 2 * count - 1 : 2 * count;
        if (j < base + total) break;
        base += total;
        ++n;
    }
    int off = j - base;
    if (n % 2 == 0) {
        if (off == 0) return {n, 0, false};
        int pair = (off - 1) / 2;
        int m = 2 * (pair + 1);
        return {n, m, j % 2 == 0};
    }
    int pair = off / 2;
    int m = 2 * pair + 1;
    return {n, m, j % 2 == 0};
}

} // namespace

std::pair<Index2D, AngularKind> noll_unpack(const NollIndex& jdx) {
    NollRow row = noll_row(jdx.j);
    Index2D idx(row.n, row.m);
    if (row.m == 0) return {idx, AngularKind::radial()};
    return {idx, row.is_cos ? AngularKind::cos(row.m) : AngularKind::sin(row.m)};
}

NollIndex noll_pack(const Index2D& idx, const AngularKind& kind) {
    if ((idx.m == 0) != (kind.kind == Kind::Radial))
        throw InvalidIndexError("noll_pack: kind must be Radial exactly when m = 0");
    if (idx.m > 0 && kind.m != idx.m)
        throw InvalidIndexError("noll_pack: angular frequency must equal m");
    for (int j = 1;; ++j) {
        NollRow row = noll_row(j);
        if (row.n != idx.n || row.m != idx.m) continue;
        if (idx.m == 0 || (row.is_cos == (kind.kind == Kind::Cos))) return NollIndex(j);
    }
}

SurdSum noll_normalization(const Index2D& idx) {
    return SurdSum::sqrt_term(1, idx.m > 0 ? 2 * idx.n + 2 : idx.n + 1);
}

BigInt trig_const_term(int p, int q) {
    int j = p + q;
    if (j % 2 != 0) return 0;
    BigInt c = 0;
    for (int l = 0; l <= q; ++l) {
        BigInt t = binomial(p, j / 2 - l) * binomial(q, l);
        c += (l % 2 == 0) ? t : -t;
    }
    return c;
}

std::map<AngularKind, Rational> trig_power_expand(int p, int q) {
    if (p < 0 || q < 0) throw InvalidIndexError("trig_power_expand: negative exponent");
    int j = p + q;
    Rational pref(parity_sign(q / 2), ipow(2, j));
    std::map<AngularKind, Rational> out;
    for (int mm = 0; 2 * mm <= j - 1; ++mm) {
        BigInt s = 0;
        for (int l = std::max(0, mm - p); l <= std::min(q, mm); ++l) {
            BigInt t = binomial(p, mm - l) * binomial(q, l);
            s += (l % 2 == 0) ? t : -t;
        }
        if (s == 0) continue;
        Rational c = pref * 2 * Rational(s);
        int freq = j - 2 * mm;
        out.emplace(q % 2 == 0 ? AngularKind::cos(freq) : AngularKind::sin(freq), c);
    }
    if (q % 2 == 0 && j % 2 == 0) {
        BigInt c0 = trig_const_term(p, q);
        if (c0 != 0) out.emplace(AngularKind::radial(), pref * Rational(c0));
    }
    return out;
}

ZernExpansion2D cart_monomial_to_zernike_2d(int p, int q) {
    ZernExpansion2D out;
    int j = p + q;
    for (const auto& [kind, c] : trig_power_expand(p, q)) {
        for (const auto& [n, h] : power_to_radial_2d(j, kind.m))
            out.add(n, kind.m, kind, SurdSum(c * h));
    }
    return out;
}

CartPoly2 rj_trig_to_cart(int j, int m, Kind kind) {
    if (kind == Kind::Radial) {
        if (m != 0) throw InvalidIndexError("rj_trig_to_cart: radial kind requires m = 0");
        kind = Kind::Cos;  // cos(0 phi) = 1
    }
    if (m < 0 || j < m || (j - m) % 2 != 0)
        throw InvalidIndexError("rj_trig_to_cart: need j >= m with even j - m");
    if (kind == Kind::Sin && m < 1)
        throw InvalidIndexError("rj_trig_to_cart: sin kind requires m >= 1");

    // (x^2+y^2)^((j-m)/2) times Re/Im[(x+iy)^m]
    CartPoly2 out;
    int hd = (j - m) / 2;
    int k0 = (kind == Kind::Cos) ? 0 : 1;
    for (int t = 0; t <= hd; ++t) {
        BigInt bt = binomial(hd, t);
        for (int k = k0; k <= m; k += 2) {
            BigInt c = bt * binomial(m, k);
            if ((k / 2) % 2 != 0) c = -c;
            out.add(2 * t + m - k, j - m - 2 * t + k, SurdSum(Rational(c)));
        }
    }
    return out;
}

CartPoly2 zernike_to_cart_2d(const NollIndex& j) {
    auto [idx, kind] = noll_unpack(j);
    CartPoly2 out;
    RadialPoly rp = radial_2d(idx);
    for (const auto& [e, c] : rp.coeffs())
        out += rj_trig_to_cart(e, idx.m, kind.kind).scaled(c);
    return out.scaled(noll_normalization(idx));
}

Rational g_coeff(const Index2D& idx1, const Index2D& idx2, const Index2D& idx3) {
    if ((idx1.n + idx2.n - idx3.n) % 2 != 0)
        throw InvalidIndexError("g_coeff: n1 + n2 - n3 must be even");
    int h1 = idx1.half_diff(), h2 = idx2.half_diff(), h3 = idx3.half_diff();
    Rational acc = 0;
    for (int s1 = 0; s1 <= h1; ++s1) {
        BigInt c1 = binomial(idx1.n - s1, s1) * binomial(idx1.n - 2 * s1, h1 - s1);
        for (int s2 = 0; s2 <= h2; ++s2) {
            BigInt c2 = binomial(idx2.n - s2, s2) * binomial(idx2.n - 2 * s2, h2 - s2);
            for (int s3 = 0; s3 <= h3; ++s3) {
                BigInt c3 = binomial(idx3.n - s3, s3) * binomial(idx3.n - 2 * s3, h3 - s3);
                BigInt num = c1 * c2 * c3;
                if ((s1 + s2 + s3) % 2 != 0) num = -num;
                acc += Rational(num, idx1.n + idx2.n + idx3.n + 2 * (1 - s1 - s2 - s3));
            }
        }
    }
    return Rational(2 * (idx3.n + 1)) * acc;
}

static void check_coupled_m3(const Index2D& idx1, const Index2D& idx2, int m3) {
    if (m3 != idx1.m + idx2.m && m3 != std::abs(idx1.m - idx2.m))
        throw InvalidIndexError("m3 must be m1 + m2 or |m1 - m2|");
}

std::map<int, Rational> product_expand_2d(const Index2D& idx1, const Index2D& idx2, int m3) {
    check_coupled_m3(idx1, idx2, m3);
    std::map<int, Rational> out;
    for (int n3 = m3; n3 <= idx1.n + idx2.n; n3 += 2) {
        Rational g = g_coeff(idx1, idx2, Index2D(n3, m3));
        if (g != 0) out.emplace(n3, g);
    }
    return out;
}

std::map<int, Rational> g_via_linear_system(const Index2D& idx1, const Index2D& idx2, int m3) {
    check_coupled_m3(idx1, idx2, m3);
    RadialPoly prod = radial_2d(idx1) * radial_2d(idx2);
    std::map<int, Rational> out;
    for (const auto& [e, c] : prod.coeffs()) {
        Rational cr = c.rational_part();
        for (const auto& [n, h] : power_to_radial_2d(e, m3)) {
            out[n] += cr * h;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<std::pair<AngularKind, Rational>> angular_product(const AngularKind& k1,
                                                              const AngularKind& k2) {
    auto mk = [](Kind kind, int m, Rational c) -> std::pair<AngularKind, Rational> {
        if (m == 0) {
            if (kind == Kind::Sin) return {AngularKind::radial(), 0};
            return {AngularKind::radial(), c};
        }
        if (m < 0) {
            m = -m;
            if (kind == Kind::Sin) c = -c;
        }
        return {kind == Kind::Cos ? AngularKind::cos(m) : AngularKind::sin(m), c};
    };

    std::vector<std::pair<AngularKind, Rational>> out;
    auto push = [&out](std::pair<AngularKind, Rational> t) {
        if (t.second == 0) return;
        for (auto& [k, c] : out) {
            if (k == t.first) {
                c += t.second;
                return;
            }
        }
        out.push_back(std::move(t));
    };

    if (k1.kind == Kind::Radial) {
        push({k2, 1});
        return out;
    }
    if (k2.kind == Kind::Radial) {
        push({k1, 1});
        return out;
    }
    int m1 = k1.m, m2 = k2.m;
    Rational half(1, 2);
    if (k1.kind == Kind::Cos && k2.kind == Kind::Cos) {
        push(mk(Kind::Cos, m1 - m2, half));
        push(mk(Kind::Cos, m1 + m2, half));
    } else if (k1.kind == Kind::Sin && k2.kind == Kind::Sin) {
        push(mk(Kind::Cos, m1 - m2, half));
        push(mk(Kind::Cos, m1 + m2, -half));
    } else if (k1.kind == Kind::Sin && k2.kind == Kind::Cos) {
        push(mk(Kind::Sin, m1 - m2, half));
        push(mk(Kind::Sin, m1 + m2, half));
    } else {  // cos * sin
        push(mk(Kind::Sin, m2 - m1, half));
        push(mk(Kind::Sin, m2 + m1, half));
    }
    return out;
}

} // namespace zern
