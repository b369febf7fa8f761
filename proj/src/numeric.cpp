#include "zernike/numeric.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace zern {

QuadratureRule::QuadratureRule(int order) {
    if (order < 1) throw OutOfRangeError("QuadratureRule: order must be >= 1");
    nodes_.resize(order);
    weights_.resize(order);
    int mhalf = (order + 1) / 2;
    for (int i = 0; i < mhalf; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < order; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes_[i] = -x;
        nodes_[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights_[i] = w;
        weights_[order - 1 - i] = w;
    }
}

double eval_radial(const RadialPoly& p, double r) { return p.eval(r); }

double ortho_check_2d(int n, int nprime, int m, const QuadratureRule& rule) {
    RadialPoly a = radial_2d(Index2D(n, m));
    RadialPoly b = radial_2d(Index2D(nprime, m));
    double val = rule.integrate01([&](double r) { return r * a.eval(r) * b.eval(r); });
    double target = (n == nprime) ? 1.0 / (2.0 * (n + 1)) : 0.0;
    return std::abs(val - target);
}

double ortho_check_3d(int n, int nprime, int l, const QuadratureRule& rule) {
    RadialPoly a = radial_3d(Index3D(n, l));
    RadialPoly b = radial_3d(Index3D(nprime, l));
    double val = rule.integrate01([&](double r) { return r * r * a.eval(r) * b.eval(r); });
    double target = (n == nprime) ? 1.0 : 0.0;
    return std::abs(val - target);
}

double brute_force_g(const Index2D& i1, const Index2D& i2, const Index2D& i3,
                     const QuadratureRule& rule) {
    RadialPoly a = radial_2d(i1), b = radial_2d(i2), c = radial_2d(i3);
    double val =
        rule.integrate01([&](double r) { return r * a.eval(r) * b.eval(r) * c.eval(r); });
    return 2.0 * (i3.n + 1) * val;
}

double brute_force_k(const Index3D& i1, const Index3D& i2, const Index3D& i3,
                     const QuadratureRule& rule) {
    RadialPoly a = radial_3d(i1), b = radial_3d(i2), c = radial_3d(i3);
    return rule.integrate01([&](double r) { return r * r * a.eval(r) * b.eval(r) * c.eval(r); });
}

double brute_force_h(int j, const Index2D& idx, const QuadratureRule& rule) {
    RadialPoly a = radial_2d(idx);
    double val = rule.integrate01([&](double r) { return std::pow(r, j + 1) * a.eval(r); });
    return 2.0 * (idx.n + 1) * val;
}

double brute_force_f(int j, const Index3D& idx, const QuadratureRule& rule) {
    RadialPoly a = radial_3d(idx);
    return rule.integrate01([&](double r) { return std::pow(r, j + 2) * a.eval(r); });
}

namespace {

// Associated Legendre P_l^m via the stable upward recurrence; the plain
// (1-x^2)^(m/2) d^m/dx^m P_l convention used here (no Condon-Shortley).
double assoc_legendre_plain(int l, int m, double x) {
    int am = std::abs(m);
    double pmm = 1.0;
    if (am > 0) {
        double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
        double fact = 1.0;
        for (int i = 0; i < am; ++i) {
            pmm *= fact * somx2;
            fact += 2.0;
        }
    }
    double plm;
    if (l == am) {
        plm = pmm;
    } else {
        double pmmp1 = x * (2.0 * am + 1.0) * pmm;
        if (l == am + 1) {
            plm = pmmp1;
        } else {
            plm = 0.0;
            for (int ll = am + 2; ll <= l; ++ll) {
                plm = ((2.0 * ll - 1.0) * x * pmmp1 - (ll + am - 1.0) * pmm) / (ll - am);
                pmm = pmmp1;
                pmmp1 = plm;
            }
        }
    }
    if (m < 0) {
        double scale = 1.0;
        for (int i = l - am + 1; i <= l + am; ++i) scale *= i;
        plm /= scale;
        if (am % 2 != 0) plm = -plm;
    }
    return plm;
}

// sqrt(pi)-factored Y_l^m at (theta, phi): (re, im).
std::array<double, 2> ylm_numeric(int l, int m, double theta, double phi) {
    int am = std::abs(m);
    double lognorm = 0.0;
    for (int i = l - am + 1; i <= l + am; ++i) lognorm += std::log(i);
    double norm = std::sqrt((2.0 * l + 1) / 4.0 * std::exp(m >= 0 ? -lognorm : lognorm));
    double p = assoc_legendre_plain(l, m, std::cos(theta));
    double sgn = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^m of the Edmonds definition
    double v = sgn * norm * p;
    return {v * std::cos(m * phi), v * std::sin(m * phi)};
}

} // namespace

std::array<double, 2> brute_force_u(int p, int q, int t, const Index3D& idx, int m,
                                    const QuadratureRule& rule, int phi_points) {
    // u = Int r^{j+2} R dr * Int_sphere monomial-angular * conj(Y) dOmega, in
    // sqrt(pi)-factored units: one 1/pi absorbed by the phi integral, the
    // remaining 1/sqrt(pi) carried by the Y table convention.
    double radial = brute_force_f(p + q + t, idx, rule);
    double re = 0.0, im = 0.0;
    for (size_t i = 0; i < rule.nodes().size(); ++i) {
        double ct = rule.nodes()[i];
        double theta = std::acos(ct);
        double st = std::sin(theta);
        double wt = rule.weights()[i];
        double ang = std::pow(st, p + q) * std::pow(ct, t);
        double phre = 0.0, phim = 0.0;
        for (int k = 0; k < phi_points; ++k) {
            double phi = 2.0 * std::numbers::pi * k / phi_points;
            double mono = std::pow(std::cos(phi), p) * std::pow(std::sin(phi), q);
            auto y = ylm_numeric(idx.l, m, theta, phi);
            phre += mono * y[0];
            phim -= mono * y[1];  // conjugate
        }
        double dphi = 2.0 * std::numbers::pi / phi_points;
        re += wt * ang * phre * dphi;
        im += wt * ang * phim * dphi;
    }
    // the Y carried sqrt(pi)-units already; divide the measure's pi out
    return {radial * re / std::numbers::pi, radial * im / std::numbers::pi};
}

double cross_eval_2d(const NollIndex& j, int samples, unsigned seed) {
    auto [idx, kind] = noll_unpack(j);
    RadialPoly rp = radial_2d(idx);
    double norm = noll_normalization(idx).to_double();
    CartPoly2 cart = zernike_to_cart_2d(j);

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst = 0.0;
    int done = 0;
    while (done < samples) {
        double x = uni(rng), y = uni(rng);
        if (x * x + y * y >= 1.0) continue;
        ++done;
        double r = std::hypot(x, y);
        double phi = std::atan2(y, x);
        double ang = 1.0;
        if (kind.kind == Kind::Cos) ang = std::cos(kind.m * phi);
        if (kind.kind == Kind::Sin) ang = std::sin(kind.m * phi);
        double polar = norm * rp.eval(r) * ang;
        worst = std::max(worst, std::abs(polar - cart.eval(x, y)));
    }
    return worst;
}

double cross_eval_3d(int n, int l, int m, int samples, unsigned seed) {
    RadialPoly rp = radial_3d(Index3D(n, l));
    CartPoly3 cart = zernike3d_to_cart(n, l, m);

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst = 0.0;
    int done = 0;
    while (done < samples) {
        double x = uni(rng), y = uni(rng), z = uni(rng);
        double r2 = x * x + y * y + z * z;
        if (r2 >= 1.0) continue;
        ++done;
        double r = std::sqrt(r2);
        double theta = r > 0 ? std::acos(z / r) : 0.0;
        double phi = std::atan2(y, x);
        auto y_val = ylm_numeric(l, m, theta, phi);
        double pre = rp.eval(r);
        auto c = cart.eval(x, y, z);
        worst = std::max(worst, std::abs(pre * y_val[0] - c[0]));
        worst = std::max(worst, std::abs(pre * y_val[1] - c[1]));
    }
    return worst;
}

double ylm_orthonormality_residual(int lmax, const QuadratureRule& rule, int phi_points) {
    double worst = 0.0;
    for (int l1 = 0; l1 <= lmax; ++l1)
        for (int m1 = -l1; m1 <= l1; ++m1)
            for (int l2 = l1; l2 <= lmax; ++l2)
                for (int m2 = (l2 == l1 ? m1 : -l2); m2 <= l2; ++m2) {
                    double accre = 0.0;
                    for (size_t i = 0; i < rule.nodes().size(); ++i) {
                        double theta = std::acos(rule.nodes()[i]);
                        double wt = rule.weights()[i];
                        double inner = 0.0;
                        for (int k = 0; k < phi_points; ++k) {
                            double phi = 2.0 * std::numbers::pi * k / phi_points;
                            auto a = ylm_numeric(l1, m1, theta, phi);
                            auto b = ylm_numeric(l2, m2, theta, phi);
                            inner += a[0] * b[0] + a[1] * b[1];  // Re(a * conj(b))
                        }
                        accre += wt * inner * 2.0 * std::numbers::pi / phi_points;
                    }
                    // sqrt(pi)-factored Ys: <Y~, Y~> = pi * delta
                    double target = (l1 == l2 && m1 == m2) ? std::numbers::pi : 0.0;
                    worst = std::max(worst, std::abs(accre - target) / std::numbers::pi);
                }
    return worst;
}

} // namespace zern
