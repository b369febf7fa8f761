#pragma once

#include "zernike/zernike2d.hpp"
#include "zernike/zernike3d.hpp"

#include <vector>

namespace zern {

// Gauss-Legendre rule on (-1, 1); nodes by Newton iteration on P_n.
class QuadratureRule {
  public:
    explicit QuadratureRule(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    // Integral over (0, 1) after affine mapping.
    template <class F>
    double integrate01(F&& f) const {
        double acc = 0.0;
        for (size_t i = 0; i < nodes_.size(); ++i)
            acc += weights_[i] * f(0.5 * (nodes_[i] + 1.0));
        return 0.5 * acc;
    }

    // Integral over (-1, 1).
    template <class F>
    double integrate11(F&& f) const {
        double acc = 0.0;
        for (size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(nodes_[i]);
        return acc;
    }

  private:
    std::vector<double> nodes_, weights_;
};

double eval_radial(const RadialPoly& p, double r);

// |quadrature - exact target| for the weighted pair integral; target is
// delta/(2(n+1)) in 2D and delta in 3D.
double ortho_check_2d(int n, int nprime, int m, const QuadratureRule& rule);
double ortho_check_3d(int n, int nprime, int l, const QuadratureRule& rule);

// Quadrature of the weighted triple products behind g and k.
double brute_force_g(const Index2D& i1, const Index2D& i2, const Index2D& i3,
                     const QuadratureRule& rule);
double brute_force_k(const Index3D& i1, const Index3D& i2, const Index3D& i3,
                     const QuadratureRule& rule);

// Brute-force partners of the expansion coefficients (same integrals the
// closed forms solve): h = 2(n+1) Int r^{j+1} R, f = Int r^{j+2} R.
double brute_force_h(int j, const Index2D& idx, const QuadratureRule& rule);
double brute_force_f(int j, const Index3D& idx, const QuadratureRule& rule);

// Numeric u via the triple 1D integrals (theta x phi x r product rule).
// phi handled by trapezoid (periodic), theta and r by Gauss-Legendre.
// Returns (re, im) in the library's sqrt(pi)-factored units.
std::array<double, 2> brute_force_u(int p, int q, int t, const Index3D& idx, int m,
                                    const QuadratureRule& rule, int phi_points = 256);

// Max |polar-form - Cartesian-form| of Z over seeded random interior points.
double cross_eval_2d(const NollIndex& j, int samples, unsigned seed);
double cross_eval_3d(int n, int l, int m, int samples, unsigned seed);

// Max deviation from delta_{l,l'} delta_{m,m'} of the numeric sphere inner
// products of the sqrt(pi)-factored Y's, all l, l' <= lmax.
double ylm_orthonormality_residual(int lmax, const QuadratureRule& rule, int phi_points = 256);

} // namespace zern
