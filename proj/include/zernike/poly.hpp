#pragma once

#include "zernike/surd.hpp"

#include <array>
#include <map>
#include <string>

namespace zern {

// Sparse exact polynomial in r: exponent -> nonzero SurdSum.
class RadialPoly {
  public:
    RadialPoly() = default;

    const std::map<int, SurdSum>& coeffs() const { return coeffs_; }
    SurdSum coeff(int e) const;
    void set(int e, const SurdSum& c);
    void add(int e, const SurdSum& c);
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    RadialPoly& operator+=(const RadialPoly& o);
    RadialPoly& operator-=(const RadialPoly& o);
    friend RadialPoly operator+(RadialPoly a, const RadialPoly& b) { return a += b; }
    friend RadialPoly operator-(RadialPoly a, const RadialPoly& b) { return a -= b; }
    friend RadialPoly operator*(const RadialPoly& a, const RadialPoly& b);
    RadialPoly scaled(const SurdSum& s) const;
    friend bool operator==(const RadialPoly& a, const RadialPoly& b) = default;

    // Value at r = 1: plain sum of coefficients.
    SurdSum value_at_one() const;
    double eval(double r) const;

    std::string to_string(const std::string& var = "r") const;

  private:
    std::map<int, SurdSum> coeffs_;
};

// Sparse exact bivariate polynomial: (px, py) -> nonzero SurdSum.
class CartPoly2 {
  public:
    using Key = std::array<int, 2>;

    const std::map<Key, SurdSum>& coeffs() const { return coeffs_; }
    SurdSum coeff(int px, int py) const;
    void add(int px, int py, const SurdSum& c);
    bool is_zero() const { return coeffs_.empty(); }

    CartPoly2& operator+=(const CartPoly2& o);
    CartPoly2& operator-=(const CartPoly2& o);
    friend CartPoly2 operator+(CartPoly2 a, const CartPoly2& b) { return a += b; }
    friend CartPoly2 operator-(CartPoly2 a, const CartPoly2& b) { return a -= b; }
    friend CartPoly2 operator*(const CartPoly2& a, const CartPoly2& b);
    CartPoly2 scaled(const SurdSum& s) const;
    friend bool operator==(const CartPoly2& a, const CartPoly2& b) = default;

    double eval(double x, double y) const;
    std::string to_string() const;

  private:
    std::map<Key, SurdSum> coeffs_;
};

// Sparse exact trivariate polynomial with complex coefficients.
class CartPoly3 {
  public:
    using Key = std::array<int, 3>;

    const std::map<Key, ComplexSurd>& coeffs() const { return coeffs_; }
    ComplexSurd coeff(int px, int py, int pz) const;
    void add(int px, int py, int pz, const ComplexSurd& c);
    bool is_zero() const { return coeffs_.empty(); }

    CartPoly3& operator+=(const CartPoly3& o);
    CartPoly3& operator-=(const CartPoly3& o);
    friend CartPoly3 operator+(CartPoly3 a, const CartPoly3& b) { return a += b; }
    friend CartPoly3 operator-(CartPoly3 a, const CartPoly3& b) { return a -= b; }
    friend CartPoly3 operator*(const CartPoly3& a, const CartPoly3& b);
    CartPoly3 scaled(const ComplexSurd& s) const;
    CartPoly3 conj() const;
    friend bool operator==(const CartPoly3& a, const CartPoly3& b) = default;

    // (re, im) at a real point.
    std::array<double, 2> eval(double x, double y, double z) const;
    std::string to_string() const;

  private:
    std::map<Key, ComplexSurd> coeffs_;
};

// (x^2 + y^2 + z^2)^half_degree with multinomial coefficients.
CartPoly3 trinomial_expand(int half_degree);

enum class Kind { Radial = 0, Cos = 1, Sin = 2 };

// Angular factor: cos(m phi), sin(m phi) (m >= 1) or the radial-only m = 0 case.
struct AngularKind {
    Kind kind = Kind::Radial;
    int m = 0;

    static AngularKind radial() { return {Kind::Radial, 0}; }
    static AngularKind cos(int m);
    static AngularKind sin(int m);
    friend auto operator<=>(const AngularKind& a, const AngularKind& b) = default;
    std::string to_string() const;
};

// 2D Zernike-basis expansion: (n, m, kind) -> nonzero SurdSum.
class ZernExpansion2D {
  public:
    struct Key {
        int n, m;
        AngularKind kind;
        friend auto operator<=>(const Key& a, const Key& b) = default;
    };

    const std::map<Key, SurdSum>& terms() const { return terms_; }
    SurdSum coeff(int n, int m, AngularKind kind) const;
    void add(int n, int m, AngularKind kind, const SurdSum& c);
    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const ZernExpansion2D& a, const ZernExpansion2D& b) = default;

  private:
    std::map<Key, SurdSum> terms_;
};

// 3D Zernike-basis expansion: (n, l, m) -> nonzero ComplexSurd.
class ZernExpansion3D {
  public:
    using Key = std::array<int, 3>;  // n, l, m

    const std::map<Key, ComplexSurd>& terms() const { return terms_; }
    ComplexSurd coeff(int n, int l, int m) const;
    void add(int n, int l, int m, const ComplexSurd& c);
    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const ZernExpansion3D& a, const ZernExpansion3D& b) = default;

  private:
    std::map<Key, ComplexSurd> terms_;
};

} // namespace zern
