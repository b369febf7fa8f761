#include "zernike/poly.hpp"

#include <cmath>
#include <sstream>

namespace zern {

SurdSum RadialPoly::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? SurdSum() : it->second;
}

void RadialPoly::set(int e, const SurdSum& c) {
    if (c.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

void RadialPoly::add(int e, const SurdSum& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

RadialPoly& RadialPoly::operator+=(const RadialPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
}

RadialPoly& RadialPoly::operator-=(const RadialPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
}

RadialPoly operator*(const RadialPoly& a, const RadialPoly& b) {
    RadialPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) out.add(ea + eb, ca * cb);
    return out;
}

RadialPoly RadialPoly::scaled(const SurdSum& s) const {
    RadialPoly out;
    for (const auto& [e, c] : coeffs_) out.add(e, c * s);
    return out;
}

SurdSum RadialPoly::value_at_one() const {
    SurdSum s;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

double RadialPoly::eval(double r) const {
    // Horner over stored exponents (ascending map, walk from the top)
    double acc = 0.0;
    int prev = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev >= 0) acc *= std::pow(r, prev - it->first);
        acc += it->second.to_double();
        prev = it->first;
    }
    if (prev > 0) acc *= std::pow(r, prev);
    return coeffs_.empty() ? 0.0 : acc;
}

std::string RadialPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        bool atom = c.terms().size() == 1;
        if (!first) os << (neg && atom ? " " : " +");
        first = false;
        if (!atom) os << "(" << cs << ")";
        else os << cs;
        if (e > 0) {
            os << "*" << var;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

SurdSum CartPoly2::coeff(int px, int py) const {
    auto it = coeffs_.find({px, py});
    return it == coeffs_.end() ? SurdSum() : it->second;
}

void CartPoly2::add(int px, int py, const SurdSum& c) {
    if (c.is_zero()) return;
    Key k{px, py};
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

CartPoly2& CartPoly2::operator+=(const CartPoly2& o) {
    for (const auto& [k, c] : o.coeffs_) add(k[0], k[1], c);
    return *this;
}

CartPoly2& CartPoly2::operator-=(const CartPoly2& o) {
    for (const auto& [k, c] : o.coeffs_) add(k[0], k[1], -c);
    return *this;
}

CartPoly2 operator*(const CartPoly2& a, const CartPoly2& b) {
    CartPoly2 out;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) out.add(ka[0] + kb[0], ka[1] + kb[1], ca * cb);
    return out;
}

CartPoly2 CartPoly2::scaled(const SurdSum& s) const {
    CartPoly2 out;
    for (const auto& [k, c] : coeffs_) out.add(k[0], k[1], c * s);
    return out;
}

double CartPoly2::eval(double x, double y) const {
    double acc = 0.0;
    for (const auto& [k, c] : coeffs_)
        acc += c.to_double() * std::pow(x, k[0]) * std::pow(y, k[1]);
    return acc;
}

static void append_monomial(std::ostringstream& os, const char* v, int e) {
    if (e == 0) return;
    os << "*" << v;
    if (e > 1) os << "^" << e;
}

std::string CartPoly2::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        std::string cs = c.to_string();
        bool atom = c.terms().size() == 1;
        bool neg = !cs.empty() && cs[0] == '-';
        if (!first) os << (neg && atom ? " " : " +");
        first = false;
        if (!atom) os << "(" << cs << ")";
        else os << cs;
        append_monomial(os, "x", k[0]);
        append_monomial(os, "y", k[1]);
    }
    return os.str();
}

ComplexSurd CartPoly3::coeff(int px, int py, int pz) const {
    auto it = coeffs_.find({px, py, pz});
    return it == coeffs_.end() ? ComplexSurd() : it->second;
}

void CartPoly3::add(int px, int py, int pz, const ComplexSurd& c) {
    if (c.is_zero()) return;
    Key k{px, py, pz};
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

CartPoly3& CartPoly3::operator+=(const CartPoly3& o) {
    for (const auto& [k, c] : o.coeffs_) add(k[0], k[1], k[2], c);
    return *this;
}

CartPoly3& CartPoly3::operator-=(const CartPoly3& o) {
    for (const auto& [k, c] : o.coeffs_) {
        ComplexSurd m = c;
        m.re = -m.re;
        m.im = -m.im;
        add(k[0], k[1], k[2], m);
    }
    return *this;
}

CartPoly3 operator*(const CartPoly3& a, const CartPoly3& b) {
    CartPoly3 out;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_)
            out.add(ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ca * cb);
    return out;
}

CartPoly3 CartPoly3::scaled(const ComplexSurd& s) const {
    CartPoly3 out;
    for (const auto& [k, c] : coeffs_) out.add(k[0], k[1], k[2], c * s);
    return out;
}

CartPoly3 CartPoly3::conj() const {
    CartPoly3 out;
    for (const auto& [k, c] : coeffs_) out.add(k[0], k[1], k[2], c.conj());
    return out;
}

std::array<double, 2> CartPoly3::eval(double x, double y, double z) const {
    double re = 0.0, im = 0.0;
    for (const auto& [k, c] : coeffs_) {
        double mono = std::pow(x, k[0]) * std::pow(y, k[1]) * std::pow(z, k[2]);
        re += c.re.to_double() * mono;
        im += c.im.to_double() * mono;
    }
    return {re, im};
}

std::string CartPoly3::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << " +";
        first = false;
        os << "(" << c.to_string() << ")";
        append_monomial(os, "x", k[0]);
        append_monomial(os, "y", k[1]);
        append_monomial(os, "z", k[2]);
    }
    return os.str();
}

CartPoly3 trinomial_expand(int half_degree) {
    if (half_degree < 0) throw OutOfRangeError("trinomial_expand: negative half degree");
    CartPoly3 out;
    BigInt sfac = factorial(half_degree);
    for (int s1 = 0; s1 <= half_degree; ++s1) {
        for (int s2 = 0; s1 + s2 <= half_degree; ++s2) {
            int s3 = half_degree - s1 - s2;
            Rational c(sfac / (factorial(s1) * factorial(s2) * factorial(s3)));
            out.add(2 * s1, 2 * s2, 2 * s3, ComplexSurd(SurdSum(c)));
        }
    }
    return out;
}

AngularKind AngularKind::cos(int m) {
    if (m < 1) throw InvalidIndexError("cos kind requires m >= 1");
    return {Kind::Cos, m};
}

AngularKind AngularKind::sin(int m) {
    if (m < 1) throw InvalidIndexError("sin kind requires m >= 1");
    return {Kind::Sin, m};
}

std::string AngularKind::to_string() const {
    switch (kind) {
        case Kind::Radial: return "1";
        case Kind::Cos: return m == 1 ? "cos(phi)" : "cos(" + std::to_string(m) + "*phi)";
        case Kind::Sin: return m == 1 ? "sin(phi)" : "sin(" + std::to_string(m) + "*phi)";
    }
    return "?";
}

SurdSum ZernExpansion2D::coeff(int n, int m, AngularKind kind) const {
    auto it = terms_.find({n, m, kind});
    return it == terms_.end() ? SurdSum() : it->second;
}

void ZernExpansion2D::add(int n, int m, AngularKind kind, const SurdSum& c) {
    if (c.is_zero()) return;
    Key k{n, m, kind};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ComplexSurd ZernExpansion3D::coeff(int n, int l, int m) const {
    auto it = terms_.find({n, l, m});
    return it == terms_.end() ? ComplexSurd() : it->second;
}

void ZernExpansion3D::add(int n, int l, int m, const ComplexSurd& c) {
    if (c.is_zero()) return;
    Key k{n, l, m};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

} // namespace zern
