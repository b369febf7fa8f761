#include "zernike/surd.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <sstream>

namespace zern {

using Float100 = boost::multiprecision::cpp_bin_float_100;

std::pair<BigInt, BigInt> normalize_radicand(const BigInt& n) {
    if (n < 1) throw OutOfRangeError("normalize_radicand: argument must be >= 1");
    BigInt rest = n, outside = 1, core = 1;
    for (BigInt d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) continue;
        int e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        outside *= ipow(d, e / 2);
        if (e % 2 != 0) core *= d;
    }
    core *= rest;  // leftover is prime (or 1)
    return {outside, core};
}

SurdSum::SurdSum(const Rational& q) {
    if (q != 0) terms_.emplace(1, q);
}

void SurdSum::add_term(long long radicand, const Rational& q) {
    if (q == 0) return;
    auto it = terms_.find(radicand);
    if (it == terms_.end()) {
        terms_.emplace(radicand, q);
    } else {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

SurdSum SurdSum::sqrt_term(const Rational& q, const BigInt& n) {
    auto [outside, core] = normalize_radicand(n);
    SurdSum s;
    if (core > std::numeric_limits<long long>::max())
        throw OutOfRangeError("sqrt_term: squarefree core exceeds radicand key range");
    s.add_term(static_cast<long long>(core), q * Rational(outside));
    return s;
}

SurdSum SurdSum::sqrt_rational(const Rational& x) {
    if (x < 0) throw OutOfRangeError("sqrt_rational: negative argument");
    if (x == 0) return SurdSum();
    BigInt a = numerator(x), b = denominator(x);
    return sqrt_term(Rational(1, b), a * b);
}

bool SurdSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdSum::rational_part() const { return coeff(1); }

Rational SurdSum::coeff(long long radicand) const {
    auto it = terms_.find(radicand);
    return it == terms_.end() ? Rational(0) : it->second;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, q);
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, -q);
    return *this;
}

SurdSum& SurdSum::operator*=(const SurdSum& o) {
    SurdSum out;
    for (const auto& [j, qa] : terms_) {
        for (const auto& [k, qb] : o.terms_) {
            if (j == k) {
                out.add_term(1, qa * qb * j);
            } else {
                // sqrt(j)*sqrt(k) = outside*sqrt(core) of j*k
                auto [outside, core] = normalize_radicand(BigInt(j) * k);
                out.add_term(static_cast<long long>(core), qa * qb * Rational(outside));
            }
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

SurdSum& SurdSum::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= q;
    return *this;
}

SurdSum SurdSum::operator-() const {
    SurdSum s = *this;
    for (auto& [k, c] : s.terms_) c = -c;
    return s;
}

SurdSum SurdSum::divided_by_term(const SurdSum& divisor) const {
    if (divisor.is_zero()) throw OutOfRangeError("surd division by zero");
    if (divisor.terms_.size() != 1)
        throw OutOfRangeError("surd division restricted to single-term divisors");
    auto [k, q] = *divisor.terms_.begin();
    // 1/(q*sqrt(k)) = sqrt(k)/(q*k)
    SurdSum inv = sqrt_term(Rational(1) / (q * k), k);
    return *this * inv;
}

double SurdSum::to_double() const { return surd_to_double(*this); }

std::string SurdSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, q] : terms_) {
        Rational a = q < 0 ? Rational(-q) : q;
        if (first) {
            if (q < 0) os << "-";
            first = false;
        } else {
            os << (q < 0 ? " -" : " +");
        }
        os << numerator(a);
        if (denominator(a) != 1) os << "/" << denominator(a);
        if (k != 1) os << "*" << k << "^(1/2)";
    }
    return os.str();
}

ComplexSurd& ComplexSurd::operator+=(const ComplexSurd& o) {
    re += o.re;
    im += o.im;
    return *this;
}

ComplexSurd& ComplexSurd::operator-=(const ComplexSurd& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

ComplexSurd& ComplexSurd::operator*=(const ComplexSurd& o) {
    SurdSum r = re * o.re - im * o.im;
    SurdSum i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string ComplexSurd::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::ostringstream os;
    bool have_re = !re.is_zero();
    if (have_re) os << re.to_string();
    std::string ims = im.to_string();
    // inject i* after each term's sign
    std::string out;
    size_t pos = 0;
    bool neg = false;
    if (!ims.empty() && ims[0] == '-') {
        neg = true;
        pos = 1;
    }
    out += neg ? "-i*" : (have_re ? "+i*" : "i*");
    for (; pos < ims.size(); ++pos) {
        if (ims[pos] == '+' && pos > 0 && ims[pos - 1] == ' ') {
            out += "+i*";
        } else if (ims[pos] == '-' && pos > 0 && ims[pos - 1] == ' ') {
            out += "-i*";
        } else {
            out += ims[pos];
        }
    }
    if (have_re) os << " ";
    os << out;
    return os.str();
}

static Float100 eval_f100(const SurdSum& a) {
    Float100 acc = 0;
    for (const auto& [k, q] : a.terms()) {
        Float100 num(numerator(q).str());
        Float100 den(denominator(q).str());
        acc += num / den * sqrt(Float100(k));
    }
    return acc;
}

double surd_to_double(const SurdSum& a) { return eval_f100(a).convert_to<double>(); }

std::string surd_to_float_string(const SurdSum& a, int precision_bits) {
    if (precision_bits < 1 || precision_bits > 300)
        throw OutOfRangeError("surd_to_float_string: precision out of supported range");
    int digits10 = static_cast<int>(precision_bits * 0.30103) + 2;
    std::ostringstream os;
    os.precision(digits10);
    os << eval_f100(a);
    return os.str();
}

} // namespace zern
