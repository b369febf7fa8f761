#include "zernike/jsonio.hpp"

namespace zern {

using nlohmann::json;

json to_json(const SurdSum& s, bool imag) {
    json terms = json::array();
    for (const auto& [k, q] : s.terms()) {
        terms.push_back({{"num", numerator(q).str()},
                         {"den", denominator(q).str()},
                         {"radicand", k},
                         {"imag", imag}});
    }
    return terms;
}

json to_json(const ComplexSurd& z) {
    json terms = to_json(z.re, false);
    for (auto& t : to_json(z.im, true)) terms.push_back(t);
    return terms;
}

json to_json(const RadialPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.coeffs()) arr.push_back({{"exponent", e}, {"terms", to_json(c)}});
    return arr;
}

json to_json(const CartPoly2& p) {
    json arr = json::array();
    for (const auto& [k, c] : p.coeffs())
        arr.push_back({{"monomial", {k[0], k[1]}}, {"terms", to_json(c)}});
    return arr;
}

json to_json(const CartPoly3& p) {
    json arr = json::array();
    for (const auto& [k, c] : p.coeffs())
        arr.push_back({{"monomial", {k[0], k[1], k[2]}}, {"terms", to_json(c)}});
    return arr;
}

json to_json(const ZernExpansion2D& e) {
    json arr = json::array();
    for (const auto& [k, c] : e.terms())
        arr.push_back({{"key", {k.n, k.m, static_cast<int>(k.kind.kind)}}, {"terms", to_json(c)}});
    return arr;
}

json to_json(const ZernExpansion3D& e) {
    json arr = json::array();
    for (const auto& [k, c] : e.terms())
        arr.push_back({{"key", {k[0], k[1], k[2]}}, {"terms", to_json(c)}});
    return arr;
}

ComplexSurd complex_from_json(const json& j) {
    ComplexSurd z;
    for (const auto& t : j) {
        Rational q(BigInt(t.at("num").get<std::string>()),
                   BigInt(t.at("den").get<std::string>()));
        SurdSum term = SurdSum::sqrt_term(q, t.at("radicand").get<long long>());
        if (t.value("imag", false))
            z.im += term;
        else
            z.re += term;
    }
    return z;
}

SurdSum surd_from_json(const json& j) { return complex_from_json(j).re; }

RadialPoly radial_from_json(const json& j) {
    RadialPoly p;
    for (const auto& row : j) p.add(row.at("exponent").get<int>(), surd_from_json(row.at("terms")));
    return p;
}

CartPoly2 cart2_from_json(const json& j) {
    CartPoly2 p;
    for (const auto& row : j) {
        auto m = row.at("monomial");
        p.add(m.at(0).get<int>(), m.at(1).get<int>(), surd_from_json(row.at("terms")));
    }
    return p;
}

CartPoly3 cart3_from_json(const json& j) {
    CartPoly3 p;
    for (const auto& row : j) {
        auto m = row.at("monomial");
        p.add(m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>(),
              complex_from_json(row.at("terms")));
    }
    return p;
}

ZernExpansion2D zexp2_from_json(const json& j) {
    ZernExpansion2D e;
    for (const auto& row : j) {
        auto k = row.at("key");
        int n = k.at(0).get<int>(), m = k.at(1).get<int>(), kindcode = k.at(2).get<int>();
        AngularKind kind = kindcode == 0 ? AngularKind::radial()
                           : kindcode == 1 ? AngularKind::cos(m)
                                           : AngularKind::sin(m);
        e.add(n, m, kind, surd_from_json(row.at("terms")));
    }
    return e;
}

ZernExpansion3D zexp3_from_json(const json& j) {
    ZernExpansion3D e;
    for (const auto& row : j) {
        auto k = row.at("key");
        e.add(k.at(0).get<int>(), k.at(1).get<int>(), k.at(2).get<int>(),
              complex_from_json(row.at("terms")));
    }
    return e;
}

} // namespace zern
