#include "zernike/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace zern {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct TermParts {
    bool imag = false;
    Rational coeff = 1;
    BigInt radicand = 1;
};

TermParts parse_term(const std::string& chunk) {
    TermParts t;
    std::string body = chunk;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    if (body.empty()) throw std::runtime_error("empty surd term");
    std::vector<std::string> factors;
    std::stringstream ss(body);
    std::string f;
    while (std::getline(ss, f, '*')) factors.push_back(f);
    bool have_coeff = false;
    for (size_t i = 0; i < factors.size(); ++i) {
        const std::string& fac = factors[i];
        if (fac == "i") {
            t.imag = true;
        } else if (auto pos = fac.find("^(1/2)"); pos != std::string::npos) {
            t.radicand = BigInt(fac.substr(0, pos));
        } else if (auto slash = fac.find('/'); slash != std::string::npos) {
            t.coeff = Rational(BigInt(fac.substr(0, slash)), BigInt(fac.substr(slash + 1)));
            have_coeff = true;
        } else {
            t.coeff = Rational(BigInt(fac));
            have_coeff = true;
        }
    }
    if (!have_coeff) t.coeff = 1;
    if (neg) t.coeff = -t.coeff;
    return t;
}

} // namespace

ComplexSurd parse_surd_text(const std::string& text) {
    ComplexSurd out;
    std::string s = strip(text);
    if (s.empty() || s == "0") return out;
    std::stringstream ss(s);
    std::string chunk;
    while (ss >> chunk) {
        TermParts t = parse_term(chunk);
        SurdSum term = SurdSum::sqrt_term(t.coeff, t.radicand);
        if (t.imag)
            out.im += term;
        else
            out.re += term;
    }
    return out;
}

FixtureEntry parse_fixture_line(const std::string& line) {
    size_t p1 = line.find('|');
    size_t p2 = line.find('|', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::runtime_error("fixture line needs two '|' separators: " + line);
    FixtureEntry e;
    e.family = strip(line.substr(0, p1));
    std::stringstream ks(line.substr(p1 + 1, p2 - p1 - 1));
    long long v;
    while (ks >> v) e.key.push_back(v);
    e.value = parse_surd_text(line.substr(p2 + 1));
    return e;
}

std::vector<FixtureEntry> load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    std::vector<FixtureEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        out.push_back(parse_fixture_line(s));
    }
    return out;
}

} // namespace zern
