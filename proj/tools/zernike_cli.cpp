// Command-line surface: exact Zernike coefficient tables, conversions and
// verification suites. Exit status: 0 pass, 1 check failure, 2 usage error.

#include "zernike/jsonio.hpp"
#include "zernike/verify.hpp"

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <set>

using namespace zern;
using nlohmann::json;

namespace {

int thread_count() {
    if (const char* env = std::getenv("ZERNIKE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

// Deterministic per-row parallel map: rows are emitted in input order no
// matter how many workers ran.
template <class Row, class Fn>
std::vector<std::string> render_rows(const std::vector<Row>& rows, Fn&& fn) {
    int workers = thread_count();
    std::vector<std::string> out(rows.size());
    if (workers <= 1 || rows.size() < 2) {
        for (size_t i = 0; i < rows.size(); ++i) out[i] = fn(rows[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < rows.size(); i = next++) out[i] = fn(rows[i]);
    };
    std::vector<std::future<void>> futs;
    for (int w = 0; w < workers; ++w) futs.push_back(std::async(std::launch::async, work));
    for (auto& f : futs) f.get();
    return out;
}

// joins "+term"/"-term" pieces without producing "+-"
void join_term(std::string& line, bool& first, const std::string& text) {
    if (first) {
        line += " " + text;
        first = false;
        return;
    }
    line += (text.rfind('-', 0) == 0) ? " " + text : " +" + text;
}

json key_json(std::initializer_list<long long> key) {
    json a = json::array();
    for (auto v : key) a.push_back(v);
    return a;
}

json row_json(const std::string& family, std::initializer_list<long long> key,
              const ComplexSurd& value) {
    return json{{"family", family}, {"key", key_json(key)}, {"terms", to_json(value)}};
}

struct TableOptions {
    std::string format = "text";
    int nmax = -1, jmax = -1, degmax = -1, lmax = -1;
    int n1 = -1, l1 = -1, n2 = -1, l2 = -1, l3 = -1;
    int m1 = -1, m2 = -1, m3 = -1;
};

void emit(const std::vector<std::string>& lines) {
    for (const auto& l : lines) std::cout << l << "\n";
}

int cmd_table(const std::string& family, const TableOptions& opt) {
    bool as_json = opt.format == "json";

    if (family == "radial2d") {
        int nmax = opt.nmax < 0 ? 13 : opt.nmax;
        std::vector<Index2D> rows;
        for (int n = 0; n <= nmax; ++n)
            for (int m = n % 2; m <= n; m += 2) rows.emplace_back(n, m);
        emit(render_rows(rows, [&](const Index2D& idx) {
            RadialPoly p = radial_2d(idx);
            if (as_json) {
                json j{{"family", "radial2d"}, {"key", {idx.n, idx.m}}, {"value", to_json(p)}};
                return j.dump();
            }
            return "R_" + std::to_string(idx.n) + "^" + std::to_string(idx.m) +
                   "(r) = " + p.to_string();
        }));
        return 0;
    }
    if (family == "radial3d") {
        int nmax = opt.nmax < 0 ? 13 : opt.nmax;
        std::vector<Index3D> rows;
        for (int n = 0; n <= nmax; ++n)
            for (int l = n % 2; l <= n; l += 2) rows.emplace_back(n, l);
        emit(render_rows(rows, [&](const Index3D& idx) {
            RadialPoly p = radial_3d(idx);
            if (as_json) {
                json j{{"family", "radial3d"}, {"key", {idx.n, idx.l}}, {"value", to_json(p)}};
                return j.dump();
            }
            return "R_" + std::to_string(idx.n) + "^(" + std::to_string(idx.l) +
                   ")(r) = " + p.to_string();
        }));
        return 0;
    }
    if (family == "h") {
        int jmax = opt.jmax < 0 ? 14 : opt.jmax;
        std::vector<std::pair<int, int>> rows;
        for (int j = 0; j <= jmax; ++j)
            for (int m = j % 2; m <= j; m += 2) rows.emplace_back(j, m);
        emit(render_rows(rows, [&](const std::pair<int, int>& jm) {
            auto [j, m] = jm;
            auto exp = power_to_radial_2d(j, m);
            if (as_json) {
                json terms = json::array();
                for (const auto& [n, h] : exp)
                    terms.push_back(row_json("h", {j, n, m}, ComplexSurd(SurdSum(h))));
                return terms.dump();
            }
            std::string line = "r^" + std::to_string(j) + " =";
            bool first = true;
            for (const auto& [n, h] : exp) {
                join_term(line, first, SurdSum(h).to_string() + "*R_" +
                        std::to_string(n) + "^" + std::to_string(m) + "(r)");
            }
            return line;
        }));
        return 0;
    }
    if (family == "noll") {
        int jmax = opt.jmax < 0 ? 66 : opt.jmax;
        std::vector<int> rows;
        for (int j = 1; j <= jmax; ++j) rows.push_back(j);
        emit(render_rows(rows, [&](int j) {
            auto [idx, kind] = noll_unpack(NollIndex(j));
            SurdSum norm = noll_normalization(idx);
            if (as_json) {
                json jj{{"family", "noll"},
                        {"key", {j, idx.n, idx.m, static_cast<int>(kind.kind)}},
                        {"terms", to_json(ComplexSurd(norm))}};
                return jj.dump();
            }
            std::string line = "Z_" + std::to_string(j) + " = " + norm.to_string() + "*R_" +
                               std::to_string(idx.n) + "^" + std::to_string(idx.m) + "(r)";
            if (kind.kind != Kind::Radial) line += "*" + kind.to_string();
            return line;
        }));
        return 0;
    }
    if (family == "g" || family == "k") {
        bool is_g = family == "g";
        if (opt.n1 < 0 || opt.n2 < 0)
            throw CLI::ValidationError("table " + family, "--n1 and --n2 are required");
        if (is_g) {
            Index2D i1(opt.n1, opt.m1 < 0 ? opt.n1 % 2 : opt.m1);
            Index2D i2(opt.n2, opt.m2 < 0 ? opt.n2 % 2 : opt.m2);
            int m3 = opt.m3 < 0 ? i1.m + i2.m : opt.m3;
            auto exp = product_expand_2d(i1, i2, m3);
            json arr = json::array();
            std::string line = "R_" + std::to_string(i1.n) + "^" + std::to_string(i1.m) +
                               "(r)*R_" + std::to_string(i2.n) + "^" + std::to_string(i2.m) +
                               "(r) =";
            bool first = true;
            for (const auto& [n3, gg] : exp) {
                arr.push_back(row_json("g", {i1.n, i1.m, i2.n, i2.m, m3, n3},
                                       ComplexSurd(SurdSum(gg))));
                join_term(line, first, SurdSum(gg).to_string() + "*R_" +
                        std::to_string(n3) + "^" + std::to_string(m3) + "(r)");
            }
            std::cout << (as_json ? arr.dump() : line) << "\n";
            return 0;
        }
        Index3D i1(opt.n1, opt.l1 < 0 ? opt.n1 % 2 : opt.l1);
        Index3D i2(opt.n2, opt.l2 < 0 ? opt.n2 % 2 : opt.l2);
        int l3 = opt.l3 < 0 ? i1.l + i2.l : opt.l3;
        auto exp = product_expand_3d(i1, i2, l3);
        json arr = json::array();
        std::string line = "R_" + std::to_string(i1.n) + "^(" + std::to_string(i1.l) +
                           ")(r)*R_" + std::to_string(i2.n) + "^(" + std::to_string(i2.l) +
                           ")(r) =";
        bool first = true;
        for (const auto& [n3, kk] : exp) {
            arr.push_back(row_json("k", {i1.n, i1.l, i2.n, i2.l, n3, l3}, ComplexSurd(kk)));
            join_term(line, first, kk.to_string() + "*R_" + std::to_string(n3) + "^(" +
                    std::to_string(l3) + ")(r)");
        }
        std::cout << (as_json ? arr.dump() : line) << "\n";
        return 0;
    }
    if (family == "f") {
        int jmax = opt.jmax < 0 ? 13 : opt.jmax;
        std::vector<std::pair<int, int>> rows;
        for (int j = 0; j <= jmax; ++j)
            for (int l = j % 2; l <= j; l += 2) rows.emplace_back(j, l);
        emit(render_rows(rows, [&](const std::pair<int, int>& jl) {
            auto [j, l] = jl;
            auto exp = power_to_radial_3d(j, l);
            if (as_json) {
                json terms = json::array();
                for (const auto& [n, f] : exp)
                    terms.push_back(row_json("f", {j, n, l}, ComplexSurd(f)));
                return terms.dump();
            }
            std::string line = "r^" + std::to_string(j) + " =";
            bool first = true;
            for (const auto& [n, f] : exp) {
                join_term(line, first, f.to_string() + "*R_" + std::to_string(n) + "^(" +
                        std::to_string(l) + ")(r)");
            }
            return line;
        }));
        return 0;
    }
    if (family == "fhat") {
        int nmax = opt.nmax < 0 ? 13 : opt.nmax;
        std::vector<std::pair<int, int>> rows;
        for (int n = 0; n <= nmax; ++n)
            for (int j = n % 2; j <= n; j += 2) rows.emplace_back(j, n);
        emit(render_rows(rows, [&](const std::pair<int, int>& jn) {
            auto [j, n] = jn;
            auto exp = power_to_radial_3d_fixed_n(j, n);
            if (as_json) {
                json terms = json::array();
                for (const auto& [l, c] : exp)
                    terms.push_back(row_json("fhat", {j, n, l}, ComplexSurd(c)));
                return terms.dump();
            }
            std::string line = "r^" + std::to_string(j) + " =";
            bool first = true;
            for (const auto& [l, c] : exp) {
                join_term(line, first, c.to_string() + "*R_" + std::to_string(n) + "^(" +
                        std::to_string(l) + ")(r)");
            }
            return line;
        }));
        return 0;
    }
    if (family == "ylmcart") {
        int lmax = opt.lmax < 0 ? 6 : opt.lmax;
        std::vector<SphIndex> rows;
        for (int l = 0; l <= lmax; ++l)
            for (int m = 0; m <= l; ++m) rows.emplace_back(l, m);
        emit(render_rows(rows, [&](const SphIndex& idx) {
            CartPoly3 p = ylm_cart(idx);
            if (as_json) {
                json j{{"family", "ylmcart"}, {"key", {idx.l, idx.m}}, {"value", to_json(p)}};
                return j.dump();
            }
            return "Pi^(1/2) r^" + std::to_string(idx.l) + " Y_" + std::to_string(idx.l) + "^(" +
                   std::to_string(idx.m) + ") = " + p.to_string();
        }));
        return 0;
    }
    if (family == "z3dcart") {
        int nmax = opt.nmax < 0 ? 7 : opt.nmax;
        std::vector<std::array<int, 3>> rows;
        for (int n = 0; n <= nmax; ++n)
            for (int l = n % 2; l <= n; l += 2)
                for (int m = 0; m <= l; ++m) rows.push_back({n, l, m});
        emit(render_rows(rows, [&](const std::array<int, 3>& k) {
            CartPoly3 p = zernike3d_to_cart(k[0], k[1], k[2]);
            if (as_json) {
                json j{{"family", "z3dcart"}, {"key", {k[0], k[1], k[2]}}, {"value", to_json(p)}};
                return j.dump();
            }
            return "Pi^(1/2) Z_" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "^(" +
                   std::to_string(k[2]) + ") = " + p.to_string();
        }));
        return 0;
    }
    if (family == "yprod") {
        int lmax = opt.lmax < 0 ? 2 : opt.lmax;
        std::vector<std::array<int, 4>> rows;
        for (int l1 = 0; l1 <= lmax; ++l1)
            for (int m1 = -l1; m1 <= l1; ++m1)
                for (int l2 = 0; l2 <= l1; ++l2)
                    for (int m2 = -l2; m2 <= (l2 == l1 ? m1 : l2); ++m2)
                        rows.push_back({l1, m1, l2, m2});
        emit(render_rows(rows, [&](const std::array<int, 4>& k) {
            auto exp = y_product_expand(SphIndex(k[0], k[1]), SphIndex(k[2], k[3]));
            if (as_json) {
                json terms = json::array();
                for (const auto& [out, c] : exp)
                    terms.push_back(row_json("yprod", {k[0], k[1], k[2], k[3], out.l},
                                             ComplexSurd(c)));
                return terms.dump();
            }
            std::string line = "Pi^(1/2) Y_" + std::to_string(k[0]) + "^(" +
                               std::to_string(k[1]) + ") Y_" + std::to_string(k[2]) + "^(" +
                               std::to_string(k[3]) + ") =";
            bool first = true;
            for (const auto& [out, c] : exp) {
                join_term(line, first, c.to_string() + "*Y_" + std::to_string(out.l) +
                        "^(" + std::to_string(out.m) + ")");
            }
            return line;
        }));
        return 0;
    }
    if (family == "cart2z2d") {
        int degmax = opt.degmax < 0 ? 8 : opt.degmax;
        std::vector<std::pair<int, int>> rows;
        for (int d = 0; d <= degmax; ++d)
            for (int p = d; p >= 0; --p) rows.emplace_back(p, d - p);
        emit(render_rows(rows, [&](const std::pair<int, int>& pq) {
            auto [p, q] = pq;
            ZernExpansion2D exp = cart_monomial_to_zernike_2d(p, q);
            if (as_json) {
                json terms = json::array();
                for (const auto& [key, c] : exp.terms())
                    terms.push_back(row_json(
                        "cart2z2d", {p, q, key.n, key.m, static_cast<int>(key.kind.kind)},
                        ComplexSurd(c)));
                return terms.dump();
            }
            std::string line = "x^" + std::to_string(p) + " y^" + std::to_string(q) + " =";
            bool first = true;
            for (const auto& [key, c] : exp.terms()) {
                std::string piece = c.to_string() + "*R_" + std::to_string(key.n) + "^" +
                                    std::to_string(key.m) + "(r)";
                if (key.kind.kind != Kind::Radial) piece += "*" + key.kind.to_string();
                join_term(line, first, piece);
            }
            return line;
        }));
        return 0;
    }
    if (family == "z2cart2d") {
        int nmax = opt.nmax < 0 ? 9 : opt.nmax;
        std::vector<int> rows;
        for (int j = 1;; ++j) {
            auto [idx, kind] = noll_unpack(NollIndex(j));
            if (idx.n > nmax) break;
            rows.push_back(j);
        }
        emit(render_rows(rows, [&](int j) {
            CartPoly2 p = zernike_to_cart_2d(NollIndex(j));
            if (as_json) {
                json jj{{"family", "z2cart2d"}, {"key", {j}}, {"value", to_json(p)}};
                return jj.dump();
            }
            return "Z_" + std::to_string(j) + " = " + p.to_string();
        }));
        return 0;
    }
    if (family == "u") {
        int degmax = opt.degmax < 0 ? 5 : opt.degmax;
        std::vector<std::array<int, 3>> rows;
        for (int d = 1; d <= degmax; ++d)
            for (int p = d; p >= 0; --p)
                for (int q = d - p; q >= 0; --q) rows.push_back({p, q, d - p - q});
        emit(render_rows(rows, [&](const std::array<int, 3>& mono) {
            auto [p, q, t] = mono;
            ZernExpansion3D exp = cart_monomial_to_zernike_3d(p, q, t);
            if (as_json) {
                json terms = json::array();
                for (const auto& [key, c] : exp.terms())
                    terms.push_back(row_json("u", {p, q, t, key[0], key[1], key[2]}, c));
                return terms.dump();
            }
            std::string line = "x^" + std::to_string(p) + " y^" + std::to_string(q) + " z^" +
                               std::to_string(t) + " / Pi^(1/2) =";
            bool first = true;
            for (const auto& [key, c] : exp.terms()) {
                join_term(line, first, c.to_string() + "*Z_" + std::to_string(key[0]) +
                        "," + std::to_string(key[1]) + "^(" + std::to_string(key[2]) + ")");
            }
            return line;
        }));
        return 0;
    }
    throw CLI::ValidationError("table", "unknown family: " + family);
}

int report_and_exit(const std::vector<CheckReport>& reports) {
    bool all_ok = true;
    for (const auto& r : reports) {
        bool ok = r.ok();
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.checked
                  << " checks";
        if (r.failed > 0) std::cout << ", " << r.failed << " failed, first: " << r.first_failure;
        std::cout << ")\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& fixture_dir, int dim, int jmax,
               int nmax, const std::string& family) {
    std::vector<CheckReport> reports;
    if (suite == "ortho") {
        if (dim != 3) reports.push_back(verify_ortho_2d(nmax < 0 ? 16 : nmax));
        if (dim != 2) reports.push_back(verify_ortho_3d(nmax < 0 ? 12 : nmax));
    } else if (suite == "sumrules") {
        if (dim != 3) {
            reports.push_back(verify_sum_rules_2d(jmax < 0 ? 20 : jmax));
            reports.push_back(verify_sum_rule_g(nmax < 0 ? 8 : nmax));
        }
        if (dim != 2) {
            reports.push_back(verify_sum_rules_3d(jmax < 0 ? 13 : jmax));
            reports.push_back(verify_sum_rule_k(nmax < 0 ? 4 : nmax));
        }
    } else if (suite == "recurrences") {
        if (dim != 3) reports.push_back(verify_recurrences_2d(jmax < 0 ? 20 : jmax));
        if (dim != 2) reports.push_back(verify_recurrences_3d(jmax < 0 ? 16 : jmax));
    } else if (suite == "roundtrip") {
        if (dim != 3) reports.push_back(verify_roundtrip_2d(10));
        if (dim != 2) reports.push_back(verify_roundtrip_3d(5));
    } else if (suite == "oracle") {
        if (family.empty() || family == "h") reports.push_back(verify_oracle_h(jmax < 0 ? 14 : jmax));
        if (family.empty() || family == "f") reports.push_back(verify_oracle_f(jmax < 0 ? 13 : jmax));
        if (family.empty() || family == "fhat")
            reports.push_back(verify_oracle_fhat(nmax < 0 ? 13 : nmax));
        if (family.empty() || family == "g") reports.push_back(verify_oracle_g(nmax < 0 ? 8 : nmax));
        if (family.empty() || family == "k") reports.push_back(verify_oracle_k(nmax < 0 ? 4 : nmax));
        if (family.empty() || family == "u") reports.push_back(verify_oracle_u(5));
        if (family.empty()) {
            reports.push_back(verify_cross_eval_2d(9));
            reports.push_back(verify_cross_eval_3d(7));
        }
    } else if (suite == "fixtures") {
        if (family.empty()) {
            reports = verify_all_fixtures(fixture_dir);
        } else {
            auto rows = load_fixture_file(fixture_dir + "/" + family + ".fix");
            if (family == "z2cart2d") {
                auto prefs = load_fixture_file(fixture_dir + "/z2cart2d_pref.fix");
                rows.insert(rows.end(), prefs.begin(), prefs.end());
            }
            reports.push_back(verify_fixture_family(family, rows));
        }
    } else if (suite == "wigner") {
        reports.push_back(verify_wigner_symmetries(jmax < 0 ? 4 : jmax));
    } else {
        throw CLI::ValidationError("verify", "unknown suite: " + suite);
    }
    return report_and_exit(reports);
}

int cmd_convert(const std::string& direction, int dim, const std::string& monomial, int noll,
                const std::string& nlm, const std::string& format) {
    bool as_json = format == "json";
    auto split_ints = [](const std::string& s) {
        std::vector<int> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    if (direction == "cart2zern") {
        auto pq = split_ints(monomial);
        if (dim == 2) {
            if (pq.size() != 2)
                throw CLI::ValidationError("convert", "--monomial p,q required for dim 2");
            ZernExpansion2D exp = cart_monomial_to_zernike_2d(pq[0], pq[1]);
            if (as_json) {
                std::cout << to_json(exp).dump() << "\n";
                return 0;
            }
            std::string line = "x^" + std::to_string(pq[0]) + " y^" + std::to_string(pq[1]) + " =";
            bool first = true;
            for (const auto& [key, c] : exp.terms()) {
                std::string piece = c.to_string() + "*R_" + std::to_string(key.n) + "^" +
                                    std::to_string(key.m) + "(r)";
                if (key.kind.kind != Kind::Radial) piece += "*" + key.kind.to_string();
                join_term(line, first, piece);
            }
            std::cout << line << "\n";
            return 0;
        }
        if (pq.size() != 3)
            throw CLI::ValidationError("convert", "--monomial p,q,t required for dim 3");
        ZernExpansion3D exp = cart_monomial_to_zernike_3d(pq[0], pq[1], pq[2]);
        if (as_json) {
            std::cout << to_json(exp).dump() << "\n";
            return 0;
        }
        std::string line = "x^" + std::to_string(pq[0]) + " y^" + std::to_string(pq[1]) + " z^" +
                           std::to_string(pq[2]) + " / Pi^(1/2) =";
        bool first = true;
        for (const auto& [key, c] : exp.terms()) {
            join_term(line, first, c.to_string() + "*Z_" + std::to_string(key[0]) + "," +
                    std::to_string(key[1]) + "^(" + std::to_string(key[2]) + ")");
        }
        std::cout << line << "\n";
        return 0;
    }
    if (direction == "zern2cart") {
        if (dim == 2) {
            if (noll < 1) throw CLI::ValidationError("convert", "--noll j required for dim 2");
            CartPoly2 p = zernike_to_cart_2d(NollIndex(noll));
            std::cout << (as_json ? to_json(p).dump()
                                  : "Z_" + std::to_string(noll) + " = " + p.to_string())
                      << "\n";
            return 0;
        }
        auto v = split_ints(nlm);
        if (v.size() != 3) throw CLI::ValidationError("convert", "--nlm n,l,m required for dim 3");
        CartPoly3 p = zernike3d_to_cart(v[0], v[1], v[2]);
        std::cout << (as_json ? to_json(p).dump()
                              : "Pi^(1/2) Z_" + std::to_string(v[0]) + "," +
                                    std::to_string(v[1]) + "^(" + std::to_string(v[2]) +
                                    ") = " + p.to_string())
                  << "\n";
        return 0;
    }
    throw CLI::ValidationError("convert", "direction must be cart2zern or zern2cart");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact 2D/3D Zernike basis tables, transforms and verification"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "generate a coefficient table");
    std::string family, format = "text";
    TableOptions topt;
    table->add_option("family", family, "table family")->required();
    table->add_option("--format", topt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    table->add_option("--nmax", topt.nmax)->check(CLI::NonNegativeNumber);
    table->add_option("--jmax", topt.jmax)->check(CLI::NonNegativeNumber);
    table->add_option("--degmax", topt.degmax)->check(CLI::NonNegativeNumber);
    table->add_option("--lmax", topt.lmax)->check(CLI::NonNegativeNumber);
    table->add_option("--n1", topt.n1);
    table->add_option("--l1", topt.l1);
    table->add_option("--m1", topt.m1);
    table->add_option("--n2", topt.n2);
    table->add_option("--l2", topt.l2);
    table->add_option("--m2", topt.m2);
    table->add_option("--l3", topt.l3);
    table->add_option("--m3", topt.m3);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, fixture_dir = "fixtures", vfamily;
    int dim = 0, jmax = -1, nmax = -1;
    verify->add_option("suite", suite, "ortho|sumrules|recurrences|roundtrip|oracle|fixtures|wigner")
        ->required();
    verify->add_option("--fixtures", fixture_dir, "fixture directory");
    verify->add_option("--family", vfamily, "restrict to one family");
    verify->add_option("--dim", dim)->check(CLI::IsMember({2, 3}));
    verify->add_option("--jmax", jmax)->check(CLI::NonNegativeNumber);
    verify->add_option("--nmax", nmax)->check(CLI::NonNegativeNumber);

    // convert
    auto* convert = app.add_subcommand("convert", "convert between bases");
    std::string direction, monomial, nlm;
    int noll = -1, cdim = 2;
    convert->add_option("direction", direction, "cart2zern or zern2cart")->required();
    convert->add_option("--dim", cdim)->check(CLI::IsMember({2, 3}));
    convert->add_option("--monomial", monomial, "p,q or p,q,t");
    convert->add_option("--noll", noll, "Noll index j");
    convert->add_option("--nlm", nlm, "n,l,m");
    convert->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
        if (table->parsed()) return cmd_table(family, topt);
        if (verify->parsed()) return cmd_verify(suite, fixture_dir, dim, jmax, nmax, vfamily);
        if (convert->parsed()) return cmd_convert(direction, cdim, monomial, noll, nlm, format);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const zern::InvalidIndexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
