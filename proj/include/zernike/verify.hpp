#pragma once

#include "zernike/fixtures.hpp"
#include "zernike/numeric.hpp"

#include <string>
#include <vector>

namespace zern {

// Outcome of one verification pass; failures keep the first offending key.
struct CheckReport {
    std::string name;
    long long checked = 0;
    long long failed = 0;
    std::string first_failure;

    explicit CheckReport(std::string name_) : name(std::move(name_)) {}

    bool ok() const { return failed == 0 && checked > 0; }
    void count(bool pass, const std::string& what);
    void merge(const CheckReport& o);
};

// Exact comparison of one transcribed family against the generating
// operations, including coverage (no missing and no extra terms per group).
CheckReport verify_fixture_family(const std::string& family,
                                  const std::vector<FixtureEntry>& rows);

// Exact algebraic suites.
CheckReport verify_sum_rules_2d(int jmax);
CheckReport verify_sum_rules_3d(int jmax);
CheckReport verify_sum_rule_g(int nmax);
CheckReport verify_sum_rule_k(int nmax);
CheckReport verify_ortho_2d(int nmax);
CheckReport verify_ortho_3d(int nmax);
CheckReport verify_recurrences_2d(int jmax);
CheckReport verify_recurrences_3d(int jmax);
CheckReport verify_roundtrip_2d(int degmax);
CheckReport verify_roundtrip_3d(int degmax);
CheckReport verify_dual_route_g(int nmax);
CheckReport verify_wigner_symmetries(int jmax);

// Floating-point oracle suites.
CheckReport verify_oracle_h(int jmax, double tol = 1e-11);
CheckReport verify_oracle_f(int jmax, double tol = 1e-11);
CheckReport verify_oracle_g(int nmax, double tol = 1e-11);
CheckReport verify_oracle_k(int nmax, double tol = 1e-11);
CheckReport verify_oracle_u(int degmax, double tol = 1e-11);
CheckReport verify_oracle_fhat(int nmax, double tol = 1e-11);
CheckReport verify_cross_eval_2d(int nmax, int samples = 100, unsigned seed = 20260810u,
                                 double tol = 1e-11);
CheckReport verify_cross_eval_3d(int nmax, int samples = 100, unsigned seed = 20260810u,
                                 double tol = 1e-11);

// All families present under dir (family.fix); returns one report per family.
std::vector<CheckReport> verify_all_fixtures(const std::string& fixture_dir);

const std::vector<std::string>& fixture_family_names();

} // namespace zern
