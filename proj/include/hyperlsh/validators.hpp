#pragma once

#include <string>
#include <vector>

namespace hyperlsh {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Deterministic numerical checks of the library's proved properties; the
// randomized suites use fixed internal seeds.
std::vector<CheckResult> validate_integral();    // quadrature of the separation measure equals 2r
std::vector<CheckResult> validate_log_ratio();   // ln(1-x)/ln(1-cx) <= 1/c
std::vector<CheckResult> validate_monotone_g();  // rho_exact strictly decreasing in r
std::vector<CheckResult> validate_lemma_f();     // subhomogeneity of the height-pair distance
std::vector<CheckResult> validate_puiseux();     // sqrt(2x)(1-x/12) <= arccosh(1+x) <= sqrt(2x)
std::vector<CheckResult> validate_sandwich();    // exhaustive Hamming-cube distance sandwich
std::vector<CheckResult> validate_stability();   // Gaussian projections are 2-stable
std::vector<CheckResult> validate_alpha();       // frozen digits of the contraction constant

const std::vector<std::string>& validator_names();
std::vector<CheckResult> run_validator(const std::string& which);

}  // namespace hyperlsh
