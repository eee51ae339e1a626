#pragma once

#include <string>
#include <vector>

#include "spinor/spinor.hpp"

namespace spinor {

struct SuiteResult {
    std::string name;
    bool passed = true;
    long long checks = 0;
    std::string detail;  // first failure, or a short summary
    double seconds = 0;
};

// A displayed witness: lambda, group and mu with the expected LR set.
struct GoldenCase {
    Partition lambda;
    int n;
    Partition mu;
    std::vector<SpinorTableau> witnesses;
};
std::vector<GoldenCase> golden_cases();

// Expected branching tables for the two worked O_n examples.
struct GoldenTable {
    Partition lambda;
    int n;
    std::vector<Partition> mus;
};
std::vector<GoldenTable> golden_tables(int max_n);

SuiteResult check_golden_examples(int max_n = 8);
SuiteResult check_stable_branching(int max_size = 6, int max_n = 12);
SuiteResult check_stable_tensor(int max_size = 5, int max_n = 12);
SuiteResult check_dimension(int max_k = 3, int max_size = 4, int max_n = 8);
SuiteResult check_lr_double_entry(int max_size = 8);
// GL_n -> Sp_n for even n <= max_restrict_n, and Sp_{m+n} -> Sp_m x Sp_n for m, n in {2, 4}.
SuiteResult check_sp_oracle(int max_size = 5, int max_restrict_n = 4);
SuiteResult check_so_oracle(int max_size = 4, int max_n = 6);
SuiteResult check_oscillator(int max_k = 2, int max_size = 3, int degree = 8);
SuiteResult check_crystal_axioms(int max_k = 3, int max_size = 4, int max_n = 8);

// Crystal axioms on one finite set T^g_k(lambda, n); returns an empty string
// on success, otherwise a description of the first failure.
std::string crystal_axiom_failure(GType g, const GroupSpec& group, const Partition& lambda, int k,
                                  long long* checks = nullptr);

// Named suites for the command line: stable-bijection, dimension, oracle,
// oscillator, golden-examples, crystal, all.
std::vector<std::string> suite_names();
std::vector<SuiteResult> run_suite(const std::string& name);

}  // namespace spinor
