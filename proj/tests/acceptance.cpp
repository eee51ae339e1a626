// One line per acceptance criterion; nonzero exit on any failure.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "spinor/verify.hpp"

using namespace spinor;

namespace {

struct Criterion {
    int id;
    std::string title;
    double limit;  // seconds, 0 = none
    std::function<SuiteResult()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> list{
        {1, "golden O_n branching examples with witnesses", 1, [] { return check_golden_examples(8); }},
        {2, "stable branching count equals the Littlewood sum, |lambda|<=6, n<=12", 60,
         [] { return check_stable_branching(6, 12); }},
        {3, "stable tensor count and bijection round trip, |lambda|<=5, m,n<=12", 300,
         [] { return check_stable_tensor(5, 12); }},
        {4, "enumeration size equals Weyl dimension, k<=3, |lambda|<=4, n<=8", 60,
         [] { return check_dimension(3, 4, 8); }},
        {5, "crystal LR coefficients equal lattice-word counts, |lambda|<=8", 60,
         [] { return check_lr_double_entry(8); }},
        {6, "Sp restriction and Sp x Sp tensor multiplicities match characters", 0,
         [] { return check_sp_oracle(5); }},
        {7, "unitarizable characters equal Delta * s_lambda to degree 8", 120,
         [] { return check_oscillator(2, 3, 8); }},
        {8, "crystal axioms and unique source on the dimension grid", 0,
         [] { return check_crystal_axioms(3, 4, 8); }},
    };
    bool all = true;
    for (auto& c : list) {
        SuiteResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        bool in_time = c.limit <= 0 || r.seconds < c.limit;
        bool ok = r.passed && in_time;
        all = all && ok;
        std::printf("[%s] criterion %d: %s (%lld checks, %.3f s%s)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), r.checks, r.seconds,
                    c.limit > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit)) + " s").c_str() : "",
                    r.passed ? "" : " ", r.passed ? "" : r.detail.c_str());
        if (!in_time) std::printf("    time limit exceeded\n");
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
