#include "spinor/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spinor/branching.hpp"
#include "spinor/oracle.hpp"
#include "spinor/parallel.hpp"
#include "spinor/series.hpp"

namespace spinor {

namespace {

using Clock = std::chrono::steady_clock;

class Collector {
public:
    void check(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (ok) return;
        std::lock_guard<std::mutex> lock(m_);
        if (!failed_) first_ = what();
        failed_ = true;
    }
    void fail(const std::string& what) {
        check(false, [&] { return what; });
    }
    void count(long long n) { checks_ += n; }

    SuiteResult finish(const std::string& name, Clock::time_point t0) const {
        SuiteResult r;
        r.name = name;
        r.passed = !failed_;
        r.checks = checks_;
        r.detail = failed_ ? first_ : std::to_string(checks_.load()) + " checks";
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return r;
    }

private:
    std::mutex m_;
    std::atomic<long long> checks_{0};
    bool failed_ = false;
    std::string first_;
};

// Runs each job in parallel, turning exceptions into failures.
void run_jobs(const std::vector<std::function<void()>>& jobs, Collector& col) {
    parallel_for(jobs.size(), [&](std::size_t i) {
        try {
            jobs[i]();
        } catch (const std::exception& e) {
            col.fail(std::string("exception: ") + e.what());
        }
    });
}

std::vector<GType> bcd() { return {GType::b, GType::c, GType::d}; }

bool group_exists(GType g, int n) { return n >= 2 && (combinatorial(g) != GType::c || n % 2 == 0); }

std::string describe(GType g, const GroupSpec& G, const Partition& a, const Partition& b) {
    return to_string(g) + " " + G.str() + " " + a.str() + " " + b.str();
}

Word W(std::initializer_list<int> xs) {
    Word w;
    for (int x : xs) w.push_back(even_letter(x));
    return w;
}

SpinorColumn Std(int a, Word l, Word r = {}) { return SpinorColumn::standard(GType::d, a, l, r); }
SpinorColumn Sp(Word c) { return SpinorColumn::sp(GType::d, c); }

SpinorTableau witness(int n, const Partition& mu, std::vector<SpinorColumn> cols) {
    return SpinorTableau{GType::d, GroupSpec(Family::O, n), mu, std::move(cols)};
}

}  // namespace

std::vector<GoldenCase> golden_cases() {
    Partition l22{2, 2}, l31{3, 1};
    std::vector<GoldenCase> out;
    auto add = [&](const Partition& lam, int n, const Partition& mu, std::vector<SpinorColumn> cols) {
        out.push_back({lam, n, mu, {witness(n, mu, std::move(cols))}});
    };
    add(l22, 4, {2, 2}, {Std(2, W({1, 2})), Std(2, W({1, 2}))});
    add(l22, 4, {2}, {Std(2, W({1, 2})), Std(0, {}, W({1, 2}))});
    add(l22, 4, {}, {Std(0, {}), Std(0, W({1, 2}), W({1, 2}))});
    add(l22, 3, {2}, {Std(2, W({1, 2})), Sp(W({1, 2}))});
    add(l22, 3, {}, {Std(0, {}, W({1, 2})), Sp(W({1, 2}))});
    add(l22, 2, {}, {Std(0, W({1, 2}), W({1, 2}))});
    add(l31, 4, {3, 1}, {Std(3, W({1, 2, 3})), Std(1, W({1}))});
    add(l31, 4, {2}, {Std(2, W({1, 3})), Std(0, {}, W({1, 2}))});
    add(l31, 4, {1, 1}, {Std(1, W({1})), Std(1, W({3}), W({1, 2}))});
    add(l31, 3, {3, 1}, {Std(3, W({1, 2, 3})), Sp(W({1}))});
    add(l31, 3, {2}, {Std(2, W({1, 3})), Sp(W({1, 2}))});
    add(l31, 3, {1, 1}, {Std(1, W({1})), Sp(W({1, 2, 3}))});
    add(l31, 2, {2}, {Std(2, W({1, 3}), W({1, 2}))});
    add(l31, 2, {1, 1}, {SpinorColumn::dbar(W({1}), W({1, 2, 3}))});
    return out;
}

std::vector<GoldenTable> golden_tables(int max_n) {
    std::vector<GoldenTable> out;
    for (int n = 2; n <= max_n; ++n) {
        if (n >= 4)
            out.push_back({{2, 2}, n, {{2, 2}, {2}, {}}});
        else if (n == 3)
            out.push_back({{2, 2}, n, {{2}, {}}});
        else
            out.push_back({{2, 2}, n, {{}}});
        if (n >= 3)
            out.push_back({{3, 1}, n, {{3, 1}, {2}, {1, 1}}});
        else
            out.push_back({{3, 1}, n, {{2}, {1, 1}}});
    }
    return out;
}

SuiteResult check_golden_examples(int max_n) {
    auto t0 = Clock::now();
    Collector col;
    for (auto& gt : golden_tables(max_n)) {
        GroupSpec G(Family::O, gt.n);
        auto table = branch_table(GType::d, G, gt.lambda);
        std::vector<Partition> got;
        bool ones = true;
        for (auto& [mu, c] : table) {
            got.push_back(mu);
            ones = ones && c == 1;
        }
        col.check(got == gt.mus && ones, [&] {
            std::string s = "branching table of " + gt.lambda.str() + " over " + G.str() + " is";
            for (auto& [mu, c] : table) s += " " + mu.str() + "x" + std::to_string(c);
            return s;
        });
    }
    for (auto& gc : golden_cases()) {
        GroupSpec G(Family::O, gc.n);
        auto set = lr_set_branch({GType::d, G, gc.mu, gc.lambda});
        std::sort(set.begin(), set.end());
        auto want = gc.witnesses;
        std::sort(want.begin(), want.end());
        col.check(set == want, [&] {
            return "witness set differs for " + describe(GType::d, G, gc.mu, gc.lambda);
        });
        for (auto& w : want)
            col.check(w.admissible(), [&] { return "witness not admissible for " + gc.mu.str(); });
    }
    return col.finish("golden-examples", t0);
}

SuiteResult check_stable_branching(int max_size, int max_n) {
    auto t0 = Clock::now();
    Collector col;
    std::vector<std::function<void()>> jobs;
    for (GType g : bcd())
        for (int n = 2; n <= max_n; ++n) {
            if (!group_exists(g, n)) continue;
            GroupSpec G = paired_group(g, n);
            for (auto& lam : partitions_up_to(max_size)) {
                if (2 * lam.length() > n) continue;
                jobs.push_back([&col, g, G, lam] {
                    for (auto& mu : parameter_set(G, lam.size())) {
                        BranchQuery q{g, G, mu, lam};
                        auto set = lr_set_branch(q);
                        long long f = stable_branch_formula(g, mu, lam);
                        col.check(static_cast<long long>(set.size()) == f, [&] {
                            return "count " + std::to_string(set.size()) + " != formula " +
                                   std::to_string(f) + " for " + describe(g, G, mu, lam);
                        });
                        std::set<SpinorTableau> seen(set.begin(), set.end());
                        for (auto& t : set) {
                            auto im = stable_branch_forward(q, t);
                            col.check(stable_branch_inverse(q, im.tail, im.delta) == t, [&] {
                                return "branch round trip fails for " + describe(g, G, mu, lam);
                            });
                        }
                        // formula side: every (V, delta) has a preimage in the set
                        auto lc = lam.conjugate(), mc = mu.conjugate();
                        std::set<SpinorTableau> images;
                        for (auto& delta : partitions_of(lam.size() - mu.size())) {
                            if (!is_in_script_P_g(delta, g) || !lc.contains(delta)) continue;
                            for (auto& v : lr_tableaux(lc, delta, mc)) {
                                auto t = stable_branch_inverse(q, v, delta);
                                col.check(seen.count(t) == 1, [&] {
                                    return "inverse image outside the LR set for " + describe(g, G, mu, lam);
                                });
                                images.insert(t);
                            }
                        }
                        col.check(images.size() == set.size(), [&] {
                            return "inverse is not injective for " + describe(g, G, mu, lam);
                        });
                    }
                });
            }
        }
    run_jobs(jobs, col);
    return col.finish("stable-branching", t0);
}

namespace {

// U in SST(delta^pi) with content gamma - mu' and column word lattice from mu'.
std::vector<Tableau> rotated_lr(const Partition& gamma, const Partition& mc, const Partition& delta) {
    std::vector<Tableau> out;
    int l = gamma.length();
    std::vector<int> budget(l);
    for (int i = 1; i <= l; ++i) budget[i - 1] = gamma.part(i) - mc.part(i);
    for_each_sst(
        Shape::rotated_of(delta), GradedAlphabet::even(l),
        [&](const Tableau& u) {
            if (in_lr_rotated(u, gamma, mc, delta)) out.push_back(u);
        },
        &budget);
    return out;
}

}  // namespace

SuiteResult check_stable_tensor(int max_size, int max_n) {
    auto t0 = Clock::now();
    Collector col;
    std::vector<std::function<void()>> jobs;
    for (GType g : bcd())
        for (int m = 2; m <= max_n; ++m)
            for (int n = 2; n <= max_n; ++n) {
                if (!group_exists(g, m) || !group_exists(g, n)) continue;
                jobs.push_back([&col, g, m, n, max_size] {
                    GroupSpec gm = paired_group(g, m), gn = paired_group(g, n);
                    for (auto& lam : partitions_up_to(max_size)) {
                        if (2 * lam.length() > std::min(m, n)) continue;
                        auto lc = lam.conjugate();
                        for (auto& mu : parameter_set(gm, lam.size())) {
                            if (!lam.contains(mu)) continue;
                            auto mc = mu.conjugate();
                            for (auto& nu : parameter_set(gn, lam.size() - mu.size())) {
                                TensorQuery q{g, m, n, lam, mu, nu};
                                auto set = lr_set_tensor(q);
                                long long f = stable_tensor_formula(g, lam, mu, nu);
                                std::string where = to_string(g) + " m=" + std::to_string(m) +
                                                    " n=" + std::to_string(n) + " " + lam.str() + " " +
                                                    mu.str() + " " + nu.str();
                                col.check(static_cast<long long>(set.size()) == f, [&] {
                                    return "count " + std::to_string(set.size()) + " != formula " +
                                           std::to_string(f) + " for " + where;
                                });
                                std::set<SpinorTableau> seen(set.begin(), set.end());
                                for (auto& t : set) {
                                    auto im = stable_tensor_forward(q, t);
                                    col.check(stable_tensor_inverse(q, im.body, im.tail) == t,
                                              [&] { return "tensor round trip fails for " + where; });
                                }
                                if (f == 0) continue;
                                // formula side: every pair (U, V) has a preimage
                                auto nc = nu.conjugate();
                                std::set<SpinorTableau> images;
                                long long pairs = 0;
                                for (auto& gamma : partitions_of(lam.size() - nu.size())) {
                                    if (!lc.contains(gamma) || !gamma.contains(mc)) continue;
                                    auto vs = lr_tableaux(lc, gamma, nc);
                                    if (vs.empty()) continue;
                                    for (auto& delta : partitions_of(gamma.size() - mu.size())) {
                                        if (!is_in_script_P_g(delta, g) || !gamma.contains(delta)) continue;
                                        for (auto& u : rotated_lr(gamma, mc, delta))
                                            for (auto& v : vs) {
                                                ++pairs;
                                                auto t = stable_tensor_inverse(q, u, v);
                                                col.check(seen.count(t) == 1, [&] {
                                                    return "inverse image outside the LR set for " + where;
                                                });
                                                images.insert(t);
                                            }
                                    }
                                }
                                col.check(pairs == f && images.size() == set.size(),
                                          [&] { return "inverse is not a bijection for " + where; });
                            }
                        }
                    }
                });
            }
    run_jobs(jobs, col);
    return col.finish("stable-tensor", t0);
}

SuiteResult check_dimension(int max_k, int max_size, int max_n) {
    auto t0 = Clock::now();
    Collector col;
    std::vector<std::function<void()>> jobs;
    for (GType g : bcd())
        for (int n = 2; n <= max_n; ++n) {
            if (!group_exists(g, n)) continue;
            GroupSpec G = paired_group(g, n);
            for (int k = (g == GType::d ? 2 : 1); k <= max_k; ++k)
                for (auto& lam : parameter_set(G, max_size)) {
                    if (lam.part(1) > k) continue;
                    jobs.push_back([&col, g, G, k, lam] {
                        long long e = static_cast<long long>(enumerate_spinor_k(g, G, lam, k).size());
                        long long d = spinor_weyl_dimension(g, G.n, lam, k);
                        col.check(e == d, [&] {
                            return "|T| = " + std::to_string(e) + " but dim = " + std::to_string(d) + " for " +
                                   to_string(g) + " " + G.str() + " " + lam.str() + " k=" + std::to_string(k);
                        });
                    });
                }
        }
    run_jobs(jobs, col);
    return col.finish("dimension", t0);
}

SuiteResult check_lr_double_entry(int max_size) {
    auto t0 = Clock::now();
    Collector col;
    std::vector<std::function<void()>> jobs;
    for (auto& lam : partitions_up_to(max_size))
        jobs.push_back([&col, lam] {
            for (auto& mu : partitions_up_to(lam.size())) {
                if (!lam.contains(mu)) continue;
                for (auto& nu : partitions_of(lam.size() - mu.size())) {
                    long long a = lr_coef(lam, mu, nu), b = lr_coef_latticeword(lam, mu, nu);
                    col.check(a == b, [&] {
                        return "lr_coef " + std::to_string(a) + " != lattice count " + std::to_string(b) +
                               " for " + lam.str() + " " + mu.str() + " " + nu.str();
                    });
                }
            }
        });
    run_jobs(jobs, col);
    return col.finish("lr-double-entry", t0);
}

SuiteResult check_sp_oracle(int max_size, int max_restrict_n) {
    auto t0 = Clock::now();
    Collector col;
    std::vector<std::function<void()>> jobs;
    for (int n = 2; n <= max_restrict_n; n += 2)
        for (auto& lam : partitions_up_to(max_size)) {
            if (lam.length() > n) continue;
            jobs.push_back([&col, n, lam] {
                GroupSpec G(Family::Sp, n);
                for (auto& mu : parameter_set(G, lam.size())) {
                    long long a = lr_count_branch({GType::c, G, mu, lam});
                    long long b = oracle_gl_to_sp(lam, mu, n);
                    col.check(a == b, [&] {
                        return "GL_" + std::to_string(n) + " -> Sp: " + std::to_string(a) + " vs oracle " +
                               std::to_string(b) + " for " + lam.str() + " " + mu.str();
                    });
                }
            });
        }
    for (int m : {2, 4})
        for (int n : {2, 4})
            for (auto& lam : partitions_up_to(max_size)) {
                if (2 * lam.length() > m + n) continue;
                jobs.push_back([&col, m, n, lam] {
                    for (auto& mu : parameter_set(GroupSpec(Family::Sp, m), lam.size()))
                        for (auto& nu : parameter_set(GroupSpec(Family::Sp, n), lam.size())) {
                            long long a = lr_count_tensor({GType::c, m, n, lam, mu, nu});
                            long long b = oracle_sp_tensor(lam, mu, nu, m, n);
                            col.check(a == b, [&] {
                                return "Sp_" + std::to_string(m + n) + " -> Sp_" + std::to_string(m) + "xSp_" +
                                       std::to_string(n) + ": " + std::to_string(a) + " vs oracle " +
                                       std::to_string(b) + " for " + lam.str() + " " + mu.str() + " " + nu.str();
                            });
                        }
                });
            }
    run_jobs(jobs, col);
    return col.finish("sp-oracle", t0);
}

SuiteResult check_so_oracle(int max_size, int max_n) {
    auto t0 = Clock::now();
    Collector col;
    std::vector<std::function<void()>> jobs;
    for (int n = 2; n <= max_n; ++n)
        for (auto& lam : partitions_up_to(max_size)) {
            if (lam.length() > n) continue;
            jobs.push_back([&col, n, lam] {
                GroupSpec G(Family::O, n);
                std::map<std::vector<int>, long long> ours;
                for (auto& mu : parameter_set(G, lam.size())) {
                    long long c = lr_count_branch({GType::d, G, mu, lam});
                    if (c == 0) continue;
                    for (auto& w : o_to_so_weights(mu, n)) ours[w] += c;
                }
                auto want = oracle_gl_to_so(lam, n);
                col.check(ours == want, [&] {
                    return "SO_" + std::to_string(n) + "-level decomposition differs for " + lam.str();
                });
            });
        }
    run_jobs(jobs, col);
    return col.finish("so-oracle", t0);
}

SuiteResult check_oscillator(int max_k, int max_size, int degree) {
    auto t0 = Clock::now();
    Collector col;
    std::vector<std::function<void()>> jobs;
    for (GType g : {GType::b_bullet, GType::c, GType::d})
        for (int k = 1; k <= max_k; ++k)
            for (int n = 2 * k; n <= 2 * k + 4; ++n) {
                GType gv = dual_type(g);
                if (!group_exists(gv, n)) continue;
                for (auto& lam : partitions_up_to(max_size)) {
                    if (lam.length() > k || !is_in_P_Gn(lam, paired_group(gv, n))) continue;
                    jobs.push_back([&col, g, k, n, lam, degree] {
                        auto r = verify_oscillator_identity(g, k, lam, n, degree);
                        col.check(r.ok, [&] {
                            return to_string(g) + " k=" + std::to_string(k) + " n=" + std::to_string(n) + " " +
                                   lam.str() + ": " + r.message;
                        });
                    });
                }
            }
    run_jobs(jobs, col);
    return col.finish("oscillator", t0);
}

namespace {

Weight lowered(Weight w, int i, GType g) {
    auto bump = [&](int j, int d) {
        if (static_cast<int>(w.m.size()) <= j) w.m.resize(j + 1, 0);
        w.m[j] += d;
    };
    if (i >= 1) {
        bump(i, -1);
        bump(i + 1, 1);
        return w;
    }
    switch (combinatorial(g)) {
        case GType::b: bump(1, 1); break;
        case GType::c: bump(1, 2); break;
        default:
            bump(1, 1);
            bump(2, 1);
    }
    return w;
}

}  // namespace

std::string crystal_axiom_failure(GType g, const GroupSpec& G, const Partition& lambda, int k,
                                  long long* checks) {
    auto list = enumerate_spinor_k(g, G, lambda, k);
    std::set<SpinorTableau> all(list.begin(), list.end());
    auto hw = highest_weight_element(g, G, lambda);
    std::string where = to_string(g) + " " + G.str() + " " + lambda.str() + " k=" + std::to_string(k);
    if (all.size() != list.size()) return "duplicate elements in " + where;
    if (!all.count(hw)) return "highest weight element missing in " + where;
    if (!(hw.weight() == highest_weight(g, G.n, lambda))) return "wrong highest weight in " + where;
    long long n = 0;
    int sources = 0;
    for (auto& t : list) {
        Weight wt = t.weight();
        bool source = true;
        for (int i = 0; i < k; ++i) {
            auto e = spinor_e(t, i);
            auto f = spinor_f(t, i);
            if (e) {
                source = false;
                if (!all.count(*e)) return "e_" + std::to_string(i) + " leaves the set in " + where;
                if (!(spinor_f(*e, i) == std::optional<SpinorTableau>(t)))
                    return "f_i e_i != id in " + where;
                if (!(lowered(e->weight(), i, g) == wt)) return "weight shift of e_i fails in " + where;
            }
            if (f) {
                if (!all.count(*f)) return "f_" + std::to_string(i) + " leaves the set in " + where;
                if (!(spinor_e(*f, i) == std::optional<SpinorTableau>(t)))
                    return "e_i f_i != id in " + where;
                if (!(lowered(wt, i, g) == f->weight())) return "weight shift of f_i fails in " + where;
            }
            int eps = 0, phi = 0;
            for (auto cur = e; cur; cur = spinor_e(*cur, i)) ++eps;
            for (auto cur = f; cur; cur = spinor_f(*cur, i)) ++phi;
            if (eps != spinor_eps(t, i) || phi != spinor_phi(t, i))
                return "string lengths disagree for i=" + std::to_string(i) + " in " + where;
            if (phi - eps != pair_with_coroot(wt, i, g))
                return "phi - eps != <wt, coroot> for i=" + std::to_string(i) + " in " + where;
            n += 5;
        }
        if (source) {
            ++sources;
            if (!(t == hw)) return "a source other than H_lambda in " + where;
        }
    }
    if (sources != 1) return "expected exactly one source in " + where;
    if (checks) *checks += n;
    return "";
}

SuiteResult check_crystal_axioms(int max_k, int max_size, int max_n) {
    auto t0 = Clock::now();
    Collector col;
    std::vector<std::function<void()>> jobs;
    for (GType g : bcd())
        for (int n = 2; n <= max_n; ++n) {
            if (!group_exists(g, n)) continue;
            GroupSpec G = paired_group(g, n);
            for (int k = (g == GType::d ? 2 : 1); k <= max_k; ++k)
                for (auto& lam : parameter_set(G, max_size)) {
                    if (lam.part(1) > k) continue;
                    jobs.push_back([&col, g, G, k, lam] {
                        long long n = 0;
                        auto msg = crystal_axiom_failure(g, G, lam, k, &n);
                        col.count(n);
                        col.check(msg.empty(), [&] { return msg; });
                    });
                }
        }
    run_jobs(jobs, col);
    return col.finish("crystal-axioms", t0);
}

std::vector<std::string> suite_names() {
    return {"golden-examples", "stable-bijection", "dimension", "oracle", "oscillator", "crystal", "all"};
}

std::vector<SuiteResult> run_suite(const std::string& name) {
    std::vector<SuiteResult> out;
    bool all = name == "all";
    bool known = false;
    if (all || name == "golden-examples") {
        known = true;
        out.push_back(check_golden_examples());
    }
    if (all || name == "stable-bijection") {
        known = true;
        out.push_back(check_stable_branching());
        out.push_back(check_stable_tensor());
    }
    if (all || name == "dimension") {
        known = true;
        out.push_back(check_dimension());
    }
    if (all || name == "oracle") {
        known = true;
        out.push_back(check_lr_double_entry());
        out.push_back(check_sp_oracle(6, 8));
        out.push_back(check_so_oracle(6, 8));
    }
    if (all || name == "oscillator") {
        known = true;
        out.push_back(check_oscillator());
    }
    if (all || name == "crystal") {
        known = true;
        out.push_back(check_crystal_axioms());
    }
    if (!known) throw std::invalid_argument("unknown suite '" + name + "'");
    return out;
}

}  // namespace spinor
