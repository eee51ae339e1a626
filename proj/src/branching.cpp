#include "spinor/branching.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace spinor {

namespace {

long long lr_cached(const Partition& lambda, const Partition& mu, const Partition& nu) {
    static std::mutex m;
    static std::map<std::tuple<Partition, Partition, Partition>, long long> memo;
    auto key = std::make_tuple(lambda, mu, nu);
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    long long v = lr_coef(lambda, mu, nu);
    std::lock_guard<std::mutex> lock(m);
    memo.emplace(key, v);
    return v;
}

std::vector<int> one_based(const std::vector<int>& parts) {
    std::vector<int> v(parts.size() + 1, 0);
    std::copy(parts.begin(), parts.end(), v.begin() + 1);
    return v;
}

}  // namespace

int longest_weakly_decreasing(const Word& w) {
    std::vector<int> best(w.size(), 1);
    int out = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (w[j] >= w[i]) best[i] = std::max(best[i], best[j] + 1);
        out = std::max(out, best[i]);
    }
    return out;
}

int L_statistic(const SpinorTableau& t) { return longest_weakly_decreasing(t.word()); }

BodyTailPair body_tail_split(const SpinorTableau& t) {
    BodyTailPair p;
    GType g = combinatorial(t.g);
    for (const auto& col : t.columns) {
        switch (col.kind) {
            case ColumnKind::standard: {
                int c = col.c();
                p.body_columns.emplace_back(col.left.begin(), col.left.begin() + c);
                p.body_columns.push_back(col.right);
                if (col.a > 0) p.tail_columns.emplace_back(col.left.begin() + c, col.left.end());
                break;
            }
            case ColumnKind::sp:
                if (g == GType::d && col.height() % 2 == 1) {
                    p.body_columns.emplace_back(col.left.begin(), col.left.end() - 1);
                    p.tail_columns.push_back({col.left.back()});
                } else {
                    p.body_columns.push_back(col.left);
                }
                break;
            case ColumnKind::dbar:
                p.body_columns.emplace_back(col.left.begin(), col.left.end() - 1);
                p.body_columns.emplace_back(col.right.begin(), col.right.end() - 1);
                p.tail_columns.push_back({col.left.back()});
                p.tail_columns.push_back({col.right.back()});
                break;
        }
    }
    p.body_is_rotated = true;
    for (std::size_t j = 1; j < p.body_columns.size(); ++j)
        if (p.body_columns[j].size() < p.body_columns[j - 1].size()) p.body_is_rotated = false;
    if (p.body_is_rotated) {
        p.body = Tableau::rotated_from_columns(p.body_columns);
        p.delta = p.body->shape().source;
        p.body_semistandard = p.body->is_semistandard();
    }
    bool tail_shape = true;
    for (std::size_t j = 1; j < p.tail_columns.size(); ++j)
        if (p.tail_columns[j].size() > p.tail_columns[j - 1].size()) tail_shape = false;
    if (tail_shape) {
        p.tail = Tableau::from_columns(p.tail_columns);
        p.tail_semistandard = p.tail->is_semistandard();
    }
    return p;
}

// ---- LR sets ----

void validate(const TensorQuery& q) {
    if (combinatorial(q.g) == GType::c && (q.m % 2 != 0 || q.n % 2 != 0))
        throw std::invalid_argument("type c needs m and n even");
    GroupSpec gm = paired_group(q.g, q.m), gn = paired_group(q.g, q.n), gmn = paired_group(q.g, q.m + q.n);
    if (!is_in_P_Gn(q.mu, gm)) throw std::invalid_argument(q.mu.str() + " is not a parameter for " + gm.str());
    if (!is_in_P_Gn(q.nu, gn)) throw std::invalid_argument(q.nu.str() + " is not a parameter for " + gn.str());
    if (!is_in_P_Gn(q.lambda, gmn))
        throw std::invalid_argument(q.lambda.str() + " is not a parameter for " + gmn.str());
}

bool tensor_stable(const TensorQuery& q) { return 2 * q.lambda.length() <= std::min(q.m, q.n); }

namespace {

long long run_tensor(const TensorQuery& q, const std::function<bool(const SpinorTableau&)>& visit) {
    validate(q);
    if (!q.lambda.contains(q.mu)) return 0;
    auto lc = q.lambda.conjugate(), mc = q.mu.conjugate();
    int k = q.lambda.part(1);
    std::vector<int> content(k + 1, 0);
    for (int i = 1; i <= k; ++i) content[i] = lc.part(i) - mc.part(i);
    EnumerateOptions opt;
    opt.alphabet = GradedAlphabet::even(k);
    opt.content = content;
    opt.lattice_init = mc.padded(k);
    int bound = pair_with_coroot(highest_weight(q.g, q.m, q.mu), 0, q.g);
    long long count = 0;
    enumerate_spinor(q.g, paired_group(q.g, q.n), q.nu, opt, [&](const SpinorTableau& t) {
        if (spinor_eps(t, 0) > bound) return true;
        ++count;
        return visit(t);
    });
    return count;
}

long long run_branch(const BranchQuery& q, const std::function<bool(const SpinorTableau&)>& visit) {
    validate(q);
    auto lc = q.lambda.conjugate();
    int k = q.lambda.part(1);
    EnumerateOptions opt;
    opt.alphabet = GradedAlphabet::even(k);
    opt.content = one_based(lc.padded(k));
    opt.lattice_init = std::vector<int>(k, 0);
    return enumerate_spinor(q.g, q.group, q.mu, opt, visit);
}

}  // namespace

std::vector<SpinorTableau> lr_set_tensor(const TensorQuery& q) {
    std::vector<SpinorTableau> out;
    run_tensor(q, [&](const SpinorTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

long long lr_count_tensor(const TensorQuery& q) {
    return run_tensor(q, [](const SpinorTableau&) { return true; });
}

void validate(const BranchQuery& q) { validate_parameters(q.g, q.group, q.mu); }

bool branch_stable(const BranchQuery& q) { return 2 * q.lambda.length() <= q.group.n; }

std::vector<SpinorTableau> lr_set_branch(const BranchQuery& q) {
    std::vector<SpinorTableau> out;
    run_branch(q, [&](const SpinorTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

long long lr_count_branch(const BranchQuery& q) {
    return run_branch(q, [](const SpinorTableau&) { return true; });
}

// ---- stable formulas ----

long long stable_branch_formula(GType g, const Partition& mu, const Partition& lambda) {
    int d = lambda.size() - mu.size();
    if (d < 0) return 0;
    auto lc = lambda.conjugate(), mc = mu.conjugate();
    long long s = 0;
    for (auto& delta : partitions_of(d))
        if (is_in_script_P_g(delta, g) && lc.contains(delta)) s += lr_cached(lc, delta, mc);
    return s;
}

long long stable_tensor_formula(GType g, const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
    int gs = lambda.size() - nu.size();
    if (gs < mu.size()) return 0;
    auto lc = lambda.conjugate(), mc = mu.conjugate(), nc = nu.conjugate();
    long long s = 0;
    for (auto& gamma : partitions_of(gs)) {
        if (!lc.contains(gamma) || !gamma.contains(mc)) continue;
        long long right = lr_cached(lc, gamma, nc);
        if (right == 0) continue;
        for (auto& delta : partitions_of(gs - mu.size()))
            if (is_in_script_P_g(delta, g) && gamma.contains(delta))
                s += lr_cached(gamma, mc, delta) * right;
    }
    return s;
}

// ---- bijections ----

Tableau canonical_rotated(const Partition& delta) {
    auto dc = delta.conjugate();
    std::vector<Word> cols;
    for (int j = dc.length(); j >= 1; --j) {
        Word c;
        for (int i = 1; i <= dc.part(j); ++i) c.push_back(even_letter(i));
        cols.push_back(c);
    }
    return Tableau::rotated_from_columns(cols);
}

namespace {

bool content_matches(const Tableau& t, const Partition& outer, const Partition& inner) {
    auto c = t.content();
    int len = std::max<int>(outer.length(), static_cast<int>(c.size()));
    for (int i = 1; i <= len; ++i) {
        int have = i < static_cast<int>(c.size()) ? c[i] : 0;
        if (inner.part(i) + have != outer.part(i)) return false;
    }
    return true;
}

bool is_even_tableau(const Tableau& t) {
    for (auto& row : t.rows())
        for (Letter a : row)
            if (is_odd(a)) return false;
    return true;
}

}  // namespace

bool in_lr_rotated(const Tableau& u, const Partition& gamma, const Partition& mu_conj,
                   const Partition& delta) {
    if (!(u.shape() == Shape::rotated_of(delta)) && !(delta.empty() && u.empty())) return false;
    if (!is_even_tableau(u) || !u.is_semistandard()) return false;
    if (!content_matches(u, gamma, mu_conj)) return false;
    return is_lattice_from(u.column_word(), mu_conj.parts());
}

bool in_lr_straight(const Tableau& v, const Partition& outer, const Partition& inner,
                    const Partition& shape) {
    if (!(v.shape() == Shape::straight(shape)) && !(shape.empty() && v.empty())) return false;
    if (!is_even_tableau(v) || !v.is_semistandard()) return false;
    if (!content_matches(v, outer, inner)) return false;
    return is_lattice_from(v.column_word(), inner.parts());
}

namespace {

SpinorTableau assemble(GType g, const GroupSpec& group, const Partition& lambda,
                       const std::vector<Word>& body_cols, const std::vector<Word>& tail_cols) {
    auto prof = profile(g, group, lambda);
    int n = group.n;
    int w = static_cast<int>(body_cols.size());
    if (w > n) throw std::invalid_argument("body has more columns than slots");
    std::vector<Word> slots(n);
    for (int j = 0; j < w; ++j) slots[n - w + j] = body_cols[j];
    SpinorTableau t{g, group, lambda, {}};
    std::size_t s = 0, tail = 0;
    for (auto& f : prof) {
        switch (f.kind) {
            case ColumnKind::standard: {
                Word l = slots[s], r = slots[s + 1];
                s += 2;
                if (f.a > 0) {
                    if (tail >= tail_cols.size() || static_cast<int>(tail_cols[tail].size()) != f.a)
                        throw std::invalid_argument("tail does not fit the factor profile");
                    l.insert(l.end(), tail_cols[tail].begin(), tail_cols[tail].end());
                    ++tail;
                }
                t.columns.push_back(SpinorColumn::standard(combinatorial(g), f.a, l, r));
                break;
            }
            case ColumnKind::sp:
                if (f.parity == 1) throw std::invalid_argument("odd spin factor outside the stable range");
                t.columns.push_back(SpinorColumn::sp(combinatorial(g), slots[s]));
                s += 1;
                break;
            case ColumnKind::dbar: throw std::invalid_argument("dbar factor outside the stable range");
        }
    }
    if (tail != tail_cols.size()) throw std::invalid_argument("tail does not fit the factor profile");
    t.g = g;
    if (!t.admissible()) throw std::logic_error("reassembled columns are not admissible");
    return t;
}

Partition add_content(const Partition& base, const Tableau& t) {
    auto c = t.content();
    int len = std::max<int>(base.length(), static_cast<int>(c.size()) - 1);
    std::vector<int> v(len);
    for (int i = 1; i <= len; ++i) v[i - 1] = base.part(i) + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return Partition(v);
}

}  // namespace

TensorImage stable_tensor_forward(const TensorQuery& q, const SpinorTableau& t) {
    if (!tensor_stable(q)) throw std::invalid_argument("stable tensor bijection outside the stable range");
    auto p = body_tail_split(t);
    if (!p.body_is_rotated || !p.body_semistandard || !p.tail || !p.tail_semistandard)
        throw std::logic_error("body/tail split is not semistandard in the stable range");
    if (!is_in_script_P_g(p.delta, q.g)) throw std::logic_error("body shape is not of type g");
    auto mc = q.mu.conjugate();
    Partition gamma = add_content(mc, *p.body);
    if (!in_lr_rotated(*p.body, gamma, mc, p.delta))
        throw std::logic_error("body is not an LR tableau");
    if (!in_lr_straight(*p.tail, q.lambda.conjugate(), gamma, q.nu.conjugate()))
        throw std::logic_error("tail is not an LR tableau");
    return TensorImage{*p.body, *p.tail, gamma, p.delta};
}

SpinorTableau stable_tensor_inverse(const TensorQuery& q, const Tableau& body, const Tableau& tail) {
    if (!tensor_stable(q)) throw std::invalid_argument("stable tensor bijection outside the stable range");
    if (!body.empty() && !body.shape().rotated) throw std::invalid_argument("body must have a rotated shape");
    Partition delta = body.empty() ? Partition{} : body.shape().source;
    if (!is_in_script_P_g(delta, q.g)) throw std::invalid_argument("body shape is not of type g");
    auto mc = q.mu.conjugate();
    Partition gamma = add_content(mc, body);
    if (!in_lr_rotated(body, gamma, mc, delta)) throw std::invalid_argument("body is not an LR tableau");
    if (!in_lr_straight(tail, q.lambda.conjugate(), gamma, q.nu.conjugate()))
        throw std::invalid_argument("tail is not an LR tableau");
    auto t = assemble(q.g, paired_group(q.g, q.n), q.nu, body.columns(), tail.columns());
    if (spinor_eps(t, 0) > pair_with_coroot(highest_weight(q.g, q.m, q.mu), 0, q.g))
        throw std::logic_error("reassembled tableau violates the 0-string bound");
    return t;
}

BranchImage stable_branch_forward(const BranchQuery& q, const SpinorTableau& t) {
    if (!branch_stable(q)) throw std::invalid_argument("stable branching bijection outside the stable range");
    auto p = body_tail_split(t);
    if (!p.body_is_rotated || !p.tail || !p.tail_semistandard)
        throw std::logic_error("body/tail split is not semistandard in the stable range");
    if (!is_in_script_P_g(p.delta, q.g)) throw std::logic_error("body shape is not of type g");
    if (!(*p.body == canonical_rotated(p.delta)))
        throw std::logic_error("body is not the highest weight rotated tableau");
    if (!in_lr_straight(*p.tail, q.lambda.conjugate(), p.delta, q.mu.conjugate()))
        throw std::logic_error("tail is not an LR tableau");
    return BranchImage{*p.tail, p.delta};
}

SpinorTableau stable_branch_inverse(const BranchQuery& q, const Tableau& tail, const Partition& delta) {
    if (!branch_stable(q)) throw std::invalid_argument("stable branching bijection outside the stable range");
    if (!is_in_script_P_g(delta, q.g)) throw std::invalid_argument("delta is not of type g");
    if (!in_lr_straight(tail, q.lambda.conjugate(), delta, q.mu.conjugate()))
        throw std::invalid_argument("tail is not an LR tableau");
    auto body = canonical_rotated(delta);
    return assemble(q.g, q.group, q.mu, body.columns(), tail.columns());
}

// ---- tensor products of GL_n-modules ----

std::map<Partition, long long> schur_product(const std::vector<Partition>& parts, int max_len) {
    std::map<Partition, long long> cur{{Partition{}, 1}};
    for (auto& sigma : parts) {
        std::map<Partition, long long> next;
        for (auto& [rho, c] : cur)
            for (auto& lam : partitions_of(rho.size() + sigma.size(), -1, max_len)) {
                if (!lam.contains(rho) || !lam.contains(sigma)) continue;
                long long v = lr_cached(lam, rho, sigma);
                if (v) next[lam] += c * v;
            }
        cur = std::move(next);
    }
    return cur;
}

long long gl_tensor_restriction(GType g, const GroupSpec& group, const std::vector<Partition>& parts,
                                const Partition& mu) {
    validate_parameters(g, group, mu);
    long long s = 0;
    for (auto& [lam, c] : schur_product(parts, group.n))
        s += c * lr_count_branch({g, group, mu, lam});
    return s;
}

std::vector<std::pair<Partition, long long>> branch_table(GType g, const GroupSpec& group,
                                                          const Partition& lambda) {
    std::vector<std::pair<Partition, long long>> out;
    for (auto& mu : parameter_set(group, lambda.size())) {
        long long c = lr_count_branch({g, group, mu, lambda});
        if (c) out.emplace_back(mu, c);
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
        return x.first > y.first;
    });
    return out;
}

}  // namespace spinor
