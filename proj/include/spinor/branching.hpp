#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "spinor/spinor.hpp"

namespace spinor {

// Longest weakly decreasing subword of w(T).
int L_statistic(const SpinorTableau& t);
int longest_weakly_decreasing(const Word& w);

struct BodyTailPair {
    // n body slots in factor order, each read top to bottom; bottom-aligned.
    std::vector<Word> body_columns;
    // tail columns, one per part of lambda (two one-box tails for dbar).
    std::vector<Word> tail_columns;
    bool body_is_rotated = false;  // heights weakly increase left to right
    bool body_semistandard = false;
    bool tail_semistandard = false;
    Partition delta;  // body shape is delta^pi when body_is_rotated
    std::optional<Tableau> body;
    std::optional<Tableau> tail;
};

BodyTailPair body_tail_split(const SpinorTableau& t);

enum class Mode { enumerate, count };

// LR^lambda_{mu nu}(g): T in T^g(nu, n) with wt(T) + wt(H_mu) = wt(H_lambda)
// and eps_i(T) <= <Lambda^g(mu), alpha_i> for every i.
struct TensorQuery {
    GType g;
    int m;
    int n;
    Partition lambda, mu, nu;
};
void validate(const TensorQuery& q);
std::vector<SpinorTableau> lr_set_tensor(const TensorQuery& q);
long long lr_count_tensor(const TensorQuery& q);
bool tensor_stable(const TensorQuery& q);

// LR^mu_lambda(g): T in T^g(mu, n) of weight (n/eps)Lambda_0 + sum lambda'_i eps_i
// killed by every e_i with i >= 1.
struct BranchQuery {
    GType g;
    GroupSpec group;
    Partition mu, lambda;
};
void validate(const BranchQuery& q);
std::vector<SpinorTableau> lr_set_branch(const BranchQuery& q);
long long lr_count_branch(const BranchQuery& q);
bool branch_stable(const BranchQuery& q);

// Stable formulas.
long long stable_branch_formula(GType g, const Partition& mu, const Partition& lambda);
long long stable_tensor_formula(GType g, const Partition& lambda, const Partition& mu,
                                const Partition& nu);

struct TensorImage {
    Tableau body;  // U in LR^gamma_{mu' delta}, rotated shape delta^pi
    Tableau tail;  // V in LR^{lambda'}_{gamma nu'}
    Partition gamma, delta;
};
TensorImage stable_tensor_forward(const TensorQuery& q, const SpinorTableau& t);
SpinorTableau stable_tensor_inverse(const TensorQuery& q, const Tableau& body, const Tableau& tail);

struct BranchImage {
    Tableau tail;  // V in LR^{lambda'}_{delta mu'}
    Partition delta;
};
BranchImage stable_branch_forward(const BranchQuery& q, const SpinorTableau& t);
SpinorTableau stable_branch_inverse(const BranchQuery& q, const Tableau& tail, const Partition& delta);

// The rotated tableau of shape delta^pi with column j filled 1..h_j.
Tableau canonical_rotated(const Partition& delta);

// Membership tests for the two sides of the bijections.
bool in_lr_rotated(const Tableau& u, const Partition& gamma, const Partition& mu_conj,
                   const Partition& delta);
bool in_lr_straight(const Tableau& v, const Partition& outer, const Partition& inner,
                    const Partition& shape);

// Sum over lambda of [V^lambda_{GL_n} : V^mu_{G_n}] times the multiplicity of
// V^lambda_{GL_n} in V^{lambda(1)} (x) ... (x) V^{lambda(r)}.
long long gl_tensor_restriction(GType g, const GroupSpec& group, const std::vector<Partition>& parts,
                                const Partition& mu);
// Schur product expansion restricted to at most `max_len` rows.
std::map<Partition, long long> schur_product(const std::vector<Partition>& parts, int max_len);

// Partitions mu in P(G_n) with |mu| <= |lambda| and nonzero branching count.
std::vector<std::pair<Partition, long long>> branch_table(GType g, const GroupSpec& group,
                                                          const Partition& lambda);

}  // namespace spinor
