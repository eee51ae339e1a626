#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinor/partition.hpp"
#include "spinor/tableau.hpp"

namespace spinor {

enum class ColumnKind { standard, sp, dbar };

// One factor of a spinor tableau. Columns are stored top to bottom.
//  standard(a): shape lambda(a,b,c) with the right column in rows 1..b+c and
//               the left column in rows b+1..b+c+a.
//  sp:          a single column, kept in `left`.
//  dbar:        shape lambda(0,b,c+1) for the d-type factor T-bar(0).
struct SpinorColumn {
    GType g = GType::c;
    ColumnKind kind = ColumnKind::standard;
    int a = 0;
    Word left;
    Word right;

    int c() const { return static_cast<int>(left.size()) - a; }
    int b() const { return static_cast<int>(right.size()) - c(); }
    int height() const { return static_cast<int>(left.size()); }
    int boxes() const { return static_cast<int>(left.size() + right.size()); }
    std::string variant() const;  // standard, sp_plus, sp_minus, dbar_zero
    bool valid() const;
    Word word() const;  // right column then left column

    static SpinorColumn standard(GType g, int a, Word left, Word right);
    static SpinorColumn sp(GType g, Word col);
    static SpinorColumn dbar(Word left, Word right);

    auto operator<=>(const SpinorColumn&) const = default;
    bool operator==(const SpinorColumn&) const = default;
};

// Bottom-up accessor X(i), 1-based; nullopt when absent.
std::optional<Letter> from_bottom(const Word& x, int i);

int residue(const SpinorColumn& t);
// (left, right) after the slide-down algorithm.
std::pair<Word, Word> split_LR(const SpinorColumn& t);
// (left, right) after the slide-up algorithm; requires residue 1.
std::pair<Word, Word> split_star(const SpinorColumn& t);
bool is_admissible(const SpinorColumn& t, const SpinorColumn& s);

// Column-level crystal structure.
std::optional<SpinorColumn> column_e(const SpinorColumn& t, int i);
std::optional<SpinorColumn> column_f(const SpinorColumn& t, int i);
int column_eps(const SpinorColumn& t, int i);
int column_phi(const SpinorColumn& t, int i);
int column_lambda0(const SpinorColumn& t);

// wt = lambda0 * Lambda_0 + sum_i m[i] * eps_i (m is 1-based: m[0] unused).
struct Weight {
    int lambda0 = 0;
    std::vector<int> m;
    int eps(int i) const { return i < static_cast<int>(m.size()) ? m[i] : 0; }
    bool operator==(const Weight& o) const;
};

Weight weight_of_columns(const std::vector<SpinorColumn>& cols);
// Lambda^g(lambda) = (n/eps) Lambda_0 + sum lambda'_i eps_i
Weight highest_weight(GType g, int n, const Partition& lambda);
int pair_with_coroot(const Weight& w, int i, GType g);

struct FactorKind {
    ColumnKind kind;
    int a = 0;
    int parity = -1;  // for sp: 0 even height, 1 odd height, -1 any
};

// Factor profile of the product set for (g, G_n, lambda).
std::vector<FactorKind> profile(GType g, const GroupSpec& G, const Partition& lambda);

struct SpinorTableau {
    GType g;
    GroupSpec group;
    Partition lambda;
    std::vector<SpinorColumn> columns;  // T_1, T_2, ...

    Word word() const;  // w(T_r) ... w(T_1)
    bool admissible() const;
    Weight weight() const { return weight_of_columns(columns); }
    bool operator==(const SpinorTableau& o) const { return columns == o.columns; }
    bool operator<(const SpinorTableau& o) const { return columns < o.columns; }
};

void validate_parameters(GType g, const GroupSpec& G, const Partition& lambda);
SpinorTableau highest_weight_element(GType g, const GroupSpec& G, const Partition& lambda);

// The tensor rule over T_r (x) ... (x) T_1.
std::optional<SpinorTableau> spinor_e(const SpinorTableau& t, int i);
std::optional<SpinorTableau> spinor_f(const SpinorTableau& t, int i);
int spinor_eps(const SpinorTableau& t, int i);
int spinor_phi(const SpinorTableau& t, int i);

struct EnumerateOptions {
    GradedAlphabet alphabet;
    std::optional<std::vector<int>> content;  // exact content, 1-based (index 0 unused)
    std::optional<std::vector<int>> lattice_init;  // prefix lattice condition on w(T)
    int box_limit = -1;  // maximal total number of boxes
    long long limit = -1;  // stop after this many results
};

// Enumerates T^g_A(lambda, n) (entries from the alphabet) in a deterministic
// order. The visitor returns false to stop early. Returns the number visited.
long long enumerate_spinor(GType g, const GroupSpec& G, const Partition& lambda,
                           const EnumerateOptions& opt,
                           const std::function<bool(const SpinorTableau&)>& visit);

std::vector<SpinorTableau> enumerate_spinor_k(GType g, const GroupSpec& G, const Partition& lambda,
                                              int k);

}  // namespace spinor
