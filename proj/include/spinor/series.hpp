#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinor/spinor.hpp"

namespace spinor {

// Truncated power series in z and x_1..x_k. Terms of total x-degree above
// `degree` are dropped.
class CharacterSeries {
public:
    using Key = std::pair<int, std::vector<int>>;  // (z exponent, x exponents)

    CharacterSeries(int k, int degree);
    static CharacterSeries one(int k, int degree);

    int k() const { return k_; }
    int degree() const { return degree_; }
    const std::map<Key, long long>& terms() const { return terms_; }

    void add(int z, const std::vector<int>& x, long long c);
    long long coef(int z, const std::vector<int>& x) const;
    long long total() const;  // all coefficients summed
    CharacterSeries without_z() const;
    CharacterSeries shifted_z(int dz) const;
    // swaps two x-variables (0-based)
    CharacterSeries swapped(int i, int j) const;

    CharacterSeries operator+(const CharacterSeries& o) const;
    CharacterSeries operator*(const CharacterSeries& o) const;
    bool operator==(const CharacterSeries& o) const { return k_ == o.k_ && terms_ == o.terms_; }

    std::string str() const;

private:
    int k_;
    int degree_;
    std::map<Key, long long> terms_;
};

CharacterSeries schur(const Partition& lambda, int k, int degree);
// Odd symbols i' contribute the variable x_i as well.
CharacterSeries super_schur(const Partition& lambda, const GradedAlphabet& alpha, int degree);

// z^{n/eps} times the generating function of T^g_A(lambda, n), truncated.
CharacterSeries char_spinor(GType g, const GroupSpec& group, const Partition& lambda,
                            const GradedAlphabet& alpha, int degree);

// (g, dual) pairs: c <-> d, bb -> b.
GType dual_type(GType g);
CharacterSeries char_unitarizable(GType g, int k, const Partition& lambda, int n, int degree);

// Delta^g(x_1..x_k) for g in {bb, c, d}.
CharacterSeries delta_series(GType g, int k, int degree);

struct IdentityReport {
    bool ok = true;
    std::string message;
};
IdentityReport verify_oscillator_identity(GType g, int k, const Partition& lambda, int n, int degree);

// Schur expansion of a symmetric series without z (lex-max elimination).
std::map<Partition, long long> schur_expand(const CharacterSeries& s);

}  // namespace spinor
