#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinor/partition.hpp"

namespace spinor {

// Independent LR count: fillings of lambda/mu with content nu whose column
// word is a lattice word.
long long lr_coef_latticeword(const Partition& lambda, const Partition& mu, const Partition& nu);

enum class RootType { A, B, C, D };

std::string to_string(RootType t);

// A torus character: exponent vectors in standard coordinates.
struct LaurentCharacter {
    int rank = 0;
    std::map<std::vector<int>, long long> terms;

    long long at(const std::vector<int>& e) const;
    long long total() const;  // value at the identity
    void add(const std::vector<int>& e, long long c);
};

// One simple factor of a (product) group, e.g. {C, 2} for Sp_4.
struct SimpleFactor {
    RootType type;
    int rank;
};

bool is_dominant(RootType t, const std::vector<int>& w);

// Irreducible character by Freudenthal's formula (integral weights only).
// Type A stands for gl_rank, the others for sp/so of the given rank.
LaurentCharacter weyl_character(RootType t, const std::vector<int>& highest);
const LaurentCharacter& weyl_character_cached(RootType t, const std::vector<int>& highest);

// Product formula. `twice` holds 2x the standard coordinates, so that spin
// weights are representable.
long long weyl_dimension_twice(RootType t, const std::vector<int>& twice);
long long weyl_dimension(RootType t, const std::vector<int>& highest);

// Dimension of the g_k-module with the highest weight of the spinor model
// T^g_k(lambda, n), converted to standard coordinates n/2 - lambda'_{k+1-i}.
long long spinor_weyl_dimension(GType g, int n, const Partition& lambda, int k);

// GL_n torus to the Sp_n or SO_n torus: x_{l+i} = x_i^{-1}, and for n odd the
// last variable is set to 1.
LaurentCharacter restrict_gl_to_classical(const LaurentCharacter& ch, int n);

// Decomposes a character of a product of simple factors (coordinates
// concatenated) into irreducibles by lex-max leading term elimination.
// Throws std::runtime_error when the remainder is not decomposable.
std::map<std::vector<int>, long long> restrict_and_decompose(const LaurentCharacter& ch,
                                                             const std::vector<SimpleFactor>& family);

// [V^lambda_{GL_n} : V^mu_{Sp_n}] via characters.
long long oracle_gl_to_sp(const Partition& lambda, const Partition& mu, int n);
// [V^lambda_{Sp_{m+n}} : V^mu_{Sp_m} (x) V^nu_{Sp_n}] via characters.
long long oracle_sp_tensor(const Partition& lambda, const Partition& mu, const Partition& nu, int m,
                           int n);
// SO_n-level decomposition of V^lambda_{GL_n}.
std::map<std::vector<int>, long long> oracle_gl_to_so(const Partition& lambda, int n);
// SO_n highest weights occurring in the O_n-module V^mu (one, or two when it
// splits).
std::vector<std::vector<int>> o_to_so_weights(const Partition& mu, int n);

}  // namespace spinor
