#include <doctest.h>

#include "spinor/branching.hpp"
#include "spinor/series.hpp"

using namespace spinor;

TEST_CASE("schur polynomials") {
    CHECK(schur({}, 2, 4) == CharacterSeries::one(2, 4));
    auto s1 = schur({1}, 2, 4);
    CHECK(s1.coef(0, {1, 0}) == 1);
    CHECK(s1.coef(0, {0, 1}) == 1);
    CHECK(s1.total() == 2);
    // s_(2,1)(x1,x2,x3) has 8 monomials counted with multiplicity
    auto s21 = schur({2, 1}, 3, 6);
    CHECK(s21.total() == 8);
    CHECK(s21.coef(0, {1, 1, 1}) == 2);
    CHECK(s21.swapped(0, 1) == s21);
    CHECK(s21.swapped(1, 2) == s21);
    CHECK(schur({1, 1, 1}, 2, 6).total() == 0);
    // degree truncation
    CHECK(schur({3}, 2, 2).total() == 0);
}

TEST_CASE("series arithmetic") {
    auto a = schur({1}, 2, 4);
    auto sq = a * a;
    CHECK(sq == schur({2}, 2, 4) + schur({1, 1}, 2, 4));
    CHECK(a.shifted_z(3).coef(3, {1, 0}) == 1);
    CHECK(a.shifted_z(3).without_z() == a);
}

TEST_CASE("super schur functions") {
    GradedAlphabet mixed({even_letter(1), odd_letter(1)});
    // x1 y1 + y1^2
    CHECK(super_schur({1, 1}, mixed, 4).total() == 2);
    // over odd symbols s_lambda becomes s_lambda'
    CHECK(super_schur({2, 1, 1}, GradedAlphabet::odd(2), 6) == schur({3, 1}, 2, 6));
}

TEST_CASE("Delta series") {
    auto c = delta_series(GType::c, 1, 8);
    for (int d = 0; d <= 8; ++d) CHECK(c.coef(0, {d}) == (d % 2 == 0 ? 1 : 0));
    auto d1 = delta_series(GType::d, 1, 8);
    CHECK(d1 == CharacterSeries::one(1, 8));
    for (auto g : {GType::b_bullet, GType::c, GType::d}) {
        CharacterSeries sum(2, 6);
        for (auto& mu : partitions_up_to(6, -1, 2))
            if (is_in_script_P_g(mu, combinatorial(g))) sum = sum + schur(mu, 2, 6);
        CHECK(delta_series(g, 2, 6) == sum);
    }
}

TEST_CASE("spinor characters specialise to the enumeration count") {
    struct Case {
        GType g;
        GroupSpec G;
        Partition lam;
        int k;
    };
    std::vector<Case> cases{{GType::c, GroupSpec(Family::Sp, 4), {1}, 2},
                            {GType::b, GroupSpec(Family::Spin, 3), {}, 2},
                            {GType::d, GroupSpec(Family::O, 4), {2, 2}, 2}};
    for (auto& c : cases) {
        auto ch = char_spinor(c.g, c.G, c.lam, GradedAlphabet::even(c.k), 40);
        CHECK(ch.total() == static_cast<long long>(enumerate_spinor_k(c.g, c.G, c.lam, c.k).size()));
        int z = highest_weight(c.g, c.G.n, c.lam).lambda0;
        for (auto& term : ch.terms()) CHECK(term.first.first == z);
    }
}

TEST_CASE("Schur expansion of spinor characters gives branching multiplicities") {
    int k = 2, degree = 6;
    for (auto g : {GType::c, GType::d}) {
        GroupSpec G = paired_group(g, 4);
        for (auto& mu : parameter_set(G, 2)) {
            auto ch = char_spinor(g, G, mu, GradedAlphabet::even(k), degree).without_z();
            auto expansion = schur_expand(ch);
            for (auto& nu : partitions_up_to(degree, -1, k)) {
                long long expected = lr_count_branch({g, G, mu, nu.conjugate()});
                auto it = expansion.find(nu);
                CHECK((it == expansion.end() ? 0 : it->second) == expected);
            }
        }
    }
}

TEST_CASE("unitarizable characters") {
    CHECK(dual_type(GType::c) == GType::d);
    CHECK(dual_type(GType::d) == GType::c);
    CHECK(dual_type(GType::b_bullet) == GType::b);
    for (auto g : {GType::b_bullet, GType::c, GType::d})
        for (int n : {4, 6}) {
            auto r = verify_oscillator_identity(g, 2, {1}, n, 6);
            CHECK_MESSAGE(r.ok, r.message);
        }
    CHECK_THROWS(verify_oscillator_identity(GType::c, 2, {}, 2, 4));
    CHECK_THROWS(char_unitarizable(GType::c, 1, {1, 1}, 4, 4));
    // k = 1, lambda = 0, g = c: 1 + x^2 + x^4 + ...
    auto ch = char_unitarizable(GType::c, 1, {}, 2, 8).without_z();
    CHECK(ch == delta_series(GType::c, 1, 8));
}
