#include <doctest.h>

#include "spinor/branching.hpp"
#include "spinor/oracle.hpp"

using namespace spinor;

TEST_CASE("lattice word oracle") {
    CHECK(lr_coef_latticeword({2, 1}, {1}, {1, 1}) == 1);
    CHECK(lr_coef_latticeword({3, 2, 1}, {2, 1}, {2, 1}) == 2);
    CHECK(lr_coef_latticeword({4, 2}, {2, 1}, {2, 1}) == 1);
    CHECK(lr_coef_latticeword({2, 2}, {1}, {1}) == 0);
    for (auto& lam : partitions_up_to(6))
        for (auto& mu : partitions_up_to(lam.size()))
            for (auto& nu : partitions_of(lam.size() - mu.size()))
                if (lam.contains(mu)) CHECK(lr_coef_latticeword(lam, mu, nu) == lr_coef(lam, mu, nu));
}

TEST_CASE("Weyl dimensions") {
    CHECK(weyl_dimension(RootType::C, {1, 0}) == 4);
    CHECK(weyl_dimension(RootType::C, {1, 1}) == 5);
    CHECK(weyl_dimension(RootType::B, {1, 0}) == 5);
    CHECK(weyl_dimension(RootType::D, {1, 1, 0}) == 15);
    CHECK(weyl_dimension(RootType::A, {2, 1, 0}) == 8);
    // spin representation of so_5
    CHECK(weyl_dimension_twice(RootType::B, {1, 1}) == 4);
    CHECK(weyl_dimension_twice(RootType::D, {1, 1, 1}) == 4);
    CHECK(weyl_dimension_twice(RootType::D, {1, 1, -1}) == 4);
    for (auto t : {RootType::A, RootType::B, RootType::C, RootType::D})
        for (std::vector<int> hw : {std::vector<int>{1, 0, 0}, {2, 1, 0}, {1, 1, 1}, {3, 0, 0}}) {
            auto ch = weyl_character(t, hw);
            CHECK(ch.total() == weyl_dimension(t, hw));
            CHECK(ch.at(hw) == 1);
        }
}

TEST_CASE("spinor dimension for a two-element set") {
    CHECK(spinor_weyl_dimension(GType::c, 2, {}, 1) == 2);
    CHECK(spinor_weyl_dimension(GType::c, 2, {1}, 1) == 1);
    for (auto& lam : parameter_set(GroupSpec(Family::O, 4), 3))
        if (lam.part(1) <= 2) CHECK(spinor_weyl_dimension(GType::d, 4, lam, 2) ==
              static_cast<long long>(enumerate_spinor_k(GType::d, GroupSpec(Family::O, 4), lam, 2).size()));
}

TEST_CASE("GL to Sp oracle") {
    // GL_2 -> Sp_2 = SL_2 is the identity on the derived group
    CHECK(oracle_gl_to_sp({1}, {1}, 2) == 1);
    CHECK(oracle_gl_to_sp({1, 1}, {}, 2) == 1);
    CHECK(oracle_gl_to_sp({2, 1}, {1}, 2) == 1);
    CHECK(oracle_gl_to_sp({2, 1}, {2}, 2) == 0);
    for (auto& lam : partitions_up_to(4, -1, 4))
        for (auto& mu : parameter_set(GroupSpec(Family::Sp, 4), lam.size()))
            CHECK(oracle_gl_to_sp(lam, mu, 4) == lr_count_branch({GType::c, GroupSpec(Family::Sp, 4), mu, lam}));
}

TEST_CASE("Sp tensor oracle") {
    CHECK(oracle_sp_tensor({1}, {1}, {}, 2, 2) == 1);
    CHECK(oracle_sp_tensor({1}, {}, {1}, 2, 2) == 1);
    for (auto& lam : partitions_up_to(3, -1, 2))
        for (auto& mu : parameter_set(GroupSpec(Family::Sp, 2), lam.size()))
            for (auto& nu : parameter_set(GroupSpec(Family::Sp, 2), lam.size()))
                CHECK(oracle_sp_tensor(lam, mu, nu, 2, 2) == lr_count_tensor({GType::c, 2, 2, lam, mu, nu}));
}

TEST_CASE("GL to SO oracle at O_4") {
    // V^(2,2) of GL_4 contains the O_4-modules (2,2), (2) and ()
    auto dec = oracle_gl_to_so({2, 2}, 4);
    long long total = 0;
    for (auto& [w, m] : dec) total += m;
    long long expected = 0;
    for (auto& mu : std::vector<Partition>{{2, 2}, {2}, {}}) expected += o_to_so_weights(mu, 4).size();
    CHECK(total == expected);
    CHECK(o_to_so_weights({2, 2}, 4).size() == 2);
    CHECK(o_to_so_weights({1, 1, 1}, 4) == o_to_so_weights({1}, 4));
    CHECK(o_to_so_weights({}, 4).size() == 1);
}

TEST_CASE("restriction and decomposition") {
    auto ch = restrict_gl_to_classical(weyl_character(RootType::A, {1, 0, 0, 0}), 4);
    auto dec = restrict_and_decompose(ch, {{RootType::C, 2}});
    CHECK(dec.size() == 1);
    CHECK(dec.at({1, 0}) == 1);
    auto ch2 = restrict_gl_to_classical(weyl_character(RootType::A, {1, 1, 0, 0}), 4);
    auto dec2 = restrict_and_decompose(ch2, {{RootType::C, 2}});
    CHECK(dec2.at({1, 1}) == 1);
    CHECK(dec2.at({0, 0}) == 1);
}
