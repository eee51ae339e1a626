#include <doctest.h>

#include "spinor/io.hpp"

using namespace spinor;

TEST_CASE("partition cells") {
    CHECK(partition_cell({}) == "0");
    CHECK(partition_cell({3, 1}) == "3,1");
    CHECK(parse_partition(partition_cell({2, 2, 1})) == Partition{2, 2, 1});
}

TEST_CASE("tableau JSON round trip") {
    Tableau t(Shape::straight({2, 1}), {{even_letter(1), odd_letter(2)}, {odd_letter(2)}});
    auto j = to_json(t);
    CHECK(j["rows"][0][1] == "2'");
    CHECK(tableau_from_json(json::parse(j.dump())) == t);
    auto r = canonical_rotated({2, 1});
    auto jr = to_json(r);
    CHECK(jr["shape"]["rotated"] == true);
    CHECK(jr["shape"]["outer"] == json::array({2, 1}));
    CHECK(tableau_from_json(jr) == r);
}

TEST_CASE("spinor tableau JSON round trip") {
    GroupSpec o4(Family::O, 4);
    for (auto& t : enumerate_spinor_k(GType::d, o4, {2, 1}, 2)) {
        auto j = to_json(t);
        CHECK(j["type"] == "d");
        CHECK(j["group"]["family"] == "O");
        auto back = spinor_from_json(json::parse(j.dump()));
        CHECK(back == t);
        CHECK(back.lambda == t.lambda);
    }
    auto h = highest_weight_element(GType::b, GroupSpec(Family::Spin, 3), {1});
    CHECK(spinor_from_json(to_json(h)) == h);
    CHECK(spinor_tsv(h).find("sp_plus\t-\t-") != std::string::npos);
}

TEST_CASE("series JSON round trip") {
    auto s = char_unitarizable(GType::c, 2, {1}, 4, 5);
    auto j = to_json(s);
    CHECK(j["k"] == 2);
    CHECK(series_from_json(json::parse(j.dump())) == s);
}

TEST_CASE("bad input is rejected") {
    CHECK_THROWS(parse_letter("x"));
    CHECK_THROWS(column_from_json(GType::c, json{{"variant", "weird"}, {"left", json::array()}}));
    CHECK_THROWS(parse_gtype("e"));
    CHECK_THROWS(parse_family("U"));
}
