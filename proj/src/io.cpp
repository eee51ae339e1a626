#include "spinor/io.hpp"

#include <stdexcept>

namespace spinor {

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

std::string partition_cell(const Partition& p) {
    if (p.empty()) return "0";
    std::string s;
    for (int i = 1; i <= p.length(); ++i) s += (i > 1 ? "," : "") + std::to_string(p.part(i));
    return s;
}

json word_json(const Word& w) {
    json j = json::array();
    for (Letter a : w) j.push_back(letter_str(a));
    return j;
}

Word word_from_json(const json& j) {
    Word w;
    for (auto& x : j) w.push_back(parse_letter(x.get<std::string>()));
    return w;
}

json to_json(const Tableau& t) {
    const Shape& s = t.shape();
    json shape;
    if (s.rotated) {
        shape = {{"outer", to_json(s.source)}, {"inner", json::array()}, {"rotated", true}};
    } else {
        shape = {{"outer", to_json(s.outer)}, {"inner", to_json(s.inner)}, {"rotated", false}};
    }
    json rows = json::array();
    for (auto& r : t.rows()) rows.push_back(word_json(r));
    return {{"shape", shape}, {"rows", rows}};
}

Tableau tableau_from_json(const json& j) {
    const auto& sj = j.at("shape");
    Partition outer = partition_from_json(sj.at("outer"));
    Partition inner = partition_from_json(sj.at("inner"));
    Shape shape = sj.value("rotated", false) ? Shape::rotated_of(outer)
                                             : (inner.empty() ? Shape::straight(outer) : Shape::skew(outer, inner));
    std::vector<std::vector<Letter>> rows;
    for (auto& r : j.at("rows")) rows.push_back(word_from_json(r));
    return Tableau(shape, rows);
}

json to_json(const SpinorColumn& c) {
    json j = {{"variant", c.variant()}, {"a", c.a}};
    if (c.kind == ColumnKind::sp) {
        j["b"] = 0;
        j["c"] = 0;
    } else {
        j["b"] = c.b();
        j["c"] = c.c();
    }
    j["left"] = word_json(c.left);
    j["right"] = word_json(c.right);
    return j;
}

SpinorColumn column_from_json(GType g, const json& j) {
    std::string v = j.at("variant").get<std::string>();
    Word l = word_from_json(j.at("left")), r = word_from_json(j.value("right", json::array()));
    GType cg = combinatorial(g);
    if (v == "standard") return SpinorColumn::standard(cg, j.at("a").get<int>(), l, r);
    if (v == "sp_plus" || v == "sp_minus") {
        if (!r.empty()) throw std::invalid_argument("spin column with a right part");
        return SpinorColumn::sp(cg, l);
    }
    if (v == "dbar_zero") return SpinorColumn::dbar(l, r);
    throw std::invalid_argument("unknown column variant '" + v + "'");
}

json to_json(const SpinorTableau& t) {
    json cols = json::array();
    for (auto& c : t.columns) cols.push_back(to_json(c));
    return {{"type", to_string(t.g)},
            {"group", {{"family", to_string(t.group.family)}, {"n", t.group.n}}},
            {"lambda", to_json(t.lambda)},
            {"columns", cols}};
}

SpinorTableau spinor_from_json(const json& j) {
    GType g = parse_gtype(j.at("type").get<std::string>());
    GroupSpec G(parse_family(j.at("group").at("family").get<std::string>()), j.at("group").at("n").get<int>());
    SpinorTableau t{g, G, partition_from_json(j.at("lambda")), {}};
    for (auto& c : j.at("columns")) t.columns.push_back(column_from_json(g, c));
    return t;
}

std::string spinor_tsv(const SpinorTableau& t) {
    auto col = [](const Word& w) {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + letter_str(w[i]);
        return s.empty() ? std::string("-") : s;
    };
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        const auto& c = t.columns[i];
        if (i) s += "\t";
        s += c.variant() + "\t" + col(c.left) + "\t" + col(c.right);
    }
    return s;
}

json to_json(const CharacterSeries& s) {
    json terms = json::array();
    for (auto& [key, c] : s.terms()) terms.push_back({{"z", key.first}, {"x", key.second}, {"coef", c}});
    return {{"degree", s.degree()}, {"k", s.k()}, {"terms", terms}};
}

CharacterSeries series_from_json(const json& j) {
    CharacterSeries s(j.at("k").get<int>(), j.at("degree").get<int>());
    for (auto& t : j.at("terms"))
        s.add(t.at("z").get<int>(), t.at("x").get<std::vector<int>>(), t.at("coef").get<long long>());
    return s;
}

json count_json(GType g, const Partition& lambda, const Partition& mu, const Partition& nu, long long count,
                bool stable) {
    return {{"lambda", to_json(lambda)}, {"mu", to_json(mu)},         {"nu", to_json(nu)},
            {"type", to_string(g)},      {"count", count},            {"stable", stable}};
}

}  // namespace spinor
