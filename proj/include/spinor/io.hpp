#pragma once

#include <json.hpp>
#include <string>

#include "spinor/branching.hpp"
#include "spinor/series.hpp"
#include "spinor/spinor.hpp"

namespace spinor {

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

// Comma list for TSV cells; the empty partition is written "0".
std::string partition_cell(const Partition& p);

json word_json(const Word& w);
Word word_from_json(const json& j);

// {"shape": {"outer", "inner", "rotated"}, "rows": [["1","2'"], ...]}.
// A rotated shape mu^pi is written with outer = mu, inner = [], rotated = true.
json to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

json to_json(const SpinorColumn& c);
SpinorColumn column_from_json(GType g, const json& j);
json to_json(const SpinorTableau& t);
SpinorTableau spinor_from_json(const json& j);

// One factor per cell group: variant, left and right columns.
std::string spinor_tsv(const SpinorTableau& t);

json to_json(const CharacterSeries& s);
CharacterSeries series_from_json(const json& j);

json count_json(GType g, const Partition& lambda, const Partition& mu, const Partition& nu, long long count,
                bool stable);

}  // namespace spinor
