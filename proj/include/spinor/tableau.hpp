#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinor/partition.hpp"

namespace spinor {

// Letters of a Z2-graded alphabet. The even symbol i is encoded as 2i and the
// odd symbol i' as 2i+1, so integer order gives 1 < 1' < 2 < 2' < ...
using Letter = int;
using Word = std::vector<Letter>;

constexpr Letter even_letter(int i) { return 2 * i; }
constexpr Letter odd_letter(int i) { return 2 * i + 1; }
constexpr int letter_index(Letter a) { return a >> 1; }
constexpr bool is_odd(Letter a) { return (a & 1) != 0; }
// Swaps i <-> i', used when transposing a tableau.
constexpr Letter flip_parity(Letter a) { return a ^ 1; }

// a may stand immediately left of b in a row.
constexpr bool row_ok(Letter a, Letter b) { return a < b || (a == b && !is_odd(a)); }
// a may stand immediately above b in a column.
constexpr bool col_ok(Letter a, Letter b) { return a < b || (a == b && is_odd(a)); }

std::string letter_str(Letter a);
Letter parse_letter(const std::string& s);

class GradedAlphabet {
public:
    GradedAlphabet() = default;
    explicit GradedAlphabet(std::vector<Letter> symbols);
    static GradedAlphabet even(int k);  // [k]
    static GradedAlphabet odd(int k);   // [k]'

    const std::vector<Letter>& symbols() const { return symbols_; }
    int size() const { return static_cast<int>(symbols_.size()); }
    bool all_even() const;
    bool all_odd() const;
    bool contains(Letter a) const;

private:
    std::vector<Letter> symbols_;
};

// Straight, skew or rotated shape. A rotated shape mu^pi is stored as the skew
// shape (mu_1^l)/(mu_1 - mu_l, ..., mu_1 - mu_1) and remembers mu for display.
struct Shape {
    Partition outer;
    Partition inner;
    bool rotated = false;
    Partition source;  // mu when rotated

    static Shape straight(const Partition& lambda);
    static Shape skew(const Partition& lambda, const Partition& mu);
    static Shape rotated_of(const Partition& mu);

    int rows() const { return outer.length(); }
    int row_begin(int r) const { return inner.part(r + 1); }  // 0-based rows and columns
    int row_end(int r) const { return outer.part(r + 1); }
    bool has_cell(int r, int c) const;
    int cells() const { return outer.size() - inner.size(); }
    Shape transpose() const;
    bool operator==(const Shape& o) const {
        return outer == o.outer && inner == o.inner && rotated == o.rotated;
    }
};

class Tableau {
public:
    Tableau() = default;
    Tableau(Shape shape, std::vector<std::vector<Letter>> rows);

    // Top-aligned columns, left to right, forming a straight shape.
    static Tableau from_columns(const std::vector<Word>& cols);
    // Bottom-aligned columns whose heights weakly increase left to right.
    static Tableau rotated_from_columns(const std::vector<Word>& cols);

    const Shape& shape() const { return shape_; }
    const std::vector<std::vector<Letter>>& rows() const { return rows_; }
    Letter at(int r, int c) const;
    bool empty() const { return shape_.cells() == 0; }

    // Columns left to right, each read top to bottom.
    std::vector<Word> columns() const;
    Word column_word() const;
    bool is_semistandard() const;
    // counts[i] = occurrences of symbols with index i (either parity)
    std::vector<int> content() const;
    Tableau transpose() const;
    std::string str() const;

    bool operator==(const Tableau& o) const { return shape_ == o.shape_ && rows_ == o.rows_; }
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

private:
    Shape shape_;
    std::vector<std::vector<Letter>> rows_;
};

// Type A crystal operators on words, identified with w_1 (x) w_2 (x) ... .
// The pair (i, i+1) is taken in the parity given by `odd`.
int word_eps(const Word& w, int i, bool odd = false);
int word_phi(const Word& w, int i, bool odd = false);
std::optional<Word> word_e(const Word& w, int i, bool odd = false);
std::optional<Word> word_f(const Word& w, int i, bool odd = false);

// Type A operators on tableaux through the column word. Odd alphabets act on
// the transposed tableau; mixed alphabets are rejected.
int crystal_eps(const Tableau& t, int i);
int crystal_phi(const Tableau& t, int i);
std::optional<Tableau> crystal_e(const Tableau& t, int i);
std::optional<Tableau> crystal_f(const Tableau& t, int i);

// Column insertion a -> T into a straight-shape tableau.
Tableau column_insert(const Tableau& t, Letter a);
Tableau rectify_word(const Word& w);
Tableau rectify(const Tableau& s);

// Lattice condition with initial counts: init[j-1] is the starting count of
// letter j, and every prefix keeps count(i) >= count(i+1). Parity is ignored.
bool is_lattice_from(const Word& w, const std::vector<int>& init);

// Visits every A-semistandard tableau of the shape over the alphabet. When
// `budget` is given it bounds the number of uses of each alphabet position.
void for_each_sst(const Shape& shape, const GradedAlphabet& alpha,
                  const std::function<void(const Tableau&)>& visit,
                  const std::vector<int>* budget = nullptr);

// LR^lambda_{mu nu}: T in SST(nu) of content lambda - mu with eps_i(T) <= mu_i - mu_{i+1}.
std::vector<Tableau> lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu);
long long lr_coef(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace spinor
