#include "spinor/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinor {

std::string letter_str(Letter a) {
    std::string s = std::to_string(letter_index(a));
    if (is_odd(a)) s += "'";
    return s;
}

Letter parse_letter(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty letter");
    bool odd = s.back() == '\'';
    std::string digits = odd ? s.substr(0, s.size() - 1) : s;
    std::size_t pos = 0;
    int i = std::stoi(digits, &pos);
    if (pos != digits.size() || i < 1) throw std::invalid_argument("bad letter '" + s + "'");
    return odd ? odd_letter(i) : even_letter(i);
}

GradedAlphabet::GradedAlphabet(std::vector<Letter> symbols) : symbols_(std::move(symbols)) {
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

GradedAlphabet GradedAlphabet::even(int k) {
    std::vector<Letter> v;
    for (int i = 1; i <= k; ++i) v.push_back(even_letter(i));
    return GradedAlphabet(v);
}

GradedAlphabet GradedAlphabet::odd(int k) {
    std::vector<Letter> v;
    for (int i = 1; i <= k; ++i) v.push_back(odd_letter(i));
    return GradedAlphabet(v);
}

bool GradedAlphabet::all_even() const {
    return std::none_of(symbols_.begin(), symbols_.end(), is_odd);
}
bool GradedAlphabet::all_odd() const {
    return std::all_of(symbols_.begin(), symbols_.end(), is_odd);
}
bool GradedAlphabet::contains(Letter a) const {
    return std::binary_search(symbols_.begin(), symbols_.end(), a);
}

Shape Shape::straight(const Partition& lambda) { return Shape{lambda, Partition{}, false, {}}; }

Shape Shape::skew(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) throw std::invalid_argument("skew shape requires mu inside lambda");
    return Shape{lambda, mu, false, {}};
}

Shape Shape::rotated_of(const Partition& mu) {
    int l = mu.length();
    int w = mu.part(1);
    std::vector<int> outer(l, w), inner(l);
    for (int r = 1; r <= l; ++r) inner[r - 1] = w - mu.part(l + 1 - r);
    return Shape{Partition(outer), Partition(inner), true, mu};
}

bool Shape::has_cell(int r, int c) const {
    return r >= 0 && r < rows() && c >= row_begin(r) && c < row_end(r);
}

Shape Shape::transpose() const {
    Shape s{outer.conjugate(), inner.conjugate(), rotated, source.conjugate()};
    return s;
}

Tableau::Tableau(Shape shape, std::vector<std::vector<Letter>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw std::invalid_argument("tableau row count does not match shape");
    for (int r = 0; r < shape_.rows(); ++r)
        if (static_cast<int>(rows_[r].size()) != shape_.row_end(r) - shape_.row_begin(r))
            throw std::invalid_argument("tableau row length does not match shape");
}

Tableau Tableau::from_columns(const std::vector<Word>& cols) {
    std::vector<int> heights;
    for (auto& c : cols)
        if (!c.empty()) heights.push_back(static_cast<int>(c.size()));
    if (heights.size() != cols.size() && !heights.empty())
        throw std::invalid_argument("empty column inside a straight shape");
    Partition shape_conj(heights);
    Partition lambda = shape_conj.conjugate();
    std::vector<std::vector<Letter>> rows(lambda.length());
    for (std::size_t j = 0; j < heights.size(); ++j)
        for (std::size_t r = 0; r < cols[j].size(); ++r) rows[r].push_back(cols[j][r]);
    return Tableau(Shape::straight(lambda), rows);
}

Tableau Tableau::rotated_from_columns(const std::vector<Word>& cols) {
    std::vector<int> heights;
    for (auto& c : cols) heights.push_back(static_cast<int>(c.size()));
    for (std::size_t j = 1; j < heights.size(); ++j)
        if (heights[j] < heights[j - 1])
            throw std::invalid_argument("rotated shape needs weakly increasing column heights");
    std::vector<int> delta_conj(heights.rbegin(), heights.rend());
    Partition delta = Partition(delta_conj).conjugate();
    Shape shape = Shape::rotated_of(delta);
    int h = shape.rows();
    int w = static_cast<int>(cols.size());
    std::vector<std::vector<Letter>> rows(h);
    // Columns of width w are right-aligned within the rotated shape.
    int offset = delta.part(1) - w;
    for (int r = 0; r < h; ++r)
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c) {
            int j = c - offset;
            const Word& col = cols[j];
            int top = h - static_cast<int>(col.size());
            rows[r].push_back(col[r - top]);
        }
    return Tableau(shape, rows);
}

Letter Tableau::at(int r, int c) const { return rows_[r][c - shape_.row_begin(r)]; }

std::vector<Word> Tableau::columns() const {
    std::vector<Word> cols(shape_.outer.part(1));
    for (int r = 0; r < shape_.rows(); ++r)
        for (int c = shape_.row_begin(r); c < shape_.row_end(r); ++c) cols[c].push_back(at(r, c));
    return cols;
}

Word Tableau::column_word() const {
    Word w;
    auto cols = columns();
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

bool Tableau::is_semistandard() const {
    for (int r = 0; r < shape_.rows(); ++r)
        for (int c = shape_.row_begin(r); c < shape_.row_end(r); ++c) {
            Letter x = at(r, c);
            if (shape_.has_cell(r, c - 1) && !row_ok(at(r, c - 1), x)) return false;
            if (shape_.has_cell(r - 1, c) && !col_ok(at(r - 1, c), x)) return false;
        }
    return true;
}

std::vector<int> Tableau::content() const {
    std::vector<int> m;
    for (auto& row : rows_)
        for (Letter a : row) {
            int i = letter_index(a);
            if (static_cast<int>(m.size()) <= i) m.resize(i + 1, 0);
            ++m[i];
        }
    return m;
}

Tableau Tableau::transpose() const {
    Shape t = shape_.transpose();
    std::vector<std::vector<Letter>> rows(t.rows());
    for (int r = 0; r < t.rows(); ++r)
        for (int c = t.row_begin(r); c < t.row_end(r); ++c) rows[r].push_back(flip_parity(at(c, r)));
    return Tableau(t, rows);
}

std::string Tableau::str() const {
    std::string s;
    for (int r = 0; r < shape_.rows(); ++r) {
        s += "[";
        for (std::size_t j = 0; j < rows_[r].size(); ++j) {
            if (j) s += ",";
            s += letter_str(rows_[r][j]);
        }
        s += "]";
    }
    return s;
}

namespace {

Letter pair_letter(int i, bool odd) { return odd ? odd_letter(i) : even_letter(i); }

// Unmatched positions of i (plus) and i+1 (minus) under the tensor rule.
void signature(const Word& w, int i, bool odd, std::vector<int>& minus, std::vector<int>& plus) {
    Letter lo = pair_letter(i, odd), hi = pair_letter(i + 1, odd);
    minus.clear();
    plus.clear();
    for (int p = 0; p < static_cast<int>(w.size()); ++p) {
        if (w[p] == lo) {
            plus.push_back(p);
        } else if (w[p] == hi) {
            if (!plus.empty())
                plus.pop_back();
            else
                minus.push_back(p);
        }
    }
}

bool tableau_parity(const Tableau& t) {
    bool any_even = false, any_odd = false;
    for (auto& row : t.rows())
        for (Letter a : row) (is_odd(a) ? any_odd : any_even) = true;
    if (any_even && any_odd)
        throw std::invalid_argument("crystal operators on mixed-parity tableaux are not supported");
    return any_odd;
}

std::optional<Tableau> apply_word_op(const Tableau& t, int i, bool raise) {
    if (tableau_parity(t)) {
        auto tt = t.transpose();
        auto r = apply_word_op(tt, i, raise);
        if (!r) return std::nullopt;
        return r->transpose();
    }
    Word w = t.column_word();
    auto nw = raise ? word_e(w, i) : word_f(w, i);
    if (!nw) return std::nullopt;
    auto rows = t.rows();
    int p = 0;
    const Shape& s = t.shape();
    for (int c = s.outer.part(1) - 1; c >= 0; --c)
        for (int r = 0; r < s.rows(); ++r)
            if (s.has_cell(r, c)) rows[r][c - s.row_begin(r)] = (*nw)[p++];
    return Tableau(s, rows);
}

}  // namespace

int word_eps(const Word& w, int i, bool odd) {
    std::vector<int> minus, plus;
    signature(w, i, odd, minus, plus);
    return static_cast<int>(minus.size());
}

int word_phi(const Word& w, int i, bool odd) {
    std::vector<int> minus, plus;
    signature(w, i, odd, minus, plus);
    return static_cast<int>(plus.size());
}

std::optional<Word> word_e(const Word& w, int i, bool odd) {
    std::vector<int> minus, plus;
    signature(w, i, odd, minus, plus);
    if (minus.empty()) return std::nullopt;
    Word r = w;
    r[minus.back()] = pair_letter(i, odd);
    return r;
}

std::optional<Word> word_f(const Word& w, int i, bool odd) {
    std::vector<int> minus, plus;
    signature(w, i, odd, minus, plus);
    if (plus.empty()) return std::nullopt;
    Word r = w;
    r[plus.front()] = pair_letter(i + 1, odd);
    return r;
}

int crystal_eps(const Tableau& t, int i) {
    if (tableau_parity(t)) return crystal_eps(t.transpose(), i);
    return word_eps(t.column_word(), i);
}

int crystal_phi(const Tableau& t, int i) {
    if (tableau_parity(t)) return crystal_phi(t.transpose(), i);
    return word_phi(t.column_word(), i);
}

std::optional<Tableau> crystal_e(const Tableau& t, int i) { return apply_word_op(t, i, true); }
std::optional<Tableau> crystal_f(const Tableau& t, int i) { return apply_word_op(t, i, false); }

Tableau column_insert(const Tableau& t, Letter a) {
    if (t.shape().rotated || !t.shape().inner.empty())
        throw std::invalid_argument("column insertion needs a straight shape");
    auto cols = t.columns();
    Letter x = a;
    for (auto& col : cols) {
        // First entry that cannot stand above x is bumped.
        auto it = std::find_if(col.begin(), col.end(), [x](Letter y) { return !col_ok(y, x); });
        if (it == col.end()) {
            col.push_back(x);
            return Tableau::from_columns(cols);
        }
        std::swap(*it, x);
    }
    cols.push_back(Word{x});
    return Tableau::from_columns(cols);
}

Tableau rectify_word(const Word& w) {
    Tableau t = Tableau::from_columns({});
    for (Letter a : w) t = column_insert(t, a);
    return t;
}

Tableau rectify(const Tableau& s) { return rectify_word(s.column_word()); }

bool is_lattice_from(const Word& w, const std::vector<int>& init) {
    std::vector<int> cnt = init;
    for (Letter a : w) {
        int i = letter_index(a);
        if (static_cast<int>(cnt.size()) < i) cnt.resize(i, 0);
        ++cnt[i - 1];
        if (i >= 2 && cnt[i - 1] > cnt[i - 2]) return false;
    }
    return true;
}

void for_each_sst(const Shape& shape, const GradedAlphabet& alpha,
                  const std::function<void(const Tableau&)>& visit, const std::vector<int>* budget) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c) cells.emplace_back(r, c);
    std::vector<std::vector<Letter>> rows(shape.rows());
    for (int r = 0; r < shape.rows(); ++r) rows[r].assign(shape.row_end(r) - shape.row_begin(r), 0);
    std::vector<int> used(alpha.size(), 0);
    const auto& sym = alpha.symbols();

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(Tableau(shape, rows));
            return;
        }
        auto [r, c] = cells[idx];
        for (int s = 0; s < alpha.size(); ++s) {
            Letter x = sym[s];
            if (budget && used[s] >= (*budget)[s]) continue;
            if (shape.has_cell(r, c - 1) && !row_ok(rows[r][c - 1 - shape.row_begin(r)], x)) continue;
            if (shape.has_cell(r - 1, c) && !col_ok(rows[r - 1][c - shape.row_begin(r - 1)], x)) continue;
            rows[r][c - shape.row_begin(r)] = x;
            ++used[s];
            rec(idx + 1);
            --used[s];
        }
    };
    rec(0);
}

std::vector<Tableau> lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
    std::vector<Tableau> out;
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu))
        return out;
    int l = lambda.length();
    std::vector<int> budget(l);
    for (int i = 1; i <= l; ++i) budget[i - 1] = lambda.part(i) - mu.part(i);
    for_each_sst(
        Shape::straight(nu), GradedAlphabet::even(l),
        [&](const Tableau& t) {
            Word w = t.column_word();
            for (int i = 1; i < l; ++i)
                if (word_eps(w, i) > mu.part(i) - mu.part(i + 1)) return;
            out.push_back(t);
        },
        &budget);
    return out;
}

long long lr_coef(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return static_cast<long long>(lr_tableaux(lambda, mu, nu).size());
}

}  // namespace spinor
