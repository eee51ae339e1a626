#include "spinor/spinor.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace spinor {

namespace {

constexpr Letter kOne = even_letter(1);
constexpr Letter kTwo = even_letter(2);

bool chain_ok(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!col_ok(w[i - 1], w[i])) return false;
    return true;
}

int max_residue(GType g) { return combinatorial(g) == GType::d ? 1 : 0; }

bool has_odd(const Word& w) { return std::any_of(w.begin(), w.end(), is_odd); }

}  // namespace

std::string SpinorColumn::variant() const {
    switch (kind) {
        case ColumnKind::standard: return "standard";
        case ColumnKind::sp: return left.size() % 2 == 0 ? "sp_plus" : "sp_minus";
        case ColumnKind::dbar: return "dbar_zero";
    }
    return "?";
}

Word SpinorColumn::word() const {
    Word w = right;
    w.insert(w.end(), left.begin(), left.end());
    return w;
}

bool SpinorColumn::valid() const {
    if (!chain_ok(left) || !chain_ok(right)) return false;
    switch (kind) {
        case ColumnKind::sp: return a == 0 && right.empty();
        case ColumnKind::dbar: {
            if (combinatorial(g) != GType::d || a != 0 || left.size() % 2 == 0) return false;
            int bb = b();
            if (bb < 0 || bb % 2 != 0) return false;
            for (int t = 0; t < c(); ++t)
                if (!row_ok(left[t], right[bb + t])) return false;
            return true;
        }
        case ColumnKind::standard: {
            int cc = c(), bb = b();
            if (a < 0 || cc < 0 || bb < 0) return false;
            switch (combinatorial(g)) {
                case GType::c:
                    if (bb != 0) return false;
                    break;
                case GType::d:
                    if (bb % 2 != 0 || cc % 2 != 0) return false;
                    break;
                default: break;
            }
            for (int t = 0; t < cc; ++t)
                if (!row_ok(left[t], right[bb + t])) return false;
            return residue(*this) <= max_residue(g);
        }
    }
    return false;
}

SpinorColumn SpinorColumn::standard(GType g, int a, Word left, Word right) {
    return SpinorColumn{g, ColumnKind::standard, a, std::move(left), std::move(right)};
}

SpinorColumn SpinorColumn::sp(GType g, Word col) {
    return SpinorColumn{g, ColumnKind::sp, 0, std::move(col), {}};
}

SpinorColumn SpinorColumn::dbar(Word left, Word right) {
    return SpinorColumn{GType::d, ColumnKind::dbar, 0, std::move(left), std::move(right)};
}

std::optional<Letter> from_bottom(const Word& x, int i) {
    if (i < 1 || i > static_cast<int>(x.size())) return std::nullopt;
    return x[x.size() - i];
}

int residue(const SpinorColumn& t) {
    if (t.kind == ColumnKind::sp) return t.height() % 2;
    if (t.kind == ColumnKind::dbar) return 0;
    int a = t.a, b = t.b(), c = t.c();
    for (int k = std::min(a, b); k > 0; --k) {
        bool ok = true;
        for (int s = 0; s < c + k && ok; ++s) ok = row_ok(t.left[s], t.right[b + s - k]);
        if (ok) return k;
    }
    return 0;
}

std::pair<Word, Word> split_LR(const SpinorColumn& t) {
    if (t.kind == ColumnKind::sp) return {t.left, {}};
    int nL = t.height(), nR = static_cast<int>(t.right.size()), b = t.b();
    int rows = std::max(nR, b + nL);
    std::vector<std::optional<Letter>> right_at(rows + 2);
    int prev = INT_MAX;
    for (int j = 1; j <= nR; ++j) {
        Letter y = t.right[nR - j];
        int orig = nR - j + 1;
        int fit = static_cast<int>(
            std::count_if(t.left.begin(), t.left.end(), [y](Letter x) { return row_ok(x, y); }));
        int target = b + fit;
        if (j > 1) target = std::min(prev - 1, target);
        target = std::max(target, orig);
        right_at[target] = y;
        prev = target;
    }
    Word lt, rt;
    std::vector<bool> moved(nL, false);
    for (int s = 0; s < nL; ++s) {
        int row = b + 1 + s;
        if (!right_at[row]) {
            right_at[row] = t.left[s];
            moved[s] = true;
        }
    }
    for (int row = 1; row <= rows; ++row)
        if (right_at[row]) rt.push_back(*right_at[row]);
    for (int s = 0; s < nL; ++s)
        if (!moved[s]) lt.push_back(t.left[s]);
    return {lt, rt};
}

std::pair<Word, Word> split_star(const SpinorColumn& t) {
    if (t.kind != ColumnKind::standard || residue(t) != 1)
        throw std::invalid_argument("split_star requires a two-column factor of residue 1");
    int nL = t.height(), nR = static_cast<int>(t.right.size()), b = t.b();
    int rows = std::max(nR, b + nL) + 1;
    std::vector<std::optional<Letter>> left_at(rows + 2);
    int prev = 0;
    for (int i = 0; i < nL; ++i) {
        Letter x = t.left[i];
        int orig = b + 1 + i;
        int below = static_cast<int>(
            std::count_if(t.right.begin(), t.right.end(), [x](Letter y) { return !row_ok(x, y); }));
        int target = 1 + below;
        if (i > 0) target = std::max(prev + 1, target);
        target = std::min(target, orig);
        left_at[target] = x;
        prev = target;
    }
    int moved = -1;
    for (int r = nR; r >= 1; --r)
        if (!left_at[r]) {
            moved = r;
            break;
        }
    if (moved < 0) throw std::logic_error("split_star found no box to move");
    left_at[moved] = t.right[moved - 1];
    Word ls, rs;
    for (int r = 1; r <= rows; ++r)
        if (left_at[r]) ls.push_back(*left_at[r]);
    for (int r = 1; r <= nR; ++r)
        if (r != moved) rs.push_back(t.right[r - 1]);
    return {ls, rs};
}

// Data used by the admissibility test, cached per column during enumeration.
struct AdmissibilityData {
    int r = 0;
    int a_eff = 0;
    int eps = 0;
    Word TR, RT, Rstar;  // used when the column is the left member
    Word SL, LS, Lstar;  // used when the column is the right member
};

namespace {

AdmissibilityData make_data(const SpinorColumn& t) {
    AdmissibilityData d;
    d.r = residue(t);
    if (t.kind == ColumnKind::sp) {
        d.a_eff = combinatorial(t.g) == GType::d ? d.r : 0;
        d.eps = combinatorial(t.g) == GType::d ? d.r : 0;
        d.SL = d.LS = d.Lstar = t.left;
        return d;
    }
    if (t.kind == ColumnKind::dbar) {
        d.TR = t.right;
        d.SL = t.left;
        return d;
    }
    d.a_eff = t.a;
    d.TR = t.right;
    d.SL = t.left;
    auto [lt, rt] = split_LR(t);
    d.LS = lt;
    d.RT = rt;
    if (d.r == 1) {
        auto [ls, rs] = split_star(t);
        d.Lstar = ls;
        d.Rstar = rs;
    }
    return d;
}

bool entries_ok(const Word& x, int shift, const Word& y) {
    for (int i = 1; i <= static_cast<int>(y.size()); ++i) {
        auto u = from_bottom(x, i + shift);
        if (!u) break;
        if (!row_ok(*u, y[y.size() - i])) return false;
    }
    return true;
}

bool case_one(const AdmissibilityData& T, int a, const AdmissibilityData& S) {
    int rr = T.r * S.r;
    if (static_cast<int>(T.TR.size()) > static_cast<int>(S.SL.size()) - S.a_eff + 2 * rr) return false;
    if (!entries_ok(rr ? T.Rstar : T.TR, 0, S.LS)) return false;
    int shift = a - S.a_eff + (rr ? S.eps : 0);
    return entries_ok(T.RT, shift, rr ? S.Lstar : S.SL);
}

bool admissible_with(const SpinorColumn& t, const AdmissibilityData& T, const SpinorColumn& s,
                     const AdmissibilityData& S) {
    if (combinatorial(t.g) != combinatorial(s.g))
        throw std::invalid_argument("admissibility between columns of different types");
    if (t.kind == ColumnKind::standard) {
        if (s.kind == ColumnKind::standard) {
            if (t.a < s.a) throw std::invalid_argument("admissibility needs a >= a'");
            return case_one(T, t.a, S);
        }
        if (s.kind == ColumnKind::sp) return case_one(T, t.a, S);
        // d: compare with the left column of s regarded as an odd sp column
        auto sl = SpinorColumn::sp(GType::d, s.left);
        return case_one(T, t.a, make_data(sl));
    }
    if (t.kind == ColumnKind::dbar &&
        (s.kind == ColumnKind::dbar || (s.kind == ColumnKind::sp && s.height() % 2 == 1)))
        return SpinorColumn::dbar(t.right, s.left).valid();
    throw std::invalid_argument("pair of columns outside the admissibility domains");
}

}  // namespace

bool is_admissible(const SpinorColumn& t, const SpinorColumn& s) {
    return admissible_with(t, make_data(t), s, make_data(s));
}

// ---- crystal structure on a single column ----

namespace {

void require_even(const SpinorColumn& t) {
    if (has_odd(t.left) || has_odd(t.right))
        throw std::invalid_argument("crystal operators need an all-even alphabet");
}

std::optional<Word> sp_e0(GType g, const Word& w) {
    if (combinatorial(g) == GType::d) {
        if (w.size() >= 2 && w[0] == kOne && w[1] == kTwo) return Word(w.begin() + 2, w.end());
        return std::nullopt;
    }
    if (!w.empty() && w[0] == kOne) return Word(w.begin() + 1, w.end());
    return std::nullopt;
}

std::optional<Word> sp_f0(GType g, const Word& w) {
    Word r;
    if (combinatorial(g) == GType::d) {
        if (!w.empty() && w[0] <= kTwo) return std::nullopt;
        r = {kOne, kTwo};
    } else {
        if (!w.empty() && w[0] <= kOne) return std::nullopt;
        r = {kOne};
    }
    r.insert(r.end(), w.begin(), w.end());
    return r;
}

int sp_eps0(GType g, const Word& w) { return sp_e0(g, w) ? 1 : 0; }
int sp_phi0(GType g, const Word& w) { return sp_f0(g, w) ? 1 : 0; }

SpinorColumn checked(SpinorColumn t) {
    if (!t.valid()) throw std::logic_error("crystal operator left the column set");
    return t;
}

std::optional<SpinorColumn> column_op(const SpinorColumn& t, int i, bool raise) {
    require_even(t);
    if (i >= 1) {
        Word w = t.word();
        auto nw = raise ? word_e(w, i) : word_f(w, i);
        if (!nw) return std::nullopt;
        SpinorColumn r = t;
        r.right.assign(nw->begin(), nw->begin() + t.right.size());
        r.left.assign(nw->begin() + t.right.size(), nw->end());
        return checked(r);
    }
    GType g = combinatorial(t.g);
    if (t.kind == ColumnKind::sp) {
        auto nw = raise ? sp_e0(g, t.left) : sp_f0(g, t.left);
        if (!nw) return std::nullopt;
        SpinorColumn r = t;
        r.left = *nw;
        return r;
    }
    if (g == GType::c) {
        SpinorColumn r = t;
        if (raise) {
            if (t.left.empty() || t.right.empty() || t.left[0] != kOne || t.right[0] != kOne)
                return std::nullopt;
            r.left.erase(r.left.begin());
            r.right.erase(r.right.begin());
        } else {
            if ((!t.left.empty() && t.left[0] <= kOne) || (!t.right.empty() && t.right[0] <= kOne))
                return std::nullopt;
            r.left.insert(r.left.begin(), kOne);
            r.right.insert(r.right.begin(), kOne);
        }
        return checked(r);
    }
    // b, d: tensor rule on right (x) left, each treated as an sp column
    int phiR = sp_phi0(g, t.right), epsL = sp_eps0(g, t.left);
    SpinorColumn r = t;
    if (raise) {
        int epsR = sp_eps0(g, t.right);
        if (epsL > phiR) {
            r.left = *sp_e0(g, t.left);
        } else if (epsR > 0) {
            r.right = *sp_e0(g, t.right);
        } else {
            return std::nullopt;
        }
    } else {
        int phiL = sp_phi0(g, t.left);
        if (phiR > epsL) {
            r.right = *sp_f0(g, t.right);
        } else if (phiL > 0) {
            r.left = *sp_f0(g, t.left);
        } else {
            return std::nullopt;
        }
    }
    return checked(r);
}

}  // namespace

std::optional<SpinorColumn> column_e(const SpinorColumn& t, int i) { return column_op(t, i, true); }
std::optional<SpinorColumn> column_f(const SpinorColumn& t, int i) { return column_op(t, i, false); }

int column_eps(const SpinorColumn& t, int i) {
    if (i >= 1) return word_eps(t.word(), i);
    int k = 0;
    for (auto cur = column_e(t, 0); cur; cur = column_e(*cur, 0)) ++k;
    return k;
}

int column_phi(const SpinorColumn& t, int i) {
    if (i >= 1) return word_phi(t.word(), i);
    int k = 0;
    for (auto cur = column_f(t, 0); cur; cur = column_f(*cur, 0)) ++k;
    return k;
}

int column_lambda0(const SpinorColumn& t) {
    if (t.kind == ColumnKind::sp) return 1;
    return 2 / epsilon_of(t.g);
}

// ---- weights ----

bool Weight::operator==(const Weight& o) const {
    if (lambda0 != o.lambda0) return false;
    std::size_t n = std::max(m.size(), o.m.size());
    for (std::size_t i = 1; i < n; ++i)
        if (eps(static_cast<int>(i)) != o.eps(static_cast<int>(i))) return false;
    return true;
}

Weight weight_of_columns(const std::vector<SpinorColumn>& cols) {
    Weight w;
    w.m.assign(1, 0);
    for (auto& c : cols) {
        w.lambda0 += column_lambda0(c);
        for (const Word* x : {&c.left, &c.right})
            for (Letter a : *x) {
                int i = letter_index(a);
                if (static_cast<int>(w.m.size()) <= i) w.m.resize(i + 1, 0);
                ++w.m[i];
            }
    }
    return w;
}

Weight highest_weight(GType g, int n, const Partition& lambda) {
    Weight w;
    int e = epsilon_of(g);
    if (n % e != 0) throw std::invalid_argument("n/epsilon must be integral");
    w.lambda0 = n / e;
    auto conj = lambda.conjugate();
    w.m.assign(conj.length() + 1, 0);
    for (int i = 1; i <= conj.length(); ++i) w.m[i] = conj.part(i);
    return w;
}

int pair_with_coroot(const Weight& w, int i, GType g) {
    if (i >= 1) return w.eps(i) - w.eps(i + 1);
    switch (combinatorial(g)) {
        case GType::b: return w.lambda0 - 2 * w.eps(1);
        case GType::c: return w.lambda0 - w.eps(1);
        default: return w.lambda0 - w.eps(1) - w.eps(2);
    }
}

// ---- profiles and tableaux ----

void validate_parameters(GType g, const GroupSpec& G, const Partition& lambda) {
    if (!type_matches(g, G))
        throw std::invalid_argument("type " + to_string(g) + " does not pair with " + G.str());
    if (!is_in_P_Gn(lambda, G))
        throw std::invalid_argument(lambda.str() + " is not a parameter for " + G.str());
}

std::vector<FactorKind> profile(GType g, const GroupSpec& G, const Partition& lambda) {
    validate_parameters(g, G, lambda);
    std::vector<FactorKind> out;
    int n = G.n;
    switch (G.family) {
        case Family::Sp:
        case Family::Pin:
            for (int i = 1; i <= n / 2; ++i) out.push_back({ColumnKind::standard, lambda.part(i), -1});
            break;
        case Family::Spin:
            for (int i = 1; i <= (n - 1) / 2; ++i)
                out.push_back({ColumnKind::standard, lambda.part(i), -1});
            out.push_back({ColumnKind::sp, 0, -1});
            break;
        case Family::O: {
            int l = lambda.length();
            if (n - 2 * l >= 0) {
                for (int i = 1; i <= l; ++i) out.push_back({ColumnKind::standard, lambda.part(i), -1});
                int q = (n - 2 * l) / 2, r = (n - 2 * l) % 2;
                for (int i = 0; i < q; ++i) out.push_back({ColumnKind::standard, 0, -1});
                if (r) out.push_back({ColumnKind::sp, 0, 0});
            } else {
                auto conj = lambda.conjugate().parts();
                conj[0] = n - l;
                Partition bar = Partition(conj).conjugate();
                for (int i = 1; i <= n - l; ++i) out.push_back({ColumnKind::standard, bar.part(i), -1});
                int q = (2 * l - n) / 2, r = (2 * l - n) % 2;
                for (int i = 0; i < q; ++i) out.push_back({ColumnKind::dbar, 0, -1});
                if (r) out.push_back({ColumnKind::sp, 0, 1});
            }
            break;
        }
    }
    return out;
}

Word SpinorTableau::word() const {
    Word w;
    for (auto it = columns.rbegin(); it != columns.rend(); ++it) {
        Word x = it->word();
        w.insert(w.end(), x.begin(), x.end());
    }
    return w;
}

bool SpinorTableau::admissible() const {
    auto prof = profile(g, group, lambda);
    if (prof.size() != columns.size()) return false;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        const auto& c = columns[i];
        if (c.kind != prof[i].kind || !c.valid()) return false;
        if (c.kind == ColumnKind::standard && c.a != prof[i].a) return false;
        if (c.kind == ColumnKind::sp && prof[i].parity >= 0 && c.height() % 2 != prof[i].parity)
            return false;
    }
    for (std::size_t i = 0; i + 1 < columns.size(); ++i)
        if (!is_admissible(columns[i], columns[i + 1])) return false;
    return true;
}

SpinorTableau highest_weight_element(GType g, const GroupSpec& G, const Partition& lambda) {
    SpinorTableau t{g, G, lambda, {}};
    for (auto& f : profile(g, G, lambda)) {
        switch (f.kind) {
            case ColumnKind::standard: {
                Word l;
                for (int i = 1; i <= f.a; ++i) l.push_back(even_letter(i));
                t.columns.push_back(SpinorColumn::standard(g, f.a, l, {}));
                break;
            }
            case ColumnKind::sp:
                t.columns.push_back(SpinorColumn::sp(g, f.parity == 1 ? Word{kOne} : Word{}));
                break;
            case ColumnKind::dbar: t.columns.push_back(SpinorColumn::dbar({kOne}, {kOne})); break;
        }
    }
    return t;
}

namespace {

// Locates the factor acted on by e (raise) or f under the tensor rule over
// T_r (x) ... (x) T_1. Returns -1 when the operator vanishes.
int acting_factor(const SpinorTableau& t, int i, bool raise, int* eps_out, int* phi_out) {
    std::vector<int> plus;   // factor ids of unmatched +, left to right
    std::vector<int> minus;  // factor ids of unmatched -
    for (int f = static_cast<int>(t.columns.size()) - 1; f >= 0; --f) {
        int e = column_eps(t.columns[f], i);
        int p = column_phi(t.columns[f], i);
        for (int k = 0; k < e; ++k) {
            if (!plus.empty())
                plus.pop_back();
            else
                minus.push_back(f);
        }
        for (int k = 0; k < p; ++k) plus.push_back(f);
    }
    if (eps_out) *eps_out = static_cast<int>(minus.size());
    if (phi_out) *phi_out = static_cast<int>(plus.size());
    if (raise) return minus.empty() ? -1 : minus.back();
    return plus.empty() ? -1 : plus.front();
}

std::optional<SpinorTableau> tableau_op(const SpinorTableau& t, int i, bool raise) {
    int f = acting_factor(t, i, raise, nullptr, nullptr);
    if (f < 0) return std::nullopt;
    auto c = raise ? column_e(t.columns[f], i) : column_f(t.columns[f], i);
    if (!c) throw std::logic_error("tensor rule selected a factor with a vanishing operator");
    SpinorTableau r = t;
    r.columns[f] = *c;
    return r;
}

}  // namespace

std::optional<SpinorTableau> spinor_e(const SpinorTableau& t, int i) { return tableau_op(t, i, true); }
std::optional<SpinorTableau> spinor_f(const SpinorTableau& t, int i) { return tableau_op(t, i, false); }

int spinor_eps(const SpinorTableau& t, int i) {
    int e = 0;
    acting_factor(t, i, true, &e, nullptr);
    return e;
}

int spinor_phi(const SpinorTableau& t, int i) {
    int p = 0;
    acting_factor(t, i, false, nullptr, &p);
    return p;
}

// ---- enumeration ----

namespace {

struct Candidate {
    SpinorColumn col;
    AdmissibilityData data;
    Word word;
    std::vector<int> content;  // by letter index
    int boxes = 0;
};

void chains(const std::vector<Letter>& sym, int hmax, Word& cur, std::vector<Word>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == hmax) return;
    for (Letter x : sym) {
        if (!cur.empty() && !col_ok(cur.back(), x)) continue;
        cur.push_back(x);
        chains(sym, hmax, cur, out);
        cur.pop_back();
    }
}

using CacheKey = std::tuple<int, int, int, int, std::vector<Letter>, int>;

const std::vector<Candidate>& candidates(GType g, const FactorKind& f, const GradedAlphabet& alpha,
                                         int hmax) {
    static std::mutex mu;
    static std::map<CacheKey, std::vector<Candidate>> cache;
    CacheKey key{static_cast<int>(combinatorial(g)), static_cast<int>(f.kind), f.a, f.parity,
                 alpha.symbols(), hmax};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<Word> ch;
    Word cur;
    chains(alpha.symbols(), hmax, cur, ch);
    std::vector<SpinorColumn> cols;
    GType cg = combinatorial(g);
    switch (f.kind) {
        case ColumnKind::sp:
            for (auto& w : ch)
                if (f.parity < 0 || static_cast<int>(w.size()) % 2 == f.parity)
                    cols.push_back(SpinorColumn::sp(cg, w));
            break;
        case ColumnKind::standard:
            for (auto& l : ch) {
                if (static_cast<int>(l.size()) < f.a) continue;
                for (auto& r : ch) {
                    if (static_cast<int>(l.size() + r.size()) > hmax * 2) continue;
                    auto c = SpinorColumn::standard(cg, f.a, l, r);
                    if (c.valid()) cols.push_back(std::move(c));
                }
            }
            break;
        case ColumnKind::dbar:
            for (auto& l : ch) {
                if (l.size() % 2 == 0) continue;
                for (auto& r : ch) {
                    auto c = SpinorColumn::dbar(l, r);
                    if (c.valid()) cols.push_back(std::move(c));
                }
            }
            break;
    }
    std::sort(cols.begin(), cols.end(), [](const SpinorColumn& x, const SpinorColumn& y) {
        return std::make_tuple(x.b(), x.c(), x.left, x.right) <
               std::make_tuple(y.b(), y.c(), y.left, y.right);
    });
    std::vector<Candidate> out;
    out.reserve(cols.size());
    for (auto& c : cols) {
        Candidate cand;
        cand.data = make_data(c);
        cand.word = c.word();
        for (Letter a : cand.word) {
            int i = letter_index(a);
            if (static_cast<int>(cand.content.size()) <= i) cand.content.resize(i + 1, 0);
            ++cand.content[i];
        }
        cand.boxes = c.boxes();
        cand.col = std::move(c);
        out.push_back(std::move(cand));
    }
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

long long enumerate_spinor(GType g, const GroupSpec& G, const Partition& lambda,
                           const EnumerateOptions& opt,
                           const std::function<bool(const SpinorTableau&)>& visit) {
    auto prof = profile(g, G, lambda);
    const auto& alpha = opt.alphabet;
    int hmax;
    if (alpha.all_even()) {
        hmax = alpha.size();
        if (opt.box_limit >= 0) hmax = std::min(hmax, opt.box_limit);
    } else {
        if (opt.box_limit < 0)
            throw std::invalid_argument("alphabets with odd symbols need a box limit");
        hmax = opt.box_limit;
    }
    if (opt.content) {
        int total = 0;
        for (std::size_t i = 1; i < opt.content->size(); ++i) total += (*opt.content)[i];
        hmax = std::min(hmax, total);
    }

    int r = static_cast<int>(prof.size());
    std::vector<std::vector<const Candidate*>> lists(r);
    for (int f = 0; f < r; ++f) {
        for (auto& c : candidates(g, prof[f], alpha, hmax)) {
            if (opt.box_limit >= 0 && c.boxes > opt.box_limit) continue;
            if (opt.content) {
                bool ok = true;
                for (std::size_t i = 1; i < c.content.size() && ok; ++i)
                    ok = c.content[i] <= (i < opt.content->size() ? (*opt.content)[i] : 0);
                if (!ok) continue;
            }
            lists[f].push_back(&c);
        }
    }

    std::vector<const Candidate*> chosen(r, nullptr);
    std::vector<int> used;
    std::vector<int> lattice;
    if (opt.lattice_init) lattice = *opt.lattice_init;
    int boxes = 0;
    long long count = 0;
    bool stop = false;

    auto content_fits = [&](const Candidate& c) {
        if (!opt.content) return true;
        for (std::size_t i = 1; i < c.content.size(); ++i) {
            int have = i < used.size() ? used[i] : 0;
            int cap = i < opt.content->size() ? (*opt.content)[i] : 0;
            if (have + c.content[i] > cap) return false;
        }
        return true;
    };

    std::function<void(int)> rec = [&](int f) {
        if (stop) return;
        if (f < 0) {
            if (opt.content) {
                for (std::size_t i = 1; i < std::max(used.size(), opt.content->size()); ++i) {
                    int have = i < used.size() ? used[i] : 0;
                    int want = i < opt.content->size() ? (*opt.content)[i] : 0;
                    if (have != want) return;
                }
            }
            SpinorTableau t{g, G, lambda, {}};
            t.columns.reserve(r);
            for (int j = 0; j < r; ++j) t.columns.push_back(chosen[j]->col);
            ++count;
            if (!visit(t) || (opt.limit >= 0 && count >= opt.limit)) stop = true;
            return;
        }
        for (const Candidate* c : lists[f]) {
            if (stop) return;
            if (opt.box_limit >= 0 && boxes + c->boxes > opt.box_limit) continue;
            if (!content_fits(*c)) continue;
            if (f + 1 < r && !admissible_with(c->col, c->data, chosen[f + 1]->col, chosen[f + 1]->data))
                continue;
            std::vector<int> saved_lattice;
            if (opt.lattice_init) {
                saved_lattice = lattice;
                bool ok = true;
                for (Letter a : c->word) {
                    int i = letter_index(a);
                    if (static_cast<int>(lattice.size()) < i) lattice.resize(i, 0);
                    ++lattice[i - 1];
                    if (i >= 2 && lattice[i - 1] > lattice[i - 2]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    lattice = saved_lattice;
                    continue;
                }
            }
            if (used.size() < c->content.size()) used.resize(c->content.size(), 0);
            for (std::size_t i = 0; i < c->content.size(); ++i) used[i] += c->content[i];
            boxes += c->boxes;
            chosen[f] = c;
            rec(f - 1);
            boxes -= c->boxes;
            for (std::size_t i = 0; i < c->content.size(); ++i) used[i] -= c->content[i];
            if (opt.lattice_init) lattice = saved_lattice;
        }
    };
    if (r == 0) {
        SpinorTableau t{g, G, lambda, {}};
        visit(t);
        return 1;
    }
    rec(r - 1);
    return count;
}

std::vector<SpinorTableau> enumerate_spinor_k(GType g, const GroupSpec& G, const Partition& lambda,
                                              int k) {
    std::vector<SpinorTableau> out;
    EnumerateOptions opt;
    opt.alphabet = GradedAlphabet::even(k);
    enumerate_spinor(g, G, lambda, opt, [&](const SpinorTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

}  // namespace spinor
