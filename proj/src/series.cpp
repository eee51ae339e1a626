#include "spinor/series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinor {

CharacterSeries::CharacterSeries(int k, int degree) : k_(k), degree_(degree) {
    if (k < 0 || degree < 0) throw std::invalid_argument("series needs k, degree >= 0");
}

CharacterSeries CharacterSeries::one(int k, int degree) {
    CharacterSeries s(k, degree);
    s.add(0, std::vector<int>(k, 0), 1);
    return s;
}

void CharacterSeries::add(int z, const std::vector<int>& x, long long c) {
    if (static_cast<int>(x.size()) != k_) throw std::invalid_argument("series: wrong number of variables");
    if (c == 0 || std::accumulate(x.begin(), x.end(), 0) > degree_) return;
    Key key{z, x};
    auto& v = terms_[key];
    v += c;
    if (v == 0) terms_.erase(key);
}

long long CharacterSeries::coef(int z, const std::vector<int>& x) const {
    auto it = terms_.find({z, x});
    return it == terms_.end() ? 0 : it->second;
}

long long CharacterSeries::total() const {
    long long s = 0;
    for (auto& [key, c] : terms_) s += c;
    return s;
}

CharacterSeries CharacterSeries::without_z() const {
    CharacterSeries s(k_, degree_);
    for (auto& [key, c] : terms_) s.add(0, key.second, c);
    return s;
}

CharacterSeries CharacterSeries::shifted_z(int dz) const {
    CharacterSeries s(k_, degree_);
    for (auto& [key, c] : terms_) s.add(key.first + dz, key.second, c);
    return s;
}

CharacterSeries CharacterSeries::swapped(int i, int j) const {
    CharacterSeries s(k_, degree_);
    for (auto& [key, c] : terms_) {
        auto x = key.second;
        std::swap(x[i], x[j]);
        s.add(key.first, x, c);
    }
    return s;
}

CharacterSeries CharacterSeries::operator+(const CharacterSeries& o) const {
    if (k_ != o.k_) throw std::invalid_argument("series: variable count mismatch");
    CharacterSeries s(k_, std::min(degree_, o.degree_));
    for (auto& [key, c] : terms_) s.add(key.first, key.second, c);
    for (auto& [key, c] : o.terms_) s.add(key.first, key.second, c);
    return s;
}

CharacterSeries CharacterSeries::operator*(const CharacterSeries& o) const {
    if (k_ != o.k_) throw std::invalid_argument("series: variable count mismatch");
    CharacterSeries s(k_, std::min(degree_, o.degree_));
    for (auto& [a, ca] : terms_)
        for (auto& [b, cb] : o.terms_) {
            std::vector<int> x(k_);
            for (int i = 0; i < k_; ++i) x[i] = a.second[i] + b.second[i];
            s.add(a.first + b.first, x, ca * cb);
        }
    return s;
}

std::string CharacterSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (key.first) os << "*z^" << key.first;
        for (int i = 0; i < k_; ++i)
            if (key.second[i]) os << "*x" << i + 1 << "^" << key.second[i];
    }
    return first ? "0" : os.str();
}

namespace {

int variable_count(const GradedAlphabet& alpha) {
    int k = 0;
    for (Letter a : alpha.symbols()) k = std::max(k, letter_index(a));
    return k;
}

}  // namespace

CharacterSeries super_schur(const Partition& lambda, const GradedAlphabet& alpha, int degree) {
    int k = variable_count(alpha);
    CharacterSeries s(k, degree);
    if (lambda.size() > degree) return s;
    for_each_sst(Shape::straight(lambda), alpha, [&](const Tableau& t) {
        std::vector<int> x(k, 0);
        for (auto& row : t.rows())
            for (Letter a : row) ++x[letter_index(a) - 1];
        s.add(0, x, 1);
    });
    return s;
}

CharacterSeries schur(const Partition& lambda, int k, int degree) {
    return super_schur(lambda, GradedAlphabet::even(k), degree);
}

CharacterSeries char_spinor(GType g, const GroupSpec& group, const Partition& lambda,
                            const GradedAlphabet& alpha, int degree) {
    int k = variable_count(alpha);
    CharacterSeries s(k, degree);
    EnumerateOptions opt;
    opt.alphabet = alpha;
    opt.box_limit = degree;
    int z = highest_weight(g, group.n, lambda).lambda0;
    enumerate_spinor(g, group, lambda, opt, [&](const SpinorTableau& t) {
        std::vector<int> x(k, 0);
        for (auto& c : t.columns)
            for (const Word* w : {&c.left, &c.right})
                for (Letter a : *w) ++x[letter_index(a) - 1];
        s.add(z, x, 1);
        return true;
    });
    return s;
}

GType dual_type(GType g) {
    switch (g) {
        case GType::c: return GType::d;
        case GType::d: return GType::c;
        case GType::b_bullet: return GType::b;
        default: throw std::invalid_argument("unitarizable characters need g in {bb, c, d}");
    }
}

CharacterSeries char_unitarizable(GType g, int k, const Partition& lambda, int n, int degree) {
    GType gv = dual_type(g);
    if (lambda.length() > k) throw std::invalid_argument("lambda has more than k rows");
    if (combinatorial(gv) == GType::c && n % 2 != 0) throw std::invalid_argument("Sp_n needs n even");
    return char_spinor(gv, paired_group(gv, n), lambda, GradedAlphabet::odd(k), degree);
}

namespace {

CharacterSeries geometric(const std::vector<int>& mono, int degree) {
    int k = static_cast<int>(mono.size());
    CharacterSeries s(k, degree);
    int d = std::accumulate(mono.begin(), mono.end(), 0);
    std::vector<int> x(k, 0);
    for (int j = 0; j * d <= degree; ++j) {
        s.add(0, x, 1);
        for (int i = 0; i < k; ++i) x[i] += mono[i];
        if (d == 0) break;
    }
    return s;
}

}  // namespace

CharacterSeries delta_series(GType g, int k, int degree) {
    auto s = CharacterSeries::one(k, degree);
    if (g != GType::b_bullet && g != GType::c && g != GType::d)
        throw std::invalid_argument("delta is defined for bb, c and d");
    for (int i = 0; i < k; ++i) {
        std::vector<int> m(k, 0);
        if (g == GType::b_bullet) {
            m[i] = 1;
            s = s * geometric(m, degree);
        } else if (g == GType::c) {
            m[i] = 2;
            s = s * geometric(m, degree);
        }
        for (int j = i + 1; j < k; ++j) {
            std::vector<int> p(k, 0);
            p[i] = p[j] = 1;
            s = s * geometric(p, degree);
        }
    }
    return s;
}

IdentityReport verify_oscillator_identity(GType g, int k, const Partition& lambda, int n, int degree) {
    if (n < 2 * k) throw std::invalid_argument("the identity needs n >= 2k");
    auto lhs = char_unitarizable(g, k, lambda, n, degree);
    int z = highest_weight(dual_type(g), n, lambda).lambda0;
    auto rhs = (delta_series(g, k, degree) * schur(lambda, k, degree)).shifted_z(z);
    IdentityReport r;
    if (lhs == rhs) return r;
    r.ok = false;
    std::ostringstream os;
    for (auto& [key, c] : lhs.terms())
        if (rhs.coef(key.first, key.second) != c) {
            os << "coefficient mismatch at z^" << key.first << " x=(";
            for (int i = 0; i < k; ++i) os << (i ? "," : "") << key.second[i];
            os << "): " << c << " vs " << rhs.coef(key.first, key.second);
            r.message = os.str();
            return r;
        }
    for (auto& [key, c] : rhs.terms())
        if (lhs.coef(key.first, key.second) != c) {
            os << "coefficient mismatch at z^" << key.first << " x=(";
            for (int i = 0; i < k; ++i) os << (i ? "," : "") << key.second[i];
            os << "): " << lhs.coef(key.first, key.second) << " vs " << c;
            r.message = os.str();
            return r;
        }
    return r;
}

std::map<Partition, long long> schur_expand(const CharacterSeries& s) {
    std::map<Partition, long long> out;
    CharacterSeries rest = s.without_z();
    int k = s.k();
    while (!rest.terms().empty()) {
        auto it = std::prev(rest.terms().end());
        const std::vector<int> x = it->first.second;
        long long c = it->second;
        for (int i = 0; i + 1 < k; ++i)
            if (x[i] < x[i + 1]) throw std::runtime_error("schur_expand: series is not symmetric");
        Partition mu(x);
        out[mu] += c;
        auto sm = schur(mu, k, rest.degree());
        for (auto& [key, m] : sm.terms()) rest.add(0, key.second, -c * m);
    }
    return out;
}

}  // namespace spinor
