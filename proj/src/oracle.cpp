#include "spinor/oracle.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "spinor/tableau.hpp"

namespace spinor {

long long lr_coef_latticeword(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!lambda.contains(mu) || lambda.size() != mu.size() + nu.size()) return 0;
    int l = nu.length();
    std::vector<int> budget(l);
    for (int i = 1; i <= l; ++i) budget[i - 1] = nu.part(i);
    long long count = 0;
    for_each_sst(
        Shape::skew(lambda, mu), GradedAlphabet::even(l),
        [&](const Tableau& t) {
            if (is_lattice_from(t.column_word(), {})) ++count;
        },
        &budget);
    return count;
}

std::string to_string(RootType t) {
    switch (t) {
        case RootType::A: return "A";
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
    }
    return "?";
}

long long LaurentCharacter::at(const std::vector<int>& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? 0 : it->second;
}

long long LaurentCharacter::total() const {
    long long s = 0;
    for (auto& [e, c] : terms) s += c;
    return s;
}

void LaurentCharacter::add(const std::vector<int>& e, long long c) {
    if (c == 0) return;
    auto& v = terms[e];
    v += c;
    if (v == 0) terms.erase(e);
}

namespace {

struct Roots {
    std::vector<std::vector<int>> positive;
    std::vector<std::vector<int>> simple;
    std::vector<int> two_rho;
};

std::vector<int> unit(int l, int i, int s = 1) {
    std::vector<int> v(l, 0);
    v[i] = s;
    return v;
}

Roots roots_of(RootType t, int l) {
    Roots r;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            auto v = unit(l, i);
            v[j] = -1;
            r.positive.push_back(v);
            if (t != RootType::A) {
                v[j] = 1;
                r.positive.push_back(v);
            }
        }
    if (t == RootType::B)
        for (int i = 0; i < l; ++i) r.positive.push_back(unit(l, i));
    if (t == RootType::C)
        for (int i = 0; i < l; ++i) r.positive.push_back(unit(l, i, 2));
    for (int i = 0; i + 1 < l; ++i) {
        auto v = unit(l, i);
        v[i + 1] = -1;
        r.simple.push_back(v);
    }
    if (t == RootType::B && l >= 1) r.simple.push_back(unit(l, l - 1));
    if (t == RootType::C && l >= 1) r.simple.push_back(unit(l, l - 1, 2));
    if (t == RootType::D && l >= 2) {
        auto v = unit(l, l - 2);
        v[l - 1] = 1;
        r.simple.push_back(v);
    }
    r.two_rho.assign(l, 0);
    for (auto& a : r.positive)
        for (int i = 0; i < l; ++i) r.two_rho[i] += a[i];
    return r;
}

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

}  // namespace

bool is_dominant(RootType t, const std::vector<int>& w) {
    int l = static_cast<int>(w.size());
    for (int i = 0; i + 1 < l; ++i)
        if (w[i] < w[i + 1]) return false;
    if (l == 0) return true;
    switch (t) {
        case RootType::A: return true;
        case RootType::B:
        case RootType::C: return w[l - 1] >= 0;
        case RootType::D: return l < 2 || w[l - 2] >= std::abs(w[l - 1]);
    }
    return false;
}

LaurentCharacter weyl_character(RootType t, const std::vector<int>& hw) {
    if (!is_dominant(t, hw)) throw std::invalid_argument("weyl_character: weight is not dominant");
    int l = static_cast<int>(hw.size());
    LaurentCharacter ch;
    ch.rank = l;
    if (l == 0) {
        ch.add({}, 1);
        return ch;
    }
    Roots R = roots_of(t, l);
    int lo, hi;
    if (t == RootType::A) {
        lo = *std::min_element(hw.begin(), hw.end());
        hi = *std::max_element(hw.begin(), hw.end());
    } else {
        hi = 0;
        for (int x : hw) hi = std::max(hi, std::abs(x));
        lo = -hi;
    }
    // weights below hw in the box, ordered by depth
    std::map<std::vector<int>, int> depth;
    std::vector<std::vector<int>> order;
    std::deque<std::vector<int>> q{hw};
    depth[hw] = 0;
    while (!q.empty()) {
        auto w = q.front();
        q.pop_front();
        order.push_back(w);
        for (auto& a : R.simple) {
            auto v = w;
            bool ok = true;
            for (int i = 0; i < l && ok; ++i) {
                v[i] -= a[i];
                ok = v[i] >= lo && v[i] <= hi;
            }
            if (!ok || depth.count(v)) continue;
            depth[v] = depth[w] + 1;
            q.push_back(v);
        }
    }
    long long hw2 = dot(hw, hw);
    std::map<std::vector<int>, long long> mult;
    mult[hw] = 1;
    for (std::size_t idx = 1; idx < order.size(); ++idx) {
        const auto& mu = order[idx];
        std::vector<int> diff(l);
        for (int i = 0; i < l; ++i) diff[i] = hw[i] - mu[i];
        long long den = hw2 - dot(mu, mu) + dot(diff, R.two_rho);
        long long num = 0;
        for (auto& a : R.positive) {
            auto v = mu;
            for (int j = 1;; ++j) {
                for (int i = 0; i < l; ++i) v[i] += a[i];
                auto it = mult.find(v);
                if (it == mult.end()) {
                    if (!depth.count(v)) break;
                    continue;
                }
                num += it->second * dot(v, a);
            }
        }
        num *= 2;
        if (den <= 0) {
            if (num != 0) throw std::logic_error("Freudenthal: inconsistent recursion");
            continue;
        }
        if (num % den != 0) throw std::logic_error("Freudenthal: non-integral multiplicity");
        if (num / den > 0) mult[mu] = num / den;
    }
    for (auto& [w, m] : mult) ch.add(w, m);
    return ch;
}

const LaurentCharacter& weyl_character_cached(RootType t, const std::vector<int>& hw) {
    static std::mutex mu;
    static std::map<std::pair<int, std::vector<int>>, LaurentCharacter> cache;
    std::pair<int, std::vector<int>> key{static_cast<int>(t), hw};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto ch = weyl_character(t, hw);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(ch)).first->second;
}

long long weyl_dimension_twice(RootType t, const std::vector<int>& twice) {
    int l = static_cast<int>(twice.size());
    if (!is_dominant(t, twice)) throw std::invalid_argument("weyl_dimension: weight is not dominant");
    Roots R = roots_of(t, l);
    std::vector<int> top(l);
    for (int i = 0; i < l; ++i) top[i] = twice[i] + R.two_rho[i];
    // exact rational product, reduced as we go
    __int128 num = 1, den = 1;
    for (auto& a : R.positive) {
        num *= dot(top, a);
        den *= dot(R.two_rho, a);
        __int128 g = std::gcd(static_cast<long long>(num < 0 ? -num : num), static_cast<long long>(den));
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    if (den != 1) throw std::logic_error("weyl_dimension: non-integral result");
    return static_cast<long long>(num);
}

long long weyl_dimension(RootType t, const std::vector<int>& hw) {
    std::vector<int> twice(hw.size());
    for (std::size_t i = 0; i < hw.size(); ++i) twice[i] = 2 * hw[i];
    return weyl_dimension_twice(t, twice);
}

long long spinor_weyl_dimension(GType g, int n, const Partition& lambda, int k) {
    RootType t;
    switch (combinatorial(g)) {
        case GType::b: t = RootType::B; break;
        case GType::c: t = RootType::C; break;
        default:
            if (k < 2) throw std::invalid_argument("type d needs k >= 2");
            t = RootType::D;
    }
    auto conj = lambda.conjugate();
    std::vector<int> twice(k);
    for (int i = 1; i <= k; ++i) twice[i - 1] = n - 2 * conj.part(k + 1 - i);
    return weyl_dimension_twice(t, twice);
}

LaurentCharacter restrict_gl_to_classical(const LaurentCharacter& ch, int n) {
    if (ch.rank != n) throw std::invalid_argument("restriction: rank mismatch");
    int l = n / 2;
    LaurentCharacter out;
    out.rank = l;
    for (auto& [e, c] : ch.terms) {
        std::vector<int> v(l);
        for (int i = 0; i < l; ++i) v[i] = e[i] - e[l + i];
        out.add(v, c);
    }
    return out;
}

namespace {

// character of a product group at a concatenated weight
LaurentCharacter product_character(const std::vector<SimpleFactor>& family, const std::vector<int>& w) {
    LaurentCharacter out;
    out.rank = 0;
    out.add({}, 1);
    int pos = 0;
    for (auto& f : family) {
        std::vector<int> part(w.begin() + pos, w.begin() + pos + f.rank);
        const auto& ch = weyl_character_cached(f.type, part);
        LaurentCharacter next;
        next.rank = out.rank + f.rank;
        for (auto& [e1, c1] : out.terms)
            for (auto& [e2, c2] : ch.terms) {
                auto e = e1;
                e.insert(e.end(), e2.begin(), e2.end());
                next.add(e, c1 * c2);
            }
        out = std::move(next);
        pos += f.rank;
    }
    return out;
}

bool family_dominant(const std::vector<SimpleFactor>& family, const std::vector<int>& w) {
    int pos = 0;
    for (auto& f : family) {
        if (!is_dominant(f.type, std::vector<int>(w.begin() + pos, w.begin() + pos + f.rank)))
            return false;
        pos += f.rank;
    }
    return true;
}

}  // namespace

std::map<std::vector<int>, long long> restrict_and_decompose(const LaurentCharacter& ch,
                                                             const std::vector<SimpleFactor>& family) {
    int total = 0;
    for (auto& f : family) total += f.rank;
    if (total != ch.rank) throw std::invalid_argument("decompose: rank mismatch");
    std::map<std::vector<int>, long long> out;
    LaurentCharacter rest = ch;
    while (!rest.terms.empty()) {
        auto it = std::prev(rest.terms.end());  // lex-max exponent
        auto w = it->first;
        long long c = it->second;
        if (c < 0 || !family_dominant(family, w))
            throw std::runtime_error("decompose: remainder is not a character");
        out[w] += c;
        for (auto& [e, m] : product_character(family, w).terms) rest.add(e, -c * m);
    }
    return out;
}

namespace {

std::vector<int> coords(const Partition& p, int l) {
    if (p.length() > l) throw std::invalid_argument("partition too long for the rank");
    return p.padded(l);
}

}  // namespace

long long oracle_gl_to_sp(const Partition& lambda, const Partition& mu, int n) {
    if (lambda.length() > n) return 0;
    auto ch = restrict_gl_to_classical(weyl_character_cached(RootType::A, coords(lambda, n)), n);
    auto dec = restrict_and_decompose(ch, {{RootType::C, n / 2}});
    if (mu.length() > n / 2) return 0;
    auto it = dec.find(coords(mu, n / 2));
    return it == dec.end() ? 0 : it->second;
}

long long oracle_sp_tensor(const Partition& lambda, const Partition& mu, const Partition& nu, int m,
                           int n) {
    int l = (m + n) / 2;
    if (lambda.length() > l || mu.length() > m / 2 || nu.length() > n / 2) return 0;
    const auto& ch = weyl_character_cached(RootType::C, coords(lambda, l));
    std::vector<SimpleFactor> fam;
    if (m / 2 > 0) fam.push_back({RootType::C, m / 2});
    if (n / 2 > 0) fam.push_back({RootType::C, n / 2});
    auto dec = restrict_and_decompose(ch, fam);
    auto key = coords(mu, m / 2);
    auto rest = coords(nu, n / 2);
    key.insert(key.end(), rest.begin(), rest.end());
    auto it = dec.find(key);
    return it == dec.end() ? 0 : it->second;
}

std::map<std::vector<int>, long long> oracle_gl_to_so(const Partition& lambda, int n) {
    if (lambda.length() > n) return {};
    auto ch = restrict_gl_to_classical(weyl_character_cached(RootType::A, coords(lambda, n)), n);
    return restrict_and_decompose(ch, {{n % 2 == 0 ? RootType::D : RootType::B, n / 2}});
}

std::vector<std::vector<int>> o_to_so_weights(const Partition& mu, int n) {
    int l = n / 2;
    Partition base = mu;
    if (mu.length() > l) {
        auto conj = mu.conjugate().parts();
        conj[0] = n - mu.length();
        base = Partition(conj).conjugate();
    }
    auto w = coords(base, l);
    if (n % 2 == 0 && l > 0 && w[l - 1] > 0) {
        auto v = w;
        v[l - 1] = -v[l - 1];
        return {w, v};
    }
    return {w};
}

}  // namespace spinor
