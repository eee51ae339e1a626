#include "spinor/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinor {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::vector<int> Partition::padded(int len) const {
    std::vector<int> v(std::max(len, length()), 0);
    std::copy(parts_.begin(), parts_.end(), v.begin());
    return v;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition parse_partition(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        std::size_t pos = 0;
        int x = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad partition token '" + tok + "'");
        v.push_back(x);
    }
    return Partition(std::move(v));
}

namespace {
void gen_partitions(int n, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_len) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_partitions(n, max_part < 0 ? n : max_part, max_len < 0 ? n + 1 : max_len, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n, int max_part, int max_len) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m) {
        auto ps = partitions_of(m, max_part, max_len);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

int epsilon_of(GType g) { return g == GType::c ? 2 : 1; }

std::string to_string(GType g) {
    switch (g) {
        case GType::b: return "b";
        case GType::c: return "c";
        case GType::d: return "d";
        case GType::b_bullet: return "bb";
    }
    return "?";
}

std::string to_string(Family f) {
    switch (f) {
        case Family::Sp: return "Sp";
        case Family::O: return "O";
        case Family::Spin: return "Spin";
        case Family::Pin: return "Pin";
    }
    return "?";
}

GType parse_gtype(const std::string& s) {
    if (s == "b") return GType::b;
    if (s == "c") return GType::c;
    if (s == "d") return GType::d;
    if (s == "bb" || s == "b_bullet") return GType::b_bullet;
    throw std::invalid_argument("unknown type '" + s + "'");
}

Family parse_family(const std::string& s) {
    if (s == "Sp") return Family::Sp;
    if (s == "O") return Family::O;
    if (s == "Spin") return Family::Spin;
    if (s == "Pin") return Family::Pin;
    throw std::invalid_argument("unknown group family '" + s + "'");
}

GroupSpec::GroupSpec(Family f, int n_) : family(f), n(n_) {
    if (n < 2) throw std::invalid_argument("group rank n must be at least 2");
    if ((f == Family::Sp || f == Family::Pin) && n % 2 != 0)
        throw std::invalid_argument(to_string(f) + "_n requires n even");
    if (f == Family::Spin && n % 2 == 0) throw std::invalid_argument("Spin_n requires n odd");
}

std::string GroupSpec::str() const { return to_string(family) + "_" + std::to_string(n); }

GType paired_type(Family f) {
    switch (f) {
        case Family::Sp: return GType::c;
        case Family::O: return GType::d;
        default: return GType::b;
    }
}

GroupSpec paired_group(GType g, int n) {
    switch (combinatorial(g)) {
        case GType::c: return GroupSpec(Family::Sp, n);
        case GType::d: return GroupSpec(Family::O, n);
        default: return GroupSpec(n % 2 == 0 ? Family::Pin : Family::Spin, n);
    }
}

bool type_matches(GType g, const GroupSpec& G) { return paired_type(G.family) == combinatorial(g); }

bool is_in_script_P_g(const Partition& lambda, GType g) {
    switch (combinatorial(g)) {
        case GType::c:
            return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                               [](int p) { return p % 2 == 0; });
        case GType::d: {
            auto c = lambda.conjugate();
            return std::all_of(c.parts().begin(), c.parts().end(), [](int p) { return p % 2 == 0; });
        }
        default: return true;
    }
}

bool is_in_P_Gn(const Partition& lambda, const GroupSpec& G) {
    switch (G.family) {
        case Family::Sp:
        case Family::Pin: return 2 * lambda.length() <= G.n;
        case Family::Spin: return 2 * lambda.length() <= G.n - 1;
        case Family::O: {
            auto c = lambda.conjugate();
            return lambda.length() <= G.n && c.part(1) + c.part(2) <= G.n;
        }
    }
    return false;
}

std::vector<Partition> parameter_set(const GroupSpec& G, int max_size) {
    std::vector<Partition> out;
    for (auto& p : partitions_up_to(max_size, -1, G.n))
        if (is_in_P_Gn(p, G)) out.push_back(p);
    return out;
}

}  // namespace spinor
