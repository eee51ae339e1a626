#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace spinor {

// A partition stored without trailing zeros.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    // 1-based access, zero past the end.
    int part(int i) const;

    Partition conjugate() const;
    bool contains(const Partition& mu) const;
    std::vector<int> padded(int len) const;
    std::string str() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Parses "3,1", "0" or "" (the empty partition).
Partition parse_partition(const std::string& text);

// All partitions of n with optional bounds on the largest part and the length.
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_len = -1);
std::vector<Partition> partitions_up_to(int n, int max_part = -1, int max_len = -1);

enum class GType { b, c, d, b_bullet };
enum class Family { Sp, O, Spin, Pin };

// b_bullet shares the combinatorics of b.
inline GType combinatorial(GType g) { return g == GType::b_bullet ? GType::b : g; }
int epsilon_of(GType g);
std::string to_string(GType g);
std::string to_string(Family f);
GType parse_gtype(const std::string& s);
Family parse_family(const std::string& s);

struct GroupSpec {
    Family family;
    int n;
    GroupSpec(Family f, int n_);
    std::string str() const;
    bool operator==(const GroupSpec&) const = default;
};

// The classical type paired with a group: Sp <-> c, O <-> d, Pin/Spin <-> b.
GType paired_type(Family f);
// The group paired with g at rank n (Pin or Spin for b according to parity).
GroupSpec paired_group(GType g, int n);
bool type_matches(GType g, const GroupSpec& G);

bool is_in_script_P_g(const Partition& lambda, GType g);
bool is_in_P_Gn(const Partition& lambda, const GroupSpec& G);

// Every partition in P(G_n) of size at most max_size.
std::vector<Partition> parameter_set(const GroupSpec& G, int max_size);

}  // namespace spinor
