#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lctkit {

/// An integer partition stored canonically: positive parts, non-increasing.
/// The empty partition is the partition of 0.
class Partition {
public:
    Partition() = default;
    /// Sorts into non-increasing order and strips zero parts.
    /// Negative parts are rejected.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Comma separated parts with optional exponents: "4,4,2", "2^5", "3^2,1^4".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; } // n
    int length() const { return static_cast<int>(parts_.size()); } // number of parts
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    /// i-th part, 0 when i is past the end.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Canonical text "4,2,1"; "" for the empty partition.
    std::string str() const;
    /// Compact text with exponents, as drawn in orbit tables: "4^2,1^2".
    std::string compact_str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic order on the part sequence.
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

inline constexpr int kDefaultPartitionCap = 30;
inline constexpr int kDefaultHasseCap = 15;

Partition conjugate(const Partition& p);

/// Dominance order: every partial sum of p is at least that of q.
/// Throws InputError("incomparable sizes") when |p| != |q|.
bool dominates(const Partition& p, const Partition& q);

/// Nilpotent orbits in gl_n: orbit(a) lies in the closure of orbit(b).
bool closure_leq(const Partition& orbit_a, const Partition& orbit_b);

/// All partitions of n in reverse-lexicographic order, (n) first.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultPartitionCap);

/// Column-filling data for adding k boxes to the columns of the Young
/// diagram of nu, top to bottom and left to right.
struct FillStats {
    int k = 0;
    std::vector<int> phi;  // 1-based column index of the u-th box
    long long psi = 0;     // sum of (phi_u - 1)
    Partition eta_min;     // row lengths of the filled boxes
};

FillStats fill_stats(const Partition& nu, int k);

/// Covering relations of the dominance order on P(n); (a, b) means a covers b.
/// Edges are ordered by the enumeration index of a, then b.
std::vector<std::pair<Partition, Partition>> dominance_hasse(int n, int cap = kDefaultHasseCap);

long long binom2(long long m);

} // namespace lctkit
