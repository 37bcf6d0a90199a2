#pragma once

#include "lctkit/linalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lctkit {

class Partition;

enum class Family { A, B, C, D, E, F, G };

/// Label of an irreducible reduced crystallographic root system.
struct CartanType {
    Family family = Family::A;
    int rank = 1;

    /// Throws InputError when the rank is not allowed for the family.
    void validate() const;
    std::string str() const;
    /// "A5", "F4", "e8" (case-insensitive letter).
    static CartanType parse(std::string_view text);

    friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// "A5,D4,G2"; an empty string yields an empty list.
std::vector<CartanType> parse_cartan_list(std::string_view text);
std::string cartan_list_str(const std::vector<CartanType>& types);

/// A finite reduced crystallographic root system realized by integer vectors
/// in an ambient lattice with an integer symmetric pairing.
///
/// Roots are indexed: 0..P-1 are the positive roots ordered by height (the
/// simple roots come first, in order), and P+i is the negative of root i.
class RootSystem {
public:
    /// Generates all roots as the reflection closure of the simple roots.
    RootSystem(IntMatrix simple_roots, IntMatrix gram, std::vector<CartanType> factors, std::string label);

    const std::string& label() const { return label_; }
    const std::vector<CartanType>& factors() const { return factors_; }
    bool all_type_a() const;

    std::size_t ambient_dim() const { return gram_.size(); }
    const IntMatrix& gram() const { return gram_; }
    int rank() const { return static_cast<int>(simple_.size()); }

    int num_roots() const { return static_cast<int>(vectors_.size()); }
    int num_positive() const { return num_roots() / 2; }
    bool is_positive(int i) const { return i < num_positive(); }
    int negate(int i) const { return is_positive(i) ? i + num_positive() : i - num_positive(); }

    const IntVec& root(int i) const { return vectors_[static_cast<std::size_t>(i)]; }
    /// Coordinates with respect to the simple roots.
    const IntVec& coeffs(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    int height(int i) const;
    /// Root index of the s-th simple root (which is s by construction).
    int simple_index(int s) const { return s; }
    const IntMatrix& simple_roots() const { return simple_; }

    /// -1 when v is not a root.
    int index_of(const IntVec& v) const;

    std::int64_t pairing(const IntVec& a, const IntVec& b) const;
    std::int64_t pairing_roots(int i, int j) const { return pairing(root(i), root(j)); }
    /// <v, alpha_j^vee> = 2 (v, alpha_j) / (alpha_j, alpha_j); exact.
    std::int64_t coroot_pairing(const IntVec& v, int j) const;
    IntVec reflect(const IntVec& v, int j) const;
    /// Index of s_j(root i).
    int reflect_root(int i, int j) const;
    /// Index of root i + root j, or -1 when the sum is not a root.
    int sum_root(int i, int j) const;
    /// Integer matrix of the reflection in root j acting on ambient columns.
    IntMatrix reflection_matrix(int j) const;

private:
    int rank_of_simple() const;
    std::int64_t coroot_pairing_simple(const IntVec& v, std::size_t s) const;

    std::string label_;
    std::vector<CartanType> factors_;
    IntMatrix gram_;
    IntMatrix simple_;
    IntMatrix vectors_;
    IntMatrix coeffs_;
    std::map<IntVec, int> index_;
    std::vector<int> sum_;
    std::vector<int> refl_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Essential realization in simple-root coordinates (Bourbaki numbering).
RootSystemPtr build(const CartanType& type);
/// Orthogonal sum of irreducible systems.
RootSystemPtr build_product(const std::vector<CartanType>& types);
/// gl_n realization: roots e_i - e_j in n coordinates, standard pairing.
RootSystemPtr build_gl(int n);

int coxeter_number(const CartanType& type);

/// A symmetric, Z-closed subset of the roots of a parent system.
class Subsystem {
public:
    /// Validates symmetry and Z-closure; throws InputError otherwise.
    Subsystem(RootSystemPtr parent, std::vector<int> roots);
    /// Skips validation; roots must already be sorted and symmetric.
    static Subsystem trusted(RootSystemPtr parent, std::vector<int> roots);

    const RootSystemPtr& parent() const { return parent_; }
    const std::vector<int>& roots() const { return roots_; }
    std::vector<int> positive() const;
    int size() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return size() / 2; }
    bool empty() const { return roots_.empty(); }
    bool contains(int root) const;
    /// Rank of the rational span, i.e. the semisimple rank.
    int rank() const;

    /// Type label built from the irreducible components, e.g. "A1xA1", "B2", "T" for empty.
    std::string type_name() const;

    friend bool operator==(const Subsystem& a, const Subsystem& b) { return a.roots_ == b.roots_; }

private:
    Subsystem() = default;
    RootSystemPtr parent_;
    std::vector<int> roots_;
};

bool is_symmetric(const RootSystem& R, const std::vector<int>& sorted_roots);
bool is_z_closed(const RootSystem& R, const std::vector<int>& sorted_roots);

Subsystem full_subsystem(const RootSystemPtr& R);
Subsystem cartan_subsystem(const RootSystemPtr& R);

/// Irreducible components: connected components of the non-orthogonality graph.
std::vector<Subsystem> components(const Subsystem& S);

/// Roots in the span of the chosen simple roots (0-based indices).
Subsystem levi_subsystem(const RootSystemPtr& R, const std::vector<int>& simple_subset);

/// Block-diagonal Levi gl_{b1} + gl_{b2} + ... of a gl_n system, consecutive
/// coordinates in the order the blocks are listed.
Subsystem gl_block_levi(const RootSystemPtr& gl, const std::vector<int>& blocks);
Subsystem gl_block_levi(const RootSystemPtr& gl, const Partition& blocks);

/// Index of the unique positive root of maximal height (R irreducible).
int highest_root(const RootSystem& R);

/// Simple roots followed by -theta, as root indices. Throws when R is not irreducible.
std::vector<int> extended_simple_roots(const RootSystemPtr& R);

/// Name of an irreducible system from its rank, size and number of long roots.
std::string irreducible_type_name(int rank, int num_roots, int num_long);

} // namespace lctkit
