#pragma once

#include "lctkit/arrangement.hpp"
#include "lctkit/ext_rational.hpp"
#include "lctkit/partition.hpp"
#include "lctkit/root_system.hpp"

#include <string>
#include <variant>
#include <vector>

namespace lctkit {

/// Degenerate inputs whose value is +inf: "zero-orbit", "full-levi", "torus".
struct TagWitness {
    std::string tag;
    friend bool operator==(const TagWitness&, const TagWitness&) = default;
};

/// Minimizing index of a closed-form minimum; name is "k" or "s".
struct IndexWitness {
    std::string name;
    int value = 0;
    friend bool operator==(const IndexWitness&, const IndexWitness&) = default;
};

/// Minimizing flat of the arrangement.
struct FlatWitness {
    std::vector<int> vanishing;
    int r = 0;
    int a = 0;
    int b = 0;
    friend bool operator==(const FlatWitness&, const FlatWitness&) = default;
};

/// Minimizing positioned subsystem, by its positive roots.
struct SubsystemWitness {
    std::string type;
    std::vector<int> positive;
    int rank = 0;
    int a = 0;
    int b = 0;
    friend bool operator==(const SubsystemWitness&, const SubsystemWitness&) = default;
};

using Witness = std::variant<TagWitness, IndexWitness, FlatWitness, SubsystemWitness>;

/// A threshold value together with where the minimum is attained. All
/// values are suprema that are not attained: integrability holds strictly
/// below the reported exponent.
struct EpsilonReport {
    ExtRational value;
    Witness witness;
    std::string formula_id;
};

/// Integrability exponent of the Fourier transform of the nilpotent orbit
/// of gl_n with Jordan type nu. Minimum over k = 1..length(nu); the zero
/// orbit gives +inf. Witness: smallest minimizing k.
EpsilonReport epsilon_orbit_gln(const Partition& nu);

/// The k-th term of the orbit formula (1-based k).
ExtRational epsilon_orbit_term(const Partition& nu, int k);

/// Same value through the polarizing Levi of each truncation [nu]_k:
/// (ss-rank + dim of the Levi nilradical) / dim of the maximal nilradical.
ExtRational epsilon_orbit_geometric(const Partition& nu);

/// Relative lct of the Weyl discriminant of gl_n along the block Levi with
/// block sizes levi_partition, twisted by the m-th power of the Levi's own
/// discriminant. Case form: m = 0, m = 1 (endpoint minimum, witness s),
/// m >= 2 (2 / number of blocks).
EpsilonReport rlct_weyl_disc(const Partition& levi_partition, int m);

/// Minimum over the column endpoints n_s of the conjugate, for any m.
EpsilonReport rlct_weyl_disc_endpoints(const Partition& levi_partition, int m);

/// Un-collapsed minimum over every k = 2..n, for any m.
EpsilonReport rlct_weyl_disc_full(const Partition& levi_partition, int m);

/// Number of nilradical dimensions: C(n,2) - sum C(nu_i,2).
long long nilradical_dim(const Partition& levi_blocks);

/// 2/h.
ExtRational lct_simple(const CartanType& type);
/// min over factors of 2/h; +inf for the empty list.
ExtRational lct_reductive(const std::vector<CartanType>& factors);
/// Certified lower bound for admissible representations with these simple factors.
ExtRational lower_bound_representation(const std::vector<CartanType>& factors);

/// Relative lct over simple-derived Levis l': min (ss.rk(l') + m b) / (a - b)
/// with a = |positive roots of l'| and b = those also in levi; l' runs over
/// Weyl-group conjugates of standard Levis with connected Dynkin diagram.
EpsilonReport general_relative_lct(const RootSystemPtr& R, const Subsystem& levi, int m, const LatticeCaps& caps = {});

/// Same quantity read off the dense flats of the arrangement.
EpsilonReport general_relative_lct_oracle(const RootSystemPtr& R, const Subsystem& levi, int m, const LatticeCaps& caps = {});

/// Leading exponent of an irreducible representation of GL_n whose local
/// character expansion has maximal orbit of Jordan type nu_max.
ExtRational epsilon_representation_gln(const Partition& nu_max);

/// Witness as a human-readable string.
std::string witness_str(const Witness& w);

} // namespace lctkit
