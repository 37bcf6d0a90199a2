#pragma once

#include "lctkit/root_system.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lctkit {

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

/// A Weyl group element, recorded both as its permutation of root indices
/// (faithful, used for fast orbit computations) and, when requested, as the
/// integer matrix acting on ambient column vectors.
struct WeylElement {
    std::vector<int> root_perm;
    IntMatrix matrix;
};

/// Classical order of the Weyl group of the given factors.
std::uint64_t weyl_group_order(const std::vector<CartanType>& factors);

/// Full reflection group generated by the simple reflections, by
/// breadth-first closure from the identity. Throws CapExceeded
/// ("Weyl group too large") when the group order exceeds cap.
std::vector<WeylElement> weyl_group(const RootSystem& R, std::size_t cap = kDefaultWeylCap, bool with_matrices = true);

/// Image of a sorted root-index set under a root permutation, sorted.
std::vector<int> apply(const std::vector<int>& root_perm, const std::vector<int>& roots);

/// Orbit of a sorted root-index set under the Weyl group, by breadth-first
/// search over simple reflections. Sorted output; throws CapExceeded when the
/// orbit grows past cap.
std::vector<std::vector<int>> weyl_orbit(const RootSystem& R, const std::vector<int>& roots, std::size_t cap = kDefaultWeylCap);

} // namespace lctkit
