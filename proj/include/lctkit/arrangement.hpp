#pragma once

#include "lctkit/ext_rational.hpp"
#include "lctkit/root_system.hpp"

#include <optional>
#include <vector>

namespace lctkit {

/// A proper flat of the reflection arrangement {ker alpha : alpha > 0},
/// keyed by the sorted indices of the positive roots vanishing on it.
struct Flat {
    std::vector<int> vanishing;
    int r = 0;       // codimension
    int s = 0;       // number of hyperplanes containing the flat
    bool dense = false;

    friend bool operator==(const Flat&, const Flat&) = default;
};

/// Semisimple-rank limits for brute-force lattice enumeration.
struct LatticeCaps {
    int type_a_rank = 8;
    int other_rank = 4;
};

/// Every flat of codimension >= 1, sorted by (r, vanishing).
std::vector<Flat> enumerate_flats(const RootSystemPtr& R, const LatticeCaps& caps = {});

/// True iff the vanishing root subsystem of the flat is irreducible.
bool is_dense(const RootSystem& R, const Flat& f);

struct OracleResult {
    ExtRational value = ExtRational::infinity();
    std::optional<Flat> witness;
};

/// min r(W)/s(W) over dense flats; +inf for the empty arrangement.
OracleResult lct_arrangement_oracle(const RootSystemPtr& R, const LatticeCaps& caps = {});

/// min (r + m b)/(a - b) over dense flats with a > b, where a counts the
/// vanishing positive roots and b those lying in the Levi.
OracleResult relative_lct_oracle(const RootSystemPtr& R, const Subsystem& levi, int m, const LatticeCaps& caps = {});

/// As above over a precomputed lattice of R (avoids re-enumeration in sweeps).
OracleResult relative_lct_oracle(const RootSystemPtr& R, const std::vector<Flat>& flats, const Subsystem& levi, int m);

/// Same quantity minimized over every flat, dense or not.
OracleResult relative_lct_all_flats(const RootSystemPtr& R, const Subsystem& levi, int m, const LatticeCaps& caps = {});

} // namespace lctkit
