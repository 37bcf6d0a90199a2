#pragma once

#include "lctkit/arrangement.hpp"
#include "lctkit/epsilon.hpp"
#include "lctkit/ext_rational.hpp"
#include "lctkit/partition.hpp"
#include "lctkit/root_system.hpp"

#include <cstddef>
#include <vector>

namespace lctkit {

/// The l-th power map on Haar-random n x n unitaries; its eigenvalue law is
/// Haar measure on the block subgroup U_{q+1}^j x U_q^{l-j}, q = n div l.
struct PowerMeasureSpec {
    int n = 2;
    int ell = 1;
    int j = 0;                  // n mod ell
    Partition levi_partition;   // ((q+1)^j, q^(ell-j)), zero parts stripped
    int ell_tilde = 1;          // min(n, ell)
};

/// Throws InputError unless n >= 2 and ell >= 1.
PowerMeasureSpec make_power_measure_spec(int n, int ell);

/// 1/N for the quotient U_n / (U_{lambda_1} x ... x U_{lambda_N}); +inf when N = 1.
ExtRational epsilon_homogeneous_unitary(const Partition& lambda);

/// Exponent of the power measure; cross-checked against 1/min(n, ell).
ExtRational epsilon_power_measure(const PowerMeasureSpec& spec);

/// Subsystem generated by the given roots: closure under their reflections.
Subsystem generated_subsystem(const RootSystemPtr& R, const std::vector<int>& generators);

/// Pseudo-Levi root subsystems in every position: Weyl conjugates of the
/// subsystems spanned by proper subsets of the extended simple roots.
/// Includes the empty and the full subsystem. Sorted by root set.
/// R must be irreducible.
std::vector<Subsystem> enumerate_pseudo_levis(const RootSystemPtr& R, const LatticeCaps& caps = {});

/// Every symmetric subset closed under root addition, by exhaustion over
/// subsets of the positive roots. Sorted by root set.
std::vector<Subsystem> closed_subsystems_bruteforce(const RootSystemPtr& R, int max_roots = 16);

struct PseudoLeviReport {
    EpsilonReport report;
    /// Same minimum restricted to pseudo-Levis with simple derived algebra.
    ExtRational simple_derived_value = ExtRational::infinity();
    std::size_t candidates = 0;
};

/// 1/2 min (ss.rk(l') + 2 b) / (a - b) over pseudo-Levis l' with a > b, where
/// a = |positive roots of l'| and b = those also in levi.
PseudoLeviReport epsilon_pseudo_levi(const RootSystemPtr& R, const Subsystem& levi, const LatticeCaps& caps = {});

/// Exponent 1 - 2 eps / (1 + eps) bounding K-type multiplicities; +inf -> -1.
ExtRational mult_exponent(const ExtRational& epsilon);

/// Bound on Fourier coefficients of the power measure: either an exponent of
/// dim rho, or (for ell = 2) the absolute multiplicity bound 1.
struct FourierBound {
    enum class Kind { Exponent, AbsoluteBound };
    Kind kind = Kind::Exponent;
    ExtRational value;
};

FourierBound fourier_power_exponent(int n, int ell);

/// Convolution powers of the power measure: L^q for all finite q from
/// k_all_q on, bounded density from k_bounded on.
struct ConvolutionSmoothing {
    int k_all_q = 0;
    int k_bounded = 0;
};

ConvolutionSmoothing convolution_smoothing(int n, int ell);

} // namespace lctkit
