#pragma once

#include "grasslines/grassmann.hpp"
#include "grasslines/zx.hpp"

namespace grasslines {

// The plane whose lines sweep the test surface S inside the section: every
// line contained in Pi is a member, and S = { [l'] : l' in Pi }.
struct SweptSurface {
    LinSubspace plane; // 2-plane of P^N
    std::string provenance;
};

// Build the swept plane from the horizontal component of a decomposition.
// Odd sections lift the full 3-dim support; even sections pick the ruling
// point given by the first basis vector of the horizontal line's support.
SweptSurface sweep_surface(const SectionSpace& s, const SectionPoint& x,
                           const Decomposition& dec);

// (S . sigma_2, S . sigma_{1,1}) by exact incidence counts against random
// flags, with redraws on non-transverse draws.
std::pair<int, int> enumerative_class(const SectionSpace& s, const SweptSurface& surf,
                                      Rng& rng);

// The two-row class of S determined by the counts (duality orthonormality).
TwoRowPartition surface_class_of_counts(int n_ambient, int deg_sigma2, int deg_sigma11);

// Full pipeline: sample o1 -> decompose -> sweep -> enumerative class ->
// Chern character pairing. Asserts negativity and returns the exact value.
Rat corollary_check(const SectionSpace& s, Rng& rng);

} // namespace grasslines
