#pragma once

#include <array>
#include <optional>

#include "grasslines/section.hpp"

namespace grasslines {

// Invertible matrix acting on P^N, stored up to global scalar.
struct ProjectiveMap {
    Mat T;

    ProjPoint apply(const ProjPoint& p) const { return ProjPoint(mat_vec(T, p.coords())); }
    ProjLine apply(const ProjLine& l) const;
};

ProjectiveMap make_map(const Mat& t); // throws on singular
ProjectiveMap compose(const ProjectiveMap& a, const ProjectiveMap& b); // a after b
ProjectiveMap map_inverse(const ProjectiveMap& a);

// T preserves the section iff T^t A T and T^t B T both stay in span{A, B}.
bool is_automorphism(const SectionSpace& s, const ProjectiveMap& t);

// Random verified group element. Even sections must carry the standard
// normal form; candidates are filtered through the span condition before
// being returned, never emitted unverified.
ProjectiveMap sample_automorphism(const SectionSpace& s, Rng& rng,
                                  long bound = kDefaultCoordBound);

// --- even-section machinery (standard normal form) ---------------------

// 2x2 rational map with d * u = w exactly and det(d) = target_det
Mat map2_with_det(const Vec& u, const Vec& w, const Rat& target_det);

// Block determinant pattern (d1, d2, d3) making the permutation sigma of the
// three coordinate planes an automorphism; nullopt only for invalid sigma.
// sigma[i] = image block of block i.
std::optional<std::array<Rat, 3>> permutation_det_pattern(const std::array<int, 3>& sigma);

// The block permutation automorphism realizing sigma (with its det pattern).
ProjectiveMap permutation_automorphism(const SectionSpace& s, const std::array<int, 3>& sigma);

// For the record: which sigma admit a compensation by positive square block
// scalars (unimodular blocks times scalars) over Q.
bool permutation_square_compensable(const std::array<int, 3>& sigma);

// maps (1:0:1:0:1:0) to q; requires q off V
ProjectiveMap transport_point_off_V(const SectionSpace& s, const ProjPoint& q);

// maps p to q inside V minus the exceptional lines
ProjectiveMap transport_point_in_V(const SectionSpace& s, const ProjPoint& p, const ProjPoint& q);

// maps the member x to the member x' through a verified automorphism;
// requires equal orbit labels, even parity, standard normal form
ProjectiveMap transport_line(const SectionSpace& s, const SectionPoint& x, const SectionPoint& x2);

} // namespace grasslines
