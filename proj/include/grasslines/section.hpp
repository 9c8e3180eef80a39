#pragma once

#include <array>
#include <optional>
#include <string>

#include "grasslines/pencil.hpp"
#include "grasslines/rng.hpp"

namespace grasslines {

enum class OrbitLabel { O1, O2, O3, O4 };

std::string orbit_str(OrbitLabel l); // "o1".."o4"
OrbitLabel orbit_parse(const std::string& s);

// The section G(1,N) cap H^2 with its invariant geometry precomputed.
// even: three exceptional lines l_i and the 3-planes V_j spanned by the pair
//       with index != j;
// odd:  the center plane P, the degree-n kernel parametrization, and the
//       conic's quadratic form in P-basis coordinates.
class SectionSpace {
public:
    explicit SectionSpace(const AntisymPencil& pencil);

    const AntisymPencil& pencil() const { return pencil_; }
    Parity parity() const { return pencil_.parity; }
    size_t ambient_n() const { return pencil_.ambient_n(); }

    // even accessors
    const std::array<DegenerateMember, 3>& exceptional() const;
    const std::array<LinSubspace, 3>& v_planes() const;

    // odd accessors
    const LinSubspace& center_plane() const;
    const CenterCurve& center() const;
    const SymQuadForm& conic_form() const; // 3x3, in center-plane basis coords

    ProjPoint conic_point(const Rat& lambda, const Rat& mu) const;
    bool on_conic(const ProjPoint& p) const;
    // line inside the center plane tangent to the conic?
    bool tangent_to_conic(const ProjLine& l) const;

private:
    AntisymPencil pencil_;
    std::optional<std::array<DegenerateMember, 3>> exceptional_;
    std::optional<std::array<LinSubspace, 3>> v_;
    std::optional<LinSubspace> plane_;
    std::optional<CenterCurve> center_;
    std::optional<SymQuadForm> conic_;
};

// A certified point of the section: both pairings vanish on the line.
struct SectionPoint {
    ProjLine line;
    std::optional<OrbitLabel> orbit; // cache, set by classify_orbit
};

bool membership(const SectionSpace& s, const ProjLine& l);

// throws non_member when the line is off the section
SectionPoint make_section_point(const SectionSpace& s, const ProjLine& l);

OrbitLabel classify_orbit(const SectionSpace& s, SectionPoint& x);
OrbitLabel classify_orbit(const SectionSpace& s, const ProjLine& l);

// Lemma-style check: a member meets no V_i or all three.
bool check_meets_all_V(const SectionSpace& s, const SectionPoint& x);

// Constructive per-orbit sampler; output passes membership and classifies as
// requested. Bounded retries, then error.
SectionPoint sample_orbit(const SectionSpace& s, OrbitLabel label, Rng& rng,
                          long bound = kDefaultCoordBound);

// sample any member, distribution weighted toward the dense orbit
SectionPoint sample_member(const SectionSpace& s, Rng& rng, long bound = kDefaultCoordBound);

} // namespace grasslines
