#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "grasslines/binary_form.hpp"
#include "grasslines/section.hpp"

namespace grasslines {

// Coordinates on P(C^{N+1} / W) for W the 2-space of a member line: a lift
// basis of N-1 ambient vectors complementing W. The default lift is the
// pivot-complement of W's rref; custom lifts feed the frame-invariance tests.
struct ComplementFrame {
    LinSubspace W;   // rank-2 rref basis of the line
    Mat lift;        // (N-1) x (N+1), rows are the lift basis vectors
    Mat to_coords;   // (N+1) x (N-1): project(v) = v * to_coords

    Vec project(const Vec& ambient) const { return vec_mat(ambient, to_coords); }
    Vec lift_coords(const Vec& frame) const { return vec_mat(frame, lift); }
    size_t frame_dim() const { return lift.rows(); } // N - 1
};

ComplementFrame make_frame(const ProjLine& l);
ComplementFrame make_frame_custom(const ProjLine& l, const Mat& lift);

// The system (r M1 + s M2) t = 0 cutting the lines through x inside the
// section; row 0 carries the A-equation, row 1 the B-equation.
struct PencilSystem {
    Mat M1, M2; // 2 x (N-1)
};

struct BuiltSystem {
    ComplementFrame frame;
    PencilSystem sys;
};

BuiltSystem build_system(const SectionSpace& s, const SectionPoint& x);
BuiltSystem build_system_in_frame(const SectionSpace& s, const SectionPoint& x,
                                  const ComplementFrame& frame);

// values of the two equations at ((r : s), t)
Vec eval_system(const PencilSystem& sys, const Rat& r, const Rat& s, const Vec& t);

// all 2x2 column minors of r M1 + s M2, as binary forms in (r, s)
std::vector<BinaryForm> system_minors(const PencilSystem& sys);

enum class ComponentKind { vertical, horizontal, residual };

struct ZxComponent {
    ComponentKind kind;
    std::array<int, 2> cls; // (fiber-plane coefficient, pullback coefficient)
    int multiplicity = 1;
    int count = 1; // conjugate components represented by this entry

    // vertical (rational parameter)
    std::optional<Vec> param;            // (r0 : s0), canonical
    std::optional<Mat> support;          // kernel rows in frame coords
    std::optional<BinaryForm> factor;    // irreducible parameter factor (symbolic verticals)

    // residual, odd case: Cramer parametrization of the kernel graph
    std::optional<std::vector<BinaryForm>> param_map;
    // residual, even case: image quadric of the second projection
    std::optional<SymQuadForm> quadric;
};

std::vector<ZxComponent> vertical_components(const PencilSystem& sys);
std::vector<ZxComponent> horizontal_components(const PencilSystem& sys);
std::optional<ZxComponent> residual_component(const PencilSystem& sys,
                                              const std::vector<ZxComponent>& found,
                                              Rng& rng);

// det of the 2x2 elimination matrix as a quadratic form on the frame; even
// sections only (the image of Z_x under the second projection)
SymQuadForm elimination_quadric(const PencilSystem& sys);

struct ZxReport {
    OrbitLabel orbit;
    std::vector<ZxComponent> components;
    std::array<int, 2> total_class; // always (2, 1)
    std::string signature;          // "", "quadric-cone-blowup-F2", "smooth-quadric",
                                    // "rational-curve-P1"
    size_t quadric_rank = 0;        // even sections
    std::optional<Vec> vertex;      // frame coords of the cone vertex (rank 3)
};

// Full decomposition with class conservation enforced; deterministic given x.
struct Decomposition {
    ComplementFrame frame;
    PencilSystem sys;
    ZxReport report;
};

Decomposition decompose(const SectionSpace& s, const SectionPoint& x,
                        uint64_t seed = 0x5eed5eedULL);
Decomposition decompose_in_frame(const SectionSpace& s, const SectionPoint& x,
                                 const ComplementFrame& frame,
                                 uint64_t seed = 0x5eed5eedULL);

std::array<int, 2> total_class_of(const std::vector<ZxComponent>& comps);

std::string component_kind_str(ComponentKind k);

// stable JSON schema; all rationals as "p/q" strings
std::string zx_report_json_text(const Decomposition& d);

} // namespace grasslines
