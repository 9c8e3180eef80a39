#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "grasslines/binary_form.hpp"
#include "grasslines/projective.hpp"

namespace grasslines {

enum class Parity { even_section, odd_section };

// The pencil lambda*A - mu*B of antisymmetric matrices, dual to a
// codimension-2 linear section of the Plucker ambient.
// even_section: size 2n, cuts G(1, 2n-1); odd_section: size 2n+1, cuts G(1, 2n).
struct AntisymPencil {
    Mat A, B;
    Parity parity;
    int n;

    size_t size() const { return A.rows(); }        // N + 1
    size_t ambient_n() const { return A.rows() - 1; } // N of G(1, N)
    Mat member(const Rat& lambda, const Rat& mu) const; // lambda A - mu B
};

AntisymPencil make_pencil(const Mat& a, const Mat& b);

// G(1,5) section: A = diag(J, J, J), B = diag(J, 0, -J), J = [[0,-1],[1,0]].
AntisymPencil normal_form_even();
// G(1,4) section: the standard pair with center curve (0 : 0 : mu^2 : mu*lambda : lambda^2).
AntisymPencil normal_form_odd();

bool is_normal_form_even(const AntisymPencil& p);
bool is_normal_form_odd(const AntisymPencil& p);

struct GeneralityCert {
    bool general = false;
    std::string violation; // empty when general
    // even: the distinct Pfaffian roots found over Q plus the rootless factor
    std::vector<ProjPoint> pfaffian_roots;
    BinaryForm residual;
    // true when the certificate needed roots outside Q (even case only);
    // such pencils are general but not analyzable over Q
    bool irrational_roots = false;
};

GeneralityCert generality_check(const AntisymPencil& p);

struct DegenerateMember {
    ProjPoint param; // (lambda : mu)
    ProjLine kernel;
};

// The three singular members of a general even pencil with rational roots.
std::array<DegenerateMember, 3> exceptional_lines(const AntisymPencil& p);

// Kernel parametrization of an odd pencil: coordinate k is a binary form of
// degree n in (lambda, mu); the common zero locus is empty for general pencils.
struct CenterCurve {
    std::vector<BinaryForm> coords;
    int degree; // n
};

CenterCurve center_curve(const AntisymPencil& p);
ProjPoint center_curve_point(const AntisymPencil& p, const Rat& lambda, const Rat& mu);

// Hyperplane h(lambda:mu) = P(ker [c A; c B]); contains the center plane.
LinSubspace hyperplane_curve_point(const AntisymPencil& p, const Rat& lambda, const Rat& mu);

struct EvenNormalization {
    Mat T;           // change of basis: T^t * (mixed member) * T hits the normal form
    Mat mobius;      // 2x2: [A~; B~] = mobius * [A; B] as pencil coordinates
    AntisymPencil normalized; // equals normal_form_even() exactly
};

// Change of coordinates and pencil reparametrization realizing the standard
// even normal form. Requires a general pencil with rational Pfaffian roots;
// the roots are transported to (1:1), (0:1), (-1:1) in canonical root order.
EvenNormalization normalize_even(const AntisymPencil& p);

} // namespace grasslines
