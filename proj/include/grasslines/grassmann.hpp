#pragma once

#include <map>
#include <string>
#include <vector>

#include "grasslines/projective.hpp"

namespace grasslines {

// Plucker coordinates of a line in P^N: the 2x2 minors of its basis, indexed
// by pairs (i, j) with i < j in lexicographic order, canonicalized.
Vec plucker(const ProjLine& l);

// residual check of the quadratic relations; true iff all vanish
bool plucker_relations_ok(const Vec& coords, size_t ambient_n);

// p M q^T for the canonical rref basis (p, q) of l; zero iff the Plucker
// point of l lies on the hyperplane dual to M. M must be antisymmetric.
Rat hyperplane_pairing(const ProjLine& l, const Mat& m);

// ---------------------------------------------------------------------------
// Two-row Schubert classes of G(1, N): sigma_{a,b} with N-1 >= a >= b >= 0.

struct TwoRowPartition {
    int a, b;
    int ambient_n; // the N of G(1, N)

    TwoRowPartition(int a_, int b_, int n_);

    int codim() const { return a + b; }
    bool operator==(const TwoRowPartition& o) const = default;
    std::string str() const;
};

// Poincare dual partner: (N-1-b, N-1-a)
TwoRowPartition dual(const TwoRowPartition& s);

enum class SpecialClass { sigma1, sigma2, sigma11 };

// Multiplication by sigma_p for p = 1, 2 (horizontal strips bounded by the
// two-row rectangle); each term appears with coefficient 1.
std::vector<TwoRowPartition> pieri_row(int p, const TwoRowPartition& s);

// Multiplication by sigma_{1,1} (vertical strip)
std::vector<TwoRowPartition> pieri_column11(const TwoRowPartition& s);

std::vector<TwoRowPartition> pieri_special(const TwoRowPartition& s, SpecialClass sp);

// 1 if t is the dual of s, else 0; requires complementary codimension
int pairing_degree(const TwoRowPartition& s, const TwoRowPartition& t);

// Coefficients of the second Chern character of G(1,N) cap H^2 on the two
// generators: +(N-3)/2 on sigma_2 and -(N-3)/2 on sigma_{1,1}.
struct Ch2Class {
    Rat c_sigma2;
    Rat c_sigma11;
    int ambient_n;
};

Ch2Class ch2_class(int ambient_n);

// ch2 paired with a surface class sigma_{a,b} of complementary-to-2 codim:
// (N-3)/2 * deg(sigma_2 . s) - (N-3)/2 * deg(sigma_{1,1} . s)
Rat ch2_pair(int ambient_n, const TwoRowPartition& surface_class);

} // namespace grasslines
