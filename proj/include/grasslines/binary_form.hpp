#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grasslines/matrix.hpp"
#include "grasslines/rational.hpp"

namespace grasslines {

// Homogeneous form of degree d in two variables (r, s), coefficients of
// r^d, r^{d-1}s, ..., s^d. The zero form is representable at any degree.
class BinaryForm {
public:
    BinaryForm() : c_{Rat(0)} {}
    explicit BinaryForm(std::vector<Rat> coeffs);
    static BinaryForm zero(int degree);
    static BinaryForm constant(const Rat& v) { return BinaryForm({v}); }
    static BinaryForm linear(const Rat& a, const Rat& b) { return BinaryForm({a, b}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const;
    const Rat& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator*(const BinaryForm& o) const;
    friend BinaryForm operator*(const Rat& c, const BinaryForm& f);
    bool operator==(const BinaryForm& o) const;

    Rat eval(const Rat& r, const Rat& s) const;
    BinaryForm d_r() const;
    BinaryForm d_s() const;

    // leading nonzero coefficient scaled to 1 (zero forms unchanged)
    BinaryForm normalized() const;

    std::string str(const char* vr = "r", const char* vs = "s") const;

private:
    std::vector<Rat> c_;
};

// gcd normalized to leading coefficient 1; gcd(f, 0) = normalized f.
BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g);

// exact division; throws if g does not divide f
BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g);

struct FormRoots {
    // canonical projective parameters (coprime ints, first nonzero positive)
    std::vector<std::pair<Vec, int>> roots;
    BinaryForm residual; // monic factor with no rational roots
};

// All roots of f in P^1(Q) with multiplicities; errors on the zero form.
FormRoots rational_roots(const BinaryForm& f);

int root_multiplicity(const BinaryForm& f, const Vec& param);

// f squarefree over the algebraic closure (gcd(f, f') constant)
bool is_squarefree(const BinaryForm& f);

// Pfaffian of lambda*A - mu*B as a binary form in (lambda, mu).
// A, B antisymmetric of equal even size 2n; result has degree n.
BinaryForm pfaffian_form(const Mat& a, const Mat& b);

// Pfaffians of the principal submatrices of lambda*A - mu*B obtained by
// deleting one index (odd size 2n+1); entry k = submatrix without index k.
std::vector<BinaryForm> principal_subpfaffians(const Mat& a, const Mat& b);

} // namespace grasslines
