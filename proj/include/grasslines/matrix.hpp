#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grasslines/rational.hpp"

namespace grasslines {

// Dense matrix over Q, row-major. Small sizes only (<= ~15 in this project),
// so every algorithm is the plain exact one.
class Mat {
public:
    Mat() = default;
    Mat(size_t r, size_t c) : r_(r), c_(c), e_(r * c, Rat(0)) {}

    static Mat identity(size_t n);
    static Mat from_rows(const std::vector<Vec>& rows);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    Rat& at(size_t i, size_t j) { return e_[i * c_ + j]; }
    const Rat& at(size_t i, size_t j) const { return e_[i * c_ + j]; }

    Vec row(size_t i) const;
    void set_row(size_t i, const Vec& v);

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    friend Mat operator*(const Rat& c, const Mat& m);
    bool operator==(const Mat& o) const = default;

    bool is_zero() const;
    bool is_antisymmetric() const;
    bool is_symmetric() const;

    // rows of *this followed by rows of below
    Mat stacked(const Mat& below) const;
    Mat cols_subset(const std::vector<size_t>& js) const;

    std::string str() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Rat> e_;
};

struct RrefResult {
    Mat mat;
    std::vector<size_t> pivots; // strictly increasing
};

RrefResult rref(const Mat& m);
size_t rank(const Mat& m);

// Rows form a canonical basis of the right null space: M * row^T = 0.
// Row count = cols - rank, each row primitive.
Mat kernel(const Mat& m);

Rat det(const Mat& m);
Mat inverse(const Mat& m); // throws on singular

Vec mat_vec(const Mat& m, const Vec& v); // M v
Vec vec_mat(const Vec& v, const Mat& m); // v^T M
Rat bilinear(const Vec& p, const Mat& m, const Vec& q); // p M q^T

// Pfaffian of an antisymmetric matrix of even size, by cofactor expansion
// along the first row. Pf(M)^2 = det(M).
Rat pfaffian(const Mat& m);

struct SymQuadForm {
    Mat m; // symmetric, dimension x dimension
    size_t dim() const { return m.rows(); }
    Rat eval(const Vec& x) const { return bilinear(x, m, x); }
};

SymQuadForm make_quad_form(const Mat& m); // validates symmetry

struct QuadRank {
    size_t rank;
    Mat kernel; // rows span the vertex locus; 0 rows when nondegenerate
};

QuadRank quad_rank_and_vertex(const SymQuadForm& q);

} // namespace grasslines
