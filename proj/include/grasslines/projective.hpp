#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grasslines/matrix.hpp"
#include "grasslines/rng.hpp"

namespace grasslines {

// Point of P^N, canonical coordinates (coprime integers, first nonzero > 0).
class ProjPoint {
public:
    explicit ProjPoint(const Vec& coords) : v_(primitive(coords)) {}

    const Vec& coords() const { return v_; }
    size_t ambient_dim() const { return v_.size() - 1; } // N
    bool operator==(const ProjPoint& o) const = default;

    std::string str() const { return vec_str(v_); }

private:
    Vec v_;
};

// k-plane of P^N as a full-row-rank (k+1) x (N+1) basis, stored in rref so
// that equality of subspaces is entrywise equality.
class LinSubspace {
public:
    static LinSubspace span_rows(const Mat& generators);
    static LinSubspace span_points(const std::vector<ProjPoint>& pts);

    const Mat& basis() const { return b_; }
    size_t ambient_dim() const { return b_.cols() - 1; }       // N
    int dim() const { return static_cast<int>(b_.rows()) - 1; } // projective dim k
    bool operator==(const LinSubspace& o) const = default;

    bool contains(const ProjPoint& p) const;
    bool contains(const LinSubspace& s) const;

    // point with the given coefficients against the rref basis
    ProjPoint point_from_coeffs(const Vec& coeffs) const;
    ProjPoint random_point(Rng& rng, long bound = kDefaultCoordBound) const;

    std::string str() const { return b_.str(); }

private:
    explicit LinSubspace(Mat b) : b_(std::move(b)) {}
    Mat b_;
};

// A line (1-plane); rank of the stored basis is exactly 2.
class ProjLine {
public:
    explicit ProjLine(const LinSubspace& s);
    static ProjLine through(const ProjPoint& p, const ProjPoint& q);
    static ProjLine span_of(const Vec& u, const Vec& v);

    const LinSubspace& space() const { return s_; }
    // the two rows of the canonical rref basis
    Vec basis_p() const { return s_.basis().row(0); }
    Vec basis_q() const { return s_.basis().row(1); }
    size_t ambient_dim() const { return s_.ambient_dim(); }
    bool operator==(const ProjLine& o) const = default;

    std::string str() const { return s_.str(); }

private:
    LinSubspace s_;
};

LinSubspace span(const LinSubspace& a, const LinSubspace& b);

// exact intersection; empty optional when the subspaces are disjoint
std::optional<LinSubspace> meet(const LinSubspace& a, const LinSubspace& b);

bool incident(const ProjLine& l, const LinSubspace& s);

} // namespace grasslines
