#include "grasslines/projective.hpp"

namespace grasslines {

LinSubspace LinSubspace::span_rows(const Mat& generators) {
    if (generators.rows() == 0) throw error("span of nothing");
    auto [r, pivots] = rref(generators);
    if (pivots.empty()) throw error("span of zero generators");
    Mat b(pivots.size(), generators.cols());
    for (size_t i = 0; i < pivots.size(); ++i) b.set_row(i, r.row(i));
    return LinSubspace(std::move(b));
}

LinSubspace LinSubspace::span_points(const std::vector<ProjPoint>& pts) {
    if (pts.empty()) throw error("span of nothing");
    std::vector<Vec> rows;
    rows.reserve(pts.size());
    for (const auto& p : pts) rows.push_back(p.coords());
    return span_rows(Mat::from_rows(rows));
}

bool LinSubspace::contains(const ProjPoint& p) const {
    Mat stacked = b_.stacked(Mat::from_rows({p.coords()}));
    return rank(stacked) == b_.rows();
}

bool LinSubspace::contains(const LinSubspace& s) const {
    Mat stacked = b_.stacked(s.basis());
    return rank(stacked) == b_.rows();
}

ProjPoint LinSubspace::point_from_coeffs(const Vec& coeffs) const {
    if (coeffs.size() != b_.rows()) throw error("coeff count mismatch");
    return ProjPoint(vec_mat(coeffs, b_));
}

ProjPoint LinSubspace::random_point(Rng& rng, long bound) const {
    for (;;) {
        Vec c = rng.vec(b_.rows(), bound, true);
        Vec v = vec_mat(c, b_);
        if (!is_zero_vec(v)) return ProjPoint(v);
    }
}

ProjLine::ProjLine(const LinSubspace& s) : s_(s) {
    if (s.dim() != 1) throw error("line requires rank-2 basis");
}

ProjLine ProjLine::through(const ProjPoint& p, const ProjPoint& q) {
    return ProjLine(LinSubspace::span_points({p, q}));
}

ProjLine ProjLine::span_of(const Vec& u, const Vec& v) {
    return ProjLine(LinSubspace::span_rows(Mat::from_rows({u, v})));
}

LinSubspace span(const LinSubspace& a, const LinSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw error("span: ambient mismatch");
    return LinSubspace::span_rows(a.basis().stacked(b.basis()));
}

std::optional<LinSubspace> meet(const LinSubspace& a, const LinSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw error("meet: ambient mismatch");
    // intersection of row spaces: combinations x of a-rows lying in b's row
    // space; solve [A^T | -B^T]-style via kernel of stacked constraints
    const Mat& A = a.basis();
    const Mat& B = b.basis();
    // v in both spaces <=> v = x A = y B; kernel of [A; B]^T pairings:
    // solve for (x, y): x A - y B = 0 as linear system on (x, y)
    size_t na = A.rows(), nb = B.rows(), cols = A.cols();
    Mat sys(cols, na + nb);
    for (size_t j = 0; j < cols; ++j) {
        for (size_t i = 0; i < na; ++i) sys.at(j, i) = A.at(i, j);
        for (size_t i = 0; i < nb; ++i) sys.at(j, na + i) = -B.at(i, j);
    }
    Mat k = kernel(sys);
    if (k.rows() == 0) return std::nullopt;
    std::vector<Vec> rows;
    for (size_t i = 0; i < k.rows(); ++i) {
        Vec full = k.row(i);
        Vec x(full.begin(), full.begin() + static_cast<long>(na));
        Vec v = vec_mat(x, A);
        if (!is_zero_vec(v)) rows.push_back(v);
    }
    if (rows.empty()) return std::nullopt;
    return LinSubspace::span_rows(Mat::from_rows(rows));
}

bool incident(const ProjLine& l, const LinSubspace& s) {
    return meet(l.space(), s).has_value();
}

} // namespace grasslines
