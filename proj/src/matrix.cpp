#include "grasslines/matrix.hpp"

namespace grasslines {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec Mat::row(size_t i) const {
    Vec v(c_);
    for (size_t j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

void Mat::set_row(size_t i, const Vec& v) {
    if (v.size() != c_) throw error("set_row: size mismatch");
    for (size_t j = 0; j < c_; ++j) at(i, j) = v[j];
}

Mat Mat::transpose() const {
    Mat t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw error("mat mul: shape mismatch");
    Mat p(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < o.c_; ++j) p.at(i, j) += at(i, k) * o.at(k, j);
        }
    return p;
}

Mat Mat::operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw error("mat add: shape mismatch");
    Mat s = *this;
    for (size_t i = 0; i < e_.size(); ++i) s.e_[i] += o.e_[i];
    return s;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw error("mat sub: shape mismatch");
    Mat s = *this;
    for (size_t i = 0; i < e_.size(); ++i) s.e_[i] -= o.e_[i];
    return s;
}

Mat operator*(const Rat& c, const Mat& m) {
    Mat s = m;
    for (auto& x : s.e_) x *= c;
    return s;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool Mat::is_antisymmetric() const {
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j <= i; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

bool Mat::is_symmetric() const {
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < i; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Mat Mat::stacked(const Mat& below) const {
    if (r_ == 0) return below;
    if (below.rows() == 0) return *this;
    if (c_ != below.cols()) throw error("stacked: col mismatch");
    Mat s(r_ + below.rows(), c_);
    for (size_t i = 0; i < r_; ++i) s.set_row(i, row(i));
    for (size_t i = 0; i < below.rows(); ++i) s.set_row(r_ + i, below.row(i));
    return s;
}

Mat Mat::cols_subset(const std::vector<size_t>& js) const {
    Mat s(r_, js.size());
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < js.size(); ++j) s.at(i, j) = at(i, js[j]);
    return s;
}

std::string Mat::str() const {
    std::string out = "[";
    for (size_t i = 0; i < r_; ++i) {
        out += vec_str(row(i));
        if (i + 1 < r_) out += "; ";
    }
    return out + "]";
}

RrefResult rref(const Mat& m) {
    Mat a = m;
    std::vector<size_t> pivots;
    size_t prow = 0;
    for (size_t col = 0; col < a.cols() && prow < a.rows(); ++col) {
        size_t sel = prow;
        while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != prow)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(prow, j));
        Rat inv = 1 / a.at(prow, col);
        for (size_t j = col; j < a.cols(); ++j) a.at(prow, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == prow || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(prow, j);
        }
        pivots.push_back(col);
        ++prow;
    }
    return {a, pivots};
}

size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel(const Mat& m) {
    auto [r, pivots] = rref(m);
    std::vector<size_t> free_cols;
    {
        size_t pi = 0;
        for (size_t j = 0; j < m.cols(); ++j) {
            if (pi < pivots.size() && pivots[pi] == j)
                ++pi;
            else
                free_cols.push_back(j);
        }
    }
    Mat k(free_cols.size(), m.cols());
    for (size_t b = 0; b < free_cols.size(); ++b) {
        size_t f = free_cols[b];
        k.at(b, f) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) k.at(b, pivots[pi]) = -r.at(pi, f);
        k.set_row(b, primitive(k.row(b)));
    }
    return k;
}

Rat det(const Mat& m) {
    if (m.rows() != m.cols()) throw error("det: not square");
    Mat a = m;
    size_t n = a.rows();
    Rat d = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && a.at(sel, col) == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != col) {
            for (size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        Rat inv = 1 / a.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            Rat f = a.at(i, col) * inv;
            for (size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw error("inverse: not square");
    size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto [r, pivots] = rref(aug);
    if (pivots.size() != n || pivots[n - 1] != n - 1) throw error("inverse: singular matrix");
    Mat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (v.size() != m.cols()) throw error("mat_vec: size mismatch");
    Vec out(m.rows(), Rat(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

Vec vec_mat(const Vec& v, const Mat& m) {
    if (v.size() != m.rows()) throw error("vec_mat: size mismatch");
    Vec out(m.cols(), Rat(0));
    for (size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

Rat bilinear(const Vec& p, const Mat& m, const Vec& q) { return dot(vec_mat(p, m), q); }

namespace {

Rat pfaffian_rec(const Mat& m, std::vector<size_t>& idx) {
    size_t n = idx.size();
    if (n == 0) return Rat(1);
    Rat acc = 0;
    size_t i0 = idx[0];
    for (size_t j = 1; j < n; ++j) {
        if (m.at(i0, idx[j]) == 0) continue;
        std::vector<size_t> rest;
        rest.reserve(n - 2);
        for (size_t k = 1; k < n; ++k)
            if (k != j) rest.push_back(idx[k]);
        Rat sub = pfaffian_rec(m, rest);
        Rat term = m.at(i0, idx[j]) * sub;
        acc += (j % 2 == 1) ? term : -term;
    }
    return acc;
}

} // namespace

Rat pfaffian(const Mat& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || !m.is_antisymmetric())
        throw error("pfaffian requires even antisymmetric");
    std::vector<size_t> idx(m.rows());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return pfaffian_rec(m, idx);
}

SymQuadForm make_quad_form(const Mat& m) {
    if (!m.is_symmetric()) throw error("quad form requires symmetric matrix");
    return SymQuadForm{m};
}

QuadRank quad_rank_and_vertex(const SymQuadForm& q) {
    return QuadRank{rank(q.m), kernel(q.m)};
}

} // namespace grasslines
