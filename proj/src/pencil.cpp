#include "grasslines/pencil.hpp"

#include <algorithm>

namespace grasslines {

Mat AntisymPencil::member(const Rat& lambda, const Rat& mu) const {
    return lambda * A - mu * B;
}

AntisymPencil make_pencil(const Mat& a, const Mat& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw error("pencil: size mismatch");
    if (!a.is_antisymmetric() || !b.is_antisymmetric())
        throw error("pencil: matrices must be antisymmetric");
    size_t sz = a.rows();
    if (sz < 5) throw error("pencil: size too small");
    Parity par = (sz % 2 == 0) ? Parity::even_section : Parity::odd_section;
    int n = static_cast<int>(sz % 2 == 0 ? sz / 2 : (sz - 1) / 2);
    return AntisymPencil{a, b, par, n};
}

namespace {

Mat block_j() {
    Mat j(2, 2);
    j.at(0, 1) = -1;
    j.at(1, 0) = 1;
    return j;
}

Mat block_diag3(const Mat& a, const Mat& b, const Mat& c) {
    Mat m(6, 6);
    const Mat* blocks[3] = {&a, &b, &c};
    for (size_t t = 0; t < 3; ++t)
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) m.at(2 * t + i, 2 * t + j) = blocks[t]->at(i, j);
    return m;
}

} // namespace

AntisymPencil normal_form_even() {
    Mat j = block_j();
    Mat zero(2, 2);
    return make_pencil(block_diag3(j, j, j), block_diag3(j, zero, Rat(-1) * j));
}

AntisymPencil normal_form_odd() {
    Mat a(5, 5), b(5, 5);
    a.at(0, 2) = -1;
    a.at(1, 3) = -1;
    a.at(2, 0) = 1;
    a.at(3, 1) = 1;
    b.at(0, 3) = -1;
    b.at(1, 4) = -1;
    b.at(3, 0) = 1;
    b.at(4, 1) = 1;
    return make_pencil(a, b);
}

bool is_normal_form_even(const AntisymPencil& p) {
    AntisymPencil nf = normal_form_even();
    return p.size() == 6 && p.A == nf.A && p.B == nf.B;
}

bool is_normal_form_odd(const AntisymPencil& p) {
    AntisymPencil nf = normal_form_odd();
    return p.size() == 5 && p.A == nf.A && p.B == nf.B;
}

GeneralityCert generality_check(const AntisymPencil& p) {
    GeneralityCert cert;
    cert.residual = BinaryForm::constant(1);
    // the pencil must actually be 2-dimensional
    {
        size_t sz = p.size();
        Mat stacked(2, sz * sz);
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = 0; j < sz; ++j) {
                stacked.at(0, i * sz + j) = p.A.at(i, j);
                stacked.at(1, i * sz + j) = p.B.at(i, j);
            }
        if (rank(stacked) < 2) {
            cert.violation = "pencil not 2-dimensional";
            return cert;
        }
    }
    if (p.parity == Parity::even_section) {
        BinaryForm pf = pfaffian_form(p.A, p.B);
        if (pf.is_zero()) {
            cert.violation = "pfaffian vanishes identically";
            return cert;
        }
        if (!is_squarefree(pf)) {
            cert.violation = "pfaffian has a repeated root";
            cert.residual = pf.normalized();
            return cert;
        }
        FormRoots roots = rational_roots(pf);
        for (const auto& [pt, mult] : roots.roots) cert.pfaffian_roots.emplace_back(pt);
        cert.residual = roots.residual;
        cert.irrational_roots = roots.residual.degree() > 0;
        cert.general = true;
        return cert;
    }
    // odd: rank never drops below 2n anywhere on the pencil
    auto subs = principal_subpfaffians(p.A, p.B);
    BinaryForm g = BinaryForm::zero(0);
    for (const auto& f : subs) g = binary_gcd(g, f);
    if (g.is_zero()) {
        cert.violation = "all principal subpfaffians vanish";
        return cert;
    }
    if (g.degree() > 0) {
        cert.violation = "pencil meets the dual Grassmannian";
        cert.residual = g;
        return cert;
    }
    cert.general = true;
    return cert;
}

namespace {

// canonical root order: by slope lambda/mu descending, with (1:0) first;
// fixes the standard pencil's roots in the order (1:1), (0:1), (-1:1)
std::vector<ProjPoint> sorted_roots(std::vector<ProjPoint> roots) {
    auto infinite = [](const ProjPoint& p) { return p.coords()[1] == 0; };
    std::sort(roots.begin(), roots.end(), [&](const ProjPoint& x, const ProjPoint& y) {
        bool ix = infinite(x), iy = infinite(y);
        if (ix != iy) return ix;
        if (ix) return false;
        return x.coords()[0] / x.coords()[1] > y.coords()[0] / y.coords()[1];
    });
    return roots;
}

} // namespace

std::array<DegenerateMember, 3> exceptional_lines(const AntisymPencil& p) {
    if (p.parity != Parity::even_section || p.size() != 6)
        throw error("exceptional lines require the 6x6 even case");
    GeneralityCert cert = generality_check(p);
    if (!cert.general) throw not_general("pencil not general: " + cert.violation);
    if (cert.pfaffian_roots.size() != 3)
        throw not_general("pfaffian has irrational roots; residual " +
                          cert.residual.str("lambda", "mu"));
    auto roots = sorted_roots(cert.pfaffian_roots);
    std::array<std::optional<DegenerateMember>, 3> out;
    for (size_t i = 0; i < 3; ++i) {
        const Vec& t = roots[i].coords();
        Mat member = p.member(t[0], t[1]);
        Mat k = kernel(member);
        if (k.rows() != 2)
            throw not_general("kernel at root " + roots[i].str() + " is not a line");
        out[i] = DegenerateMember{roots[i], ProjLine(LinSubspace::span_rows(k))};
    }
    return {*out[0], *out[1], *out[2]};
}

CenterCurve center_curve(const AntisymPencil& p) {
    if (p.parity != Parity::odd_section) throw error("center curve requires odd parity");
    auto subs = principal_subpfaffians(p.A, p.B);
    // kernel of an odd antisymmetric matrix of corank 1: alternating-sign
    // vector of principal subpfaffians
    std::vector<BinaryForm> coords(subs.size());
    for (size_t k = 0; k < subs.size(); ++k)
        coords[k] = (k % 2 == 0 ? Rat(1) : Rat(-1)) * subs[k];
    return CenterCurve{coords, p.n};
}

ProjPoint center_curve_point(const AntisymPencil& p, const Rat& lambda, const Rat& mu) {
    CenterCurve c = center_curve(p);
    Vec v(c.coords.size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = c.coords[k].eval(lambda, mu);
    if (is_zero_vec(v)) throw not_general("pencil not general at the given parameter");
    Mat member = p.member(lambda, mu);
    if (rank(member) + 1 != member.rows())
        throw not_general("pencil not general at the given parameter");
    return ProjPoint(v);
}

LinSubspace hyperplane_curve_point(const AntisymPencil& p, const Rat& lambda, const Rat& mu) {
    ProjPoint c = center_curve_point(p, lambda, mu);
    Vec ca = vec_mat(c.coords(), p.A);
    Vec cb = vec_mat(c.coords(), p.B);
    Mat stacked = Mat::from_rows({ca, cb});
    if (rank(stacked) != 1) throw not_general("stacked center functionals have rank != 1");
    return LinSubspace::span_rows(kernel(stacked));
}

namespace {

// 2x2 rational map of pencil parameters carrying (1:1), (0:1), (-1:1) to the
// three given points (classic three-point transport)
Mat mobius_to(const std::vector<ProjPoint>& roots) {
    Vec t1 = roots[0].coords(), t2 = roots[1].coords(), t3 = roots[2].coords();
    // columns: col1 = a*t1 - t2, col2 = t2, where [t1 t3] (a, b)^T = 2 t2
    Mat sys(2, 2);
    sys.at(0, 0) = t1[0];
    sys.at(1, 0) = t1[1];
    sys.at(0, 1) = t3[0];
    sys.at(1, 1) = t3[1];
    Vec ab = mat_vec(inverse(sys), Vec{2 * t2[0], 2 * t2[1]});
    Mat L(2, 2);
    L.at(0, 0) = ab[0] * t1[0] - t2[0];
    L.at(1, 0) = ab[0] * t1[1] - t2[1];
    L.at(0, 1) = t2[0];
    L.at(1, 1) = t2[1];
    if (det(L) == 0) throw error("mobius transport degenerate");
    return L;
}

} // namespace

EvenNormalization normalize_even(const AntisymPencil& p) {
    if (p.parity != Parity::even_section || p.size() != 6)
        throw error("normalize_even requires the 6x6 even case");
    GeneralityCert cert = generality_check(p);
    if (!cert.general) throw not_general("pencil not general: " + cert.violation);
    if (cert.pfaffian_roots.size() != 3)
        throw not_general("pfaffian roots not rational; residual " +
                          cert.residual.str("lambda", "mu"));
    auto roots = sorted_roots(cert.pfaffian_roots);

    // mix the pencil so the singular members sit at (1:1), (0:1), (-1:1):
    // with L = [[x, -z], [-y, w]] carrying target params to roots, the mixed
    // pair is A~ = x A + y B, B~ = z A + w B
    Mat L = mobius_to(roots);
    Rat x = L.at(0, 0), z = -L.at(0, 1), y = -L.at(1, 0), w = L.at(1, 1);
    Mat At = x * p.A + y * p.B;
    Mat Bt = z * p.A + w * p.B;

    // kernels decompose Q^6 into three pencil-orthogonal planes
    std::array<Vec, 3> targets = {Vec{Rat(1), Rat(1)}, Vec{Rat(0), Rat(1)}, Vec{Rat(-1), Rat(1)}};
    std::vector<Vec> basis;
    for (size_t i = 0; i < 3; ++i) {
        Mat member = targets[i][0] * At - targets[i][1] * Bt;
        Mat k = kernel(member);
        if (k.rows() != 2) throw not_general("degenerate member kernel is not a plane");
        Vec u = k.row(0), v = k.row(1);
        Rat a_uv = bilinear(u, At, v);
        if (a_uv == 0) throw invariant_violation("pencil block coefficient vanished");
        // scale second vector so the A~ block is exactly [[0,-1],[1,0]]
        basis.push_back(u);
        basis.push_back(vec_scale(-1 / a_uv, v));
    }
    Mat T(6, 6);
    for (size_t col = 0; col < 6; ++col)
        for (size_t row = 0; row < 6; ++row) T.at(row, col) = basis[col][row];
    Mat Tt = T.transpose();
    AntisymPencil normalized = make_pencil(Tt * At * T, Tt * Bt * T);
    if (!is_normal_form_even(normalized))
        throw invariant_violation("normalization did not reach the even normal form");
    Mat mobius(2, 2);
    mobius.at(0, 0) = x;
    mobius.at(0, 1) = y;
    mobius.at(1, 0) = z;
    mobius.at(1, 1) = w;
    return EvenNormalization{T, mobius, normalized};
}

} // namespace grasslines
