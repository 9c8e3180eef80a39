#include "grasslines/aut.hpp"

#include <algorithm>

namespace grasslines {

ProjLine ProjectiveMap::apply(const ProjLine& l) const {
    return ProjLine::span_of(mat_vec(T, l.basis_p()), mat_vec(T, l.basis_q()));
}

ProjectiveMap make_map(const Mat& t) {
    if (det(t) == 0) throw error("projective map must be invertible");
    return ProjectiveMap{t};
}

ProjectiveMap compose(const ProjectiveMap& a, const ProjectiveMap& b) {
    return ProjectiveMap{a.T * b.T};
}

ProjectiveMap map_inverse(const ProjectiveMap& a) { return ProjectiveMap{inverse(a.T)}; }

namespace {

Vec vectorize(const Mat& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

bool in_pencil_span(const Mat& m, const Mat& a, const Mat& b) {
    Mat stack = Mat::from_rows({vectorize(a), vectorize(b), vectorize(m)});
    return rank(stack) == 2;
}

Vec block_of(const Vec& v, size_t i) { return Vec{v[2 * i], v[2 * i + 1]}; }

Mat block_diag(const std::array<Mat, 3>& blocks) {
    Mat m(6, 6);
    for (size_t t = 0; t < 3; ++t)
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) m.at(2 * t + i, 2 * t + j) = blocks[t].at(i, j);
    return m;
}

Mat perm_matrix(const std::array<int, 3>& sigma) {
    Mat p(6, 6);
    for (size_t i = 0; i < 3; ++i) {
        p.at(2 * static_cast<size_t>(sigma[i]), 2 * i) = 1;
        p.at(2 * static_cast<size_t>(sigma[i]) + 1, 2 * i + 1) = 1;
    }
    return p;
}

Mat unimodular2(Rng& rng, long bound) {
    Mat t = Mat::identity(2);
    int factors = static_cast<int>(rng.uniform(1, 4));
    for (int k = 0; k < factors; ++k) {
        Mat e = Mat::identity(2);
        if (rng.uniform(0, 1) == 0)
            e.at(0, 1) = rng.rat_int(bound);
        else
            e.at(1, 0) = rng.rat_int(bound);
        t = t * e;
    }
    return t;
}

const std::array<std::array<int, 3>, 6> kAllPerms = {{{0, 1, 2},
                                                      {0, 2, 1},
                                                      {1, 0, 2},
                                                      {1, 2, 0},
                                                      {2, 0, 1},
                                                      {2, 1, 0}}};

} // namespace

bool is_automorphism(const SectionSpace& s, const ProjectiveMap& t) {
    if (t.T.rows() != s.ambient_n() + 1) throw error("is_automorphism: size mismatch");
    if (det(t.T) == 0) throw error("is_automorphism: singular map");
    Mat tt = t.T.transpose();
    return in_pencil_span(tt * s.pencil().A * t.T, s.pencil().A, s.pencil().B) &&
           in_pencil_span(tt * s.pencil().B * t.T, s.pencil().A, s.pencil().B);
}

Mat map2_with_det(const Vec& u, const Vec& w, const Rat& target_det) {
    if (u.size() != 2 || w.size() != 2 || is_zero_vec(u) || is_zero_vec(w) || target_det == 0)
        throw error("map2_with_det: bad arguments");
    Rat nu = u[0] * u[0] + u[1] * u[1];
    Rat nw = w[0] * w[0] + w[1] * w[1];
    Rat t = target_det * nu / nw;
    // columns: u -> w, rotate(u) -> t * rotate(w)
    Mat U(2, 2), W(2, 2);
    U.at(0, 0) = u[0];
    U.at(1, 0) = u[1];
    U.at(0, 1) = -u[1];
    U.at(1, 1) = u[0];
    W.at(0, 0) = w[0];
    W.at(1, 0) = w[1];
    W.at(0, 1) = -t * w[1];
    W.at(1, 1) = t * w[0];
    return W * inverse(U);
}

std::optional<std::array<Rat, 3>> permutation_det_pattern(const std::array<int, 3>& sigma) {
    // b-coefficients of the standard pencil's second matrix per block
    const std::array<Rat, 3> b = {Rat(1), Rat(0), Rat(-1)};
    // span of coefficient triples is cut out by x0 + x2 = 2 x1
    Mat sys(2, 3);
    sys.at(0, 0) = 1;
    sys.at(0, 1) = -2;
    sys.at(0, 2) = 1;
    for (size_t i = 0; i < 3; ++i) {
        Rat coef = b[static_cast<size_t>(sigma[i])];
        sys.at(1, i) = (i == 1) ? -2 * coef : coef;
    }
    Mat k = kernel(sys);
    if (k.rows() != 1) return std::nullopt;
    Vec d = k.row(0);
    for (const auto& x : d)
        if (x == 0) return std::nullopt;
    if (d[1] < 0) d = vec_scale(-1, d);
    return std::array<Rat, 3>{d[0], d[1], d[2]};
}

bool permutation_square_compensable(const std::array<int, 3>& sigma) {
    auto pattern = permutation_det_pattern(sigma);
    if (!pattern) return false;
    // positive square determinants <=> block scalars exist over Q
    for (const auto& d : *pattern) {
        Rat ratio = d / (*pattern)[1];
        if (ratio <= 0 || !rat_is_square(ratio)) return false;
    }
    return true;
}

ProjectiveMap permutation_automorphism(const SectionSpace& s, const std::array<int, 3>& sigma) {
    if (!is_normal_form_even(s.pencil()))
        throw error("permutation automorphisms need the standard even form");
    auto pattern = permutation_det_pattern(sigma);
    if (!pattern) throw error("no determinant pattern for this permutation");
    std::array<Mat, 3> blocks;
    for (size_t i = 0; i < 3; ++i) {
        blocks[i] = Mat::identity(2);
        blocks[i].at(0, 0) = (*pattern)[i];
    }
    ProjectiveMap t = make_map(perm_matrix(sigma) * block_diag(blocks));
    if (!is_automorphism(s, t))
        throw invariant_violation("permutation candidate failed the span condition");
    return t;
}

ProjectiveMap sample_automorphism(const SectionSpace& s, Rng& rng, long bound) {
    if (s.parity() == Parity::even_section) {
        if (!is_normal_form_even(s.pencil()))
            throw error("sampler needs the standard even form");
        for (int attempt = 0; attempt < 64; ++attempt) {
            const auto& sigma = kAllPerms[rng.next() % kAllPerms.size()];
            auto pattern = permutation_det_pattern(sigma);
            if (!pattern) continue;
            std::array<Mat, 3> blocks;
            for (size_t i = 0; i < 3; ++i) {
                Mat scale = Mat::identity(2);
                scale.at(0, 0) = (*pattern)[i];
                blocks[i] = unimodular2(rng, bound) * scale;
            }
            ProjectiveMap t{perm_matrix(sigma) * block_diag(blocks)};
            if (det(t.T) != 0 && is_automorphism(s, t)) return t;
        }
        throw error("even automorphism sampler exhausted retries");
    }
    if (!is_normal_form_odd(s.pencil()))
        throw error("sampler needs the standard odd form");
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rat alpha = rng.rat_int(bound);
        if (alpha == 0) continue;
        Mat g = unimodular2(rng, bound);
        Rat a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 0), d = g.at(1, 1);
        // action on the hyperplane coordinates and its symmetric square on
        // the center-plane coordinates
        Mat u(2, 2);
        u.at(0, 0) = a;
        u.at(0, 1) = -b;
        u.at(1, 0) = -c;
        u.at(1, 1) = d;
        Mat v(3, 3);
        v.at(0, 0) = d * d;
        v.at(0, 1) = 2 * c * d;
        v.at(0, 2) = c * c;
        v.at(1, 0) = b * d;
        v.at(1, 1) = a * d + b * c;
        v.at(1, 2) = a * c;
        v.at(2, 0) = b * b;
        v.at(2, 1) = 2 * a * b;
        v.at(2, 2) = a * a;
        Mat t(5, 5);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) t.at(i, j) = alpha * u.at(i, j);
        // Hankel block: constant antidiagonals
        Rat s1 = rng.rat_int(bound), s2 = rng.rat_int(bound);
        Rat s3 = rng.rat_int(bound), s4 = rng.rat_int(bound);
        Mat hank(3, 2);
        hank.at(0, 0) = s1;
        hank.at(0, 1) = s2;
        hank.at(1, 0) = s2;
        hank.at(1, 1) = s3;
        hank.at(2, 0) = s3;
        hank.at(2, 1) = s4;
        Mat su = hank * u;
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 2; ++j) t.at(2 + i, j) = su.at(i, j);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) t.at(2 + i, 2 + j) = v.at(i, j);
        if (det(t) == 0) continue;
        ProjectiveMap m{t};
        if (is_automorphism(s, m)) return m;
    }
    throw error("odd automorphism sampler exhausted retries");
}

namespace {

// index of the unique zero block; throws unless the point lies in exactly one V_i
size_t v_index_of(const Vec& v) {
    std::vector<size_t> zero;
    for (size_t i = 0; i < 3; ++i)
        if (v[2 * i] == 0 && v[2 * i + 1] == 0) zero.push_back(i);
    if (zero.size() != 1)
        throw error("point is not in V minus the exceptional lines");
    return zero[0];
}

const Vec kBasePointOffV = {Rat(1), Rat(0), Rat(1), Rat(0), Rat(1), Rat(0)};
const Vec kBasePointInV = {Rat(0), Rat(0), Rat(1), Rat(0), Rat(1), Rat(0)};

void assert_transport(const SectionSpace& s, const ProjectiveMap& t, const ProjLine& from,
                      const ProjLine& to) {
    if (!is_automorphism(s, t))
        throw invariant_violation("transport output is not an automorphism");
    if (!(t.apply(from) == to))
        throw invariant_violation("transport output does not map x to x'");
}

} // namespace

ProjectiveMap transport_point_off_V(const SectionSpace& s, const ProjPoint& q) {
    if (!is_normal_form_even(s.pencil()))
        throw error("transport needs the standard even form");
    const Vec& v = q.coords();
    std::array<Mat, 3> blocks;
    for (size_t i = 0; i < 3; ++i) {
        Rat f = v[2 * i], g = v[2 * i + 1];
        if (f == 0 && g == 0) throw error("transport_point_off_V: point lies in V");
        Mat t(2, 2);
        t.at(0, 0) = f;
        t.at(1, 0) = g;
        if (f != 0) {
            t.at(0, 1) = 0;
            t.at(1, 1) = 1 / f;
        } else {
            t.at(0, 1) = -1 / g;
            t.at(1, 1) = 0;
        }
        blocks[i] = t;
    }
    ProjectiveMap t = make_map(block_diag(blocks));
    if (!is_automorphism(s, t))
        throw invariant_violation("transport candidate failed the span condition");
    if (!(t.apply(ProjPoint(kBasePointOffV)) == q))
        throw invariant_violation("transport does not hit the target point");
    return t;
}

ProjectiveMap transport_point_in_V(const SectionSpace& s, const ProjPoint& p,
                                   const ProjPoint& q) {
    if (!is_normal_form_even(s.pencil()))
        throw error("transport needs the standard even form");
    size_t ip = v_index_of(p.coords());
    size_t iq = v_index_of(q.coords());
    // permutation carrying block ip to block iq, the rest in increasing order
    std::array<int, 3> sigma{};
    {
        std::vector<int> rest_src, rest_dst;
        for (int i = 0; i < 3; ++i) {
            if (static_cast<size_t>(i) != ip) rest_src.push_back(i);
            if (static_cast<size_t>(i) != iq) rest_dst.push_back(i);
        }
        sigma[ip] = static_cast<int>(iq);
        sigma[static_cast<size_t>(rest_src[0])] = rest_dst[0];
        sigma[static_cast<size_t>(rest_src[1])] = rest_dst[1];
    }
    ProjectiveMap perm = permutation_automorphism(s, sigma);
    Vec pm = perm.apply(p).coords();
    std::array<Mat, 3> blocks;
    for (size_t m = 0; m < 3; ++m) {
        if (m == iq) {
            blocks[m] = Mat::identity(2);
            continue;
        }
        blocks[m] = map2_with_det(block_of(pm, m), block_of(q.coords(), m), 1);
    }
    ProjectiveMap t = compose(make_map(block_diag(blocks)), perm);
    if (!is_automorphism(s, t))
        throw invariant_violation("transport candidate failed the span condition");
    if (!(t.apply(p) == q)) throw invariant_violation("transport does not hit the target point");
    return t;
}

namespace {

// (index, meeting point) pairs of a member line with the exceptional lines
std::vector<std::pair<size_t, Vec>> exceptional_hits(const SectionSpace& s, const ProjLine& l) {
    std::vector<std::pair<size_t, Vec>> hits;
    for (size_t i = 0; i < 3; ++i) {
        auto m = meet(l.space(), s.exceptional()[i].kernel.space());
        if (!m) continue;
        if (m->dim() != 0) throw invariant_violation("member coincides with an exceptional line");
        hits.emplace_back(i, m->basis().row(0));
    }
    return hits;
}

ProjectiveMap transport_o1(const SectionSpace& s, const ProjLine& x, const ProjLine& y) {
    auto hx = exceptional_hits(s, x);
    auto hy = exceptional_hits(s, y);
    if (hx.size() != 2 || hy.size() != 2) throw invariant_violation("o1 line without two hits");
    std::array<int, 3> sigma{};
    sigma[hx[0].first] = static_cast<int>(hy[0].first);
    sigma[hx[1].first] = static_cast<int>(hy[1].first);
    size_t cx = 3 - hx[0].first - hx[1].first;
    size_t cy = 3 - hy[0].first - hy[1].first;
    sigma[cx] = static_cast<int>(cy);
    auto pattern = permutation_det_pattern(sigma);
    if (!pattern) throw invariant_violation("no pattern for o1 permutation");
    std::array<Mat, 3> blocks;
    blocks[cx] = Mat::identity(2);
    blocks[cx].at(0, 0) = (*pattern)[cx];
    for (int t = 0; t < 2; ++t) {
        size_t src = hx[t].first;
        size_t dst = hy[t].first;
        blocks[src] = map2_with_det(block_of(hx[t].second, src), block_of(hy[t].second, dst),
                                    (*pattern)[src]);
    }
    ProjectiveMap tmap = make_map(perm_matrix(sigma) * block_diag(blocks));
    assert_transport(s, tmap, x, y);
    return tmap;
}

// split an o2 member into its exceptional meeting point and a partner point
// inside the same V_i
std::pair<size_t, std::pair<Vec, Vec>> o2_split(const SectionSpace& s, const ProjLine& l) {
    auto hits = exceptional_hits(s, l);
    if (hits.size() != 1) throw invariant_violation("o2 line without unique hit");
    size_t i = hits[0].first;
    const Vec u = hits[0].second;
    // partner: basis point made independent of u, then its block i removed
    Vec z = l.basis_p();
    {
        Mat chk = Mat::from_rows({u, z});
        if (rank(chk) != 2) z = l.basis_q();
    }
    // membership forces z's block i proportional to u's; cancel it
    Vec ub = block_of(u, i), zb = block_of(z, i);
    Rat c;
    if (ub[0] != 0)
        c = zb[0] / ub[0];
    else
        c = zb[1] / ub[1];
    Vec zv = vec_sub(z, vec_scale(c, u));
    if (block_of(zv, i) != Vec{Rat(0), Rat(0)})
        throw invariant_violation("o2 partner block not proportional");
    for (size_t m = 0; m < 3; ++m)
        if (m != i && is_zero_vec(block_of(zv, m)))
            throw invariant_violation("o2 partner hit an exceptional line");
    return {i, {u, zv}};
}

ProjectiveMap transport_o2(const SectionSpace& s, const ProjLine& x, const ProjLine& y) {
    auto [ix, px] = o2_split(s, x);
    auto [iy, py] = o2_split(s, y);
    std::array<int, 3> sigma{};
    std::vector<size_t> rx, ry;
    for (size_t m = 0; m < 3; ++m) {
        if (m != ix) rx.push_back(m);
        if (m != iy) ry.push_back(m);
    }
    sigma[ix] = static_cast<int>(iy);
    sigma[rx[0]] = static_cast<int>(ry[0]);
    sigma[rx[1]] = static_cast<int>(ry[1]);
    auto pattern = permutation_det_pattern(sigma);
    if (!pattern) throw invariant_violation("no pattern for o2 permutation");
    std::array<Mat, 3> blocks;
    blocks[ix] = map2_with_det(block_of(px.first, ix), block_of(py.first, iy), (*pattern)[ix]);
    for (int t = 0; t < 2; ++t)
        blocks[rx[static_cast<size_t>(t)]] =
            map2_with_det(block_of(px.second, rx[static_cast<size_t>(t)]),
                          block_of(py.second, ry[static_cast<size_t>(t)]),
                          (*pattern)[rx[static_cast<size_t>(t)]]);
    ProjectiveMap tmap = make_map(perm_matrix(sigma) * block_diag(blocks));
    assert_transport(s, tmap, x, y);
    return tmap;
}

// reduce an o3 member to span{(0,0,1,0,1,0), (a, b, 0, 0, 1, 0)}; returns the
// reducing automorphism and the free parameters (a, b)
std::pair<ProjectiveMap, Vec> o3_reduce(const SectionSpace& s, const ProjLine& l) {
    auto cap = meet(l.space(), s.v_planes()[0]);
    if (!cap || cap->dim() != 0) throw invariant_violation("o3 line must meet V_1 in a point");
    ProjPoint pm(cap->basis().row(0));
    ProjectiveMap ta = transport_point_in_V(s, pm, ProjPoint(kBasePointInV));
    ProjLine l1 = ta.apply(l);
    Vec w = l1.basis_p();
    {
        Mat chk = Mat::from_rows({kBasePointInV, w});
        if (rank(chk) != 2) w = l1.basis_q();
    }
    if (w[3] != 0 || w[5] != 0)
        throw invariant_violation("o3 reduced partner has nonzero forbidden coords");
    Vec ww = w;
    for (size_t k = 0; k < 6; ++k) ww[k] -= w[2] * kBasePointInV[k];
    if (ww[4] == 0) throw invariant_violation("o3 reduced partner degenerated");
    Vec ab{ww[0] / ww[4], ww[1] / ww[4]};
    if (ab[0] == 0 && ab[1] == 0) throw invariant_violation("o3 partner lies in V");
    return {ta, ab};
}

ProjectiveMap transport_o3(const SectionSpace& s, const ProjLine& x, const ProjLine& y) {
    auto [tx, abx] = o3_reduce(s, x);
    auto [ty, aby] = o3_reduce(s, y);
    std::array<Mat, 3> blocks = {map2_with_det(abx, aby, 1), Mat::identity(2),
                                 Mat::identity(2)};
    ProjectiveMap mid = make_map(block_diag(blocks));
    ProjectiveMap tmap = compose(map_inverse(ty), compose(mid, tx));
    assert_transport(s, tmap, x, y);
    return tmap;
}

// reduce an o4 member to the line through (1,0,1,0,1,0) with second point
// (a, 1, b, -2, c, 1); returns the reducing automorphism and (a, b, c)
std::pair<ProjectiveMap, Vec> o4_reduce(const SectionSpace& s, const ProjLine& l) {
    ProjPoint y(l.basis_p());
    ProjectiveMap t1 = transport_point_off_V(s, y);
    ProjectiveMap t1inv = map_inverse(t1);
    ProjLine l1 = t1inv.apply(l);
    Vec w = l1.basis_p();
    {
        Mat chk = Mat::from_rows({kBasePointOffV, w});
        if (rank(chk) != 2) w = l1.basis_q();
    }
    if (w[1] + w[3] + w[5] != 0 || w[5] != w[1])
        throw invariant_violation("o4 reduced partner violates the membership shape");
    if (w[1] == 0) throw invariant_violation("o4 reduced partner meets V");
    Vec scaled = vec_scale(1 / w[1], w);
    Vec abc{scaled[0], scaled[2], scaled[4]};
    return {t1inv, abc};
}

ProjectiveMap transport_o4(const SectionSpace& s, const ProjLine& x, const ProjLine& y) {
    auto [tx, gx] = o4_reduce(s, x);
    auto [ty, gy] = o4_reduce(s, y);
    std::array<Mat, 3> blocks;
    Rat shifts[3] = {gy[0] - gx[0], (gx[1] - gy[1]) / 2, gy[2] - gx[2]};
    for (size_t i = 0; i < 3; ++i) {
        blocks[i] = Mat::identity(2);
        blocks[i].at(0, 1) = shifts[i];
    }
    ProjectiveMap mid = make_map(block_diag(blocks));
    ProjectiveMap tmap = compose(map_inverse(ty), compose(mid, tx));
    assert_transport(s, tmap, x, y);
    return tmap;
}

} // namespace

ProjectiveMap transport_line(const SectionSpace& s, const SectionPoint& x,
                             const SectionPoint& x2) {
    if (s.parity() != Parity::even_section)
        throw error("line transport is implemented for even sections");
    if (!is_normal_form_even(s.pencil()))
        throw error("line transport needs the standard even form");
    OrbitLabel lx = x.orbit ? *x.orbit : classify_orbit(s, x.line);
    OrbitLabel ly = x2.orbit ? *x2.orbit : classify_orbit(s, x2.line);
    if (lx != ly) throw error("transport_line requires points in the same orbit");
    switch (lx) {
        case OrbitLabel::O1: return transport_o1(s, x.line, x2.line);
        case OrbitLabel::O2: return transport_o2(s, x.line, x2.line);
        case OrbitLabel::O3: return transport_o3(s, x.line, x2.line);
        case OrbitLabel::O4: return transport_o4(s, x.line, x2.line);
    }
    throw error("unreachable");
}

} // namespace grasslines
