#include "grasslines/section.hpp"

#include <algorithm>

#include "grasslines/grassmann.hpp"

namespace grasslines {

std::string orbit_str(OrbitLabel l) {
    switch (l) {
        case OrbitLabel::O1: return "o1";
        case OrbitLabel::O2: return "o2";
        case OrbitLabel::O3: return "o3";
        case OrbitLabel::O4: return "o4";
    }
    throw error("unreachable");
}

OrbitLabel orbit_parse(const std::string& s) {
    if (s == "o1") return OrbitLabel::O1;
    if (s == "o2") return OrbitLabel::O2;
    if (s == "o3") return OrbitLabel::O3;
    if (s == "o4") return OrbitLabel::O4;
    throw error("unknown orbit label '" + s + "'");
}

namespace {

// quadratic form on the center plane vanishing on the kernel curve, as a
// 3x3 symmetric matrix in the plane's rref-basis coordinates
SymQuadForm fit_conic(const AntisymPencil& p, const LinSubspace& plane, const CenterCurve& c) {
    // coordinates of a plane point in the rref basis: read off pivot columns
    auto plane_coords = [&](const Vec& v) {
        auto piv = rref(plane.basis()).pivots;
        Vec out(piv.size());
        for (size_t i = 0; i < piv.size(); ++i) out[i] = v[piv[i]];
        return out;
    };
    // sample parameters give plenty of independent conditions
    std::vector<Vec> samples;
    for (long t = -3; t <= 3; ++t) {
        Vec pt(c.coords.size());
        for (size_t k = 0; k < pt.size(); ++k) pt[k] = c.coords[k].eval(Rat(t), Rat(1));
        samples.push_back(plane_coords(pt));
    }
    {
        Vec pt(c.coords.size());
        for (size_t k = 0; k < pt.size(); ++k) pt[k] = c.coords[k].eval(Rat(1), Rat(0));
        samples.push_back(plane_coords(pt));
    }
    // unknowns: q00,q01,q02,q11,q12,q22
    Mat sys(samples.size(), 6);
    for (size_t r = 0; r < samples.size(); ++r) {
        const Vec& x = samples[r];
        sys.at(r, 0) = x[0] * x[0];
        sys.at(r, 1) = 2 * x[0] * x[1];
        sys.at(r, 2) = 2 * x[0] * x[2];
        sys.at(r, 3) = x[1] * x[1];
        sys.at(r, 4) = 2 * x[1] * x[2];
        sys.at(r, 5) = x[2] * x[2];
    }
    Mat k = kernel(sys);
    if (k.rows() != 1) throw not_general("kernel curve does not lie on a unique conic");
    Vec q = primitive(k.row(0));
    Mat m(3, 3);
    m.at(0, 0) = q[0];
    m.at(0, 1) = m.at(1, 0) = q[1];
    m.at(0, 2) = m.at(2, 0) = q[2];
    m.at(1, 1) = q[3];
    m.at(1, 2) = m.at(2, 1) = q[4];
    m.at(2, 2) = q[5];
    return make_quad_form(m);
}

} // namespace

SectionSpace::SectionSpace(const AntisymPencil& pencil) : pencil_(pencil) {
    GeneralityCert cert = generality_check(pencil_);
    if (!cert.general) throw not_general("pencil not general: " + cert.violation);
    if (pencil_.parity == Parity::even_section) {
        exceptional_ = exceptional_lines(pencil_);
        const auto& e = *exceptional_;
        v_ = std::array<LinSubspace, 3>{span(e[1].kernel.space(), e[2].kernel.space()),
                                        span(e[0].kernel.space(), e[2].kernel.space()),
                                        span(e[0].kernel.space(), e[1].kernel.space())};
    } else {
        center_ = center_curve(pencil_);
        // span of enough curve points
        std::vector<ProjPoint> pts;
        pts.push_back(center_curve_point(pencil_, 0, 1));
        pts.push_back(center_curve_point(pencil_, 1, 0));
        pts.push_back(center_curve_point(pencil_, 1, 1));
        pts.push_back(center_curve_point(pencil_, 1, -1));
        pts.push_back(center_curve_point(pencil_, 2, 1));
        plane_ = LinSubspace::span_points(pts);
        if (plane_->dim() != pencil_.n)
            throw not_general("center curve does not span an n-plane");
        conic_ = fit_conic(pencil_, *plane_, *center_);
    }
}

const std::array<DegenerateMember, 3>& SectionSpace::exceptional() const {
    if (!exceptional_) throw error("exceptional lines: even sections only");
    return *exceptional_;
}

const std::array<LinSubspace, 3>& SectionSpace::v_planes() const {
    if (!v_) throw error("V planes: even sections only");
    return *v_;
}

const LinSubspace& SectionSpace::center_plane() const {
    if (!plane_) throw error("center plane: odd sections only");
    return *plane_;
}

const CenterCurve& SectionSpace::center() const {
    if (!center_) throw error("center curve: odd sections only");
    return *center_;
}

const SymQuadForm& SectionSpace::conic_form() const {
    if (!conic_) throw error("conic form: odd sections only");
    return *conic_;
}

ProjPoint SectionSpace::conic_point(const Rat& lambda, const Rat& mu) const {
    return center_curve_point(pencil_, lambda, mu);
}

namespace {

Vec plane_coords_of(const LinSubspace& plane, const Vec& v) {
    // rref basis: the coefficients are the entries at the pivot columns
    auto piv = rref(plane.basis()).pivots;
    Vec out(piv.size());
    for (size_t i = 0; i < piv.size(); ++i) out[i] = v[piv[i]];
    return out;
}

} // namespace

bool SectionSpace::on_conic(const ProjPoint& p) const {
    if (!plane_->contains(p)) return false;
    return conic_->eval(plane_coords_of(*plane_, p.coords())) == 0;
}

bool SectionSpace::tangent_to_conic(const ProjLine& l) const {
    if (!plane_->contains(l.space())) throw error("tangency test needs a line in the plane");
    Vec u = plane_coords_of(*plane_, l.basis_p());
    Vec v = plane_coords_of(*plane_, l.basis_q());
    Rat qu = conic_->eval(u);
    Rat qv = conic_->eval(v);
    Rat buv = bilinear(u, conic_->m, v);
    return buv * buv - qu * qv == 0;
}

bool membership(const SectionSpace& s, const ProjLine& l) {
    if (l.ambient_dim() != s.ambient_n()) throw error("membership: ambient mismatch");
    return hyperplane_pairing(l, s.pencil().A) == 0 && hyperplane_pairing(l, s.pencil().B) == 0;
}

SectionPoint make_section_point(const SectionSpace& s, const ProjLine& l) {
    Rat pa = hyperplane_pairing(l, s.pencil().A);
    Rat pb = hyperplane_pairing(l, s.pencil().B);
    if (pa != 0 || pb != 0)
        throw non_member("line is not on the section", rat_str(pa), rat_str(pb));
    return SectionPoint{l, std::nullopt};
}

OrbitLabel classify_orbit(const SectionSpace& s, SectionPoint& x) {
    OrbitLabel l = classify_orbit(s, x.line);
    x.orbit = l;
    return l;
}

OrbitLabel classify_orbit(const SectionSpace& s, const ProjLine& l) {
    if (!membership(s, l)) throw non_member("classify_orbit requires a member line",
                                            rat_str(hyperplane_pairing(l, s.pencil().A)),
                                            rat_str(hyperplane_pairing(l, s.pencil().B)));
    if (s.parity() == Parity::even_section) {
        int hits = 0;
        for (const auto& e : s.exceptional())
            if (incident(l, e.kernel.space())) ++hits;
        if (hits >= 3)
            throw invariant_violation("member line meets all three exceptional lines");
        if (hits == 2) return OrbitLabel::O1;
        if (hits == 1) return OrbitLabel::O2;
        for (const auto& v : s.v_planes())
            if (incident(l, v)) return OrbitLabel::O3;
        return OrbitLabel::O4;
    }
    const LinSubspace& plane = s.center_plane();
    auto cap = meet(l.space(), plane);
    if (!cap) return OrbitLabel::O4;
    if (cap->dim() == 1) {
        // line inside the plane
        return s.tangent_to_conic(l) ? OrbitLabel::O1 : OrbitLabel::O2;
    }
    ProjPoint pt(cap->basis().row(0));
    if (!s.on_conic(pt))
        throw invariant_violation(
            "member line meets the center plane off the conic at " + pt.str());
    return OrbitLabel::O3;
}

bool check_meets_all_V(const SectionSpace& s, const SectionPoint& x) {
    if (s.parity() != Parity::even_section) throw error("check_meets_all_V: even only");
    int hits = 0;
    for (const auto& v : s.v_planes())
        if (incident(x.line, v)) ++hits;
    return hits == 0 || hits == 3;
}

namespace {

// random kernel element of the stacked pairing constraints through fixed p
Vec solve_pairing_partner(const SectionSpace& s, const Vec& p, Rng& rng, long bound) {
    Mat sys = Mat::from_rows({vec_mat(p, s.pencil().A), vec_mat(p, s.pencil().B)});
    Mat k = kernel(sys);
    for (int tries = 0; tries < 64; ++tries) {
        Vec c = rng.vec(k.rows(), bound, true);
        Vec q = vec_mat(c, k);
        if (!is_zero_vec(q)) return q;
    }
    throw error("sampler failed to draw a partner point");
}

SectionPoint sample_even(const SectionSpace& s, OrbitLabel label, Rng& rng, long bound) {
    const auto& exc = s.exceptional();
    for (int attempt = 0; attempt < 256; ++attempt) {
        switch (label) {
            case OrbitLabel::O1: {
                size_t i = static_cast<size_t>(rng.uniform(0, 2));
                size_t j = static_cast<size_t>(rng.uniform(0, 1));
                if (j >= i) ++j;
                ProjPoint a = exc[i].kernel.space().random_point(rng, bound);
                ProjPoint b = exc[j].kernel.space().random_point(rng, bound);
                ProjLine l = ProjLine::through(a, b);
                if (membership(s, l) && classify_orbit(s, l) == label)
                    return SectionPoint{l, label};
                break;
            }
            case OrbitLabel::O2: {
                size_t i = static_cast<size_t>(rng.uniform(0, 2));
                ProjPoint a = exc[i].kernel.space().random_point(rng, bound);
                // partner inside V_i with both complementary blocks nonzero
                Vec q(6, Rat(0));
                bool ok = true;
                for (size_t blk = 0; blk < 3; ++blk) {
                    if (blk == i) continue;
                    Vec part = rng.vec(2, bound, true);
                    q[2 * blk] = part[0];
                    q[2 * blk + 1] = part[1];
                    if (part[0] == 0 && part[1] == 0) ok = false;
                }
                if (!ok) break;
                ProjLine l = ProjLine::through(a, ProjPoint(q));
                if (membership(s, l) && classify_orbit(s, l) == label)
                    return SectionPoint{l, label};
                break;
            }
            case OrbitLabel::O3: {
                size_t i = static_cast<size_t>(rng.uniform(0, 2));
                // p in V_i off the exceptional lines: both complementary blocks nonzero
                Vec p(6, Rat(0));
                std::vector<size_t> others;
                for (size_t blk = 0; blk < 3; ++blk)
                    if (blk != i) others.push_back(blk);
                Vec pa = rng.vec(2, bound, true), pb = rng.vec(2, bound, true);
                p[2 * others[0]] = pa[0];
                p[2 * others[0] + 1] = pa[1];
                p[2 * others[1]] = pb[0];
                p[2 * others[1] + 1] = pb[1];
                // q = free block i + c, d multiples of p's blocks, c != d
                Rat c = rng.rat_int(bound), d = rng.rat_int(bound);
                if (c == d) break;
                Vec q(6, Rat(0));
                Vec qi = rng.vec(2, bound, true);
                q[2 * i] = qi[0];
                q[2 * i + 1] = qi[1];
                for (size_t t = 0; t < 2; ++t) {
                    q[2 * others[0] + t] += c * p[2 * others[0] + t];
                    q[2 * others[1] + t] += d * p[2 * others[1] + t];
                }
                ProjLine l = ProjLine::span_of(p, q);
                if (membership(s, l) && classify_orbit(s, l) == label)
                    return SectionPoint{l, label};
                break;
            }
            case OrbitLabel::O4: {
                Vec p = rng.vec(6, bound, true);
                Vec q = solve_pairing_partner(s, p, rng, bound);
                ProjLine l = ProjLine::span_of(p, q);
                if (!membership(s, l)) break;
                // all three block minors nonzero <=> the line misses V
                bool good = true;
                for (size_t blk = 0; blk < 3; ++blk) {
                    Vec bp = l.basis_p(), bq = l.basis_q();
                    Rat minor = bp[2 * blk] * bq[2 * blk + 1] - bp[2 * blk + 1] * bq[2 * blk];
                    if (minor == 0) good = false;
                }
                if (good && classify_orbit(s, l) == label) return SectionPoint{l, label};
                break;
            }
        }
    }
    throw error("sample_orbit: retries exhausted (even " + orbit_str(label) + ")");
}

SectionPoint sample_odd(const SectionSpace& s, OrbitLabel label, Rng& rng, long bound) {
    const CenterCurve& c = s.center();
    auto curve_at = [&](const Rat& l0, const Rat& m0) {
        Vec v(c.coords.size());
        for (size_t k = 0; k < v.size(); ++k) v[k] = c.coords[k].eval(l0, m0);
        return v;
    };
    for (int attempt = 0; attempt < 256; ++attempt) {
        switch (label) {
            case OrbitLabel::O1: {
                Rat l0 = rng.rat_int(bound), m0 = rng.rat_int(bound);
                if (l0 == 0 && m0 == 0) break;
                // tangent line at the parameter: span of the two partials
                Vec dl(c.coords.size()), dm(c.coords.size());
                for (size_t k = 0; k < c.coords.size(); ++k) {
                    dl[k] = c.coords[k].d_r().eval(l0, m0);
                    dm[k] = c.coords[k].d_s().eval(l0, m0);
                }
                if (is_zero_vec(dl) || is_zero_vec(dm)) break;
                Mat rows = Mat::from_rows({dl, dm});
                if (rank(rows) != 2) break;
                ProjLine l = ProjLine::span_of(dl, dm);
                if (membership(s, l) && classify_orbit(s, l) == label)
                    return SectionPoint{l, label};
                break;
            }
            case OrbitLabel::O2: {
                // random non-tangent line inside the center plane
                ProjPoint a = s.center_plane().random_point(rng, bound);
                ProjPoint b = s.center_plane().random_point(rng, bound);
                if (a == b) break;
                ProjLine l = ProjLine::through(a, b);
                if (membership(s, l) && classify_orbit(s, l) == label)
                    return SectionPoint{l, label};
                break;
            }
            case OrbitLabel::O3: {
                Rat l0 = rng.rat_int(bound), m0 = rng.rat_int(bound);
                if (l0 == 0 && m0 == 0) break;
                Vec p = curve_at(l0, m0);
                if (is_zero_vec(p)) break;
                Vec q = solve_pairing_partner(s, p, rng, bound);
                ProjLine l = ProjLine::span_of(p, q);
                if (!membership(s, l)) break;
                if (s.center_plane().contains(ProjPoint(q))) break;
                if (classify_orbit(s, l) == label) return SectionPoint{l, label};
                break;
            }
            case OrbitLabel::O4: {
                // span{(1,0,a3,a4,a5), (0,1,a4,a5,b5)}: the two pairing
                // conditions in closed form
                Rat a3 = rng.rat_int(bound), a4 = rng.rat_int(bound), a5 = rng.rat_int(bound);
                Rat b5 = rng.rat_int(bound);
                Vec p{Rat(1), Rat(0), a3, a4, a5};
                Vec q{Rat(0), Rat(1), a4, a5, b5};
                ProjLine l = ProjLine::span_of(p, q);
                if (membership(s, l) && classify_orbit(s, l) == label)
                    return SectionPoint{l, label};
                break;
            }
        }
    }
    throw error("sample_orbit: retries exhausted (odd " + orbit_str(label) + ")");
}

} // namespace

SectionPoint sample_orbit(const SectionSpace& s, OrbitLabel label, Rng& rng, long bound) {
    return s.parity() == Parity::even_section ? sample_even(s, label, rng, bound)
                                              : sample_odd(s, label, rng, bound);
}

SectionPoint sample_member(const SectionSpace& s, Rng& rng, long bound) {
    long roll = rng.uniform(0, 9);
    OrbitLabel label = OrbitLabel::O4;
    if (roll <= 1) label = OrbitLabel::O1;
    else if (roll <= 3) label = OrbitLabel::O2;
    else if (roll <= 5) label = OrbitLabel::O3;
    return sample_orbit(s, label, rng, bound);
}

} // namespace grasslines
