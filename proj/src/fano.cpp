#include "grasslines/fano.hpp"

namespace grasslines {

SweptSurface sweep_surface(const SectionSpace& s, const SectionPoint& x,
                           const Decomposition& dec) {
    const ZxComponent* horizontal = nullptr;
    for (const auto& c : dec.report.components)
        if (c.kind == ComponentKind::horizontal) horizontal = &c;
    if (!horizontal) throw error("sweep_surface: no horizontal component");
    const Mat& support = *horizontal->support;
    LinSubspace plane = [&] {
        if (s.parity() == Parity::odd_section) {
            // W plus the lifted kernel point
            Mat gens = x.line.space().basis().stacked(
                Mat::from_rows({dec.frame.lift_coords(support.row(0))}));
            return LinSubspace::span_rows(gens);
        }
        // ruling point: first basis vector of the horizontal line's support
        Vec v0 = dec.frame.lift_coords(support.row(0));
        Mat gens = x.line.space().basis().stacked(Mat::from_rows({v0}));
        return LinSubspace::span_rows(gens);
    }();
    if (plane.dim() != 2) throw invariant_violation("swept surface is not a plane");
    // the geometric heart of the sweep: lines in the plane stay on the section
    Rng probe(0xF0F0);
    for (int k = 0; k < 8; ++k) {
        ProjPoint a = plane.random_point(probe);
        ProjPoint b = plane.random_point(probe);
        if (a == b) continue;
        if (!membership(s, ProjLine::through(a, b)))
            throw invariant_violation("swept plane contains a non-member line");
    }
    return SweptSurface{plane, "horizontal component of Z_x, orbit " +
                                   orbit_str(dec.report.orbit)};
}

std::pair<int, int> enumerative_class(const SectionSpace& s, const SweptSurface& surf,
                                      Rng& rng) {
    size_t n = s.ambient_n();
    int deg2 = -1, deg11 = -1;
    // sigma_2: lines in the plane meeting a random (N-3)-plane; generic count 0
    for (int attempt = 0; attempt < 10 && deg2 < 0; ++attempt) {
        std::vector<Vec> rows;
        for (size_t i = 0; i + 2 < n; ++i) rows.push_back(rng.vec(n + 1, kDefaultCoordBound));
        Mat gens = Mat::from_rows(rows);
        if (rank(gens) != n - 2) continue;
        LinSubspace flag = LinSubspace::span_rows(gens);
        auto cap = meet(surf.plane, flag);
        if (cap) continue; // non-transverse: the plane would carry a pencil of hits
        deg2 = 0;
    }
    if (deg2 < 0) throw error("sigma_2 count: persistent non-transversality");
    // sigma_{1,1}: lines in the plane inside a random hyperplane; the generic
    // hyperplane meets the plane in a single line
    for (int attempt = 0; attempt < 10 && deg11 < 0; ++attempt) {
        Vec h = rng.vec(n + 1, kDefaultCoordBound, true);
        Mat constraint = Mat::from_rows({h});
        Mat k = kernel(constraint);
        LinSubspace hyper = LinSubspace::span_rows(k);
        auto cap = meet(surf.plane, hyper);
        if (!cap || cap->dim() != 1) continue; // plane inside the hyperplane: redraw
        ProjLine line(*cap);
        if (!membership(s, line))
            throw invariant_violation("line of the swept plane is off the section");
        deg11 = 1;
    }
    if (deg11 < 0) throw error("sigma_{1,1} count: persistent non-transversality");
    return {deg2, deg11};
}

TwoRowPartition surface_class_of_counts(int n_ambient, int deg_sigma2, int deg_sigma11) {
    // [S] = (S . sigma_2) dual(sigma_2) + (S . sigma_{1,1}) dual(sigma_{1,1});
    // the counts here are 0/1, so the class is a single basis partition
    TwoRowPartition d2 = dual(TwoRowPartition(2, 0, n_ambient));
    TwoRowPartition d11 = dual(TwoRowPartition(1, 1, n_ambient));
    if (deg_sigma2 == 1 && deg_sigma11 == 0) return d2;
    if (deg_sigma2 == 0 && deg_sigma11 == 1) return d11;
    throw invariant_violation("swept surface has an unexpected class");
}

Rat corollary_check(const SectionSpace& s, Rng& rng) {
    SectionPoint x = sample_orbit(s, OrbitLabel::O1, rng);
    Decomposition dec = decompose(s, x);
    SweptSurface surf = sweep_surface(s, x, dec);
    auto [d2, d11] = enumerative_class(s, surf, rng);
    TwoRowPartition cls = surface_class_of_counts(static_cast<int>(s.ambient_n()), d2, d11);
    Rat value = ch2_pair(static_cast<int>(s.ambient_n()), cls);
    if (value >= 0) throw invariant_violation("ch2 pairing is not negative");
    return value;
}

} // namespace grasslines
