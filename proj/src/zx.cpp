#include "grasslines/zx.hpp"

#include <algorithm>

#include <json.hpp>

#include "grasslines/grassmann.hpp"

namespace grasslines {

namespace {

ComplementFrame frame_from_lift(const ProjLine& l, Mat lift) {
    size_t n1 = l.ambient_dim() + 1;
    Mat basis = lift.stacked(l.space().basis()); // (N+1) x (N+1)
    if (rank(basis) != n1) throw error("frame lift does not complement the line");
    Mat binv = inverse(basis);
    // project(v) = first N-1 coefficients of v against [lift; W]
    Mat to_coords(n1, n1 - 2);
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j + 2 < n1; ++j) to_coords.at(i, j) = binv.at(i, j);
    return ComplementFrame{l.space(), std::move(lift), std::move(to_coords)};
}

} // namespace

ComplementFrame make_frame(const ProjLine& l) {
    auto piv = rref(l.space().basis()).pivots;
    size_t n1 = l.ambient_dim() + 1;
    std::vector<size_t> complement;
    size_t pi = 0;
    for (size_t j = 0; j < n1; ++j) {
        if (pi < piv.size() && piv[pi] == j)
            ++pi;
        else
            complement.push_back(j);
    }
    Mat lift(complement.size(), n1);
    for (size_t i = 0; i < complement.size(); ++i) lift.at(i, complement[i]) = 1;
    return frame_from_lift(l, lift);
}

ComplementFrame make_frame_custom(const ProjLine& l, const Mat& lift) {
    if (lift.rows() != l.ambient_dim() - 1 || lift.cols() != l.ambient_dim() + 1)
        throw error("custom frame lift has wrong shape");
    return frame_from_lift(l, lift);
}

BuiltSystem build_system_in_frame(const SectionSpace& s, const SectionPoint& x,
                                  const ComplementFrame& frame) {
    if (!membership(s, x.line))
        throw non_member("build_system requires a member line",
                         rat_str(hyperplane_pairing(x.line, s.pencil().A)),
                         rat_str(hyperplane_pairing(x.line, s.pencil().B)));
    Vec p = x.line.basis_p(), q = x.line.basis_q();
    auto restrict_to = [&](const Vec& functional) { return mat_vec(frame.lift, functional); };
    Mat m1 = Mat::from_rows(
        {restrict_to(vec_mat(p, s.pencil().A)), restrict_to(vec_mat(p, s.pencil().B))});
    Mat m2 = Mat::from_rows(
        {restrict_to(vec_mat(q, s.pencil().A)), restrict_to(vec_mat(q, s.pencil().B))});
    return BuiltSystem{frame, PencilSystem{m1, m2}};
}

BuiltSystem build_system(const SectionSpace& s, const SectionPoint& x) {
    return build_system_in_frame(s, x, make_frame(x.line));
}

Vec eval_system(const PencilSystem& sys, const Rat& r, const Rat& s, const Vec& t) {
    Mat spec = r * sys.M1 + s * sys.M2;
    return mat_vec(spec, t);
}

std::vector<BinaryForm> system_minors(const PencilSystem& sys) {
    size_t cols = sys.M1.cols();
    auto entry = [&](size_t i, size_t j) {
        return BinaryForm::linear(sys.M1.at(i, j), sys.M2.at(i, j));
    };
    std::vector<BinaryForm> minors;
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = i + 1; j < cols; ++j)
            minors.push_back(entry(0, i) * entry(1, j) - entry(0, j) * entry(1, i));
    return minors;
}

std::vector<ZxComponent> vertical_components(const PencilSystem& sys) {
    BinaryForm g = BinaryForm::zero(0);
    for (const auto& m : system_minors(sys)) g = binary_gcd(g, m);
    std::vector<ZxComponent> out;
    if (g.is_zero())
        throw invariant_violation("all system minors vanish identically");
    if (g.degree() == 0) return out;
    FormRoots roots = rational_roots(g);
    for (const auto& [param, mult] : roots.roots) {
        Mat spec = param[0] * sys.M1 + param[1] * sys.M2;
        if (rank(spec) != 1)
            throw invariant_violation("vertical fiber does not have corank 1");
        ZxComponent c{ComponentKind::vertical, {1, 0}, mult, 1,
                      param,  kernel(spec),          std::nullopt,
                      std::nullopt, std::nullopt};
        out.push_back(std::move(c));
    }
    if (roots.residual.degree() > 0) {
        if (!is_squarefree(roots.residual))
            throw invariant_violation("repeated irrational vertical factor");
        ZxComponent c{ComponentKind::vertical, {1, 0}, 1, roots.residual.degree(),
                      std::nullopt, std::nullopt, roots.residual,
                      std::nullopt, std::nullopt};
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ZxComponent> horizontal_components(const PencilSystem& sys) {
    Mat stack = sys.M1.stacked(sys.M2);
    std::vector<ZxComponent> out;
    if (rank(stack) != 2) return out; // kernel too small (or degenerate); no pullback cycle
    Mat k = kernel(stack);
    // kernel rows = (N-1) - 2 = N-3, i.e. P(kernel) has the fiber-cycle
    // dimension N-4 exactly
    ZxComponent c{ComponentKind::horizontal, {0, 1}, 1, 1,
                  std::nullopt, k, std::nullopt, std::nullopt, std::nullopt};
    out.push_back(std::move(c));
    return out;
}

SymQuadForm elimination_quadric(const PencilSystem& sys) {
    if (sys.M1.cols() != 4) throw error("elimination quadric: even sections only");
    Vec f1 = sys.M1.row(0), f2 = sys.M1.row(1);
    Vec g1 = sys.M2.row(0), g2 = sys.M2.row(1);
    size_t n = f1.size();
    Mat q(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat v = f1[i] * g2[j] + f1[j] * g2[i] - g1[i] * f2[j] - g1[j] * f2[i];
            q.at(i, j) = v / 2;
        }
    return make_quad_form(q);
}

std::array<int, 2> total_class_of(const std::vector<ZxComponent>& comps) {
    std::array<int, 2> total{0, 0};
    for (const auto& c : comps) {
        total[0] += c.count * c.multiplicity * c.cls[0];
        total[1] += c.count * c.multiplicity * c.cls[1];
    }
    return total;
}

namespace {

// residual class (d, 1) for the 2x3 case via the reduced Cramer kernel map
ZxComponent residual_odd(const PencilSystem& sys, const std::vector<ZxComponent>& found) {
    auto entry = [&](size_t i, size_t j) {
        return BinaryForm::linear(sys.M1.at(i, j), sys.M2.at(i, j));
    };
    // kernel of [[a b c],[d e f]] = (bf - ce, cd - af, ae - bd)
    std::vector<BinaryForm> k(3);
    k[0] = entry(0, 1) * entry(1, 2) - entry(0, 2) * entry(1, 1);
    k[1] = entry(0, 2) * entry(1, 0) - entry(0, 0) * entry(1, 2);
    k[2] = entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0);
    BinaryForm g = BinaryForm::zero(0);
    for (const auto& f : k) g = binary_gcd(g, f);
    if (g.is_zero()) throw invariant_violation("kernel map vanishes identically");
    std::vector<BinaryForm> reduced(3);
    for (size_t i = 0; i < 3; ++i) reduced[i] = divide_exact(k[i], g);
    int d = 2 - g.degree();
    if (d <= 0) throw invariant_violation("residual parametrization is constant");
    // conservation cross-check against the components already found
    auto sofar = total_class_of(found);
    if (sofar[1] != 0 || sofar[0] + d != 2)
        throw invariant_violation("odd residual class does not close the total");
    ZxComponent c{ComponentKind::residual, {d, 1}, 1, 1,
                  std::nullopt, std::nullopt, std::nullopt, reduced, std::nullopt};
    return c;
}

// exact count of residual points over a random line in the frame space
int residual_fiber_count(const PencilSystem& sys, const std::vector<ZxComponent>& found,
                         Rng& rng) {
    size_t n = sys.M1.cols();
    for (int attempt = 0; attempt < 10; ++attempt) {
        Vec a = rng.vec(n, kDefaultCoordBound, true);
        Vec b = rng.vec(n, kDefaultCoordBound, true);
        if (rank(Mat::from_rows({a, b})) != 2) continue;
        auto lin = [&](const Mat& m, size_t row) {
            return BinaryForm::linear(dot(m.row(row), a), dot(m.row(row), b));
        };
        // eliminate (r, s) from the two equations restricted to the line
        BinaryForm dform = lin(sys.M1, 0) * lin(sys.M2, 1) - lin(sys.M2, 0) * lin(sys.M1, 1);
        if (dform.is_zero()) continue;
        BinaryForm rem = dform;
        bool ok = true;
        for (const auto& c : found) {
            if (c.kind != ComponentKind::vertical) continue;
            if (!c.param) { ok = false; break; } // symbolic vertical: draw again
            // covector of the vertical plane: row space of the specialized system
            Mat spec = (*c.param)[0] * sys.M1 + (*c.param)[1] * sys.M2;
            Vec kap = rref(spec).mat.row(0);
            Rat ka = dot(kap, a), kb = dot(kap, b);
            if (ka == 0 && kb == 0) { ok = false; break; } // line inside the plane
            Vec star = primitive(Vec{-kb, ka}); // parameter of line cap plane
            int mult_in_d = root_multiplicity(rem, star);
            if (mult_in_d != c.multiplicity) { ok = false; break; } // non-transverse draw
            BinaryForm linstar = BinaryForm::linear(star[1], -star[0]);
            for (int t = 0; t < c.multiplicity; ++t) rem = divide_exact(rem, linstar);
        }
        if (!ok) continue;
        return rem.degree();
    }
    throw invariant_violation("residual fiber count: no transverse line found");
}

// exact count of residual points in a generic fiber against a hyperplane
int residual_pull_count(const PencilSystem& sys, const std::vector<ZxComponent>& found,
                        Rng& rng) {
    size_t n = sys.M1.cols();
    for (int attempt = 0; attempt < 10; ++attempt) {
        Rat r0 = rng.rat_int(kDefaultCoordBound), s0 = rng.rat_int(kDefaultCoordBound);
        if (r0 == 0 && s0 == 0) continue;
        bool on_vertical = false;
        for (const auto& c : found)
            if (c.kind == ComponentKind::vertical && c.param &&
                (*c.param)[0] * s0 == (*c.param)[1] * r0)
                on_vertical = true;
        if (on_vertical) continue;
        Mat spec = r0 * sys.M1 + s0 * sys.M2;
        if (rank(spec) != 2) continue;
        Mat k = kernel(spec); // the fiber is the projectivized kernel
        if (k.rows() != n - 2) continue;
        Vec h = rng.vec(n, kDefaultCoordBound, true);
        // restrict the hyperplane to the fiber line
        Vec coeffs(k.rows());
        bool all_zero = true;
        for (size_t i = 0; i < k.rows(); ++i) {
            coeffs[i] = dot(k.row(i), h);
            if (coeffs[i] != 0) all_zero = false;
        }
        if (all_zero) continue; // fiber inside the hyperplane
        return 1;               // one reduced intersection point
    }
    throw invariant_violation("residual pull count: no transverse fiber found");
}

ZxComponent residual_even(const PencilSystem& sys, const std::vector<ZxComponent>& found,
                          Rng& rng) {
    for (const auto& c : found)
        if (c.kind == ComponentKind::horizontal)
            throw invariant_violation("residual with a horizontal component present");
    int cp = residual_fiber_count(sys, found, rng);
    int cl = residual_pull_count(sys, found, rng);
    auto sofar = total_class_of(found);
    if (sofar[0] + cp != 2 || sofar[1] + cl != 1)
        throw invariant_violation("even residual class does not close the total");
    ZxComponent c{ComponentKind::residual, {cp, cl}, 1, 1,
                  std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                  elimination_quadric(sys)};
    return c;
}

} // namespace

std::optional<ZxComponent> residual_component(const PencilSystem& sys,
                                              const std::vector<ZxComponent>& found,
                                              Rng& rng) {
    auto total = total_class_of(found);
    if (total[0] == 2 && total[1] == 1) return std::nullopt;
    if (sys.M1.cols() == 3) return residual_odd(sys, found);
    return residual_even(sys, found, rng);
}

namespace {

// a point of the surface Z_x away from the verticals: random fiber, random
// kernel point; returns ((r, s), t)
struct SurfacePoint {
    Rat r, s;
    Vec t;
};

std::optional<SurfacePoint> sample_surface_point(const PencilSystem& sys, Rng& rng) {
    for (int tries = 0; tries < 32; ++tries) {
        Rat r0 = rng.rat_int(kDefaultCoordBound), s0 = rng.rat_int(kDefaultCoordBound);
        if (r0 == 0 && s0 == 0) continue;
        Mat spec = r0 * sys.M1 + s0 * sys.M2;
        if (rank(spec) != 2) continue;
        Mat k = kernel(spec);
        Vec c = rng.vec(k.rows(), kDefaultCoordBound, true);
        Vec t = vec_mat(c, k);
        if (is_zero_vec(t)) continue;
        return SurfacePoint{r0, s0, t};
    }
    return std::nullopt;
}

// rank of the Jacobian of the two bilinear equations at ((r, s), t)
size_t jacobian_rank(const PencilSystem& sys, const Rat& r, const Rat& s, const Vec& t) {
    size_t n = sys.M1.cols();
    Mat jac(2, 2 + n);
    Vec m1t = mat_vec(sys.M1, t), m2t = mat_vec(sys.M2, t);
    Mat spec = r * sys.M1 + s * sys.M2;
    for (size_t i = 0; i < 2; ++i) {
        jac.at(i, 0) = m1t[i];
        jac.at(i, 1) = m2t[i];
        for (size_t j = 0; j < n; ++j) jac.at(i, 2 + j) = spec.at(i, j);
    }
    return rank(jac);
}

// fiber of the second projection over t: corank of [M1 t | M2 t]
size_t fiber_corank(const PencilSystem& sys, const Vec& t) {
    Vec m1t = mat_vec(sys.M1, t), m2t = mat_vec(sys.M2, t);
    Mat m(2, 2);
    m.at(0, 0) = m1t[0];
    m.at(1, 0) = m1t[1];
    m.at(0, 1) = m2t[0];
    m.at(1, 1) = m2t[1];
    return 2 - rank(m);
}

std::string even_signature(const ZxReport& report, const PencilSystem& sys, OrbitLabel label,
                           Rng& rng) {
    if (label == OrbitLabel::O3) {
        if (report.quadric_rank != 3)
            throw invariant_violation("o3 elimination quadric rank is not 3");
        const Vec& v = *report.vertex;
        if (!is_zero_vec(mat_vec(sys.M1, v)) || !is_zero_vec(mat_vec(sys.M2, v)))
            throw invariant_violation("vertex fiber is not the whole parameter line");
        int checked = 0;
        while (checked < 50) {
            auto pt = sample_surface_point(sys, rng);
            if (!pt) throw invariant_violation("could not sample the o3 surface");
            Vec tp = primitive(pt->t);
            if (tp == *report.vertex) continue;
            if (fiber_corank(sys, tp) != 1)
                throw invariant_violation("non-vertex fiber is not a single reduced point");
            if (jacobian_rank(sys, pt->r, pt->s, pt->t) != 2)
                throw invariant_violation("surface is singular at a sampled point");
            ++checked;
        }
        return "quadric-cone-blowup-F2";
    }
    if (label == OrbitLabel::O4) {
        if (report.quadric_rank != 4)
            throw invariant_violation("o4 elimination quadric rank is not 4");
        for (int checked = 0; checked < 50; ++checked) {
            auto pt = sample_surface_point(sys, rng);
            if (!pt) throw invariant_violation("could not sample the o4 surface");
            if (fiber_corank(sys, primitive(pt->t)) != 1)
                throw invariant_violation("projection to the quadric is not bijective");
            if (jacobian_rank(sys, pt->r, pt->s, pt->t) != 2)
                throw invariant_violation("surface is singular at a sampled point");
        }
        return "smooth-quadric";
    }
    return "";
}

std::string odd_signature(const ZxReport& report, const PencilSystem& sys, OrbitLabel label,
                          Rng& rng) {
    if (label != OrbitLabel::O4) return "";
    if (report.components.size() != 1 ||
        report.components[0].kind != ComponentKind::residual ||
        report.components[0].cls != std::array<int, 2>{2, 1})
        throw invariant_violation("o4 curve is not a single (2,1) component");
    const auto& pm = *report.components[0].param_map;
    for (int checked = 0; checked < 50; ++checked) {
        Rat r0 = rng.rat_int(kDefaultCoordBound), s0 = rng.rat_int(kDefaultCoordBound);
        if (r0 == 0 && s0 == 0) { --checked; continue; }
        Vec t(pm.size());
        for (size_t i = 0; i < pm.size(); ++i) t[i] = pm[i].eval(r0, s0);
        if (is_zero_vec(t))
            throw invariant_violation("parametrization vanished at a parameter");
        if (!is_zero_vec(eval_system(sys, r0, s0, t)))
            throw invariant_violation("parametrization leaves the curve");
        if (jacobian_rank(sys, r0, s0, t) != 2)
            throw invariant_violation("curve is singular at a sampled point");
    }
    // degree-2 image of P^1: the genus-0 certificate
    return "rational-curve-P1";
}

} // namespace

Decomposition decompose_in_frame(const SectionSpace& s, const SectionPoint& x,
                                 const ComplementFrame& frame, uint64_t seed) {
    SectionPoint pt = make_section_point(s, x.line);
    OrbitLabel label = classify_orbit(s, pt);
    BuiltSystem built = build_system_in_frame(s, pt, frame);
    Rng rng(seed);

    ZxReport report;
    report.orbit = label;
    report.components = vertical_components(built.sys);
    for (auto& c : horizontal_components(built.sys)) report.components.push_back(c);
    if (auto res = residual_component(built.sys, report.components, rng))
        report.components.push_back(*res);
    report.total_class = total_class_of(report.components);
    if (report.total_class != std::array<int, 2>{2, 1})
        throw invariant_violation("total class is not 2,1");

    if (s.parity() == Parity::even_section) {
        SymQuadForm q = elimination_quadric(built.sys);
        QuadRank qr = quad_rank_and_vertex(q);
        report.quadric_rank = qr.rank;
        if (qr.rank == 3 && qr.kernel.rows() == 1) report.vertex = qr.kernel.row(0);
        report.signature = even_signature(report, built.sys, label, rng);
    } else {
        report.signature = odd_signature(report, built.sys, label, rng);
    }
    return Decomposition{built.frame, built.sys, report};
}

Decomposition decompose(const SectionSpace& s, const SectionPoint& x, uint64_t seed) {
    return decompose_in_frame(s, x, make_frame(x.line), seed);
}

std::string component_kind_str(ComponentKind k) {
    switch (k) {
        case ComponentKind::vertical: return "vertical";
        case ComponentKind::horizontal: return "horizontal";
        case ComponentKind::residual: return "residual";
    }
    throw error("unreachable");
}

namespace {

nlohmann::ordered_json vec_json(const Vec& v) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& x : v) j.push_back(rat_str(x));
    return j;
}

nlohmann::ordered_json mat_json(const Mat& m) {
    auto j = nlohmann::ordered_json::array();
    for (size_t i = 0; i < m.rows(); ++i) j.push_back(vec_json(m.row(i)));
    return j;
}

} // namespace

std::string zx_report_json_text(const Decomposition& d) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["orbit"] = orbit_str(d.report.orbit);
    ordered_json comps = ordered_json::array();
    for (const auto& c : d.report.components) {
        ordered_json cj;
        cj["kind"] = component_kind_str(c.kind);
        cj["class"] = {c.cls[0], c.cls[1]};
        cj["multiplicity"] = c.multiplicity;
        cj["count"] = c.count;
        ordered_json support;
        if (c.param) support["param"] = vec_json(*c.param);
        if (c.support) support["kernel"] = mat_json(*c.support);
        if (c.factor) support["factor"] = c.factor->str();
        if (c.param_map) {
            auto pm = ordered_json::array();
            for (const auto& f : *c.param_map) pm.push_back(f.str());
            support["parametrization"] = pm;
        }
        if (c.quadric) support["quadric"] = mat_json(c.quadric->m);
        cj["support"] = support;
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["total_class"] = {d.report.total_class[0], d.report.total_class[1]};
    j["signature"] = d.report.signature;
    if (d.report.quadric_rank > 0) j["quadric_rank"] = d.report.quadric_rank;
    if (d.report.vertex) j["vertex"] = vec_json(*d.report.vertex);
    return j.dump(2) + "\n";
}

} // namespace grasslines
