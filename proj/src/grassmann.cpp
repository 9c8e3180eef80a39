#include "grasslines/grassmann.hpp"

namespace grasslines {

Vec plucker(const ProjLine& l) {
    Vec p = l.basis_p(), q = l.basis_q();
    size_t n1 = p.size();
    Vec out;
    out.reserve(n1 * (n1 - 1) / 2);
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = i + 1; j < n1; ++j) out.push_back(p[i] * q[j] - p[j] * q[i]);
    return primitive(out);
}

bool plucker_relations_ok(const Vec& coords, size_t ambient_n) {
    size_t n1 = ambient_n + 1;
    if (coords.size() != n1 * (n1 - 1) / 2) throw error("plucker size mismatch");
    auto idx = [n1](size_t i, size_t j) {
        // offset of (i, j), i < j, lexicographic
        return i * n1 - i * (i + 1) / 2 + (j - i - 1);
    };
    auto get = [&](size_t i, size_t j) -> Rat {
        if (i == j) return Rat(0);
        return i < j ? coords[idx(i, j)] : -coords[idx(j, i)];
    };
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = i + 1; j < n1; ++j)
            for (size_t k = j + 1; k < n1; ++k)
                for (size_t l = k + 1; l < n1; ++l) {
                    Rat rel = get(i, j) * get(k, l) - get(i, k) * get(j, l) + get(i, l) * get(j, k);
                    if (rel != 0) return false;
                }
    return true;
}

Rat hyperplane_pairing(const ProjLine& l, const Mat& m) {
    if (!m.is_antisymmetric()) throw error("pairing requires antisymmetric matrix");
    if (m.rows() != l.ambient_dim() + 1) throw error("pairing: size mismatch");
    return bilinear(l.basis_p(), m, l.basis_q());
}

TwoRowPartition::TwoRowPartition(int a_, int b_, int n_) : a(a_), b(b_), ambient_n(n_) {
    if (!(n_ - 1 >= a && a >= b && b >= 0)) throw error("invalid two-row partition");
}

std::string TwoRowPartition::str() const {
    return "sigma_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

TwoRowPartition dual(const TwoRowPartition& s) {
    return TwoRowPartition(s.ambient_n - 1 - s.b, s.ambient_n - 1 - s.a, s.ambient_n);
}

std::vector<TwoRowPartition> pieri_row(int p, const TwoRowPartition& s) {
    // all (c, d) with c + d = a + b + p and N-1 >= c >= a >= d >= b
    std::vector<TwoRowPartition> out;
    int target = s.a + s.b + p;
    for (int c = s.a; c <= s.ambient_n - 1; ++c) {
        int d = target - c;
        if (d < s.b || d > s.a || d > c) continue;
        out.emplace_back(c, d, s.ambient_n);
    }
    return out;
}

std::vector<TwoRowPartition> pieri_column11(const TwoRowPartition& s) {
    std::vector<TwoRowPartition> out;
    if (s.a + 1 <= s.ambient_n - 1) out.emplace_back(s.a + 1, s.b + 1, s.ambient_n);
    return out;
}

std::vector<TwoRowPartition> pieri_special(const TwoRowPartition& s, SpecialClass sp) {
    switch (sp) {
        case SpecialClass::sigma1: return pieri_row(1, s);
        case SpecialClass::sigma2: return pieri_row(2, s);
        case SpecialClass::sigma11: return pieri_column11(s);
    }
    throw error("unreachable");
}

int pairing_degree(const TwoRowPartition& s, const TwoRowPartition& t) {
    if (s.ambient_n != t.ambient_n) throw error("pairing: ambient mismatch");
    if (s.codim() + t.codim() != 2 * (s.ambient_n - 1))
        throw error("pairing requires complementary codimension");
    return t == dual(s) ? 1 : 0;
}

Ch2Class ch2_class(int ambient_n) {
    Rat k(ambient_n - 3, 2);
    k.canonicalize();
    return Ch2Class{k, -k, ambient_n};
}

namespace {

// degree (= coefficient of the point class) of sigma_sp . s when the product
// has full codimension
int special_times_degree(const TwoRowPartition& s, SpecialClass sp) {
    int full = 2 * (s.ambient_n - 1);
    int count = 0;
    for (const auto& t : pieri_special(s, sp)) {
        if (t.codim() != full) throw error("degree: codim mismatch");
        if (t.a == s.ambient_n - 1 && t.b == s.ambient_n - 1) ++count;
    }
    return count;
}

} // namespace

Rat ch2_pair(int ambient_n, const TwoRowPartition& surface_class) {
    if (surface_class.ambient_n != ambient_n) throw error("ch2_pair: ambient mismatch");
    if (surface_class.codim() != 2 * (ambient_n - 1) - 2)
        throw error("ch2_pair: class must have surface codimension");
    Ch2Class ch = ch2_class(ambient_n);
    int d2 = special_times_degree(surface_class, SpecialClass::sigma2);
    int d11 = special_times_degree(surface_class, SpecialClass::sigma11);
    return ch.c_sigma2 * d2 + ch.c_sigma11 * d11;
}

} // namespace grasslines
