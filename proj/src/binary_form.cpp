#include "grasslines/binary_form.hpp"

#include <algorithm>

namespace grasslines {

BinaryForm::BinaryForm(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw error("binary form needs at least one coefficient");
}

BinaryForm BinaryForm::zero(int degree) {
    if (degree < 0) throw error("negative degree");
    return BinaryForm(std::vector<Rat>(static_cast<size_t>(degree) + 1, Rat(0)));
}

bool BinaryForm::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (is_zero() && degree() != o.degree()) return o;
    if (o.is_zero() && degree() != o.degree()) return *this;
    if (degree() != o.degree()) throw error("form addition: degree mismatch");
    std::vector<Rat> c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return BinaryForm(c);
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    return *this + Rat(-1) * o;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    if (is_zero() || o.is_zero()) return zero(degree() + o.degree());
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return BinaryForm(c);
}

BinaryForm operator*(const Rat& c, const BinaryForm& f) {
    std::vector<Rat> v = f.c_;
    for (auto& x : v) x *= c;
    return BinaryForm(v);
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    if (is_zero() && o.is_zero()) return true;
    return c_ == o.c_;
}

Rat BinaryForm::eval(const Rat& r, const Rat& s) const {
    int d = degree();
    std::vector<Rat> rpow(c_.size()), spow(c_.size());
    rpow[0] = 1;
    spow[0] = 1;
    for (size_t i = 1; i < c_.size(); ++i) {
        rpow[i] = rpow[i - 1] * r;
        spow[i] = spow[i - 1] * s;
    }
    Rat acc = 0;
    for (size_t i = 0; i < c_.size(); ++i)
        acc += c_[i] * rpow[static_cast<size_t>(d) - i] * spow[i];
    return acc;
}

BinaryForm BinaryForm::d_r() const {
    int d = degree();
    if (d == 0) return zero(0);
    std::vector<Rat> c(static_cast<size_t>(d), Rat(0));
    for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = Rat(d - i) * c_[static_cast<size_t>(i)];
    return BinaryForm(c);
}

BinaryForm BinaryForm::d_s() const {
    int d = degree();
    if (d == 0) return zero(0);
    std::vector<Rat> c(static_cast<size_t>(d), Rat(0));
    for (int i = 1; i <= d; ++i) c[static_cast<size_t>(i - 1)] = Rat(i) * c_[static_cast<size_t>(i)];
    return BinaryForm(c);
}

BinaryForm BinaryForm::normalized() const {
    for (const auto& x : c_)
        if (x != 0) return (1 / x) * *this;
    return *this;
}

std::string BinaryForm::str(const char* vr, const char* vs) const {
    if (is_zero()) return "0";
    std::string out;
    int d = degree();
    for (int i = 0; i <= d; ++i) {
        const Rat& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Rat a = abs(c);
        int er = d - i, es = i;
        bool coeff1 = (a == 1) && (er + es > 0);
        if (!coeff1) out += rat_str(a);
        auto pow = [&](const char* v, int e) {
            if (e == 0) return std::string();
            std::string t = v;
            if (e > 1) t += "^" + std::to_string(e);
            return t;
        };
        std::string mon = pow(vr, er);
        std::string ms = pow(vs, es);
        if (!mon.empty() && !ms.empty()) mon += "*";
        mon += ms;
        if (!coeff1 && !mon.empty()) out += "*";
        out += mon;
    }
    return out;
}

namespace {

// valuation of s (index of first nonzero coeff) and of r (degree minus index
// of last nonzero coeff); only called on nonzero forms
int val_s(const BinaryForm& f) {
    for (int i = 0; i <= f.degree(); ++i)
        if (f.coeff(i) != 0) return i;
    throw error("val of zero form");
}

int val_r(const BinaryForm& f) {
    for (int i = f.degree(); i >= 0; --i)
        if (f.coeff(i) != 0) return f.degree() - i;
    throw error("val of zero form");
}

// strip r^vr s^vs; remaining "core" has nonzero first and last coefficient
BinaryForm core_of(const BinaryForm& f, int vr, int vs) {
    int d = f.degree() - vr - vs;
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<size_t>(i)] = f.coeff(i + vs);
    return BinaryForm(c);
}

// univariate polynomials as descending coefficient vectors (same layout as a
// form evaluated at s = 1)
using Poly = std::vector<Rat>;

Poly to_poly(const BinaryForm& f) { return f.coeffs(); }

BinaryForm from_poly(const Poly& p) { return BinaryForm(p); }

bool poly_zero(const Poly& p) {
    for (const auto& x : p)
        if (x != 0) return false;
    return true;
}

Poly poly_trim(Poly p) {
    size_t lead = 0;
    while (lead + 1 < p.size() && p[lead] == 0) ++lead;
    return Poly(p.begin() + static_cast<long>(lead), p.end());
}

// remainder of a by b (b nonzero), exact rational arithmetic
Poly poly_rem(Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!poly_zero(a) && a.size() >= b.size()) {
        Rat f = a[0] / b[0];
        for (size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
        a = poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!poly_zero(b)) {
        Poly r = poly_rem(a, b);
        a = b;
        b = poly_trim(r);
        if (poly_zero(b)) break;
    }
    a = poly_trim(a);
    Rat lead = a[0];
    for (auto& x : a) x /= lead;
    return a;
}

// exact division of polynomials; throws if not exact
Poly poly_div_exact(Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    if (poly_zero(a)) return Poly{Rat(0)};
    if (a.size() < b.size()) throw error("form division not exact");
    Poly q(a.size() - b.size() + 1, Rat(0));
    for (size_t k = 0; k + b.size() <= a.size(); ++k) {
        Rat f = a[k] / b[0];
        q[k] = f;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] -= f * b[i];
    }
    for (const auto& x : a)
        if (x != 0) throw error("form division not exact");
    return q;
}

std::vector<Int> divisors_of(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw error("divisors of zero");
    std::vector<std::pair<Int, int>> fac;
    Int m = n;
    auto push = [&](const Int& p) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) fac.emplace_back(p, e);
    };
    push(Int(2));
    Int p = 3;
    // trial division; coefficients here stay modest after content removal
    while (p * p <= m) {
        push(p);
        p += 2;
    }
    if (m > 1) fac.emplace_back(m, 1);
    std::vector<Int> divs{Int(1)};
    for (const auto& [q, e] : fac) {
        size_t base = divs.size();
        Int pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= q;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

} // namespace

BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() && g.is_zero()) return BinaryForm::zero(0);
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    int vr = std::min(val_r(f), val_r(g));
    int vs = std::min(val_s(f), val_s(g));
    Poly pf = to_poly(core_of(f, val_r(f), val_s(f)));
    Poly pg = to_poly(core_of(g, val_r(g), val_s(g)));
    Poly pgcd = poly_gcd(pf, pg);
    BinaryForm result = from_poly(pgcd);
    if (vs > 0) {
        std::vector<Rat> s_pow(static_cast<size_t>(vs) + 1, Rat(0));
        s_pow.back() = 1;
        result = result * BinaryForm(s_pow);
    }
    if (vr > 0) {
        std::vector<Rat> r_pow(static_cast<size_t>(vr) + 1, Rat(0));
        r_pow.front() = 1;
        result = result * BinaryForm(r_pow);
    }
    return result.normalized();
}

BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw error("division by zero form");
    if (f.is_zero()) return BinaryForm::zero(std::max(0, f.degree() - g.degree()));
    int fr = val_r(f), fs = val_s(f);
    int gr = val_r(g), gs = val_s(g);
    if (gr > fr || gs > fs) throw error("form division not exact");
    Poly q = poly_div_exact(to_poly(core_of(f, fr, fs)), to_poly(core_of(g, gr, gs)));
    BinaryForm result = from_poly(q);
    int dr = fr - gr, ds = fs - gs;
    if (ds > 0) {
        std::vector<Rat> s_pow(static_cast<size_t>(ds) + 1, Rat(0));
        s_pow.back() = 1;
        result = result * BinaryForm(s_pow);
    }
    if (dr > 0) {
        std::vector<Rat> r_pow(static_cast<size_t>(dr) + 1, Rat(0));
        r_pow.front() = 1;
        result = result * BinaryForm(r_pow);
    }
    return result;
}

int root_multiplicity(const BinaryForm& f, const Vec& param) {
    if (f.is_zero()) throw error("root multiplicity of zero form");
    if (param.size() != 2) throw error("projective parameter needs 2 coords");
    // linear form vanishing at (l : m) is m*r - l*s
    BinaryForm lin = BinaryForm::linear(param[1], -param[0]);
    BinaryForm cur = f;
    int mult = 0;
    while (!cur.is_zero() && cur.degree() >= 1 && cur.eval(param[0], param[1]) == 0) {
        cur = divide_exact(cur, lin);
        ++mult;
    }
    return mult;
}

FormRoots rational_roots(const BinaryForm& f) {
    if (f.is_zero()) throw error("rational_roots: zero form");
    FormRoots out;
    BinaryForm cur = f;
    int vs = val_s(cur);
    if (vs > 0) {
        out.roots.push_back({Vec{Rat(1), Rat(0)}, vs});
        for (int k = 0; k < vs; ++k) cur = divide_exact(cur, BinaryForm::linear(0, 1));
    }
    int vr = val_r(cur);
    if (vr > 0) {
        out.roots.push_back({Vec{Rat(0), Rat(1)}, vr});
        for (int k = 0; k < vr; ++k) cur = divide_exact(cur, BinaryForm::linear(1, 0));
    }
    if (cur.degree() >= 1) {
        // primitive integer coefficients of the core
        Vec prim = primitive(cur.coeffs());
        Int lead = prim.front().get_num();
        Int tail = prim.back().get_num();
        std::vector<Int> ps = divisors_of(tail); // candidate lambda (positive)
        std::vector<Int> qs = divisors_of(lead); // candidate |mu|
        for (const auto& lam : ps) {
            for (const auto& mu : qs) {
                Int g;
                mpz_gcd(g.get_mpz_t(), lam.get_mpz_t(), mu.get_mpz_t());
                if (g != 1) continue;
                for (int sign : {1, -1}) {
                    Vec cand{Rat(lam), Rat(sign * mu)};
                    if (cur.eval(cand[0], cand[1]) != 0) continue;
                    int m = root_multiplicity(cur, cand);
                    out.roots.push_back({cand, m});
                    BinaryForm lin = BinaryForm::linear(cand[1], -cand[0]);
                    for (int k = 0; k < m; ++k) cur = divide_exact(cur, lin);
                }
            }
            if (cur.degree() == 0) break;
        }
    }
    out.residual = cur.normalized();
    return out;
}

bool is_squarefree(const BinaryForm& f) {
    if (f.is_zero()) return false;
    if (f.degree() <= 1) return true;
    // char 0: a repeated factor is exactly a common factor of both partials
    return binary_gcd(f.d_r(), f.d_s()).degree() == 0;
}

namespace {

BinaryForm pf_form_rec(const std::vector<std::vector<BinaryForm>>& m, std::vector<size_t> idx) {
    size_t n = idx.size();
    if (n == 0) return BinaryForm::constant(1);
    int half = static_cast<int>(n) / 2;
    BinaryForm acc = BinaryForm::zero(half);
    size_t i0 = idx[0];
    for (size_t j = 1; j < n; ++j) {
        if (m[i0][idx[j]].is_zero()) continue;
        std::vector<size_t> rest;
        rest.reserve(n - 2);
        for (size_t k = 1; k < n; ++k)
            if (k != j) rest.push_back(idx[k]);
        BinaryForm term = m[i0][idx[j]] * pf_form_rec(m, rest);
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<std::vector<BinaryForm>> pencil_entries(const Mat& a, const Mat& b) {
    size_t n = a.rows();
    std::vector<std::vector<BinaryForm>> m(n, std::vector<BinaryForm>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = BinaryForm::linear(a.at(i, j), -b.at(i, j));
    return m;
}

} // namespace

BinaryForm pfaffian_form(const Mat& a, const Mat& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows() || b.rows() != b.cols() ||
        a.rows() % 2 != 0 || !a.is_antisymmetric() || !b.is_antisymmetric())
        throw error("pfaffian requires even antisymmetric");
    auto m = pencil_entries(a, b);
    std::vector<size_t> idx(a.rows());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return pf_form_rec(m, idx);
}

std::vector<BinaryForm> principal_subpfaffians(const Mat& a, const Mat& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows() || b.rows() != b.cols() ||
        a.rows() % 2 != 1 || !a.is_antisymmetric() || !b.is_antisymmetric())
        throw error("principal subpfaffians require odd antisymmetric pencil");
    auto m = pencil_entries(a, b);
    std::vector<BinaryForm> out;
    for (size_t drop = 0; drop < a.rows(); ++drop) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < a.rows(); ++i)
            if (i != drop) idx.push_back(i);
        out.push_back(pf_form_rec(m, idx));
    }
    return out;
}

} // namespace grasslines
