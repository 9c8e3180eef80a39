#include "grasslines/rational.hpp"

namespace grasslines {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw error("empty rational literal");
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [](const std::string& t, bool sign_ok) {
        if (t.empty()) return false;
        size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits(num, true) || !digits(den, true))
        throw error("bad rational literal: '" + s + "'");
    Int n(num), d(den);
    if (d == 0) throw error("zero denominator in '" + s + "'");
    Rat x(n, d);
    x.canonicalize();
    return x;
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string vec_str(const Vec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    return out + ")";
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("vec_add: size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("vec_sub: size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Vec primitive(const Vec& v) {
    if (is_zero_vec(v)) throw error("primitive: zero vector");
    Int l = 1;
    for (const auto& x : v) {
        Int d = x.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    Int g = 0;
    std::vector<Int> ints(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    int sign = 0;
    for (const auto& x : ints) {
        if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    }
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] * sign / g);
    return out;
}

bool rat_is_square(const Rat& x, Rat* out) {
    if (x < 0) return false;
    Int n = x.get_num(), d = x.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    if (out) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        *out = Rat(rn, rd);
    }
    return true;
}

} // namespace grasslines
