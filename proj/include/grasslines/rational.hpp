#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "grasslines/errors.hpp"

namespace grasslines {

// All arithmetic is exact. Rat is always stored reduced with positive
// denominator (gmp canonical form).
using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

inline Rat rat(long n, long d = 1) {
    Rat x(n, d);
    x.canonicalize();
    return x;
}

// Accepts "p", "-p", "p/q" with integer p, q; q > 0 after reduction.
Rat rat_parse(const std::string& s);

// "p/q", or "p" when the denominator is 1. Inverse of rat_parse.
std::string rat_str(const Rat& x);

std::string vec_str(const Vec& v);

bool is_zero_vec(const Vec& v);
Rat dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);

// Canonical representative of a projective/scale-free vector: coprime integer
// entries, first nonzero entry positive. Errors on the zero vector.
Vec primitive(const Vec& v);

// True iff x = y^2 for rational y; if so and out != nullptr, *out = y >= 0.
bool rat_is_square(const Rat& x, Rat* out = nullptr);

} // namespace grasslines
