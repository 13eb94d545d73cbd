#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

#include "tt/errors.hpp"

namespace tt {

using Int = mpz_class;
using Rat = mpq_class;

// Reduced rational num/den with den > 0.
Rat make_rat(const Int& num, const Int& den);

// Plain integer 3-vector (q,p,r), no canonicity. Used by mediants and the
// vertex recurrence, where sums must stay unreduced.
struct Vec3 {
    Int q, p, r;
    bool operator==(const Vec3&) const = default;
};

// Canonical triple for the rational pair (p/q, r/q) in the closed triangle
// 1 >= x >= y >= 0: invariants q >= 1, q >= p >= r >= 0, gcd(q,p,r) = 1.
struct Triple {
    Int q, p, r;
    bool operator==(const Triple&) const = default;
    Rat x() const { return make_rat(p, q); }
    Rat y() const { return make_rat(r, q); }
    Vec3 vec() const { return {q, p, r}; }
};

// Deterministic ordering by pair value (x, then y).
bool triple_less(const Triple& a, const Triple& b);

// Componentwise sum; never reduced here.
Vec3 mediant(const Triple& a, const Triple& b);
Vec3 mediant(const Vec3& a, const Vec3& b);

// y + s*x componentwise (the iterated mediant Y (+)_s X).
Vec3 mediant_iter(const Triple& y, const Triple& x, unsigned long s);

// Divide by gcd and check triangle membership.
Triple canonicalize(const Vec3& v);

struct Mat3 {
    // Row-major entries a[3*i + j].
    std::array<Int, 9> a{};
    Int& at(int i, int j) { return a[3 * i + j]; }
    const Int& at(int i, int j) const { return a[3 * i + j]; }
    Vec3 col(int j) const { return {at(0, j), at(1, j), at(2, j)}; }
    static Mat3 identity();
    static Mat3 from_rows(std::array<std::array<long, 3>, 3> rows);
    bool operator==(const Mat3&) const = default;
};

Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Vec3 mat3_vec(const Mat3& a, const Vec3& v);
Int mat3_det(const Mat3& a);
Mat3 mat3_pow(const Mat3& a, unsigned long e);

struct Mat2 {
    std::array<Int, 4> a{};
    Int& at(int i, int j) { return a[2 * i + j]; }
    const Int& at(int i, int j) const { return a[2 * i + j]; }
    static Mat2 identity();
    bool operator==(const Mat2&) const = default;
};

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Int mat2_det(const Mat2& a);

// Exact squared Euclidean distance between the two rational pairs.
Rat sq_dist(const Triple& a, const Triple& b);

// Text form "p/q,r/q" with the shared denominator repeated.
std::string format_triple(const Triple& t);

// Parses "p/q,r/q". Without reduce, rejects non-canonical input.
Triple parse_triple(const std::string& s, bool reduce = false);

Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

} // namespace tt
