#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tt/exact_core.hpp"

namespace tt {

// Fixed working precision used by callers that do not pick their own.
inline constexpr long kDefaultPrecision = 256;
// Refinement loops give up after this many precision doublings.
inline constexpr int kRefineBudget = 64;

// mantissa * 2^exponent, mantissa odd or zero.
struct Dyadic {
    Int m;
    long e = 0;
    bool operator==(const Dyadic&) const = default;
};

Dyadic dyadic_normalize(Int m, long e);
Rat dyadic_value(const Dyadic& d);
// Nearest grid point at spacing 2^-prec, rounded down / up.
Dyadic dyadic_floor(const Rat& x, long prec);
Dyadic dyadic_ceil(const Rat& x, long prec);

struct Interval {
    Dyadic lo, hi;
    bool operator==(const Interval&) const = default;
};

// Outward-rounded enclosure of [lo, hi] on the 2^-prec grid.
Interval make_interval(const Rat& lo, const Rat& hi, long prec);
Interval interval_point(const Rat& x, long prec);
Rat iv_lo(const Interval& a);
Rat iv_hi(const Interval& a);
Rat iv_width(const Interval& a);
Rat iv_mid(const Interval& a);
bool iv_contains(const Interval& a, const Rat& x);

Interval iv_add(const Interval& a, const Interval& b, long prec);
Interval iv_sub(const Interval& a, const Interval& b, long prec);
Interval iv_mul(const Interval& a, const Interval& b, long prec);
// Requires 0 outside b; otherwise DivisionByZeroPossible.
Interval iv_div(const Interval& a, const Interval& b, long prec);
Interval iv_neg(const Interval& a);
Interval iv_abs(const Interval& a);

enum class Cmp { Less, Greater, Uncertain };
Cmp iv_cmp(const Interval& a, const Interval& b);
Cmp iv_cmp(const Interval& a, const Rat& x);

// Natural log; requires a.lo > 0.
Interval iv_log(const Interval& a, long prec);
// k-th root; requires a.lo >= 0 and k >= 1.
Interval iv_root(const Interval& a, unsigned long k, long prec);
// Integer power, n may be negative (then 0 must lie outside a).
Interval iv_pow(const Interval& a, long n, long prec);

// A real number given exactly, as a decimal reading with declared accuracy,
// or as the unique root of an integer polynomial inside an isolating interval.
struct Decimal {
    std::string text;
    long guard_bits = 0;
    Rat value;
    bool operator==(const Decimal&) const = default;
};

struct AlgebraicRoot {
    std::vector<Int> coeffs;  // degree 0 upward
    Rat lo, hi;               // sign change across [lo, hi], exactly one root
    bool operator==(const AlgebraicRoot&) const = default;
};

struct RealScalar {
    std::variant<Rat, Decimal, AlgebraicRoot> rep;
    bool operator==(const RealScalar&) const = default;
};

RealScalar scalar_rational(const Rat& v);
RealScalar scalar_decimal(const std::string& text, long guard_bits);
// Verifies the sign change at construction.
RealScalar scalar_algebraic(std::vector<Int> coeffs, const Rat& lo, const Rat& hi);

// Sign of sum coeffs[i] * x^i.
int poly_sign(const std::vector<Int>& coeffs, const Rat& x);

Interval enclose(const RealScalar& s, long precision_bits);
// One sign-preserving bisection step for algebraic roots; rationals pass
// through unchanged; decimals cannot be refined.
RealScalar refine(const RealScalar& s);

struct RealPair {
    RealScalar x, y;
    bool y_is_x_squared = false;
};

// (α, α²) with α the largest root of t³ + dt² + t − 1, which lies in (0,1).
RealPair fixed_point(const Int& d);

struct IntervalPair {
    Interval x, y;
};

// Scalar input syntax: "p/q", "0.414:128" (value:guard-bits), or
// "poly:c0,c1,...;iv:lo,hi" with coefficients listed from degree 0 upward.
RealScalar parse_scalar(const std::string& s);
std::string format_scalar(const RealScalar& s);
// Decimal rendering of the enclosure midpoint to the given digit count,
// with the enclosure itself as "[lo, hi]".
std::string format_interval(const Interval& a, int digits);
// Decimal string of x truncated toward zero at `digits` fractional digits.
std::string decimal_string(const Rat& x, int digits);

} // namespace tt
