#pragma once

#include <string>
#include <vector>

#include "tt/algebraic.hpp"
#include "tt/exact_core.hpp"
#include "tt/farey1d.hpp"
#include "tt/verified_reals.hpp"

namespace tt {

// Expansion digits of the triangle map. `complete` distinguishes a finished
// expansion (the orbit reached the bottom side y = 0) from a truncation of an
// infinite one. Lambda points legitimately carry an empty complete sequence.
struct TriangleSeq {
    std::vector<Int> digits;
    bool complete = true;
    bool operator==(const TriangleSeq&) const = default;
};

std::string format_tseq(const TriangleSeq& ts);
TriangleSeq parse_tseq(const std::string& s);

// Where a point sits in the closed triangle 1 >= x >= y >= 0.
enum class PairKind { interior, sigma, lambda, upsilon, vertex };

PairKind classify(const Triple& t);

// k with 1 - x - ky >= 0 > 1 - x - (k+1)y; requires y > 0.
Int sector_index(const Triple& t);

// T(x,y) = (y/x, (1-x-ky)/x) on the sector k of t.
Triple triangle_map(const Triple& t);

// The slow map: (y/x, (1-x)/x) when x + y > 1, else (x/(1-y), y/(1-y)).
Triple slow_map(const Triple& t);
// 0 for the x+y > 1 branch, 1 otherwise.
int slow_branch(const Triple& t);

// Inverse branches, extended continuously to the whole closed triangle.
Triple phi0(const Triple& t);  // (x,y) -> (1/(1+y), x/(1+y))
Triple phi1(const Triple& t);  // (x,y) -> (x/(1+y), y/(1+y))
// Projection of a diagonal point (x,x) to (x,0); NotOnSigma otherwise.
Triple phi2(const Triple& t);

// Composition phi_{w0} o phi_{w1} o ... applied to t (rightmost symbol acts
// first). Symbols '0','1','2'.
Triple phi_word(const std::string& w, const Triple& t);

struct RationalExpansion {
    TriangleSeq seq;
    Frac xi;
    PairKind kind;
};

// Full expansion of a rational pair; always terminates. xi is the parameter
// of the final bottom-side point for interior points, and the boundary
// parameter itself for boundary points.
RationalExpansion triangle_sequence_rational(const Triple& t);

struct RealExpansion {
    TriangleSeq seq;
    IntervalPair remainder;  // enclosure of the orbit point after the digits
};

// Certified expansion of a possibly irrational pair. Digits are proved by
// exact sign tests when the coordinates live in one algebraic field, and by
// restart-at-doubled-precision interval arithmetic otherwise.
RealExpansion triangle_sequence_real(const RealPair& p, long max_digits,
                                     int budget = kRefineBudget);

// X_{-3} .. X_k for the digit prefix (alpha_0 .. alpha_k), with seeds
// (0,0,1), (1,0,0), (1,1,0) and X_k = X_{k-3} + X_{k-1} + alpha_k X_{k-2}.
std::vector<Vec3> vertex_recurrence(const std::vector<Int>& digits);

// Vertices of the nested triangle of the prefix: the projections of
// X_{k-1}, X_k and X_{k-2} + X_k. Needs a non-empty prefix.
std::array<Triple, 3> nested_triangle(const std::vector<Int>& digits);

// lambda_k = (q_{k-2} + q_k)/q_{k+1} for k = 0 .. len-2.
std::vector<Rat> lambda_seq(const std::vector<Int>& digits);

struct ConvergenceDiagnostics {
    std::vector<Rat> lambdas;
    // Partial products of (1 - lambda_j) for j >= product_start, where
    // product_start skips past the last zero digit (those factors vanish).
    long product_start = 0;
    std::vector<Rat> partial_products;
    // sq_dist of consecutive projected vertices, one entry per k >= 0.
    std::vector<Rat> vertex_gaps;
};

ConvergenceDiagnostics convergence_diagnostics(const std::vector<Int>& digits);

} // namespace tt
