#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tt/coding.hpp"

namespace tt {

// Pull-based digit source, index 0 upward.
using DigitFn = std::function<Int(long)>;

DigitFn digits_fixed(std::vector<Int> digits);  // errors past the end
DigitFn digits_periodic(std::vector<Int> head, std::vector<Int> period);

// Continued-fraction tail of a finite-triangle-sequence target: an explicit
// head plus an optional repeating period, or an arbitrary pull source.
struct CFTail {
    std::vector<Int> head;
    std::vector<Int> period;
    DigitFn source;  // overrides head/period when set
};

// Rational pair classes by triangle sequence: finite, infinite convergent,
// infinite non-convergent (a point on the limit segment must be supplied),
// and the fixed-point family with constant digit d.
struct FiniteTS {
    std::vector<Int> tseq;  // last digit > 0
    CFTail cf;
    std::optional<RealScalar> xi;  // value of the bottom-side remainder
};

struct ConvergentTS {
    DigitFn digits;
};

struct NonConvergent {
    DigitFn digits;  // optional cross-check; the orbit of `point` is authoritative
    RealPair point;
};

struct PeriodicD {
    Int d;
    Triple seed{Int(2), Int(1), Int(0)};
};

using ApproximationTarget = std::variant<FiniteTS, ConvergentTS, NonConvergent, PeriodicD>;

// Lazy approximation word; prefix(j) yields the first j moves (fewer when
// the whole word is finite and shorter than j).
struct LazyWord {
    std::function<std::string(long)> prefix;
};

// Word of a FiniteTS or ConvergentTS target; other targets are rejected.
LazyWord approximation_word(const ApproximationTarget& target);

struct Approximant {
    std::string word;
    Triple triple;
    Representation rep;
};

// Rows j = 0..j_max: walk of the length-j word prefix plus its grammar
// representation.
std::vector<Approximant> approximants(const ApproximationTarget& target, long j_max);

struct NonconvergentRow {
    Representation rep;
    Triple triple;
    Interval err_x, err_y;  // certified |target - row| per coordinate
};

// Square truncation scheme: row j pairs the digit prefix of length j+1 with
// the max(j,1)-digit convergent of the j-th orbit remainder.
std::vector<NonconvergentRow> approximants_nonconvergent(const NonConvergent& target,
                                                         long j_max,
                                                         long prec = kDefaultPrecision);

// Matrix representations of the inverse branches phi0 and phi1.
std::pair<Mat3, Mat3> m0_m1();
// Product matrix of a branch word over {0,1}, leftmost symbol outermost.
Mat3 branch_matrix(const std::string& omega);
// rho*q + sigma*p + tau*r for the first row (rho, sigma, tau) of m: the
// unreduced denominator of the image of t.
Int denominator_of_image(const Mat3& m, const Triple& t);

struct ErrorRow {
    long k;
    Int s, m, n;  // unreduced image components (denominator, numerators)
    Interval err_alpha, err_beta, product;  // product = s^eta * |err_a| * |err_b|
};

// Speed rows for the pair phi_omega(xi, 0) with xi irrational, approximated
// through the convergents of xi pushed through the branch-word matrix.
std::vector<ErrorRow> finite_ts_speed(const std::string& omega, const RealScalar& xi,
                                      long j_max, const Rat& eta,
                                      long prec = kDefaultPrecision);

// Roots of t^3 + dt^2 + t - 1 (alpha in (0,1), alpha1 < alpha2 < 0) and
// their reciprocals, the eigenvalues of the period matrix.
struct SpectralData {
    Int d;
    RealScalar alpha, alpha1, alpha2;
    RealScalar lambda1, lambda2, lambda3;
    Interval h;  // sqrt((d + alpha)^2 - 4/alpha)
};

SpectralData spectral(long d, long prec = kDefaultPrecision);

// (s_k, m_k, n_k) = M_d^k applied to the seed, canonicalized; k = 0..k_max.
std::vector<Triple> periodic_approximants(long d, long k_max,
                                          const Triple& seed = Triple{Int(2), Int(1), Int(0)});

// Eigen-decomposition error model for the periodic pair: the two-eigenvalue
// numerator over the three-eigenvalue denominator, with the overall constant
// calibrated against the exact difference at k = 1.
class CubicErrorModel {
public:
    CubicErrorModel(long d, const Triple& seed, long prec = kDefaultPrecision);

    // Signed predicted differences (alpha - m_k/s_k, beta - n_k/s_k).
    std::pair<Interval, Interval> predict(long k) const;
    // Enclosures of the exact differences from the integer iteration.
    std::pair<Interval, Interval> exact(long k) const;

    const SpectralData& spectral_data() const { return sp_; }
    // Linear factors of the numerator coefficients at the seed.
    const Interval& f1() const { return f1_; }
    const Interval& f2() const { return f2_; }
    const Interval& g3() const { return g3_; }

private:
    long prec_;
    Int d_;
    Triple seed_;
    SpectralData sp_;
    Mat3 md_;
    Interval a_, b_, h_, l1_, l2_, l3_;
    Interval f1_, f2_, g1_, g2_, g3_, c_;
};

std::pair<Interval, Interval> cubic_error_predicted(long d, long k, const Triple& seed,
                                                    long prec = kDefaultPrecision);

// Largest exponent eta with guaranteed decay: exactly 4 for d = 3, the
// enclosure of 2(1 - log|lambda1|/log lambda3) for d >= 4.
Interval exponent_bound(long d, long prec = kDefaultPrecision);

// Certified rows of s^eta * |alpha - m/s| * |beta - n/s| for a PeriodicD
// target or a FiniteTS target with a numeric remainder.
std::vector<ErrorRow> speed_table(const ApproximationTarget& target, const Rat& eta,
                                  long k_max, long prec = kDefaultPrecision);

} // namespace tt
