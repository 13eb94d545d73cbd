#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tt/exact_core.hpp"

namespace tt {

// Reduced fraction in [0,1].
struct Frac {
    Int p, q;
    bool operator==(const Frac&) const = default;
    Rat value() const { return make_rat(p, q); }
};

Frac make_frac(const Int& p, const Int& q);
Frac frac_of(const Rat& x);
bool frac_less(const Frac& a, const Frac& b);

// Continued fraction of a value in [0,1]: x = [a1,...,an] = 1/(a1+1/(a2+...)).
// 0 and 1 are the dedicated tokens [0] and [1]; digit lists always end with a
// digit > 1 (so single-digit lists have a1 >= 2).
struct CF {
    enum class Kind { zero, one, digits };
    Kind kind = Kind::zero;
    std::vector<Int> digits;
    bool operator==(const CF&) const = default;
};

CF cf_zero();
CF cf_one();
CF cf_digits(std::vector<Int> digits);

CF cf_expand(const Frac& x);
Frac cf_eval(const CF& cf);
// Value of a digit list that need not respect the trailing-digit convention.
Frac cf_eval_digits(const std::vector<Int>& digits);
// Rewrites [...,an,1] as [...,an+1]; identity on convention-respecting lists.
std::vector<Int> cf_normalize_digits(std::vector<Int> digits);
Int cf_digit_sum(const CF& cf);

Rat farey_map(const Rat& x);
Rat psi0(const Rat& x);
Rat psi1(const Rat& x);

// Stern-Brocot set F_n restricted to [0,1], ascending. n = -1 gives {0,1}.
std::vector<Frac> stern_brocot(long n);
// L_n = F_n \ F_{n-1}.
std::vector<Frac> farey_level(long n);

Int farey_rank(const Frac& x);

struct LRWord {
    enum class Tail { none, Linf, Rinf, block };
    std::string prefix;  // over {L,R}
    Tail tail = Tail::none;
    std::string block;  // repeating block when tail == block
    bool operator==(const LRWord&) const = default;
};

// Matrix of x per the Stern-Brocot walk: columns are the right and left
// parents; the mediant of the columns is x.
Mat2 farey_matrix(const Frac& x);
// The {L,R} walk from the root 1/2 to x.
LRWord farey_path(const Frac& x);
// The coding pi(x); rational values end in L^inf (n even) or R^inf (n odd).
LRWord farey_code(const CF& cf);
// (left, right) parents: x is their mediant and they are Farey neighbors.
std::pair<Frac, Frac> farey_parents(const Frac& x);

std::string format_frac(const Frac& x);
std::string format_cf(const CF& cf);
CF parse_cf(const std::string& s);
std::string format_lrword(const LRWord& w);

} // namespace tt
