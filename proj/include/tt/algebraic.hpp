#pragma once

#include <vector>

#include "tt/verified_reals.hpp"

namespace tt {

// Arithmetic in Q[t]/(P) where P is squarefree with a distinguished simple
// real root theta inside an isolating interval. P may be reducible; division
// discovers factors lazily and either reports an exact zero or shrinks the
// modulus to the factor that still vanishes at theta.
class AlgebraicField {
public:
    // Coefficients of P from degree 0 upward; [lo, hi] isolates theta via a
    // sign change. The squarefree part of P is taken automatically.
    AlgebraicField(std::vector<Int> poly, const Rat& lo, const Rat& hi);

    // Elements are residues: coefficient lists of degree < deg(modulus).
    using Elem = std::vector<Rat>;

    Elem from_rat(const Rat& c) const;
    Elem gen() const;  // the class of t, i.e. theta

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_rat(const Elem& a, const Rat& c) const;
    // Errors with DivisionByZero if b(theta) = 0.
    Elem div(const Elem& a, const Elem& b);
    Elem inv(const Elem& b);
    Elem pow(const Elem& a, unsigned long e) const;

    // Exact sign of a(theta); certifies zeros through factor extraction.
    int sign(const Elem& a);
    bool is_zero(const Elem& a);
    bool equal(const Elem& a, const Elem& b);

    // Dyadic enclosure of a(theta) with width <= 2^-prec.
    Interval enclose_elem(const Elem& a, long prec);

    // Exact rational value when a(theta) is rational (degree-0 residue after
    // sign-certified reduction); errors with NotRational otherwise.
    Rat as_rational(const Elem& a);

    const std::vector<Rat>& modulus() const { return p_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    void refine_interval();

private:
    Elem reduce(std::vector<Rat> v) const;
    // Replaces the modulus by the given monic divisor that keeps theta.
    void shrink_modulus(const std::vector<Rat>& factor);

    std::vector<Rat> p_;  // monic squarefree modulus
    Rat lo_, hi_;
};

// Field generated by the root described by an AlgebraicRoot scalar; the
// element gen() evaluates to that root.
AlgebraicField field_of_root(const AlgebraicRoot& r);

// Continued-fraction digits of x = a(theta), required to lie in (0,1]. Each
// digit is certified by exact sign tests in the field. Stops early when the
// remainder hits zero (rational tail), reported by `terminated`.
struct AlgebraicCF {
    std::vector<Int> digits;
    bool terminated = false;
    AlgebraicField::Elem remainder;  // value after the emitted digits
};

AlgebraicCF cf_digits_algebraic(AlgebraicField& f, AlgebraicField::Elem x, long count);

} // namespace tt
