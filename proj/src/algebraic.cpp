#include "tt/algebraic.hpp"

#include <algorithm>

namespace tt {

namespace {

using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    trim(c);
    return c;
}

Poly poly_scale(const Poly& a, const Rat& c) {
    if (c == 0) return {};
    Poly out = a;
    for (Rat& x : out) x *= c;
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_scale(b, Rat(-1))); }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

// a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.empty()) fail_domain("DivisionByZero", "polynomial division by zero");
    Poly r = a;
    trim(r);
    Poly q;
    long db = degree(b);
    while (degree(r) >= db) {
        long shift = degree(r) - db;
        Rat c = r.back() / b.back();
        if (static_cast<long>(q.size()) < shift + 1) q.resize(shift + 1, Rat(0));
        q[shift] += c;
        for (long i = 0; i <= db; ++i) r[i + shift] -= c * b[i];
        trim(r);
    }
    trim(q);
    return {q, r};
}

Poly poly_monic(Poly p) {
    trim(p);
    if (p.empty()) return p;
    Rat lead = p.back();
    for (Rat& c : p) c /= lead;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return d;
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

// u with u*b = gcd(a_gcd?)... extended Euclid: returns (g, u) with
// u*b ≡ g (mod a), g = gcd(a, b) monic.
std::pair<Poly, Poly> poly_half_ext_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    trim(r0);
    trim(r1);
    Poly u0 = {}, u1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly u2 = poly_sub(u0, poly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.empty()) fail_domain("DivisionByZero", "gcd of zero polynomials");
    Rat lead = r0.back();
    return {poly_monic(r0), poly_scale(u0, Rat(1) / lead)};
}

// Interval Horner over a rational interval.
struct RIv {
    Rat lo, hi;
};

RIv riv_mul(const RIv& a, const RIv& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}

RIv poly_eval_iv(const Poly& p, const Rat& lo, const Rat& hi) {
    RIv v{Rat(0), Rat(0)};
    RIv x{lo, hi};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        v = riv_mul(v, x);
        v.lo += *it;
        v.hi += *it;
    }
    return v;
}

} // namespace

AlgebraicField::AlgebraicField(std::vector<Int> poly, const Rat& lo, const Rat& hi) {
    Poly p;
    for (const Int& c : poly) p.emplace_back(c);
    trim(p);
    if (degree(p) < 1) fail_domain("BadPolynomial", "degree must be >= 1");
    // Squarefree part.
    Poly g = poly_gcd(p, poly_derivative(p));
    if (degree(g) >= 1) p = poly_divmod(p, g).first;
    p = poly_monic(p);
    int slo = sgn(poly_eval(p, lo));
    int shi = sgn(poly_eval(p, hi));
    if (slo == 0 || shi == 0 || slo == shi)
        fail_domain("NoRootInInterval", "no sign change across the isolating interval");
    p_ = std::move(p);
    lo_ = lo;
    hi_ = hi;
}

AlgebraicField::Elem AlgebraicField::from_rat(const Rat& c) const {
    if (c == 0) return {};
    return {c};
}

AlgebraicField::Elem AlgebraicField::gen() const {
    if (degree(p_) == 1) {
        // theta is rational: t = -c0/c1 with p monic means theta = -p_[0].
        return {-p_[0]};
    }
    return {Rat(0), Rat(1)};
}

AlgebraicField::Elem AlgebraicField::reduce(std::vector<Rat> v) const {
    trim(v);
    if (degree(v) >= degree(p_)) v = poly_divmod(v, p_).second;
    return v;
}

AlgebraicField::Elem AlgebraicField::add(const Elem& a, const Elem& b) const {
    return reduce(poly_add(a, b));
}

AlgebraicField::Elem AlgebraicField::sub(const Elem& a, const Elem& b) const {
    return reduce(poly_sub(a, b));
}

AlgebraicField::Elem AlgebraicField::neg(const Elem& a) const { return poly_scale(a, Rat(-1)); }

AlgebraicField::Elem AlgebraicField::mul(const Elem& a, const Elem& b) const {
    return reduce(poly_mul(a, b));
}

AlgebraicField::Elem AlgebraicField::mul_rat(const Elem& a, const Rat& c) const {
    return poly_scale(a, c);
}

AlgebraicField::Elem AlgebraicField::pow(const Elem& a, unsigned long e) const {
    Elem acc = {Rat(1)};
    Elem base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

void AlgebraicField::refine_interval() {
    Rat mid = (lo_ + hi_) / 2;
    int sm = sgn(poly_eval(p_, mid));
    if (sm == 0) {
        // theta is rational; collapse the modulus to the linear factor.
        shrink_modulus({-mid, Rat(1)});
        return;
    }
    if (sm == sgn(poly_eval(p_, lo_)))
        lo_ = mid;
    else
        hi_ = mid;
}

void AlgebraicField::shrink_modulus(const std::vector<Rat>& factor) {
    p_ = poly_monic(factor);
    // Keep an interval where the new modulus still changes sign.
    while (true) {
        int slo = sgn(poly_eval(p_, lo_));
        int shi = sgn(poly_eval(p_, hi_));
        if (slo != 0 && shi != 0 && slo != shi) return;
        if (degree(p_) == 1) {
            Rat root = -p_[0];
            Rat w = (hi_ - lo_) / 4;
            if (w == 0) w = Rat(1, 16);
            lo_ = root - w;
            hi_ = root + w;
            return;
        }
        fail_domain("NoRootInInterval", "modulus factor lost the isolating interval");
    }
}

int AlgebraicField::sign(const Elem& a) {
    Elem v = reduce(a);
    if (v.empty()) return 0;
    if (degree(v) == 0) return sgn(v[0]);
    Poly g = poly_gcd(v, p_);
    if (degree(g) >= 1) {
        int slo = sgn(poly_eval(g, lo_));
        int shi = sgn(poly_eval(g, hi_));
        if (slo == 0 || shi == 0 || slo != shi) {
            // theta is a root of g, hence of v.
            return 0;
        }
        // theta is a root of p/g only; shrink the modulus and re-reduce.
        shrink_modulus(poly_divmod(p_, g).first);
        return sign(reduce(v));
    }
    // v(theta) != 0: bisect theta until the enclosure decides.
    for (int it = 0; it < 100000; ++it) {
        RIv e = poly_eval_iv(v, lo_, hi_);
        if (e.lo > 0) return 1;
        if (e.hi < 0) return -1;
        refine_interval();
    }
    fail_precision("PrecisionExhausted", "sign determination did not converge");
}

bool AlgebraicField::is_zero(const Elem& a) { return sign(a) == 0; }

bool AlgebraicField::equal(const Elem& a, const Elem& b) { return sign(sub(a, b)) == 0; }

AlgebraicField::Elem AlgebraicField::inv(const Elem& b) {
    Elem v = reduce(b);
    if (sign(v) == 0) fail_domain("DivisionByZero", "inverse of zero field element");
    // After sign(), the modulus is coprime to v (any common factor at theta
    // would have made v zero; factors away from theta were divided out).
    while (true) {
        auto [g, u] = poly_half_ext_gcd(p_, v);
        if (degree(g) == 0) return reduce(u);
        // Residual common factor not vanishing at theta: drop it.
        shrink_modulus(poly_divmod(p_, g).first);
        v = reduce(v);
    }
}

AlgebraicField::Elem AlgebraicField::div(const Elem& a, const Elem& b) {
    return mul(a, inv(b));
}

Interval AlgebraicField::enclose_elem(const Elem& a, long prec) {
    Elem v = reduce(a);
    Rat eps = Rat(1);
    for (long i = 0; i < prec + 1; ++i) eps /= 2;
    for (int it = 0; it < 100000; ++it) {
        RIv e = poly_eval_iv(v, lo_, hi_);
        if (e.hi - e.lo <= eps) return make_interval(e.lo, e.hi, prec + 2);
        refine_interval();
        v = reduce(v);  // modulus may have shrunk
    }
    fail_precision("PrecisionExhausted", "enclosure did not converge");
}

Rat AlgebraicField::as_rational(const Elem& a) {
    Elem v = reduce(a);
    if (v.empty()) return Rat(0);
    if (degree(v) == 0) return v[0];
    if (sign(v) == 0) return Rat(0);
    v = reduce(v);
    if (degree(v) <= 0) return v.empty() ? Rat(0) : v[0];
    fail_domain("NotRational", "field element is irrational");
}

AlgebraicField field_of_root(const AlgebraicRoot& r) {
    if (r.lo == r.hi) {
        // Exact rational root: linear modulus t - r.lo.
        Rat root = r.lo;
        std::vector<Int> lin;  // build (t - root) scaled to integers
        Int den = root.get_den();
        lin = {Int(-root.get_num()), den};
        return AlgebraicField(lin, root - Rat(1, 2), root + Rat(1, 2));
    }
    return AlgebraicField(r.coeffs, r.lo, r.hi);
}

AlgebraicCF cf_digits_algebraic(AlgebraicField& f, AlgebraicField::Elem x, long count) {
    AlgebraicCF out;
    for (long i = 0; i < count; ++i) {
        int s = f.sign(x);
        if (s == 0) {
            out.terminated = true;
            out.remainder = f.from_rat(Rat(0));
            return out;
        }
        if (s < 0) fail_domain("BadCF", "negative value in continued fraction step");
        AlgebraicField::Elem inv = f.inv(x);
        // Candidate digit from a numeric enclosure, certified exactly.
        Interval e = f.enclose_elem(inv, 48);
        Rat mid = iv_mid(e);
        Int digit(mid.get_num() / mid.get_den());
        // Adjust to the true floor with sign tests.
        while (f.sign(f.sub(inv, f.from_rat(Rat(digit)))) < 0) digit -= 1;
        while (f.sign(f.sub(inv, f.from_rat(Rat(digit + 1)))) >= 0) digit += 1;
        if (digit < 1) fail_domain("BadCF", "value outside (0,1] in continued fraction step");
        out.digits.push_back(digit);
        x = f.sub(inv, f.from_rat(Rat(digit)));
    }
    out.remainder = x;
    return out;
}

} // namespace tt
